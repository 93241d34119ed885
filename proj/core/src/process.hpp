#pragma once

#include <sys/types.h>

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace smtgi::detail {

// A child process whose stdin and stdout are one end of a socket pair, so
// writes never raise SIGPIPE and reads and writes can be multiplexed.
class ChildProcess {
 public:
  using Clock = std::chrono::steady_clock;

  // Throws SolverError when the executable cannot be launched.
  explicit ChildProcess(const std::vector<std::string>& argv);
  ~ChildProcess();
  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  // Sends `request` and returns the next complete response: one atom or one
  // balanced parenthesized expression. Returns false on timeout, leaving the
  // process killed. Throws SolverError when the child closes its output.
  bool exchange(std::string_view request, Clock::time_point deadline, std::string& response);

  void kill();
  bool alive() const noexcept { return pid_ > 0; }
  // Recent bytes exchanged, for error messages.
  std::string transcript() const;

 private:
  bool extract_response(std::string& response);
  void reap(std::chrono::milliseconds grace);

  pid_t pid_ = -1;
  int fd_ = -1;
  std::string inbox_;
  std::string log_;
};

}  // namespace smtgi::detail
