#include "process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <cstring>
#include <thread>

#include "smtgi/error.hpp"

extern char** environ;

namespace smtgi::detail {

namespace {

constexpr std::size_t kTranscriptLimit = 4096;

std::string errno_text(int err) { return std::strerror(err); }

}  // namespace

ChildProcess::ChildProcess(const std::vector<std::string>& argv) {
  if (argv.empty()) throw SolverError("empty solver command");
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw SolverError("socketpair failed: " + errno_text(errno));
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, "/dev/null", O_WRONLY, 0);

  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  pid_t pid = -1;
  const int rc = ::posix_spawnp(&pid, args[0], &actions, nullptr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(fds[1]);
  if (rc != 0) {
    ::close(fds[0]);
    throw SolverError("cannot launch solver '" + argv[0] + "': " + errno_text(rc));
  }
  pid_ = pid;
  fd_ = fds[0];
  ::fcntl(fd_, F_SETFL, ::fcntl(fd_, F_GETFL) | O_NONBLOCK);
}

ChildProcess::~ChildProcess() {
  if (pid_ > 0) {
    static constexpr std::string_view kExit = "(exit)\n";
    ::send(fd_, kExit.data(), kExit.size(), MSG_NOSIGNAL);
    ::shutdown(fd_, SHUT_WR);
    reap(std::chrono::milliseconds(500));
  }
  if (fd_ >= 0) ::close(fd_);
}

void ChildProcess::kill() {
  if (pid_ <= 0) return;
  ::kill(pid_, SIGKILL);
  ::waitpid(pid_, nullptr, 0);
  pid_ = -1;
}

void ChildProcess::reap(std::chrono::milliseconds grace) {
  const auto until = Clock::now() + grace;
  while (Clock::now() < until) {
    pid_t r = ::waitpid(pid_, nullptr, WNOHANG);
    if (r == pid_ || (r < 0 && errno != EINTR)) {
      pid_ = -1;
      return;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  kill();
}

std::string ChildProcess::transcript() const {
  return log_.size() <= kTranscriptLimit ? log_ : "..." + log_.substr(log_.size() - kTranscriptLimit);
}

bool ChildProcess::extract_response(std::string& response) {
  std::size_t pos = 0;
  while (pos < inbox_.size() && std::isspace(static_cast<unsigned char>(inbox_[pos]))) ++pos;
  if (pos == inbox_.size()) return false;
  std::size_t end = pos;
  if (inbox_[pos] == '(') {
    int depth = 0;
    bool in_string = false;
    for (; end < inbox_.size(); ++end) {
      const char c = inbox_[end];
      if (in_string) {
        if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '(') {
        ++depth;
      } else if (c == ')' && --depth == 0) {
        ++end;
        break;
      }
    }
    if (depth != 0) return false;
  } else {
    while (end < inbox_.size() && !std::isspace(static_cast<unsigned char>(inbox_[end]))) ++end;
    // An atom is complete only once a delimiter follows it.
    if (end == inbox_.size()) return false;
  }
  response = inbox_.substr(pos, end - pos);
  inbox_.erase(0, end);
  return true;
}

bool ChildProcess::exchange(std::string_view request, Clock::time_point deadline, std::string& response) {
  if (pid_ <= 0) throw SolverError("solver process is not running");
  log_.append(request);
  std::size_t sent = 0;
  char buffer[8192];
  for (;;) {
    if (sent == request.size() && extract_response(response)) {
      log_ += response;
      log_ += '\n';
      if (log_.size() > 4 * kTranscriptLimit) log_.erase(0, log_.size() - kTranscriptLimit);
      return true;
    }
    const auto now = Clock::now();
    if (now >= deadline) {
      kill();
      return false;
    }
    pollfd pfd{fd_, static_cast<short>(POLLIN | (sent < request.size() ? POLLOUT : 0)), 0};
    const auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
    const int ready = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(wait + 1, 1000)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw SolverError("poll failed: " + errno_text(errno));
    }
    if (ready == 0) continue;
    if (pfd.revents & POLLIN) {
      const ssize_t got = ::recv(fd_, buffer, sizeof buffer, 0);
      if (got > 0) {
        inbox_.append(buffer, static_cast<std::size_t>(got));
      } else if (got == 0) {
        // Deliver a trailing atom that lacked its newline before giving up.
        if (sent == request.size() && !inbox_.empty()) {
          inbox_ += '\n';
          continue;
        }
        const auto log = transcript() + inbox_;
        reap(std::chrono::milliseconds(100));
        throw SolverError("solver closed its output unexpectedly; transcript:\n" + log);
      } else if (errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR) {
        throw SolverError("reading from solver failed: " + errno_text(errno));
      }
    } else if (pfd.revents & (POLLHUP | POLLERR)) {
      if (!(pfd.revents & POLLOUT) || sent == request.size()) {
        const auto log = transcript() + inbox_;
        reap(std::chrono::milliseconds(100));
        throw SolverError("solver terminated; transcript:\n" + log);
      }
    }
    if (sent < request.size() && (pfd.revents & POLLOUT)) {
      const ssize_t put = ::send(fd_, request.data() + sent, request.size() - sent, MSG_NOSIGNAL);
      if (put > 0) {
        sent += static_cast<std::size_t>(put);
      } else if (put < 0 && errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR) {
        const auto log = transcript() + inbox_;
        reap(std::chrono::milliseconds(100));
        throw SolverError("writing to solver failed (" + errno_text(errno) + "); transcript:\n" + log);
      }
    }
  }
}

}  // namespace smtgi::detail
