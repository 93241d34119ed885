#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smtgi/automata.hpp"
#include "smtgi/formula.hpp"

namespace smtgi {

namespace detail {
class ChildProcess;
}

struct SolverConfig {
  // Executable plus arguments; the process must read SMT-LIB2 on stdin and
  // answer on stdout (e.g. {"z3", "-in", "-smt2"}).
  std::vector<std::string> command;
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};
  std::optional<std::string> logic_override;

  // Splits on whitespace; no quoting.
  static SolverConfig from_command_line(std::string_view command_line);
  // $SMT_SOLVER_CMD, if set and non-empty.
  static std::optional<SolverConfig> from_environment();
};

enum class VerdictStatus { Sat, Unsat, Unknown };
std::string_view to_string(VerdictStatus status) noexcept;

struct Verdict;
Verdict check(const Formula& formula, const SolverConfig& config);

// A value read back from a model.
struct ModelValue {
  bool is_bool = false;
  std::int64_t integer = 0;
  bool boolean = false;
};

// Owns the solver session that produced a satisfiable verdict and answers
// get-value queries against it. Not thread-safe.
class Model {
 public:
  ~Model();
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  // One get-value round trip for all terms. Throws SolverError on a protocol
  // violation or when the session has died.
  std::vector<ModelValue> eval(std::span<const Term> terms);
  ModelValue eval(const Term& term);

 private:
  friend Verdict check(const Formula&, const SolverConfig&);
  Model(std::unique_ptr<detail::ChildProcess> process, std::chrono::milliseconds timeout);

  std::unique_ptr<detail::ChildProcess> process_;
  std::chrono::milliseconds timeout_;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::shared_ptr<Model> model;  // set iff Sat
  std::string reason;            // for Unknown: "timeout" or the solver's reason
};

// Runs one fresh solver process on the formula. Throws SolverError when the
// process cannot be launched or answers something other than
// sat/unsat/unknown.
Verdict check(const Formula& formula, const SolverConfig& config);

// Reads delta and out over the grid [0, n) x inputs. Transition targets
// outside [0, n) become state 0 (nothing on a sampled path can be out of
// range); likewise out-of-range outputs become output 0.
Machine decode_machine(Model& model, MachineKind kind, std::size_t n, const Alphabet& inputs,
                       const Alphabet& outputs = Alphabet{});

}  // namespace smtgi
