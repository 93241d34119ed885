#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smtgi/automata.hpp"
#include "smtgi/encoding.hpp"
#include "smtgi/error.hpp"
#include "smtgi/samples.hpp"
#include "smtgi/solver.hpp"

namespace smtgi {

struct LearnOptions {
  Encoding encoding = Encoding::Expressive;  // Natural is DFA-only
  AxiomStyle style = AxiomStyle::BooleanDisjunction;
  MachineKind kind = MachineKind::Dfa;
  std::size_t start_n = 1;
  std::optional<std::size_t> max_n;
  SolverConfig solver;
  // Called with every formula before it is solved (e.g. to dump scripts).
  std::function<void(std::size_t n, const Formula&)> on_formula;
};

// One solver call of the search.
struct SizeAttempt {
  std::size_t n = 0;
  VerdictStatus verdict = VerdictStatus::Unknown;
  std::chrono::duration<double> wall{};
  std::size_t assertions = 0;
  std::string reason;  // Unknown only
};

struct SizeResult {
  SizeAttempt attempt;
  std::optional<Machine> machine;  // iff Sat
};

struct LearnResult {
  Machine machine;
  std::size_t minimal_n = 0;
  std::vector<SizeAttempt> stats;
};

// The search gave up; stats cover every size tried.
class SearchAborted : public Error {
 public:
  SearchAborted(const std::string& what, std::vector<SizeAttempt> stats)
      : Error(what), stats_(std::move(stats)) {}
  const std::vector<SizeAttempt>& stats() const noexcept { return stats_; }

 private:
  std::vector<SizeAttempt> stats_;
};

class BoundExceeded : public SearchAborted {
 public:
  using SearchAborted::SearchAborted;
};

// A size returned unknown or timed out, so minimality can no longer be
// established.
class UnknownVerdict : public SearchAborted {
 public:
  using SearchAborted::SearchAborted;
};

// Builds the formula for `sample` at bound n according to the options.
// Throws InputError on kind/encoding mismatches.
Formula encode(const Sample& sample, std::size_t n, const LearnOptions& options);

// Sat: a decoded n-state machine that is consistent with the sample.
// Unsat: no consistent machine with at most n states exists.
SizeResult learn_at_size(const Sample& sample, std::size_t n, const LearnOptions& options);

// Tries n = start_n, start_n + 1, ... until the first Sat. Throws
// BoundExceeded past max_n and UnknownVerdict on an unknown answer.
LearnResult learn_minimal(const Sample& sample, const LearnOptions& options);

// "n,verdict,time_ms,assertions" plus one row per attempt.
std::string stats_csv(const std::vector<SizeAttempt>& stats);

}  // namespace smtgi
