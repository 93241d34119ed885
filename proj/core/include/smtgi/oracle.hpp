#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "smtgi/automata.hpp"
#include "smtgi/samples.hpp"

namespace smtgi {

struct OracleBudget {
  std::size_t max_n = 4;
  std::uint64_t max_machines = 50'000'000;
};

struct OracleResult {
  Machine machine;
  std::size_t minimal_n = 0;
};

// Exhaustive search for the smallest consistent machine: every transition
// table over n = 1, 2, ... states (initial state 0) is tried in order, and
// the outputs each table forces on its reached states decide whether some
// labeling makes it consistent. Returns nullopt when no machine with at most
// budget.max_n states fits; throws BudgetExceeded once more than
// budget.max_machines tables have been examined. Independent of the SMT
// path on purpose.
std::optional<OracleResult> brute_force_minimal(const Sample& sample, MachineKind kind, const OracleBudget& budget);

}  // namespace smtgi
