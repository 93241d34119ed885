#include "smtgi/oracle.hpp"

#include "smtgi/error.hpp"

namespace smtgi {

namespace {

// Writes `value` into slot, or reports a clash with what is already there.
bool require(std::vector<int>& slots, std::size_t i, int value) {
  if (slots[i] < 0) {
    slots[i] = value;
    return true;
  }
  return slots[i] == value;
}

// Labels forced by the sample under a fixed table; nullopt if contradictory.
// DFA and Moore label states, Mealy labels transitions.
std::optional<std::vector<int>> forced_labels(const Sample& sample, const std::vector<State>& table,
                                              std::size_t n, std::size_t sigma) {
  auto next = [&](State q, Symbol a) { return table[static_cast<std::size_t>(q) * sigma + static_cast<std::size_t>(a)]; };
  if (const auto* dfa = std::get_if<DfaSample>(&sample)) {
    std::vector<int> labels(n, -1);
    for (const auto* set : {&dfa->positives(), &dfa->negatives()}) {
      const int label = set == &dfa->positives() ? 1 : 0;
      for (const auto& word : *set) {
        State q = 0;
        for (Symbol a : word) q = next(q, a);
        if (!require(labels, static_cast<std::size_t>(q), label)) return std::nullopt;
      }
    }
    return labels;
  }
  const auto& traces = std::get<TraceSample>(sample);
  const bool moore = traces.kind() == MachineKind::Moore;
  std::vector<int> labels(moore ? n : n * sigma, -1);
  for (const auto& [input, output] : traces.traces()) {
    State q = 0;
    if (moore && !require(labels, 0, output[0])) return std::nullopt;
    for (std::size_t i = 0; i < input.size(); ++i) {
      const Symbol a = input[i];
      const State to = next(q, a);
      const bool ok = moore ? require(labels, static_cast<std::size_t>(to), output[i + 1])
                            : require(labels, static_cast<std::size_t>(q) * sigma + static_cast<std::size_t>(a), output[i]);
      if (!ok) return std::nullopt;
      q = to;
    }
  }
  return labels;
}

Machine assemble(const Sample& sample, std::vector<State> table, std::size_t n, const std::vector<int>& labels) {
  if (const auto* dfa = std::get_if<DfaSample>(&sample)) {
    std::vector<bool> accepting(n);
    for (std::size_t q = 0; q < n; ++q) accepting[q] = labels[q] == 1;
    return Dfa(TransitionTable(dfa->alphabet(), n, std::move(table)), std::move(accepting));
  }
  const auto& traces = std::get<TraceSample>(sample);
  std::vector<Symbol> outs(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) outs[i] = labels[i] < 0 ? 0 : labels[i];
  TransitionTable transitions(traces.input_alphabet(), n, std::move(table));
  if (traces.kind() == MachineKind::Moore) return MooreMachine(std::move(transitions), traces.output_alphabet(), std::move(outs));
  return MealyMachine(std::move(transitions), traces.output_alphabet(), std::move(outs));
}

}  // namespace

std::optional<OracleResult> brute_force_minimal(const Sample& sample, MachineKind kind, const OracleBudget& budget) {
  if (kind_of(sample) != kind) throw InputError("sample kind does not match the requested machine kind");
  if (budget.max_n < 1 || budget.max_machines < 1) throw InputError("oracle budget must be positive");
  const std::size_t sigma = std::holds_alternative<DfaSample>(sample)
                                ? std::get<DfaSample>(sample).alphabet().size()
                                : std::get<TraceSample>(sample).input_alphabet().size();
  if (sigma == 0) throw InputError("empty input alphabet");

  std::uint64_t examined = 0;
  for (std::size_t n = 1; n <= budget.max_n; ++n) {
    // Odometer over all n^(n * sigma) tables.
    std::vector<State> table(n * sigma, 0);
    for (;;) {
      if (++examined > budget.max_machines) {
        throw BudgetExceeded("brute force examined more than " + std::to_string(budget.max_machines) +
                             " transition tables");
      }
      if (auto labels = forced_labels(sample, table, n, sigma)) {
        return OracleResult{assemble(sample, table, n, *labels), n};
      }
      std::size_t digit = 0;
      while (digit < table.size() && ++table[digit] == static_cast<State>(n)) table[digit++] = 0;
      if (digit == table.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace smtgi
