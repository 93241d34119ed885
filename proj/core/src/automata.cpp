#include "smtgi/automata.hpp"

#include <algorithm>
#include <deque>

#include "smtgi/error.hpp"

namespace smtgi {

TransitionTable::TransitionTable(Alphabet inputs, std::size_t n, std::vector<State> next)
    : inputs_(std::move(inputs)), n_(n), next_(std::move(next)) {
  if (n_ == 0) throw InputError("a machine needs at least one state");
  if (inputs_.empty()) throw InputError("input alphabet is empty");
  if (next_.size() != n_ * inputs_.size()) {
    throw InputError("transition table has " + std::to_string(next_.size()) + " entries, expected " +
                     std::to_string(n_ * inputs_.size()));
  }
  for (std::size_t i = 0; i < next_.size(); ++i) {
    if (next_[i] < 0 || static_cast<std::size_t>(next_[i]) >= n_) {
      throw InputError("transition from state " + std::to_string(i / inputs_.size()) + " on '" +
                       inputs_.name(static_cast<Symbol>(i % inputs_.size())) + "' targets state " +
                       std::to_string(next_[i]) + " outside [0, " + std::to_string(n_) + ")");
    }
  }
}

State TransitionTable::run(WordView word, State from) const {
  check_symbols(word, inputs_.size());
  State q = from;
  for (Symbol a : word) q = next(q, a);
  return q;
}

Dfa::Dfa(TransitionTable transitions, std::vector<bool> accepting)
    : transitions_(std::move(transitions)), accepting_(std::move(accepting)) {
  if (accepting_.size() != transitions_.size()) {
    throw InputError("acceptance vector size does not match the state count");
  }
}

MooreMachine::MooreMachine(TransitionTable transitions, Alphabet outputs, std::vector<Symbol> state_outputs)
    : transitions_(std::move(transitions)), outputs_(std::move(outputs)), state_outputs_(std::move(state_outputs)) {
  if (state_outputs_.size() != transitions_.size()) {
    throw InputError("moore machine needs one output per state");
  }
  check_symbols(state_outputs_, outputs_.size(), "output symbol");
}

MealyMachine::MealyMachine(TransitionTable transitions, Alphabet outputs, std::vector<Symbol> transition_outputs)
    : transitions_(std::move(transitions)), outputs_(std::move(outputs)), outputs_table_(std::move(transition_outputs)) {
  if (outputs_table_.size() != transitions_.table().size()) {
    throw InputError("mealy machine needs one output per transition");
  }
  check_symbols(outputs_table_, outputs_.size(), "output symbol");
}

MachineKind kind_of(const Machine& machine) noexcept {
  switch (machine.index()) {
    case 0: return MachineKind::Dfa;
    case 1: return MachineKind::Moore;
    default: return MachineKind::Mealy;
  }
}

std::size_t size_of(const Machine& machine) noexcept {
  return std::visit([](const auto& m) { return m.size(); }, machine);
}

const Alphabet& input_alphabet(const Machine& machine) noexcept {
  return std::visit([](const auto& m) -> const Alphabet& { return m.transitions().inputs(); }, machine);
}

bool accepts(const Dfa& dfa, WordView word) { return dfa.accepting(dfa.transitions().run(word)); }

Word transduce(const MooreMachine& machine, WordView word) {
  check_symbols(word, machine.input_alphabet().size());
  Word out;
  out.reserve(word.size() + 1);
  State q = 0;
  out.push_back(machine.output(q));
  for (Symbol a : word) {
    q = machine.next(q, a);
    out.push_back(machine.output(q));
  }
  return out;
}

Word transduce(const MealyMachine& machine, WordView word) {
  check_symbols(word, machine.input_alphabet().size());
  Word out;
  out.reserve(word.size());
  State q = 0;
  for (Symbol a : word) {
    out.push_back(machine.output(q, a));
    q = machine.next(q, a);
  }
  return out;
}

namespace {

void require_same_inputs(const Alphabet& lhs, const Alphabet& rhs) {
  if (lhs.size() != rhs.size()) {
    throw InputError("input alphabet sizes differ (" + std::to_string(lhs.size()) + " vs " +
                     std::to_string(rhs.size()) + ")");
  }
}

std::string kind_mismatch(MachineKind lhs, MachineKind rhs) {
  return "kind mismatch: " + std::string(to_string(lhs)) + " vs " + std::string(to_string(rhs));
}

template <typename Transducer>
ConsistencyReport check_traces(const Transducer& machine, const TraceSample& sample) {
  require_same_inputs(machine.input_alphabet(), sample.input_alphabet());
  for (const auto& [input, output] : sample.traces()) {
    Word actual = transduce(machine, input);
    if (actual != output) {
      return {false, input, format_word(output), format_word(actual)};
    }
  }
  return {};
}

}  // namespace

ConsistencyReport is_consistent(const Machine& machine, const Sample& sample) {
  const auto mk = kind_of(machine);
  const auto sk = kind_of(sample);
  if (mk != sk) throw InputError(kind_mismatch(mk, sk));
  if (const auto* dfa = std::get_if<Dfa>(&machine)) {
    const auto& s = std::get<DfaSample>(sample);
    require_same_inputs(dfa->alphabet(), s.alphabet());
    for (const auto& [word, label] : s.labeled()) {
      if (accepts(*dfa, word) != label) {
        return {false, word, label ? "accept" : "reject", label ? "reject" : "accept"};
      }
    }
    return {};
  }
  const auto& traces = std::get<TraceSample>(sample);
  if (const auto* moore = std::get_if<MooreMachine>(&machine)) return check_traces(*moore, traces);
  return check_traces(std::get<MealyMachine>(machine), traces);
}

namespace {

// Output observed when entering a state (DFA acceptance, Moore output).
// Mealy machines have none and compare per transition instead.
int state_observation(const Machine& m, State q) {
  if (const auto* dfa = std::get_if<Dfa>(&m)) return dfa->accepting(q) ? 1 : 0;
  if (const auto* moore = std::get_if<MooreMachine>(&m)) return moore->output(q);
  return 0;
}

int transition_observation(const Machine& m, State q, Symbol a) {
  if (const auto* mealy = std::get_if<MealyMachine>(&m)) return mealy->output(q, a);
  return 0;
}

}  // namespace

EquivalenceResult equivalent(const Machine& lhs, const Machine& rhs) {
  const auto lk = kind_of(lhs);
  const auto rk = kind_of(rhs);
  if (lk != rk) throw InputError(kind_mismatch(lk, rk));
  const auto& inputs = input_alphabet(lhs);
  require_same_inputs(inputs, input_alphabet(rhs));

  const std::size_t n1 = size_of(lhs);
  const std::size_t n2 = size_of(rhs);
  const std::size_t sigma = inputs.size();
  const auto& t1 = std::visit([](const auto& m) -> const TransitionTable& { return m.transitions(); }, lhs);
  const auto& t2 = std::visit([](const auto& m) -> const TransitionTable& { return m.transitions(); }, rhs);

  struct Visit {
    std::size_t parent;
    Symbol symbol;
  };
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<Visit> visited(n1 * n2, Visit{kUnseen, -1});
  auto pair_index = [n2](State p, State q) {
    return static_cast<std::size_t>(p) * n2 + static_cast<std::size_t>(q);
  };
  auto witness = [&](std::size_t node, std::optional<Symbol> last) {
    Word word;
    if (last) word.push_back(*last);
    while (visited[node].symbol >= 0) {
      word.push_back(visited[node].symbol);
      node = visited[node].parent;
    }
    std::reverse(word.begin(), word.end());
    return EquivalenceResult{false, std::move(word)};
  };

  if (state_observation(lhs, 0) != state_observation(rhs, 0)) return {false, Word{}};
  visited[0] = Visit{0, -1};
  std::deque<std::pair<State, State>> queue{{0, 0}};
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const auto here = pair_index(p, q);
    for (std::size_t i = 0; i < sigma; ++i) {
      const auto a = static_cast<Symbol>(i);
      if (transition_observation(lhs, p, a) != transition_observation(rhs, q, a)) return witness(here, a);
      const State p2 = t1.next(p, a);
      const State q2 = t2.next(q, a);
      const auto there = pair_index(p2, q2);
      if (visited[there].parent != kUnseen) continue;
      visited[there] = Visit{here, a};
      if (state_observation(lhs, p2) != state_observation(rhs, q2)) return witness(there, std::nullopt);
      queue.emplace_back(p2, q2);
    }
  }
  return {};
}

}  // namespace smtgi
