#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smtgi/alphabet.hpp"
#include "smtgi/samples.hpp"

namespace smtgi {

using State = int;

// Total transition table over states [0, n) with initial state 0.
class TransitionTable {
 public:
  TransitionTable() = default;
  // `next` is row-major: next[q * |alphabet| + a]. Throws InputError unless
  // n >= 1, the table has n * |alphabet| entries and every entry is in [0, n).
  TransitionTable(Alphabet inputs, std::size_t n, std::vector<State> next);

  const Alphabet& inputs() const noexcept { return inputs_; }
  std::size_t size() const noexcept { return n_; }
  State next(State q, Symbol a) const noexcept { return next_[index(q, a)]; }
  const std::vector<State>& table() const noexcept { return next_; }
  // State reached from `from` after reading `word`. Throws InputError on
  // symbols outside the input alphabet.
  State run(WordView word, State from = 0) const;

  std::size_t index(State q, Symbol a) const noexcept {
    return static_cast<std::size_t>(q) * inputs_.size() + static_cast<std::size_t>(a);
  }

  bool operator==(const TransitionTable&) const = default;

 private:
  Alphabet inputs_;
  std::size_t n_ = 0;
  std::vector<State> next_;
};

class Dfa {
 public:
  Dfa(TransitionTable transitions, std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return transitions_.inputs(); }
  const TransitionTable& transitions() const noexcept { return transitions_; }
  std::size_t size() const noexcept { return transitions_.size(); }
  State next(State q, Symbol a) const noexcept { return transitions_.next(q, a); }
  bool accepting(State q) const noexcept { return accepting_[static_cast<std::size_t>(q)]; }
  const std::vector<bool>& accepting_states() const noexcept { return accepting_; }

  bool operator==(const Dfa&) const = default;

 private:
  TransitionTable transitions_;
  std::vector<bool> accepting_;
};

// One output per state, emitted on every (re-)entry including the start.
class MooreMachine {
 public:
  MooreMachine(TransitionTable transitions, Alphabet outputs, std::vector<Symbol> state_outputs);

  const Alphabet& input_alphabet() const noexcept { return transitions_.inputs(); }
  const Alphabet& output_alphabet() const noexcept { return outputs_; }
  const TransitionTable& transitions() const noexcept { return transitions_; }
  std::size_t size() const noexcept { return transitions_.size(); }
  State next(State q, Symbol a) const noexcept { return transitions_.next(q, a); }
  Symbol output(State q) const noexcept { return state_outputs_[static_cast<std::size_t>(q)]; }

  bool operator==(const MooreMachine&) const = default;

 private:
  TransitionTable transitions_;
  Alphabet outputs_;
  std::vector<Symbol> state_outputs_;
};

// One output per transition.
class MealyMachine {
 public:
  // `transition_outputs` is laid out like the transition table.
  MealyMachine(TransitionTable transitions, Alphabet outputs, std::vector<Symbol> transition_outputs);

  const Alphabet& input_alphabet() const noexcept { return transitions_.inputs(); }
  const Alphabet& output_alphabet() const noexcept { return outputs_; }
  const TransitionTable& transitions() const noexcept { return transitions_; }
  std::size_t size() const noexcept { return transitions_.size(); }
  State next(State q, Symbol a) const noexcept { return transitions_.next(q, a); }
  Symbol output(State q, Symbol a) const noexcept { return outputs_table_[transitions_.index(q, a)]; }

  bool operator==(const MealyMachine&) const = default;

 private:
  TransitionTable transitions_;
  Alphabet outputs_;
  std::vector<Symbol> outputs_table_;
};

using Machine = std::variant<Dfa, MooreMachine, MealyMachine>;

MachineKind kind_of(const Machine& machine) noexcept;
std::size_t size_of(const Machine& machine) noexcept;
const Alphabet& input_alphabet(const Machine& machine) noexcept;

bool accepts(const Dfa& dfa, WordView word);
// Moore: |x| + 1 outputs starting with the initial state's; Mealy: |x|.
Word transduce(const MooreMachine& machine, WordView word);
Word transduce(const MealyMachine& machine, WordView word);

struct ConsistencyReport {
  bool ok = true;
  // First offending string or trace input, in shortlex order.
  std::optional<Word> failing;
  std::string expected;
  std::string actual;

  explicit operator bool() const noexcept { return ok; }
};

// Alphabets are compatible when their sizes agree; symbols match by index.
// Throws InputError on kind or alphabet mismatch.
ConsistencyReport is_consistent(const Machine& machine, const Sample& sample);

struct EquivalenceResult {
  bool equivalent = true;
  // Shortest distinguishing input when not equivalent.
  std::optional<Word> counterexample;

  explicit operator bool() const noexcept { return equivalent; }
};

// Breadth-first search over the reachable pair machine. Throws InputError
// when kinds or input alphabet sizes differ.
EquivalenceResult equivalent(const Machine& lhs, const Machine& rhs);

// Text format: "kind", "inputs", "outputs", "states", "initial",
// "accepting", "output" and "trans" lines; '#' starts a comment.
Machine parse_machine(std::string_view text);
std::string serialize_machine(const Machine& machine);
std::string to_dot(const Machine& machine);

}  // namespace smtgi
