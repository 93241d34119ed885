#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "smtgi/automata.hpp"
#include "smtgi/samples.hpp"

namespace smtgi {

struct ModBenchSpec {
  std::size_t k = 1;
  std::size_t max_len = 100;
};

struct RandomMachineSpec {
  std::size_t states = 1;
  std::size_t inputs = 1;
  std::size_t outputs = 1;
  std::uint64_t seed = 0;
};

// Unary DFA over {a} accepting exactly the words whose length is a multiple
// of k: states 0..k-1, delta(i, a) = (i + 1) mod k, only state 0 accepting.
Dfa gen_mod_dfa(std::size_t k);

// Every unary word up to max_len, labeled by gen_mod_dfa(k).
DfaSample gen_mod_sample(const ModBenchSpec& spec);

// Uniform random tables drawn from std::mt19937_64, taking raw outputs modulo
// the range: for each state, for each input, first the target then the
// output. Attempt i (0-based) seeds the engine with
// seed + i * 0x9E3779B97F4A7C15; the first reachable, minimal table wins.
// Throws GenerationError after 1000 failed attempts.
MealyMachine gen_random_mealy(const RandomMachineSpec& spec);

// Shortest access word per state (breadth-first, symbol order); nullopt for
// unreachable states.
std::vector<std::optional<Word>> access_words(const MealyMachine& machine);

// Shortest word separating each pair of states, found by refining the pair
// relation level by level. The set is empty iff the machine has one state;
// nullopt if two states are equivalent.
std::optional<WordSet> characterization_set(const MealyMachine& machine);

bool is_minimal(const MealyMachine& machine);

// W-method suite: transition cover * inputs^{<= extra_depth + 1} * W, each
// input paired with the machine's output. Throws InputError unless the
// machine is minimal with every state reachable.
TraceSample characterizing_sample(const MealyMachine& machine, std::size_t extra_depth = 0);

// Turns Mealy traces into Moore traces by prepending a shared initial output.
TraceSample as_moore_sample(const TraceSample& mealy, Symbol initial_output);

}  // namespace smtgi
