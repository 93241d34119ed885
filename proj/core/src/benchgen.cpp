#include "smtgi/benchgen.hpp"

#include <deque>
#include <random>

#include "smtgi/error.hpp"

namespace smtgi {

Dfa gen_mod_dfa(std::size_t k) {
  if (k < 1) throw InputError("k must be at least 1");
  std::vector<State> table(k);
  for (std::size_t i = 0; i < k; ++i) table[i] = static_cast<State>((i + 1) % k);
  std::vector<bool> accepting(k, false);
  accepting[0] = true;
  return Dfa(TransitionTable(Alphabet({"a"}), k, std::move(table)), std::move(accepting));
}

DfaSample gen_mod_sample(const ModBenchSpec& spec) {
  if (spec.k < 1) throw InputError("k must be at least 1");
  WordSet positives, negatives;
  for (std::size_t len = 0; len <= spec.max_len; ++len) {
    (len % spec.k == 0 ? positives : negatives).insert(Word(len, 0));
  }
  return DfaSample(Alphabet::numeric(1), std::move(positives), std::move(negatives));
}

std::vector<std::optional<Word>> access_words(const MealyMachine& machine) {
  const std::size_t n = machine.size();
  const std::size_t sigma = machine.input_alphabet().size();
  std::vector<std::optional<Word>> access(n);
  access[0] = Word{};
  std::deque<State> queue{0};
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < sigma; ++a) {
      const State to = machine.next(q, static_cast<Symbol>(a));
      if (access[static_cast<std::size_t>(to)]) continue;
      Word w = *access[static_cast<std::size_t>(q)];
      w.push_back(static_cast<Symbol>(a));
      access[static_cast<std::size_t>(to)] = std::move(w);
      queue.push_back(to);
    }
  }
  return access;
}

std::optional<WordSet> characterization_set(const MealyMachine& machine) {
  const std::size_t n = machine.size();
  const std::size_t sigma = machine.input_alphabet().size();
  auto at = [n](State p, State q) { return static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q); };
  std::vector<std::optional<Word>> separator(n * n);

  // Level 1: an immediate output difference.
  for (State p = 0; p < static_cast<State>(n); ++p) {
    for (State q = p + 1; q < static_cast<State>(n); ++q) {
      for (std::size_t a = 0; a < sigma; ++a) {
        if (machine.output(p, static_cast<Symbol>(a)) != machine.output(q, static_cast<Symbol>(a))) {
          separator[at(p, q)] = Word{static_cast<Symbol>(a)};
          break;
        }
      }
    }
  }
  // Level k + 1: a symbol leading to a pair separated at level k. Each round
  // reads only the previous round's relation so separators stay shortest.
  for (bool changed = true; changed;) {
    changed = false;
    auto previous = separator;
    for (State p = 0; p < static_cast<State>(n); ++p) {
      for (State q = p + 1; q < static_cast<State>(n); ++q) {
        if (separator[at(p, q)]) continue;
        for (std::size_t a = 0; a < sigma; ++a) {
          State p2 = machine.next(p, static_cast<Symbol>(a));
          State q2 = machine.next(q, static_cast<Symbol>(a));
          if (p2 == q2) continue;
          if (p2 > q2) std::swap(p2, q2);
          if (const auto& tail = previous[at(p2, q2)]) {
            Word w{static_cast<Symbol>(a)};
            w.insert(w.end(), tail->begin(), tail->end());
            separator[at(p, q)] = std::move(w);
            changed = true;
            break;
          }
        }
      }
    }
  }

  WordSet w;
  for (State p = 0; p < static_cast<State>(n); ++p) {
    for (State q = p + 1; q < static_cast<State>(n); ++q) {
      if (!separator[at(p, q)]) return std::nullopt;
      w.insert(*separator[at(p, q)]);
    }
  }
  return w;
}

bool is_minimal(const MealyMachine& machine) { return characterization_set(machine).has_value(); }

namespace {

bool all_reachable(const MealyMachine& machine) {
  for (const auto& w : access_words(machine))
    if (!w) return false;
  return true;
}

}  // namespace

MealyMachine gen_random_mealy(const RandomMachineSpec& spec) {
  if (spec.states < 1 || spec.inputs < 1 || spec.outputs < 1) {
    throw InputError("states, inputs and outputs must all be positive");
  }
  constexpr int kAttempts = 1000;
  const std::size_t cells = spec.states * spec.inputs;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(spec.seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
    std::vector<State> table(cells);
    std::vector<Symbol> outs(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      table[i] = static_cast<State>(rng() % spec.states);
      outs[i] = static_cast<Symbol>(rng() % spec.outputs);
    }
    MealyMachine machine(TransitionTable(Alphabet::numeric(spec.inputs), spec.states, std::move(table)),
                         Alphabet::numeric(spec.outputs), std::move(outs));
    if (all_reachable(machine) && is_minimal(machine)) return machine;
  }
  throw GenerationError("no reachable minimal machine with " + std::to_string(spec.states) + " states, " +
                        std::to_string(spec.inputs) + " inputs and " + std::to_string(spec.outputs) +
                        " outputs found in " + std::to_string(kAttempts) + " attempts");
}

TraceSample characterizing_sample(const MealyMachine& machine, std::size_t extra_depth) {
  const auto access = access_words(machine);
  for (std::size_t q = 0; q < access.size(); ++q) {
    if (!access[q]) throw InputError("state " + std::to_string(q) + " is unreachable");
  }
  auto w = characterization_set(machine);
  if (!w) throw InputError("machine is not minimal: some states are equivalent");
  if (w->empty()) w->insert(Word{0});

  const std::size_t sigma = machine.input_alphabet().size();
  WordSet cover;
  for (const auto& p : access) {
    cover.insert(*p);
    for (std::size_t a = 0; a < sigma; ++a) {
      Word pa = *p;
      pa.push_back(static_cast<Symbol>(a));
      cover.insert(std::move(pa));
    }
  }
  // All words of length <= extra_depth + 1.
  std::vector<Word> middles{Word{}};
  for (std::size_t i = 0, layer_start = 0; i <= extra_depth; ++i) {
    const std::size_t layer_end = middles.size();
    for (std::size_t j = layer_start; j < layer_end; ++j) {
      for (std::size_t a = 0; a < sigma; ++a) {
        Word m = middles[j];
        m.push_back(static_cast<Symbol>(a));
        middles.push_back(std::move(m));
      }
    }
    layer_start = layer_end;
  }

  WordSet inputs;
  for (const auto& p : cover) {
    for (const auto& m : middles) {
      for (const auto& suffix : *w) {
        Word x = p;
        x.insert(x.end(), m.begin(), m.end());
        x.insert(x.end(), suffix.begin(), suffix.end());
        inputs.insert(std::move(x));
      }
    }
  }
  std::vector<Trace> traces;
  traces.reserve(inputs.size());
  for (const auto& x : inputs) traces.push_back(Trace{x, transduce(machine, x)});
  return TraceSample(MachineKind::Mealy, Alphabet::numeric(sigma), Alphabet::numeric(machine.output_alphabet().size()),
                     std::move(traces));
}

TraceSample as_moore_sample(const TraceSample& mealy, Symbol initial_output) {
  if (mealy.kind() != MachineKind::Mealy) throw InputError("expected a mealy trace sample");
  std::vector<Trace> traces;
  traces.reserve(mealy.size());
  for (const auto& [input, output] : mealy.traces()) {
    Word y{initial_output};
    y.insert(y.end(), output.begin(), output.end());
    traces.push_back(Trace{input, std::move(y)});
  }
  return TraceSample(MachineKind::Moore, mealy.input_alphabet(), mealy.output_alphabet(), std::move(traces));
}

}  // namespace smtgi
