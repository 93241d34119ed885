#include "test_support.hpp"

#include <fstream>
#include <sstream>

namespace smtgi::testing {

SolverConfig test_solver() {
  if (auto env = SolverConfig::from_environment()) return *env;
  return SolverConfig::from_command_line(SMTGI_TEST_SOLVER);
}

LearnOptions options(Encoding encoding, AxiomStyle style, MachineKind kind) {
  LearnOptions o;
  o.encoding = encoding;
  o.style = style;
  o.kind = kind;
  o.solver = test_solver();
  o.solver.timeout = std::chrono::seconds(120);
  return o;
}

std::string DfaConfig::name() const {
  return std::string(to_string(encoding)) + "-" + std::string(to_string(style));
}

std::vector<DfaConfig> dfa_configs() {
  return {{Encoding::Natural, AxiomStyle::BooleanDisjunction},
          {Encoding::Natural, AxiomStyle::LinearInequality},
          {Encoding::Expressive, AxiomStyle::BooleanDisjunction},
          {Encoding::Expressive, AxiomStyle::LinearInequality}};
}

Word word(std::initializer_list<Symbol> symbols) { return Word(symbols); }
Word unary(std::size_t length) { return Word(length, 0); }

DfaSample dfa_sample(std::size_t alphabet, std::initializer_list<Word> positives, std::initializer_list<Word> negatives) {
  return DfaSample(Alphabet::numeric(alphabet), WordSet(positives), WordSet(negatives));
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

Word random_word(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
  Word w(uniform(rng, max_len + 1));
  for (auto& s : w) s = static_cast<Symbol>(uniform(rng, alphabet));
  return w;
}

}  // namespace

DfaSample random_dfa_sample(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_strings, std::size_t max_len) {
  WordSet positives, negatives;
  const std::size_t count = 1 + uniform(rng, max_strings);
  for (std::size_t i = 0; i < count; ++i) {
    Word w = random_word(rng, alphabet, max_len);
    if (positives.contains(w) || negatives.contains(w)) continue;
    (uniform(rng, 2) ? positives : negatives).insert(std::move(w));
  }
  return DfaSample(Alphabet::numeric(alphabet), std::move(positives), std::move(negatives));
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t alphabet) {
  std::vector<State> table(n * alphabet);
  for (auto& t : table) t = static_cast<State>(uniform(rng, n));
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = uniform(rng, 2) == 1;
  return Dfa(TransitionTable(Alphabet::numeric(alphabet), n, std::move(table)), std::move(accepting));
}

TraceSample random_trace_sample(std::mt19937_64& rng, MachineKind kind, std::size_t inputs, std::size_t outputs,
                                std::size_t max_traces, std::size_t max_len) {
  const std::size_t n = 1 + uniform(rng, 3);
  std::vector<State> table(n * inputs);
  for (auto& t : table) t = static_cast<State>(uniform(rng, n));
  TransitionTable transitions(Alphabet::numeric(inputs), n, table);
  std::vector<Trace> traces;
  const std::size_t count = 1 + uniform(rng, max_traces);
  if (kind == MachineKind::Mealy) {
    std::vector<Symbol> outs(n * inputs);
    for (auto& o : outs) o = static_cast<Symbol>(uniform(rng, outputs));
    MealyMachine m(transitions, Alphabet::numeric(outputs), outs);
    for (std::size_t i = 0; i < count; ++i) {
      Word x = random_word(rng, inputs, max_len);
      traces.push_back({x, transduce(m, x)});
    }
  } else {
    std::vector<Symbol> outs(n);
    for (auto& o : outs) o = static_cast<Symbol>(uniform(rng, outputs));
    MooreMachine m(transitions, Alphabet::numeric(outputs), outs);
    for (std::size_t i = 0; i < count; ++i) {
      Word x = random_word(rng, inputs, max_len);
      traces.push_back({x, transduce(m, x)});
    }
  }
  return TraceSample(kind, Alphabet::numeric(inputs), Alphabet::numeric(outputs), std::move(traces));
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> words{Word{}};
  for (std::size_t start = 0, len = 0; len < max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t a = 0; a < alphabet; ++a) {
        Word w = words[i];
        w.push_back(static_cast<Symbol>(a));
        words.push_back(std::move(w));
      }
    }
    start = end;
  }
  return words;
}

namespace {

Word observe(const Machine& m, const Word& w) {
  if (const auto* dfa = std::get_if<Dfa>(&m)) return Word{accepts(*dfa, w) ? 1 : 0};
  if (const auto* moore = std::get_if<MooreMachine>(&m)) return transduce(*moore, w);
  return transduce(std::get<MealyMachine>(m), w);
}

}  // namespace

std::optional<Word> shortest_difference_by_enumeration(const Machine& lhs, const Machine& rhs, std::size_t max_len) {
  for (const auto& w : all_words(input_alphabet(lhs).size(), max_len)) {
    if (observe(lhs, w) != observe(rhs, w)) return w;
  }
  return std::nullopt;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace smtgi::testing
