// Acceptance checks; prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "properties.hpp"
#include "test_support.hpp"

using namespace smtgi;
using namespace smtgi::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

const std::vector<Dfa>& mod_machines() {
  static const std::vector<Dfa> m = [] {
    std::vector<Dfa> v;
    for (std::size_t k = 1; k <= 6; ++k) v.push_back(gen_mod_dfa(k));
    return v;
  }();
  return m;
}

void mod_minimality(Outcome& o) {
  std::size_t runs = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const DfaSample s = gen_mod_sample({k, 30});
    for (const auto& c : dfa_configs()) {
      const LearnResult r = learn_minimal(s, options(c.encoding, c.style));
      ++runs;
      const std::string tag = "k=" + std::to_string(k) + " " + c.name();
      if (r.minimal_n != k) o.fail(tag + " minimal_n=" + std::to_string(r.minimal_n));
      if (!equivalent(r.machine, mod_machines()[k - 1]).equivalent) o.fail(tag + " not equivalent");
    }
  }
  o.detail << runs << " runs, k=1..6, max_len=30";
}

void unsat_below_k(Outcome& o) {
  std::size_t runs = 0;
  for (std::size_t k = 2; k <= 6; ++k) {
    const DfaSample s = gen_mod_sample({k, 30});
    for (const auto& c : dfa_configs()) {
      ++runs;
      const auto v = learn_at_size(s, k - 1, options(c.encoding, c.style)).attempt.verdict;
      if (v != VerdictStatus::Unsat) o.fail("k=" + std::to_string(k) + " " + c.name() + " " + std::string(to_string(v)));
    }
  }
  o.detail << runs << " checks at n=k-1";
}

struct CorpusEntry {
  DfaSample sample;
  std::size_t oracle_n;
};

// Random binary samples (<= 12 strings, length <= 6) with oracle size <= 3.
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = [] {
    std::vector<CorpusEntry> out;
    std::mt19937_64 rng(20240601);
    while (out.size() < 120) {
      DfaSample s = random_dfa_sample(rng, 2, 12, 6);
      const auto r = brute_force_minimal(s, MachineKind::Dfa, {3, 50'000'000});
      if (r) out.push_back({std::move(s), r->minimal_n});
    }
    return out;
  }();
  return c;
}

void oracle_agreement(Outcome& o) {
  std::size_t by_size[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [s, expected] = corpus()[i];
    ++by_size[expected];
    for (const auto& c : dfa_configs()) {
      const LearnResult r = learn_minimal(s, options(c.encoding, c.style));
      const std::string tag = "sample " + std::to_string(i) + " " + c.name();
      if (r.minimal_n != expected) o.fail(tag + " learner " + std::to_string(r.minimal_n) + " oracle " +
                                          std::to_string(expected));
      if (!is_consistent(r.machine, s).ok) o.fail(tag + " inconsistent");
    }
  }
  o.detail << corpus().size() << " samples (oracle n=1/2/3: " << by_size[1] << "/" << by_size[2] << "/"
           << by_size[3] << "), 4 configs each";
}

void configuration_agreement(Outcome& o) {
  std::size_t checks = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [s, expected] = corpus()[i];
    for (std::size_t n = 1; n <= expected + 1; ++n) {
      const auto configs = dfa_configs();
      const auto first = learn_at_size(s, n, options(configs[0].encoding, configs[0].style)).attempt.verdict;
      for (std::size_t c = 1; c < configs.size(); ++c) {
        ++checks;
        const auto v = learn_at_size(s, n, options(configs[c].encoding, configs[c].style)).attempt.verdict;
        if (v != first || v == VerdictStatus::Unknown) {
          o.fail("sample " + std::to_string(i) + " n=" + std::to_string(n) + " " + configs[c].name());
        }
      }
    }
  }
  o.detail << checks << " pairwise verdict comparisons, n <= oracle+1";
}

std::vector<RandomMachineSpec> mealy_specs() {
  std::vector<RandomMachineSpec> specs;
  for (std::uint64_t i = 0; i < 20; ++i) specs.push_back({2 + i % 4, 1 + (i / 4) % 3, 2 + i % 2, 1000 + i});
  return specs;
}

void mealy_roundtrip(Outcome& o) {
  for (const auto& spec : mealy_specs()) {
    const MealyMachine source = gen_random_mealy(spec);
    const TraceSample s = characterizing_sample(source, 0);
    const LearnResult r =
        learn_minimal(s, options(Encoding::Expressive, AxiomStyle::BooleanDisjunction, MachineKind::Mealy));
    const std::string tag = "seed " + std::to_string(spec.seed);
    if (r.minimal_n != spec.states) o.fail(tag + " minimal_n " + std::to_string(r.minimal_n));
    if (!equivalent(r.machine, Machine{source}).equivalent) o.fail(tag + " not equivalent");
  }
  o.detail << "20 machines, |Q| 2..5, |inputs| 1..3, |outputs| 2..3";
}

void moore_parity(Outcome& o) {
  std::size_t inputs = 0;
  for (const auto& spec : mealy_specs()) {
    const MealyMachine source = gen_random_mealy(spec);
    const TraceSample mealy = characterizing_sample(source, 0);
    const TraceSample s = as_moore_sample(mealy, 0);
    const LearnResult r =
        learn_minimal(s, options(Encoding::Expressive, AxiomStyle::LinearInequality, MachineKind::Moore));
    const auto& learned = std::get<MooreMachine>(r.machine);
    for (const auto& [x, y] : mealy.traces()) {
      ++inputs;
      const Word got = transduce(learned, x);
      if (Word(got.begin() + 1, got.end()) != transduce(source, x) || got.front() != 0) {
        o.fail("seed " + std::to_string(spec.seed) + " input " + format_word(x));
      }
    }
  }
  o.detail << inputs << " suite inputs across 20 machines";
}

void property_suites(Outcome& o) {
  const PropertyReport reports[] = {apt_invariants(1, 1000), format_roundtrips(2, 1000), assertion_counts(3, 1000),
                                    verdict_antichain(5, 200, 4)};
  const char* names[] = {"apt", "roundtrip", "counts", "anti-chain"};
  std::size_t total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    total += reports[i].cases;
    if (!reports[i].ok()) o.fail(std::string(names[i]) + ": " + reports[i].first_failure);
  }
  if (total < 1000) o.fail("only " + std::to_string(total) + " cases");
  o.detail << total << " generated cases";
}

void golden_scripts(Outcome& o) {
  const std::string dir = SMTGI_GOLDEN_DIR;
  const DfaSample flipflop = dfa_sample(1, {unary(1)}, {Word{}, unary(2)});
  const TraceSample mealy = parse_trace_sample("mealy 1 2\n2 0 0 0 1\n1 0 0\n");
  const std::pair<std::string, std::string> cases[] = {
      {"expressive_flipflop_n2_bool.smt2",
       emit_smtlib(encode_expressive(build_apt(flipflop), 2, AxiomStyle::BooleanDisjunction))},
      {"natural_flipflop_n2_bool.smt2", emit_smtlib(encode_natural(flipflop, 2, AxiomStyle::BooleanDisjunction))},
      {"mealy_two_traces_n2_bool.smt2",
       emit_smtlib(encode_transducer(build_apt(mealy), 2, AxiomStyle::BooleanDisjunction))},
  };
  for (const auto& [file, script] : cases) {
    const std::string golden = read_text(dir + "/" + file);
    if (golden.empty() || golden != script) o.fail(file + " differs");
  }
  o.detail << "3 scripts";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"mod-k minimality under all four configurations", mod_minimality},
      {"unsat at k-1 for k=2..6", unsat_below_k},
      {"learner agrees with brute-force oracle", oracle_agreement},
      {"encodings and axiom styles agree per n", configuration_agreement},
      {"Mealy characterizing-sample roundtrip", mealy_roundtrip},
      {"Moore parity on suite inputs", moore_parity},
      {"property suites", property_suites},
      {"golden SMT-LIB2 scripts", golden_scripts},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    Outcome o;
    const auto start = Clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> wall = Clock::now() - start;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f", wall.count());
    std::cout << "criterion " << index << ": " << (o.pass ? "PASS" : "FAIL") << " - " << name << " ("
              << o.detail.str() << ", " << secs << " s)" << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
