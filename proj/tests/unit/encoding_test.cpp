#include "doctest.h"
#include "test_support.hpp"

using namespace smtgi;
using namespace smtgi::testing;

namespace {

const DfaSample& flipflop() {
  static const DfaSample s = dfa_sample(1, {unary(1)}, {Word{}, unary(2)});
  return s;
}

VerdictStatus solve(const Formula& f) { return check(f, test_solver()).status; }

// Minimal size by exhaustive search, or 0 if none within max_n.
std::size_t oracle_n(const Sample& s, MachineKind kind, std::size_t max_n = 3) {
  const auto r = brute_force_minimal(s, kind, {max_n, 50'000'000});
  return r ? r->minimal_n : 0;
}

}  // namespace

TEST_CASE("natural encoding counts") {
  const Formula f = encode_natural(flipflop(), 2, AxiomStyle::BooleanDisjunction);
  CHECK(f.assertions().size() == 5);
  CHECK(f.declarations().size() == 2);
  CHECK(stats(f, 2).assertion_count == 5);
  // Inequality style keeps one assertion per (state, symbol).
  CHECK(encode_natural(flipflop(), 3, AxiomStyle::LinearInequality).assertions().size() == 3 + 3);
}

TEST_CASE("expressive encoding counts") {
  const Apt apt = build_apt(flipflop());
  CHECK(encode_expressive(apt, 2, AxiomStyle::BooleanDisjunction).assertions().size() == 9);
  CHECK(encode_expressive(apt, 2, AxiomStyle::LinearInequality).assertions().size() == 9);
  CHECK(encode_expressive(apt, 2, AxiomStyle::BooleanDisjunction).declarations().size() == 2 + 3);
}

TEST_CASE("count formulas hold on random samples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t sigma = 1 + i % 3;
    const DfaSample s = random_dfa_sample(rng, sigma, 8, 5);
    const std::size_t n = 1 + i % 4;
    const Apt apt = build_apt(s);
    const std::size_t m = apt.size();
    const std::size_t labeled = s.positives().size() + s.negatives().size();
    CHECK(encode_natural(s, n, AxiomStyle::BooleanDisjunction).assertions().size() == n * sigma + labeled);
    CHECK(encode_expressive(apt, n, AxiomStyle::LinearInequality).assertions().size() ==
          (m - 1) + labeled + m + 1);
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t sigma = 1 + i % 3, lambda = 1 + i % 2, n = 1 + i % 4;
    const bool moore = i % 2 == 0;
    const TraceSample s = random_trace_sample(rng, moore ? MachineKind::Moore : MachineKind::Mealy, sigma, lambda, 5, 5);
    const Apt apt = build_apt(s);
    const std::size_t m = apt.size();
    const std::size_t got = encode_transducer(apt, n, AxiomStyle::BooleanDisjunction).assertions().size();
    if (moore) {
      CHECK(got == (m - 1) + 1 + apt.labeled_count() + m + 1 + n);
    } else {
      CHECK(got == (m - 1) + (m - 1) + m + 1 + n * sigma);
    }
  }
}

TEST_CASE("kind and size preconditions") {
  const Apt dfa = build_apt(flipflop());
  const Apt mealy = build_apt(parse_trace_sample("mealy 1 1\n1 0 0\n"));
  CHECK_THROWS_AS(encode_expressive(mealy, 1, AxiomStyle::BooleanDisjunction), InputError);
  CHECK_THROWS_AS(encode_transducer(dfa, 1, AxiomStyle::BooleanDisjunction), InputError);
  CHECK_THROWS_AS(encode_expressive(dfa, 0, AxiomStyle::BooleanDisjunction), InputError);
  CHECK_THROWS_AS(encode_natural(flipflop(), 0, AxiomStyle::LinearInequality), InputError);
}

TEST_CASE("flip-flop satisfiability follows the exhaustive search") {
  REQUIRE(oracle_n(flipflop(), MachineKind::Dfa) == 2);
  const Apt apt = build_apt(flipflop());
  for (auto style : {AxiomStyle::BooleanDisjunction, AxiomStyle::LinearInequality}) {
    CHECK(solve(encode_natural(flipflop(), 1, style)) == VerdictStatus::Unsat);
    CHECK(solve(encode_natural(flipflop(), 2, style)) == VerdictStatus::Sat);
    CHECK(solve(encode_expressive(apt, 1, style)) == VerdictStatus::Unsat);
    CHECK(solve(encode_expressive(apt, 2, style)) == VerdictStatus::Sat);
  }
}

TEST_CASE("accepting the empty word needs one state") {
  const DfaSample s = dfa_sample(1, {Word{}}, {});
  CHECK(solve(encode_expressive(build_apt(s), 1, AxiomStyle::LinearInequality)) == VerdictStatus::Sat);
}

TEST_CASE("mealy satisfiability follows the exhaustive search") {
  const TraceSample one = parse_trace_sample("mealy 1 1\n1 0 0\n");
  const TraceSample two = parse_trace_sample("mealy 1 2\n1 0 0\n2 0 0 0 1\n");
  REQUIRE(oracle_n(one, MachineKind::Mealy) == 1);
  REQUIRE(oracle_n(two, MachineKind::Mealy) == 2);
  CHECK(solve(encode_transducer(build_apt(one), 1, AxiomStyle::BooleanDisjunction)) == VerdictStatus::Sat);
  CHECK(solve(encode_transducer(build_apt(two), 1, AxiomStyle::BooleanDisjunction)) == VerdictStatus::Unsat);
  CHECK(solve(encode_transducer(build_apt(two), 2, AxiomStyle::LinearInequality)) == VerdictStatus::Sat);
}

TEST_CASE("styles and encodings agree on satisfiability; verdicts are monotone in n") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const DfaSample s = random_dfa_sample(rng, 2, 6, 4);
    const Apt apt = build_apt(s);
    const std::size_t expected = oracle_n(s, MachineKind::Dfa);
    REQUIRE(expected != 0);
    for (std::size_t n = 1; n <= expected + 1; ++n) {
      const VerdictStatus want = n >= expected ? VerdictStatus::Sat : VerdictStatus::Unsat;
      CAPTURE(n);
      CHECK(solve(encode_natural(s, n, AxiomStyle::BooleanDisjunction)) == want);
      CHECK(solve(encode_natural(s, n, AxiomStyle::LinearInequality)) == want);
      CHECK(solve(encode_expressive(apt, n, AxiomStyle::BooleanDisjunction)) == want);
      CHECK(solve(encode_expressive(apt, n, AxiomStyle::LinearInequality)) == want);
    }
  }
}
