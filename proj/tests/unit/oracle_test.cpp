#include "doctest.h"
#include "test_support.hpp"

using namespace smtgi;
using namespace smtgi::testing;

namespace {

// Reference: every transition table and every accepting set, in plain
// nested loops. Only usable for n^(n*sigma) * 2^n small.
std::size_t reference_minimal_dfa(const DfaSample& s, std::size_t max_n) {
  const std::size_t sigma = s.alphabet().size();
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t cells = n * sigma;
    std::vector<State> table(cells, 0);
    for (;;) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> acc(n);
        for (std::size_t q = 0; q < n; ++q) acc[q] = (mask >> q) & 1;
        const Dfa d(TransitionTable(s.alphabet(), n, table), acc);
        bool ok = true;
        for (const auto& w : s.positives()) ok = ok && accepts(d, w);
        for (const auto& w : s.negatives()) ok = ok && !accepts(d, w);
        if (ok) return n;
      }
      std::size_t i = 0;
      while (i < cells && ++table[i] == static_cast<State>(n)) table[i++] = 0;
      if (i == cells) break;
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("accepting the empty word needs one state") {
  const auto r = brute_force_minimal(dfa_sample(1, {Word{}}, {}), MachineKind::Dfa, {});
  REQUIRE(r);
  CHECK(r->minimal_n == 1);
}

TEST_CASE("flip-flop needs two states") {
  const DfaSample s = dfa_sample(1, {unary(1)}, {Word{}, unary(2)});
  const auto r = brute_force_minimal(s, MachineKind::Dfa, {});
  REQUIRE(r);
  CHECK(r->minimal_n == 2);
  const Dfa& d = std::get<Dfa>(r->machine);
  CHECK(d.next(0, 0) == 1);
  CHECK(d.next(1, 0) == 0);
  CHECK(d.accepting(1));
  CHECK_FALSE(d.accepting(0));
}

TEST_CASE("mod-3 sample of length 6 needs three states") {
  const auto r = brute_force_minimal(gen_mod_sample({3, 6}), MachineKind::Dfa, {});
  REQUIRE(r);
  CHECK(r->minimal_n == 3);
}

TEST_CASE("nothing within the cap") {
  CHECK_FALSE(brute_force_minimal(gen_mod_sample({3, 6}), MachineKind::Dfa, {2, 1000}).has_value());
}

TEST_CASE("budget exhaustion is an error, not an answer") {
  CHECK_THROWS_AS(brute_force_minimal(gen_mod_sample({4, 12}), MachineKind::Dfa, {4, 10}), BudgetExceeded);
}

TEST_CASE("agrees with plain enumeration of tables and labelings") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const DfaSample s = random_dfa_sample(rng, 1 + i % 2, 8, 5);
    const auto r = brute_force_minimal(s, MachineKind::Dfa, {3, 50'000'000});
    CHECK((r ? r->minimal_n : 0) == reference_minimal_dfa(s, 3));
    if (r) CHECK(is_consistent(r->machine, s).ok);
  }
}

TEST_CASE("mealy and moore answers are consistent") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 100; ++i) {
    const MachineKind kind = i % 2 ? MachineKind::Mealy : MachineKind::Moore;
    const TraceSample s = random_trace_sample(rng, kind, 2, 2, 4, 4);
    const auto r = brute_force_minimal(s, kind, {3, 50'000'000});
    // The traces come from a machine with at most 3 states.
    REQUIRE(r);
    CHECK(r->minimal_n <= 3);
    CHECK(is_consistent(r->machine, s).ok);
    if (r->minimal_n > 1) {
      CHECK_FALSE(brute_force_minimal(s, kind, {r->minimal_n - 1, 50'000'000}).has_value());
    }
  }
}

TEST_CASE("sample kind must match") {
  CHECK_THROWS_AS(brute_force_minimal(gen_mod_sample({2, 3}), MachineKind::Mealy, {}), InputError);
}
