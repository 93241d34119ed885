#include "doctest.h"
#include "properties.hpp"

using namespace smtgi::testing;

namespace {

void require_clean(const PropertyReport& r, std::size_t cases) {
  CHECK(r.cases == cases);
  CHECK_MESSAGE(r.ok(), r.failures << " failures, first: " << r.first_failure);
}

}  // namespace

TEST_CASE("prefix tree invariants") { require_clean(apt_invariants(1, 1000), 1000); }
TEST_CASE("format roundtrips") { require_clean(format_roundtrips(2, 1000), 1000); }
TEST_CASE("assertion counts") { require_clean(assertion_counts(3, 1000), 1000); }
TEST_CASE("shortest counterexamples") { require_clean(shortest_counterexamples(4, 1000), 1000); }
TEST_CASE("verdict anti-chain") { require_clean(verdict_antichain(5, 200, 4), 200); }
