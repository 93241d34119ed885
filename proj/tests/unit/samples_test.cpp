#include "doctest.h"
#include "test_support.hpp"

using namespace smtgi;
using namespace smtgi::testing;

TEST_CASE("parse_dfa_sample reads the labeled-string format") {
  auto s = parse_dfa_sample("2 1\n1 1 0\n0 0\n");
  CHECK(s.alphabet().size() == 1);
  CHECK(s.positives() == WordSet{unary(1)});
  CHECK(s.negatives() == WordSet{Word{}});

  auto t = parse_dfa_sample("1 2\n1 2 0 1\n");
  CHECK(t.positives() == WordSet{word({0, 1})});
  CHECK(t.negatives().empty());
}

TEST_CASE("parse_dfa_sample rejects a string labeled both ways") {
  try {
    parse_dfa_sample("2 1\n1 1 0\n0 1 0\n");
    FAIL("expected ConflictError");
  } catch (const ConflictError& e) {
    CHECK(std::string(e.what()).find("\"0\"") != std::string::npos);
  }
}

TEST_CASE("parse_dfa_sample error paths") {
  CHECK_THROWS_AS(parse_dfa_sample(""), ParseError);
  CHECK_THROWS_AS(parse_dfa_sample("1 2\n1 1 2\n"), ParseError);    // symbol >= alphabet size
  CHECK_THROWS_AS(parse_dfa_sample("1 2\n2 1 0\n"), ParseError);    // bad label
  CHECK_THROWS_AS(parse_dfa_sample("1 2\n1 2 0\n"), ParseError);    // too few symbols
  CHECK_THROWS_AS(parse_dfa_sample("2 2\n1 1 0\n"), ParseError);    // count mismatch
  CHECK_THROWS_AS(parse_dfa_sample("1 2\n1 x 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dfa_sample("1 2\n1 -1\n"), ParseError);
  try {
    parse_dfa_sample("2 2\n1 1 0\n1 1 5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("duplicate strings within one class collapse") {
  auto s = parse_dfa_sample("3 1\n1 1 0\n1 1 0\n0 0\n");
  CHECK(s.positives().size() == 1);
  CHECK(metrics(s).count == 2);
}

TEST_CASE("serialize_dfa_sample emits shortlex order") {
  CHECK(serialize_dfa_sample(dfa_sample(1, {Word{}}, {})) == "1 1\n1 0\n");
  CHECK(serialize_dfa_sample(dfa_sample(1, {unary(1)}, {Word{}})) == "2 1\n0 0\n1 1 0\n");
}

TEST_CASE("mod sample survives a text roundtrip") {
  auto s = gen_mod_sample({2, 4});
  auto text = serialize_dfa_sample(s);
  CHECK(parse_dfa_sample(text) == s);
  CHECK(serialize_dfa_sample(parse_dfa_sample(text)) == text);
}

TEST_CASE("parse_trace_sample reads mealy and moore traces") {
  auto mealy = parse_trace_sample("mealy 1 1\n1 0 0\n");
  CHECK(mealy.kind() == MachineKind::Mealy);
  REQUIRE(mealy.size() == 1);
  CHECK(mealy.traces().begin()->first == unary(1));
  CHECK(mealy.traces().begin()->second == word({0}));

  // Moore lines lead with the initial output, then the length.
  auto moore = parse_trace_sample("moore 1 1\n0 1 0 0\n");
  CHECK(moore.kind() == MachineKind::Moore);
  REQUIRE(moore.size() == 1);
  CHECK(moore.traces().begin()->second == word({0, 0}));
}

TEST_CASE("trace prefixes that disagree parse fine and fail later in the tree") {
  auto s = parse_trace_sample("mealy 1 2\n2 0 0 0 1\n1 0 1\n");
  CHECK(s.size() == 2);
  CHECK_THROWS_AS(build_apt(s), ConflictError);
}

TEST_CASE("parse_trace_sample error paths") {
  CHECK_THROWS_AS(parse_trace_sample("dfa 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_trace_sample("mealy 1 1\n2 0 0 0\n"), ParseError);  // length relation
  CHECK_THROWS_AS(parse_trace_sample("moore 1 1\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_trace_sample("mealy 1 1\n1 0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_trace_sample("mealy 1 2\n1 0 0\n1 0 1\n"), ConflictError);
  CHECK_THROWS_AS(parse_trace_sample("moore 1 2\n0 1 0 0\n1 0\n"), ConflictError);  // differing y_0
}

TEST_CASE("trace serialization is canonical") {
  auto s = parse_trace_sample("moore 2 3\n2 2 1 1 0 2\n2 0\n2 1 0 0\n");
  CHECK(serialize_trace_sample(s) == "moore 2 3\n2 0\n2 1 0 0\n2 2 1 1 0 2\n");
  CHECK(parse_trace_sample(serialize_trace_sample(s)) == s);
}

TEST_CASE("parse_sample dispatches on the header") {
  CHECK(std::holds_alternative<TraceSample>(parse_sample("  mealy 1 1\n")));
  CHECK(std::holds_alternative<DfaSample>(parse_sample("0 1\n")));
}

TEST_CASE("metrics") {
  CHECK(metrics(dfa_sample(1, {Word{}}, {unary(1)})) == SampleMetrics{2, 1});
  CHECK(metrics(gen_mod_sample({1, 100})) == SampleMetrics{101, 5050});
  auto traces = parse_trace_sample("mealy 2 2\n2 0 0 1 1\n1 1 0\n0\n");
  CHECK(metrics(traces) == SampleMetrics{3, 3});
}

TEST_CASE("DfaSample invariants hold at construction") {
  CHECK_THROWS_AS(dfa_sample(1, {Word{}}, {Word{}}), ConflictError);
  CHECK_THROWS_AS(dfa_sample(1, {word({1})}, {}), InputError);
}
