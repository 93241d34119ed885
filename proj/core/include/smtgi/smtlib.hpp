#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smtgi/formula.hpp"

namespace smtgi {

std::string to_smtlib(const Term& term);
std::string to_smtlib(Sort sort);

// set-logic, declare-fun per declaration, assert per assertion, check-sat.
// Deterministic: identical formulas give identical bytes.
std::string emit_smtlib(const Formula& formula, const std::optional<std::string>& logic_override = std::nullopt);

// Minimal s-expression reader for solver responses.
struct SExpr {
  std::string atom;
  std::vector<SExpr> items;
  bool is_list = false;

  std::string to_string() const;
};

// Throws SolverError on unbalanced or trailing input.
SExpr parse_sexpr(std::string_view text);

}  // namespace smtgi
