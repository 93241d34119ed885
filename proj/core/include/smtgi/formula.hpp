#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace smtgi {

enum class Sort { Int, Bool };

struct FunctionDecl {
  std::string name;
  std::vector<Sort> args;  // empty for constants
  Sort result = Sort::Int;

  bool operator==(const FunctionDecl&) const = default;
};

// Immutable ground term over integer/boolean literals, applications of
// declared functions and the connectives =, <, >=, and, or, not. Copies share
// structure.
class Term {
 public:
  enum class Op { Int, Bool, Apply, Eq, Lt, Ge, And, Or, Not };

  static Term integer(std::int64_t value);
  static Term boolean(bool value);
  static Term apply(std::string function, std::vector<Term> args = {});
  static Term eq(Term lhs, Term rhs);
  static Term lt(Term lhs, Term rhs);
  static Term ge(Term lhs, Term rhs);
  static Term conjunction(std::vector<Term> parts);
  static Term disjunction(std::vector<Term> parts);
  static Term negation(Term inner);

  Op op() const noexcept { return node_->op; }
  std::int64_t value() const noexcept { return node_->value; }
  const std::string& function() const noexcept { return node_->function; }
  const std::vector<Term>& args() const noexcept { return node_->args; }

  bool operator==(const Term& other) const;

 private:
  struct Node {
    Op op;
    std::int64_t value = 0;
    std::string function;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Op op, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

// A quantifier-free first-order problem: declarations plus a conjunction of
// ground assertions.
class Formula {
 public:
  explicit Formula(std::string logic_hint = "QF_UFLIA") : logic_hint_(std::move(logic_hint)) {}

  // Throws InputError when the name is already declared.
  void declare(FunctionDecl decl);
  // Throws InputError when the term applies an undeclared function or uses
  // one with the wrong arity.
  void assert_that(Term term);

  const std::string& logic_hint() const noexcept { return logic_hint_; }
  const std::vector<FunctionDecl>& declarations() const noexcept { return declarations_; }
  const std::vector<Term>& assertions() const noexcept { return assertions_; }
  const FunctionDecl* find(const std::string& name) const;

  bool operator==(const Formula& other) const {
    return logic_hint_ == other.logic_hint_ && declarations_ == other.declarations_ &&
           assertions_ == other.assertions_;
  }

 private:
  void check_declared(const Term& term) const;

  std::string logic_hint_;
  std::vector<FunctionDecl> declarations_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::vector<Term> assertions_;
};

}  // namespace smtgi
