#include "smtgi/formula.hpp"

#include "smtgi/error.hpp"

namespace smtgi {

Term Term::make(Op op, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{op, 0, {}, std::move(args)}));
}

Term Term::integer(std::int64_t value) {
  return Term(std::make_shared<const Node>(Node{Op::Int, value, {}, {}}));
}

Term Term::boolean(bool value) {
  return Term(std::make_shared<const Node>(Node{Op::Bool, value ? 1 : 0, {}, {}}));
}

Term Term::apply(std::string function, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Op::Apply, 0, std::move(function), std::move(args)}));
}

Term Term::eq(Term lhs, Term rhs) { return make(Op::Eq, {std::move(lhs), std::move(rhs)}); }
Term Term::lt(Term lhs, Term rhs) { return make(Op::Lt, {std::move(lhs), std::move(rhs)}); }
Term Term::ge(Term lhs, Term rhs) { return make(Op::Ge, {std::move(lhs), std::move(rhs)}); }
Term Term::conjunction(std::vector<Term> parts) { return make(Op::And, std::move(parts)); }
Term Term::disjunction(std::vector<Term> parts) { return make(Op::Or, std::move(parts)); }
Term Term::negation(Term inner) { return make(Op::Not, {std::move(inner)}); }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  return node_->op == other.node_->op && node_->value == other.node_->value &&
         node_->function == other.node_->function && node_->args == other.node_->args;
}

void Formula::declare(FunctionDecl decl) {
  if (by_name_.contains(decl.name)) throw InputError("function '" + decl.name + "' declared twice");
  by_name_.emplace(decl.name, declarations_.size());
  declarations_.push_back(std::move(decl));
}

const FunctionDecl* Formula::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &declarations_[it->second];
}

void Formula::check_declared(const Term& term) const {
  if (term.op() == Term::Op::Apply) {
    const auto* decl = find(term.function());
    if (!decl) throw InputError("function '" + term.function() + "' is not declared");
    if (decl->args.size() != term.args().size()) {
      throw InputError("function '" + term.function() + "' applied to " + std::to_string(term.args().size()) +
                       " arguments, declared with " + std::to_string(decl->args.size()));
    }
  }
  for (const auto& arg : term.args()) check_declared(arg);
}

void Formula::assert_that(Term term) {
  check_declared(term);
  assertions_.push_back(std::move(term));
}

}  // namespace smtgi
