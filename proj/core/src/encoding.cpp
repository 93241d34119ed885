#include "smtgi/encoding.hpp"

#include "smtgi/error.hpp"

namespace smtgi {

std::string_view to_string(AxiomStyle style) noexcept {
  return style == AxiomStyle::BooleanDisjunction ? "bool" : "ineq";
}

std::string_view to_string(Encoding encoding) noexcept {
  return encoding == Encoding::Natural ? "natural" : "expressive";
}

AxiomStyle parse_axiom_style(std::string_view text) {
  if (text == "bool") return AxiomStyle::BooleanDisjunction;
  if (text == "ineq") return AxiomStyle::LinearInequality;
  throw InputError("axiom style must be 'bool' or 'ineq', got '" + std::string(text) + "'");
}

Encoding parse_encoding(std::string_view text) {
  if (text == "natural") return Encoding::Natural;
  if (text == "expressive") return Encoding::Expressive;
  throw InputError("encoding must be 'natural' or 'expressive', got '" + std::string(text) + "'");
}

std::string node_constant(std::size_t node) { return "c_" + std::to_string(node); }

namespace {

Term lit(std::size_t v) { return Term::integer(static_cast<std::int64_t>(v)); }

// term takes one of the values 0..bound-1.
Term within(const Term& term, std::size_t bound, AxiomStyle style) {
  if (style == AxiomStyle::LinearInequality) {
    return Term::conjunction({Term::ge(term, lit(0)), Term::lt(term, lit(bound))});
  }
  std::vector<Term> options;
  options.reserve(bound);
  for (std::size_t j = 0; j < bound; ++j) options.push_back(Term::eq(term, lit(j)));
  return Term::disjunction(std::move(options));
}

Term delta(Term state, Symbol a) {
  return Term::apply(kTransitionFn, {std::move(state), Term::integer(a)});
}

void require_positive(std::size_t n) {
  if (n < 1) throw InputError("the state bound n must be at least 1");
}

void declare_nodes(Formula& f, const Apt& apt) {
  for (std::size_t q = 0; q < apt.size(); ++q) f.declare({node_constant(q), {}, Sort::Int});
}

Term node(std::size_t q) { return Term::apply(node_constant(q)); }

// Tree edges: delta(c_parent, a) = c_child.
void assert_edges(Formula& f, const Apt& apt) {
  for (std::size_t q = 1; q < apt.size(); ++q) {
    const auto& n = apt.nodes()[q];
    f.assert_that(Term::eq(delta(node(static_cast<std::size_t>(n.parent)), n.symbol), node(q)));
  }
}

void assert_node_ranges(Formula& f, const Apt& apt, std::size_t n, AxiomStyle style) {
  for (std::size_t q = 0; q < apt.size(); ++q) f.assert_that(within(node(q), n, style));
  f.assert_that(Term::eq(node(0), lit(0)));
}

}  // namespace

Formula encode_natural(const DfaSample& sample, std::size_t n, AxiomStyle style) {
  require_positive(n);
  const std::size_t sigma = sample.alphabet().size();
  Formula f;
  f.declare({kTransitionFn, {Sort::Int, Sort::Int}, Sort::Int});
  f.declare({kOutputFn, {Sort::Int}, Sort::Bool});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < sigma; ++a) {
      f.assert_that(within(delta(lit(i), static_cast<Symbol>(a)), n, style));
    }
  }
  for (const auto& [word, accept] : sample.labeled()) {
    Term state = lit(0);
    for (Symbol a : word) state = delta(std::move(state), a);
    f.assert_that(Term::eq(Term::apply(kOutputFn, {std::move(state)}), Term::boolean(accept)));
  }
  return f;
}

Formula encode_expressive(const Apt& apt, std::size_t n, AxiomStyle style) {
  require_positive(n);
  if (apt.kind() != MachineKind::Dfa) throw InputError("encode_expressive needs a dfa prefix tree");
  Formula f;
  f.declare({kTransitionFn, {Sort::Int, Sort::Int}, Sort::Int});
  f.declare({kOutputFn, {Sort::Int}, Sort::Bool});
  declare_nodes(f, apt);
  assert_edges(f, apt);
  for (std::size_t q = 0; q < apt.size(); ++q) {
    if (const auto& label = apt.nodes()[q].label) {
      f.assert_that(Term::eq(Term::apply(kOutputFn, {node(q)}), Term::boolean(*label != 0)));
    }
  }
  assert_node_ranges(f, apt, n, style);
  return f;
}

Formula encode_transducer(const Apt& apt, std::size_t n, AxiomStyle style) {
  require_positive(n);
  const bool moore = apt.kind() == MachineKind::Moore;
  if (!moore && apt.kind() != MachineKind::Mealy) {
    throw InputError("encode_transducer needs a moore or mealy prefix tree");
  }
  const std::size_t sigma = apt.input_alphabet().size();
  const std::size_t outputs = apt.output_alphabet().size();
  Formula f;
  f.declare({kTransitionFn, {Sort::Int, Sort::Int}, Sort::Int});
  if (moore) {
    f.declare({kOutputFn, {Sort::Int}, Sort::Int});
  } else {
    f.declare({kOutputFn, {Sort::Int, Sort::Int}, Sort::Int});
  }
  declare_nodes(f, apt);
  assert_edges(f, apt);
  if (moore) {
    if (const auto& root = apt.moore_root_output()) {
      f.assert_that(Term::eq(Term::apply(kOutputFn, {node(0)}), lit(static_cast<std::size_t>(*root))));
    }
    for (std::size_t q = 1; q < apt.size(); ++q) {
      if (const auto& label = apt.nodes()[q].label) {
        f.assert_that(Term::eq(Term::apply(kOutputFn, {node(q)}), lit(static_cast<std::size_t>(*label))));
      }
    }
  } else {
    for (std::size_t q = 1; q < apt.size(); ++q) {
      const auto& nd = apt.nodes()[q];
      f.assert_that(Term::eq(
          Term::apply(kOutputFn, {node(static_cast<std::size_t>(nd.parent)), Term::integer(nd.symbol)}),
          lit(static_cast<std::size_t>(*nd.label))));
    }
  }
  assert_node_ranges(f, apt, n, style);
  for (std::size_t i = 0; i < n; ++i) {
    if (moore) {
      f.assert_that(within(Term::apply(kOutputFn, {lit(i)}), outputs, style));
      continue;
    }
    for (std::size_t a = 0; a < sigma; ++a) {
      f.assert_that(within(Term::apply(kOutputFn, {lit(i), lit(a)}), outputs, style));
    }
  }
  return f;
}

EncodingStats stats(const Formula& formula, std::size_t n) {
  return {n, formula.assertions().size(), formula.declarations().size()};
}

}  // namespace smtgi
