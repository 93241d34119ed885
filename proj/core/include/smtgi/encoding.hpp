#pragma once

#include <cstddef>
#include <string>

#include "smtgi/apt.hpp"
#include "smtgi/formula.hpp"
#include "smtgi/samples.hpp"

namespace smtgi {

// How "at most n states" is stated: as a disjunction of equalities over
// 0..n-1, or as the pair of inequalities 0 <= t < n.
enum class AxiomStyle { BooleanDisjunction, LinearInequality };

enum class Encoding { Natural, Expressive };

std::string_view to_string(AxiomStyle style) noexcept;
std::string_view to_string(Encoding encoding) noexcept;
// "bool"/"ineq" and "natural"/"expressive"; InputError otherwise.
AxiomStyle parse_axiom_style(std::string_view text);
Encoding parse_encoding(std::string_view text);

// Names shared by every encoding and by model decoding.
inline constexpr const char* kTransitionFn = "delta";
inline constexpr const char* kOutputFn = "out";
std::string node_constant(std::size_t node);

struct EncodingStats {
  std::size_t n = 0;
  std::size_t assertion_count = 0;
  std::size_t declaration_count = 0;
};

// delta: Int x Int -> Int, out: Int -> Bool. Per (state, symbol) a range
// axiom on delta; per sampled string, out applied to the nested run of
// delta from state 0 equals the label.
Formula encode_natural(const DfaSample& sample, std::size_t n, AxiomStyle style);

// One integer constant per tree node stands for the node's target state.
// Tree edges pin delta, labeled nodes pin out, node constants are
// range-restricted and the root is pinned to 0. delta itself is left
// unconstrained off the tree.
Formula encode_expressive(const Apt& apt, std::size_t n, AxiomStyle style);

// As encode_expressive with out over output indices: Int -> Int for Moore
// (per labeled node, plus the root output), Int x Int -> Int for Mealy (per
// tree edge). out is additionally range-restricted to [0, |outputs|).
Formula encode_transducer(const Apt& apt, std::size_t n, AxiomStyle style);

EncodingStats stats(const Formula& formula, std::size_t n);

}  // namespace smtgi
