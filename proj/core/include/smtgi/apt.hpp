#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smtgi/alphabet.hpp"
#include "smtgi/samples.hpp"

namespace smtgi {

// Augmented prefix tree: one node per distinct prefix of the sampled inputs,
// numbered breadth-first with children in symbol order (equivalently, nodes
// sorted by their prefix in shortlex order). Node 0 is the root.
//
// Labels: for DFA samples, 1/0 on nodes whose prefix is an accepted/rejected
// string; for traces, the output index produced on entering the node (every
// node but the root). A Moore root's initial output is kept separately.
class Apt {
 public:
  static constexpr int kNone = -1;

  struct Node {
    int parent = kNone;
    Symbol symbol = kNone;  // label of the incoming edge
    std::size_t depth = 0;
    std::optional<int> label;
  };

  MachineKind kind() const noexcept { return kind_; }
  const Alphabet& input_alphabet() const noexcept { return inputs_; }
  const Alphabet& output_alphabet() const noexcept { return outputs_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(int q) const { return nodes_.at(static_cast<std::size_t>(q)); }
  // kNone when the edge is absent.
  int child(int q, Symbol a) const noexcept {
    return children_[static_cast<std::size_t>(q) * inputs_.size() + static_cast<std::size_t>(a)];
  }
  std::optional<int> find(WordView word) const;
  Word prefix(int q) const;
  std::size_t labeled_count() const noexcept;
  const std::optional<Symbol>& moore_root_output() const noexcept { return moore_root_output_; }

  friend Apt build_apt(const DfaSample& sample);
  friend Apt build_apt(const TraceSample& sample);

 private:
  Apt(MachineKind kind, Alphabet inputs, Alphabet outputs);
  int add_child(int parent, Symbol a);
  void assign_label(int q, int label);
  void renumber_breadth_first();

  MachineKind kind_;
  Alphabet inputs_;
  Alphabet outputs_;
  std::vector<Node> nodes_;
  std::vector<int> children_;
  std::optional<Symbol> moore_root_output_;
};

Apt build_apt(const DfaSample& sample);
// Throws ConflictError naming the prefix when two traces assign different
// outputs to the same node.
Apt build_apt(const TraceSample& sample);
Apt build_apt(const Sample& sample);

// Node label = prefix; fill color by acceptance (DFA) or output.
std::string to_dot(const Apt& apt);

}  // namespace smtgi
