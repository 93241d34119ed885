#include "smtgi/apt.hpp"

#include <deque>

#include "smtgi/error.hpp"

namespace smtgi {

Apt::Apt(MachineKind kind, Alphabet inputs, Alphabet outputs)
    : kind_(kind), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  nodes_.emplace_back();
  children_.assign(inputs_.size(), kNone);
}

int Apt::add_child(int parent, Symbol a) {
  const auto slot = static_cast<std::size_t>(parent) * inputs_.size() + static_cast<std::size_t>(a);
  if (children_[slot] != kNone) return children_[slot];
  const int q = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{parent, a, nodes_[static_cast<std::size_t>(parent)].depth + 1, std::nullopt});
  children_[slot] = q;
  children_.resize(children_.size() + inputs_.size(), kNone);
  return q;
}

void Apt::assign_label(int q, int label) {
  auto& node = nodes_[static_cast<std::size_t>(q)];
  if (node.label && *node.label != label) {
    throw ConflictError("prefix \"" + format_word(prefix(q)) + "\" is assigned outputs " +
                        std::to_string(*node.label) + " and " + std::to_string(label));
  }
  node.label = label;
}

void Apt::renumber_breadth_first() {
  const std::size_t sigma = inputs_.size();
  std::vector<int> order;
  order.reserve(nodes_.size());
  std::vector<int> fresh(nodes_.size(), kNone);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    fresh[static_cast<std::size_t>(q)] = static_cast<int>(order.size());
    order.push_back(q);
    for (std::size_t a = 0; a < sigma; ++a) {
      if (int c = children_[static_cast<std::size_t>(q) * sigma + a]; c != kNone) queue.push_back(c);
    }
  }
  std::vector<Node> nodes(nodes_.size());
  std::vector<int> children(children_.size(), kNone);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto old = static_cast<std::size_t>(order[i]);
    nodes[i] = nodes_[old];
    if (nodes[i].parent != kNone) nodes[i].parent = fresh[static_cast<std::size_t>(nodes[i].parent)];
    for (std::size_t a = 0; a < sigma; ++a) {
      if (int c = children_[old * sigma + a]; c != kNone) children[i * sigma + a] = fresh[static_cast<std::size_t>(c)];
    }
  }
  nodes_ = std::move(nodes);
  children_ = std::move(children);
}

std::optional<int> Apt::find(WordView word) const {
  int q = 0;
  for (Symbol a : word) {
    if (!inputs_.contains(a)) return std::nullopt;
    q = child(q, a);
    if (q == kNone) return std::nullopt;
  }
  return q;
}

Word Apt::prefix(int q) const {
  Word word(node(q).depth);
  for (auto i = word.size(); i > 0; --i) {
    const auto& n = nodes_[static_cast<std::size_t>(q)];
    word[i - 1] = n.symbol;
    q = n.parent;
  }
  return word;
}

std::size_t Apt::labeled_count() const noexcept {
  std::size_t count = 0;
  for (const auto& n : nodes_) count += n.label.has_value();
  return count;
}

Apt build_apt(const DfaSample& sample) {
  Apt apt(MachineKind::Dfa, sample.alphabet(), Alphabet{});
  for (const auto& [word, accept] : sample.labeled()) {
    int q = 0;
    for (Symbol a : word) q = apt.add_child(q, a);
    apt.assign_label(q, accept ? 1 : 0);
  }
  apt.renumber_breadth_first();
  return apt;
}

Apt build_apt(const TraceSample& sample) {
  Apt apt(sample.kind(), sample.input_alphabet(), sample.output_alphabet());
  const std::size_t offset = sample.kind() == MachineKind::Moore ? 1 : 0;
  for (const auto& [input, output] : sample.traces()) {
    if (offset) apt.moore_root_output_ = output.front();
    int q = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
      q = apt.add_child(q, input[i]);
      apt.assign_label(q, output[i + offset]);
    }
  }
  apt.renumber_breadth_first();
  return apt;
}

Apt build_apt(const Sample& sample) {
  return std::visit([](const auto& s) { return build_apt(s); }, sample);
}

std::string to_dot(const Apt& apt) {
  static constexpr const char* kPalette[] = {"lightblue", "palegreen", "khaki", "plum", "lightsalmon", "lightgray"};
  std::string out = "digraph apt {\n  rankdir=LR;\n  node [style=filled];\n";
  for (std::size_t q = 0; q < apt.size(); ++q) {
    const auto& n = apt.nodes()[q];
    std::string label = n.depth == 0 ? "<eps>" : format_word(apt.prefix(static_cast<int>(q)), &apt.input_alphabet());
    std::string color = "white";
    std::string shape = "circle";
    if (n.label) {
      if (apt.kind() == MachineKind::Dfa) {
        color = *n.label ? "palegreen" : "lightcoral";
        if (*n.label) shape = "doublecircle";
      } else {
        color = kPalette[static_cast<std::size_t>(*n.label) % std::size(kPalette)];
        label += " / " + apt.output_alphabet().name(*n.label);
      }
    }
    if (q == 0 && apt.moore_root_output()) label += " / " + apt.output_alphabet().name(*apt.moore_root_output());
    out += "  n" + std::to_string(q) + " [shape=" + shape + ", fillcolor=" + color + ", label=\"" + label + "\"];\n";
    if (n.parent != Apt::kNone) {
      out += "  n" + std::to_string(n.parent) + " -> n" + std::to_string(q) + " [label=\"" +
             apt.input_alphabet().name(n.symbol) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace smtgi
