#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "smtgi/automata.hpp"
#include "smtgi/error.hpp"

namespace smtgi {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string tok; words >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t to_index(const Line& line, const std::string& tok, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected a non-negative integer for " + std::string(what) + ", got '" + tok + "'");
  }
  return value;
}

State to_state(const Line& line, const std::string& tok, std::size_t n) {
  auto q = to_index(line, tok, "state");
  if (q >= n) throw ParseError(line.number, "state " + tok + " outside [0, " + std::to_string(n) + ")");
  return static_cast<State>(q);
}

Symbol to_symbol(const Line& line, const Alphabet& alphabet, const std::string& tok) {
  try {
    return alphabet.index(tok);
  } catch (const InputError& e) {
    throw ParseError(line.number, e.what());
  }
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " + std::to_string(arity - 1) + " arguments");
  }
}

}  // namespace

Machine parse_machine(std::string_view text) {
  const auto lines = split_lines(text);

  std::optional<MachineKind> kind;
  std::optional<Alphabet> inputs, outputs;
  std::optional<std::size_t> states;
  for (const auto& line : lines) {
    const auto& key = line.tokens[0];
    std::vector<std::string> args(line.tokens.begin() + 1, line.tokens.end());
    auto once = [&](bool seen) {
      if (seen) throw ParseError(line.number, "duplicate '" + key + "' line");
    };
    try {
      if (key == "kind") {
        once(kind.has_value());
        expect_arity(line, 2);
        kind = parse_machine_kind(args[0]);
      } else if (key == "inputs") {
        once(inputs.has_value());
        inputs = Alphabet(std::move(args));
      } else if (key == "outputs") {
        once(outputs.has_value());
        outputs = Alphabet(std::move(args));
      } else if (key == "states") {
        once(states.has_value());
        expect_arity(line, 2);
        states = to_index(line, args[0], "state count");
      }
    } catch (const InputError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (!kind) throw ParseError(0, "missing 'kind' line");
  if (!inputs || inputs->empty()) throw ParseError(0, "missing or empty 'inputs' line");
  if (!states || *states == 0) throw ParseError(0, "missing 'states' line or zero states");
  const bool transducer = *kind != MachineKind::Dfa;
  if (transducer && (!outputs || outputs->empty())) throw ParseError(0, "transducers need an 'outputs' line");
  if (!transducer && outputs) throw ParseError(0, "'outputs' is only valid for moore and mealy machines");

  const std::size_t n = *states;
  const std::size_t sigma = inputs->size();
  std::vector<std::optional<State>> next(n * sigma);
  std::vector<std::optional<Symbol>> trans_out(n * sigma);
  std::vector<std::optional<Symbol>> state_out(n);
  std::vector<bool> accepting(n, false);
  bool seen_accepting = false;
  bool seen_initial = false;

  for (const auto& line : lines) {
    const auto& key = line.tokens[0];
    if (key == "kind" || key == "inputs" || key == "outputs" || key == "states") continue;
    if (key == "initial") {
      if (seen_initial) throw ParseError(line.number, "duplicate 'initial' line");
      seen_initial = true;
      expect_arity(line, 2);
      if (to_state(line, line.tokens[1], n) != 0) throw ParseError(line.number, "the initial state must be 0");
    } else if (key == "accepting") {
      if (*kind != MachineKind::Dfa) throw ParseError(line.number, "'accepting' is only valid for dfa");
      if (seen_accepting) throw ParseError(line.number, "duplicate 'accepting' line");
      seen_accepting = true;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) accepting[to_state(line, line.tokens[i], n)] = true;
    } else if (key == "output") {
      if (*kind != MachineKind::Moore) throw ParseError(line.number, "'output' is only valid for moore");
      expect_arity(line, 3);
      auto q = to_state(line, line.tokens[1], n);
      if (state_out[q]) throw ParseError(line.number, "duplicate output for state " + line.tokens[1]);
      state_out[q] = to_symbol(line, *outputs, line.tokens[2]);
    } else if (key == "trans") {
      expect_arity(line, *kind == MachineKind::Mealy ? 5 : 4);
      auto src = to_state(line, line.tokens[1], n);
      auto a = to_symbol(line, *inputs, line.tokens[2]);
      auto dst = to_state(line, line.tokens[3], n);
      const auto slot = static_cast<std::size_t>(src) * sigma + static_cast<std::size_t>(a);
      if (next[slot]) {
        throw ParseError(line.number, "duplicate transition from " + line.tokens[1] + " on '" + line.tokens[2] + "'");
      }
      next[slot] = dst;
      if (*kind == MachineKind::Mealy) trans_out[slot] = to_symbol(line, *outputs, line.tokens[4]);
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }

  std::vector<State> table(n * sigma);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!next[i]) {
      throw ParseError(0, "missing transition from state " + std::to_string(i / sigma) + " on '" +
                              inputs->name(static_cast<Symbol>(i % sigma)) + "'");
    }
    table[i] = *next[i];
  }
  TransitionTable transitions(*inputs, n, std::move(table));
  switch (*kind) {
    case MachineKind::Dfa:
      return Dfa(std::move(transitions), std::move(accepting));
    case MachineKind::Moore: {
      std::vector<Symbol> outs(n);
      for (std::size_t q = 0; q < n; ++q) {
        if (!state_out[q]) throw ParseError(0, "missing output for state " + std::to_string(q));
        outs[q] = *state_out[q];
      }
      return MooreMachine(std::move(transitions), *outputs, std::move(outs));
    }
    case MachineKind::Mealy: {
      std::vector<Symbol> outs(n * sigma);
      for (std::size_t i = 0; i < outs.size(); ++i) outs[i] = *trans_out[i];
      return MealyMachine(std::move(transitions), *outputs, std::move(outs));
    }
  }
  throw ParseError(0, "unreachable");
}

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& name : names) out += ' ' + name;
  return out;
}

}  // namespace

std::string serialize_machine(const Machine& machine) {
  const auto kind = kind_of(machine);
  const auto& inputs = input_alphabet(machine);
  const auto n = size_of(machine);
  std::string out = "kind " + std::string(to_string(kind)) + '\n';
  out += "inputs" + join(inputs.symbols()) + '\n';
  const Alphabet* outputs = nullptr;
  if (const auto* moore = std::get_if<MooreMachine>(&machine)) outputs = &moore->output_alphabet();
  if (const auto* mealy = std::get_if<MealyMachine>(&machine)) outputs = &mealy->output_alphabet();
  if (outputs) out += "outputs" + join(outputs->symbols()) + '\n';
  out += "states " + std::to_string(n) + '\n';
  out += "initial 0\n";
  if (const auto* dfa = std::get_if<Dfa>(&machine)) {
    out += "accepting";
    for (std::size_t q = 0; q < n; ++q)
      if (dfa->accepting(static_cast<State>(q))) out += ' ' + std::to_string(q);
    out += '\n';
  }
  if (const auto* moore = std::get_if<MooreMachine>(&machine)) {
    for (std::size_t q = 0; q < n; ++q) {
      out += "output " + std::to_string(q) + ' ' + outputs->name(moore->output(static_cast<State>(q))) + '\n';
    }
  }
  const auto* mealy = std::get_if<MealyMachine>(&machine);
  const auto& t = std::visit([](const auto& m) -> const TransitionTable& { return m.transitions(); }, machine);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < inputs.size(); ++a) {
      const auto s = static_cast<State>(q);
      const auto sym = static_cast<Symbol>(a);
      out += "trans " + std::to_string(q) + ' ' + inputs.name(sym) + ' ' + std::to_string(t.next(s, sym));
      if (mealy) out += ' ' + outputs->name(mealy->output(s, sym));
      out += '\n';
    }
  }
  return out;
}

std::string to_dot(const Machine& machine) {
  const auto& inputs = input_alphabet(machine);
  const auto n = size_of(machine);
  const auto& t = std::visit([](const auto& m) -> const TransitionTable& { return m.transitions(); }, machine);
  std::string out = "digraph machine {\n  rankdir=LR;\n  __start [shape=point];\n  __start -> s0;\n";
  for (std::size_t q = 0; q < n; ++q) {
    const auto s = static_cast<State>(q);
    std::string shape = "circle";
    std::string label = std::to_string(q);
    if (const auto* dfa = std::get_if<Dfa>(&machine); dfa && dfa->accepting(s)) shape = "doublecircle";
    if (const auto* moore = std::get_if<MooreMachine>(&machine)) {
      label += " / " + moore->output_alphabet().name(moore->output(s));
    }
    out += "  s" + std::to_string(q) + " [shape=" + shape + ", label=\"" + label + "\"];\n";
  }
  const auto* mealy = std::get_if<MealyMachine>(&machine);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < inputs.size(); ++a) {
      const auto s = static_cast<State>(q);
      const auto sym = static_cast<Symbol>(a);
      std::string label = inputs.name(sym);
      if (mealy) label += " / " + mealy->output_alphabet().name(mealy->output(s, sym));
      out += "  s" + std::to_string(q) + " -> s" + std::to_string(t.next(s, sym)) + " [label=\"" + label + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace smtgi
