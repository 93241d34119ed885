#include "smtgi/samples.hpp"

#include <charconv>
#include <optional>

#include "smtgi/error.hpp"

namespace smtgi {

std::string_view to_string(MachineKind kind) noexcept {
  switch (kind) {
    case MachineKind::Dfa: return "dfa";
    case MachineKind::Moore: return "moore";
    case MachineKind::Mealy: return "mealy";
  }
  return "?";
}

MachineKind parse_machine_kind(std::string_view text) {
  if (text == "dfa") return MachineKind::Dfa;
  if (text == "moore") return MachineKind::Moore;
  if (text == "mealy") return MachineKind::Mealy;
  throw InputError("unknown machine kind '" + std::string(text) + "'");
}

DfaSample::DfaSample(Alphabet alphabet, WordSet positives, WordSet negatives)
    : alphabet_(std::move(alphabet)), positives_(std::move(positives)), negatives_(std::move(negatives)) {
  for (const auto& w : positives_) check_symbols(w, alphabet_.size());
  for (const auto& w : negatives_) {
    check_symbols(w, alphabet_.size());
    if (positives_.contains(w)) {
      throw ConflictError("string \"" + format_word(w) + "\" is labeled both accept and reject");
    }
  }
}

std::vector<std::pair<Word, bool>> DfaSample::labeled() const {
  std::vector<std::pair<Word, bool>> out;
  out.reserve(positives_.size() + negatives_.size());
  auto pos = positives_.begin();
  auto neg = negatives_.begin();
  ShortLex less;
  while (pos != positives_.end() || neg != negatives_.end()) {
    if (neg == negatives_.end() || (pos != positives_.end() && less(*pos, *neg))) {
      out.emplace_back(*pos++, true);
    } else {
      out.emplace_back(*neg++, false);
    }
  }
  return out;
}

TraceSample::TraceSample(MachineKind kind, Alphabet inputs, Alphabet outputs, std::vector<Trace> traces)
    : kind_(kind), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  if (kind_ == MachineKind::Dfa) throw InputError("trace samples are for moore or mealy machines");
  std::optional<Symbol> initial_output;
  for (auto& trace : traces) {
    const std::size_t expected = trace.input.size() + (kind_ == MachineKind::Moore ? 1 : 0);
    if (trace.output.size() != expected) {
      throw InputError("trace \"" + format_word(trace.input) + "\" has " +
                       std::to_string(trace.output.size()) + " outputs, expected " +
                       std::to_string(expected));
    }
    check_symbols(trace.input, inputs_.size(), "input symbol");
    check_symbols(trace.output, outputs_.size(), "output symbol");
    if (kind_ == MachineKind::Moore) {
      if (initial_output && *initial_output != trace.output.front()) {
        throw ConflictError("moore traces disagree on the initial output (" +
                            std::to_string(*initial_output) + " vs " +
                            std::to_string(trace.output.front()) + ")");
      }
      initial_output = trace.output.front();
    }
    auto [it, inserted] = traces_.emplace(std::move(trace.input), trace.output);
    if (!inserted && it->second != trace.output) {
      throw ConflictError("input \"" + format_word(it->first) + "\" has conflicting outputs");
    }
  }
}

MachineKind kind_of(const Sample& sample) noexcept {
  if (const auto* traces = std::get_if<TraceSample>(&sample)) return traces->kind();
  return MachineKind::Dfa;
}

SampleMetrics metrics(const DfaSample& sample) {
  SampleMetrics m;
  for (const auto* set : {&sample.positives(), &sample.negatives()}) {
    m.count += set->size();
    for (const auto& w : *set) m.total_length += w.size();
  }
  return m;
}

SampleMetrics metrics(const TraceSample& sample) {
  SampleMetrics m;
  m.count = sample.size();
  for (const auto& [input, output] : sample.traces()) m.total_length += input.size();
  return m;
}

SampleMetrics metrics(const Sample& sample) {
  return std::visit([](const auto& s) { return metrics(s); }, sample);
}

namespace {

// Splits text into lines of whitespace-separated tokens, keeping 1-based
// line numbers and dropping blank lines.
struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
      std::size_t start = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t' && raw[pos] != '\r') ++pos;
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_count(const Line& line, std::size_t i, std::string_view what) {
  if (i >= line.tokens.size()) throw ParseError(line.number, "missing " + std::string(what));
  auto tok = line.tokens[i];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected a non-negative integer for " + std::string(what) +
                                      ", got '" + std::string(tok) + "'");
  }
  return value;
}

Symbol parse_symbol(const Line& line, std::size_t i, std::size_t alphabet_size, std::string_view what) {
  auto value = parse_count(line, i, what);
  if (value >= alphabet_size) {
    throw ParseError(line.number, std::string(what) + " " + std::to_string(value) +
                                      " outside alphabet of size " + std::to_string(alphabet_size));
  }
  return static_cast<Symbol>(value);
}

void expect_end(const Line& line, std::size_t consumed) {
  if (line.tokens.size() != consumed) {
    throw ParseError(line.number, "expected " + std::to_string(consumed) + " tokens, got " +
                                      std::to_string(line.tokens.size()));
  }
}

void append_word(std::string& out, WordView word) {
  out += std::to_string(word.size());
  for (Symbol s : word) {
    out += ' ';
    out += std::to_string(s);
  }
}

}  // namespace

DfaSample parse_dfa_sample(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header '<count> <alphabet_size>'");
  const Line& header = lines.front();
  const auto count = parse_count(header, 0, "string count");
  const auto alphabet_size = parse_count(header, 1, "alphabet size");
  expect_end(header, 2);
  if (lines.size() - 1 != count) {
    throw ParseError(header.number, "header announces " + std::to_string(count) + " strings, found " +
                                        std::to_string(lines.size() - 1));
  }
  WordSet positives, negatives;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    const auto label = parse_count(line, 0, "label");
    if (label > 1) throw ParseError(line.number, "label must be 0 or 1");
    const auto length = parse_count(line, 1, "string length");
    expect_end(line, 2 + length);
    Word word(length);
    for (std::size_t i = 0; i < length; ++i) word[i] = parse_symbol(line, 2 + i, alphabet_size, "symbol");
    (label == 1 ? positives : negatives).insert(std::move(word));
  }
  return DfaSample(Alphabet::numeric(alphabet_size), std::move(positives), std::move(negatives));
}

std::string serialize_dfa_sample(const DfaSample& sample) {
  auto labeled = sample.labeled();
  std::string out = std::to_string(labeled.size()) + ' ' + std::to_string(sample.alphabet().size()) + '\n';
  for (const auto& [word, accept] : labeled) {
    out += accept ? "1 " : "0 ";
    append_word(out, word);
    out += '\n';
  }
  return out;
}

TraceSample parse_trace_sample(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header '<kind> <input_size> <output_size>'");
  const Line& header = lines.front();
  MachineKind kind;
  if (header.tokens[0] == "mealy") {
    kind = MachineKind::Mealy;
  } else if (header.tokens[0] == "moore") {
    kind = MachineKind::Moore;
  } else {
    throw ParseError(header.number, "trace kind must be 'moore' or 'mealy'");
  }
  const auto inputs = parse_count(header, 1, "input alphabet size");
  const auto outputs = parse_count(header, 2, "output alphabet size");
  expect_end(header, 3);

  std::vector<Trace> traces;
  traces.reserve(lines.size() - 1);
  const bool moore = kind == MachineKind::Moore;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    Trace trace;
    std::size_t pos = 0;
    if (moore) trace.output.push_back(parse_symbol(line, pos++, outputs, "output symbol"));
    const auto length = parse_count(line, pos++, "trace length");
    if (line.tokens.size() != pos + 2 * length) {
      throw ParseError(line.number, "trace of length " + std::to_string(length) + " needs " +
                                        std::to_string(2 * length) + " symbols after the length, got " +
                                        std::to_string(line.tokens.size() - pos));
    }
    for (std::size_t i = 0; i < length; ++i) {
      trace.input.push_back(parse_symbol(line, pos++, inputs, "input symbol"));
      trace.output.push_back(parse_symbol(line, pos++, outputs, "output symbol"));
    }
    traces.push_back(std::move(trace));
  }
  return TraceSample(kind, Alphabet::numeric(inputs), Alphabet::numeric(outputs), std::move(traces));
}

std::string serialize_trace_sample(const TraceSample& sample) {
  const bool moore = sample.kind() == MachineKind::Moore;
  std::string out = std::string(to_string(sample.kind())) + ' ' +
                    std::to_string(sample.input_alphabet().size()) + ' ' +
                    std::to_string(sample.output_alphabet().size()) + '\n';
  for (const auto& [input, output] : sample.traces()) {
    std::size_t offset = 0;
    if (moore) {
      out += std::to_string(output.front()) + ' ';
      offset = 1;
    }
    out += std::to_string(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
      out += ' ' + std::to_string(input[i]) + ' ' + std::to_string(output[offset + i]);
    }
    out += '\n';
  }
  return out;
}

Sample parse_sample(std::string_view text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos &&
      (text.substr(start).starts_with("mealy") || text.substr(start).starts_with("moore"))) {
    return parse_trace_sample(text);
  }
  return parse_dfa_sample(text);
}

std::string serialize_sample(const Sample& sample) {
  if (const auto* dfa = std::get_if<DfaSample>(&sample)) return serialize_dfa_sample(*dfa);
  return serialize_trace_sample(std::get<TraceSample>(sample));
}

}  // namespace smtgi
