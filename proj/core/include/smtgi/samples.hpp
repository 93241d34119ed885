#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smtgi/alphabet.hpp"

namespace smtgi {

enum class MachineKind { Dfa, Moore, Mealy };

std::string_view to_string(MachineKind kind) noexcept;
// Accepts "dfa", "moore", "mealy"; throws InputError otherwise.
MachineKind parse_machine_kind(std::string_view text);

using WordSet = std::set<Word, ShortLex>;

// Labeled strings: S+ must be accepted, S- rejected.
class DfaSample {
 public:
  DfaSample() = default;
  // Throws ConflictError if a word is in both sets, InputError on symbols
  // outside the alphabet.
  DfaSample(Alphabet alphabet, WordSet positives, WordSet negatives);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const WordSet& positives() const noexcept { return positives_; }
  const WordSet& negatives() const noexcept { return negatives_; }

  // Union of both classes with its label, in shortlex order.
  std::vector<std::pair<Word, bool>> labeled() const;

  bool operator==(const DfaSample&) const = default;

 private:
  Alphabet alphabet_;
  WordSet positives_;
  WordSet negatives_;
};

struct Trace {
  Word input;
  // Moore: y_0..y_|x| (one longer than the input); Mealy: y_1..y_|x|.
  Word output;

  bool operator==(const Trace&) const = default;
};

// Input/output traces for a Moore or Mealy machine. Traces are keyed by their
// input word, so identical duplicates collapse.
class TraceSample {
 public:
  TraceSample() = default;
  // Enforces the length relation (InputError), equal outputs for equal
  // inputs (ConflictError) and, for Moore, a shared initial output
  // (ConflictError).
  TraceSample(MachineKind kind, Alphabet inputs, Alphabet outputs, std::vector<Trace> traces);

  MachineKind kind() const noexcept { return kind_; }
  const Alphabet& input_alphabet() const noexcept { return inputs_; }
  const Alphabet& output_alphabet() const noexcept { return outputs_; }
  const std::map<Word, Word, ShortLex>& traces() const noexcept { return traces_; }
  std::size_t size() const noexcept { return traces_.size(); }

  bool operator==(const TraceSample&) const = default;

 private:
  MachineKind kind_ = MachineKind::Mealy;
  Alphabet inputs_;
  Alphabet outputs_;
  std::map<Word, Word, ShortLex> traces_;
};

using Sample = std::variant<DfaSample, TraceSample>;

MachineKind kind_of(const Sample& sample) noexcept;

struct SampleMetrics {
  std::size_t count = 0;         // |S|
  std::size_t total_length = 0;  // ||S||, summed input lengths

  bool operator==(const SampleMetrics&) const = default;
};

SampleMetrics metrics(const DfaSample& sample);
SampleMetrics metrics(const TraceSample& sample);
SampleMetrics metrics(const Sample& sample);

// Abbadingo-style: "<count> <alphabet_size>" then "<label> <len> <sym>..."
// per line with label 1 = accept, 0 = reject.
DfaSample parse_dfa_sample(std::string_view text);
std::string serialize_dfa_sample(const DfaSample& sample);

// "<kind> <input_size> <output_size>" then one trace per line:
//   mealy: "<len> <in_1> <out_1> ... <in_len> <out_len>"
//   moore: "<out_0> <len> <in_1> <out_1> ... <in_len> <out_len>"
TraceSample parse_trace_sample(std::string_view text);
std::string serialize_trace_sample(const TraceSample& sample);

// Dispatches on the header: a leading "moore"/"mealy" selects the trace
// format, anything else the labeled-string format.
Sample parse_sample(std::string_view text);
std::string serialize_sample(const Sample& sample);

}  // namespace smtgi
