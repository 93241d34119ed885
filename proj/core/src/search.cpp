#include "smtgi/search.hpp"

#include <cstdio>

#include "smtgi/apt.hpp"

namespace smtgi {

namespace {

void validate(const Sample& sample, const LearnOptions& options) {
  const auto kind = kind_of(sample);
  if (kind != options.kind) {
    throw InputError("sample holds " + std::string(to_string(kind)) + " data but " +
                     std::string(to_string(options.kind)) + " was requested");
  }
  if (options.encoding == Encoding::Natural && kind != MachineKind::Dfa) {
    throw InputError("the natural encoding only supports dfa learning");
  }
  if (options.start_n < 1) throw InputError("start_n must be at least 1");
  if (options.max_n && *options.max_n < options.start_n) throw InputError("max_n is below start_n");
}

// Encodes one sample at many bounds, building the prefix tree once.
class Problem {
 public:
  Problem(const Sample& sample, const LearnOptions& options) : sample_(sample), options_(options) {
    validate(sample, options);
    if (options.encoding == Encoding::Expressive) apt_ = build_apt(sample);
  }

  Formula encode(std::size_t n) const {
    if (options_.encoding == Encoding::Natural) {
      return encode_natural(std::get<DfaSample>(sample_), n, options_.style);
    }
    if (apt_->kind() == MachineKind::Dfa) return encode_expressive(*apt_, n, options_.style);
    return encode_transducer(*apt_, n, options_.style);
  }

  SizeResult solve(std::size_t n) const {
    const auto start = std::chrono::steady_clock::now();
    Formula formula = encode(n);
    if (options_.on_formula) options_.on_formula(n, formula);
    SizeResult result;
    result.attempt.n = n;
    result.attempt.assertions = formula.assertions().size();
    Verdict verdict = check(formula, options_.solver);
    result.attempt.verdict = verdict.status;
    result.attempt.reason = verdict.reason;
    if (verdict.status == VerdictStatus::Sat) {
      Machine machine = decode_machine(*verdict.model, options_.kind, n, input_alphabet(), output_alphabet());
      if (auto report = is_consistent(machine, sample_); !report) {
        throw SolverError("decoded machine disagrees with the sample on \"" + format_word(*report.failing) +
                          "\": expected " + report.expected + ", got " + report.actual);
      }
      result.machine = std::move(machine);
    }
    result.attempt.wall = std::chrono::steady_clock::now() - start;
    return result;
  }

 private:
  const Alphabet& input_alphabet() const {
    if (const auto* dfa = std::get_if<DfaSample>(&sample_)) return dfa->alphabet();
    return std::get<TraceSample>(sample_).input_alphabet();
  }
  Alphabet output_alphabet() const {
    if (const auto* traces = std::get_if<TraceSample>(&sample_)) return traces->output_alphabet();
    return {};
  }

  const Sample& sample_;
  const LearnOptions& options_;
  std::optional<Apt> apt_;
};

}  // namespace

Formula encode(const Sample& sample, std::size_t n, const LearnOptions& options) {
  return Problem(sample, options).encode(n);
}

SizeResult learn_at_size(const Sample& sample, std::size_t n, const LearnOptions& options) {
  return Problem(sample, options).solve(n);
}

LearnResult learn_minimal(const Sample& sample, const LearnOptions& options) {
  Problem problem(sample, options);
  std::vector<SizeAttempt> stats;
  for (std::size_t n = options.start_n;; ++n) {
    if (options.max_n && n > *options.max_n) {
      throw BoundExceeded("no consistent machine with at most " + std::to_string(*options.max_n) + " states",
                          std::move(stats));
    }
    SizeResult result = problem.solve(n);
    stats.push_back(result.attempt);
    switch (result.attempt.verdict) {
      case VerdictStatus::Sat:
        return LearnResult{std::move(*result.machine), n, std::move(stats)};
      case VerdictStatus::Unsat:
        break;
      case VerdictStatus::Unknown:
        throw UnknownVerdict("solver returned unknown at n = " + std::to_string(n) + " (" + result.attempt.reason + ")",
                             std::move(stats));
    }
  }
}

std::string stats_csv(const std::vector<SizeAttempt>& stats) {
  std::string out = "n,verdict,time_ms,assertions\n";
  char ms[32];
  for (const auto& s : stats) {
    std::snprintf(ms, sizeof ms, "%.3f", s.wall.count() * 1000.0);
    out += std::to_string(s.n) + ',' + std::string(to_string(s.verdict)) + ',' + ms + ',' +
           std::to_string(s.assertions) + '\n';
  }
  return out;
}

}  // namespace smtgi
