#include "smtgi/solver.hpp"

#include <cstdlib>
#include <sstream>

#include "process.hpp"
#include "smtgi/encoding.hpp"
#include "smtgi/error.hpp"
#include "smtgi/smtlib.hpp"

namespace smtgi {

SolverConfig SolverConfig::from_command_line(std::string_view command_line) {
  SolverConfig config;
  std::istringstream in{std::string(command_line)};
  for (std::string word; in >> word;) config.command.push_back(std::move(word));
  if (config.command.empty()) throw InputError("empty solver command");
  return config;
}

std::optional<SolverConfig> SolverConfig::from_environment() {
  const char* env = std::getenv("SMT_SOLVER_CMD");
  if (!env || std::string_view(env).find_first_not_of(" \t") == std::string_view::npos) return std::nullopt;
  return from_command_line(env);
}

std::string_view to_string(VerdictStatus status) noexcept {
  switch (status) {
    case VerdictStatus::Sat: return "sat";
    case VerdictStatus::Unsat: return "unsat";
    case VerdictStatus::Unknown: return "unknown";
  }
  return "?";
}

Model::Model(std::unique_ptr<detail::ChildProcess> process, std::chrono::milliseconds timeout)
    : process_(std::move(process)), timeout_(timeout) {}

Model::~Model() = default;

namespace {

std::optional<std::int64_t> as_integer(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom.empty() || e.atom.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoll(e.atom);
  }
  if (e.items.size() == 2 && !e.items[0].is_list && e.items[0].atom == "-") {
    if (auto inner = as_integer(e.items[1])) return -*inner;
  }
  return std::nullopt;
}

}  // namespace

std::vector<ModelValue> Model::eval(std::span<const Term> terms) {
  if (terms.empty()) return {};
  std::string request = "(get-value (";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) request += ' ';
    request += to_smtlib(terms[i]);
  }
  request += "))\n";
  std::string response;
  if (!process_->exchange(request, detail::ChildProcess::Clock::now() + timeout_, response)) {
    throw SolverError("solver timed out answering get-value");
  }
  const SExpr reply = parse_sexpr(response);
  auto fail = [&](const std::string& what) -> std::vector<ModelValue> {
    throw SolverError("unexpected get-value response (" + what + "): " + response.substr(0, 300));
  };
  if (!reply.is_list || reply.items.size() != terms.size()) return fail("wrong arity");
  std::vector<ModelValue> values;
  values.reserve(terms.size());
  for (const auto& pair : reply.items) {
    if (!pair.is_list || pair.items.size() != 2) return fail("expected (term value) pairs");
    const SExpr& v = pair.items[1];
    ModelValue value;
    if (!v.is_list && (v.atom == "true" || v.atom == "false")) {
      value.is_bool = true;
      value.boolean = v.atom == "true";
    } else if (auto i = as_integer(v)) {
      value.integer = *i;
    } else {
      return fail("value '" + v.to_string() + "' is neither Int nor Bool");
    }
    values.push_back(value);
  }
  return values;
}

ModelValue Model::eval(const Term& term) { return eval(std::span<const Term>(&term, 1)).front(); }

Verdict check(const Formula& formula, const SolverConfig& config) {
  if (config.timeout.count() <= 0) throw InputError("solver timeout must be positive");
  auto process = std::make_unique<detail::ChildProcess>(config.command);
  const auto deadline = detail::ChildProcess::Clock::now() + config.timeout;
  const std::string script = "(set-option :produce-models true)\n" + emit_smtlib(formula, config.logic_override);

  std::string response;
  if (!process->exchange(script, deadline, response)) return {VerdictStatus::Unknown, nullptr, "timeout"};
  if (response == "sat") {
    return {VerdictStatus::Sat, std::shared_ptr<Model>(new Model(std::move(process), config.timeout)), {}};
  }
  if (response == "unsat") return {VerdictStatus::Unsat, nullptr, {}};
  if (response == "unknown") {
    std::string reason = "unknown";
    std::string info;
    if (process->exchange("(get-info :reason-unknown)\n", detail::ChildProcess::Clock::now() + std::chrono::seconds(5),
                          info)) {
      reason = info;
    }
    return {VerdictStatus::Unknown, nullptr, reason};
  }
  throw SolverError("solver answered '" + response.substr(0, 300) + "' to check-sat; transcript:\n" +
                    process->transcript());
}

Machine decode_machine(Model& model, MachineKind kind, std::size_t n, const Alphabet& inputs, const Alphabet& outputs) {
  if (n < 1) throw InputError("cannot decode a machine with zero states");
  const std::size_t sigma = inputs.size();
  std::vector<Term> queries;
  queries.reserve(2 * n * sigma + n);
  auto lit = [](std::size_t v) { return Term::integer(static_cast<std::int64_t>(v)); };
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < sigma; ++a) queries.push_back(Term::apply(kTransitionFn, {lit(q), lit(a)}));
  const std::size_t lambda_start = queries.size();
  if (kind == MachineKind::Mealy) {
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t a = 0; a < sigma; ++a) queries.push_back(Term::apply(kOutputFn, {lit(q), lit(a)}));
  } else {
    for (std::size_t q = 0; q < n; ++q) queries.push_back(Term::apply(kOutputFn, {lit(q)}));
  }
  const auto values = model.eval(queries);

  std::vector<State> table(n * sigma);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto v = values[i].integer;
    table[i] = (values[i].is_bool || v < 0 || static_cast<std::size_t>(v) >= n) ? 0 : static_cast<State>(v);
  }
  TransitionTable transitions(inputs, n, std::move(table));

  auto output_at = [&](std::size_t i) -> Symbol {
    const auto& v = values[lambda_start + i];
    if (v.is_bool || v.integer < 0 || static_cast<std::size_t>(v.integer) >= outputs.size()) return 0;
    return static_cast<Symbol>(v.integer);
  };
  switch (kind) {
    case MachineKind::Dfa: {
      std::vector<bool> accepting(n);
      for (std::size_t q = 0; q < n; ++q) {
        const auto& v = values[lambda_start + q];
        if (!v.is_bool) throw SolverError("lambda evaluated to a non-boolean in a dfa model");
        accepting[q] = v.boolean;
      }
      return Dfa(std::move(transitions), std::move(accepting));
    }
    case MachineKind::Moore: {
      std::vector<Symbol> outs(n);
      for (std::size_t q = 0; q < n; ++q) outs[q] = output_at(q);
      return MooreMachine(std::move(transitions), outputs, std::move(outs));
    }
    case MachineKind::Mealy: {
      std::vector<Symbol> outs(n * sigma);
      for (std::size_t i = 0; i < outs.size(); ++i) outs[i] = output_at(i);
      return MealyMachine(std::move(transitions), outputs, std::move(outs));
    }
  }
  throw InputError("unknown machine kind");
}

}  // namespace smtgi
