#include "cli.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "smtgi/smtgi.hpp"

namespace smtgi::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

SolverConfig resolve_solver(const std::string& flag, double timeout_s) {
  SolverConfig config;
  if (!flag.empty()) {
    config = SolverConfig::from_command_line(flag);
  } else if (auto env = SolverConfig::from_environment()) {
    config = *env;
  } else {
    throw InputError("no solver given: pass --solver \"<command>\" or set SMT_SOLVER_CMD");
  }
  if (timeout_s <= 0) throw InputError("--timeout-s must be positive");
  config.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0));
  return config;
}

std::string format_ms(std::chrono::duration<double> d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", d.count() * 1000.0);
  return buf;
}

struct LearnFlags {
  std::string kind;
  std::string encoding = "expressive";
  std::string axioms = "bool";
  std::string in;
  std::string out;
  std::string solver;
  double timeout_s = 600;
  std::size_t start_n = 1;
  std::size_t max_n = 0;
  std::string emit_smt;
  std::string stats;
  std::string dot;
};

int cmd_learn(const LearnFlags& f, std::ostream& out) {
  const Sample sample = parse_sample(read_file(f.in));
  LearnOptions options;
  options.kind = f.kind.empty() ? kind_of(sample) : parse_machine_kind(f.kind);
  options.encoding = parse_encoding(f.encoding);
  options.style = parse_axiom_style(f.axioms);
  options.start_n = f.start_n;
  if (f.max_n > 0) options.max_n = f.max_n;
  options.solver = resolve_solver(f.solver, f.timeout_s);
  if (!f.emit_smt.empty()) {
    fs::create_directories(f.emit_smt);
    const std::string base = fs::path(f.in).stem().string();
    const auto logic = options.solver.logic_override;
    options.on_formula = [dir = f.emit_smt, base, logic](std::size_t n, const Formula& formula) {
      write_file((fs::path(dir) / (base + "-n" + std::to_string(n) + ".smt2")).string(), emit_smtlib(formula, logic));
    };
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    LearnResult result = learn_minimal(sample, options);
    const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
    write_file(f.out, serialize_machine(result.machine));
    if (!f.stats.empty()) write_file(f.stats, stats_csv(result.stats));
    if (!f.dot.empty()) write_file(f.dot, to_dot(result.machine));
    out << "minimal_n " << result.minimal_n << '\n';
    out << "time_s " << total.count() << '\n';
    return kOk;
  } catch (const SearchAborted& e) {
    if (!f.stats.empty()) write_file(f.stats, stats_csv(e.stats()));
    throw;
  }
}

struct GenFlags {
  std::size_t k = 0;
  std::size_t max_len = 100;
  std::string out;
  std::string dfa_out;
  std::size_t states = 1, inputs = 1, outputs = 1;
  std::uint64_t seed = 0;
  std::string machine;
  std::size_t extra_depth = 0;
  int moore_initial = -1;
};

int cmd_gen_mod(const GenFlags& f, std::ostream& out) {
  if (f.k < 1) throw InputError("--k must be at least 1");
  emit(f.out, serialize_dfa_sample(gen_mod_sample({f.k, f.max_len})), out);
  if (!f.dfa_out.empty()) write_file(f.dfa_out, serialize_machine(gen_mod_dfa(f.k)));
  return kOk;
}

int cmd_gen_random(const GenFlags& f, std::ostream& out) {
  emit(f.out, serialize_machine(gen_random_mealy({f.states, f.inputs, f.outputs, f.seed})), out);
  return kOk;
}

int cmd_gen_charsample(const GenFlags& f, std::ostream& out) {
  const Machine machine = parse_machine(read_file(f.machine));
  const auto* mealy = std::get_if<MealyMachine>(&machine);
  if (!mealy) throw InputError("characterizing samples are generated from mealy machines");
  TraceSample sample = characterizing_sample(*mealy, f.extra_depth);
  if (f.moore_initial >= 0) sample = as_moore_sample(sample, f.moore_initial);
  emit(f.out, serialize_trace_sample(sample), out);
  return kOk;
}

int cmd_check_equiv(const std::string& a, const std::string& b, std::ostream& out) {
  const Machine lhs = parse_machine(read_file(a));
  const Machine rhs = parse_machine(read_file(b));
  const auto result = equivalent(lhs, rhs);
  if (result) {
    out << "equivalent\n";
    return kOk;
  }
  out << "not equivalent\ncounterexample " << format_word(*result.counterexample, &input_alphabet(lhs)) << '\n';
  return kNotEquivalent;
}

struct OracleFlags {
  std::string in;
  std::string kind;
  std::size_t max_n = 4;
  std::uint64_t max_machines = 50'000'000;
  std::string out;
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
  const Sample sample = parse_sample(read_file(f.in));
  const auto kind = f.kind.empty() ? kind_of(sample) : parse_machine_kind(f.kind);
  auto result = brute_force_minimal(sample, kind, {f.max_n, f.max_machines});
  if (!result) {
    out << "no consistent machine with at most " << f.max_n << " states\n";
    return kSearchFailed;
  }
  if (!f.out.empty()) write_file(f.out, serialize_machine(result->machine));
  out << "minimal_n " << result->minimal_n << '\n';
  return kOk;
}

struct BenchFlags {
  std::string suite = "mod";
  std::size_t k_min = 1;
  std::size_t k_max = 12;
  std::size_t max_len = 100;
  std::size_t repeats = 5;
  std::string configs = "natural-bool,natural-ineq,expressive-bool,expressive-ineq";
  std::string out;
  std::string solver;
  double timeout_s = 600;
  std::size_t jobs = 1;
};

struct BenchConfig {
  Encoding encoding;
  AxiomStyle style;
};

std::vector<BenchConfig> parse_configs(const std::string& list) {
  std::vector<BenchConfig> configs;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("config '" + item + "' is not <encoding>-<axioms>");
    configs.push_back({parse_encoding(item.substr(0, dash)), parse_axiom_style(item.substr(dash + 1))});
  }
  if (configs.empty()) throw InputError("--configs is empty");
  return configs;
}

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  if (f.suite != "mod") throw InputError("unknown suite '" + f.suite + "' (available: mod)");
  if (f.k_min < 1 || f.k_max < f.k_min) throw InputError("need 1 <= --k-min <= --k-max");
  if (f.repeats < 1 || f.jobs < 1) throw InputError("--repeats and --jobs must be positive");
  const auto configs = parse_configs(f.configs);
  const SolverConfig solver = resolve_solver(f.solver, f.timeout_s);
  // Fail fast on an unusable solver command.
  check(Formula{}, solver);

  struct Cell {
    std::size_t k, config, repeat;
    std::string row;
  };
  std::vector<Cell> cells;
  for (std::size_t k = f.k_min; k <= f.k_max; ++k)
    for (std::size_t c = 0; c < configs.size(); ++c)
      for (std::size_t r = 1; r <= f.repeats; ++r) cells.push_back({k, c, r, {}});

  std::atomic<std::size_t> next{0};
  std::mutex progress;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      auto& cell = cells[i];
      const auto& config = configs[cell.config];
      const Sample sample = gen_mod_sample({cell.k, f.max_len});
      LearnOptions options;
      options.encoding = config.encoding;
      options.style = config.style;
      options.solver = solver;
      std::string n = "", verdict;
      const auto start = std::chrono::steady_clock::now();
      try {
        auto result = learn_minimal(sample, options);
        n = std::to_string(result.minimal_n);
        verdict = "sat";
      } catch (const UnknownVerdict& e) {
        n = std::to_string(e.stats().back().n);
        verdict = e.stats().back().reason == "timeout" ? "timeout" : "unknown";
      } catch (...) {
        std::lock_guard lock(progress);
        if (!failure) failure = std::current_exception();
        continue;
      }
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      cell.row = "mod-k" + std::to_string(cell.k) + "-len" + std::to_string(f.max_len) + ',' +
                 std::string(to_string(config.encoding)) + ',' + std::string(to_string(config.style)) + ',' + n +
                 ',' + std::to_string(cell.repeat) + ',' + format_ms(wall) + ',' + verdict + '\n';
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < f.jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::string csv = "instance,encoding,axioms,n,repeat,time_ms,verdict\n";
  for (const auto& cell : cells) csv += cell.row;
  emit(f.out, csv, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learn minimal DFAs, Moore and Mealy machines from samples with an SMT solver"};
  app.require_subcommand(1);

  LearnFlags learn;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a minimal machine consistent with a sample");
  learn_cmd->add_option("--kind", learn.kind, "dfa | moore | mealy (default: from the sample)");
  learn_cmd->add_option("--encoding", learn.encoding, "natural | expressive")->capture_default_str();
  learn_cmd->add_option("--axioms", learn.axioms, "bool | ineq")->capture_default_str();
  learn_cmd->add_option("--in", learn.in, "Sample file")->required();
  learn_cmd->add_option("--out", learn.out, "Machine file")->required();
  learn_cmd->add_option("--solver", learn.solver, "Solver command, e.g. \"z3 -in -smt2\" (default: $SMT_SOLVER_CMD)");
  learn_cmd->add_option("--timeout-s", learn.timeout_s, "Timeout per solver call")->capture_default_str();
  learn_cmd->add_option("--start-n", learn.start_n, "First state bound to try")->capture_default_str();
  learn_cmd->add_option("--max-n", learn.max_n, "Give up above this many states");
  learn_cmd->add_option("--emit-smt", learn.emit_smt, "Directory receiving <basename>-n<k>.smt2 per bound");
  learn_cmd->add_option("--stats", learn.stats, "CSV file with per-bound statistics");
  learn_cmd->add_option("--dot", learn.dot, "Graphviz rendering of the learned machine");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate benchmark machines and samples");
  gen_cmd->require_subcommand(1);
  auto* gen_mod = gen_cmd->add_subcommand("mod", "All unary words up to --max-len, accepted iff length mod k = 0");
  gen_mod->add_option("--k", gen.k)->required();
  gen_mod->add_option("--max-len", gen.max_len)->capture_default_str();
  gen_mod->add_option("--out", gen.out, "Sample file (default: stdout)");
  gen_mod->add_option("--dfa-out", gen.dfa_out, "Also write the generating DFA");
  auto* gen_random = gen_cmd->add_subcommand("random-mealy", "Seeded random minimal Mealy machine");
  gen_random->add_option("--states", gen.states)->required();
  gen_random->add_option("--inputs", gen.inputs)->required();
  gen_random->add_option("--outputs", gen.outputs)->required();
  gen_random->add_option("--seed", gen.seed)->capture_default_str();
  gen_random->add_option("--out", gen.out, "Machine file (default: stdout)");
  auto* gen_char = gen_cmd->add_subcommand("charsample", "W-method characterizing trace sample of a Mealy machine");
  gen_char->add_option("--machine", gen.machine)->required();
  gen_char->add_option("--extra-depth", gen.extra_depth)->capture_default_str();
  gen_char->add_option("--moore-initial", gen.moore_initial, "Emit Moore traces with this initial output");
  gen_char->add_option("--out", gen.out, "Sample file (default: stdout)");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timing sweep over a benchmark family, written as CSV");
  bench_cmd->add_option("--suite", bench.suite)->capture_default_str();
  bench_cmd->add_option("--k-min", bench.k_min)->capture_default_str();
  bench_cmd->add_option("--k-max", bench.k_max)->capture_default_str();
  bench_cmd->add_option("--max-len", bench.max_len)->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats)->capture_default_str();
  bench_cmd->add_option("--configs", bench.configs, "Comma-separated <encoding>-<axioms> list")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV file (default: stdout)");
  bench_cmd->add_option("--solver", bench.solver);
  bench_cmd->add_option("--timeout-s", bench.timeout_s)->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Cells solved in parallel")->capture_default_str();

  std::string equiv_a, equiv_b;
  auto* equiv_cmd = app.add_subcommand("check-equiv", "Decide whether two machine files are equivalent");
  equiv_cmd->add_option("a", equiv_a)->required();
  equiv_cmd->add_option("b", equiv_b)->required();

  OracleFlags oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimal machine for tiny samples");
  oracle_cmd->add_option("--in", oracle.in)->required();
  oracle_cmd->add_option("--kind", oracle.kind);
  oracle_cmd->add_option("--max-n", oracle.max_n)->capture_default_str();
  oracle_cmd->add_option("--max-machines", oracle.max_machines)->capture_default_str();
  oracle_cmd->add_option("--out", oracle.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*learn_cmd) return cmd_learn(learn, out);
    if (*gen_mod) return cmd_gen_mod(gen, out);
    if (*gen_random) return cmd_gen_random(gen, out);
    if (*gen_char) return cmd_gen_charsample(gen, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*equiv_cmd) return cmd_check_equiv(equiv_a, equiv_b, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
  } catch (const BoundExceeded& e) {
    err << "BoundExceeded: " << e.what() << '\n';
    return kSearchFailed;
  } catch (const UnknownVerdict& e) {
    err << "UnknownVerdict: " << e.what() << '\n';
    return kSearchFailed;
  } catch (const ConflictError& e) {
    err << "ConflictError: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return kInputError;
  } catch (const SolverError& e) {
    err << "SolverError: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << '\n';
    return kSearchFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace smtgi::cli
