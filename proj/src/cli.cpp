#include "eefx/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eefx/errors.hpp"
#include "eefx/generators.hpp"
#include "eefx/io.hpp"
#include "eefx/reduction.hpp"
#include "eefx/solver.hpp"
#include "eefx/verify.hpp"

namespace eefx {

namespace {

struct CommonFlags {
  std::string caps;
  int threads = 0;
  bool serial = false;
};

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

Caps resolve_caps(const CommonFlags& flags) { return parse_caps(flags.caps, caps_from_env()); }

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

struct Counted {
  std::vector<std::unique_ptr<CountedOracle>> counters;
  std::vector<const ValuationOracle*> oracles;

  explicit Counted(const Instance& inst) {
    for (const auto& v : inst.valuations) {
      counters.push_back(std::make_unique<CountedOracle>(v));
      oracles.push_back(counters.back().get());
    }
  }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& c : counters) t += c->query_count();
    return t;
  }
};

// gen ----------------------------------------------------------------------

struct GenArgs {
  GenParams params;
  std::string eps = "0.1";
  std::string output;
};

int run_gen(const GenArgs& args, std::ostream& out) {
  GenParams p = args.params;
  p.eps = parse_rational(args.eps);
  emit(args.output, dump(instance_to_json(generate_instance(p))), out);
  return kExitOk;
}

// solve --------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string output;
  bool trace = false;
  bool count_queries = false;
  bool certificates = false;
  bool no_fast_accept = false;
  CommonFlags common;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(args.input);
  SolverOptions options;
  options.caps = resolve_caps(args.common);
  options.exec = args.common.serial ? Exec::serial : Exec::parallel;
  options.use_fast_accept = !args.no_fast_accept;

  Counted counted(inst);
  SolveResult result;
  try {
    result = solve_eefx(counted.oracles, inst.m(), options);
  } catch (const SolverContractViolation& e) {
    err << "contract violation: " << e.what() << "\n" << dump(trace_to_json(e.trace()));
    return kExitContract;
  }

  AllocationFile file;
  file.allocation = result.allocation;
  if (args.trace) file.trace = trace_to_json(result.trace);
  if (args.certificates) {
    const SearchOptions search{options.exec, options.caps.certificate_items};
    for (int i = 0; i < inst.n(); ++i) {
      auto c = find_certificate(inst.valuations[i], result.allocation.bundles[i], inst.all_items(), inst.n(), search);
      if (!c) {
        err << "contract violation: no certificate for agent " << i << "\n";
        return kExitContract;
      }
      file.certificates.push_back({i, c->bundles});
    }
  }
  if (args.count_queries) {
    Json counts = Json::array();
    for (const auto& c : counted.counters) counts.push_back(c->query_count());
    err << Json{{"query_counts", counts}, {"total", counted.total()}}.dump() << "\n";
  }
  emit(args.output, dump(allocation_to_json(file)), out);
  return kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string allocation;
  std::string criterion = "eefx";
  CommonFlags common;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  const Instance inst = load_instance(args.input);
  const AllocationFile file = allocation_from_json(read_json_file(args.allocation));
  const Caps caps = resolve_caps(args.common);
  const SearchOptions search{args.common.serial ? Exec::serial : Exec::parallel, caps.certificate_items};
  const auto report = check_criterion(inst, file.allocation, parse_criterion(args.criterion), search);
  out << dump(report_to_json(report, inst));
  return report.satisfied ? kExitOk : kExitViolated;
}

// reduce / extract -----------------------------------------------------------

struct ReduceArgs {
  std::string input;
  int n = 3;
  std::string output;
};

int run_reduce(const ReduceArgs& args, std::ostream& out) {
  const Instance base = load_instance(args.input);
  if (base.n() != 2) throw InputError("reduce expects a two-agent instance");
  if (!(base.valuations[0] == base.valuations[1]))
    throw InputError("reduce expects two agents with identical valuations");
  const ReducedInstance r = build_reduced_instance(base.valuations[0], args.n);
  emit(args.output, dump(instance_to_json(r.to_instance(base.items))), out);
  return kExitOk;
}

struct ExtractArgs {
  std::string input;
  std::string allocation;
  std::string output;
};

int run_extract(const ExtractArgs& args, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(args.input);
  const ReducedInstance r = reduced_from_instance(inst);
  const AllocationFile file = allocation_from_json(read_json_file(args.allocation));
  const Allocation split = extract_efx(r, file.allocation);

  const auto* ext = std::get_if<HeavyExtension>(&r.v_prime.kind());
  const std::vector<const ValuationOracle*> pair{ext->base.get(), ext->base.get()};
  const auto report = is_efx(pair, split);
  if (!report.satisfied) {
    err << "contract violation: extracted split is not EFX on the base instance\n";
    return kExitContract;
  }
  emit(args.output, dump(allocation_to_json(AllocationFile{split, {}, std::nullopt})), out);
  return kExitOk;
}

// bench --------------------------------------------------------------------

struct BenchCell {
  GenParams params;
};

struct BenchRow {
  std::string id;
  GenParams params;
  double wall_ms = 0;
  std::uint64_t queries = 0;
  std::size_t rounds = 0;
  std::string verification = "error";
  std::string error;
};

std::vector<BenchCell> bench_cells(const Json& config) {
  if (!config.contains("cells") || !config.at("cells").is_array())
    throw InputError("bench config needs a \"cells\" array");
  std::vector<BenchCell> cells;
  for (const auto& c : config.at("cells")) {
    const auto family = c.at("family").get<std::string>();
    const auto kind = c.value("kind", std::string("coverage"));
    const auto ns = c.at("n").get<std::vector<int>>();
    const auto ms = c.at("m").get<std::vector<int>>();
    const auto seeds = c.at("seeds").get<std::vector<std::uint64_t>>();
    for (int n : ns)
      for (int m : ms)
        for (auto seed : seeds) {
          GenParams p;
          p.family = family;
          p.kind = kind;
          p.n = n;
          p.m = m;
          p.seed = seed;
          cells.push_back({p});
        }
  }
  return cells;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

BenchRow run_bench_cell(const BenchCell& cell, const Caps& caps) {
  BenchRow row;
  row.params = cell.params;
  row.id = cell.params.family + "-" + cell.params.kind + "-n" + std::to_string(cell.params.n) + "-m" +
           std::to_string(cell.params.m) + "-s" + std::to_string(cell.params.seed);
  try {
    const Instance inst = generate_instance(cell.params);
    Counted counted(inst);
    SolverOptions options;
    options.caps = caps;
    const auto start = std::chrono::steady_clock::now();
    const SolveResult result = solve_eefx(counted.oracles, inst.m(), options);
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.queries = counted.total();
    row.rounds = result.trace.rounds.size();
    // Re-check along the direct (non-tabulated) certificate path.
    const auto report = is_eefx_allocation(inst, result.allocation, SearchOptions{Exec::serial, caps.certificate_items});
    row.verification = report.satisfied ? "pass" : "fail";
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

struct BenchArgs {
  std::string config;
  std::string output;
  CommonFlags common;
};

int run_bench(const BenchArgs& args, std::ostream& out) {
  const auto cells = bench_cells(read_json_file(args.config));
  const Caps caps = resolve_caps(args.common);
  std::vector<BenchRow> rows(cells.size());
  const std::int64_t count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) rows[i] = run_bench_cell(cells[i], caps);

  std::ostringstream csv;
  csv << "instance_id,family,kind,n,m,seed,wall_ms,queries,rounds,verification,error\n";
  bool all_pass = true;
  for (const auto& r : rows) {
    all_pass = all_pass && r.verification == "pass";
    csv << csv_escape(r.id) << ',' << r.params.family << ',' << r.params.kind << ',' << r.params.n << ','
        << r.params.m << ',' << r.params.seed << ',' << std::fixed << std::setprecision(3) << r.wall_ms << ','
        << r.queries << ',' << r.rounds << ',' << r.verification << ',' << csv_escape(r.error) << '\n';
  }
  emit(args.output, csv.str(), out);
  return all_pass ? kExitOk : kExitViolated;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--caps", flags.caps, "Cap overrides, e.g. solve_items=12,agents=6 (also read from EEFX_CAPS)");
  cmd->add_option("--threads", flags.threads, "OpenMP thread count (default: runtime default)");
  cmd->add_flag("--serial", flags.serial, "Use the serial reference kernels");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact EEFX fair-division solver and verifier"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen.params.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(generator_families()));
  gen_cmd->add_option("--seed", gen.params.seed, "RNG seed");
  gen_cmd->add_option("--n", gen.params.n, "Agent count");
  gen_cmd->add_option("--m", gen.params.m, "Item count (base items for reduced)");
  gen_cmd->add_option("--kind", gen.params.kind, "Valuation kind for identical/reduced: additive, coverage, table, mixed");
  gen_cmd->add_option("--eps", gen.eps, "Epsilon for footnote-mnw");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a verified EEFX allocation");
  solve_cmd->add_option("input", solve.input, "Instance file")->required();
  solve_cmd->add_option("-o,--output", solve.output, "Allocation file (default stdout)");
  solve_cmd->add_flag("--trace", solve.trace, "Embed the round-by-round trace");
  solve_cmd->add_flag("--count-queries", solve.count_queries, "Report valuation queries per agent on stderr");
  solve_cmd->add_flag("--certificates", solve.certificates, "Embed an n-certificate for every agent");
  solve_cmd->add_flag("--no-fast-accept", solve.no_fast_accept, "Skip the heuristic certificate pass");
  add_common(solve_cmd, solve.common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an allocation against a fairness criterion");
  verify_cmd->add_option("input", verify.input, "Instance file")->required();
  verify_cmd->add_option("allocation", verify.allocation, "Allocation file")->required();
  verify_cmd->add_option("--criterion", verify.criterion, "ef, ef1, efx, prop or eefx")
      ->check(CLI::IsMember({"ef", "ef1", "efx", "prop", "eefx"}));
  add_common(verify_cmd, verify.common);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the n-agent heavy-item gadget from a two-agent instance");
  reduce_cmd->add_option("input", reduce.input, "Two-agent identical-valuation instance")->required();
  reduce_cmd->add_option("--n", reduce.n, "Target agent count (>= 2)")->required();
  reduce_cmd->add_option("-o,--output", reduce.output, "Output file (default stdout)");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Map an EEFX allocation of a gadget to a base EFX split");
  extract_cmd->add_option("input", extract.input, "Reduced instance file")->required();
  extract_cmd->add_option("allocation", extract.allocation, "EEFX allocation of the reduced instance")->required();
  extract_cmd->add_option("-o,--output", extract.output, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a grid of generated instances and write CSV");
  bench_cmd->add_option("config", bench.config, "Config JSON: {\"cells\": [{family, kind, n: [], m: [], seeds: []}]}")
      ->required();
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");
  add_common(bench_cmd, bench.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputOrCap;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*solve_cmd) {
      apply_threads(solve.common.threads);
      return run_solve(solve, out, err);
    }
    if (*verify_cmd) {
      apply_threads(verify.common.threads);
      return run_verify(verify, out);
    }
    if (*reduce_cmd) return run_reduce(reduce, out);
    if (*extract_cmd) return run_extract(extract, out, err);
    if (*bench_cmd) {
      apply_threads(bench.common.threads);
      return run_bench(bench, out);
    }
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputOrCap;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitInputOrCap;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputOrCap;
  }
  return kExitInputOrCap;
}

}  // namespace eefx
