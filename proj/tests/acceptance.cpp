// Acceptance suite. Usage: acceptance [criterion...]; with no arguments every
// criterion runs. Prints one PASS/FAIL line per criterion and exits nonzero
// if any selected criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eefx/cli.hpp"
#include "eefx/generators.hpp"
#include "eefx/identical_efx.hpp"
#include "eefx/io.hpp"
#include "eefx/reduction.hpp"
#include "eefx/solver.hpp"
#include "eefx/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace eefx;
using testing::goods;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

std::string show(const Allocation& a, const std::vector<std::string>& names) {
  std::string out = "(";
  for (int i = 0; i < a.n(); ++i) {
    if (i) out += ",";
    out += "{";
    bool first = true;
    for (Item g : a.bundles[i].items()) {
      if (!first) out += ",";
      out += names[g];
      first = false;
    }
    out += "}";
  }
  return out + ")";
}

Instance mixed_instance(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.items = default_item_names(m);
  for (int i = 0; i < n; ++i) inst.valuations.push_back(random_monotone(rng, m));
  inst.seed = seed;
  return inst;
}

// ---------------------------------------------------------------------------

Outcome golden_example() {
  const auto start = Clock::now();
  const Instance t1 = table1_instance();
  const Allocation x{{goods({1, 2, 4}), goods({3, 5, 6}), goods({7})}};
  const Allocation y{{goods({1, 2, 3}), goods({4, 5, 6}), goods({7})}};
  const auto tables = testing::tables(t1);
  Outcome o;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.pass = false;
      o.detail += what + "; ";
    }
  };
  need(check_classic(t1, x, Criterion::EF).satisfied, "X not EF");
  need(is_efx(t1, x).satisfied && oracle::is_efx(tables, testing::masks(x)), "X not EFX");
  need(is_eefx_allocation(t1, x).satisfied && oracle::is_eefx(tables, testing::masks(x), 7), "X not EEFX");
  const auto y_efx = is_efx(t1, y);
  need(!y_efx.satisfied && !oracle::is_efx(tables, testing::masks(y)), "Y passes EFX");
  need(!y_efx.witnesses.empty() && y_efx.witnesses.front() == Violation{2, 0, Item{0}},
       "Y witness is not (agent 3, bundle 1, g1)");
  const Rational lhs = t1.valuations[2].value(y.bundles[0].without(0));
  const Rational rhs = t1.valuations[2].value(y.bundles[2]);
  need(lhs == 100 && rhs == 55 && lhs > rhs, "v3(Y1 - g1) = 100 > 55 = v3(Y3) does not hold exactly");
  need(is_eefx_allocation(t1, y).satisfied && oracle::is_eefx(tables, testing::masks(y), 7), "Y not EEFX");
  const double secs = seconds_since(start);
  need(secs < 1.0, "took " + fixed(secs) + " s");
  if (o.pass)
    o.detail = "X is EF/EFX/EEFX; Y fails EFX at (agent 3, bundle 1, g1) with 100 > 55 and is EEFX; " +
               fixed(secs * 1000, 1) + " ms";
  return o;
}

struct Run {
  Instance inst;
  SolveResult result;
};

// The desk-scale grid shared by criteria 2 and 5. Solved once.
const std::vector<Run>& grid_runs(double* solve_seconds = nullptr) {
  static std::vector<Run> runs;
  static double secs = 0;
  if (runs.empty()) {
    const auto start = Clock::now();
    for (int n = 2; n <= 4; ++n)
      for (int m = 4; m <= 8; ++m)
        for (std::uint64_t seed = 1; seed <= 14; ++seed) {
          Instance inst = mixed_instance(n, m, 1000 * n + 100 * m + seed);
          SolveResult r = solve_eefx(inst);
          runs.push_back({std::move(inst), std::move(r)});
        }
    secs = seconds_since(start);
  }
  if (solve_seconds) *solve_seconds = secs;
  return runs;
}

Outcome desk_scale_existence() {
  const auto start = Clock::now();
  Outcome o;
  int failures = 0;
  try {
    double solve_secs = 0;
    const auto& runs = grid_runs(&solve_secs);
    std::set<std::size_t> kinds;
    for (const auto& run : runs) {
      for (const auto& v : run.inst.valuations)
        kinds.insert(v.kind().index());
      if (!oracle::is_eefx(testing::tables(run.inst), testing::masks(run.result.allocation), run.inst.m()))
        ++failures;
    }
    const double secs = seconds_since(start);
    o.pass = failures == 0 && runs.size() >= 200 && kinds.size() == 3 && secs < 600;
    o.detail = std::to_string(runs.size()) + " instances (n 2..4, m 4..8, " + std::to_string(kinds.size()) +
               " valuation kinds), " + std::to_string(failures) + " failed the exhaustive verifier; solve " +
               fixed(solve_secs) + " s, total " + fixed(secs) + " s";
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("solver threw: ") + e.what();
  }
  return o;
}

Outcome two_agent_efx() {
  int total = 0, failures = 0;
  for (int m = 1; m <= 7; ++m)
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Instance inst = mixed_instance(2, m, 5000 + 100 * m + seed);
      const auto r = solve_eefx(inst);
      ++total;
      const Allocation& a = r.allocation;
      if (!oracle::is_efx(testing::tables(inst), testing::masks(a)) || !is_efx(inst, a).satisfied) ++failures;
    }
  return {failures == 0 && total >= 100,
          std::to_string(total) + " two-agent instances (m 1..7), " + std::to_string(failures) + " not EFX"};
}

Outcome certificate_monotonicity() {
  Rng rng(314);
  int qualifying = 0, failures = 0, sampled = 0;
  std::set<std::pair<int, int>> shapes;
  for (int trial = 0; qualifying < 600 && trial < 10000; ++trial) {
    const int n = 2 + trial % 2;
    const int m = 2 + (trial / 2) % 6;
    const auto v = random_monotone(rng, m);
    const auto t = oracle::value_table(v);
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, all);
    for (int draw = 0; draw < 40; ++draw) {
      ++sampled;
      const std::uint64_t a = pick(rng);
      const std::uint64_t b = pick(rng) & ~a;
      if (oracle::is_member(t, a, all, n)) continue;
      if (!oracle::is_member(t, b, all & ~a, n - 1)) continue;
      ++qualifying;
      shapes.insert({n, m});
      if (!oracle::is_member(t, b, all, n)) ++failures;
    }
  }
  return {failures == 0 && qualifying >= 500,
          std::to_string(qualifying) + " triples with A outside EEFX^n(M) and B in EEFX^(n-1)(M - A) out of " +
              std::to_string(sampled) + " draws over " + std::to_string(shapes.size()) + " (n, m) shapes (n 2..3, m 2..7); " +
              std::to_string(failures) + " with B outside EEFX^n(M)"};
}

Outcome closed_matchings() {
  int graphs = 0, bad_closure = 0, empty = 0, no_full_row = 0, wrong_cells = 0;
  for (const auto& run : grid_runs()) {
    const auto tables = testing::tables(run.inst);
    for (const auto& round : run.result.trace.rounds) {
      ++graphs;
      const int k = static_cast<int>(round.active_agents.size());
      oracle::Graph g(k, std::vector<bool>(k, false));
      for (int r = 0; r < k; ++r)
        for (int j = 0; j < k; ++j) {
          g[r][j] = round.graph.edge(r, j);
          const bool expected = oracle::is_member(tables[round.active_agents[r]], round.partition[j].bits(),
                                                  round.active_items.bits(), k);
          if (g[r][j] != expected) ++wrong_cells;
        }
      std::vector<std::pair<int, int>> pairs;
      for (const auto& p : round.matching.pairs) pairs.emplace_back(p.agent, p.bundle);
      if (pairs.empty()) ++empty;
      if (!oracle::is_closed(g, pairs)) ++bad_closure;
      bool any_full = false;
      for (int r = 0; r < k; ++r) {
        bool full = true;
        for (int j = 0; j < k; ++j) full = full && g[r][j];
        any_full = any_full || full;
      }
      if (!any_full) ++no_full_row;
    }
  }
  return {graphs > 0 && bad_closure == 0 && empty == 0 && no_full_row == 0 && wrong_cells == 0,
          std::to_string(graphs) + " EEFX-graphs from the criterion-2 runs: " + std::to_string(bad_closure) +
              " closure failures, " + std::to_string(empty) + " empty matchings, " + std::to_string(no_full_row) +
              " without an all-ones row, " + std::to_string(wrong_cells) + " cells disagreeing with brute force"};
}

Outcome gadget_submodularity() {
  Rng rng(2718);
  int checked = 0, failures = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 5;
    const int n = 3 + trial % 3;
    const auto base = trial % 4 == 0 ? random_additive(rng, m) : random_coverage(rng, m);
    if (!oracle::is_submodular(oracle::value_table(base))) {
      ++failures;  // the generators promise submodular bases
      continue;
    }
    const auto r = build_reduced_instance(base, n);
    ++checked;
    if (!oracle::is_submodular(oracle::value_table(r.v_prime)) || !check_submodular(r.v_prime)) ++failures;
  }
  return {failures == 0 && checked >= 50,
          std::to_string(checked) + " gadgets (m 1..5, n 3..5) checked pairwise over all subset pairs, " +
              std::to_string(failures) + " not submodular"};
}

Outcome gadget_round_trip() {
  Rng rng(1618);
  int total = 0, failures = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 6;
    const int n = 3 + trial % 2;
    const auto base = trial % 3 == 0 ? random_additive(rng, m) : random_coverage(rng, m);
    ++total;
    try {
      const auto r = build_reduced_instance(base, n);
      const auto solved = solve_eefx(r.to_instance(default_item_names(m)));
      const auto split = extract_efx(r, solved.allocation);
      const auto t = oracle::value_table(base);
      if (!oracle::is_partition(testing::masks(split), (std::uint64_t{1} << m) - 1) ||
          !oracle::is_efx({t, t}, testing::masks(split)))
        ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0 && total >= 50, std::to_string(total) + " reduce/solve/extract round trips (m 1..6, n 3..4), " +
                                            std::to_string(failures) + " failures"};
}

Outcome mnw_counterexample() {
  const Instance inst = mnw_counterexample_instance(Rational(1, 10));
  const auto tables = testing::tables(inst);
  const auto brute = oracle::mnw(tables, 3);
  const auto lib = mnw_allocations(inst);
  bool agree = brute.size() == lib.size();
  for (std::size_t i = 0; agree && i < lib.size(); ++i) agree = testing::masks(lib[i]) == brute[i];

  const Allocation ab_c{{Bundle{0, 1}, Bundle{2}}};
  const bool ab_c_is_max = std::find(lib.begin(), lib.end(), ab_c) != lib.end();
  const bool unique = lib.size() == 1 && lib[0] == ab_c;
  const auto report = is_eefx_allocation(inst, ab_c, {Exec::serial, 14});
  const bool no_cert = !oracle::is_member(tables[1], Bundle{2}.bits(), 0b111, 2);
  const bool fails_eefx = !report.satisfied && report.witnesses.size() == 1 && report.witnesses[0].agent == 1 &&
                          no_cert && !oracle::is_eefx(tables, testing::masks(ab_c), 3);

  std::string set;
  for (const auto& a : lib) set += (set.empty() ? "" : " ") + show(a, inst.items);
  Outcome o;
  o.pass = agree && unique && fails_eefx;
  o.detail = "MNW maximizers (" + std::to_string(lib.size()) + ", brute force " + (agree ? "agrees" : "DISAGREES") +
             "): " + set + ". Unique ({a,b},{c}): " + (unique ? "yes" : "no") +
             ". Is ({a,b},{c}) a maximizer: " + (ab_c_is_max ? "yes" : "no") + ". Fails EEFX, agent 2 has no " +
             "2-certificate for {c}: " + (fails_eefx ? "yes" : "no");
  return o;
}

Outcome query_growth() {
  // Gadget correctness half of the substitute.
  const Outcome gadget = gadget_round_trip();

  const auto dir = std::filesystem::temp_directory_path() / ("eefx_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::map<std::uint64_t, std::vector<std::uint64_t>> counts;
  std::string error;
  for (std::uint64_t seed = 1; seed <= 5 && error.empty(); ++seed)
    for (int m : {4, 6, 8}) {
      GenParams p;
      p.family = "identical";
      p.kind = "coverage";
      p.n = 3;
      p.m = m;
      p.seed = seed;
      const auto path = (dir / ("c" + std::to_string(seed) + "_" + std::to_string(m) + ".json")).string();
      write_file_atomic(path, instance_to_json(generate_instance(p)).dump());
      const char* argv[] = {"eefx", "solve", path.c_str(), "--count-queries", "-o", "/dev/null"};
      std::ostringstream out, err;
      if (run_cli(6, argv, out, err) != kExitOk) {
        error = "solve failed: " + err.str();
        break;
      }
      counts[seed].push_back(Json::parse(err.str()).at("total").get<std::uint64_t>());
    }
  std::filesystem::remove_all(dir);

  bool increasing = error.empty();
  std::string detail;
  for (const auto& [seed, c] : counts) {
    increasing = increasing && c.size() == 3 && c[0] < c[1] && c[1] < c[2];
    detail += " seed " + std::to_string(seed) + ":";
    for (auto q : c) detail += " " + std::to_string(q);
  }
  return {gadget.pass && increasing,
          "gadget round trip " + std::string(gadget.pass ? "holds" : "FAILS") +
              "; identical-coverage query totals for m = 4, 6, 8 strictly increase: " +
              (increasing ? "yes" : "no") + ";" + detail + (error.empty() ? "" : "; " + error)};
}

Outcome certificate_oracle() {
  const auto start = Clock::now();
  Rng rng(8128);
  int valuations = 0;
  std::uint64_t queries = 0, mismatches = 0;
  for (; valuations < 1000; ++valuations) {
    const int m = 2 + valuations % 6;
    const auto v = random_monotone(rng, m);
    const auto t = oracle::value_table(v);
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t s = 0; s <= all; ++s)
      for (std::uint64_t a = s;; a = (a - 1) & s) {
        for (int k = 1; k <= 4; ++k) {
          const bool expected = oracle::is_member(t, a, s, k);
          const bool par = find_certificate(v, Bundle(a), Bundle(s), k, {Exec::parallel, 14}).has_value();
          const bool ser = find_certificate(v, Bundle(a), Bundle(s), k, {Exec::serial, 14}).has_value();
          queries += 2;
          if (par != expected || ser != expected) ++mismatches;
        }
        if (a == 0) break;
      }
  }
  return {mismatches == 0, std::to_string(valuations) + " valuations (m 2..7), every A in S in M and k 1..4: " +
                               std::to_string(queries) + " pruned searches against an unpruned enumerator, " +
                               std::to_string(mismatches) + " disagreements; " + fixed(seconds_since(start)) + " s"};
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<Outcome()>>> all = {
      {1, {"golden X and Y allocations", golden_example}},
      {2, {"EEFX existence at desk scale", desk_scale_existence}},
      {3, {"two-agent EEFX output is EFX", two_agent_efx}},
      {4, {"certificate monotonicity property", certificate_monotonicity}},
      {5, {"closed matchings in EEFX-graphs", closed_matchings}},
      {6, {"heavy-item gadget preserves submodularity", gadget_submodularity}},
      {7, {"gadget round trip yields EFX", gadget_round_trip}},
      {8, {"MNW counterexample", mnw_counterexample}},
      {9, {"gadget correctness and query-count growth", query_growth}},
      {10, {"pruned certificate search matches naive enumeration", certificate_oracle}},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (const auto& [id, _] : criteria()) selected.push_back(id);

  bool all_pass = true;
  for (int id : selected) {
    const auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cout << "criterion " << id << ": FAIL - no such criterion" << std::endl;
      all_pass = false;
      continue;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << id << " (" << it->second.first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
