#include "eefx/solver.hpp"

#include <string>

#include "eefx/errors.hpp"
#include "eefx/identical_efx.hpp"
#include "eefx/verify.hpp"

namespace eefx {

SolveResult solve_eefx(AgentOracles agents, int m, const SolverOptions& options) {
  const int n = static_cast<int>(agents.size());
  if (n < 1) throw InputError("an instance needs at least one agent");
  if (n > options.caps.agents)
    throw SizeError(std::to_string(n) + " agents exceed the solve cap of " + std::to_string(options.caps.agents));
  if (m > options.caps.solve_items)
    throw SizeError(std::to_string(m) + " items exceed the solve cap of " + std::to_string(options.caps.solve_items));
  for (const auto* v : agents)
    if (v->item_count() != m) throw InputError("valuation item count does not match the instance");

  const SearchOptions search{options.exec, options.caps.certificate_items};
  const GraphOptions graph_options{search, options.use_fast_accept};
  const PartitionOptions partition_options{options.exec, options.caps.partition_items};

  SolveResult result;
  result.allocation.bundles.assign(n, Bundle{});
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  Bundle remaining = Bundle::full(m);

  while (!active.empty()) {
    SolverRound round;
    round.active_agents = active;
    round.active_items = remaining;
    round.pivot = active.back();
    const int k = static_cast<int>(active.size());

    round.partition = identical_efx_partition(*agents[round.pivot], remaining, k, partition_options).bundles;

    std::vector<const ValuationOracle*> round_agents;
    round_agents.reserve(k);
    for (int a : active) round_agents.push_back(agents[a]);
    round.graph = build_eefx_graph(round_agents, remaining, round.partition, graph_options);

    try {
      round.matching = find_closed_matching(round.graph);
    } catch (const ContractViolation& e) {
      result.trace.rounds.push_back(std::move(round));
      throw SolverContractViolation(std::string("round ") + std::to_string(result.trace.rounds.size()) + ": " +
                                        e.what(),
                                    std::move(result.trace));
    }

    std::vector<std::uint8_t> assigned(k, 0);
    for (const auto& p : round.matching.pairs) {
      const int agent = active[p.agent];
      const Bundle bundle = round.partition[p.bundle];
      result.allocation.bundles[agent] = bundle;
      remaining = remaining - bundle;
      assigned[p.agent] = 1;
      round.assignments.push_back({agent, bundle});
    }
    std::vector<int> next;
    for (int r = 0; r < k; ++r)
      if (!assigned[r]) next.push_back(active[r]);
    active = std::move(next);
    result.trace.rounds.push_back(std::move(round));
  }

  if (options.verify_result) {
    const auto report = is_eefx_allocation(agents, result.allocation, search);
    if (!report.satisfied)
      throw SolverContractViolation("final allocation fails the EEFX check for agent " +
                                        std::to_string(report.witnesses.front().agent),
                                    std::move(result.trace));
  }
  return result;
}

SolveResult solve_eefx(const Instance& inst, const SolverOptions& options) {
  inst.validate();
  const auto agents = inst.oracles();
  return solve_eefx(agents, inst.m(), options);
}

}  // namespace eefx
