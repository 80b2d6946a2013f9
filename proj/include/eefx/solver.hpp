#pragma once

#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/caps.hpp"
#include "eefx/errors.hpp"
#include "eefx/instance.hpp"
#include "eefx/matching.hpp"

namespace eefx {

struct Assignment {
  int agent = 0;  // original agent index
  Bundle bundle;
};

// One round of the recursive construction. Graph rows follow
// `active_agents` (row r is agent active_agents[r]); graph columns and
// matching bundle indices refer to `partition`; matching agent indices are
// rows.
struct SolverRound {
  std::vector<int> active_agents;
  Bundle active_items;
  int pivot = 0;  // original index of the agent whose valuation seeds the partition
  std::vector<Bundle> partition;
  EEFXGraph graph;
  ClosedMatching matching;
  std::vector<Assignment> assignments;
};

struct SolverTrace {
  std::vector<SolverRound> rounds;
};

struct SolverOptions {
  Caps caps;
  Exec exec = Exec::parallel;
  bool use_fast_accept = true;
  // Re-verify the output with the exact EEFX checker on the original instance.
  bool verify_result = true;
};

struct SolveResult {
  Allocation allocation;
  SolverTrace trace;
};

// Thrown when an internal guarantee fails; carries the trace so far.
class SolverContractViolation : public ContractViolation {
 public:
  SolverContractViolation(const std::string& what, SolverTrace trace)
      : ContractViolation(what), trace_(std::move(trace)) {}
  const SolverTrace& trace() const { return trace_; }

 private:
  SolverTrace trace_;
};

// EEFX allocation for monotone valuations. Each round partitions the
// remaining items EFX-wise under the highest-indexed remaining agent's
// valuation, builds the EEFX-graph relative to the remaining items and
// agents, assigns the bundles of a closed matching, and recurses on the rest.
//
// Throws SizeError beyond caps.solve_items / caps.agents and
// SolverContractViolation if closure or final verification fails.
SolveResult solve_eefx(AgentOracles agents, int m, const SolverOptions& options = {});
SolveResult solve_eefx(const Instance& inst, const SolverOptions& options = {});

}  // namespace eefx
