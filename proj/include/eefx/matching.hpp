#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/certificates.hpp"
#include "eefx/instance.hpp"

namespace eefx {

// Square bipartite graph: agent rows, bundle columns.
class EEFXGraph {
 public:
  EEFXGraph() = default;
  explicit EEFXGraph(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool edge(int agent, int bundle) const { return cells_[index(agent, bundle)] != 0; }
  void set_edge(int agent, int bundle, bool present = true) { cells_[index(agent, bundle)] = present; }
  bool row_full(int agent) const;

  friend bool operator==(const EEFXGraph&, const EEFXGraph&) = default;

 private:
  std::size_t index(int agent, int bundle) const { return static_cast<std::size_t>(agent) * n_ + bundle; }

  int n_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct MatchPair {
  int agent = 0;
  int bundle = 0;
  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

struct ClosedMatching {
  std::vector<MatchPair> pairs;  // ascending by agent
  bool perfect = false;
};

struct GraphOptions {
  SearchOptions search;
  bool use_fast_accept = true;
};

// Edge (i, j) iff bundles[j] is in agent i's EEFX^n set with respect to
// `ground`, where n = agents.size() = bundles.size(). Cells are independent
// and evaluated in parallel under Exec::parallel.
EEFXGraph build_eefx_graph(AgentOracles agents, Bundle ground, std::span<const Bundle> bundles,
                           const GraphOptions& options = {});
EEFXGraph build_eefx_graph(const Instance& inst, const Allocation& partition, const GraphOptions& options = {});

// Maximum-cardinality matching by augmenting paths, agents in ascending
// order, bundles tried in ascending order.
std::vector<MatchPair> max_bipartite_matching(const EEFXGraph& g);

// A perfect matching if one exists; otherwise a nonempty matching whose
// bundles are adjacent to exactly the matched agents. Throws
// ContractViolation when no such matching can be formed.
ClosedMatching find_closed_matching(const EEFXGraph& g);

// Injective on both sides, every pair an edge, and the union of the matched
// bundles' neighborhoods equals the set of matched agents.
bool is_closed_matching(const EEFXGraph& g, const ClosedMatching& m);

}  // namespace eefx
