#include "eefx/matching.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "eefx/errors.hpp"

namespace eefx {

bool EEFXGraph::row_full(int agent) const {
  for (int j = 0; j < n_; ++j)
    if (!edge(agent, j)) return false;
  return true;
}

EEFXGraph build_eefx_graph(AgentOracles agents, Bundle ground, std::span<const Bundle> bundles,
                           const GraphOptions& options) {
  const int n = static_cast<int>(agents.size());
  if (static_cast<int>(bundles.size()) != n)
    throw InputError("EEFX-graph needs as many bundles as agents");
  validate_allocation(Allocation{{bundles.begin(), bundles.end()}}, n, ground);
  for (const auto* v : agents)
    if (ground.span() > v->item_count()) throw InputError("ground set names items outside a valuation");
  for (Bundle b : bundles)
    if ((ground - b).size() > options.search.max_items)
      throw SizeError("certificate search over " + std::to_string((ground - b).size()) + " items exceeds cap " +
                      std::to_string(options.search.max_items));

  EEFXGraph g(n);
  auto cell = [&](int i, int j) {
    const auto& v = *agents[i];
    const bool member = options.use_fast_accept ? certify(v, bundles[j], ground, n, options.search).has_value()
                                                : is_member_eefx(v, bundles[j], ground, n, options.search);
    g.set_edge(i, j, member);
  };

  const std::int64_t cells = static_cast<std::int64_t>(n) * n;
  if (options.search.exec == Exec::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < cells; ++c) {
      try {
        cell(static_cast<int>(c / n), static_cast<int>(c % n));
      } catch (...) {
#pragma omp critical(eefx_graph_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t c = 0; c < cells; ++c) cell(static_cast<int>(c / n), static_cast<int>(c % n));
  }
  return g;
}

EEFXGraph build_eefx_graph(const Instance& inst, const Allocation& partition, const GraphOptions& options) {
  const auto agents = inst.oracles();
  return build_eefx_graph(agents, inst.all_items(), partition.bundles, options);
}

namespace {

bool augment(const EEFXGraph& g, int agent, std::vector<int>& owner, std::vector<std::uint8_t>& seen) {
  for (int j = 0; j < g.size(); ++j) {
    if (!g.edge(agent, j) || seen[j]) continue;
    seen[j] = 1;
    if (owner[j] < 0 || augment(g, owner[j], owner, seen)) {
      owner[j] = agent;
      return true;
    }
  }
  return false;
}

std::vector<MatchPair> pairs_by_agent(const std::vector<int>& owner) {
  std::vector<MatchPair> pairs;
  for (int j = 0; j < static_cast<int>(owner.size()); ++j)
    if (owner[j] >= 0) pairs.push_back({owner[j], j});
  std::sort(pairs.begin(), pairs.end(), [](const MatchPair& a, const MatchPair& b) { return a.agent < b.agent; });
  return pairs;
}

}  // namespace

std::vector<MatchPair> max_bipartite_matching(const EEFXGraph& g) {
  const int n = g.size();
  std::vector<int> owner(n, -1);  // bundle -> agent
  std::vector<std::uint8_t> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(g, i, owner, seen);
  }
  return pairs_by_agent(owner);
}

ClosedMatching find_closed_matching(const EEFXGraph& g) {
  const int n = g.size();
  const auto maximum = max_bipartite_matching(g);
  if (static_cast<int>(maximum.size()) == n) return ClosedMatching{maximum, true};

  std::vector<int> mate(n, -1);   // agent -> bundle
  std::vector<int> owner(n, -1);  // bundle -> agent
  for (const auto& p : maximum) {
    mate[p.agent] = p.bundle;
    owner[p.bundle] = p.agent;
  }

  // From an unmatched bundle, follow alternating paths: bundle -> any
  // adjacent agent -> that agent's matched bundle. Every reached agent is
  // matched (otherwise the matching could be augmented) and the reached
  // agents are exactly the neighbors of the reached bundles other than the
  // start, so pairing them with their mates gives a closed matching.
  for (int start = 0; start < n; ++start) {
    if (owner[start] >= 0) continue;
    std::vector<std::uint8_t> bundle_seen(n, 0);
    std::vector<std::uint8_t> agent_seen(n, 0);
    std::vector<int> queue{start};
    bundle_seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int b = queue[head];
      for (int a = 0; a < n; ++a) {
        if (!g.edge(a, b) || agent_seen[a]) continue;
        agent_seen[a] = 1;
        if (mate[a] < 0) throw ContractViolation("matching passed to closure search is not maximum");
        if (!bundle_seen[mate[a]]) {
          bundle_seen[mate[a]] = 1;
          queue.push_back(mate[a]);
        }
      }
    }
    ClosedMatching closed;
    for (int a = 0; a < n; ++a)
      if (agent_seen[a]) closed.pairs.push_back({a, mate[a]});
    if (closed.pairs.empty()) continue;
    if (!is_closed_matching(g, closed)) throw ContractViolation("alternating-path matching failed the closure check");
    return closed;
  }
  throw ContractViolation("EEFX-graph admits no nonempty closed matching: every unmatched bundle is isolated");
}

bool is_closed_matching(const EEFXGraph& g, const ClosedMatching& m) {
  const int n = g.size();
  if (n == 0) return m.pairs.empty();
  if (m.pairs.empty()) return false;
  std::vector<std::uint8_t> agent_in(n, 0);
  std::vector<std::uint8_t> bundle_in(n, 0);
  for (const auto& p : m.pairs) {
    if (p.agent < 0 || p.agent >= n || p.bundle < 0 || p.bundle >= n) return false;
    if (agent_in[p.agent] || bundle_in[p.bundle]) return false;
    if (!g.edge(p.agent, p.bundle)) return false;
    agent_in[p.agent] = 1;
    bundle_in[p.bundle] = 1;
  }
  for (int b = 0; b < n; ++b) {
    if (!bundle_in[b]) continue;
    for (int a = 0; a < n; ++a)
      if (g.edge(a, b) && !agent_in[a]) return false;
  }
  if (m.perfect && static_cast<int>(m.pairs.size()) != n) return false;
  return true;
}

}  // namespace eefx
