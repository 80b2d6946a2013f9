#include "eefx/verify.hpp"

#include <string>

#include "eefx/errors.hpp"
#include "tabulate.hpp"

namespace eefx {

namespace {

int item_count_of(AgentOracles agents) {
  if (agents.empty()) throw InputError("no agents");
  const int m = agents.front()->item_count();
  for (const auto* v : agents)
    if (v->item_count() != m) throw InputError("agents disagree on the item count");
  return m;
}

void check_shape(AgentOracles agents, const Allocation& x) {
  validate_allocation(x, static_cast<int>(agents.size()), Bundle::full(item_count_of(agents)));
}

FairnessReport finish(Criterion c, std::vector<Violation> witnesses) {
  FairnessReport r;
  r.criterion = c;
  r.satisfied = witnesses.empty();
  r.witnesses = std::move(witnesses);
  return r;
}

}  // namespace

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::EF: return "ef";
    case Criterion::EF1: return "ef1";
    case Criterion::EFX: return "efx";
    case Criterion::PROP: return "prop";
    case Criterion::EEFX: return "eefx";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (Criterion c : {Criterion::EF, Criterion::EF1, Criterion::EFX, Criterion::PROP, Criterion::EEFX})
    if (criterion_name(c) == name) return c;
  throw InputError("unknown criterion \"" + std::string(name) + "\"");
}

std::optional<Item> strongly_envies(const ValuationOracle& v, Bundle held, Bundle other) {
  if (other.empty()) return std::nullopt;
  const Rational mine = v.value(held);
  std::optional<Item> witness;
  for_each_item(other, [&](Item g) {
    if (!witness && mine < v.value(other.without(g))) witness = g;
  });
  return witness;
}

FairnessReport is_efx(AgentOracles agents, const Allocation& x) {
  check_shape(agents, x);
  std::vector<Violation> witnesses;
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) {
      if (i == j) continue;
      if (auto g = strongly_envies(*agents[i], x.bundles[i], x.bundles[j])) witnesses.push_back({i, j, *g});
    }
  return finish(Criterion::EFX, std::move(witnesses));
}

FairnessReport check_classic(AgentOracles agents, const Allocation& x, Criterion criterion) {
  if (criterion == Criterion::EFX) return is_efx(agents, x);
  if (criterion == Criterion::EEFX) return is_eefx_allocation(agents, x);
  check_shape(agents, x);
  const int n = x.n();
  std::vector<Violation> witnesses;
  for (int i = 0; i < n; ++i) {
    const ValuationOracle& v = *agents[i];
    const Rational mine = v.value(x.bundles[i]);
    if (criterion == Criterion::PROP) {
      if (mine * n < v.value(Bundle::full(v.item_count()))) witnesses.push_back({i, -1, std::nullopt});
      continue;
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bundle other = x.bundles[j];
      if (criterion == Criterion::EF) {
        if (mine < v.value(other)) witnesses.push_back({i, j, std::nullopt});
        continue;
      }
      // EF1: some single removal clears the envy; an empty bundle never violates.
      if (other.empty()) continue;
      bool cleared = false;
      for_each_item(other, [&](Item g) {
        if (!cleared && mine >= v.value(other.without(g))) cleared = true;
      });
      if (!cleared) witnesses.push_back({i, j, std::nullopt});
    }
  }
  return finish(criterion, std::move(witnesses));
}

FairnessReport is_eefx_allocation(AgentOracles agents, const Allocation& x, const SearchOptions& options) {
  check_shape(agents, x);
  const Bundle ground = Bundle::full(agents.front()->item_count());
  std::vector<Violation> witnesses;
  for (int i = 0; i < x.n(); ++i)
    if (!certify(*agents[i], x.bundles[i], ground, x.n(), options)) witnesses.push_back({i, -1, std::nullopt});
  return finish(Criterion::EEFX, std::move(witnesses));
}

FairnessReport check_criterion(AgentOracles agents, const Allocation& x, Criterion criterion,
                               const SearchOptions& options) {
  if (criterion == Criterion::EEFX) return is_eefx_allocation(agents, x, options);
  return check_classic(agents, x, criterion);
}

FairnessReport is_efx(const Instance& inst, const Allocation& x) {
  const auto agents = inst.oracles();
  return is_efx(agents, x);
}

FairnessReport check_classic(const Instance& inst, const Allocation& x, Criterion criterion) {
  const auto agents = inst.oracles();
  return check_classic(agents, x, criterion);
}

FairnessReport is_eefx_allocation(const Instance& inst, const Allocation& x, const SearchOptions& options) {
  const auto agents = inst.oracles();
  return is_eefx_allocation(agents, x, options);
}

FairnessReport check_criterion(const Instance& inst, const Allocation& x, Criterion criterion,
                               const SearchOptions& options) {
  const auto agents = inst.oracles();
  return check_criterion(agents, x, criterion, options);
}

std::vector<Allocation> mnw_allocations(AgentOracles agents, int m, std::uint64_t max_allocations) {
  const int n = static_cast<int>(agents.size());
  if (n == 0) throw InputError("no agents");
  if (item_count_of(agents) != m) throw InputError("item count does not match the agents");
  if (n == 1) return {Allocation{{Bundle::full(m)}}};
  if (m > 20) throw SizeError("MNW enumeration is limited to 20 items");
  std::uint64_t total = 1;
  for (int g = 0; g < m; ++g) {
    if (total > max_allocations / n) throw SizeError("MNW enumeration exceeds the allocation cap");
    total *= n;
  }
  if (total > max_allocations) throw SizeError("MNW enumeration exceeds the allocation cap");

  const SubsetIndex everything(Bundle::full(m));
  std::vector<std::vector<Rational>> tables;
  tables.reserve(n);
  for (const auto* v : agents) tables.push_back(detail::tabulate_subsets(*v, everything, Exec::parallel));

  std::vector<Allocation> best;
  int best_positive = -1;
  Rational best_product;
  std::vector<int> owner(m, 0);  // owner[0] is the most significant digit
  std::vector<std::uint64_t> masks(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(masks.begin(), masks.end(), 0);
    for (int g = 0; g < m; ++g) masks[owner[g]] |= std::uint64_t{1} << g;
    int positive = 0;
    Rational product = 1;
    for (int i = 0; i < n; ++i) {
      const Rational& value = tables[i][masks[i]];
      if (value > 0) {
        ++positive;
        product *= value;
      }
    }
    if (positive > best_positive || (positive == best_positive && product > best_product)) {
      best.clear();
      best_positive = positive;
      best_product = product;
    }
    if (positive == best_positive && product == best_product) {
      Allocation a;
      for (auto mask : masks) a.bundles.emplace_back(mask);
      best.push_back(std::move(a));
    }
    for (int g = m - 1; g >= 0; --g) {
      if (++owner[g] < n) break;
      owner[g] = 0;
    }
  }
  return best;
}

std::vector<Allocation> mnw_allocations(const Instance& inst, std::uint64_t max_allocations) {
  const auto agents = inst.oracles();
  return mnw_allocations(agents, inst.m(), max_allocations);
}

}  // namespace eefx
