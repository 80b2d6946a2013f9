#include "eefx/instance.hpp"

#include <string>

#include "eefx/errors.hpp"

namespace eefx {

std::vector<const ValuationOracle*> Instance::oracles() const {
  std::vector<const ValuationOracle*> out;
  out.reserve(valuations.size());
  for (const auto& v : valuations) out.push_back(&v);
  return out;
}

void Instance::validate() const {
  if (valuations.empty()) throw InputError("an instance needs at least one agent");
  if (m() > kMaxItems) throw InputError("at most 64 items are supported");
  for (std::size_t i = 0; i < valuations.size(); ++i)
    if (valuations[i].item_count() != m())
      throw InputError("valuation of agent " + std::to_string(i) + " is over " +
                       std::to_string(valuations[i].item_count()) + " items, instance has " + std::to_string(m()));
}

std::vector<std::string> default_item_names(int m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (int g = 0; g < m; ++g) names.push_back("g" + std::to_string(g + 1));
  return names;
}

void validate_allocation(const Allocation& a, int n, Bundle ground) {
  if (a.n() != n)
    throw InputError("allocation has " + std::to_string(a.n()) + " bundles for " + std::to_string(n) + " agents");
  Bundle seen;
  for (int i = 0; i < a.n(); ++i) {
    const Bundle b = a.bundles[i];
    if (!b.subset_of(ground)) throw InputError("bundle " + std::to_string(i) + " holds items outside the item set");
    if (!b.disjoint(seen)) throw InputError("bundle " + std::to_string(i) + " overlaps an earlier bundle");
    seen = seen | b;
  }
  if (seen != ground) throw InputError("allocation leaves items unassigned");
}

}  // namespace eefx
