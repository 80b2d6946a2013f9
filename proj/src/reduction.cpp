#include "eefx/reduction.hpp"

#include <optional>
#include <string>

#include "eefx/errors.hpp"

namespace eefx {

Bundle ReducedInstance::heavy_set() const { return Bundle::from_items(heavy_items); }

Instance ReducedInstance::to_instance(const std::vector<std::string>& base_names) const {
  if (static_cast<int>(base_names.size()) != base_items) throw InputError("need one name per base item");
  Instance inst;
  inst.items = base_names;
  for (std::size_t h = 0; h < heavy_items.size(); ++h) inst.items.push_back("h" + std::to_string(h + 1));
  inst.valuations.assign(n, v_prime);
  inst.reduced = ReducedProvenance{base_items, heavy_items, heavy_value};
  inst.family = "reduced";
  return inst;
}

ReducedInstance build_reduced_instance(const ValuationModel& v, int n) {
  if (n < 2) throw InputError("the heavy-item reduction needs n >= 2, got " + std::to_string(n));
  const int m = v.item_count();
  if (m + n - 2 > kMaxItems) throw InputError("reduced instance would exceed 64 items");
  ReducedInstance r;
  r.base_items = m;
  r.n = n;
  r.heavy_value = 2 * v.value(Bundle::full(m)) + 1;
  for (int h = 0; h < n - 2; ++h) r.heavy_items.push_back(m + h);
  r.v_prime = ValuationModel::heavy_extension(v, n - 2, r.heavy_value);
  return r;
}

ReducedInstance reduced_from_instance(const Instance& inst) {
  if (!inst.reduced) throw InputError("instance carries no reduction provenance");
  const auto& p = *inst.reduced;
  const int heavy = inst.m() - p.base_items;
  if (heavy < 0 || inst.n() != heavy + 2) throw InputError("reduction provenance does not match the instance shape");
  if (static_cast<int>(p.heavy_items.size()) != heavy) throw InputError("heavy item list does not match the instance");
  for (int h = 0; h < heavy; ++h)
    if (p.heavy_items[h] != p.base_items + h) throw InputError("heavy items must follow the base items");
  const auto* ext = std::get_if<HeavyExtension>(&inst.valuations.front().kind());
  if (ext == nullptr) throw InputError("reduced instance valuations must be heavy extensions");
  for (const auto& v : inst.valuations)
    if (!(v == inst.valuations.front())) throw InputError("reduced instance valuations must be identical");
  if (ext->base_items != p.base_items || ext->heavy_value != p.heavy_value)
    throw InputError("reduction provenance disagrees with the valuation");
  ReducedInstance r = build_reduced_instance(*ext->base, inst.n());
  if (r.heavy_value != p.heavy_value) throw InputError("heavy value is not 2 v(M) + 1");
  return r;
}

Allocation extract_efx(const ReducedInstance& r, const Allocation& a) {
  // Shape is checked in two steps so that a malformed allocation with too
  // few heavy-free bundles reports the contract failure, not a count mismatch.
  validate_allocation(a, a.n(), Bundle::full(r.item_count()));
  const Bundle heavy = r.heavy_set();
  std::optional<int> lowest;
  Rational lowest_value;
  int heavy_free = 0;
  for (int i = 0; i < a.n(); ++i) {
    if (!a.bundles[i].disjoint(heavy)) continue;
    ++heavy_free;
    Rational value = r.v_prime.value(a.bundles[i]);
    if (!lowest || value < lowest_value) {
      lowest = i;
      lowest_value = std::move(value);
    }
  }
  if (heavy_free < 2)
    throw ContractViolation("allocation has " + std::to_string(heavy_free) +
                            " heavy-free bundles; a genuine allocation of n-2 heavy items leaves at least two");
  if (a.n() != r.n) throw InputError("allocation has " + std::to_string(a.n()) + " bundles, expected " +
                                     std::to_string(r.n));
  const Bundle first = a.bundles[*lowest];
  return Allocation{{first, r.base_set() - first}};
}

}  // namespace eefx
