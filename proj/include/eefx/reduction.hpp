#pragma once

#include <memory>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/instance.hpp"
#include "eefx/rational.hpp"
#include "eefx/valuation.hpp"

namespace eefx {

// n identical agents over the base items plus n-2 heavy items, each heavy
// item worth 2 v(M) + 1 and additive on top of the base valuation.
struct ReducedInstance {
  int base_items = 0;
  std::vector<Item> heavy_items;  // base_items, ..., base_items + n - 3
  int n = 2;
  ValuationModel v_prime;
  Rational heavy_value;

  Bundle base_set() const { return Bundle::full(base_items); }
  Bundle heavy_set() const;
  int item_count() const { return base_items + static_cast<int>(heavy_items.size()); }

  // Base items keep `base_names`; heavy items are named h1, h2, ...
  Instance to_instance(const std::vector<std::string>& base_names) const;
};

// Throws InputError when n < 2 or the extended item count exceeds 64.
ReducedInstance build_reduced_instance(const ValuationModel& v, int n);

// Recovers the gadget from an instance written by to_instance.
ReducedInstance reduced_from_instance(const Instance& inst);

// Maps an EEFX allocation of the gadget to a two-agent split (A1, M \ A1) of
// the base items, A1 being the lowest-valued heavy-free bundle (lowest index
// on ties). Throws ContractViolation with fewer than two heavy-free bundles.
Allocation extract_efx(const ReducedInstance& r, const Allocation& a);

}  // namespace eefx
