#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/valuation.hpp"

namespace eefx {

using AgentOracles = std::span<const ValuationOracle* const>;

// Present on instances produced by the heavy-item reduction.
struct ReducedProvenance {
  int base_items = 0;
  std::vector<Item> heavy_items;
  Rational heavy_value;

  friend bool operator==(const ReducedProvenance&, const ReducedProvenance&) = default;
};

struct Instance {
  std::vector<std::string> items;
  std::vector<ValuationModel> valuations;
  std::optional<ReducedProvenance> reduced;
  // Generator metadata, carried through serialization.
  std::string family;
  std::optional<std::uint64_t> seed;

  int n() const { return static_cast<int>(valuations.size()); }
  int m() const { return static_cast<int>(items.size()); }
  Bundle all_items() const { return Bundle::full(m()); }
  std::vector<const ValuationOracle*> oracles() const;

  // Throws InputError unless n >= 1, m <= 64 and all valuations share m.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Default item names: g1, g2, ...
std::vector<std::string> default_item_names(int m);

struct Allocation {
  std::vector<Bundle> bundles;

  int n() const { return static_cast<int>(bundles.size()); }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Throws InputError unless `a` has n pairwise-disjoint bundles covering `ground`.
void validate_allocation(const Allocation& a, int n, Bundle ground);

}  // namespace eefx
