#include "eefx/identical_efx.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "eefx/errors.hpp"
#include "eefx/partitions.hpp"
#include "tabulate.hpp"

namespace eefx {

namespace {

Allocation to_allocation(const SubsetIndex& index, std::span<const std::uint64_t> blocks, int n) {
  Allocation a;
  a.bundles.assign(n, Bundle{});
  for (std::size_t b = 0; b < blocks.size(); ++b) a.bundles[b] = index.expand(blocks[b]);
  return a;
}

Allocation partition_direct(const ValuationOracle& v, const SubsetIndex& index, int n) {
  std::optional<LeximinSignature> best_signature;
  std::vector<std::uint64_t> best_blocks;
  std::vector<Bundle> bundles(n);
  for_each_partition(index.size(), n, [&](std::span<const std::uint64_t> blocks) {
    for (int b = 0; b < n; ++b) bundles[b] = index.expand(blocks[b]);
    auto signature = leximin_signature(v, bundles);
    if (!best_signature || *best_signature < signature) {
      best_signature = std::move(signature);
      best_blocks.assign(blocks.begin(), blocks.end());
    }
    return true;
  });
  return to_allocation(index, best_blocks, n);
}

// Packed (value rank, size) keys; ranks preserve the exact value order, so
// comparing packed signatures is comparing leximin++ signatures.
using PackedSignature = std::vector<std::uint64_t>;

struct RangeBest {
  PackedSignature signature;
  std::vector<std::uint64_t> blocks;
};

Allocation partition_tabulated(const ValuationOracle& v, const SubsetIndex& index, int n) {
  const int t = index.size();
  const auto ranks = detail::rank_values(detail::tabulate_subsets(v, index, Exec::parallel));
  const auto prefixes = partition_prefixes(t, n, std::min(t, 6));
  const std::int64_t ranges = static_cast<std::int64_t>(prefixes.size());
  std::vector<std::optional<RangeBest>> results(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r = 0; r < ranges; ++r) {
    PackedSignature signature(n);
    std::optional<RangeBest> best;
    for_each_partition(t, n, prefixes[r], [&](std::span<const std::uint64_t> blocks) {
      for (int b = 0; b < n; ++b)
        signature[b] = (std::uint64_t{ranks[blocks[b]]} << 8) | static_cast<std::uint64_t>(std::popcount(blocks[b]));
      std::sort(signature.begin(), signature.end());
      if (!best || best->signature < signature) {
        if (!best) best.emplace();
        best->signature = signature;
        best->blocks.assign(blocks.begin(), blocks.end());
      }
      return true;
    });
    results[r] = std::move(best);
  }

  // Ranges are in canonical order; keep the earliest among equal maxima.
  const RangeBest* winner = nullptr;
  for (const auto& result : results)
    if (result && (!winner || winner->signature < result->signature)) winner = &*result;
  return to_allocation(index, winner->blocks, n);
}

}  // namespace

LeximinSignature leximin_signature(const ValuationOracle& v, const std::vector<Bundle>& bundles) {
  LeximinSignature signature;
  signature.reserve(bundles.size());
  for (Bundle b : bundles) signature.emplace_back(v.value(b), b.size());
  std::sort(signature.begin(), signature.end());
  return signature;
}

Allocation identical_efx_partition(const ValuationOracle& v, Bundle items, int n, const PartitionOptions& options) {
  if (n < 1) throw InputError("identical EFX partition needs n >= 1, got " + std::to_string(n));
  if (items.span() > v.item_count()) throw InputError("item set names items outside the valuation");
  if (items.size() > options.max_items)
    throw SizeError("partition enumeration over " + std::to_string(items.size()) + " items exceeds cap " +
                    std::to_string(options.max_items));
  const SubsetIndex index(items);
  if (n == 1) return Allocation{{items}};
  return options.exec == Exec::parallel ? partition_tabulated(v, index, n) : partition_direct(v, index, n);
}

}  // namespace eefx
