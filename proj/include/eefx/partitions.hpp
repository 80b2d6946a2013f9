#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace eefx {

// Set partitions of local items {0, ..., t-1} into at most `max_blocks`
// blocks, encoded as restricted growth strings: labels[0] = 0 and
// labels[i] <= 1 + max(labels[0..i)). Canonical order is lexicographic order
// of the label strings.

// A fixed label assignment for the first items, used to split the
// enumeration into independent ranges.
struct PartitionPrefix {
  std::vector<int> labels;
  int blocks_used = 0;
};

// All valid prefixes of length min(depth, t), in canonical order.
std::vector<PartitionPrefix> partition_prefixes(int t, int max_blocks, int depth);

// Calls visit(std::span<const std::uint64_t> blocks) for every partition
// extending `prefix`, in canonical order. `blocks` holds max_blocks local
// masks; blocks beyond those used are 0. Stops early, returning false, as soon
// as visit returns false.
template <typename Visit>
bool for_each_partition(int t, int max_blocks, const PartitionPrefix& prefix, Visit&& visit);

template <typename Visit>
bool for_each_partition(int t, int max_blocks, Visit&& visit) {
  return for_each_partition(t, max_blocks, PartitionPrefix{}, visit);
}

// Number of partitions of t items into at most k blocks (sum of Stirling
// numbers of the second kind), saturating at UINT64_MAX.
std::uint64_t count_partitions(int t, int k);

namespace detail {

template <typename Visit>
bool extend_partition(int pos, int t, int max_blocks, int used, std::vector<std::uint64_t>& blocks,
                      Visit& visit) {
  if (pos == t) return visit(std::span<const std::uint64_t>(blocks));
  const std::uint64_t bit = std::uint64_t{1} << pos;
  const int limit = used < max_blocks ? used + 1 : used;
  for (int b = 0; b < limit; ++b) {
    blocks[b] |= bit;
    const bool keep_going =
        extend_partition(pos + 1, t, max_blocks, b == used ? used + 1 : used, blocks, visit);
    blocks[b] &= ~bit;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

template <typename Visit>
bool for_each_partition(int t, int max_blocks, const PartitionPrefix& prefix, Visit&& visit) {
  if (max_blocks <= 0) {
    if (t != 0) return true;
    std::vector<std::uint64_t> none;
    return visit(std::span<const std::uint64_t>(none));
  }
  std::vector<std::uint64_t> blocks(max_blocks, 0);
  for (std::size_t i = 0; i < prefix.labels.size(); ++i) blocks[prefix.labels[i]] |= std::uint64_t{1} << i;
  return detail::extend_partition(static_cast<int>(prefix.labels.size()), t, max_blocks, prefix.blocks_used,
                                  blocks, visit);
}

}  // namespace eefx
