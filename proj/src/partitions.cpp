#include "eefx/partitions.hpp"

#include <algorithm>
#include <limits>

namespace eefx {

namespace {

void grow_prefixes(int depth, int max_blocks, PartitionPrefix& current, std::vector<PartitionPrefix>& out) {
  if (static_cast<int>(current.labels.size()) == depth) {
    out.push_back(current);
    return;
  }
  const int used = current.blocks_used;
  const int limit = used < max_blocks ? used + 1 : used;
  for (int b = 0; b < limit; ++b) {
    current.labels.push_back(b);
    current.blocks_used = b == used ? used + 1 : used;
    grow_prefixes(depth, max_blocks, current, out);
    current.labels.pop_back();
    current.blocks_used = used;
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::vector<PartitionPrefix> partition_prefixes(int t, int max_blocks, int depth) {
  std::vector<PartitionPrefix> out;
  if (max_blocks <= 0) {
    if (t == 0) out.push_back({});
    return out;
  }
  PartitionPrefix current;
  grow_prefixes(std::min(depth, t), max_blocks, current, out);
  return out;
}

std::uint64_t count_partitions(int t, int k) {
  if (t == 0) return 1;
  if (k <= 0) return 0;
  // stirling[j] = S(i, j) row by row.
  std::vector<std::uint64_t> stirling(k + 1, 0);
  stirling[0] = 1;
  for (int i = 1; i <= t; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      stirling[j] = saturating_add(saturating_mul(j, stirling[j]), stirling[j - 1]);
    stirling[0] = 0;
  }
  std::uint64_t total = 0;
  for (int j = 1; j <= k; ++j) total = saturating_add(total, stirling[j]);
  return total;
}

}  // namespace eefx
