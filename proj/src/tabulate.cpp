#include "tabulate.hpp"

#include <algorithm>
#include <numeric>

namespace eefx::detail {

std::vector<Rational> tabulate_subsets(const ValuationOracle& v, const SubsetIndex& index, Exec exec) {
  const std::int64_t count = std::int64_t{1} << index.size();
  std::vector<Rational> values(static_cast<std::size_t>(count));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t mask = 0; mask < count; ++mask)
      values[mask] = v.value(index.expand(static_cast<std::uint64_t>(mask)));
  } else {
    for (std::int64_t mask = 0; mask < count; ++mask)
      values[mask] = v.value(index.expand(static_cast<std::uint64_t>(mask)));
  }
  return values;
}

std::vector<std::uint32_t> rank_values(const std::vector<Rational>& values) {
  std::vector<std::uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
  std::vector<std::uint32_t> rank(values.size());
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && values[order[i - 1]] < values[order[i]]) ++r;
    rank[order[i]] = r;
  }
  return rank;
}

}  // namespace eefx::detail
