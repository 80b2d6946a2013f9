#pragma once

#include <cstdint>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/caps.hpp"
#include "eefx/rational.hpp"
#include "eefx/valuation.hpp"

namespace eefx::detail {

// values[mask] = v(index.expand(mask)) for every local mask over `index`.
// Under Exec::parallel the 2^t queries are spread across OpenMP threads.
std::vector<Rational> tabulate_subsets(const ValuationOracle& v, const SubsetIndex& index, Exec exec);

// Dense ranks of `values`: equal values share a rank, order is preserved.
std::vector<std::uint32_t> rank_values(const std::vector<Rational>& values);

}  // namespace eefx::detail
