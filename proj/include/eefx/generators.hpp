#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eefx/instance.hpp"
#include "eefx/valuation.hpp"

namespace eefx {

using Rng = std::mt19937_64;

// Random monotone valuations with small integer values, so ties are common.
ValuationModel random_additive(Rng& rng, int m, int max_value = 20);
// Universe of `elements` weighted elements; each item covers 1..3 of them.
ValuationModel random_coverage(Rng& rng, int m, int elements = 0, int max_weight = 10);
// Built in popcount order: v(S) = max over g of v(S - g) plus a random step.
ValuationModel random_monotone_table(Rng& rng, int m, int max_step = 6);

// One of the three kinds above, picked uniformly.
ValuationModel random_monotone(Rng& rng, int m);

// The 3-agent, 7-good additive example with goods g1..g7.
Instance table1_instance();
// Two agents over {a, b, c}: agent 1 values (10, 1, eps), agent 2 (10, eps, 1).
Instance mnw_counterexample_instance(const Rational& eps = Rational(1, 10));

struct GenParams {
  std::string family;  // additive-uniform, table, coverage, mixed, identical,
                       // table1, footnote-mnw, reduced
  std::uint64_t seed = 0;
  int n = 2;
  int m = 4;
  std::string kind = "coverage";  // valuation kind for identical / reduced
  Rational eps = Rational(1, 10);  // footnote-mnw
};

const std::vector<std::string>& generator_families();

// Deterministic for fixed params. Throws InputError on unknown families or
// invalid sizes.
Instance generate_instance(const GenParams& params);

}  // namespace eefx
