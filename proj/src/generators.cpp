#include "eefx/generators.hpp"

#include <algorithm>
#include <string>

#include "eefx/errors.hpp"
#include "eefx/reduction.hpp"

namespace eefx {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void require_sizes(const GenParams& p, int min_n) {
  if (p.n < min_n) throw InputError("family " + p.family + " needs n >= " + std::to_string(min_n));
  if (p.m < 0 || p.m > kMaxItems) throw InputError("m must be in [0, 64]");
}

ValuationModel random_of_kind(Rng& rng, const std::string& kind, int m) {
  if (kind == "additive") return random_additive(rng, m);
  if (kind == "coverage") return random_coverage(rng, m);
  if (kind == "table") return random_monotone_table(rng, m);
  if (kind == "mixed") return random_monotone(rng, m);
  throw InputError("unknown valuation kind \"" + kind + "\" (additive, coverage, table, mixed)");
}

}  // namespace

ValuationModel random_additive(Rng& rng, int m, int max_value) {
  std::vector<Rational> values;
  for (int g = 0; g < m; ++g) values.emplace_back(uniform(rng, 0, max_value));
  return ValuationModel::additive(std::move(values));
}

ValuationModel random_coverage(Rng& rng, int m, int elements, int max_weight) {
  if (elements <= 0) elements = std::max(1, m + m / 2);
  std::vector<Rational> weights;
  for (int e = 0; e < elements; ++e) weights.emplace_back(uniform(rng, 1, max_weight));
  std::vector<std::vector<int>> covers(m);
  for (int g = 0; g < m; ++g) {
    const int count = uniform(rng, 1, std::min(3, elements));
    for (int c = 0; c < count; ++c) covers[g].push_back(uniform(rng, 0, elements - 1));
  }
  return ValuationModel::coverage(m, std::move(weights), std::move(covers));
}

ValuationModel random_monotone_table(Rng& rng, int m, int max_step) {
  if (m > 20) throw SizeError("random tables are limited to 20 items");
  const std::size_t count = std::size_t{1} << m;
  std::vector<std::size_t> order(count);
  for (std::size_t s = 0; s < count; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<Rational> values(count);
  for (std::size_t s : order) {
    if (s == 0) continue;
    Rational floor = 0;
    for_each_item(Bundle(s), [&](Item g) { floor = std::max(floor, values[s & ~(std::size_t{1} << g)]); });
    values[s] = floor + uniform(rng, 0, max_step);
  }
  return ValuationModel::table(m, std::move(values), true);
}

ValuationModel random_monotone(Rng& rng, int m) {
  switch (uniform(rng, 0, 2)) {
    case 0: return random_additive(rng, m);
    case 1: return random_coverage(rng, m);
    default: return random_monotone_table(rng, m);
  }
}

Instance table1_instance() {
  const std::vector<std::vector<int>> rows = {
      {100, 100, 100, 1, 1, 1, 1},
      {1, 1, 1, 100, 100, 100, 1},
      {1, 50, 50, 1, 1, 1, 55},
  };
  Instance inst;
  inst.items = default_item_names(7);
  for (const auto& row : rows) {
    std::vector<Rational> values(row.begin(), row.end());
    inst.valuations.push_back(ValuationModel::additive(std::move(values)));
  }
  inst.family = "table1";
  return inst;
}

Instance mnw_counterexample_instance(const Rational& eps) {
  Instance inst;
  inst.items = {"a", "b", "c"};
  inst.valuations.push_back(ValuationModel::additive({Rational(10), Rational(1), eps}));
  inst.valuations.push_back(ValuationModel::additive({Rational(10), eps, Rational(1)}));
  inst.family = "footnote-mnw";
  return inst;
}

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> families = {"additive-uniform", "table",  "coverage",     "mixed",
                                                    "identical",        "table1", "footnote-mnw", "reduced"};
  return families;
}

Instance generate_instance(const GenParams& p) {
  if (p.family == "table1") return table1_instance();
  if (p.family == "footnote-mnw") {
    if (p.eps <= 0) throw InputError("footnote-mnw needs eps > 0");
    return mnw_counterexample_instance(p.eps);
  }

  Rng rng(p.seed);
  Instance inst;
  if (p.family == "reduced") {
    require_sizes(p, 2);
    const ValuationModel base = random_of_kind(rng, p.kind, p.m);
    inst = build_reduced_instance(base, p.n).to_instance(default_item_names(p.m));
  } else {
    require_sizes(p, 1);
    inst.items = default_item_names(p.m);
    if (p.family == "identical") {
      inst.valuations.assign(p.n, random_of_kind(rng, p.kind, p.m));
    } else {
      std::string kind;
      if (p.family == "additive-uniform") kind = "additive";
      else if (p.family == "table") kind = "table";
      else if (p.family == "coverage") kind = "coverage";
      else if (p.family == "mixed") kind = "mixed";
      else throw InputError("unknown generator family \"" + p.family + "\"");
      for (int i = 0; i < p.n; ++i) inst.valuations.push_back(random_of_kind(rng, kind, p.m));
    }
  }
  inst.family = p.family;
  inst.seed = p.seed;
  return inst;
}

}  // namespace eefx
