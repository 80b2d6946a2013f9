#include "eefx/valuation.hpp"

#include <algorithm>
#include <string>

#include "eefx/errors.hpp"
#include "tabulate.hpp"

namespace eefx {

namespace {

void require_items(int m) {
  if (m < 0 || m > kMaxItems) throw InputError("item count must be in [0, 64], got " + std::to_string(m));
}

void require_nonnegative(const Rational& r, const char* what) {
  if (r < 0) throw InputError(std::string(what) + " must be nonnegative, got " + r.get_str());
}

void require_cap(const ValuationOracle& v, int max_items) {
  if (v.item_count() > max_items)
    throw SizeError("exhaustive check over " + std::to_string(v.item_count()) + " items exceeds cap " +
                    std::to_string(max_items));
}

std::uint64_t subset_count(int m) { return std::uint64_t{1} << m; }

}  // namespace

bool operator==(const HeavyExtension& a, const HeavyExtension& b) {
  if (a.base_items != b.base_items || a.heavy_count != b.heavy_count || a.heavy_value != b.heavy_value)
    return false;
  if (!a.base || !b.base) return a.base == b.base;
  return *a.base == *b.base;
}

bool operator==(const ValuationModel& a, const ValuationModel& b) {
  return a.items_ == b.items_ && a.kind_ == b.kind_;
}

ValuationModel::ValuationModel(int items, Kind kind) : items_(items), kind_(std::move(kind)) {}

ValuationModel ValuationModel::additive(std::vector<Rational> item_values) {
  require_items(static_cast<int>(item_values.size()));
  for (const auto& x : item_values) require_nonnegative(x, "item value");
  const int m = static_cast<int>(item_values.size());
  return ValuationModel(m, AdditiveValuation{std::move(item_values)});
}

ValuationModel ValuationModel::table(int items, std::vector<Rational> values, bool validate) {
  require_items(items);
  if (items > 20) throw SizeError("explicit tables are limited to 20 items");
  if (values.size() != subset_count(items))
    throw InputError("table over " + std::to_string(items) + " items needs " + std::to_string(subset_count(items)) +
                     " entries, got " + std::to_string(values.size()));
  if (validate) {
    if (values[0] != 0) throw InputError("table value of the empty set must be 0");
    for (const auto& x : values) require_nonnegative(x, "table value");
    for (std::uint64_t s = 0; s < values.size(); ++s)
      for (int g = 0; g < items; ++g)
        if (!((s >> g) & 1U) && values[s | (std::uint64_t{1} << g)] < values[s])
          throw InputError("table is not monotone: adding item " + std::to_string(g) + " to subset mask " +
                           std::to_string(s) + " lowers its value");
  }
  return ValuationModel(items, TableValuation{items, std::move(values)});
}

ValuationModel ValuationModel::coverage(int items, std::vector<Rational> weights,
                                        std::vector<std::vector<int>> covers) {
  require_items(items);
  if (static_cast<int>(covers.size()) != items)
    throw InputError("coverage needs one element list per item");
  for (const auto& w : weights) require_nonnegative(w, "element weight");
  const std::size_t words = (weights.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(items, std::vector<std::uint64_t>(words, 0));
  for (int g = 0; g < items; ++g) {
    auto& list = covers[g];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (int e : list) {
      if (e < 0 || e >= static_cast<int>(weights.size()))
        throw InputError("coverage element " + std::to_string(e) + " out of range");
      bits[g][e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  ValuationModel v(items, CoverageValuation{std::move(weights), std::move(covers)});
  v.cover_words_ = std::move(bits);
  return v;
}

ValuationModel ValuationModel::heavy_extension(ValuationModel base, int heavy_count, Rational heavy_value) {
  if (heavy_count < 0) throw InputError("heavy item count must be nonnegative");
  require_nonnegative(heavy_value, "heavy value");
  const int base_items = base.item_count();
  require_items(base_items + heavy_count);
  return ValuationModel(base_items + heavy_count,
                        HeavyExtension{std::make_shared<const ValuationModel>(std::move(base)), base_items,
                                       heavy_count, std::move(heavy_value)});
}

ValuationModel ValuationModel::tabulate(const ValuationOracle& v) {
  require_cap(v, 20);
  SubsetIndex index(Bundle::full(v.item_count()));
  return table(v.item_count(), detail::tabulate_subsets(v, index, Exec::parallel), false);
}

Rational ValuationModel::value(Bundle items) const {
  if (items.span() > items_)
    throw InputError("bundle names item " + std::to_string(items.span() - 1) + " but the valuation has only " +
                     std::to_string(items_) + " items");
  struct Visitor {
    const ValuationModel& self;
    Bundle s;

    Rational operator()(const AdditiveValuation& a) const {
      Rational total = 0;
      for_each_item(s, [&](Item g) { total += a.item_values[g]; });
      return total;
    }
    Rational operator()(const TableValuation& t) const { return t.values[s.bits()]; }
    Rational operator()(const CoverageValuation& c) const {
      const std::size_t words = (c.weights.size() + 63) / 64;
      std::vector<std::uint64_t> covered(words, 0);
      for_each_item(s, [&](Item g) {
        for (std::size_t w = 0; w < words; ++w) covered[w] |= self.cover_words_[g][w];
      });
      Rational total = 0;
      for (std::size_t w = 0; w < words; ++w)
        for_each_item(Bundle(covered[w]), [&](int bit) { total += c.weights[w * 64 + bit]; });
      return total;
    }
    Rational operator()(const HeavyExtension& h) const {
      const Bundle base_part = s & Bundle::full(h.base_items);
      const int heavy = (s - base_part).size();
      Rational total = h.base->value(base_part);
      if (heavy > 0) total += h.heavy_value * heavy;
      return total;
    }
  };
  return std::visit(Visitor{*this, items}, kind_);
}

// The parallel checks tabulate once and scan the table; the serial ones
// query v directly for every comparison.

bool check_monotone(const ValuationOracle& v, int max_items) {
  require_cap(v, max_items);
  const int m = v.item_count();
  const auto values = detail::tabulate_subsets(v, SubsetIndex(Bundle::full(m)), Exec::parallel);
  const std::int64_t count = static_cast<std::int64_t>(values.size());
  bool ok = values[0] == 0;
#pragma omp parallel for reduction(&& : ok) schedule(static)
  for (std::int64_t s = 0; s < count; ++s)
    for (int g = 0; g < m; ++g)
      if (!((s >> g) & 1) && values[s | (std::int64_t{1} << g)] < values[s]) ok = false;
  return ok;
}

bool check_submodular(const ValuationOracle& v, int max_items) {
  require_cap(v, max_items);
  const int m = v.item_count();
  const auto values = detail::tabulate_subsets(v, SubsetIndex(Bundle::full(m)), Exec::parallel);
  const std::int64_t count = static_cast<std::int64_t>(values.size());
  bool ok = true;
  // Diminishing marginal returns for every pair of outside items, which is
  // equivalent to v(S & T) + v(S | T) <= v(S) + v(T) over all pairs.
#pragma omp parallel for reduction(&& : ok) schedule(static)
  for (std::int64_t s = 0; s < count; ++s) {
    Rational lhs;
    Rational rhs;
    for (int g = 0; g < m; ++g) {
      if ((s >> g) & 1) continue;
      for (int h = g + 1; h < m; ++h) {
        if ((s >> h) & 1) continue;
        const std::int64_t sg = s | (std::int64_t{1} << g);
        const std::int64_t sh = s | (std::int64_t{1} << h);
        lhs = values[sg] + values[sh];
        rhs = values[sg | sh] + values[s];
        if (lhs < rhs) ok = false;
      }
    }
  }
  return ok;
}

bool check_additive(const ValuationOracle& v, int max_items) {
  require_cap(v, max_items);
  const int m = v.item_count();
  const auto values = detail::tabulate_subsets(v, SubsetIndex(Bundle::full(m)), Exec::parallel);
  const std::int64_t count = static_cast<std::int64_t>(values.size());
  bool ok = values[0] == 0;
#pragma omp parallel for reduction(&& : ok) schedule(static)
  for (std::int64_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(static_cast<std::uint64_t>(s));
    const std::int64_t rest = s & (s - 1);
    if (values[s] != values[rest] + values[std::int64_t{1} << low]) ok = false;
  }
  return ok;
}

namespace serial {

bool check_monotone(const ValuationOracle& v, int max_items) {
  require_cap(v, max_items);
  const int m = v.item_count();
  if (v.value(Bundle{}) != 0) return false;
  for (std::uint64_t s = 0; s < subset_count(m); ++s)
    for (int g = 0; g < m; ++g)
      if (!((s >> g) & 1U) && v.value(Bundle(s).with(g)) < v.value(Bundle(s))) return false;
  return true;
}

bool check_submodular(const ValuationOracle& v, int max_items) {
  require_cap(v, max_items);
  const int m = v.item_count();
  for (std::uint64_t s = 0; s < subset_count(m); ++s) {
    const Bundle base(s);
    for (int g = 0; g < m; ++g) {
      if (base.contains(g)) continue;
      for (int h = g + 1; h < m; ++h) {
        if (base.contains(h)) continue;
        if (v.value(base.with(g)) + v.value(base.with(h)) < v.value(base.with(g).with(h)) + v.value(base))
          return false;
      }
    }
  }
  return true;
}

bool check_additive(const ValuationOracle& v, int max_items) {
  require_cap(v, max_items);
  const int m = v.item_count();
  for (std::uint64_t s = 0; s < subset_count(m); ++s) {
    Rational sum = 0;
    for_each_item(Bundle(s), [&](Item g) { sum += v.value(Bundle{g}); });
    if (v.value(Bundle(s)) != sum) return false;
  }
  return true;
}

}  // namespace serial

}  // namespace eefx
