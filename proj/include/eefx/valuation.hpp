#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/rational.hpp"

namespace eefx {

// Value-query interface shared by every valuation kind and by the counting
// wrapper. Implementations must be safe for concurrent calls.
class ValuationOracle {
 public:
  virtual ~ValuationOracle() = default;
  virtual int item_count() const = 0;
  // Throws InputError if `items` names an index >= item_count().
  virtual Rational value(Bundle items) const = 0;
};

class ValuationModel;

struct AdditiveValuation {
  std::vector<Rational> item_values;
  friend bool operator==(const AdditiveValuation&, const AdditiveValuation&) = default;
};

// Dense table indexed by subset bitmask, covering all 2^m subsets.
struct TableValuation {
  int items = 0;
  std::vector<Rational> values;
  friend bool operator==(const TableValuation&, const TableValuation&) = default;
};

// v(S) = total weight of the union of the elements covered by S.
struct CoverageValuation {
  std::vector<Rational> weights;
  std::vector<std::vector<int>> covers;  // per item, element indices
  friend bool operator==(const CoverageValuation&, const CoverageValuation&) = default;
};

// v'(S) = base(S restricted to the first base_items items)
//         + heavy_value * (number of heavy items in S).
// Heavy items occupy indices [base_items, base_items + heavy_count).
struct HeavyExtension {
  std::shared_ptr<const ValuationModel> base;
  int base_items = 0;
  int heavy_count = 0;
  Rational heavy_value;
  // Compares the base valuations by value, not by pointer.
  friend bool operator==(const HeavyExtension& a, const HeavyExtension& b);
};

class ValuationModel final : public ValuationOracle {
 public:
  using Kind = std::variant<AdditiveValuation, TableValuation, CoverageValuation, HeavyExtension>;

  // The zero function over no items.
  ValuationModel() : ValuationModel(0, AdditiveValuation{}) {}

  static ValuationModel additive(std::vector<Rational> item_values);

  // With `validate`, rejects tables that are not normalized, have negative
  // entries, or violate monotonicity. Loading from files always validates;
  // the unchecked form exists so non-monotone functions can be probed.
  static ValuationModel table(int items, std::vector<Rational> values, bool validate = true);

  static ValuationModel coverage(int items, std::vector<Rational> weights,
                                 std::vector<std::vector<int>> covers);

  static ValuationModel heavy_extension(ValuationModel base, int heavy_count, Rational heavy_value);

  // Materializes every subset value; item_count() must be <= 20.
  static ValuationModel tabulate(const ValuationOracle& v);

  const Kind& kind() const { return kind_; }
  int item_count() const override { return items_; }
  Rational value(Bundle items) const override;

  friend bool operator==(const ValuationModel& a, const ValuationModel& b);

 private:
  ValuationModel(int items, Kind kind);

  int items_;
  Kind kind_;
  // Coverage only: per item, a bitset over elements.
  std::vector<std::vector<std::uint64_t>> cover_words_;
};

// Counts every value() call, including concurrent ones. The wrapped oracle
// must outlive the counter.
class CountedOracle final : public ValuationOracle {
 public:
  explicit CountedOracle(const ValuationOracle& inner) : inner_(&inner) {}
  CountedOracle(const CountedOracle&) = delete;
  CountedOracle& operator=(const CountedOracle&) = delete;

  int item_count() const override { return inner_->item_count(); }
  Rational value(Bundle items) const override {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_->value(items);
  }

  std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }
  void reset() { count_.store(0, std::memory_order_relaxed); }

 private:
  const ValuationOracle* inner_;
  mutable std::atomic<std::uint64_t> count_{0};
};

// Exhaustive axiom checks over all 2^m subsets. Each throws SizeError when
// item_count() exceeds `max_items`.
bool check_monotone(const ValuationOracle& v, int max_items = 20);
bool check_submodular(const ValuationOracle& v, int max_items = 20);
bool check_additive(const ValuationOracle& v, int max_items = 20);

// Single-threaded versions of the checks above, kept as the reference the
// parallel kernels are tested and benchmarked against.
namespace serial {
bool check_monotone(const ValuationOracle& v, int max_items = 20);
bool check_submodular(const ValuationOracle& v, int max_items = 20);
bool check_additive(const ValuationOracle& v, int max_items = 20);
}  // namespace serial

}  // namespace eefx
