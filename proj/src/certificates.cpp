#include "eefx/certificates.hpp"

#include <string>

#include "eefx/errors.hpp"
#include "eefx/identical_efx.hpp"
#include "tabulate.hpp"

namespace eefx {

namespace {

void check_arguments(const ValuationOracle& v, Bundle held, Bundle ground, int k, int max_items) {
  if (k < 1) throw InputError("certificate size k must be at least 1, got " + std::to_string(k));
  if (!held.subset_of(ground)) throw InputError("held bundle is not a subset of the ground set");
  if (ground.span() > v.item_count()) throw InputError("ground set names items outside the valuation");
  const int t = (ground - held).size();
  if (t > max_items)
    throw SizeError("certificate search over " + std::to_string(t) + " items exceeds cap " +
                    std::to_string(max_items));
}

Certificate make_certificate(const SubsetIndex& index, const std::vector<std::uint64_t>& blocks, int k,
                             Rational holder_value) {
  Certificate c;
  c.bundles.assign(k - 1, Bundle{});
  for (std::size_t b = 0; b < blocks.size(); ++b) c.bundles[b] = index.expand(blocks[b]);
  c.holder_value = std::move(holder_value);
  return c;
}

// Depth-first walk over restricted growth strings. An item joins an existing
// block only if the grown block stays acceptable; opening a new block is
// tried last, so the first complete assignment is the canonically first
// certificate.
template <typename BlockOk>
bool place_items(int pos, int t, int max_blocks, int used, std::vector<std::uint64_t>& blocks, BlockOk& ok) {
  if (pos == t) return true;
  const std::uint64_t bit = std::uint64_t{1} << pos;
  for (int b = 0; b < used; ++b) {
    const std::uint64_t grown = blocks[b] | bit;
    if (!ok(grown)) continue;
    blocks[b] = grown;
    if (place_items(pos + 1, t, max_blocks, used, blocks, ok)) return true;
    blocks[b] &= ~bit;
  }
  if (used < max_blocks && ok(bit)) {
    blocks[used] = bit;
    if (place_items(pos + 1, t, max_blocks, used + 1, blocks, ok)) return true;
    blocks[used] = 0;
  }
  return false;
}

template <typename BlockOk>
std::optional<std::vector<std::uint64_t>> search(int t, int k, BlockOk& ok) {
  // More than t blocks can never be nonempty.
  const int max_blocks = std::min(k - 1, t);
  std::vector<std::uint64_t> blocks(max_blocks, 0);
  if (t > 0 && max_blocks == 0) return std::nullopt;
  if (!place_items(0, t, max_blocks, 0, blocks, ok)) return std::nullopt;
  return blocks;
}

// Tabulates every subset of S \ A once (in parallel), then searches over
// table lookups only.
std::optional<Certificate> find_tabulated(const ValuationOracle& v, Bundle held, Bundle ground, int k) {
  const SubsetIndex index(ground - held);
  const int t = index.size();
  Rational holder = v.value(held);
  const auto values = detail::tabulate_subsets(v, index, Exec::parallel);
  const std::int64_t count = static_cast<std::int64_t>(values.size());

  std::vector<std::uint8_t> below(count);  // v(D) <= v(A)
#pragma omp parallel for schedule(static)
  for (std::int64_t d = 0; d < count; ++d) below[d] = values[d] <= holder;

  std::vector<std::uint8_t> acceptable(count);  // no removal from C exceeds v(A)
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < count; ++c) {
    bool fine = true;
    for (std::uint64_t rest = static_cast<std::uint64_t>(c); rest != 0 && fine; rest &= rest - 1)
      fine = below[c & ~(std::int64_t{1} << std::countr_zero(rest))] != 0;
    acceptable[c] = fine;
  }

  auto ok = [&](std::uint64_t block) { return acceptable[block] != 0; };
  auto blocks = search(t, k, ok);
  if (!blocks) return std::nullopt;
  return make_certificate(index, *blocks, k, std::move(holder));
}

// Reference path: every block test queries v directly.
std::optional<Certificate> find_direct(const ValuationOracle& v, Bundle held, Bundle ground, int k) {
  const SubsetIndex index(ground - held);
  Rational holder = v.value(held);
  auto ok = [&](std::uint64_t block) {
    const Bundle c = index.expand(block);
    bool fine = true;
    for_each_item(c, [&](Item g) {
      if (fine && v.value(c.without(g)) > holder) fine = false;
    });
    return fine;
  };
  auto blocks = search(index.size(), k, ok);
  if (!blocks) return std::nullopt;
  return make_certificate(index, *blocks, k, std::move(holder));
}

}  // namespace

std::optional<Certificate> find_certificate(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                                            const SearchOptions& options) {
  check_arguments(v, held, ground, k, options.max_items);
  return options.exec == Exec::parallel ? find_tabulated(v, held, ground, k) : find_direct(v, held, ground, k);
}

bool is_member_eefx(const ValuationOracle& v, Bundle held, Bundle ground, int k, const SearchOptions& options) {
  return find_certificate(v, held, ground, k, options).has_value();
}

std::optional<Certificate> fast_accept(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                                       const SearchOptions& options) {
  check_arguments(v, held, ground, k, options.max_items);
  const Bundle rest = ground - held;
  if (rest.empty()) return Certificate{std::vector<Bundle>(k - 1), v.value(held)};
  if (k == 1) return std::nullopt;
  const int blocks = std::min(k - 1, rest.size());
  Allocation split = identical_efx_partition(v, rest, blocks, PartitionOptions{options.exec, options.max_items});
  Certificate c{std::move(split.bundles), v.value(held)};
  c.bundles.resize(k - 1);
  if (!validate_certificate(v, held, ground, k, c)) return std::nullopt;
  return c;
}

std::optional<Certificate> certify(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                                   const SearchOptions& options) {
  if (auto quick = fast_accept(v, held, ground, k, options)) return quick;
  return find_certificate(v, held, ground, k, options);
}

bool validate_certificate(const ValuationOracle& v, Bundle held, Bundle ground, int k, const Certificate& c) {
  if (k < 1 || !held.subset_of(ground)) return false;
  if (static_cast<int>(c.bundles.size()) != k - 1) return false;
  Bundle covered;
  for (Bundle b : c.bundles) {
    if (!b.disjoint(covered)) return false;
    covered = covered | b;
  }
  if (covered != ground - held) return false;
  const Rational holder = v.value(held);
  if (holder != c.holder_value) return false;
  for (Bundle b : c.bundles) {
    bool fine = true;
    for_each_item(b, [&](Item g) {
      if (fine && holder < v.value(b.without(g))) fine = false;
    });
    if (!fine) return false;
  }
  return true;
}

}  // namespace eefx
