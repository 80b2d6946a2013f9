#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace eefx {

using Item = int;

inline constexpr int kMaxItems = 64;

// A set of item indices in [0, 64), stored as a bitmask.
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint64_t bits) : bits_(bits) {}
  Bundle(std::initializer_list<Item> items) {
    for (Item g : items) insert(g);
  }

  static Bundle from_items(const std::vector<Item>& items) {
    Bundle b;
    for (Item g : items) b.insert(g);
    return b;
  }
  // {0, ..., m-1}
  static constexpr Bundle full(int m) {
    return Bundle(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Item g) const { return (bits_ >> g) & 1U; }
  constexpr void insert(Item g) { bits_ |= std::uint64_t{1} << g; }
  constexpr void erase(Item g) { bits_ &= ~(std::uint64_t{1} << g); }

  constexpr Bundle with(Item g) const { return Bundle(bits_ | (std::uint64_t{1} << g)); }
  constexpr Bundle without(Item g) const { return Bundle(bits_ & ~(std::uint64_t{1} << g)); }

  constexpr bool subset_of(Bundle other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Bundle other) const { return (bits_ & other.bits_) == 0; }
  // Largest member index + 1; 0 for the empty bundle.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  std::vector<Item> items() const {
    std::vector<Item> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr Bundle operator|(Bundle a, Bundle b) { return Bundle(a.bits_ | b.bits_); }
  friend constexpr Bundle operator&(Bundle a, Bundle b) { return Bundle(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr Bundle operator-(Bundle a, Bundle b) { return Bundle(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Bundle a, Bundle b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Iterate the members of a bundle in ascending order.
template <typename F>
void for_each_item(Bundle b, F&& f) {
  for (std::uint64_t bits = b.bits(); bits != 0; bits &= bits - 1) f(std::countr_zero(bits));
}

// Maps a local index space [0, |base|) onto the members of `base`, so that
// dense 2^t tables over subsets of `base` can be addressed by local masks.
class SubsetIndex {
 public:
  explicit SubsetIndex(Bundle base) : members_(base.items()) {}

  int size() const { return static_cast<int>(members_.size()); }
  Item item(int local) const { return members_[local]; }
  const std::vector<Item>& members() const { return members_; }

  Bundle expand(std::uint64_t local_mask) const {
    Bundle out;
    for (std::uint64_t b = local_mask; b != 0; b &= b - 1) out.insert(members_[std::countr_zero(b)]);
    return out;
  }

 private:
  std::vector<Item> members_;
};

}  // namespace eefx
