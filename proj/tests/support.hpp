#pragma once

#include <cstdint>
#include <vector>

#include "eefx/instance.hpp"
#include "oracles.hpp"

namespace testing {

inline std::vector<std::uint64_t> masks(const eefx::Allocation& a) {
  std::vector<std::uint64_t> out;
  for (auto b : a.bundles) out.push_back(b.bits());
  return out;
}

inline eefx::Allocation allocation(const std::vector<std::uint64_t>& ms) {
  eefx::Allocation a;
  for (auto m : ms) a.bundles.emplace_back(m);
  return a;
}

inline std::vector<oracle::Table> tables(const eefx::Instance& inst) {
  std::vector<oracle::Table> out;
  for (const auto& v : inst.valuations) out.push_back(oracle::value_table(v));
  return out;
}

// Items given by their 1-based "g" numbers, as in the worked examples.
inline eefx::Bundle goods(std::initializer_list<int> numbers) {
  eefx::Bundle b;
  for (int g : numbers) b.insert(g - 1);
  return b;
}

}  // namespace testing
