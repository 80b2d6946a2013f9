#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eefx {

// Enumeration limits. Everything exhaustive in this library is exponential,
// so each entry point refuses inputs beyond its cap with SizeError.
struct Caps {
  int solve_items = 10;        // m for solve_eefx
  int agents = 5;              // n for solve_eefx
  int certificate_items = 14;  // |S \ A| for certificate search
  int partition_items = 14;    // |S| for identical-valuation EFX partitions
  int table_items = 20;        // m for axiom checks and tabulation
  std::uint64_t mnw_allocations = std::uint64_t{1} << 22;  // n^m for MNW
};

// Parses "key=value,key=value" over the field names above, starting from
// `base`. Throws InputError on unknown keys or bad values.
Caps parse_caps(std::string_view spec, Caps base = {});

// Applies the EEFX_CAPS environment variable (same syntax) on top of `base`.
Caps caps_from_env(Caps base = {});

std::string format_caps(const Caps& caps);

// Kernel selection: the OpenMP kernels, or the serial reference versions.
enum class Exec { parallel, serial };

}  // namespace eefx
