#pragma once

#include <optional>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/caps.hpp"
#include "eefx/rational.hpp"
#include "eefx/valuation.hpp"

namespace eefx {

// A k-certificate of a held bundle A under ground set S: k-1 pairwise
// disjoint bundles, possibly empty, covering S \ A, none of which the holder
// strongly envies.
struct Certificate {
  std::vector<Bundle> bundles;
  Rational holder_value;
};

struct SearchOptions {
  Exec exec = Exec::parallel;
  int max_items = Caps{}.certificate_items;
};

// Exact search. Returns the first certificate in canonical partition order
// of S \ A into at most k-1 blocks, padded with empty bundles to k-1, or
// nullopt when none exists.
//
// A block is abandoned as soon as some g in it has v(block - g) > v(A);
// under a monotone v no superset of that block can recover.
//
// Throws InputError if A is not a subset of S or k < 1, SizeError if
// |S \ A| > max_items.
std::optional<Certificate> find_certificate(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                                            const SearchOptions& options = {});

bool is_member_eefx(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                    const SearchOptions& options = {});

// Builds the leximin++ partition of S \ A into k-1 blocks and keeps it if it
// validates. Sound but incomplete: nullopt only means "inconclusive".
std::optional<Certificate> fast_accept(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                                       const SearchOptions& options = {});

// fast_accept, falling back to find_certificate.
std::optional<Certificate> certify(const ValuationOracle& v, Bundle held, Bundle ground, int k,
                                   const SearchOptions& options = {});

// Re-checks every certificate invariant against v directly.
bool validate_certificate(const ValuationOracle& v, Bundle held, Bundle ground, int k, const Certificate& c);

}  // namespace eefx
