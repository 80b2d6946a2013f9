#pragma once

#include <utility>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/caps.hpp"
#include "eefx/instance.hpp"
#include "eefx/rational.hpp"
#include "eefx/valuation.hpp"

namespace eefx {

struct PartitionOptions {
  Exec exec = Exec::parallel;
  int max_items = Caps{}.partition_items;
};

// Leximin++ signature: (value, size) of every bundle, sorted ascending.
// Signatures compare lexicographically; larger is better.
using LeximinSignature = std::vector<std::pair<Rational, int>>;

LeximinSignature leximin_signature(const ValuationOracle& v, const std::vector<Bundle>& bundles);

// EFX partition of `items` into exactly n bundles for n agents sharing v:
// the leximin++ maximum over all partitions into at most n blocks, the
// canonically first one on ties. Blocks are labeled in canonical order
// (block j holds the smallest item not in blocks 0..j-1), empty bundles last.
//
// Throws SizeError when |items| > max_items, InputError when n < 1.
Allocation identical_efx_partition(const ValuationOracle& v, Bundle items, int n,
                                   const PartitionOptions& options = {});

}  // namespace eefx
