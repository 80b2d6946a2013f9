#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "eefx/bundle.hpp"
#include "eefx/caps.hpp"
#include "eefx/certificates.hpp"
#include "eefx/instance.hpp"
#include "eefx/valuation.hpp"

namespace eefx {

enum class Criterion { EF, EF1, EFX, PROP, EEFX };

std::string_view criterion_name(Criterion c);  // "ef", "ef1", ...
Criterion parse_criterion(std::string_view name);

// One failed fairness condition. `bundle` is -1 and `item` empty where the
// criterion has no compared bundle (PROP, EEFX).
struct Violation {
  int agent = 0;
  int bundle = -1;
  std::optional<Item> item;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FairnessReport {
  Criterion criterion = Criterion::EF;
  bool satisfied = true;
  std::vector<Violation> witnesses;
};

// Smallest g in `other` with v(held) < v(other - g), if any.
std::optional<Item> strongly_envies(const ValuationOracle& v, Bundle held, Bundle other);

// Each check validates the allocation against the agents (InputError on a
// shape mismatch) and reports every violating (agent, bundle) pair.
FairnessReport is_efx(AgentOracles agents, const Allocation& x);
FairnessReport check_classic(AgentOracles agents, const Allocation& x, Criterion criterion);
FairnessReport is_eefx_allocation(AgentOracles agents, const Allocation& x, const SearchOptions& options = {});
FairnessReport check_criterion(AgentOracles agents, const Allocation& x, Criterion criterion,
                               const SearchOptions& options = {});

FairnessReport is_efx(const Instance& inst, const Allocation& x);
FairnessReport check_classic(const Instance& inst, const Allocation& x, Criterion criterion);
FairnessReport is_eefx_allocation(const Instance& inst, const Allocation& x, const SearchOptions& options = {});
FairnessReport check_criterion(const Instance& inst, const Allocation& x, Criterion criterion,
                               const SearchOptions& options = {});

// All maximum Nash welfare allocations, in canonical order (assignment
// strings compared lexicographically, item 0 most significant). Allocations
// are ranked first by the number of agents with positive value, then by the
// exact product of those values. Throws SizeError if n^m > max_allocations.
std::vector<Allocation> mnw_allocations(AgentOracles agents, int m,
                                        std::uint64_t max_allocations = Caps{}.mnw_allocations);
std::vector<Allocation> mnw_allocations(const Instance& inst,
                                        std::uint64_t max_allocations = Caps{}.mnw_allocations);

}  // namespace eefx
