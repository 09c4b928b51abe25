#pragma once

#include <optional>
#include <string>

#include "fairdiv/allocation.hpp"

namespace fairdiv {

enum class Property { EF, PROP, EF1, EFX, EFM, EFXM, FPO };

std::optional<Property> property_from_name(const std::string& name);
std::string property_name(Property p);

struct Witness {
  int envier = -1;
  int envied = -1;                    // -1 when the violation is not pairwise (PROP)
  std::optional<int> good;            // the removal that still leaves envy (EFX/EFXM)
  std::optional<Rational> shortfall;  // PROP deficit
};

/**
 * Outcome of a fairness predicate. When holds is false the witness itself
 * re-verifies as a violation under the definition; FPO failures instead carry
 * the dominating fractional allocation.
 */
struct PropertyReport {
  bool holds = true;
  std::optional<Witness> witness;
  std::optional<FractionalAllocation> dominator;

  static PropertyReport ok() { return PropertyReport{}; }
  static PropertyReport violation(Witness w) { return PropertyReport{false, std::move(w), std::nullopt}; }
};

// EF and PROP are defined for fractional and integral allocations alike.
// Both require complete allocations.
PropertyReport check_ef(const Instance& inst, const FractionalAllocation& alloc);
PropertyReport check_ef(const Instance& inst, const IntegralAllocation& alloc);
PropertyReport check_prop(const Instance& inst, const FractionalAllocation& alloc);
PropertyReport check_prop(const Instance& inst, const IntegralAllocation& alloc);

// EF1 / EFX over indivisible goods only: every divisible fraction must be zero.
PropertyReport check_ef1(const Instance& inst, const IntegralAllocation& alloc);
PropertyReport check_efx(const Instance& inst, const IntegralAllocation& alloc);

// Mixed-goods notions: full EF toward any bundle holding a positive divisible
// share, EF1 (resp. EFX) toward nonempty all-indivisible bundles, and no
// condition toward fully empty bundles.
PropertyReport check_efm(const Instance& inst, const IntegralAllocation& alloc);
PropertyReport check_efxm(const Instance& inst, const IntegralAllocation& alloc);

// Dispatch used by the CLI; FPO lives in lp.hpp and is wired by the caller.
PropertyReport check_property(const Instance& inst, const IntegralAllocation& alloc, Property p);

}  // namespace fairdiv
