#pragma once

#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/efx_fpo.hpp"

namespace fairdiv {

/**
 * Prices and budgets witnessing a Fisher-market equilibrium for an integral
 * allocation: budgets equal bundle prices, the market clears, and every owned
 * good attains its owner's maximum bang-per-buck ratio. By the First Welfare
 * Theorem a valid certificate implies the allocation is fPO.
 */
struct FisherCertificate {
  std::vector<Rational> prices;   // per good
  std::vector<Rational> budgets;  // per agent, Σ_{g∈A_i} p_g
  std::vector<Rational> mbb;      // per agent, max_g u_i(g)/p_g
};

// Exact check of the equilibrium conditions.
bool certificate_valid(const Instance& inst, const IntegralAllocation& alloc,
                       const FisherCertificate& cert);

// Prices an allocation produced by the bi-valued EFX+fPO solver, using the
// run trace to identify grouped agents. Throws CertificateFailed (an internal
// error, surfaced, never repaired) when the constructed prices do not verify.
FisherCertificate build_fisher_certificate(const Instance& inst, const IntegralAllocation& alloc,
                                           const RunTrace& trace);

}  // namespace fairdiv
