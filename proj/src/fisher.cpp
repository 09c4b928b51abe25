#include "fairdiv/fisher.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

bool certificate_valid(const Instance& inst, const IntegralAllocation& alloc,
                       const FisherCertificate& cert) {
  if (static_cast<int>(cert.prices.size()) != inst.m()) return false;
  for (const Rational& p : cert.prices)
    if (p <= 0) return false;
  std::vector<char> assigned(inst.m(), 0);
  for (const auto& bundle : alloc.bundles)
    for (int g : bundle) assigned[g] = 1;
  for (char a : assigned)
    if (!a) return false;  // market must clear

  for (int i = 0; i < inst.n; ++i) {
    Rational spent = 0;
    for (int g : alloc.bundles[i]) spent += cert.prices[g];
    if (cert.budgets[i] != spent) return false;
    Rational best = 0;
    for (int g = 0; g < inst.m(); ++g) best = std::max(best, inst.util(i, g) / cert.prices[g]);
    if (cert.mbb[i] != best) return false;
    for (int g : alloc.bundles[i])
      if (inst.util(i, g) / cert.prices[g] != best) return false;  // MBB goods only
  }
  return true;
}

FisherCertificate build_fisher_certificate(const Instance& inst, const IntegralAllocation& alloc,
                                           const RunTrace& trace) {
  auto [small, large] = demand_bi_valued(inst);
  const int n = inst.n, m = inst.m();
  std::vector<Rational> price(m, Rational(0));
  std::vector<char> priced_agent(n, 0), priced_good(m, 0);

  auto price_bundle_at_owner = [&](int i) {
    for (int g : alloc.bundles[i]) {
      price[g] = inst.util(i, g);
      priced_good[g] = 1;
    }
    priced_agent[i] = 1;
  };

  if (m >= n) {
    // Grouped agents and mixed-bundle pool agents anchor the prices at their
    // own values; prices then propagate along large-value edges; whatever is
    // left is priced at a (its owners are the low-price agents).
    for (int i = 0; i < n; ++i)
      if (trace.grouped_round[i] != -1) price_bundle_at_owner(i);
    for (int i = 0; i < n; ++i) {
      if (priced_agent[i] || trace.grouped_round[i] != -1) continue;
      bool has_small = false, has_large = false;
      for (int g : alloc.bundles[i]) {
        has_small |= inst.util(i, g) == small;
        has_large |= inst.util(i, g) == large;
      }
      if (has_small && has_large) price_bundle_at_owner(i);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        if (priced_agent[i] || alloc.bundles[i].empty()) continue;
        bool reachable = false;
        for (int j = 0; j < n && !reachable; ++j) {
          if (!priced_agent[j] || alloc.bundles[j].empty()) continue;
          for (int g : alloc.bundles[i])
            if (inst.util(j, g) == large) reachable = true;
        }
        if (reachable) {
          price_bundle_at_owner(i);
          changed = true;
        }
      }
    }
    for (int g = 0; g < m; ++g)
      if (!priced_good[g]) price[g] = small;
  } else {
    // m < n corner: small goods are priced at a first, propagation prices a
    // good at b when an already-priced agent values it large, leftovers at a.
    for (int i = 0; i < n; ++i) {
      bool any_small = false;
      for (int g : alloc.bundles[i])
        if (inst.util(i, g) == small) {
          price[g] = small;
          priced_good[g] = 1;
          any_small = true;
        }
      if (any_small) priced_agent[i] = 1;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        if (priced_agent[i] || alloc.bundles[i].empty()) continue;
        bool reachable = false;
        for (int j = 0; j < n && !reachable; ++j) {
          if (!priced_agent[j]) continue;
          for (int g : alloc.bundles[i])
            if (inst.util(j, g) == large) reachable = true;
        }
        if (reachable) {
          for (int g : alloc.bundles[i]) {
            price[g] = large;
            priced_good[g] = 1;
          }
          priced_agent[i] = 1;
          changed = true;
        }
      }
    }
    for (int g = 0; g < m; ++g)
      if (!priced_good[g]) price[g] = small;
  }

  FisherCertificate cert;
  cert.prices = std::move(price);
  cert.budgets.assign(n, Rational(0));
  cert.mbb.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int g : alloc.bundles[i]) cert.budgets[i] += cert.prices[g];
    for (int g = 0; g < m; ++g) cert.mbb[i] = std::max(cert.mbb[i], inst.util(i, g) / cert.prices[g]);
  }
  if (!certificate_valid(inst, alloc, cert))
    throw internal_error("CertificateFailed: constructed prices are not an equilibrium");
  return cert;
}

}  // namespace fairdiv
