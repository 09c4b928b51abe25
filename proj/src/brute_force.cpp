#include "fairdiv/brute_force.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/lp.hpp"

namespace fairdiv {

std::vector<IntegralAllocation> brute_force_property(const Instance& inst, Property property,
                                                     std::uint64_t budget) {
  MergedDivisibles merge = merge_divisibles(inst);
  const bool mixed = inst.m_bar() > 0;
  const Instance& work = mixed ? merge.merged : inst;
  const int items = inst.m() + (mixed ? 1 : 0);

  std::uint64_t total = 1;
  for (int k = 0; k < items; ++k) {
    total *= static_cast<std::uint64_t>(inst.n);
    if (total > budget) throw Error(ErrorCode::BudgetExceeded, "BudgetExceeded: n^m too large");
  }

  std::vector<IntegralAllocation> hits;
  std::vector<int> assign(items, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    IntegralAllocation alloc = IntegralAllocation::empty(work);
    for (int k = 0; k < items; ++k) {
      if (mixed && k == inst.m())
        alloc.fractions[assign[k]][0] = 1;
      else
        alloc.bundles[assign[k]].push_back(k);
    }
    PropertyReport report = property == Property::FPO ? check_fpo_lp(work, alloc)
                                                      : check_property(work, alloc, property);
    if (report.holds)
      hits.push_back(mixed ? expand_merged(merge, alloc) : alloc);
    // lexicographic odometer, last item fastest
    for (int k = items - 1; k >= 0; --k) {
      if (++assign[k] < inst.n) break;
      assign[k] = 0;
    }
  }
  return hits;
}

}  // namespace fairdiv
