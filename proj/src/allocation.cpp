#include "fairdiv/allocation.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

IntegralAllocation IntegralAllocation::empty(const Instance& inst) {
  IntegralAllocation alloc;
  alloc.bundles.resize(inst.n);
  alloc.fractions.assign(inst.n, std::vector<Rational>(inst.m_bar(), Rational(0)));
  return alloc;
}

bool IntegralAllocation::has_divisible_share(int agent) const {
  for (const Rational& x : fractions[agent])
    if (x > 0) return true;
  return false;
}

Rational IntegralAllocation::bundle_value(const Instance& inst, int viewer, int owner) const {
  Rational total = inst.bundle_value(viewer, bundles[owner]);
  for (int k = 0; k < inst.m_bar(); ++k)
    total += fractions[owner][k] * inst.util_divisible(viewer, k);
  return total;
}

void IntegralAllocation::sort_bundles() {
  for (auto& bundle : bundles) std::sort(bundle.begin(), bundle.end());
}

Rational FractionalAllocation::row_value(const Instance& inst, int viewer, int row) const {
  Rational total = 0;
  for (size_t g = 0; g < matrix[row].size(); ++g)
    total += matrix[row][g] * inst.utilities[viewer][g];
  return total;
}

FractionalAllocation to_fractional(const Instance& inst, const IntegralAllocation& alloc) {
  FractionalAllocation frac;
  frac.matrix.assign(inst.n, std::vector<Rational>(inst.m() + inst.m_bar(), Rational(0)));
  for (int i = 0; i < inst.n; ++i) {
    for (int g : alloc.bundles[i]) frac.matrix[i][g] = 1;
    for (int k = 0; k < inst.m_bar(); ++k) frac.matrix[i][inst.m() + k] = alloc.fractions[i][k];
  }
  return frac;
}

FractionalAllocation expected_allocation(const Instance& inst, const RandomizedAllocation& lottery) {
  validate_lottery(inst, lottery);
  FractionalAllocation expected;
  expected.matrix.assign(inst.n, std::vector<Rational>(inst.m() + inst.m_bar(), Rational(0)));
  for (const auto& [p, alloc] : lottery.support) {
    FractionalAllocation term = to_fractional(inst, alloc);
    for (int i = 0; i < inst.n; ++i)
      for (size_t g = 0; g < expected.matrix[i].size(); ++g)
        expected.matrix[i][g] += p * term.matrix[i][g];
  }
  return expected;
}

bool is_complete(const Instance& inst, const IntegralAllocation& alloc) {
  std::vector<char> assigned(inst.m(), 0);
  for (const auto& bundle : alloc.bundles)
    for (int g : bundle) assigned[g] = 1;
  if (std::find(assigned.begin(), assigned.end(), 0) != assigned.end()) return false;
  for (int k = 0; k < inst.m_bar(); ++k) {
    Rational column = 0;
    for (int i = 0; i < inst.n; ++i) column += alloc.fractions[i][k];
    if (column != 1) return false;
  }
  return true;
}

void validate_allocation(const Instance& inst, const IntegralAllocation& alloc) {
  if (alloc.agents() != inst.n) throw bad_input("allocation has the wrong number of bundles");
  std::vector<char> seen(inst.m(), 0);
  for (const auto& bundle : alloc.bundles) {
    for (int g : bundle) {
      if (g < 0 || g >= inst.m()) throw bad_input("bundle references an unknown indivisible good");
      if (seen[g]++) throw bad_input("indivisible good assigned to two agents");
    }
  }
  if (static_cast<int>(alloc.fractions.size()) != inst.n)
    throw bad_input("allocation fraction table has the wrong number of rows");
  for (int k = 0; k < inst.m_bar(); ++k) {
    Rational column = 0;
    for (int i = 0; i < inst.n; ++i) {
      const auto& row = alloc.fractions[i];
      if (static_cast<int>(row.size()) != inst.m_bar())
        throw bad_input("fraction row width does not match the divisible goods");
      if (row[k] < 0 || row[k] > 1) throw bad_input("divisible fraction outside [0, 1]");
      column += row[k];
    }
    if (column > 1) throw bad_input("divisible good oversubscribed");
  }
}

void validate_lottery(const Instance& inst, const RandomizedAllocation& lottery) {
  Rational total = 0;
  for (const auto& [p, alloc] : lottery.support) {
    if (p < 0 || p > 1) throw bad_input("lottery probability outside [0, 1]");
    total += p;
    validate_allocation(inst, alloc);
  }
  if (total != 1) throw bad_input("lottery probabilities must sum to 1");
}

IntegralAllocation expand_merged(const MergedDivisibles& merge, const IntegralAllocation& alloc) {
  IntegralAllocation expanded;
  expanded.bundles = alloc.bundles;
  expanded.fractions.resize(alloc.agents());
  for (int i = 0; i < alloc.agents(); ++i)
    expanded.fractions[i].assign(merge.original_m_bar, alloc.fractions[i][0]);
  return expanded;
}

RandomizedAllocation expand_merged(const MergedDivisibles& merge, const RandomizedAllocation& lottery) {
  RandomizedAllocation expanded;
  expanded.support.reserve(lottery.support.size());
  for (const auto& [p, alloc] : lottery.support)
    expanded.support.emplace_back(p, expand_merged(merge, alloc));
  return expanded;
}

}  // namespace fairdiv
