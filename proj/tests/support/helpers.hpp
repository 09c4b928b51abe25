#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace helpers {

using fairdiv::Instance;
using fairdiv::IntegralAllocation;
using fairdiv::Rational;

// Indivisible-only instance from integer utilities.
inline Instance inst_of(std::vector<std::vector<long>> utilities) {
  Instance inst;
  inst.n = static_cast<int>(utilities.size());
  for (size_t g = 0; g < utilities[0].size(); ++g)
    inst.indivisible.push_back("g" + std::to_string(g + 1));
  for (auto& row : utilities) {
    std::vector<Rational> out(row.begin(), row.end());
    inst.utilities.push_back(std::move(out));
  }
  return fairdiv::validate_instance(std::move(inst));
}

// Mixed instance: per-agent indivisible utilities plus per-agent divisible
// utilities (one column per divisible good).
inline Instance mixed_inst(std::vector<std::vector<long>> indivisible,
                           std::vector<std::vector<long>> divisible) {
  Instance inst;
  inst.n = static_cast<int>(indivisible.size());
  for (size_t g = 0; g < indivisible[0].size(); ++g)
    inst.indivisible.push_back("g" + std::to_string(g + 1));
  for (size_t k = 0; k < divisible[0].size(); ++k)
    inst.divisible.push_back("d" + std::to_string(k + 1));
  for (int i = 0; i < inst.n; ++i) {
    std::vector<Rational> row(indivisible[i].begin(), indivisible[i].end());
    row.insert(row.end(), divisible[i].begin(), divisible[i].end());
    inst.utilities.push_back(std::move(row));
  }
  return fairdiv::validate_instance(std::move(inst));
}

// Indivisible-only allocation from per-agent good lists (0-based ids).
inline IntegralAllocation alloc_of(const Instance& inst, std::vector<std::vector<int>> bundles) {
  IntegralAllocation alloc = IntegralAllocation::empty(inst);
  alloc.bundles = std::move(bundles);
  alloc.sort_bundles();
  return alloc;
}

inline Rational rat(const std::string& text) { return fairdiv::parse_rational(text); }

}  // namespace helpers
