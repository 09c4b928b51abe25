#include "fairdiv/instance.hpp"

#include <algorithm>
#include <set>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Rational Instance::bundle_value(int agent, const std::vector<int>& goods) const {
  Rational total = 0;
  for (int g : goods) total += utilities[agent][g];
  return total;
}

Rational Instance::total_value(int agent) const {
  Rational total = 0;
  for (const Rational& u : utilities[agent]) total += u;
  return total;
}

Instance validate_instance(Instance raw) {
  if (raw.n < 1) throw precondition("EmptyAgentSet: instance needs at least one agent");
  if (static_cast<int>(raw.utilities.size()) != raw.n)
    throw bad_input("utility matrix must have one row per agent");
  const size_t width = raw.indivisible.size() + raw.divisible.size();
  std::set<Rational> distinct;
  for (const auto& row : raw.utilities) {
    if (row.size() != width) throw bad_input("utility row width does not match the good lists");
    for (const Rational& u : row) {
      if (u < 0) throw precondition("NegativeUtility: utilities must be non-negative");
      if (distinct.size() <= 2) distinct.insert(u);
    }
  }
  if (distinct.size() > 2) {
    raw.bi_values.reset();
  } else if (distinct.empty() || (distinct.size() == 1 && *distinct.begin() == 0)) {
    raw.bi_values = {Rational(0), Rational(1)};  // degenerate: binary
  } else if (distinct.size() == 1) {
    raw.bi_values = {*distinct.begin(), *distinct.begin()};
  } else {
    raw.bi_values = {*distinct.begin(), *std::next(distinct.begin())};
  }
  return raw;
}

std::pair<Rational, Rational> demand_bi_valued(const Instance& inst) {
  if (!inst.bi_values)
    throw precondition("NotBiValued: instance has more than two distinct utility values");
  return *inst.bi_values;
}

MergedDivisibles merge_divisibles(const Instance& inst) {
  Instance merged;
  merged.n = inst.n;
  merged.indivisible = inst.indivisible;
  merged.divisible = {"d"};
  merged.utilities.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    auto& row = merged.utilities[i];
    row.assign(inst.utilities[i].begin(), inst.utilities[i].begin() + inst.m());
    Rational d_value = 0;  // u_i(d) := u_i(D), zero when there are no divisibles
    for (int k = 0; k < inst.m_bar(); ++k) d_value += inst.util_divisible(i, k);
    row.push_back(d_value);
  }
  // The summed d column need not stay inside {a, b}; the tag does not carry over.
  merged.bi_values.reset();
  return MergedDivisibles{std::move(merged), inst.m_bar()};
}

}  // namespace fairdiv
