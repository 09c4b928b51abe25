#include "fairdiv/exante.hpp"

#include <algorithm>
#include <map>

#include "fairdiv/errors.hpp"
#include "fairdiv/rng.hpp"

namespace fairdiv {

namespace {

RandomizedAllocation aggregate(std::vector<IntegralAllocation> outcomes) {
  // Merge equal outcomes; keep first-appearance order.
  RandomizedAllocation lottery;
  std::map<IntegralAllocation, size_t> index;
  const Rational weight = Rational(1) / static_cast<long>(outcomes.size());
  for (auto& alloc : outcomes) {
    auto [it, fresh] = index.try_emplace(alloc, lottery.support.size());
    if (fresh)
      lottery.support.emplace_back(weight, it->first);
    else
      lottery.support[it->second].first += weight;
  }
  return lottery;
}

}  // namespace

RandomizedAllocation enumerate_lottery(const PermSolver& solver, const Instance& inst,
                                       std::uint64_t max_outcomes) {
  std::uint64_t factorial = 1;
  for (int k = 2; k <= inst.n; ++k) {
    factorial *= static_cast<std::uint64_t>(k);
    if (factorial > max_outcomes)
      throw Error(ErrorCode::BudgetExceeded, "BudgetExceeded: n! beyond the enumeration budget");
  }
  std::vector<int> perm(inst.n);
  for (int i = 0; i < inst.n; ++i) perm[i] = i;
  std::vector<IntegralAllocation> outcomes;
  outcomes.reserve(factorial);
  do {
    outcomes.push_back(solver(inst, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return aggregate(std::move(outcomes));
}

ExAnteReport verify_exante(const Instance& inst, const RandomizedAllocation& lottery,
                           Property property) {
  if (property != Property::EF && property != Property::PROP)
    throw precondition("ex-ante verification covers ef and prop");
  ExAnteReport report;
  FractionalAllocation expected = expected_allocation(inst, lottery);
  report.ex_ante =
      property == Property::EF ? check_ef(inst, expected) : check_prop(inst, expected);
  for (size_t j = 0; j < lottery.support.size(); ++j) {
    const auto& alloc = lottery.support[j].second;
    PropertyReport r =
        property == Property::EF ? check_ef(inst, alloc) : check_prop(inst, alloc);
    if (!r.holds) {
      report.ex_post_all = false;
      report.ex_post_failures.push_back(static_cast<int>(j));
    }
  }
  return report;
}

MixtureReport sample_lottery(const PermSolver& solver, const Instance& inst, std::uint64_t seed,
                             int trials) {
  if (trials < 1) throw precondition("sampling needs at least one trial");
  std::vector<IntegralAllocation> outcomes;
  outcomes.reserve(trials);
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng = stream(seed, static_cast<std::uint64_t>(k));
    outcomes.push_back(solver(inst, random_permutation(inst.n, rng)));
  }
  MixtureReport report;
  report.exact = false;
  report.trials = trials;
  report.lottery = aggregate(std::move(outcomes));
  report.support_size = static_cast<int>(report.lottery.support.size());
  report.expected = expected_allocation(inst, report.lottery);
  return report;
}

MixtureReport exact_lottery_report(const PermSolver& solver, const Instance& inst,
                                   std::uint64_t max_outcomes) {
  MixtureReport report;
  report.exact = true;
  report.lottery = enumerate_lottery(solver, inst, max_outcomes);
  report.support_size = static_cast<int>(report.lottery.support.size());
  report.expected = expected_allocation(inst, report.lottery);
  return report;
}

}  // namespace fairdiv
