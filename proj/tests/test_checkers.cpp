#include <doctest.h>

#include "fairdiv/brute_force.hpp"
#include "fairdiv/checkers.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/generator.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace fairdiv;
using helpers::alloc_of;
using helpers::inst_of;
using helpers::mixed_inst;

namespace {

// A failing report's witness must itself re-verify as a violation.
void verify_witness(const Instance& inst, const IntegralAllocation& alloc, Property p,
                    const PropertyReport& report) {
  REQUIRE(report.witness.has_value());
  const Witness& w = *report.witness;
  Rational own = alloc.bundle_value(inst, w.envier, w.envier);
  switch (p) {
    case Property::EF:
      CHECK(own < alloc.bundle_value(inst, w.envier, w.envied));
      break;
    case Property::PROP:
      REQUIRE(w.shortfall.has_value());
      CHECK(own + *w.shortfall == inst.total_value(w.envier) / inst.n);
      CHECK(*w.shortfall > 0);
      break;
    case Property::EFX:
    case Property::EFXM: {
      REQUIRE(w.good.has_value());
      Rational rest = inst.bundle_value(w.envier, alloc.bundles[w.envied]) -
                      inst.util(w.envier, *w.good);
      CHECK(own < rest);
      break;
    }
    case Property::EF1: {
      for (int g : alloc.bundles[w.envied]) {
        Rational rest =
            inst.bundle_value(w.envier, alloc.bundles[w.envied]) - inst.util(w.envier, g);
        CHECK(own < rest);
      }
      break;
    }
    case Property::EFM:
      CHECK(own < alloc.bundle_value(inst, w.envier, w.envied));
      break;
    default: break;
  }
}

}  // namespace

TEST_CASE("envy-freeness") {
  SUBCASE("equal split of one divisible good between clones") {
    Instance inst = mixed_inst({{}, {}}, {{2}, {2}});
    IntegralAllocation alloc = IntegralAllocation::empty(inst);
    alloc.fractions[0][0] = parse_rational("1/2");
    alloc.fractions[1][0] = parse_rational("1/2");
    CHECK(check_ef(inst, alloc).holds);
  }
  SUBCASE("empty bundle envies the single good") {
    Instance inst = inst_of({{1}, {2}});
    IntegralAllocation alloc = alloc_of(inst, {{0}, {}});
    PropertyReport r = check_ef(inst, alloc);
    CHECK_FALSE(r.holds);
    CHECK(r.witness->envier == 1);
    CHECK(r.witness->envied == 0);
    verify_witness(inst, alloc, Property::EF, r);
  }
  SUBCASE("opposed preferences split cleanly") {
    Instance inst = inst_of({{3, 1}, {1, 3}});
    CHECK(check_ef(inst, alloc_of(inst, {{0}, {1}})).holds);
  }
  SUBCASE("incomplete allocations are rejected") {
    Instance inst = inst_of({{1, 1}, {1, 1}});
    CHECK_THROWS_WITH_AS(check_ef(inst, alloc_of(inst, {{0}, {}})),
                         doctest::Contains("IncompleteAllocation"), Error);
  }
}

TEST_CASE("proportionality") {
  SUBCASE("a single agent holding everything") {
    Instance inst = inst_of({{4, 9}});
    CHECK(check_prop(inst, alloc_of(inst, {{0, 1}})).holds);
  }
  SUBCASE("empty bundle falls short by half the total") {
    Instance inst = inst_of({{1, 1}, {1, 1}});
    IntegralAllocation alloc = alloc_of(inst, {{}, {0, 1}});
    PropertyReport r = check_prop(inst, alloc);
    CHECK_FALSE(r.holds);
    CHECK(*r.witness->shortfall == 1);
    verify_witness(inst, alloc, Property::PROP, r);
  }
  SUBCASE("opposed preferences give everyone more than half") {
    Instance inst = inst_of({{3, 1}, {1, 3}});
    CHECK(check_prop(inst, alloc_of(inst, {{0}, {1}})).holds);
  }
}

TEST_CASE("EF1") {
  SUBCASE("one good, removal empties the bundle") {
    Instance inst = inst_of({{1}, {1}});
    CHECK(check_ef1(inst, alloc_of(inst, {{0}, {}})).holds);
  }
  SUBCASE("two goods hoarded fail EF1") {
    Instance inst = inst_of({{1, 1}, {1, 1}});
    IntegralAllocation alloc = alloc_of(inst, {{0, 1}, {}});
    PropertyReport r = check_ef1(inst, alloc);
    CHECK_FALSE(r.holds);
    verify_witness(inst, alloc, Property::EF1, r);
  }
  SUBCASE("identical values one good each") {
    Instance inst = inst_of({{1, 1}, {1, 1}});
    CHECK(check_ef1(inst, alloc_of(inst, {{0}, {1}})).holds);
  }
  SUBCASE("positive divisible shares are rejected") {
    Instance inst = mixed_inst({{1}, {1}}, {{1}, {1}});
    IntegralAllocation alloc = IntegralAllocation::empty(inst);
    alloc.bundles[0] = {0};
    alloc.fractions[1][0] = 1;
    CHECK_THROWS_WITH_AS(check_ef1(inst, alloc), doctest::Contains("DivisiblePresent"), Error);
  }
}

TEST_CASE("EFX") {
  SUBCASE("removal of the less valued good still leaves envy") {
    Instance inst = inst_of({{2, 1, 1}, {2, 1, 1}});
    IntegralAllocation alloc = alloc_of(inst, {{0, 1}, {2}});
    PropertyReport r = check_efx(inst, alloc);
    CHECK_FALSE(r.holds);
    CHECK(r.witness->envier == 1);
    CHECK(r.witness->envied == 0);
    CHECK(*r.witness->good == 1);  // dropping g2 keeps u = 2 > 1
    verify_witness(inst, alloc, Property::EFX, r);
    CHECK(check_ef1(inst, alloc).holds);  // the same allocation is EF1
  }
  SUBCASE("one good per agent is always EFX") {
    Instance inst = inst_of({{5, 1}, {5, 1}});
    CHECK(check_efx(inst, alloc_of(inst, {{0}, {1}})).holds);
  }
}

TEST_CASE("EFM") {
  SUBCASE("indivisible against a fully divisible bundle") {
    Instance inst = mixed_inst({{1}, {1}}, {{1}, {1}});
    IntegralAllocation alloc = IntegralAllocation::empty(inst);
    alloc.bundles[0] = {0};
    alloc.fractions[1][0] = 1;
    CHECK(check_efm(inst, alloc).holds);
  }
  SUBCASE("EF1 branch applies toward an all-indivisible bundle") {
    Instance inst = mixed_inst({{1, 1}, {1, 1}}, {{1}, {1}});
    IntegralAllocation alloc = IntegralAllocation::empty(inst);
    alloc.bundles[0] = {0, 1};
    alloc.fractions[1][0] = 1;
    CHECK(check_efm(inst, alloc).holds);  // remove one good: 1 <= 1
  }
  SUBCASE("full EF toward any divisible share, even a worthless one") {
    Instance inst = mixed_inst({{1, 1}, {1, 1}}, {{0}, {0}});
    IntegralAllocation alloc = IntegralAllocation::empty(inst);
    alloc.bundles[0] = {0, 1};
    alloc.fractions[0][0] = 1;  // the hoarder also holds the worthless d
    // agent 1 envies a divisible-holding bundle: the EF1 escape is gone
    PropertyReport r = check_efm(inst, alloc);
    CHECK_FALSE(r.holds);
    verify_witness(inst, alloc, Property::EFM, r);
  }
}

TEST_CASE("EFXM") {
  SUBCASE("singletons and no divisibles reduce to EFX") {
    Instance inst = inst_of({{2, 1}, {2, 1}});
    CHECK(check_efxm(inst, alloc_of(inst, {{0}, {1}})).holds);
  }
  SUBCASE("EFX branch is strictly harder than EF1 branch") {
    Instance inst = mixed_inst({{2, 1}, {2, 1}}, {{1}, {1}});
    IntegralAllocation alloc = IntegralAllocation::empty(inst);
    alloc.bundles[0] = {0, 1};
    alloc.fractions[1][0] = 1;
    CHECK(check_efm(inst, alloc).holds);  // drop g1: 1 <= 1
    PropertyReport r = check_efxm(inst, alloc);
    CHECK_FALSE(r.holds);  // drop g2: 2 > 1
    CHECK(*r.witness->good == 1);
    verify_witness(inst, alloc, Property::EFXM, r);
  }
}

TEST_CASE("brute-force enumeration oracle") {
  SUBCASE("single good: both assignments are EFX") {
    Instance inst = inst_of({{1}, {1}});
    CHECK(brute_force_property(inst, Property::EFX).size() == 2);
  }
  SUBCASE("identical pair: exactly the two one-good-each splits are EF") {
    Instance inst = inst_of({{1, 1}, {1, 1}});
    auto hits = brute_force_property(inst, Property::EF);
    REQUIRE(hits.size() == 2);
    for (const auto& alloc : hits) {
      CHECK(alloc.bundles[0].size() == 1);
      CHECK(alloc.bundles[1].size() == 1);
    }
  }
  SUBCASE("aligned preferences admit no EF allocation") {
    Instance inst = inst_of({{3, 1}, {3, 1}});
    CHECK(brute_force_property(inst, Property::EF).empty());
  }
  SUBCASE("budget guard") {
    GeneratorSpec spec;
    spec.n = 4;
    spec.m = 14;
    Instance inst = generate_instance(spec);
    CHECK_THROWS_AS(brute_force_property(inst, Property::EF, 1000), Error);
  }
}

TEST_CASE("implication chain on enumerated allocations") {
  // EF ⇒ EFXM ⇒ EFM and EF ⇒ EFX ⇒ EF1 and EF ⇒ PROP, over every complete
  // allocation of random mixed and indivisible instances.
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GeneratorSpec spec;
    spec.family = seed % 2 ? Family::UniformAdditive : Family::BiValued;
    spec.n = 2 + static_cast<int>(seed % 2);
    spec.m = 4;
    spec.max_value = 4;
    spec.seed = seed;
    Instance inst = generate_instance(spec);

    std::vector<int> assign(inst.m(), 0);
    while (true) {
      IntegralAllocation alloc = IntegralAllocation::empty(inst);
      for (int g = 0; g < inst.m(); ++g) alloc.bundles[assign[g]].push_back(g);
      bool ef = check_ef(inst, alloc).holds;
      bool efx = check_efx(inst, alloc).holds;
      bool ef1 = check_ef1(inst, alloc).holds;
      bool efm = check_efm(inst, alloc).holds;
      bool efxm = check_efxm(inst, alloc).holds;
      bool prop = check_prop(inst, alloc).holds;
      if (ef) {
        CHECK(efx);
        CHECK(efxm);
        CHECK(prop);
      }
      if (efx) CHECK(ef1);
      if (efxm) CHECK(efm);
      if (ef1) CHECK(efm);  // no divisible shares: the branches coincide
      int k = inst.m() - 1;
      for (; k >= 0; --k) {
        if (++assign[k] < inst.n) break;
        assign[k] = 0;
      }
      if (k < 0) break;
    }
  }
}

TEST_CASE("checkers agree with the independent definition oracle") {
  for (std::uint64_t seed = 10; seed < 16; ++seed) {
    GeneratorSpec spec;
    spec.family = Family::Mixed;
    spec.n = 2;
    spec.m = 3;
    spec.divisible_count = 1;
    spec.seed = seed;
    Instance inst = generate_instance(spec);

    // all integral splits including an atomic d
    std::vector<int> assign(inst.m() + 1, 0);
    while (true) {
      IntegralAllocation alloc = IntegralAllocation::empty(inst);
      for (int g = 0; g < inst.m(); ++g) alloc.bundles[assign[g]].push_back(g);
      alloc.fractions[assign[inst.m()]][0] = 1;
      CHECK(check_ef(inst, alloc).holds == oracle::ef(inst, alloc));
      CHECK(check_prop(inst, alloc).holds == oracle::prop(inst, alloc));
      CHECK(check_efm(inst, alloc).holds == oracle::efm(inst, alloc));
      CHECK(check_efxm(inst, alloc).holds == oracle::efxm(inst, alloc));
      int k = inst.m();
      for (; k >= 0; --k) {
        if (++assign[k] < inst.n) break;
        assign[k] = 0;
      }
      if (k < 0) break;
    }
  }
}
