#include "fairdiv/generator.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/rng.hpp"

namespace fairdiv {

Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.m < 0) throw bad_input("generator needs n >= 1 and m >= 0");
  if (spec.density < 0 || spec.density > 1) throw bad_input("density must lie in [0, 1]");

  Rational a = spec.a, b = spec.b;
  if (spec.family == Family::Binary) {
    a = 0;
    b = 1;
  }
  if (spec.family == Family::BiValued && a >= b) throw bad_input("bi-valued family needs a < b");
  if (spec.family == Family::BiValued && a < 0) throw bad_input("bi-valued family needs a >= 0");
  if ((spec.family == Family::UniformAdditive || spec.family == Family::Mixed) && spec.max_value < 0)
    throw bad_input("uniform family needs max >= 0");

  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.n = spec.n;
  for (int g = 0; g < spec.m; ++g) inst.indivisible.push_back("g" + std::to_string(g + 1));
  int m_bar = spec.family == Family::Mixed ? spec.divisible_count : 0;
  for (int k = 0; k < m_bar; ++k) inst.divisible.push_back("d" + std::to_string(k + 1));

  // Exact density draw: entry is large iff a uniform draw below the reduced
  // denominator lands under the numerator.
  auto large_entry = [&]() {
    std::uint64_t den = static_cast<std::uint64_t>(denominator(spec.density));
    std::uint64_t num = static_cast<std::uint64_t>(numerator(spec.density));
    return rng.below(den) < num;
  };

  inst.utilities.resize(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int g = 0; g < spec.m; ++g) {
      switch (spec.family) {
        case Family::BiValued:
        case Family::Binary:
          inst.utilities[i].push_back(large_entry() ? b : a);
          break;
        case Family::UniformAdditive:
        case Family::Mixed:
          inst.utilities[i].push_back(
              Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(spec.max_value) + 1))));
          break;
      }
    }
    for (int k = 0; k < m_bar; ++k)
      inst.utilities[i].push_back(
          Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(spec.divisible_mass) + 1))));
  }
  return validate_instance(std::move(inst));
}

}  // namespace fairdiv
