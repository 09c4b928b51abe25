#pragma once

#include <cstdint>
#include <string>

#include "fairdiv/instance.hpp"

namespace fairdiv {

enum class Family { BiValued, Binary, UniformAdditive, Mixed };

/**
 * Deterministic instance generator: the same (spec, seed) always produces the
 * same instance. `density` is the exact probability that an entry takes the
 * large value in the bi-valued/binary families. The mixed family draws
 * integer utilities in [0, max_value] for indivisible goods and in
 * [0, divisible_mass] for each of `divisible_count` divisible goods.
 */
struct GeneratorSpec {
  Family family = Family::BiValued;
  int n = 2;
  int m = 2;
  std::uint64_t seed = 0;
  Rational a = 1;
  Rational b = 2;
  Rational density = Rational(1) / 2;
  long max_value = 100;
  int divisible_count = 1;
  long divisible_mass = 10;
};

Instance generate_instance(const GeneratorSpec& spec);  // validated output

}  // namespace fairdiv
