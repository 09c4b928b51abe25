#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace fairdiv {

// Exact rational, arbitrary precision. Stored canonical: lowest terms,
// positive denominator. No floating point anywhere in the engine.
// Expression templates are off so values compose with std algorithms.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Accepts "n", "n/d" and plain decimals like "0.25"; always canonicalizes.
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& q);

inline BigInt floor_div(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt r = n / d;
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

}  // namespace fairdiv
