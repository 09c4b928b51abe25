#include "fairdiv/rational.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return bad_input("not a rational: '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) throw fail();
    BigInt d{std::string(den)};
    if (d <= 0) throw fail();  // positive denominators only
    // Integer division canonicalizes; string-constructed mpq values would not.
    return Rational(BigInt{std::string(num)}) / Rational(d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_token(frac) || frac[0] == '-' || frac[0] == '+') throw fail();
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (!is_integer_token(whole)) throw fail();
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt value = BigInt{std::string(whole)} * scale;
    BigInt tail{std::string(frac)};
    if (value < 0 || negative)
      value -= tail;
    else
      value += tail;
    return Rational(value) / Rational(scale);
  }
  if (!is_integer_token(text)) throw fail();
  return Rational(BigInt{std::string(text)});
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace fairdiv
