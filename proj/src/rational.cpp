#include "relfact/rational.hpp"

#include <algorithm>
#include <cctype>

#include "relfact/errors.hpp"

namespace relfact {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt digits_to_int(std::string_view s) { return BigInt(std::string(s), 10); }

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt d = digits_to_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(digits_to_int(num), d);
    r.canonicalize();
    return r;
  }

  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  bool ok = (whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac)) &&
            !(whole.empty() && frac.empty());
  if (!ok) throw ParseError("malformed decimal '" + std::string(text) + "'");

  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt num = (whole.empty() ? BigInt(0) : digits_to_int(whole)) * scale +
               (frac.empty() ? BigInt(0) : digits_to_int(frac));
  Rational r(num, scale);
  r.canonicalize();
  return r;
}

std::string to_wire(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace relfact
