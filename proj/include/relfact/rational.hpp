#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace relfact {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or a plain decimal such as "0.9" or "1" into an exact,
/// canonical rational. Signs and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Canonical wire form: reduced, sign on the numerator, denominator always
/// present ("0/1", "-1/2", "3/1").
std::string to_wire(const Rational& value);

std::string to_string(const BigInt& value);

}  // namespace relfact
