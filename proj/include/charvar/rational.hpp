#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace charvar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-2/5" or "1/2" into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace charvar
