#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chentype {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "3", "-7/4", "0.25", "1.5e-2" into an exact rational.
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Nearest double; exact for dyadic values.
inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace chentype
