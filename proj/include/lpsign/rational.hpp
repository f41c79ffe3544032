#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "lpsign/sign.hpp"

namespace lpsign {

/// Exact rational coefficient backend. Thin alias over GMP's canonicalizing
/// rational type; every value is kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", integer, or decimal literals ("-1", "1/3", "0.25", "2.5e-3")
/// into an exact rational. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without the "/1".
std::string to_string(const Rational& q);

/// q^e for integer e (e < 0 requires q != 0).
Rational pow(const Rational& q, long e);

/// n! as an exact integer.
Integer factorial(unsigned long n);

/// Exact sign (never indeterminate on this backend).
inline Sign certified_sign(const Rational& q) { return sign_from_int(sgn(q)); }

inline bool is_exact_zero(const Rational& q) { return sgn(q) == 0; }

/// Smallest integer >= q.
Integer ceil(const Rational& q);

}  // namespace lpsign
