#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace necone {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.25". Result is canonical.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Exact non-negative square root if x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

/// n = k^2 * m with m squarefree (n > 0).
struct SquarefreeSplit {
    Integer k;
    Integer m;
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Exact binary value of a finite double.
Rational from_double(double v);

/// The rational with smallest denominator in the open interval (lo, hi), lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

Rational floor_rational(const Rational& x);
Rational ceil_rational(const Rational& x);

}  // namespace necone
