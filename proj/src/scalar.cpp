#include "necone/scalar.hpp"

#include <cmath>

namespace necone {

std::optional<Scalar> scalar_sqrt(const Scalar& x)
{
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return Scalar(0);
    if (x.in_base()) {
        if (auto r = rational_sqrt(x.a())) return Scalar(*r);
        return std::nullopt;  // d is not available to test y*sqrt(d) for a bare rational
    }
    const Rational& ea = x.a();
    const Rational& eb = x.b();
    const Rational& d = x.d();
    // (u + v sqrt d)^2 = x  <=>  u^2 + d v^2 = ea, 2uv = eb.
    const auto n = rational_sqrt(Rational(ea * ea - d * eb * eb));
    if (!n) return std::nullopt;
    for (const Rational& u2 : {Rational((ea + *n) / 2), Rational((ea - *n) / 2)}) {
        if (sgn(u2) <= 0) continue;
        const auto u = rational_sqrt(u2);
        if (!u) continue;
        const Rational v = eb / (2 * *u);
        Scalar cand = Scalar::make(*u, v, d);
        if (cand * cand == x) return abs(cand);
    }
    return std::nullopt;
}

std::string to_string(const Scalar& x)
{
    if (x.in_base()) return to_string(x.a());
    std::string out;
    if (sgn(x.a()) != 0) out = to_string(x.a()) + (sgn(x.b()) > 0 ? " + " : " - ");
    else if (sgn(x.b()) < 0) out = "-";
    const Rational mag = abs(x.b());
    if (mag != 1) out += to_string(mag) + "*";
    out += "sqrt(" + to_string(x.d()) + ")";
    return out;
}

std::string to_string(const TowerScalar& x)
{
    if (x.in_base()) return to_string(x.a());
    return "(" + to_string(x.a()) + ") + (" + to_string(x.b()) + ")*sqrt(" + to_string(x.d()) + ")";
}

namespace {

// Generic bracketing by sign tests only.
template <class X>
RationalBracket bracket_generic(const X& x, const Rational& width)
{
    require(sgn(width) > 0, ErrorKind::Internal, "bracket width must be positive");
    const double approx = x.to_double();
    Rational center = from_double(approx);
    Rational eps = from_double(std::ldexp(std::max(1.0, std::fabs(approx)), -40));
    Rational lo = center - eps;
    while ((x - X(lo)).sign() < 0) {
        eps *= 2;
        lo = center - eps;
    }
    Rational hi = center + eps;
    while ((x - X(hi)).sign() > 0) {
        eps *= 2;
        hi = center + eps;
    }
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int s = (x - X(mid)).sign();
        if (s == 0) return {mid, mid};
        if (s > 0) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

template <class X>
Rational relative_width(const X& x)
{
    const double mag = std::max(1.0, std::fabs(x.to_double()));
    return from_double(std::ldexp(mag, -30));
}

}  // namespace

RationalBracket bracket(const Scalar& x, const Rational& width)
{
    if (x.in_base()) return {x.a(), x.a()};
    return bracket_generic(x, width);
}

RationalBracket bracket(const TowerScalar& x, const Rational& width)
{
    if (x.in_base()) return bracket(x.a(), width);
    return bracket_generic(x, width);
}

Rational lower_bound(const Scalar& x) { return bracket(x, relative_width(x)).lo; }
Rational upper_bound(const Scalar& x) { return bracket(x, relative_width(x)).hi; }
Rational lower_bound(const TowerScalar& x) { return bracket(x, relative_width(x)).lo; }
Rational upper_bound(const TowerScalar& x) { return bracket(x, relative_width(x)).hi; }

int compare(const Scalar& x, const Scalar& y)
{
    if (Scalar::compatible(x, y)) return (x - y).sign();
    // Distinct squarefree radicands, both irrational: the values differ, so
    // shrinking rational brackets eventually separate them.
    Rational width = relative_width(x);
    for (;;) {
        const RationalBracket bx = bracket(x, width);
        const RationalBracket by = bracket(y, width);
        if (bx.hi < by.lo) return -1;
        if (by.hi < bx.lo) return 1;
        width /= 1024;
    }
}

}  // namespace necone
