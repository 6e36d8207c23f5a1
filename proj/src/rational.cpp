#include "necone/rational.hpp"

#include "necone/error.hpp"

#include <cctype>
#include <cmath>

namespace necone {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(ErrorKind::Model, "malformed rational \"" + std::string(whole) + "\"");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '-')
            fail(ErrorKind::Model, "malformed rational \"" + std::string(text) + "\"");
        Integer den = parse_integer(den_text, text);
        if (den == 0) fail(ErrorKind::Model, "zero denominator in \"" + std::string(text) + "\"");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    const auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!frac.empty() && !all_digits(frac))
            fail(ErrorKind::Model, "malformed rational \"" + std::string(text) + "\"");
        bool neg = !int_part.empty() && int_part.front() == '-';
        std::string digits(int_part);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        Integer whole = parse_integer(digits, text);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer frac_num = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
        Integer num = abs(whole) * scale + frac_num;
        Rational r(neg ? Integer(-num) : num, scale);
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (sgn(x) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

SquarefreeSplit squarefree_split(const Integer& n)
{
    require(sgn(n) > 0, ErrorKind::Internal, "squarefree_split of non-positive integer");
    Integer rest = n;
    Integer k = 1;
    // Strip every prime up to the cube root; what remains has at most two prime factors.
    Integer bound;
    mpz_root(bound.get_mpz_t(), rest.get_mpz_t(), 3);
    bound += 1;
    Integer m = 1;
    auto take = [&](const Integer& p) {
        Integer p2 = p * p;
        while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
            rest /= p2;
            k *= p;
        }
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            m *= p;
        }
    };
    take(Integer(2));
    Integer p = 3;
    for (; p <= bound && p.fits_ulong_p() && rest > 1; p += 2) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p.get_ui())) continue;
        take(p);
        mpz_root(bound.get_mpz_t(), rest.get_mpz_t(), 3);
        bound += 1;
    }
    for (; p <= bound && rest > 1; p += 2) take(p);
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Integer s;
            mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
            k *= s;
        } else {
            m *= rest;
        }
    }
    return {k, m};
}

Rational from_double(double v)
{
    require(std::isfinite(v), ErrorKind::Internal, "from_double of non-finite value");
    Rational r(v);
    return r;
}

Rational floor_rational(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

Rational ceil_rational(const Rational& x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    require(lo < hi, ErrorKind::Internal, "simplest_between: empty interval");
    // Integer strictly inside the interval, nearest to zero.
    Rational fl = floor_rational(lo) + 1;
    Rational ce = ceil_rational(hi) - 1;
    if (fl <= ce) {
        if (sgn(fl) <= 0 && sgn(ce) >= 0) return Rational(0);
        return sgn(fl) > 0 ? fl : ce;
    }
    if (sgn(hi) <= 0) return Rational(-simplest_between(Rational(-hi), Rational(-lo)));
    // lo and hi share the integer part n: recurse on reciprocals of fractional parts.
    Rational n = floor_rational(lo);
    Rational flo = lo - n;
    Rational fhi = hi - n;
    if (sgn(flo) == 0) {
        // Interval (n, n + fhi): the answer is n + 1/m with m the least integer above 1/fhi.
        Rational inv = 1 / fhi;
        Rational m = floor_rational(inv) + 1;
        return Rational(n + 1 / m);
    }
    Rational inner = simplest_between(Rational(1 / fhi), Rational(1 / flo));
    return Rational(n + 1 / inner);
}

}  // namespace necone
