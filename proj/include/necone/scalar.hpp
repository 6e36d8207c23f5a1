#pragma once

// Exact numbers of the form a + b*sqrt(d).
//
// QuadraticExt<Base> adjoins one square root to an ordered field Base.
// Scalar = QuadraticExt<Rational> is the working number type; TowerScalar
// adjoins a second root on top of a Scalar field and is needed where a root
// of a quadratic with irrational coefficients appears (ray certificates).
//
// Representation invariant: b == 0 implies d == 0, and otherwise sqrt(d) is
// not an element of Base. Two irrational values can only be combined when
// their radicands agree; there is no silent approximation.

#include "necone/error.hpp"
#include "necone/rational.hpp"

#include <cmath>
#include <compare>
#include <concepts>
#include <optional>
#include <string>

namespace necone {

template <class Base>
struct FieldTraits;

template <class Base>
class QuadraticExt {
public:
    using base_type = Base;

    QuadraticExt() : a_(0), b_(0), d_(0) {}
    template <class U>
        requires std::constructible_from<Base, const U&> && (!std::same_as<U, QuadraticExt>)
    QuadraticExt(const U& value) : a_(value), b_(0), d_(0)  // NOLINT(google-explicit-constructor)
    {}

    /// Normalizing constructor; throws on a negative radicand.
    static QuadraticExt make(Base a, Base b, Base d)
    {
        using T = FieldTraits<Base>;
        if (T::sign(d) < 0) fail(ErrorKind::Arithmetic, "non-real scalar");
        if (T::sign(b) == 0 || T::sign(d) == 0) return QuadraticExt(std::move(a));
        if (auto root = T::exact_sqrt(d)) return QuadraticExt(Base(a + b * *root));
        if (auto root = T::sqrt_from_context(d, a, b)) return QuadraticExt(Base(a + b * *root));
        T::canonicalize_radical(b, d);
        if (T::sign(b) == 0) return QuadraticExt(std::move(a));
        QuadraticExt x;
        x.a_ = std::move(a);
        x.b_ = std::move(b);
        x.d_ = std::move(d);
        return x;
    }

    /// b*sqrt(d).
    static QuadraticExt root_of(const Base& d, const Base& b = Base(1)) { return make(Base(0), b, d); }

    [[nodiscard]] const Base& a() const { return a_; }
    [[nodiscard]] const Base& b() const { return b_; }
    [[nodiscard]] const Base& d() const { return d_; }

    /// True when the value lies in Base (no radical part).
    [[nodiscard]] bool in_base() const { return FieldTraits<Base>::sign(b_) == 0; }
    [[nodiscard]] bool is_zero() const { return in_base() && FieldTraits<Base>::sign(a_) == 0; }

    [[nodiscard]] int sign() const
    {
        using T = FieldTraits<Base>;
        const int sa = T::sign(a_);
        const int sb = T::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        const int c = T::sign(Base(a_ * a_ - b_ * b_ * d_));
        if (c > 0) return sa;
        if (c < 0) return sb;
        return 0;
    }

    [[nodiscard]] double to_double() const
    {
        using T = FieldTraits<Base>;
        if (in_base()) return T::to_double(a_);
        return T::to_double(a_) + T::to_double(b_) * std::sqrt(T::to_double(d_));
    }

    [[nodiscard]] QuadraticExt conjugate() const { return from_parts(a_, Base(-b_), d_); }

    /// a^2 - b^2 d; lies in Base.
    [[nodiscard]] Base norm() const { return Base(a_ * a_ - b_ * b_ * d_); }

    QuadraticExt operator-() const { return from_parts(Base(-a_), Base(-b_), d_); }

    friend QuadraticExt operator+(const QuadraticExt& x, const QuadraticExt& y)
    {
        const Base& d = common_radicand(x, y);
        return from_parts(Base(x.a_ + y.a_), Base(x.b_ + y.b_), d);
    }
    friend QuadraticExt operator-(const QuadraticExt& x, const QuadraticExt& y)
    {
        const Base& d = common_radicand(x, y);
        return from_parts(Base(x.a_ - y.a_), Base(x.b_ - y.b_), d);
    }
    friend QuadraticExt operator*(const QuadraticExt& x, const QuadraticExt& y)
    {
        const Base& d = common_radicand(x, y);
        return from_parts(Base(x.a_ * y.a_ + x.b_ * y.b_ * d), Base(x.a_ * y.b_ + x.b_ * y.a_), d);
    }
    friend QuadraticExt operator/(const QuadraticExt& x, const QuadraticExt& y)
    {
        if (y.is_zero()) fail(ErrorKind::Arithmetic, "division by zero");
        const Base n = y.norm();
        QuadraticExt num = x * y.conjugate();
        return from_parts(Base(num.a_ / n), Base(num.b_ / n), num.d_);
    }

    QuadraticExt& operator+=(const QuadraticExt& y) { return *this = *this + y; }
    QuadraticExt& operator-=(const QuadraticExt& y) { return *this = *this - y; }
    QuadraticExt& operator*=(const QuadraticExt& y) { return *this = *this * y; }
    QuadraticExt& operator/=(const QuadraticExt& y) { return *this = *this / y; }

    /// Exact equality. Irrationals from different fields compare unequal when
    /// the radicand representation is canonical; otherwise mixing throws.
    friend bool operator==(const QuadraticExt& x, const QuadraticExt& y)
    {
        if (!compatible(x, y)) {
            if (FieldTraits<Base>::canonical_radicands) return false;
            fail(ErrorKind::Arithmetic, "mixed radicands");
        }
        return (x - y).is_zero();
    }
    friend std::strong_ordering operator<=>(const QuadraticExt& x, const QuadraticExt& y)
    {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] static bool compatible(const QuadraticExt& x, const QuadraticExt& y)
    {
        return x.in_base() || y.in_base() || FieldTraits<Base>::same(x.d_, y.d_);
    }

private:
    static QuadraticExt from_parts(Base a, Base b, const Base& d)
    {
        QuadraticExt x;
        x.a_ = std::move(a);
        if (FieldTraits<Base>::sign(b) != 0) {
            x.b_ = std::move(b);
            x.d_ = d;
        }
        return x;
    }

    static const Base& common_radicand(const QuadraticExt& x, const QuadraticExt& y)
    {
        if (y.in_base()) return x.d_;
        if (x.in_base()) return y.d_;
        if (!FieldTraits<Base>::same(x.d_, y.d_)) fail(ErrorKind::Arithmetic, "mixed radicands");
        return x.d_;
    }

    Base a_;
    Base b_;
    Base d_;
};

template <>
struct FieldTraits<Rational> {
    static constexpr bool canonical_radicands = true;
    static int sign(const Rational& x) { return sgn(x); }
    static double to_double(const Rational& x) { return x.get_d(); }
    static std::optional<Rational> exact_sqrt(const Rational& x) { return rational_sqrt(x); }
    static std::optional<Rational> sqrt_from_context(const Rational&, const Rational&, const Rational&)
    {
        return std::nullopt;
    }
    static bool same(const Rational& x, const Rational& y) { return x == y; }
    /// sqrt(p/q) = sqrt(k^2 m)/q: radicand becomes the squarefree integer m.
    static void canonicalize_radical(Rational& b, Rational& d)
    {
        const Integer n = d.get_num() * d.get_den();
        const SquarefreeSplit split = squarefree_split(n);
        b = b * Rational(split.k, d.get_den());
        b.canonicalize();
        d = Rational(split.m);
    }
};

using Scalar = QuadraticExt<Rational>;
using TowerScalar = QuadraticExt<Scalar>;

/// Scalar overload set mirroring the free functions on Rational.
inline int sign(const Scalar& x) { return x.sign(); }
inline int sign(const TowerScalar& x) { return x.sign(); }

std::optional<Scalar> scalar_sqrt(const Scalar& x);

template <>
struct FieldTraits<Scalar> {
    static constexpr bool canonical_radicands = false;
    static int sign(const Scalar& x) { return x.sign(); }
    static double to_double(const Scalar& x) { return x.to_double(); }
    static std::optional<Scalar> exact_sqrt(const Scalar& x) { return scalar_sqrt(x); }
    /// A rational radicand e whose root lies in the field of a or b: e = k^2 d.
    static std::optional<Scalar> sqrt_from_context(const Scalar& e, const Scalar& a, const Scalar& b)
    {
        if (!e.in_base()) return std::nullopt;
        if (a.in_base() && b.in_base()) return Scalar::root_of(e.a());
        for (const Scalar* z : {&a, &b}) {
            if (z->in_base()) continue;
            if (auto k = rational_sqrt(Rational(e.a() / z->d()))) return Scalar::make(0, *k, z->d());
        }
        return std::nullopt;
    }
    static bool same(const Scalar& x, const Scalar& y)
    {
        return x.a() == y.a() && x.b() == y.b() && x.d() == y.d();
    }
    /// A rational radicand is rewritten over a squarefree integer.
    static void canonicalize_radical(Scalar& b, Scalar& d)
    {
        if (!d.in_base()) return;
        Rational rb(1);
        Rational rd = d.a();
        FieldTraits<Rational>::canonicalize_radical(rb, rd);
        b = b * Scalar(rb);
        d = Scalar(rd);
    }
};

/// Builds a + b*sqrt(d) over the rationals.
inline Scalar make_scalar(const Rational& a, const Rational& b, const Rational& d)
{
    return Scalar::make(a, b, d);
}

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }
inline TowerScalar abs(const TowerScalar& x) { return x.sign() < 0 ? -x : x; }

std::string to_string(const Scalar& x);
std::string to_string(const TowerScalar& x);

/// Rationals lo <= x <= hi with hi - lo <= width (width > 0).
struct RationalBracket {
    Rational lo;
    Rational hi;
};
RationalBracket bracket(const Scalar& x, const Rational& width);
RationalBracket bracket(const TowerScalar& x, const Rational& width);

/// Rational lower/upper bounds within a relative tolerance; exact when x is rational.
Rational lower_bound(const Scalar& x);
Rational upper_bound(const Scalar& x);
Rational lower_bound(const TowerScalar& x);
Rational upper_bound(const TowerScalar& x);

/// Total order across different quadratic fields (-1, 0, +1).
int compare(const Scalar& x, const Scalar& y);

}  // namespace necone
