#include "necone/lattice.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace necone {

namespace {

constexpr std::array<std::pair<SurfaceClass, const char*>, 7> kClassNames{{
    {SurfaceClass::P2, "P2"},
    {SurfaceClass::K3, "K3"},
    {SurfaceClass::Abelian, "Abelian"},
    {SurfaceClass::Enriques, "Enriques"},
    {SurfaceClass::Bielliptic, "Bielliptic"},
    {SurfaceClass::GeneralType, "GeneralType"},
    {SurfaceClass::Other, "Other"},
}};

std::string cell(std::size_t i, std::size_t j)
{
    return "gram_Y[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

std::string to_string(SurfaceClass c)
{
    for (const auto& [k, name] : kClassNames)
        if (k == c) return name;
    return "Other";
}

SurfaceClass parse_surface_class(const std::string& name)
{
    for (const auto& [k, n] : kClassNames)
        if (name == n) return k;
    fail(ErrorKind::Model, "class: unknown surface class \"" + name + "\"");
}

Rational SurfaceModel::pair(const RationalVector& x, const RationalVector& y) const
{
    const std::size_t m = rank();
    Rational sum;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sum += x[i] * data_.gram_Y(i, j) * y[j];
    return sum;
}

SurfaceModel SurfaceModel::create(SurfaceData data)
{
    const RationalMatrix& g = data.gram_Y;
    const std::size_t m = g.rows();
    require(m >= 1, ErrorKind::Model, "gram_Y: empty matrix");
    require(g.cols() == m, ErrorKind::Model, "gram_Y: matrix is not square");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g(i, j) != g(j, i))
                fail(ErrorKind::Model, cell(i, j) + ": matrix not symmetric (" + cell(i, j) + " = " +
                                           to_string(g(i, j)) + ", " + cell(j, i) + " = " + to_string(g(j, i)) +
                                           ")");
    require(data.k_Y.size() == m, ErrorKind::Model,
            "k_Y: expected " + std::to_string(m) + " coordinates, got " + std::to_string(data.k_Y.size()));
    require(data.a_Y.size() == m, ErrorKind::Model,
            "a_Y: expected " + std::to_string(m) + " coordinates, got " + std::to_string(data.a_Y.size()));

    const auto dz = congruence_diagonalize(g);
    std::size_t plus = 0, minus = 0, zero = 0;
    for (const auto& v : dz.diagonal) (sgn(v) > 0 ? plus : (sgn(v) < 0 ? minus : zero))++;
    if (plus != 1 || zero != 0)
        fail(ErrorKind::Model, "gram_Y: signature (" + std::to_string(plus) + ", " + std::to_string(minus) + ", " +
                                   std::to_string(zero) + ") violates the Hodge index theorem, expected (1, " +
                                   std::to_string(m - 1) + ", 0)");

    SurfaceModel model(std::move(data));
    const SurfaceData& d = model.data_;
    if (sgn(model.a_sq()) <= 0) fail(ErrorKind::Model, "a_Y: ample class must have positive square");
    const Rational k2 = model.pair(d.k_Y, d.k_Y);
    if (k2 != d.kY_sq)
        fail(ErrorKind::Model, "kY_sq: given " + to_string(d.kY_sq) + " but k_Y.k_Y = " + to_string(k2));
    if (d.surface_class == SurfaceClass::K3 || d.surface_class == SurfaceClass::Abelian) {
        for (std::size_t i = 0; i < m; ++i)
            if (sgn(d.k_Y[i]) != 0)
                fail(ErrorKind::Model, "k_Y[" + std::to_string(i) + "]: canonical class of a " +
                                           to_string(d.surface_class) + " surface must vanish");
    }
    if (d.pg && d.q_irr && d.chi != 1 - *d.q_irr + *d.pg)
        fail(ErrorKind::Model, "chi: " + to_string(d.chi) + " differs from 1 - q + pg = " +
                                   to_string(Rational(1 - *d.q_irr + *d.pg)));

    // Wu formula: x^2 + x.K_Y is even for every integral x iff g_ii + (G k)_i is even.
    bool integral = std::all_of(d.k_Y.begin(), d.k_Y.end(), [](const Rational& v) { return is_integer(v); });
    for (std::size_t i = 0; i < m && integral; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!is_integer(d.gram_Y(i, j))) integral = false;
    if (integral) {
        const RationalVector gk = d.gram_Y.apply(d.k_Y);
        for (std::size_t i = 0; i < m; ++i) {
            const Rational v = d.gram_Y(i, i) + gk[i];
            if (!is_integer(v) || v.get_num() % 2 != 0)
                fail(ErrorKind::Model, "k_Y: adjunction parity fails on basis vector " + std::to_string(i) +
                                           " (" + cell(i, i) + " + (G k_Y)[" + std::to_string(i) + "] is odd)");
        }
        model.parity_checked_ = true;
    }
    return model;
}

ModelPtr BlowupModel::create(SurfaceModel base, int r)
{
    require(r >= 0, ErrorKind::Model, "r: number of blown-up points must be non-negative");
    return ModelPtr(new BlowupModel(std::move(base), r));
}

RationalMatrix BlowupModel::gram() const
{
    const std::size_t m = base_rank();
    RationalMatrix g(rank(), rank());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(i, j) = base_.gram()(i, j);
    for (std::size_t k = m; k < rank(); ++k) g(k, k) = -1;
    return g;
}

RationalVector rational_coords(const DivisorClass& x)
{
    RationalVector out;
    out.reserve(x.size());
    for (const auto& c : x.coords()) {
        require(c.in_base(), ErrorKind::Precondition, "class has irrational coordinates");
        out.push_back(c.a());
    }
    return out;
}

DivisorClass from_rational(const ModelPtr& model, const RationalVector& coords)
{
    std::vector<Scalar> c(coords.begin(), coords.end());
    return DivisorClass(model, std::move(c));
}

DivisorClass pullback(const ModelPtr& model, const RationalVector& y_coords)
{
    require(y_coords.size() == model->base_rank(), ErrorKind::Precondition,
            "pullback: expected " + std::to_string(model->base_rank()) + " coordinates on Y");
    std::vector<Scalar> c(model->rank());
    for (std::size_t i = 0; i < y_coords.size(); ++i) c[i] = y_coords[i];
    return DivisorClass(model, std::move(c));
}

DivisorClass exceptional(const ModelPtr& model, int i)
{
    require(i >= 1 && i <= model->r(), ErrorKind::Precondition,
            "exceptional index " + std::to_string(i) + " out of range 1.." + std::to_string(model->r()));
    std::vector<Scalar> c(model->rank());
    c[model->base_rank() + static_cast<std::size_t>(i - 1)] = 1;
    return DivisorClass(model, std::move(c));
}

DivisorClass canonical(const ModelPtr& model)
{
    std::vector<Scalar> c(model->rank());
    for (std::size_t i = 0; i < model->base_rank(); ++i) c[i] = model->base().k_Y()[i];
    for (std::size_t k = model->base_rank(); k < model->rank(); ++k) c[k] = 1;
    return DivisorClass(model, std::move(c));
}

DivisorClass polarization(const ModelPtr& model) { return pullback(model, model->base().a_Y()); }

DivisorClass ample_h(const ModelPtr& model, const Rational& delta)
{
    require(sgn(delta) > 0, ErrorKind::Precondition, "ample_h: delta must be positive");
    std::vector<Scalar> c(model->rank());
    for (std::size_t i = 0; i < model->base_rank(); ++i) c[i] = model->base().a_Y()[i];
    for (std::size_t k = model->base_rank(); k < model->rank(); ++k) c[k] = Rational(-delta);
    return DivisorClass(model, std::move(c));
}

Rational arithmetic_genus(const DivisorClass& c)
{
    const Scalar s = intersect(c, c) + intersect(c, canonical(c.model()));
    require(s.in_base() && is_integer(s.a()) && s.a().get_num() % 2 == 0, ErrorKind::Precondition,
            "non-integral class for adjunction (C^2 + C.K = " + to_string(s) + ")");
    return Rational(1 + s.a() / 2);
}

Rational riemann_roch_chi(const DivisorClass& lb)
{
    const Scalar s = intersect(lb, lb) - intersect(lb, canonical(lb.model()));
    require(s.in_base(), ErrorKind::Precondition, "riemann_roch_chi needs rational coordinates");
    return Rational(lb.model()->base().chi() + s.a() / 2);
}

DimensionEstimate virtual_and_expected_dim(const DivisorClass& lb, bool h2_zero_assumed)
{
    const Rational v = riemann_roch_chi(lb) - 1;
    const Rational e = v < -1 ? Rational(-1) : v;
    return {v, e, h2_zero_assumed};
}

}  // namespace necone
