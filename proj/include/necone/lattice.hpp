#pragma once

// Numerical models of a surface Y and of its blow-up X = Bl_r Y.
//
// Basis of N(X): the chosen basis of N(Y) (pulled back) followed by the
// exceptional classes E_1..E_r. The Gram matrix of X is gram_Y ⊕ (-I_r),
// K_X = pullback(K_Y) + sum E_i and L = pullback(A).

#include "necone/linalg.hpp"
#include "necone/scalar.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace necone {

enum class SurfaceClass { P2, K3, Abelian, Enriques, Bielliptic, GeneralType, Other };

std::string to_string(SurfaceClass c);
SurfaceClass parse_surface_class(const std::string& name);

/// Raw, unvalidated description of Y.
struct SurfaceData {
    Rational chi;
    Rational kY_sq;
    RationalMatrix gram_Y;
    RationalVector k_Y;
    RationalVector a_Y;
    SurfaceClass surface_class = SurfaceClass::Other;
    std::optional<Rational> pg;
    std::optional<Rational> q_irr;
};

/// Validated model of Y. Construction checks every invariant and reports the
/// offending field by path ("gram_Y[0][1]", "k_Y", ...).
class SurfaceModel {
public:
    static SurfaceModel create(SurfaceData data);

    [[nodiscard]] const SurfaceData& data() const { return data_; }
    [[nodiscard]] std::size_t rank() const { return data_.k_Y.size(); }
    [[nodiscard]] const RationalMatrix& gram() const { return data_.gram_Y; }
    [[nodiscard]] const Rational& chi() const { return data_.chi; }
    [[nodiscard]] const Rational& kY_sq() const { return data_.kY_sq; }
    [[nodiscard]] const RationalVector& k_Y() const { return data_.k_Y; }
    [[nodiscard]] const RationalVector& a_Y() const { return data_.a_Y; }
    [[nodiscard]] SurfaceClass surface_class() const { return data_.surface_class; }

    [[nodiscard]] Rational pair(const RationalVector& x, const RationalVector& y) const;
    [[nodiscard]] Rational a_sq() const { return pair(a_Y(), a_Y()); }
    [[nodiscard]] Rational a_dot_k() const { return pair(a_Y(), k_Y()); }

    /// True when x^2 + x.K_Y is even for all integral x (integral Gram and K_Y).
    [[nodiscard]] bool parity_checked() const { return parity_checked_; }

private:
    explicit SurfaceModel(SurfaceData data) : data_(std::move(data)) {}
    SurfaceData data_;
    bool parity_checked_ = false;
};

class BlowupModel;
using ModelPtr = std::shared_ptr<const BlowupModel>;

class BlowupModel {
public:
    static ModelPtr create(SurfaceModel base, int r);

    [[nodiscard]] const SurfaceModel& base() const { return base_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] std::size_t base_rank() const { return base_.rank(); }
    [[nodiscard]] std::size_t rank() const { return base_.rank() + static_cast<std::size_t>(r_); }
    /// Full Gram matrix of X.
    [[nodiscard]] RationalMatrix gram() const;

    /// x^T (gram_Y ⊕ -I) y over any coordinate field.
    template <class T>
    T pair(const std::vector<T>& x, const std::vector<T>& y) const
    {
        const std::size_t m = base_rank();
        T sum;
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i].is_zero()) continue;
            T row;
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& g = base_.gram()(i, j);
                if (sgn(g) != 0 && !y[j].is_zero()) row += T(g) * y[j];
            }
            sum += x[i] * row;
        }
        for (std::size_t k = m; k < rank(); ++k)
            if (!x[k].is_zero() && !y[k].is_zero()) sum -= x[k] * y[k];
        return sum;
    }

private:
    BlowupModel(SurfaceModel base, int r) : base_(std::move(base)), r_(r) {}
    SurfaceModel base_;
    int r_;
};

/// Class in N(X) with coordinates in T (Scalar or TowerScalar), bound to its model.
template <class T>
class Divisor {
public:
    Divisor() = default;
    Divisor(ModelPtr model, std::vector<T> coords) : model_(std::move(model)), coords_(std::move(coords))
    {
        require(model_ != nullptr, ErrorKind::Precondition, "divisor without model");
        require(coords_.size() == model_->rank(), ErrorKind::Precondition,
                "divisor has " + std::to_string(coords_.size()) + " coordinates, model rank is " +
                    std::to_string(model_->rank()));
    }
    static Divisor zero(ModelPtr model)
    {
        const std::size_t n = model->rank();
        return Divisor(std::move(model), std::vector<T>(n));
    }

    [[nodiscard]] const ModelPtr& model() const { return model_; }
    [[nodiscard]] const std::vector<T>& coords() const { return coords_; }
    [[nodiscard]] std::size_t size() const { return coords_.size(); }
    const T& operator[](std::size_t i) const { return coords_[i]; }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Divisor operator+(const Divisor& x, const Divisor& y)
    {
        same_model(x, y);
        std::vector<T> c(x.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords_[i] + y.coords_[i];
        return Divisor(x.model_, std::move(c));
    }
    friend Divisor operator-(const Divisor& x, const Divisor& y)
    {
        same_model(x, y);
        std::vector<T> c(x.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords_[i] - y.coords_[i];
        return Divisor(x.model_, std::move(c));
    }
    friend Divisor operator*(const T& t, const Divisor& x)
    {
        std::vector<T> c(x.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = t * x.coords_[i];
        return Divisor(x.model_, std::move(c));
    }
    Divisor operator-() const { return T(-1) * *this; }

    friend bool operator==(const Divisor& x, const Divisor& y)
    {
        return x.model_ == y.model_ && x.coords_ == y.coords_;
    }

    static void same_model(const Divisor& x, const Divisor& y)
    {
        require(x.model_ == y.model_, ErrorKind::Precondition, "divisors belong to different models");
    }

private:
    ModelPtr model_;
    std::vector<T> coords_;
};

using DivisorClass = Divisor<Scalar>;
using TowerDivisor = Divisor<TowerScalar>;

template <class T>
T intersect(const Divisor<T>& x, const Divisor<T>& y)
{
    Divisor<T>::same_model(x, y);
    return x.model()->pair(x.coords(), y.coords());
}

template <class To, class From>
Divisor<To> convert(const Divisor<From>& x)
{
    std::vector<To> c;
    c.reserve(x.size());
    for (const auto& v : x.coords()) c.emplace_back(v);
    return Divisor<To>(x.model(), std::move(c));
}

/// Rational coordinates of x; throws if any coordinate is irrational.
RationalVector rational_coords(const DivisorClass& x);
DivisorClass from_rational(const ModelPtr& model, const RationalVector& coords);

// Builders. Exceptional indices are 1-based.
DivisorClass pullback(const ModelPtr& model, const RationalVector& y_coords);
DivisorClass exceptional(const ModelPtr& model, int i);
DivisorClass canonical(const ModelPtr& model);
DivisorClass polarization(const ModelPtr& model);  // L = pullback(A)
DivisorClass ample_h(const ModelPtr& model, const Rational& delta);

/// p_a = 1 + (C^2 + C.K)/2; requires C^2 + C.K to be an even integer.
Rational arithmetic_genus(const DivisorClass& c);

/// chi(O_Y) + (L^2 - L.K)/2.
Rational riemann_roch_chi(const DivisorClass& lb);

struct DimensionEstimate {
    Rational virtual_dim;
    Rational expected_dim;
    bool h2_zero_assumed;  // hypothesis recorded, never verified
};
DimensionEstimate virtual_and_expected_dim(const DivisorClass& lb, bool h2_zero_assumed = true);

}  // namespace necone
