#include "necone/cone.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace necone {

std::string to_string(ConeMembership m)
{
    switch (m) {
    case ConeMembership::Interior: return "interior";
    case ConeMembership::Boundary: return "boundary";
    case ConeMembership::Outside: return "outside";
    }
    return "outside";
}

std::string to_string(SliceKind k)
{
    switch (k) {
    case SliceKind::Zero: return "zero";
    case SliceKind::Ray: return "ray";
    case SliceKind::Full: return "full";
    }
    return "full";
}

PairingCheck pairing_nonneg_check(const DivisorClass& x, const DivisorClass& y)
{
    PairingCheck out;
    const ConeMembership mx = in_positive_cone(x);
    const ConeMembership my = in_positive_cone(y);
    if (mx == ConeMembership::Outside) {
        out.violation = "first argument outside the positive cone";
        return out;
    }
    if (my == ConeMembership::Outside) {
        out.violation = "second argument outside the positive cone";
        return out;
    }
    out.precondition_ok = true;
    out.value = intersect(x, y);
    out.nonnegative = out.value.sign() >= 0;
    out.strict_expected = (mx == ConeMembership::Interior && !y.is_zero()) ||
                          (my == ConeMembership::Interior && !x.is_zero());
    out.strict = out.value.sign() > 0;
    return out;
}

bool tangency_test(const DivisorClass& gamma, const DivisorClass& alpha)
{
    const ModelPtr& model = gamma.model();
    require(model->rank() >= 3, ErrorKind::Precondition, "tangency_test: needs Picard rank >= 3");
    require(intersect(gamma, gamma).sign() < 0, ErrorKind::Precondition, "tangency_test: gamma^2 must be negative");
    require(intersect(gamma, polarization(model)).sign() >= 0, ErrorKind::Precondition,
            "tangency_test: gamma.L must be non-negative");
    require(!alpha.is_zero(), ErrorKind::Precondition, "tangency_test: alpha must be nonzero");
    require(in_positive_cone(alpha) != ConeMembership::Outside, ErrorKind::Precondition,
            "tangency_test: alpha outside the positive cone");
    return intersect(alpha, alpha).is_zero() && intersect(alpha, gamma).is_zero();
}

SliceKind orthogonal_slice(const DivisorClass& gamma)
{
    require(!gamma.is_zero(), ErrorKind::Precondition, "orthogonal_slice: gamma must be nonzero");
    require(intersect(gamma, polarization(gamma.model())).sign() >= 0, ErrorKind::Precondition,
            "orthogonal_slice: gamma.L must be non-negative");
    const int sq = intersect(gamma, gamma).sign();
    if (sq > 0) return SliceKind::Zero;
    if (sq == 0) return SliceKind::Ray;
    return SliceKind::Full;
}

SignatureReport signature(const RationalMatrix& gram)
{
    auto dz = congruence_diagonalize(gram);
    SignatureReport rep;
    for (const auto& v : dz.diagonal) (sgn(v) > 0 ? rep.n_plus : (sgn(v) < 0 ? rep.n_minus : rep.n_zero))++;
    rep.transform = std::move(dz.transform);
    rep.diagonal = std::move(dz.diagonal);
    return rep;
}

SignatureReport diagonalize(const BlowupModel& model) { return signature(model.gram()); }

namespace {

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string slice_export(const ModelPtr& model, const std::vector<LabelledClass>& classes,
                         const DivisorClass& plane_normal, int boundary_samples)
{
    const DivisorClass lpol = polarization(model);
    require(!intersect(plane_normal, lpol).is_zero(), ErrorKind::Precondition,
            "slice_export: plane normal must pair nonzero with L");
    const Scalar n_sq = intersect(plane_normal, plane_normal);
    require(n_sq.sign() > 0, ErrorKind::Precondition, "slice_export: plane normal must have positive square");

    // Orthogonal frame of N-perp, exact: project basis vectors, then Gram-Schmidt.
    std::vector<DivisorClass> frame;
    std::vector<Scalar> frame_sq;
    for (std::size_t i = 0; i < model->rank() && frame.size() + 1 < model->rank(); ++i) {
        std::vector<Scalar> e(model->rank());
        e[i] = 1;
        DivisorClass v(model, std::move(e));
        v = v - (intersect(v, plane_normal) / n_sq) * plane_normal;
        for (std::size_t k = 0; k < frame.size(); ++k) v = v - (intersect(v, frame[k]) / frame_sq[k]) * frame[k];
        if (v.is_zero()) continue;
        frame_sq.push_back(intersect(v, v));
        frame.push_back(std::move(v));
    }
    const std::size_t dims = model->rank() <= 3 ? 2 : 3;

    std::ostringstream out;
    out << "label,x1,x2";
    if (dims == 3) out << ",x3";
    out << ",flag\n";

    for (const auto& [label, cls] : classes) {
        const Scalar xn = intersect(cls, plane_normal);
        out << label;
        if (xn.is_zero()) {
            for (std::size_t k = 0; k < dims; ++k) out << ",";
            out << ",at_infinity\n";
            continue;
        }
        for (std::size_t k = 0; k < dims; ++k) {
            double c = 0.0;
            if (k < frame.size()) {
                const Scalar num = intersect(cls, frame[k]) / xn;
                c = num.to_double() / std::sqrt(-frame_sq[k].to_double());
            }
            out << "," << fmt_double(c);
        }
        out << (xn.sign() > 0 ? ",finite\n" : ",finite_neg\n");
    }

    const double radius = 1.0 / std::sqrt(n_sq.to_double());
    for (int j = 0; j < boundary_samples; ++j) {
        out << "boundary";
        if (dims == 2) {
            const double th = 2.0 * std::numbers::pi * j / boundary_samples;
            out << "," << fmt_double(radius * std::cos(th)) << "," << fmt_double(radius * std::sin(th));
        } else {
            // Fibonacci lattice on the sphere.
            const double z = 1.0 - (2.0 * j + 1.0) / boundary_samples;
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double th = j * std::numbers::pi * (3.0 - std::sqrt(5.0));
            out << "," << fmt_double(radius * rho * std::cos(th)) << "," << fmt_double(radius * rho * std::sin(th))
                << "," << fmt_double(radius * z);
        }
        out << ",boundary\n";
    }
    return out.str();
}

}  // namespace necone
