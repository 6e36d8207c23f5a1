#pragma once

// Exact geometry of the positive cone Pos(X) = {x : x^2 >= 0, x.L >= 0}.
//
// Membership is decided with the nef class L instead of an ample h: when
// x^2 >= 0 and x.L = 0 the class lies in L-perp, which is negative definite,
// so x = 0. This makes the choice of h irrelevant for membership.

#include "necone/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace necone {

enum class ConeMembership { Interior, Boundary, Outside };
std::string to_string(ConeMembership m);

template <class T>
ConeMembership in_positive_cone(const Divisor<T>& x)
{
    if (x.is_zero()) return ConeMembership::Boundary;
    const int sq = intersect(x, x).sign();
    const int dl = intersect(x, convert<T>(polarization(x.model()))).sign();
    if (sq > 0 && dl > 0) return ConeMembership::Interior;
    if (sq == 0 && dl > 0) return ConeMembership::Boundary;
    return ConeMembership::Outside;
}

struct PairingCheck {
    bool precondition_ok = false;
    std::string violation;   // which argument left the cone
    bool nonnegative = false;
    bool strict_expected = false;  // one side interior and the other nonzero
    bool strict = false;
    Scalar value;
};

/// x.y >= 0 for x, y in the closed positive cone.
PairingCheck pairing_nonneg_check(const DivisorClass& x, const DivisorClass& y);

/// Whether the line through gamma (outside the cone) and alpha touches the
/// closed cone only at alpha: alpha^2 = 0 and alpha.gamma = 0.
bool tangency_test(const DivisorClass& gamma, const DivisorClass& alpha);

enum class SliceKind { Zero, Ray, Full };
std::string to_string(SliceKind k);

/// Shape of gamma-perp ∩ closed Pos: {0}, the ray of gamma, or a full-dimensional slice.
SliceKind orthogonal_slice(const DivisorClass& gamma);

struct SignatureReport {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    RationalMatrix transform;  // transform * G * transform^T is diagonal
    RationalVector diagonal;
};

SignatureReport signature(const RationalMatrix& gram);
SignatureReport diagonalize(const BlowupModel& model);

struct LabelledClass {
    std::string label;
    DivisorClass cls;
};

/// CSV with header "label,x1,x2[,x3],flag". Each class is scaled into the
/// affine slice {x.N = 1} and written in orthonormal coordinates of N-perp;
/// boundary_samples points of the cone boundary follow the input rows.
std::string slice_export(const ModelPtr& model, const std::vector<LabelledClass>& classes,
                         const DivisorClass& plane_normal, int boundary_samples = 0);

}  // namespace necone
