#pragma once

// Thresholds s_n, the conditions on r, ray-containment certificates
// R(C) ⊂ Pos(X) + R(K - sL), and the cone-equality check on the
// (K - sL)-nonnegative side.

#include "necone/curves.hpp"
#include "necone/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace necone {

struct ThresholdContext {
    Rational A_sq;
    Rational AK;
    Rational kY_sq;
    int r = 0;

    static ThresholdContext from_model(const BlowupModel& model);

    /// Δ_n/4 = (A.K_Y)^2 - A^2 K_Y^2 + A^2 r - A^2/n.
    [[nodiscard]] Rational delta_quarter(int n) const;
};

/// s_n = (A.K_Y + sqrt(Δ_n/4)) / A^2, the value with (K - s_n L)^2 = -1/n.
/// Throws Infeasible ("r too small for n") when Δ_n/4 < 0, or = 0 for n = 1.
Scalar s_threshold(const ThresholdContext& ctx, int n);

struct ConditionReport {
    bool satisfied = false;
    int branch = 0;        // 1: strict bound without genus term, 2: bound with q
    Rational q;            // 2*pi + nu - 1 (or 2p + n - 1 for a single curve)
    Rational bound;        // right-hand side of the binding inequality
    bool strict = false;   // r > bound rather than r >= bound
    Rational slack;        // r - bound
    std::string binding;   // the binding inequality, spelled out
};

/// Conditions for every (-n,p) with n <= nu, p <= pi at once.
ConditionReport check_conditions(const ThresholdContext& ctx, int nu, int pi);

/// Conditions for a single (-n,p)-ray.
ConditionReport check_curve_conditions(const ThresholdContext& ctx, int n, int p);

/// δ rule: min over constraints of slack/(2 r max_coefficient), capped at 1/(2r).
struct DeltaConstraint {
    Rational slack_lower;      // rational lower bound of a strictly positive slack
    Rational max_coefficient;  // upper bound of |per-point coefficient of δ|
};
Rational choose_delta(const std::vector<DeltaConstraint>& constraints, int r);
/// Default cap 1/(2r); NECONE_DELTA_CAP overrides it (non-certified mode).
Rational delta_cap(int r);
bool delta_cap_overridden();

struct RayCertChecks {
    bool s_matches_n = false;     // (K - sL)^2 = -1/n
    bool c_le_minus_one = false;  // C.(K - sL) <= -1
    bool alpha_sq_zero = false;
    bool alpha_dot_h_nonneg = false;
    bool alpha_dot_h_positive = false;
    bool t0_positive = false;     // t0 >= 1/n
};

struct RayContainmentCert {
    NegativeCurveRecord curve;
    int n = 0;
    int p = 0;
    Scalar s;
    TowerScalar t0;
    TowerDivisor alpha;
    TowerScalar alpha_dot_h;
    Rational delta;
    bool delta_overridden = false;
    RayCertChecks checks;
    bool valid = false;
    std::string failure;  // first failing inequality, empty when valid
};

/// Certificate at a given s, which must equal s_n for n = -C^2.
RayContainmentCert ray_certificate(const ModelPtr& model, const NegativeCurveRecord& curve, const Scalar& s);
/// Certificate at s = s_n computed from the model.
RayContainmentCert ray_certificate(const ModelPtr& model, const NegativeCurveRecord& curve);

/// α·h at a given δ for an existing certificate.
TowerScalar alpha_dot_h(const RayContainmentCert& cert, const Rational& delta);

/// s_1 < ... < s_nu, verified pairwise.
std::vector<Scalar> s_monotonicity(const ThresholdContext& ctx, int nu);

struct KsLhValue {
    Scalar direct;       // (K - sL).h computed from the classes
    Scalar closed_form;  // -sqrt(Δ_n/4) + r δ
    int n = 0;
    bool negative = false;
};
/// Throws Internal if the two computations disagree.
KsLhValue k_minus_sl_h_negative(const ModelPtr& model, const Scalar& s, const Rational& delta);

struct Counterexample {
    std::size_t sample = 0;
    DivisorClass gamma;
};

struct MainTheoremReport {
    std::uint64_t seed = 0;
    int nu = 0;
    int pi = 0;
    ConditionReport conditions;
    Scalar s;
    std::vector<RayContainmentCert> certificates;
    std::vector<bool> lifted;  // s_n <= s_nu for each certificate
    Rational delta;             // common δ for every certificate and for (K - s_n L).h < 0
    bool k_minus_sl_h_negative = false;
    std::size_t samples = 0;
    std::size_t tested = 0;     // samples with γ.(K - sL) >= 0
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const { return failures.empty() && counterexamples.empty(); }
};

/// Certificates for every listed curve, then falsification sampling of
/// NE_{(K-sL)>=0} ⊆ Pos. Throws Infeasible when the conditions on r fail and
/// Precondition when a curve lies outside the (nu, pi) list.
MainTheoremReport main_theorem_check(const ModelPtr& model, const CurveList& curves, int nu, int pi,
                                     std::size_t samples, std::uint64_t seed, Execution exec = Execution::Parallel);

/// Anchor L - λ(K - sL) with λ rational, strictly inside Pos ∩ (K - sL)^{>0}.
DivisorClass positive_side_anchor(const ModelPtr& model, const Scalar& s);

}  // namespace necone
