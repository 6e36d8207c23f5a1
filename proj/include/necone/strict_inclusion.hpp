#pragma once

// Witnesses for the strict inclusion Pos_{K>=0} ⊊ NE_{K>=0}: the sufficient
// condition sets (A)-(D), the exact feasible set of s, and the classes α, γ.

#include "necone/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace necone {

struct ConditionSets {
    bool A = false;
    bool B = false;
    bool C = false;
    bool D = false;

    [[nodiscard]] bool any() const { return A || B || C || D; }
    [[nodiscard]] std::vector<std::string> names() const;
};

ConditionSets condition_sets(const BlowupModel& model);

/// Interval of s; an absent endpoint is infinite.
struct SInterval {
    std::optional<Scalar> lo;
    std::optional<Scalar> hi;
    bool lo_closed = false;
    bool hi_closed = false;
    Rational interior;  // simplest rational found strictly inside (or the point itself)
    bool has_interior = false;

    [[nodiscard]] bool contains(const Scalar& s) const;
};

struct SSystem {
    int system = 0;  // 1: Delta_s < 0 or = 0, s > A.K_Y/A^2; 2: s >= (A.K_Y + sqrt(Delta_s))/A^2
    Scalar base;     // lower endpoint of the base set
    std::vector<Scalar> critical;  // sorted critical points
    std::vector<SInterval> intervals;
};

/// Feasible s for the applicable system, exactly: base set ∩ {g > 0} ∩ {g^2 > Delta_t}
/// with g(s) = r - K_Y^2 - 1 + s A.K_Y and Delta_t(s) = s^2 A^2 - 2 s A.K_Y + K_Y^2 + 1 - r.
SSystem solve_s_system(const BlowupModel& model);

enum class Construction { FromS, Uniruled };
std::string to_string(Construction c);

struct WitnessChecks {
    bool alpha_sq_zero = false;
    bool alpha_dot_h_nonneg = false;
    bool alpha_dot_c_nonpos = false;
    bool alpha_dot_k_pos = false;
    bool gamma_sq_neg = false;
    bool gamma_dot_k_pos = false;
};

struct StrictInclusionWitness {
    Construction construction = Construction::FromS;
    int curve_index = 0;  // C = E_i
    DivisorClass alpha;
    std::optional<Scalar> s;
    std::optional<Scalar> t;
    Rational delta;
    Scalar alpha_dot_h;
    Scalar alpha_dot_k;
    bool has_gamma = false;
    Scalar lambda;
    DivisorClass gamma;
    WitnessChecks checks;
    bool valid = false;
    std::string failure;
};

/// α = t E_i - (K - sL) with t = 1 + sqrt(Delta_t).
StrictInclusionWitness alpha_from_s(const ModelPtr& model, const Scalar& s, int exceptional_index);

/// α = L - sqrt(A^2/(r-1)) sum_{i<r} E_i with C = E_r.
StrictInclusionWitness uniruled_witness(const ModelPtr& model);

/// γ = C + λ α with λ = (2 + |C.K|)/(α.K).
StrictInclusionWitness gamma_witness(StrictInclusionWitness w);

/// Rational q with a < q < b.
Rational rational_between(const Scalar& a, const Scalar& b);

}  // namespace necone
