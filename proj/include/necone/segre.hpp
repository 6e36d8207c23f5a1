#pragma once

// Speciality of linear systems and the Segre-type consistency checks:
// Segre bounds, the curve chain inequality, pencil counterexamples, K3 kinds,
// Nagata inequalities and bounded negativity from the anticanonical class.

#include "necone/curves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace necone {

struct LinearSystemRecord {
    std::string label;
    DivisorClass cls;
    std::optional<Rational> known_dim;  // user-supplied actual dimension
    bool reduced = false;
    bool exceptional_support = false;
    bool h2_zero_assumed = true;

    /// Checks that an exceptional-support system has no pullback part.
    static LinearSystemRecord create(LinearSystemRecord rec);
};

enum class Speciality { Special, NonSpecial, Undetermined };
std::string to_string(Speciality s);

Speciality speciality(const LinearSystemRecord& rec);

enum class SegreStatus { Bounded, ExceptionalOnly };
std::string to_string(SegreStatus s);

struct SegreBounds {
    SegreStatus status = SegreStatus::Bounded;
    int nu = 0;
    int pi = 0;
};

/// (chi, chi - 1) for chi >= 1; for chi <= 0 every negative curve must be exceptional.
SegreBounds segre_bounds(const Rational& chi);

/// -1 >= C^2 >= p_a(C) - chi >= -chi.
bool curve_bound_check(const NegativeCurveRecord& c, const Rational& chi);
bool curve_bound_check(const Rational& self_int, const Rational& genus, const Rational& chi);

enum class PencilVerdict { Consistent, SegreFails };
std::string to_string(PencilVerdict v);

struct PencilReport {
    PencilVerdict verdict = PencilVerdict::Consistent;
    bool corollary_holds = true;              // chi >= g + 1
    std::optional<bool> pg_zero_failure;      // g > 0 or q > 0, only when p_g = 0 is known
};

PencilReport pencil_counterexample(const Rational& chi, const Rational& g, const Rational& dim_l,
                                   std::optional<Rational> pg = std::nullopt,
                                   std::optional<Rational> q_irr = std::nullopt);

enum class K3Kind { KindI, KindII, KindIII, Violates };
std::string to_string(K3Kind k);

/// Rows (C^2, p, C.K): I = (-1,0,-1), II = (-2,0,0), III = (-1,1,1).
K3Kind classify_k3_curve(const NegativeCurveRecord& c, const Rational& ck);
K3Kind classify_k3_curve(const Rational& self_int, const Rational& genus, const Rational& ck);

enum class NagataVariant { Nagata, Strong };

/// Nagata: deg^2 r >= (sum m)^2. Strong: deg^2 >= sum m^2.
bool nagata_checks(const Rational& deg, const std::vector<Rational>& mults, NagataVariant variant);

/// min(-2, self-intersections of the components of the effective part).
Rational negativity_bound_anticanonical(const std::vector<Rational>& component_self_ints);

}  // namespace necone
