#pragma once

#include "necone/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace necone {

/// A declared integral curve class with negative self-intersection.
struct NegativeCurveRecord {
    std::string label;
    DivisorClass cls;
    Rational self_int;
    Rational genus;
    bool is_exceptional = false;

    /// Validates integrality, C^2 <= -1, p_a >= 0 and, when supplied, the
    /// declared self-intersection and genus.
    static NegativeCurveRecord create(DivisorClass cls, bool is_exceptional, std::string label = {},
                                      std::optional<Rational> declared_self_int = std::nullopt,
                                      std::optional<Rational> declared_genus = std::nullopt);

    /// n with C^2 = -n (integral).
    [[nodiscard]] int negativity() const;
    [[nodiscard]] int genus_int() const;
};

using CurveList = std::vector<NegativeCurveRecord>;

/// E_1..E_r.
CurveList exceptional_curves(const ModelPtr& model);
/// Strict transforms H - E_i - E_j of lines through two points (Y = P^2 only).
CurveList p2_line_curves(const ModelPtr& model);

}  // namespace necone
