#pragma once

// Zariski decomposition relative to a finite list of declared negative curves,
// and the induced decomposition NE = Pos + sum R(C).

#include "necone/curves.hpp"
#include "necone/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace necone {

/// D = P + sum coeffs[i] C_i with P.C_j = 0 on the support and P.C >= 0 on the list.
struct ZariskiDecomposition {
    DivisorClass divisor;
    DivisorClass positive;
    RationalVector coeffs;  // one per listed curve, zero off the support
    std::vector<std::size_t> support;
    int rounds = 0;  // support enlargements performed

    [[nodiscard]] DivisorClass negative(const CurveList& curves) const;
};

/// Gram matrix of the curves indexed by `idx`.
RationalMatrix support_gram(const CurveList& curves, const std::vector<std::size_t>& idx);

/// Fujita-style iteration. Each round adds every listed curve that pairs
/// negatively with the current candidate P.
ZariskiDecomposition zariski_decompose(const DivisorClass& d, const CurveList& curves);

struct NeDecomposition {
    DivisorClass pos_part;
    RationalVector neg_coeffs;
};

/// y = P + sum a_i C_i with P in the closed positive cone; throws when P^2 < 0
/// (the list cannot certify pseudo-effectivity of y).
NeDecomposition ne_decompose(const DivisorClass& y, const CurveList& curves);

struct ListCheckReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t reconstruction_failures = 0;
    std::size_t extremality_failures = 0;
    std::vector<std::string> failures;  // in sample order, then curve order

    [[nodiscard]] bool passed() const { return reconstruction_failures == 0 && extremality_failures == 0; }
};

/// Samples y = (positive-cone element) + (nonnegative combination of list
/// curves), decomposes and reconstructs each; then checks every listed curve
/// decomposes as itself (its ray admits no other decomposition).
ListCheckReport list_decomposition_check(const ModelPtr& model, const CurveList& curves, std::size_t samples,
                                         std::uint64_t seed, Execution exec = Execution::Parallel);

}  // namespace necone
