#pragma once

// Deterministic sampling and the per-sample execution kernel.
//
// Every sample i draws from its own generator seeded by (seed, i), so the
// serial and OpenMP paths produce identical per-sample results and reports
// aggregate in index order.

#include "necone/lattice.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace necone {

enum class Execution { Serial, Parallel };

using Rng = std::mt19937_64;

Rng sample_rng(std::uint64_t seed, std::uint64_t index);

int uniform_int(Rng& rng, int lo, int hi);

/// Runs body(i) for i in [0, count). Body must not throw and may only write
/// to slot i of pre-sized outputs.
template <class Body>
void run_samples(std::size_t count, Execution exec, Body&& body)
{
    const auto n = static_cast<long long>(count);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    } else {
        for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    }
}

/// Small integral isotropic class u with u.L > 0, if one is found.
std::optional<RationalVector> isotropic_seed(const ModelPtr& model);

/// Random integral class x with x^2 > 0 and x.L > 0.
RationalVector random_interior_element(const ModelPtr& model, Rng& rng);

/// Random integral class x with x^2 = 0 and x.L > 0, obtained from the seed
/// by stereographic projection: x = (w.w) u - 2 (u.w) w.
std::optional<RationalVector> random_boundary_element(const ModelPtr& model, const RationalVector& seed, Rng& rng);

}  // namespace necone
