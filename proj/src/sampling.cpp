#include "necone/sampling.hpp"

#include <array>

namespace necone {

namespace {

Rational pair_rat(const ModelPtr& model, const RationalVector& x, const RationalVector& y)
{
    const std::size_t m = model->base_rank();
    Rational s;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s += x[i] * model->base().gram()(i, j) * y[j];
    for (std::size_t k = m; k < model->rank(); ++k) s -= x[k] * y[k];
    return s;
}

RationalVector l_coords(const ModelPtr& model)
{
    RationalVector l(model->rank());
    for (std::size_t i = 0; i < model->base_rank(); ++i) l[i] = model->base().a_Y()[i];
    return l;
}

}  // namespace

Rng sample_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x6e65u};
    return Rng(seq);
}

int uniform_int(Rng& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng);
}

std::optional<RationalVector> isotropic_seed(const ModelPtr& model)
{
    const RationalVector l = l_coords(model);
    const Rational a2 = model->base().a_sq();
    // a*L - sum b_k E_k over up to four exceptionals: isotropic iff a^2 A^2 = sum b_k^2.
    const int nex = std::min(model->r(), 4);
    if (is_integer(a2) && nex > 0) {
        for (int a = 1; a <= 6; ++a) {
            const Integer target_z = Integer(a * a) * a2.get_num();
            if (!target_z.fits_slong_p()) break;
            const long long target = target_z.get_si();
            std::array<int, 4> b{};
            int bound = 0;
            while (1LL * (bound + 1) * (bound + 1) <= target) ++bound;
            // Enumerate b_1 >= b_2 >= ... with squares summing to target.
            for (b[0] = 1; b[0] <= bound; ++b[0])
                for (b[1] = 0; b[1] <= (nex > 1 ? b[0] : 0); ++b[1])
                    for (b[2] = 0; b[2] <= (nex > 2 ? b[1] : 0); ++b[2])
                        for (b[3] = 0; b[3] <= (nex > 3 ? b[2] : 0); ++b[3]) {
                            const long long s = 1LL * b[0] * b[0] + 1LL * b[1] * b[1] + 1LL * b[2] * b[2] +
                                                1LL * b[3] * b[3];
                            if (s != target) continue;
                            RationalVector u(model->rank());
                            for (std::size_t i = 0; i < model->base_rank(); ++i) u[i] = a * l[i];
                            for (int k = 0; k < nex; ++k) u[model->base_rank() + k] = -b[k];
                            return u;
                        }
        }
    }
    // Isotropic vectors inside N(Y) itself.
    const std::size_t m = model->base_rank();
    if (m >= 2 && m <= 4) {
        RationalVector u(model->rank());
        const int range = 3;
        std::vector<int> v(m, -range);
        for (;;) {
            bool nonzero = false;
            for (std::size_t i = 0; i < m; ++i) {
                u[i] = v[i];
                nonzero = nonzero || v[i] != 0;
            }
            if (nonzero && sgn(pair_rat(model, u, u)) == 0) {
                const Rational ul = pair_rat(model, u, l);
                if (sgn(ul) != 0) {
                    if (sgn(ul) < 0)
                        for (auto& c : u) c = -c;
                    return u;
                }
            }
            std::size_t i = 0;
            while (i < m && v[i] == range) v[i++] = -range;
            if (i == m) break;
            ++v[i];
        }
    }
    return std::nullopt;
}

RationalVector random_interior_element(const ModelPtr& model, Rng& rng)
{
    const RationalVector l = l_coords(model);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RationalVector x(model->rank());
        const int k = uniform_int(rng, 1, 6);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = k * l[i] + uniform_int(rng, -3, 3);
        if (sgn(pair_rat(model, x, x)) > 0 && sgn(pair_rat(model, x, l)) > 0) return x;
    }
    return l;
}

std::optional<RationalVector> random_boundary_element(const ModelPtr& model, const RationalVector& seed, Rng& rng)
{
    const RationalVector l = l_coords(model);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RationalVector w(model->rank());
        for (auto& c : w) c = uniform_int(rng, -3, 3);
        const Rational ww = pair_rat(model, w, w);
        const Rational uw = pair_rat(model, seed, w);
        RationalVector x(model->rank());
        bool nonzero = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = ww * seed[i] - 2 * uw * w[i];
            nonzero = nonzero || sgn(x[i]) != 0;
        }
        if (!nonzero) continue;
        const Rational xl = pair_rat(model, x, l);
        if (sgn(xl) == 0) continue;
        if (sgn(xl) < 0)
            for (auto& c : x) c = -c;
        // Reduce to a primitive integral vector.
        Integer g = 0;
        for (const auto& c : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        if (g > 1)
            for (auto& c : x) c /= Rational(g);
        return x;
    }
    return std::nullopt;
}

}  // namespace necone
