#include "necone/zariski.hpp"

#include "necone/cone.hpp"

#include <algorithm>

namespace necone {

DivisorClass ZariskiDecomposition::negative(const CurveList& curves) const
{
    DivisorClass n = DivisorClass::zero(divisor.model());
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (sgn(coeffs[i]) != 0) n = n + Scalar(coeffs[i]) * curves[i].cls;
    return n;
}

RationalMatrix support_gram(const CurveList& curves, const std::vector<std::size_t>& idx)
{
    RationalMatrix g(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            g(a, b) = intersect(curves[idx[a]].cls, curves[idx[b]].cls).a();
    return g;
}

ZariskiDecomposition zariski_decompose(const DivisorClass& d, const CurveList& curves)
{
    const ModelPtr& model = d.model();
    (void)rational_coords(d);
    require(intersect(d, polarization(model)).sign() >= 0, ErrorKind::Precondition,
            "zariski_decompose: D.L must be non-negative");

    ZariskiDecomposition out;
    out.divisor = d;
    out.coeffs.assign(curves.size(), Rational(0));

    std::vector<bool> in_support(curves.size(), false);
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (intersect(d, curves[i].cls).sign() < 0) in_support[i] = true;

    DivisorClass p = d;
    for (;;) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (in_support[i]) s.push_back(i);
        if (s.empty()) break;

        const RationalMatrix g = support_gram(curves, s);
        require(is_negative_definite(g), ErrorKind::Model, "curve list violates Hodge index");
        RationalVector rhs(s.size());
        for (std::size_t a = 0; a < s.size(); ++a) rhs[a] = intersect(d, curves[s[a]].cls).a();
        const auto sol = solve_linear(g, rhs);
        require(sol.has_value(), ErrorKind::Model, "curve list violates Hodge index");
        for (std::size_t a = 0; a < s.size(); ++a)
            require(sgn((*sol)[a]) >= 0, ErrorKind::Precondition,
                    "zariski_decompose: negative coefficient on " + curves[s[a]].label +
                        "; D is not pseudo-effective relative to the list");

        p = d;
        std::fill(out.coeffs.begin(), out.coeffs.end(), Rational(0));
        for (std::size_t a = 0; a < s.size(); ++a) {
            out.coeffs[s[a]] = (*sol)[a];
            p = p - Scalar((*sol)[a]) * curves[s[a]].cls;
        }

        bool grew = false;
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (!in_support[i] && intersect(p, curves[i].cls).sign() < 0) in_support[i] = grew = true;
        if (!grew) break;
        ++out.rounds;
    }
    out.positive = p;
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (sgn(out.coeffs[i]) > 0) out.support.push_back(i);
    return out;
}

NeDecomposition ne_decompose(const DivisorClass& y, const CurveList& curves)
{
    const ZariskiDecomposition zd = zariski_decompose(y, curves);
    if (in_positive_cone(zd.positive) == ConeMembership::Outside)
        fail(ErrorKind::Precondition, "list incomplete: P not in positive cone");
    return {zd.positive, zd.coeffs};
}

ListCheckReport list_decomposition_check(const ModelPtr& model, const CurveList& curves, std::size_t samples,
                                         std::uint64_t seed, Execution exec)
{
    ListCheckReport rep;
    rep.seed = seed;
    rep.samples = samples;
    const auto iso = isotropic_seed(model);

    std::vector<std::string> sample_failure(samples);
    run_samples(samples, exec, [&](std::size_t i) {
        try {
            Rng rng = sample_rng(seed, i);
            RationalVector base;
            if (iso && uniform_int(rng, 0, 1) == 1) {
                auto b = random_boundary_element(model, *iso, rng);
                base = b ? *b : random_interior_element(model, rng);
            } else {
                base = random_interior_element(model, rng);
            }
            DivisorClass y = from_rational(model, base);
            for (const auto& c : curves) {
                const int k = uniform_int(rng, 0, 5);
                if (k != 0) y = y + Scalar(k) * c.cls;
            }
            const NeDecomposition dec = ne_decompose(y, curves);
            DivisorClass rebuilt = dec.pos_part;
            for (std::size_t j = 0; j < curves.size(); ++j)
                if (sgn(dec.neg_coeffs[j]) != 0) rebuilt = rebuilt + Scalar(dec.neg_coeffs[j]) * curves[j].cls;
            if (!(rebuilt == y)) sample_failure[i] = "sample " + std::to_string(i) + ": reconstruction mismatch";
            else if (std::any_of(dec.neg_coeffs.begin(), dec.neg_coeffs.end(), [](const Rational& a) { return sgn(a) < 0; }))
                sample_failure[i] = "sample " + std::to_string(i) + ": negative coefficient";
        } catch (const std::exception& e) {
            sample_failure[i] = "sample " + std::to_string(i) + ": " + e.what();
        }
    });
    for (auto& f : sample_failure)
        if (!f.empty()) {
            ++rep.reconstruction_failures;
            rep.failures.push_back(std::move(f));
        }

    for (std::size_t j = 0; j < curves.size(); ++j) {
        try {
            const NeDecomposition dec = ne_decompose(curves[j].cls, curves);
            bool ok = dec.pos_part.is_zero();
            for (std::size_t k = 0; k < curves.size(); ++k)
                ok = ok && dec.neg_coeffs[k] == (k == j ? Rational(1) : Rational(0));
            if (!ok) {
                ++rep.extremality_failures;
                rep.failures.push_back("curve " + curves[j].label + ": ray decomposes nontrivially");
            }
        } catch (const std::exception& e) {
            ++rep.extremality_failures;
            rep.failures.push_back("curve " + curves[j].label + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace necone
