#include "necone/thresholds.hpp"

#include "necone/cone.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

namespace necone {

namespace {

std::string fmt_n(int n) { return n == 1 ? "1" : "1/" + std::to_string(n); }

struct Inequality {
    std::string text;
    Rational bound;
    bool strict;
    int branch;
};

ConditionReport evaluate(const Inequality& ineq, int r, const Rational& q)
{
    ConditionReport rep;
    rep.branch = ineq.branch;
    rep.q = q;
    rep.bound = ineq.bound;
    rep.strict = ineq.strict;
    rep.slack = Rational(r) - ineq.bound;
    rep.satisfied = ineq.strict ? sgn(rep.slack) > 0 : sgn(rep.slack) >= 0;
    rep.binding = ineq.text + " (bound " + to_string(ineq.bound) + ", r = " + std::to_string(r) + ")";
    return rep;
}

Inequality first_bound(const ThresholdContext& ctx, int n)
{
    const Rational bound = ctx.kY_sq + Rational(1, n) - ctx.AK * ctx.AK / ctx.A_sq;
    const bool strict = n == 1;
    return {std::string("r ") + (strict ? ">" : ">=") + " K_Y^2 + " + fmt_n(n) + " - (A.K_Y)^2/A^2", bound, strict, 1};
}

Inequality genus_bound(const ThresholdContext& ctx, int n, const Rational& q)
{
    const Rational bound = ctx.kY_sq + Rational(1, n) + ctx.A_sq * q * q - 2 * ctx.AK * q;
    return {"r >= K_Y^2 + " + fmt_n(n) + " + A^2 q^2 - 2(A.K_Y)q with q = " + to_string(q), bound, false, 2};
}

Scalar sqrt_delta_quarter(const ThresholdContext& ctx, int n) { return Scalar::root_of(ctx.delta_quarter(n)); }

RayContainmentCert invalid(RayContainmentCert cert, std::string failure)
{
    cert.valid = false;
    cert.failure = std::move(failure);
    return cert;
}

}  // namespace

ThresholdContext ThresholdContext::from_model(const BlowupModel& model)
{
    return {model.base().a_sq(), model.base().a_dot_k(), model.base().kY_sq(), model.r()};
}

Rational ThresholdContext::delta_quarter(int n) const
{
    require(n >= 1, ErrorKind::Precondition, "n must be at least 1");
    return AK * AK - A_sq * kY_sq + A_sq * r - A_sq / n;
}

Scalar s_threshold(const ThresholdContext& ctx, int n)
{
    const Rational dq = ctx.delta_quarter(n);
    if (sgn(dq) < 0 || (n == 1 && sgn(dq) == 0))
        fail(ErrorKind::Infeasible, "r too small for n = " + std::to_string(n) + " (Delta_n/4 = " + to_string(dq) + ")");
    return (Scalar(ctx.AK) + Scalar::root_of(dq)) / Scalar(ctx.A_sq);
}

namespace {

ConditionReport combined_conditions(const ThresholdContext& ctx, int n, const Rational& q)
{
    ConditionReport first = evaluate(first_bound(ctx, n), ctx.r, q);
    if (!first.satisfied || q <= ctx.AK / ctx.A_sq) return first;
    ConditionReport second = evaluate(genus_bound(ctx, n, q), ctx.r, q);
    if (!second.satisfied || second.slack < first.slack) return second;
    return first;
}

}  // namespace

ConditionReport check_conditions(const ThresholdContext& ctx, int nu, int pi)
{
    require(nu >= 1, ErrorKind::Precondition, "nu must be at least 1");
    require(pi >= 0, ErrorKind::Precondition, "pi must be non-negative");
    return combined_conditions(ctx, 1, Rational(2 * pi + nu - 1));
}

ConditionReport check_curve_conditions(const ThresholdContext& ctx, int n, int p)
{
    require(n >= 1, ErrorKind::Precondition, "n must be at least 1");
    require(p >= 0, ErrorKind::Precondition, "p must be non-negative");
    return combined_conditions(ctx, n, Rational(2 * p + n - 1));
}

bool delta_cap_overridden() { return std::getenv("NECONE_DELTA_CAP") != nullptr; }

Rational delta_cap(int r)
{
    if (const char* env = std::getenv("NECONE_DELTA_CAP")) {
        const Rational cap = parse_rational(env);
        require(sgn(cap) > 0, ErrorKind::Precondition, "NECONE_DELTA_CAP must be positive");
        return cap;
    }
    return Rational(1, 2 * std::max(r, 1));
}

Rational choose_delta(const std::vector<DeltaConstraint>& constraints, int r)
{
    const int rr = std::max(r, 1);
    Rational delta = delta_cap(r);
    if (delta_cap_overridden()) return delta;
    for (const auto& c : constraints) {
        require(sgn(c.slack_lower) > 0, ErrorKind::Precondition, "delta rule: slack is not strictly positive");
        if (sgn(c.max_coefficient) <= 0) continue;
        const Rational cand = c.slack_lower / (2 * rr * c.max_coefficient);
        if (cand < delta) delta = cand;
    }
    return delta;
}

RayContainmentCert ray_certificate(const ModelPtr& model, const NegativeCurveRecord& curve, const Scalar& s)
{
    const ThresholdContext ctx = ThresholdContext::from_model(*model);
    RayContainmentCert cert;
    cert.curve = curve;
    cert.n = curve.negativity();
    cert.p = curve.genus_int();
    cert.s = s;
    cert.delta_overridden = delta_cap_overridden();

    const DivisorClass L = polarization(model);
    const DivisorClass K = canonical(model);
    const DivisorClass& C = curve.cls;
    const Scalar cl = intersect(C, L);
    if (cl.is_zero() && !curve.is_exceptional)
        fail(ErrorKind::Precondition, "curve " + curve.label + ": C.L = 0 but the curve is not exceptional");

    const ConditionReport cond = check_curve_conditions(ctx, cert.n, cert.p);
    if (!cond.satisfied) return invalid(std::move(cert), cond.binding);

    const DivisorClass D = K - s * L;
    const Scalar sn = s_threshold(ctx, cert.n);
    cert.checks.s_matches_n = intersect(D, D) == Scalar(Rational(-1, cert.n)) && compare(s, sn) == 0;
    if (!cert.checks.s_matches_n) return invalid(std::move(cert), "(K - sL)^2 = -1/n with s = s_n");

    const Scalar c = intersect(C, D);
    cert.checks.c_le_minus_one = c.sign() < 0 && (c + Scalar(1)).sign() <= 0;
    if (!cert.checks.c_le_minus_one) return invalid(std::move(cert), "C.(K - sL) <= -1");

    const Rational inv_n(1, cert.n);
    cert.t0 = TowerScalar::make(Scalar(-c * Scalar(inv_n)), Scalar(inv_n), c * c - Scalar(1));
    cert.checks.t0_positive = (cert.t0 - TowerScalar(Scalar(inv_n))).sign() >= 0;

    const TowerDivisor Ct = convert<TowerScalar>(C);
    const TowerDivisor Dt = convert<TowerScalar>(D);
    cert.alpha = cert.t0 * Ct - Dt;
    cert.checks.alpha_sq_zero = intersect(cert.alpha, cert.alpha).is_zero();

    // alpha.h = [t0 C.L + sqrt(Delta_n/4)] - delta * sum_i (1 + t0 C.E_i)
    const Scalar root = s * Scalar(ctx.A_sq) - Scalar(ctx.AK);
    const TowerScalar slack = cert.t0 * TowerScalar(cl) + TowerScalar(root);
    std::vector<TowerScalar> coef;
    Rational max_coef(0);
    for (int i = 1; i <= model->r(); ++i) {
        const Scalar m = intersect(C, exceptional(model, i));
        coef.push_back(TowerScalar(Scalar(1)) + cert.t0 * TowerScalar(m));
        max_coef = std::max(max_coef, upper_bound(abs(coef.back())));
    }
    if (slack.sign() <= 0) return invalid(std::move(cert), "t0 C.L + sqrt(Delta_n/4) > 0");
    cert.delta = choose_delta({{lower_bound(slack), max_coef}}, model->r());

    cert.alpha_dot_h = alpha_dot_h(cert, cert.delta);
    TowerScalar closed = slack;
    for (const auto& k : coef) closed -= TowerScalar(Scalar(cert.delta)) * k;
    require((closed - cert.alpha_dot_h).is_zero(), ErrorKind::Internal, "alpha.h closed form mismatch");
    cert.checks.alpha_dot_h_nonneg = cert.alpha_dot_h.sign() >= 0;
    cert.checks.alpha_dot_h_positive = cert.alpha_dot_h.sign() > 0;

    if (!cert.checks.alpha_sq_zero) return invalid(std::move(cert), "alpha_sq_zero");
    if (!cert.checks.t0_positive) return invalid(std::move(cert), "t0 >= 1/n");
    if (!cert.checks.alpha_dot_h_nonneg) return invalid(std::move(cert), "alpha.h >= 0");
    cert.valid = true;
    return cert;
}

RayContainmentCert ray_certificate(const ModelPtr& model, const NegativeCurveRecord& curve)
{
    const ThresholdContext ctx = ThresholdContext::from_model(*model);
    const ConditionReport cond = check_curve_conditions(ctx, curve.negativity(), curve.genus_int());
    if (!cond.satisfied) {
        RayContainmentCert cert;
        cert.curve = curve;
        cert.n = curve.negativity();
        cert.p = curve.genus_int();
        cert.delta_overridden = delta_cap_overridden();
        return invalid(std::move(cert), cond.binding);
    }
    return ray_certificate(model, curve, s_threshold(ctx, curve.negativity()));
}

TowerScalar alpha_dot_h(const RayContainmentCert& cert, const Rational& delta)
{
    const ModelPtr& model = cert.alpha.model();
    return intersect(cert.alpha, convert<TowerScalar>(ample_h(model, delta)));
}

std::vector<Scalar> s_monotonicity(const ThresholdContext& ctx, int nu)
{
    require(nu >= 1, ErrorKind::Precondition, "nu must be at least 1");
    std::vector<Scalar> out;
    for (int n = 1; n <= nu; ++n) {
        out.push_back(s_threshold(ctx, n));
        if (n > 1) {
            require(ctx.delta_quarter(n - 1) < ctx.delta_quarter(n), ErrorKind::Internal,
                    "radicands not increasing at n = " + std::to_string(n));
            require(compare(out[n - 2], out[n - 1]) < 0, ErrorKind::Internal,
                    "s_n not increasing at n = " + std::to_string(n));
        }
    }
    return out;
}

KsLhValue k_minus_sl_h_negative(const ModelPtr& model, const Scalar& s, const Rational& delta)
{
    const ThresholdContext ctx = ThresholdContext::from_model(*model);
    const DivisorClass D = canonical(model) - s * polarization(model);
    const Scalar dd = intersect(D, D);
    require(dd.in_base() && sgn(dd.a()) < 0, ErrorKind::Precondition, "s is not a threshold value");
    const Rational inv = -1 / dd.a();
    require(is_integer(inv), ErrorKind::Precondition, "s is not a threshold value");
    KsLhValue out;
    out.n = static_cast<int>(inv.get_num().get_si());
    require(compare(s, s_threshold(ctx, out.n)) == 0, ErrorKind::Precondition, "s is not a threshold value");

    out.direct = intersect(D, ample_h(model, delta));
    out.closed_form = -sqrt_delta_quarter(ctx, out.n) + Scalar(Rational(model->r()) * delta);
    require(compare(out.direct, out.closed_form) == 0, ErrorKind::Internal,
            "(K - sL).h identity mismatch: " + to_string(out.direct) + " vs " + to_string(out.closed_form));
    out.negative = out.direct.sign() < 0;
    return out;
}

DivisorClass positive_side_anchor(const ModelPtr& model, const Scalar& s)
{
    const DivisorClass L = polarization(model);
    const DivisorClass D = canonical(model) - s * L;
    const Scalar dd = intersect(D, D);
    require(dd.sign() < 0, ErrorKind::Precondition, "anchor requires (K - sL)^2 < 0");
    const double sigma = -intersect(L, D).to_double();
    const double m = -dd.to_double();
    const double a2 = model->base().a_sq().get_d();
    // x = L - lambda D: x.D > 0 iff lambda > sigma/m, x^2 > 0 iff lambda < (sigma + sqrt(sigma^2 + A^2 m))/m.
    const double lo = sigma / m;
    const double hi = (sigma + std::sqrt(sigma * sigma + a2 * m)) / m;
    const double mid = 0.5 * (lo + hi);
    double w = 0.25 * (hi - lo);
    for (int attempt = 0; attempt < 60; ++attempt, w *= 0.5) {
        const Rational lambda = simplest_between(from_double(mid - w), from_double(mid + w));
        const DivisorClass x = L - Scalar(lambda) * D;
        if (intersect(x, D).sign() > 0 && in_positive_cone(x) == ConeMembership::Interior) return x;
    }
    fail(ErrorKind::Internal, "no anchor in Pos with positive (K - sL)-degree");
}

MainTheoremReport main_theorem_check(const ModelPtr& model, const CurveList& curves, int nu, int pi,
                                     std::size_t samples, std::uint64_t seed, Execution exec)
{
    const ThresholdContext ctx = ThresholdContext::from_model(*model);
    MainTheoremReport rep;
    rep.seed = seed;
    rep.nu = nu;
    rep.pi = pi;
    rep.samples = samples;
    rep.conditions = check_conditions(ctx, nu, pi);
    if (!rep.conditions.satisfied) fail(ErrorKind::Infeasible, "conditions fail: " + rep.conditions.binding);
    for (const auto& c : curves) {
        const int n = c.negativity();
        const int p = c.genus_int();
        if (n < 1 || n > nu || p < 0 || p > pi)
            fail(ErrorKind::Precondition, "curve " + c.label + " is a (-" + std::to_string(n) + "," +
                                              std::to_string(p) + ")-curve outside nu = " + std::to_string(nu) +
                                              ", pi = " + std::to_string(pi));
    }

    std::vector<Scalar> sn = s_monotonicity(ctx, nu);
    rep.s = sn.back();

    // Certificates, one per curve, each at its own s_n, then lifted to s_nu.
    std::vector<RayContainmentCert> certs(curves.size());
    std::vector<std::string> errors(curves.size());
    run_samples(curves.size(), exec, [&](std::size_t i) {
        try {
            certs[i] = ray_certificate(model, curves[i], sn[curves[i].negativity() - 1]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    rep.certificates = std::move(certs);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const bool lift = compare(sn[curves[i].negativity() - 1], rep.s) <= 0;
        rep.lifted.push_back(lift);
        if (!errors[i].empty()) rep.failures.push_back("certificate " + curves[i].label + ": " + errors[i]);
        else if (!rep.certificates[i].valid)
            rep.failures.push_back("certificate " + curves[i].label + ": " + rep.certificates[i].failure);
        else if (!lift) rep.failures.push_back("certificate " + curves[i].label + ": s_n <= s_nu");
    }

    // Common delta: every certificate and (K - s_n L).h < 0 for all n <= nu.
    rep.delta = delta_cap(model->r());
    for (const auto& c : rep.certificates)
        if (c.valid && c.delta < rep.delta) rep.delta = c.delta;
    std::vector<DeltaConstraint> kh;
    for (int n = 1; n <= nu; ++n) {
        const Rational dq = ctx.delta_quarter(n);
        if (sgn(dq) > 0) kh.push_back({lower_bound(sqrt_delta_quarter(ctx, n)), Rational(1)});
    }
    if (kh.size() == static_cast<std::size_t>(nu)) {
        const Rational d = choose_delta(kh, model->r());
        if (d < rep.delta) rep.delta = d;
    }
    for (const auto& c : rep.certificates)
        if (c.valid && alpha_dot_h(c, rep.delta).sign() < 0)
            rep.failures.push_back("certificate " + c.curve.label + ": alpha.h >= 0 at the common delta");
    rep.k_minus_sl_h_negative = true;
    for (int n = 1; n <= nu; ++n)
        rep.k_minus_sl_h_negative = rep.k_minus_sl_h_negative && k_minus_sl_h_negative(model, sn[n - 1], rep.delta).negative;
    if (!rep.k_minus_sl_h_negative) rep.failures.push_back("(K - s_n L).h < 0 for all n <= nu");

    // Falsification sampling on the (K - sL)-nonnegative side.
    const DivisorClass D = canonical(model) - rep.s * polarization(model);
    const DivisorClass anchor = positive_side_anchor(model, rep.s);
    const auto iso = isotropic_seed(model);
    std::vector<char> tested(samples, 0);
    std::vector<std::optional<DivisorClass>> bad(samples);
    run_samples(samples, exec, [&](std::size_t i) {
        Rng rng = sample_rng(seed, i);
        DivisorClass gamma = Scalar(uniform_int(rng, 0, 10)) * anchor;
        RationalVector pos;
        if (iso) {
            auto b = random_boundary_element(model, *iso, rng);
            pos = b ? *b : random_interior_element(model, rng);
        } else {
            pos = random_interior_element(model, rng);
        }
        gamma = gamma + Scalar(uniform_int(rng, 0, 2)) * from_rational(model, pos);
        if (!curves.empty()) {
            const int picks = uniform_int(rng, 1, 3);
            for (int k = 0; k < picks; ++k) {
                const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(curves.size()) - 1));
                gamma = gamma + Scalar(uniform_int(rng, 0, 10)) * curves[j].cls;
            }
        }
        if (gamma.is_zero() || intersect(gamma, D).sign() < 0) return;
        tested[i] = 1;
        if (in_positive_cone(gamma) == ConeMembership::Outside) bad[i] = gamma;
    });
    for (std::size_t i = 0; i < samples; ++i) {
        rep.tested += tested[i];
        if (bad[i]) rep.counterexamples.push_back({i, *bad[i]});
    }
    return rep;
}

}  // namespace necone
