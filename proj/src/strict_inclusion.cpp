#include "necone/strict_inclusion.hpp"

#include "necone/thresholds.hpp"

#include <algorithm>

namespace necone {

namespace {

struct Coeffs {
    Rational x, y, z, r;
};

Coeffs coeffs(const BlowupModel& model)
{
    return {model.base().a_dot_k(), model.base().a_sq(), model.base().kY_sq() + 1, Rational(model.r())};
}

// Delta_t, g and Q = g^2 - Delta_t as functions of s.
Scalar poly_f(const Coeffs& c, const Scalar& s)
{
    return Scalar(c.y) * s * s - Scalar(2 * c.x) * s + Scalar(c.z - c.r);
}
Scalar poly_g(const Coeffs& c, const Scalar& s) { return Scalar(c.r - c.z) + Scalar(c.x) * s; }
Scalar poly_q(const Coeffs& c, const Scalar& s)
{
    const Rational w = c.r - c.z;
    return Scalar(c.x * c.x - c.y) * s * s + Scalar(2 * c.x * (w + 1)) * s + Scalar(w * (w + 1));
}

StrictInclusionWitness invalid(StrictInclusionWitness w, std::string failure)
{
    w.valid = false;
    w.failure = std::move(failure);
    return w;
}

}  // namespace

std::vector<std::string> ConditionSets::names() const
{
    std::vector<std::string> out;
    if (A) out.emplace_back("A");
    if (B) out.emplace_back("B");
    if (C) out.emplace_back("C");
    if (D) out.emplace_back("D");
    return out;
}

ConditionSets condition_sets(const BlowupModel& model)
{
    const Rational k2 = model.base().kY_sq();
    const Rational ak = model.base().a_dot_k();
    const Rational a2 = model.base().a_sq();
    const Rational r(model.r());
    const Rational lower = k2 + 1 - ak * ak / a2;
    ConditionSets out;
    out.A = r <= lower && sgn(ak) > 0 && a2 < ak * ak;
    out.B = r > lower && r <= k2 + 1 && sgn(ak) > 0;
    out.C = sgn(r) > 0 && sgn(k2) < 0;
    out.D = r > k2 + 1 && sgn(k2) >= 0;
    return out;
}

bool SInterval::contains(const Scalar& s) const
{
    if (lo) {
        const int c = compare(s, *lo);
        if (c < 0 || (c == 0 && !lo_closed)) return false;
    }
    if (hi) {
        const int c = compare(s, *hi);
        if (c > 0 || (c == 0 && !hi_closed)) return false;
    }
    return true;
}

Rational rational_between(const Scalar& a, const Scalar& b)
{
    require(compare(a, b) < 0, ErrorKind::Internal, "rational_between: empty interval");
    Rational width = abs(upper_bound(b) - lower_bound(a)) / 4 + Rational(1, 1 << 20);
    for (;;) {
        const RationalBracket ba = bracket(a, width);
        const RationalBracket bb = bracket(b, width);
        if (ba.hi < bb.lo) {
            Rational q = simplest_between(ba.hi, bb.lo);
            if (compare(Scalar(q), a) > 0 && compare(Scalar(q), b) < 0) return q;
        } else if (ba.hi == bb.lo && compare(Scalar(ba.hi), a) > 0 && compare(Scalar(ba.hi), b) < 0) {
            return ba.hi;
        }
        width /= 16;
    }
}

SSystem solve_s_system(const BlowupModel& model)
{
    const Coeffs c = coeffs(model);
    SSystem out;
    const Rational disc_quarter = c.x * c.x - c.y * (c.z - c.r);  // Delta_s / 4
    if (sgn(disc_quarter) <= 0) {
        out.system = 1;
        out.base = Scalar(c.x / c.y);
    } else {
        out.system = 2;
        out.base = (Scalar(c.x) + Scalar::root_of(disc_quarter)) / Scalar(c.y);
    }
    const bool base_closed = out.system == 2;
    auto in_base = [&](const Scalar& s) {
        const int cmp = compare(s, out.base);
        return cmp > 0 || (cmp == 0 && base_closed);
    };
    auto feasible = [&](const Scalar& s) {
        // Evaluate at s in its own field; g and Q have rational coefficients.
        return in_base(s) && poly_f(c, s).sign() >= 0 && poly_g(c, s).sign() > 0 && poly_q(c, s).sign() > 0;
    };

    std::vector<Scalar> pts{out.base};
    if (sgn(c.x) != 0) pts.emplace_back((c.z - c.r) / c.x);
    const Rational w = c.r - c.z;
    const Rational qa = c.x * c.x - c.y;
    const Rational qb = 2 * c.x * (w + 1);
    const Rational qc = w * (w + 1);
    if (sgn(qa) != 0) {
        const Rational dq = qb * qb / 4 - qa * qc;
        if (sgn(dq) >= 0) {
            const Scalar root = Scalar::root_of(dq);
            pts.push_back((Scalar(-qb / 2) - root) / Scalar(qa));
            pts.push_back((Scalar(-qb / 2) + root) / Scalar(qa));
        }
    } else if (sgn(qb) != 0) {
        pts.emplace_back(-qc / qb);
    }
    std::sort(pts.begin(), pts.end(), [](const Scalar& a, const Scalar& b) { return compare(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end(), [](const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }),
              pts.end());
    out.critical = pts;

    // Pieces: gap before pts[0], pts[0], gap, pts[1], ..., gap after the last point.
    struct Piece {
        bool point;
        std::size_t idx;  // point index, or index of the point to the right of the gap
        bool ok;
        Rational sample;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i <= pts.size(); ++i) {
        Rational q;
        if (i == 0) q = floor_rational(lower_bound(pts.front())) - 1;
        else if (i == pts.size()) q = ceil_rational(upper_bound(pts.back())) + 1;
        else q = rational_between(pts[i - 1], pts[i]);
        pieces.push_back({false, i, feasible(Scalar(q)), q});
        if (i < pts.size()) pieces.push_back({true, i, feasible(pts[i]), Rational(0)});
    }

    for (std::size_t k = 0; k < pieces.size();) {
        if (!pieces[k].ok) {
            ++k;
            continue;
        }
        std::size_t e = k;
        while (e + 1 < pieces.size() && pieces[e + 1].ok) ++e;
        SInterval iv;
        const Piece& first = pieces[k];
        const Piece& last = pieces[e];
        if (first.point) {
            iv.lo = pts[first.idx];
            iv.lo_closed = true;
        } else if (first.idx > 0) {
            iv.lo = pts[first.idx - 1];
        }
        if (last.point) {
            iv.hi = pts[last.idx];
            iv.hi_closed = true;
        } else if (last.idx < pts.size()) {
            iv.hi = pts[last.idx];
        }
        for (std::size_t j = k; j <= e; ++j)
            if (!pieces[j].point) {
                iv.interior = pieces[j].sample;
                iv.has_interior = true;
                break;
            }
        if (!iv.has_interior && iv.lo && iv.lo->in_base()) {
            iv.interior = iv.lo->a();
            iv.has_interior = true;
        }
        out.intervals.push_back(std::move(iv));
        k = e + 1;
    }
    return out;
}

std::string to_string(Construction c) { return c == Construction::FromS ? "from_s" : "uniruled"; }

StrictInclusionWitness alpha_from_s(const ModelPtr& model, const Scalar& s, int exceptional_index)
{
    require(exceptional_index >= 1 && exceptional_index <= model->r(), ErrorKind::Precondition,
            "exceptional index out of range");
    StrictInclusionWitness w;
    w.construction = Construction::FromS;
    w.curve_index = exceptional_index;
    w.s = s;
    const DivisorClass L = polarization(model);
    const DivisorClass K = canonical(model);
    const DivisorClass C = exceptional(model, exceptional_index);
    const DivisorClass D = K - s * L;

    const Scalar cd = intersect(C, D);
    const Scalar delta_t = cd * cd + intersect(D, D);
    if (delta_t.sign() < 0) return invalid(std::move(w), "Delta_t >= 0");
    const auto root = delta_t.in_base() ? std::optional<Scalar>(Scalar::root_of(delta_t.a())) : scalar_sqrt(delta_t);
    require(root.has_value(), ErrorKind::Precondition,
            "sqrt(Delta_t) leaves the field of s; choose a rational s");
    const Scalar t = Scalar(1) + *root;
    w.t = t;
    w.alpha = t * C - D;

    // alpha.h = (s A^2 - A.K_Y) + delta (t - r) for h = L - delta sum E_j.
    const Scalar slack = intersect(w.alpha, L);
    const Scalar coef = t - Scalar(model->r());
    if (slack.sign() > 0) w.delta = choose_delta({{lower_bound(slack), upper_bound(abs(coef))}}, model->r());
    else w.delta = delta_cap(model->r());
    w.alpha_dot_h = intersect(w.alpha, ample_h(model, w.delta));
    require(w.alpha_dot_h == slack + Scalar(w.delta) * coef, ErrorKind::Internal, "alpha.h closed form mismatch");
    w.alpha_dot_k = intersect(w.alpha, K);

    w.checks.alpha_sq_zero = intersect(w.alpha, w.alpha).is_zero();
    w.checks.alpha_dot_h_nonneg = w.alpha_dot_h.sign() >= 0 && slack.sign() > 0;
    w.checks.alpha_dot_c_nonpos = intersect(w.alpha, C).sign() <= 0;
    w.checks.alpha_dot_k_pos = w.alpha_dot_k.sign() > 0;
    if (!w.checks.alpha_sq_zero) return invalid(std::move(w), "alpha_sq_zero");
    if (!w.checks.alpha_dot_h_nonneg) return invalid(std::move(w), "alpha.h >= 0");
    if (!w.checks.alpha_dot_c_nonpos) return invalid(std::move(w), "alpha.C <= 0");
    if (!w.checks.alpha_dot_k_pos) return invalid(std::move(w), "alpha.K > 0");
    w.valid = true;
    return w;
}

StrictInclusionWitness uniruled_witness(const ModelPtr& model)
{
    const int r = model->r();
    require(r >= 2, ErrorKind::Precondition, "uniruled witness requires r >= 2");
    StrictInclusionWitness w;
    w.construction = Construction::Uniruled;
    w.curve_index = r;
    const Rational a2 = model->base().a_sq();
    const Rational ak = model->base().a_dot_k();
    const Scalar value = Scalar(ak) + Scalar::root_of(Rational(a2 * (r - 1)));
    if (value.sign() <= 0) {
        w.alpha_dot_k = value;
        return invalid(std::move(w), "inequality not satisfied: A.K_Y + sqrt(A^2(r-1)) > 0");
    }
    const Scalar a = Scalar::root_of(Rational(a2 / (r - 1)));
    const DivisorClass L = polarization(model);
    const DivisorClass K = canonical(model);
    DivisorClass alpha = L;
    for (int i = 1; i < r; ++i) alpha = alpha - a * exceptional(model, i);
    w.alpha = alpha;
    w.delta = choose_delta({{a2, upper_bound(a)}}, r);
    w.alpha_dot_h = intersect(alpha, ample_h(model, w.delta));
    w.alpha_dot_k = intersect(alpha, K);
    require(w.alpha_dot_k == value, ErrorKind::Internal, "alpha.K closed form mismatch");

    const DivisorClass C = exceptional(model, r);
    w.checks.alpha_sq_zero = intersect(alpha, alpha).is_zero();
    w.checks.alpha_dot_h_nonneg = w.alpha_dot_h.sign() > 0;
    w.checks.alpha_dot_c_nonpos = intersect(alpha, C).sign() <= 0;
    w.checks.alpha_dot_k_pos = w.alpha_dot_k.sign() > 0;
    if (!w.checks.alpha_sq_zero) return invalid(std::move(w), "alpha_sq_zero");
    if (!w.checks.alpha_dot_h_nonneg) return invalid(std::move(w), "alpha.h >= 0");
    if (!w.checks.alpha_dot_c_nonpos) return invalid(std::move(w), "alpha.C <= 0");
    w.valid = true;
    return w;
}

StrictInclusionWitness gamma_witness(StrictInclusionWitness w)
{
    require(w.valid, ErrorKind::Precondition, "gamma requires a valid alpha");
    const ModelPtr& model = w.alpha.model();
    const DivisorClass C = exceptional(model, w.curve_index);
    const DivisorClass K = canonical(model);
    const Scalar ak = intersect(w.alpha, K);
    require(ak.sign() > 0, ErrorKind::Precondition, "gamma requires alpha.K > 0");
    require(intersect(C, w.alpha).sign() <= 0, ErrorKind::Precondition, "gamma requires alpha.C <= 0");
    const Scalar ck = intersect(C, K);
    w.lambda = (Scalar(2) + abs(ck)) / ak;
    w.gamma = C + w.lambda * w.alpha;
    w.has_gamma = true;
    w.checks.gamma_sq_neg = intersect(w.gamma, w.gamma).sign() < 0;
    w.checks.gamma_dot_k_pos = intersect(w.gamma, K).sign() > 0;
    if (!w.checks.gamma_sq_neg) return invalid(std::move(w), "gamma^2 < 0");
    if (!w.checks.gamma_dot_k_pos) return invalid(std::move(w), "gamma.K > 0");
    return w;
}

}  // namespace necone
