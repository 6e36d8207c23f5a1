#include "necone/segre.hpp"

#include <algorithm>

namespace necone {

LinearSystemRecord LinearSystemRecord::create(LinearSystemRecord rec)
{
    if (rec.exceptional_support) {
        const auto& model = rec.cls.model();
        for (std::size_t i = 0; i < model->base_rank(); ++i)
            require(rec.cls[i].is_zero(), ErrorKind::Model,
                    "system " + rec.label + ": exceptional support with nonzero pullback coordinate " +
                        std::to_string(i));
    }
    return rec;
}

std::string to_string(Speciality s)
{
    switch (s) {
    case Speciality::Special: return "special";
    case Speciality::NonSpecial: return "non-special";
    case Speciality::Undetermined: return "undetermined";
    }
    return "?";
}

Speciality speciality(const LinearSystemRecord& rec)
{
    if (!rec.h2_zero_assumed || !rec.known_dim) return Speciality::Undetermined;
    const DimensionEstimate est = virtual_and_expected_dim(rec.cls, rec.h2_zero_assumed);
    return *rec.known_dim > est.expected_dim ? Speciality::Special : Speciality::NonSpecial;
}

std::string to_string(SegreStatus s)
{
    return s == SegreStatus::Bounded ? "bounded" : "exceptional-only";
}

SegreBounds segre_bounds(const Rational& chi)
{
    require(is_integer(chi), ErrorKind::Precondition, "chi must be an integer");
    if (sgn(chi) <= 0) return {SegreStatus::ExceptionalOnly, 0, 0};
    const int c = static_cast<int>(chi.get_num().get_si());
    return {SegreStatus::Bounded, c, c - 1};
}

bool curve_bound_check(const Rational& self_int, const Rational& genus, const Rational& chi)
{
    return self_int <= -1 && self_int >= genus - chi && genus - chi >= -chi;
}

bool curve_bound_check(const NegativeCurveRecord& c, const Rational& chi)
{
    return curve_bound_check(c.self_int, c.genus, chi);
}

std::string to_string(PencilVerdict v)
{
    return v == PencilVerdict::Consistent ? "consistent" : "segre-fails";
}

PencilReport pencil_counterexample(const Rational& chi, const Rational& g, const Rational& dim_l,
                                   std::optional<Rational> pg, std::optional<Rational> q_irr)
{
    require(sgn(dim_l) >= 0, ErrorKind::Precondition, "pencil: linear system must be non-empty");
    PencilReport rep;
    rep.verdict = chi != dim_l + g + 1 ? PencilVerdict::SegreFails : PencilVerdict::Consistent;
    rep.corollary_holds = chi >= g + 1;
    if (pg && sgn(*pg) == 0) rep.pg_zero_failure = sgn(g) > 0 || (q_irr && sgn(*q_irr) > 0);
    return rep;
}

std::string to_string(K3Kind k)
{
    switch (k) {
    case K3Kind::KindI: return "I";
    case K3Kind::KindII: return "II";
    case K3Kind::KindIII: return "III";
    case K3Kind::Violates: return "violates";
    }
    return "?";
}

K3Kind classify_k3_curve(const Rational& self_int, const Rational& genus, const Rational& ck)
{
    require(ck == 2 * genus - 2 - self_int, ErrorKind::Precondition,
            "C.K = " + to_string(ck) + " is inconsistent with adjunction (2p - 2 - C^2 = " +
                to_string(Rational(2 * genus - 2 - self_int)) + ")");
    if (self_int == -1 && genus == 0) return K3Kind::KindI;
    if (self_int == -2 && genus == 0) return K3Kind::KindII;
    if (self_int == -1 && genus == 1) return K3Kind::KindIII;
    return K3Kind::Violates;
}

K3Kind classify_k3_curve(const NegativeCurveRecord& c, const Rational& ck)
{
    require(c.cls.model()->base().surface_class() == SurfaceClass::K3, ErrorKind::Precondition,
            "K3 classification requires a K3 model");
    return classify_k3_curve(c.self_int, c.genus, ck);
}

bool nagata_checks(const Rational& deg, const std::vector<Rational>& mults, NagataVariant variant)
{
    require(!mults.empty(), ErrorKind::Precondition, "nagata: at least one point required");
    require(sgn(deg) > 0, ErrorKind::Precondition, "nagata: degree must be positive");
    for (const auto& m : mults) require(sgn(m) >= 0, ErrorKind::Precondition, "nagata: negative multiplicity");
    if (variant == NagataVariant::Nagata) {
        Rational sum;
        for (const auto& m : mults) sum += m;
        return deg * deg * Rational(static_cast<long>(mults.size())) >= sum * sum;
    }
    Rational sq;
    for (const auto& m : mults) sq += m * m;
    return deg * deg >= sq;
}

Rational negativity_bound_anticanonical(const std::vector<Rational>& component_self_ints)
{
    Rational out(-2);
    for (const auto& v : component_self_ints) out = std::min(out, v);
    return out;
}

}  // namespace necone
