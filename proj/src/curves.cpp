#include "necone/curves.hpp"

namespace necone {

NegativeCurveRecord NegativeCurveRecord::create(DivisorClass cls, bool is_exceptional, std::string label,
                                                std::optional<Rational> declared_self_int,
                                                std::optional<Rational> declared_genus)
{
    const std::string who = label.empty() ? std::string("curve") : "curve " + label;
    for (const auto& c : cls.coords())
        require(c.in_base() && is_integer(c.a()), ErrorKind::Model, who + ": class must have integer coordinates");
    const Scalar sq = intersect(cls, cls);
    const Rational self_int = sq.a();
    require(self_int <= -1, ErrorKind::Model,
            who + ": self-intersection " + to_string(self_int) + " is not negative");
    if (declared_self_int && *declared_self_int != self_int)
        fail(ErrorKind::Model, who + ": declared self_int " + to_string(*declared_self_int) + " but C^2 = " +
                                   to_string(self_int));
    const Rational genus = arithmetic_genus(cls);
    require(sgn(genus) >= 0, ErrorKind::Model, who + ": arithmetic genus " + to_string(genus) + " is negative");
    if (declared_genus && *declared_genus != genus)
        fail(ErrorKind::Model,
             who + ": declared genus " + to_string(*declared_genus) + " but p_a = " + to_string(genus));
    if (is_exceptional) {
        for (std::size_t i = 0; i < cls.model()->base_rank(); ++i)
            require(cls[i].is_zero(), ErrorKind::Model, who + ": exceptional curve with nonzero pullback part");
    }
    NegativeCurveRecord rec;
    rec.label = std::move(label);
    rec.cls = std::move(cls);
    rec.self_int = self_int;
    rec.genus = genus;
    rec.is_exceptional = is_exceptional;
    return rec;
}

int NegativeCurveRecord::negativity() const { return static_cast<int>(Rational(-self_int).get_num().get_si()); }

int NegativeCurveRecord::genus_int() const { return static_cast<int>(genus.get_num().get_si()); }

CurveList exceptional_curves(const ModelPtr& model)
{
    CurveList out;
    for (int i = 1; i <= model->r(); ++i)
        out.push_back(NegativeCurveRecord::create(exceptional(model, i), true, "E" + std::to_string(i)));
    return out;
}

CurveList p2_line_curves(const ModelPtr& model)
{
    require(model->base().surface_class() == SurfaceClass::P2 && model->base_rank() == 1, ErrorKind::Precondition,
            "line family requires Y = P2");
    CurveList out;
    const DivisorClass h = pullback(model, {Rational(1)});
    for (int i = 1; i <= model->r(); ++i)
        for (int j = i + 1; j <= model->r(); ++j)
            out.push_back(NegativeCurveRecord::create(h - exceptional(model, i) - exceptional(model, j), false,
                                                      "H-E" + std::to_string(i) + "-E" + std::to_string(j)));
    return out;
}

}  // namespace necone
