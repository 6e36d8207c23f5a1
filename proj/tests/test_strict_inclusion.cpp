#include "support.hpp"

#include <gtest/gtest.h>

using namespace necone;
using namespace necone::test;

namespace {

// witness conditions evaluated directly on classes at a rational s
bool grid_feasible(const ModelPtr& m, const Rational& s)
{
    const DivisorClass K = canonical(m), L = polarization(m), E = exceptional(m, 1);
    const DivisorClass D = K - Scalar(s) * L;
    const Rational dt = (intersect(E, D) * intersect(E, D) + intersect(D, D)).a();
    if (sgn(dt) < 0) return false;
    const Scalar t = Scalar(1) + Scalar::root_of(dt);
    const DivisorClass alpha = t * E - D;
    EXPECT_TRUE(intersect(alpha, alpha).is_zero());
    EXPECT_LE(intersect(alpha, E).sign(), 0);
    return intersect(alpha, L).sign() > 0 && intersect(alpha, K).sign() > 0;
}

void compare_with_grid(const ModelPtr& m, const std::string& name)
{
    const SSystem sys = solve_s_system(*m);
    std::size_t feasible = 0;
    for (long k = -800; k <= 2000; ++k) {
        const Rational s = q(k, 100);
        bool in = false;
        for (const auto& iv : sys.intervals) in = in || iv.contains(Scalar(s));
        const bool oracle = grid_feasible(m, s);
        ASSERT_EQ(in, oracle) << name << " s=" << s;
        feasible += oracle ? 1 : 0;
    }
    for (const auto& iv : sys.intervals) {
        if (!iv.has_interior) continue;
        EXPECT_TRUE(grid_feasible(m, iv.interior)) << name;
        for (const auto* e : {&iv.lo, &iv.hi})
            if (*e) {
                const Rational w(1, 1000);
                for (const Rational& d : {Rational(-w), w}) {
                    const auto br = bracket(**e, Rational(1, 100000));
                    const Rational edge = d < 0 ? br.lo : br.hi;
                    const Rational probe = d < 0 ? simplest_between(edge + 2 * d, edge + d)
                                                 : simplest_between(edge + d, edge + 2 * d);
                    EXPECT_EQ(iv.contains(Scalar(probe)), grid_feasible(m, probe)) << name << " near endpoint";
                }
            }
    }
}

ModelPtr general_type_like(int r)
{
    SurfaceData d;
    d.chi = 1;
    d.kY_sq = 9;
    d.gram_Y = RationalMatrix(1, 1);
    d.gram_Y(0, 0) = 1;
    d.k_Y = {Rational(3)};
    d.a_Y = {Rational(1)};
    d.surface_class = SurfaceClass::GeneralType;
    return BlowupModel::create(SurfaceModel::create(std::move(d)), r);
}

}  // namespace

TEST(StrictInclusion, ConditionSets)
{
    EXPECT_EQ(condition_sets(*p2(11)).names(), std::vector<std::string>{"D"});
    EXPECT_FALSE(condition_sets(*p2(10)).any());
    EXPECT_EQ(condition_sets(*abelian(2)).names(), std::vector<std::string>{"D"});
    EXPECT_FALSE(condition_sets(*abelian(1)).D);

    SurfaceData d;
    d.chi = 1;
    d.kY_sq = -1;
    d.gram_Y = RationalMatrix(3, 3);
    d.gram_Y(0, 0) = 1;
    d.gram_Y(1, 1) = d.gram_Y(2, 2) = -1;
    d.k_Y = {Rational(1), Rational(1), Rational(1)};
    d.a_Y = {Rational(1), Rational(0), Rational(0)};
    const ModelPtr m = BlowupModel::create(SurfaceModel::create(d), 1);
    EXPECT_TRUE(condition_sets(*m).C);
    EXPECT_TRUE(condition_sets(*general_type_like(1)).A || condition_sets(*general_type_like(1)).B);
}

TEST(StrictInclusion, GridOracle)
{
    for (int r : {10, 11, 12, 17, 20}) compare_with_grid(p2(r), "P2 r=" + std::to_string(r));
    compare_with_grid(abelian(2), "abelian");
    compare_with_grid(k3(19), "K3");
    compare_with_grid(general_type_like(1), "AK>0 r=1");
    compare_with_grid(general_type_like(3), "AK>0 r=3");
    compare_with_grid(load(fixture("enriques.json")).model, "enriques");
}

TEST(StrictInclusion, Intervals)
{
    const SSystem s10 = solve_s_system(*p2(10));
    for (const auto& iv : s10.intervals) EXPECT_FALSE(iv.has_interior);
    const SSystem s11 = solve_s_system(*p2(11));
    ASSERT_EQ(s11.intervals.size(), 1u);
    EXPECT_EQ(*s11.intervals[0].lo, make_scalar(-3, 1, 10));
    EXPECT_TRUE(s11.intervals[0].lo_closed);
    EXPECT_EQ(*s11.intervals[0].hi, make_scalar(q(3, 4), q(-1, 4), 5));
    EXPECT_FALSE(s11.intervals[0].hi_closed);
    const SSystem g = solve_s_system(*general_type_like(1));
    ASSERT_FALSE(g.intervals.empty());
    EXPECT_FALSE(g.intervals.back().hi.has_value());
}

TEST(StrictInclusion, AlphaFromS)
{
    const ModelPtr m = p2(11);
    const StrictInclusionWitness w = alpha_from_s(m, Scalar(q(1, 6)), 1);
    ASSERT_TRUE(w.valid) << w.failure;
    EXPECT_EQ(*w.t, Scalar(q(7, 6)));
    EXPECT_EQ(w.alpha_dot_k, Scalar(q(1, 3)));
    EXPECT_TRUE(intersect(w.alpha, w.alpha).is_zero());
    EXPECT_EQ(intersect(w.alpha, exceptional(m, 1)), Scalar(1) - *w.t);
    EXPECT_GE(w.alpha_dot_h.sign(), 0);
    EXPECT_EQ(w.alpha_dot_h, intersect(w.alpha, ample_h(m, w.delta)));

    const StrictInclusionWitness low = alpha_from_s(m, Scalar(q(15, 100)), 1);
    EXPECT_FALSE(low.valid);
    EXPECT_EQ(low.failure, "Delta_t >= 0");
    const StrictInclusionWitness high = alpha_from_s(m, Scalar(q(1, 5)), 1);
    EXPECT_FALSE(high.valid);
    EXPECT_EQ(high.failure, "alpha.K > 0");

    const ModelPtr a = abelian(2);
    const SSystem sa = solve_s_system(*a);
    ASSERT_FALSE(sa.intervals.empty());
    const StrictInclusionWitness wa = alpha_from_s(a, Scalar(sa.intervals[0].interior), 1);
    EXPECT_TRUE(wa.valid) << wa.failure;
    for (long k = 0; k < 40; ++k) {
        const StrictInclusionWitness x = alpha_from_s(m, Scalar(q(k, 10)), 1);
        if (x.t) EXPECT_GE((*x.t - Scalar(1)).sign(), 0);
        if (x.t) EXPECT_LE(intersect(x.alpha, exceptional(m, 1)).sign(), 0);
    }
}

TEST(StrictInclusion, Uniruled)
{
    const StrictInclusionWitness w11 = uniruled_witness(p2(11));
    ASSERT_TRUE(w11.valid) << w11.failure;
    EXPECT_EQ(w11.alpha_dot_k, make_scalar(-3, 1, 10));
    EXPECT_TRUE(intersect(w11.alpha, w11.alpha).is_zero());
    EXPECT_TRUE(intersect(w11.alpha, exceptional(w11.alpha.model(), 11)).is_zero());
    const StrictInclusionWitness w10 = uniruled_witness(p2(10));
    EXPECT_FALSE(w10.valid);
    EXPECT_TRUE(w10.alpha_dot_k.is_zero());
    EXPECT_NE(w10.failure.find("inequality not satisfied"), std::string::npos);
    for (int r : {2, 3, 7}) {
        EXPECT_TRUE(uniruled_witness(abelian(r)).valid);
        EXPECT_TRUE(uniruled_witness(general_type_like(r)).valid);
    }
    EXPECT_THROW(uniruled_witness(p2(1)), Error);
}

TEST(StrictInclusion, UniruledMatchesInequality)
{
    for (int r = 2; r < 30; ++r) {
        // A.K_Y = -3 < 0: valid iff A^2 (r - 1) > 9
        EXPECT_EQ(uniruled_witness(p2(r)).valid, r - 1 > 9) << r;
    }
}

TEST(StrictInclusion, Gamma)
{
    const ModelPtr m = p2(11);
    const StrictInclusionWitness g = gamma_witness(uniruled_witness(m));
    ASSERT_TRUE(g.valid) << g.failure;
    EXPECT_EQ(intersect(g.gamma, canonical(m)), Scalar(2));
    EXPECT_EQ(intersect(g.gamma, g.gamma), Scalar(-1));
    EXPECT_EQ(g.gamma, exceptional(m, 11) + g.lambda * g.alpha);
    EXPECT_EQ(g.lambda, Scalar(3) / make_scalar(-3, 1, 10));

    const StrictInclusionWitness f = gamma_witness(alpha_from_s(m, Scalar(q(1, 6)), 1));
    ASSERT_TRUE(f.valid);
    EXPECT_LT(compare(intersect(f.gamma, f.gamma), Scalar(-1)), 0);
    EXPECT_THROW(gamma_witness(uniruled_witness(p2(10))), Error);
}

TEST(StrictInclusion, BothRoutesStartAtEleven)
{
    for (int r = 2; r <= 14; ++r) {
        const ModelPtr m = p2(r);
        const bool uni = uniruled_witness(m).valid;
        bool from_s = false;
        for (const auto& iv : solve_s_system(*m).intervals)
            if (iv.has_interior) from_s = from_s || alpha_from_s(m, Scalar(iv.interior), 1).valid;
        EXPECT_EQ(uni, r >= 11) << r;
        EXPECT_EQ(from_s, r >= 11) << r;
        EXPECT_EQ(condition_sets(*m).D, r >= 11) << r;
    }
}
