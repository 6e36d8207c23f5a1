#include "support.hpp"

#include <gtest/gtest.h>

using namespace necone;
using namespace necone::test;

TEST(Segre, Bounds)
{
    const SegreBounds one = segre_bounds(1);
    EXPECT_EQ(one.status, SegreStatus::Bounded);
    EXPECT_EQ(one.nu, 1);
    EXPECT_EQ(one.pi, 0);
    const SegreBounds two = segre_bounds(2);
    EXPECT_EQ(two.nu, 2);
    EXPECT_EQ(two.pi, 1);
    EXPECT_EQ(segre_bounds(0).status, SegreStatus::ExceptionalOnly);
    EXPECT_EQ(segre_bounds(-1).status, SegreStatus::ExceptionalOnly);
    for (int chi = 1; chi < 20; ++chi) EXPECT_EQ(segre_bounds(chi).pi, segre_bounds(chi).nu - 1);
}

TEST(Segre, CurveChain)
{
    EXPECT_TRUE(curve_bound_check(-1, 0, 1));
    EXPECT_TRUE(curve_bound_check(-2, 0, 2));
    EXPECT_FALSE(curve_bound_check(-1, 1, 1));
    EXPECT_FALSE(curve_bound_check(-2, 0, 1));
    const ModelPtr m = p2(3);
    EXPECT_TRUE(curve_bound_check(exceptional_curves(m)[0], 1));
}

TEST(Segre, Speciality)
{
    const ModelPtr m = p2(3);
    LinearSystemRecord rec;
    rec.label = "E1";
    rec.cls = exceptional(m, 1);
    rec.known_dim = Rational(0);
    EXPECT_EQ(speciality(LinearSystemRecord::create(rec)), Speciality::NonSpecial);
    rec.known_dim.reset();
    EXPECT_EQ(speciality(LinearSystemRecord::create(rec)), Speciality::Undetermined);
    rec.known_dim = Rational(0);
    rec.h2_zero_assumed = false;
    EXPECT_EQ(speciality(LinearSystemRecord::create(rec)), Speciality::Undetermined);

    const SurfaceInput en = load(fixture("enriques.json"));
    ASSERT_EQ(en.systems.size(), 1u);
    EXPECT_EQ(speciality(en.systems[0]), Speciality::Special);

    LinearSystemRecord bad;
    bad.cls = cls(m, {1, -1, 0, 0});
    bad.exceptional_support = true;
    EXPECT_THROW(LinearSystemRecord::create(bad), Error);
}

TEST(Segre, Pencils)
{
    const PencilReport en = pencil_counterexample(1, 1, 0, Rational(0), Rational(0));
    EXPECT_EQ(en.verdict, PencilVerdict::SegreFails);
    EXPECT_FALSE(en.corollary_holds);
    ASSERT_TRUE(en.pg_zero_failure.has_value());
    EXPECT_TRUE(*en.pg_zero_failure);
    EXPECT_EQ(pencil_counterexample(1, 0, 0).verdict, PencilVerdict::Consistent);
    EXPECT_EQ(pencil_counterexample(0, 1, 0).verdict, PencilVerdict::SegreFails);
    EXPECT_FALSE(pencil_counterexample(0, 1, 0).corollary_holds);
    for (int chi = 1; chi < 15; ++chi) EXPECT_EQ(pencil_counterexample(chi, 0, chi - 1).verdict, PencilVerdict::Consistent);
    EXPECT_THROW(pencil_counterexample(1, 0, -1), Error);
}

TEST(Segre, K3Kinds)
{
    EXPECT_EQ(classify_k3_curve(-1, 0, -1), K3Kind::KindI);
    EXPECT_EQ(classify_k3_curve(-2, 0, 0), K3Kind::KindII);
    EXPECT_EQ(classify_k3_curve(-1, 1, 1), K3Kind::KindIII);
    EXPECT_EQ(classify_k3_curve(-3, 0, 1), K3Kind::Violates);
    EXPECT_THROW(classify_k3_curve(-1, 0, 0), Error);
}

TEST(Segre, K3TableFromAdjunction)
{
    // every (C^2, p) allowed by the chain for chi = 2, with C.K forced by adjunction
    std::vector<std::tuple<int, int, int>> rows;
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= 6; ++p) {
            if (!curve_bound_check(-n, p, 2)) continue;
            const int ck = 2 * p - 2 + n;
            const K3Kind k = classify_k3_curve(-n, p, ck);
            EXPECT_NE(k, K3Kind::Violates) << n << "," << p;
            rows.emplace_back(-n, p, ck);
        }
    const std::vector<std::tuple<int, int, int>> table{{-1, 0, -1}, {-1, 1, 1}, {-2, 0, 0}};
    EXPECT_EQ(rows, table);

    const ModelPtr m = k3(3);
    const NegativeCurveRecord e = exceptional_curves(m)[0];
    EXPECT_EQ(classify_k3_curve(e, intersect(e.cls, canonical(m)).a()), K3Kind::KindI);
    const NegativeCurveRecord c = NegativeCurveRecord::create(cls(m, {1, -1, -1, -1}), false);
    EXPECT_EQ(c.self_int, -1);
    EXPECT_EQ(c.genus, 2);
    EXPECT_EQ(classify_k3_curve(c, intersect(c.cls, canonical(m)).a()), K3Kind::Violates);
    EXPECT_THROW(classify_k3_curve(exceptional_curves(p2(2))[0], -1), Error);
}

TEST(Segre, Nagata)
{
    EXPECT_FALSE(nagata_checks(6, std::vector<Rational>(10, Rational(2)), NagataVariant::Nagata));
    EXPECT_TRUE(nagata_checks(4, {1, 1, 1, 1}, NagataVariant::Strong));
    EXPECT_TRUE(nagata_checks(5, {5}, NagataVariant::Nagata));
    EXPECT_TRUE(nagata_checks(5, {5, 1}, NagataVariant::Nagata));
    EXPECT_FALSE(nagata_checks(5, {5, 5}, NagataVariant::Nagata));
    for (const Rational& t : {q(1, 3), Rational(2), Rational(7)}) {
        EXPECT_EQ(nagata_checks(6 * t, std::vector<Rational>(10, 2 * t), NagataVariant::Nagata), false);
        EXPECT_EQ(nagata_checks(4 * t, {t, t, t, t}, NagataVariant::Strong), true);
        EXPECT_EQ(nagata_checks(7 * t, {3 * t, 3 * t, 3 * t, 3 * t, 3 * t, 3 * t}, NagataVariant::Nagata),
                  nagata_checks(7, {3, 3, 3, 3, 3, 3}, NagataVariant::Nagata));
    }
}

TEST(Segre, AnticanonicalNegativity)
{
    EXPECT_EQ(negativity_bound_anticanonical({}), -2);
    EXPECT_EQ(negativity_bound_anticanonical({-5, -3}), -5);
    EXPECT_EQ(negativity_bound_anticanonical({-1}), -2);
}
