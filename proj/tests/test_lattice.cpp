#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace necone;
using namespace necone::test;

TEST(Lattice, BlowupInvariants)
{
    for (int r : {0, 1, 2, 5, 10, 12, 17}) {
        const ModelPtr m = p2(r);
        const DivisorClass K = canonical(m), L = polarization(m);
        EXPECT_EQ(intersect(K, K), Scalar(9 - r));
        EXPECT_EQ(intersect(L, L), Scalar(1));
        EXPECT_EQ(intersect(K, L), Scalar(-3));
    }
    const ModelPtr k = k3(19);
    EXPECT_EQ(intersect(canonical(k), canonical(k)), Scalar(-19));
    EXPECT_EQ(intersect(polarization(k), polarization(k)), Scalar(2));
}

TEST(Lattice, IntersectExamples)
{
    const ModelPtr m = p2(10);
    EXPECT_EQ(intersect(canonical(m), canonical(m)), Scalar(-1));
    EXPECT_EQ(intersect(exceptional(m, 1), exceptional(m, 2)), Scalar(0));
    EXPECT_EQ(intersect(polarization(m), exceptional(m, 3)), Scalar(0));
    EXPECT_EQ(intersect(exceptional(m, 3), exceptional(m, 3)), Scalar(-1));
}

TEST(Lattice, BilinearSymmetric)
{
    const ModelPtr m = p2(4);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-6, 6);
    auto rnd = [&] { return cls(m, {c(rng), c(rng), c(rng), c(rng), c(rng)}); };
    for (int i = 0; i < 300; ++i) {
        const DivisorClass x = rnd(), y = rnd(), z = rnd();
        const Scalar a(q(c(rng), 3));
        EXPECT_EQ(intersect(x, y), intersect(y, x));
        EXPECT_EQ(intersect(x + a * y, z), intersect(x, z) + a * intersect(y, z));
    }
}

TEST(Lattice, Builders)
{
    const ModelPtr m = p2(2);
    EXPECT_EQ(canonical(m), cls(m, {-3, 1, 1}));
    const ModelPtr m1 = p2(1);
    EXPECT_EQ(ample_h(m1, q(1, 4)), from_rational(m1, {1, q(-1, 4)}));
    EXPECT_EQ(intersect(polarization(m1), ample_h(m1, q(1, 4))), Scalar(1));
    EXPECT_THROW(exceptional(m, 0), Error);
    EXPECT_THROW(exceptional(m, 3), Error);
    EXPECT_THROW(ample_h(m, 0), Error);
}

TEST(Lattice, ArithmeticGenus)
{
    const ModelPtr m = p2(2);
    EXPECT_EQ(arithmetic_genus(exceptional(m, 1)), 0);
    EXPECT_EQ(arithmetic_genus(cls(m, {1, -1, -1})), 0);
    EXPECT_EQ(arithmetic_genus(cls(m, {3, -1, 0})), 1);
    SurfaceData d;
    d.chi = 0;
    d.kY_sq = 0;
    d.gram_Y = RationalMatrix(2, 2);
    d.gram_Y(0, 1) = d.gram_Y(1, 0) = 1;
    d.k_Y = {Rational(0), Rational(0)};
    d.a_Y = {Rational(1), Rational(1)};
    d.surface_class = SurfaceClass::Abelian;
    const ModelPtr ab = BlowupModel::create(SurfaceModel::create(d), 1);
    EXPECT_EQ(arithmetic_genus(cls(ab, {1, 0, -1})), 1);
    const SurfaceInput en = load(fixture("enriques.json"));
    EXPECT_EQ(arithmetic_genus(en.systems.at(0).cls), 1);
    EXPECT_THROW(arithmetic_genus(from_rational(m, {q(1, 2), 0, 0})), Error);
}

TEST(Lattice, RiemannRoch)
{
    const ModelPtr m = p2(3);
    EXPECT_EQ(riemann_roch_chi(DivisorClass::zero(m)), 1);
    EXPECT_EQ(riemann_roch_chi(exceptional(m, 2)), 1);
    EXPECT_EQ(riemann_roch_chi(cls(m, {1, 0, 0, 0})), 3);
    const SurfaceInput en = load(fixture("enriques.json"));
    EXPECT_EQ(riemann_roch_chi(en.systems.at(0).cls), 0);
    const DimensionEstimate e = virtual_and_expected_dim(en.systems.at(0).cls);
    EXPECT_EQ(e.virtual_dim, -1);
    EXPECT_EQ(e.expected_dim, -1);
    const DimensionEstimate e1 = virtual_and_expected_dim(exceptional(m, 1));
    EXPECT_EQ(e1.virtual_dim, 0);
    EXPECT_EQ(e1.expected_dim, 0);
    const DimensionEstimate e2 = virtual_and_expected_dim(cls(m, {0, 3, 0, 0}));
    EXPECT_EQ(e2.virtual_dim, -3);
    EXPECT_EQ(e2.expected_dim, -1);
}

TEST(Lattice, AdjunctionParity)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-9, 9);
    for (const char* name : {"p2_r12.json", "k3_generic.json", "abelian.json", "enriques.json"}) {
        const SurfaceInput in = load(fixture(name));
        ASSERT_TRUE(in.model->base().parity_checked()) << name;
        for (int i = 0; i < 1000; ++i) {
            RationalVector v;
            for (std::size_t k = 0; k < in.model->rank(); ++k) v.emplace_back(c(rng));
            const DivisorClass x = from_rational(in.model, v);
            const Rational s = (intersect(x, x) + intersect(x, canonical(in.model))).a();
            ASSERT_TRUE(is_integer(s));
            ASSERT_EQ(s.get_num() % 2, 0) << name;
        }
    }
}

TEST(Lattice, ModelValidation)
{
    SurfaceData d;
    d.chi = 1;
    d.kY_sq = 0;
    d.gram_Y = RationalMatrix(2, 2);
    d.gram_Y(0, 1) = 1;
    d.gram_Y(1, 0) = 2;
    d.k_Y = {Rational(0), Rational(0)};
    d.a_Y = {Rational(1), Rational(1)};
    try {
        (void)SurfaceModel::create(d);
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("gram_Y[0][1]"), std::string::npos) << e.what();
    }
    d.gram_Y(1, 0) = 1;
    EXPECT_NO_THROW((void)SurfaceModel::create(d));
    SurfaceData z = d;
    z.gram_Y = RationalMatrix(2, 2);
    EXPECT_THROW((void)SurfaceModel::create(z), Error);
    SurfaceData k = d;
    k.surface_class = SurfaceClass::K3;
    k.k_Y = {Rational(1), Rational(0)};
    EXPECT_THROW((void)SurfaceModel::create(k), Error);
    SurfaceData c = d;
    c.pg = Rational(1);
    c.q_irr = Rational(0);
    EXPECT_THROW((void)SurfaceModel::create(c), Error);
}
