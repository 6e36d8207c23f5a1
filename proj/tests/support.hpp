#pragma once

#include "necone/io.hpp"

#include <string>

namespace necone::test {

inline ModelPtr p2(int r)
{
    SurfaceData d;
    d.chi = 1;
    d.kY_sq = 9;
    d.gram_Y = RationalMatrix(1, 1);
    d.gram_Y(0, 0) = 1;
    d.k_Y = {Rational(-3)};
    d.a_Y = {Rational(1)};
    d.surface_class = SurfaceClass::P2;
    d.pg = Rational(0);
    d.q_irr = Rational(0);
    return BlowupModel::create(SurfaceModel::create(std::move(d)), r);
}

inline ModelPtr rank_one(SurfaceClass cls, const Rational& a_sq, const Rational& chi, int r)
{
    SurfaceData d;
    d.chi = chi;
    d.kY_sq = 0;
    d.gram_Y = RationalMatrix(1, 1);
    d.gram_Y(0, 0) = a_sq;
    d.k_Y = {Rational(0)};
    d.a_Y = {Rational(1)};
    d.surface_class = cls;
    return BlowupModel::create(SurfaceModel::create(std::move(d)), r);
}

inline ModelPtr k3(int r) { return rank_one(SurfaceClass::K3, 2, 2, r); }
inline ModelPtr abelian(int r) { return rank_one(SurfaceClass::Abelian, 2, 0, r); }

inline std::string fixture(const std::string& name) { return std::string(NECONE_FIXTURE_DIR) + "/" + name; }
inline std::string test_data(const std::string& name) { return std::string(NECONE_TEST_DATA_DIR) + "/" + name; }

inline SurfaceInput load(const std::string& path) { return surface_from_json(read_json_file(path)); }

inline DivisorClass cls(const ModelPtr& m, std::initializer_list<long> c)
{
    RationalVector v;
    for (long x : c) v.emplace_back(x);
    return from_rational(m, v);
}

inline Rational q(long n, long d = 1)
{
    Rational x{Integer(n), Integer(d)};
    x.canonicalize();
    return x;
}

inline Scalar sqrt_of(const Rational& x) { return Scalar::root_of(x); }

inline CurveList standard_curves(const ModelPtr& m)
{
    CurveList cl = exceptional_curves(m);
    for (auto& c : p2_line_curves(m)) cl.push_back(c);
    return cl;
}

}  // namespace necone::test
