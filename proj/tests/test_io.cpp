#include "support.hpp"

#include <gtest/gtest.h>

using namespace necone;
using namespace necone::test;

TEST(Io, FixturesLoad)
{
    const SurfaceInput p = load(fixture("p2_r12.json"));
    EXPECT_EQ(p.model->r(), 12);
    EXPECT_EQ(p.curves.size(), 78u);
    const SurfaceInput e = load(fixture("enriques.json"));
    EXPECT_EQ(e.model->rank(), 12u);
    EXPECT_EQ(e.model->base().surface_class(), SurfaceClass::Enriques);
    EXPECT_EQ(load(fixture("k3_generic.json")).model->r(), 19);
}

TEST(Io, SchemaErrorsNameThePath)
{
    Json j = read_json_file(fixture("p2_r12.json"));
    j["gram_Y"] = Json::array({Json::array({"1", "x"})});
    try {
        (void)surface_from_json(j);
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Model);
    }
    Json g = read_json_file(fixture("enriques.json"));
    g["gram_Y"][0][1] = 2;
    try {
        (void)surface_from_json(g);
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("gram_Y[0][1]"), std::string::npos) << e.what();
    }
    Json c = read_json_file(fixture("k3_generic.json"));
    c["curve_families"] = Json::array({"p2_lines"});
    EXPECT_THROW((void)surface_from_json(c), Error);
    Json m = read_json_file(fixture("p2_r12.json"));
    m.erase("kY_sq");
    EXPECT_THROW((void)surface_from_json(m), Error);
}

TEST(Io, DivisorRoundTrip)
{
    const ModelPtr m = p2(3);
    const DivisorClass x = canonical(m) - make_scalar(-3, 1, 10) * polarization(m);
    EXPECT_EQ(divisor_from_json(m, to_json(x), "x"), x);
    EXPECT_THROW(divisor_from_json(m, Json::array({"1", "2"}), "x"), Error);
}

TEST(Io, RayCertificatesVerify)
{
    const ModelPtr m = p2(12);
    std::vector<Json> all;
    for (const auto& c : standard_curves(m)) {
        const Json j = certificate_json(ray_certificate(m, c));
        const Json back = Json::parse(j.dump());
        const VerifyResult v = verify_certificate(back);
        EXPECT_TRUE(v.ok) << c.label << ": " << v.violation;
        EXPECT_TRUE(v.certified);
        all.push_back(back);
    }
    const VerifyResult b = verify_certificate(bundle_json(all));
    EXPECT_TRUE(b.ok);
    EXPECT_EQ(b.checked, 78u);
}

TEST(Io, TamperedAlphaDetected)
{
    const ModelPtr m = p2(12);
    for (std::size_t i : {0u, 20u, 77u}) {
        Json j = certificate_json(ray_certificate(m, standard_curves(m)[i]));
        Json& coord = j["alpha"][1]["a"]["a"];
        coord = to_string(Rational(parse_rational(coord.get<std::string>()) + 1));
        const VerifyResult v = verify_certificate(j);
        EXPECT_FALSE(v.ok);
        EXPECT_EQ(v.violation, "alpha_sq_zero violated");
    }
}

TEST(Io, TamperedFieldsDetected)
{
    const ModelPtr m = p2(12);
    Json j = certificate_json(ray_certificate(m, standard_curves(m)[3]));
    j["delta"] = "-1/5";
    EXPECT_FALSE(verify_certificate(j).ok);
    Json k = certificate_json(ray_certificate(m, standard_curves(m)[3]));
    k["type"] = "mystery";
    EXPECT_THROW(verify_certificate(k), Error);
}

TEST(Io, ZariskiCertificate)
{
    const ModelPtr m = p2(4);
    const CurveList cl = standard_curves(m);
    const ZariskiDecomposition z = zariski_decompose(cls(m, {2, 1, 1, 0, 0}), cl);
    const Json j = certificate_json(z, cl);
    EXPECT_TRUE(verify_certificate(j).ok) << verify_certificate(j).violation;
    Json bad = j;
    bad["coeffs"][0] = "-1";
    EXPECT_FALSE(verify_certificate(bad).ok);
}

TEST(Io, StrictCertificates)
{
    for (int r : {11, 12, 17}) {
        const ModelPtr m = p2(r);
        const StrictInclusionWitness u = gamma_witness(uniruled_witness(m));
        ASSERT_TRUE(u.valid);
        const VerifyResult vu = verify_certificate(Json::parse(certificate_json(u).dump()));
        EXPECT_TRUE(vu.ok) << vu.violation;
        for (const auto& iv : solve_s_system(*m).intervals) {
            if (!iv.has_interior) continue;
            const StrictInclusionWitness w = gamma_witness(alpha_from_s(m, Scalar(iv.interior), 1));
            ASSERT_TRUE(w.valid);
            const VerifyResult vw = verify_certificate(Json::parse(certificate_json(w).dump()));
            EXPECT_TRUE(vw.ok) << vw.violation;
            Json t = certificate_json(w);
            t["alpha"][0]["a"] = "5";
            EXPECT_FALSE(verify_certificate(t).ok);
        }
    }
}
