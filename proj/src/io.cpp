#include "necone/io.hpp"

#include "necone/cone.hpp"

#include <fstream>
#include <sstream>

namespace necone {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) { fail(ErrorKind::Model, path + ": " + msg); }

const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) bad(path.empty() ? "<root>" : path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing required field");
    return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int int_from_json(const Json& j, const std::string& path)
{
    const Rational v = rational_from_json(j, path);
    if (!is_integer(v) || !v.get_num().fits_sint_p()) bad(path, "expected an integer, got " + to_string(v));
    return static_cast<int>(v.get_num().get_si());
}

bool bool_from_json(const Json& j, const std::string& path)
{
    if (!j.is_boolean()) bad(path, "expected true or false");
    return j.get<bool>();
}

RationalVector rational_vector(const Json& j, const std::string& path)
{
    if (!j.is_array()) bad(path, "expected an array");
    RationalVector out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], idx(path, i)));
    return out;
}

std::optional<Rational> optional_rational(const Json& j, const std::string& key, const std::string& path)
{
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return rational_from_json(*it, sub(path, key));
}

// Evaluates a check; arithmetic errors inside it count as a violation.
template <class F>
bool holds(F&& f)
{
    try {
        return f();
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const Scalar& x) { return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", to_string(x.d())}}; }

Json to_json(const TowerScalar& x) { return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", to_json(x.d())}}; }

Json to_json(const DivisorClass& x)
{
    Json out = Json::array();
    for (const auto& c : x.coords()) out.push_back(to_json(c));
    return out;
}

Json to_json(const TowerDivisor& x)
{
    Json out = Json::array();
    for (const auto& c : x.coords()) out.push_back(to_json(c));
    return out;
}

Rational rational_from_json(const Json& j, const std::string& path)
{
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
        if (j.is_number_float()) return parse_rational(j.dump());
    } catch (const Error& e) {
        bad(path, e.what());
    }
    bad(path, "expected a rational, got " + j.dump());
}

Scalar scalar_from_json(const Json& j, const std::string& path)
{
    if (!j.is_object()) return Scalar(rational_from_json(j, path));
    const Rational a = rational_from_json(field(j, "a", path), sub(path, "a"));
    const Rational b = j.contains("b") ? rational_from_json(j["b"], sub(path, "b")) : Rational(0);
    const Rational d = j.contains("d") ? rational_from_json(j["d"], sub(path, "d")) : Rational(0);
    try {
        return make_scalar(a, b, d);
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

TowerScalar tower_from_json(const Json& j, const std::string& path)
{
    if (!j.is_object() || !field(j, "a", path).is_object()) return TowerScalar(scalar_from_json(j, path));
    const Scalar a = scalar_from_json(j["a"], sub(path, "a"));
    const Scalar b = j.contains("b") ? scalar_from_json(j["b"], sub(path, "b")) : Scalar(0);
    const Scalar d = j.contains("d") ? scalar_from_json(j["d"], sub(path, "d")) : Scalar(0);
    try {
        return TowerScalar::make(a, b, d);
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

DivisorClass divisor_from_json(const ModelPtr& model, const Json& j, const std::string& path)
{
    if (!j.is_array()) bad(path, "expected an array of coordinates");
    if (j.size() != model->rank())
        bad(path, "expected " + std::to_string(model->rank()) + " coordinates, got " + std::to_string(j.size()));
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(scalar_from_json(j[i], idx(path, i)));
    for (const auto& v : c)
        if (!Scalar::compatible(v, c.front()) || !Scalar::compatible(v, c.back()))
            bad(path, "coordinates lie in different quadratic fields");
    return DivisorClass(model, std::move(c));
}

TowerDivisor tower_divisor_from_json(const ModelPtr& model, const Json& j, const std::string& path)
{
    if (!j.is_array()) bad(path, "expected an array of coordinates");
    if (j.size() != model->rank())
        bad(path, "expected " + std::to_string(model->rank()) + " coordinates, got " + std::to_string(j.size()));
    std::vector<TowerScalar> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(tower_from_json(j[i], idx(path, i)));
    return TowerDivisor(model, std::move(c));
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Model, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::Model, path + ": malformed JSON (" + e.what() + ")");
    }
}

SurfaceInput surface_from_json(const Json& j)
{
    if (!j.is_object()) bad("<root>", "expected an object");
    SurfaceData d;
    d.chi = rational_from_json(field(j, "chi", ""), "chi");
    d.kY_sq = rational_from_json(field(j, "kY_sq", ""), "kY_sq");
    const Json& g = field(j, "gram_Y", "");
    if (!g.is_array() || g.empty()) bad("gram_Y", "expected a non-empty square array");
    const std::size_t m = g.size();
    d.gram_Y = RationalMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::string row = idx("gram_Y", i);
        if (!g[i].is_array() || g[i].size() != m) bad(row, "expected " + std::to_string(m) + " entries");
        for (std::size_t k = 0; k < m; ++k) d.gram_Y(i, k) = rational_from_json(g[i][k], idx(row, k));
    }
    d.k_Y = rational_vector(field(j, "k_Y", ""), "k_Y");
    d.a_Y = rational_vector(field(j, "a_Y", ""), "a_Y");
    const Json& cls = field(j, "class", "");
    if (!cls.is_string()) bad("class", "expected a string");
    d.surface_class = parse_surface_class(cls.get<std::string>());
    d.pg = optional_rational(j, "pg", "");
    d.q_irr = optional_rational(j, "q", "");
    const int r = int_from_json(field(j, "r", ""), "r");
    if (r < 0) bad("r", "number of blown-up points must be non-negative");

    SurfaceInput out;
    out.model = BlowupModel::create(SurfaceModel::create(std::move(d)), r);
    if (j.contains("label")) out.label = j["label"].is_string() ? j["label"].get<std::string>() : "";
    if (j.contains("nu")) out.nu = int_from_json(j["nu"], "nu");
    if (j.contains("pi")) out.pi = int_from_json(j["pi"], "pi");

    if (j.contains("curve_families")) {
        const Json& fam = j["curve_families"];
        if (!fam.is_array()) bad("curve_families", "expected an array");
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const std::string name = fam[i].is_string() ? fam[i].get<std::string>() : "";
            CurveList add;
            if (name == "exceptional") add = exceptional_curves(out.model);
            else if (name == "p2_lines") {
                if (out.model->base().surface_class() != SurfaceClass::P2)
                    bad(idx("curve_families", i), "p2_lines requires class P2");
                add = p2_line_curves(out.model);
            } else {
                bad(idx("curve_families", i), "unknown curve family \"" + name + "\"");
            }
            out.curves.insert(out.curves.end(), add.begin(), add.end());
        }
    }
    if (j.contains("curves")) {
        const Json& cs = j["curves"];
        if (!cs.is_array()) bad("curves", "expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i) out.curves.push_back(curve_from_json(out.model, cs[i], idx("curves", i)));
    }
    if (j.contains("systems")) {
        const Json& ss = j["systems"];
        if (!ss.is_array()) bad("systems", "expected an array");
        for (std::size_t i = 0; i < ss.size(); ++i) {
            const std::string p = idx("systems", i);
            const Json& s = ss[i];
            LinearSystemRecord rec;
            rec.label = s.contains("label") && s["label"].is_string() ? s["label"].get<std::string>() : p;
            rec.cls = divisor_from_json(out.model, field(s, "class", p), sub(p, "class"));
            rec.known_dim = optional_rational(s, "known_dim", p);
            if (s.contains("reduced")) rec.reduced = bool_from_json(s["reduced"], sub(p, "reduced"));
            if (s.contains("exceptional_support"))
                rec.exceptional_support = bool_from_json(s["exceptional_support"], sub(p, "exceptional_support"));
            if (s.contains("h2_zero_assumed"))
                rec.h2_zero_assumed = bool_from_json(s["h2_zero_assumed"], sub(p, "h2_zero_assumed"));
            out.systems.push_back(LinearSystemRecord::create(std::move(rec)));
        }
    }
    return out;
}

Json model_to_json(const BlowupModel& model)
{
    const SurfaceModel& y = model.base();
    Json gram = Json::array();
    for (std::size_t i = 0; i < y.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < y.rank(); ++k) row.push_back(to_json(y.gram()(i, k)));
        gram.push_back(row);
    }
    Json k = Json::array(), a = Json::array();
    for (const auto& v : y.k_Y()) k.push_back(to_json(v));
    for (const auto& v : y.a_Y()) a.push_back(to_json(v));
    Json out{{"chi", to_json(y.chi())}, {"kY_sq", to_json(y.kY_sq())}, {"gram_Y", gram}, {"k_Y", k},
             {"a_Y", a},                {"class", to_string(y.surface_class())}, {"r", model.r()}};
    if (y.data().pg) out["pg"] = to_json(*y.data().pg);
    if (y.data().q_irr) out["q"] = to_json(*y.data().q_irr);
    return out;
}

Json to_json(const NegativeCurveRecord& c)
{
    return Json{{"label", c.label},
                {"class", to_json(c.cls)},
                {"self_int", to_json(c.self_int)},
                {"genus", to_json(c.genus)},
                {"exceptional", c.is_exceptional}};
}

NegativeCurveRecord curve_from_json(const ModelPtr& model, const Json& j, const std::string& path)
{
    if (!j.is_object()) bad(path, "expected an object");
    const DivisorClass cls = divisor_from_json(model, field(j, "class", path), sub(path, "class"));
    const bool exc = j.contains("exceptional") && bool_from_json(j["exceptional"], sub(path, "exceptional"));
    const std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : path;
    try {
        return NegativeCurveRecord::create(cls, exc, label, optional_rational(j, "self_int", path),
                                           optional_rational(j, "genus", path));
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

Json certificate_json(const RayContainmentCert& cert)
{
    const ModelPtr& model = cert.curve.cls.model();
    Json out{{"type", "ray_containment"},
             {"model", model_to_json(*model)},
             {"curve", to_json(cert.curve)},
             {"n", cert.n},
             {"p", cert.p},
             {"valid", cert.valid},
             {"failure", cert.failure},
             {"delta_overridden", cert.delta_overridden}};
    if (cert.alpha.model()) {
        out["s"] = to_json(cert.s);
        out["t0"] = to_json(cert.t0);
        out["alpha"] = to_json(cert.alpha);
        out["delta"] = to_json(cert.delta);
        out["alpha_dot_h"] = to_json(cert.alpha_dot_h);
    }
    out["checks"] = Json{{"s_matches_n", cert.checks.s_matches_n},
                         {"c_le_minus_one", cert.checks.c_le_minus_one},
                         {"alpha_sq_zero", cert.checks.alpha_sq_zero},
                         {"alpha_dot_h_nonneg", cert.checks.alpha_dot_h_nonneg},
                         {"alpha_dot_h_positive", cert.checks.alpha_dot_h_positive},
                         {"t0_positive", cert.checks.t0_positive}};
    return out;
}

Json certificate_json(const ZariskiDecomposition& zd, const CurveList& curves)
{
    Json cs = Json::array();
    for (const auto& c : curves) cs.push_back(to_json(c));
    Json coeffs = Json::array();
    for (const auto& a : zd.coeffs) coeffs.push_back(to_json(a));
    return Json{{"type", "zariski"},
                {"model", model_to_json(*zd.divisor.model())},
                {"curves", cs},
                {"divisor", to_json(zd.divisor)},
                {"positive", to_json(zd.positive)},
                {"coeffs", coeffs},
                {"rounds", zd.rounds}};
}

Json certificate_json(const StrictInclusionWitness& w)
{
    Json out{{"type", "strict_inclusion"},
             {"model", model_to_json(*w.alpha.model())},
             {"construction", to_string(w.construction)},
             {"curve_index", w.curve_index},
             {"alpha", to_json(w.alpha)},
             {"delta", to_json(w.delta)},
             {"alpha_dot_h", to_json(w.alpha_dot_h)},
             {"alpha_dot_k", to_json(w.alpha_dot_k)},
             {"valid", w.valid},
             {"failure", w.failure}};
    if (w.s) out["s"] = to_json(*w.s);
    if (w.t) out["t"] = to_json(*w.t);
    if (w.has_gamma) {
        out["lambda"] = to_json(w.lambda);
        out["gamma"] = to_json(w.gamma);
    }
    return out;
}

Json bundle_json(std::vector<Json> certificates)
{
    return Json{{"type", "bundle"}, {"certificates", std::move(certificates)}};
}

namespace {

VerifyResult violated(std::string name)
{
    VerifyResult r;
    r.ok = false;
    r.violation = std::move(name) + " violated";
    r.checked = 1;
    return r;
}

VerifyResult passed(bool certified = true)
{
    VerifyResult r;
    r.ok = true;
    r.certified = certified;
    r.checked = 1;
    return r;
}

VerifyResult verify_ray(const Json& j)
{
    const ModelPtr model = surface_from_json(field(j, "model", "")).model;
    const NegativeCurveRecord curve = curve_from_json(model, field(j, "curve", ""), "curve");
    const int n = int_from_json(field(j, "n", ""), "n");
    const int p = int_from_json(field(j, "p", ""), "p");
    if (!bool_from_json(field(j, "valid", ""), "valid")) {
        VerifyResult r = violated("valid");
        const Json& f = field(j, "failure", "");
        r.violation = "certificate marked invalid: " + (f.is_string() ? f.get<std::string>() : f.dump());
        return r;
    }
    if (n != curve.negativity()) return violated("n_matches_curve");
    if (p != curve.genus_int()) return violated("p_matches_curve");

    const Scalar s = scalar_from_json(field(j, "s", ""), "s");
    const TowerScalar t0 = tower_from_json(field(j, "t0", ""), "t0");
    const TowerDivisor alpha = tower_divisor_from_json(model, field(j, "alpha", ""), "alpha");
    const Rational delta = rational_from_json(field(j, "delta", ""), "delta");
    const bool overridden = j.contains("delta_overridden") && bool_from_json(j["delta_overridden"], "delta_overridden");

    const DivisorClass L = polarization(model);
    const DivisorClass D = canonical(model) - s * L;
    if (!holds([&] { return intersect(alpha, alpha).is_zero(); })) return violated("alpha_sq_zero");
    if (!holds([&] { return (t0 - TowerScalar(Scalar(Rational(1, n)))).sign() >= 0; })) return violated("t0_positive");
    if (sgn(delta) <= 0) return violated("delta_positive");
    if (!holds([&] { return intersect(alpha, convert<TowerScalar>(ample_h(model, delta))).sign() >= 0; }))
        return violated("alpha_dot_h_nonneg");
    if (!holds([&] { return intersect(D, D) == Scalar(Rational(-1, n)); })) return violated("s_matches_n");
    if (!holds([&] {
            const TowerDivisor expect = t0 * convert<TowerScalar>(curve.cls) - convert<TowerScalar>(D);
            return (alpha - expect).is_zero();
        }))
        return violated("alpha_definition");
    return passed(!overridden);
}

VerifyResult verify_zariski(const Json& j)
{
    const ModelPtr model = surface_from_json(field(j, "model", "")).model;
    const Json& cj = field(j, "curves", "");
    if (!cj.is_array()) bad("curves", "expected an array");
    CurveList curves;
    for (std::size_t i = 0; i < cj.size(); ++i) curves.push_back(curve_from_json(model, cj[i], idx("curves", i)));
    const DivisorClass d = divisor_from_json(model, field(j, "divisor", ""), "divisor");
    const DivisorClass pos = divisor_from_json(model, field(j, "positive", ""), "positive");
    const RationalVector coeffs = rational_vector(field(j, "coeffs", ""), "coeffs");
    if (coeffs.size() != curves.size()) bad("coeffs", "expected one coefficient per curve");

    for (const auto& a : coeffs)
        if (sgn(a) < 0) return violated("coeffs_nonneg");
    DivisorClass neg = DivisorClass::zero(model);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (sgn(coeffs[i]) > 0) {
            neg = neg + Scalar(coeffs[i]) * curves[i].cls;
            support.push_back(i);
        }
    if (!holds([&] { return (d - pos - neg).is_zero(); })) return violated("decomposition_sum");
    for (std::size_t i : support)
        if (!holds([&] { return intersect(pos, curves[i].cls).is_zero(); })) return violated("positive_orthogonal_support");
    for (const auto& c : curves)
        if (!holds([&] { return intersect(pos, c.cls).sign() >= 0; })) return violated("positive_nef_on_list");
    if (!holds([&] { return intersect(pos, neg).is_zero(); })) return violated("p_dot_n_zero");
    if (!support.empty() && !is_negative_definite(support_gram(curves, support)))
        return violated("support_negative_definite");
    return passed();
}

VerifyResult verify_strict(const Json& j)
{
    const ModelPtr model = surface_from_json(field(j, "model", "")).model;
    if (!bool_from_json(field(j, "valid", ""), "valid")) {
        VerifyResult r = violated("valid");
        const Json& f = field(j, "failure", "");
        r.violation = "certificate marked invalid: " + (f.is_string() ? f.get<std::string>() : f.dump());
        return r;
    }
    const int i = int_from_json(field(j, "curve_index", ""), "curve_index");
    if (i < 1 || i > model->r()) bad("curve_index", "exceptional index out of range");
    const DivisorClass alpha = divisor_from_json(model, field(j, "alpha", ""), "alpha");
    const Rational delta = rational_from_json(field(j, "delta", ""), "delta");
    const DivisorClass C = exceptional(model, i);
    const DivisorClass K = canonical(model);

    if (!holds([&] { return intersect(alpha, alpha).is_zero(); })) return violated("alpha_sq_zero");
    if (sgn(delta) <= 0) return violated("delta_positive");
    if (!holds([&] { return intersect(alpha, ample_h(model, delta)).sign() >= 0; })) return violated("alpha_dot_h_nonneg");
    if (!holds([&] { return intersect(alpha, C).sign() <= 0; })) return violated("alpha_dot_c_nonpos");
    if (!holds([&] { return intersect(alpha, K).sign() > 0; })) return violated("alpha_dot_k_pos");
    if (j.contains("s") && j.contains("t")) {
        const Scalar s = scalar_from_json(j["s"], "s");
        const Scalar t = scalar_from_json(j["t"], "t");
        if (!holds([&] { return (alpha - (t * C - (K - s * polarization(model)))).is_zero(); }))
            return violated("alpha_definition");
    }
    if (j.contains("gamma")) {
        const Scalar lambda = scalar_from_json(field(j, "lambda", ""), "lambda");
        const DivisorClass gamma = divisor_from_json(model, j["gamma"], "gamma");
        if (!holds([&] { return (gamma - (C + lambda * alpha)).is_zero(); })) return violated("gamma_definition");
        if (!holds([&] { return intersect(gamma, gamma).sign() < 0; })) return violated("gamma_sq_neg");
        if (!holds([&] { return intersect(gamma, K).sign() > 0; })) return violated("gamma_dot_k_pos");
    }
    return passed();
}

}  // namespace

VerifyResult verify_certificate(const Json& cert)
{
    const Json& type = field(cert, "type", "");
    if (!type.is_string()) bad("type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "ray_containment") return verify_ray(cert);
    if (t == "zariski") return verify_zariski(cert);
    if (t == "strict_inclusion") return verify_strict(cert);
    if (t == "bundle") {
        const Json& list = field(cert, "certificates", "");
        if (!list.is_array()) bad("certificates", "expected an array");
        VerifyResult out;
        out.ok = true;
        for (std::size_t i = 0; i < list.size(); ++i) {
            VerifyResult r;
            try {
                r = verify_certificate(list[i]);
            } catch (const Error& e) {
                fail(e.kind(), idx("certificates", i) + "." + e.what());
            }
            out.checked += r.checked;
            out.certified = out.certified && r.certified;
            if (!r.ok) {
                out.ok = false;
                out.violation = idx("certificates", i) + ": " + r.violation;
                return out;
            }
        }
        return out;
    }
    bad("type", "unknown certificate type \"" + t + "\"");
}

}  // namespace necone
