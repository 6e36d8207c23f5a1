#include "necone/cli.hpp"

#include "necone/cone.hpp"
#include "necone/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace necone {

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::string format = "json";
    std::string curve;
    std::string divisor;
    std::string normal;
    int boundary = 0;
};

struct Result {
    int code = kExitOk;
    std::string body;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RationalVector parse_coords(const std::string& text, const std::string& flag)
{
    RationalVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const Error& e) {
            fail(ErrorKind::Model, flag + ": " + e.what());
        }
    }
    return out;
}

Json conditions_json(const ConditionReport& c)
{
    return Json{{"satisfied", c.satisfied}, {"branch", c.branch}, {"q", to_json(c.q)},
                {"bound", to_json(c.bound)}, {"strict", c.strict}, {"slack", to_json(c.slack)},
                {"binding", c.binding}};
}

Json scalar_report(const Scalar& s)
{
    Json j = to_json(s);
    j["text"] = to_string(s);
    return j;
}

struct ListBounds {
    int nu = 1;
    int pi = 0;
    std::string source;
    SegreBounds segre;
};

ListBounds list_bounds(const SurfaceInput& in)
{
    ListBounds b;
    b.segre = segre_bounds(in.model->base().chi());
    if (b.segre.status == SegreStatus::Bounded) {
        b.nu = b.segre.nu;
        b.pi = b.segre.pi;
    }
    b.source = "segre";
    if (in.nu || in.pi) {
        b.nu = in.nu.value_or(b.nu);
        b.pi = in.pi.value_or(b.pi);
        b.source = "input";
    }
    return b;
}

Json segre_json(const SegreBounds& s)
{
    Json j{{"status", to_string(s.status)}};
    if (s.status == SegreStatus::Bounded) {
        j["nu"] = s.nu;
        j["pi"] = s.pi;
    }
    return j;
}

Json thresholds_json(const ThresholdContext& ctx, int nu)
{
    Json list = Json::array();
    const std::vector<Scalar> s = s_monotonicity(ctx, nu);
    for (int n = 1; n <= nu; ++n)
        list.push_back(Json{{"n", n}, {"delta_quarter", to_json(ctx.delta_quarter(n))}, {"s", scalar_report(s[n - 1])}});
    return list;
}

Json interval_json(const SInterval& iv)
{
    Json j{{"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
    j["lo"] = iv.lo ? scalar_report(*iv.lo) : Json(nullptr);
    j["hi"] = iv.hi ? scalar_report(*iv.hi) : Json(nullptr);
    j["interior"] = iv.has_interior ? to_json(iv.interior) : Json(nullptr);
    return j;
}

struct StrictReport {
    Json report;
    std::vector<Json> witnesses;
    bool found = false;
};

StrictReport strict_inclusion_report(const ModelPtr& model)
{
    StrictReport out;
    const ConditionSets cs = condition_sets(*model);
    out.report["conditions"] = cs.names();
    const SSystem sys = solve_s_system(*model);
    out.report["system"] = sys.system;
    Json ivs = Json::array();
    for (const auto& iv : sys.intervals) ivs.push_back(interval_json(iv));
    out.report["intervals"] = ivs;

    out.report["from_s"] = nullptr;
    if (model->r() >= 1) {
        for (const auto& iv : sys.intervals) {
            if (!iv.has_interior) continue;
            StrictInclusionWitness w = alpha_from_s(model, Scalar(iv.interior), 1);
            if (w.valid) w = gamma_witness(std::move(w));
            out.report["from_s"] = Json{{"valid", w.valid}, {"failure", w.failure}, {"s", to_json(iv.interior)}};
            if (w.valid) {
                out.found = true;
                out.witnesses.push_back(certificate_json(w));
            }
            break;
        }
    }
    if (model->r() >= 2) {
        StrictInclusionWitness u = uniruled_witness(model);
        if (u.valid) u = gamma_witness(std::move(u));
        out.report["uniruled"] = Json{{"valid", u.valid}, {"failure", u.failure}, {"alpha_dot_k", scalar_report(u.alpha_dot_k)}};
        if (u.valid) {
            out.found = true;
            out.witnesses.push_back(certificate_json(u));
        }
    } else {
        out.report["uniruled"] = Json{{"valid", false}, {"failure", "requires r >= 2"}};
    }
    out.report["witness_found"] = out.found;
    return out;
}

std::string text_lines(const Json& j, const std::string& prefix = "")
{
    std::string out;
    for (const auto& [k, v] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object() && !(v.contains("a") && v.contains("text"))) out += text_lines(v, key);
        else if (v.is_object()) out += key + ": " + v["text"].get<std::string>() + "\n";
        else out += key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    return out;
}

Result cmd_thresholds(const RunConfig& cfg, std::ostream& err)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    const ThresholdContext ctx = ThresholdContext::from_model(*in.model);
    const ListBounds lb = list_bounds(in);
    const ConditionReport cond = check_conditions(ctx, lb.nu, lb.pi);
    Json rep{{"command", "thresholds"}, {"seed", cfg.seed}, {"surface", model_to_json(*in.model)},
             {"nu", lb.nu}, {"pi", lb.pi}, {"list_source", lb.source}, {"conditions", conditions_json(cond)}};
    Result res;
    if (!cond.satisfied) {
        err << "conditions unmet: " << cond.binding << "\n";
        rep["thresholds"] = nullptr;
        res.code = kExitConditionsUnmet;
    } else {
        rep["thresholds"] = thresholds_json(ctx, lb.nu);
    }
    res.body = cfg.format == "text" ? text_lines(rep) : dump(rep);
    return res;
}

Result cmd_certify_ray(const RunConfig& cfg, std::ostream& err)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    CurveList targets;
    if (!cfg.curve.empty()) {
        for (const auto& c : in.curves)
            if (c.label == cfg.curve) targets.push_back(c);
        require(!targets.empty(), ErrorKind::Model, "--curve: no listed curve labelled \"" + cfg.curve + "\"");
    } else {
        targets = in.curves;
    }
    require(!targets.empty(), ErrorKind::Model, "curves: the input lists no curves to certify");
    std::vector<Json> certs;
    Result res;
    for (const auto& c : targets) {
        const RayContainmentCert cert = ray_certificate(in.model, c);
        if (!cert.valid) {
            err << "certificate " << c.label << " invalid: " << cert.failure << "\n";
            res.code = kExitConditionsUnmet;
        }
        certs.push_back(certificate_json(cert));
    }
    res.body = dump(certs.size() == 1 ? certs.front() : bundle_json(std::move(certs)));
    return res;
}

Result cmd_zariski(const RunConfig& cfg, std::ostream&)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    Result res;
    if (!cfg.divisor.empty()) {
        const DivisorClass d = from_rational(in.model, parse_coords(cfg.divisor, "--divisor"));
        res.body = dump(certificate_json(zariski_decompose(d, in.curves), in.curves));
        return res;
    }
    const ListCheckReport rep = list_decomposition_check(in.model, in.curves, cfg.samples, cfg.seed);
    Json j{{"command", "zariski"}, {"seed", rep.seed}, {"samples", rep.samples},
           {"reconstruction_failures", rep.reconstruction_failures},
           {"extremality_failures", rep.extremality_failures}, {"failures", rep.failures}, {"passed", rep.passed()}};
    res.body = cfg.format == "text" ? text_lines(j) : dump(j);
    if (!rep.passed()) res.code = kExitVerifyFailed;
    return res;
}

Result cmd_segre(const RunConfig& cfg, std::ostream&)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    const ModelPtr& model = in.model;
    const Rational chi = model->base().chi();
    const SegreBounds sb = segre_bounds(chi);
    Json curves = Json::array();
    for (const auto& c : in.curves) {
        Json row{{"label", c.label}, {"self_int", to_json(c.self_int)}, {"genus", to_json(c.genus)},
                 {"exceptional", c.is_exceptional}, {"chain_holds", curve_bound_check(c, chi)}};
        if (sb.status == SegreStatus::ExceptionalOnly) row["allowed"] = c.is_exceptional;
        if (model->base().surface_class() == SurfaceClass::K3)
            row["k3_kind"] = to_string(classify_k3_curve(c, intersect(c.cls, canonical(model)).a()));
        curves.push_back(row);
    }
    Json systems = Json::array();
    for (const auto& s : in.systems) {
        const DimensionEstimate est = virtual_and_expected_dim(s.cls, s.h2_zero_assumed);
        Json row{{"label", s.label}, {"speciality", to_string(speciality(s))}, {"virtual_dim", to_json(est.virtual_dim)},
                 {"expected_dim", to_json(est.expected_dim)}, {"reduced", s.reduced},
                 {"exceptional_support", s.exceptional_support}, {"h2_zero_assumed", s.h2_zero_assumed}};
        row["known_dim"] = s.known_dim ? to_json(*s.known_dim) : Json(nullptr);
        if (s.known_dim && sgn(*s.known_dim) >= 0) {
            const Rational g = arithmetic_genus(s.cls);
            const PencilReport p =
                pencil_counterexample(chi, g, *s.known_dim, model->base().data().pg, model->base().data().q_irr);
            Json pj{{"verdict", to_string(p.verdict)}, {"chi", to_json(chi)}, {"g", to_json(g)},
                    {"dim", to_json(*s.known_dim)}, {"dim_plus_g_plus_1", to_json(Rational(*s.known_dim + g + 1))},
                    {"corollary_holds", p.corollary_holds}};
            pj["pg_zero_failure"] = p.pg_zero_failure ? Json(*p.pg_zero_failure) : Json(nullptr);
            row["pencil"] = pj;
        }
        systems.push_back(row);
    }
    Json rep{{"command", "segre-check"}, {"surface", model_to_json(*model)}, {"segre", segre_json(sb)},
             {"curves", curves}, {"systems", systems}};
    Result res;
    if (cfg.format != "text") {
        res.body = dump(rep);
        return res;
    }
    std::ostringstream os;
    os << "segre: " << to_string(sb.status);
    if (sb.status == SegreStatus::Bounded) os << " nu=" << sb.nu << " pi=" << sb.pi;
    os << "\n\n" << std::left << std::setw(16) << "curve" << std::setw(10) << "C^2" << std::setw(8) << "p_a"
       << std::setw(8) << "chain" << "k3_kind\n";
    for (const auto& c : curves)
        os << std::setw(16) << c["label"].get<std::string>() << std::setw(10) << c["self_int"].get<std::string>()
           << std::setw(8) << c["genus"].get<std::string>() << std::setw(8)
           << (c["chain_holds"].get<bool>() ? "yes" : "no") << (c.contains("k3_kind") ? c["k3_kind"].get<std::string>() : "-")
           << "\n";
    os << "\n" << std::setw(16) << "system" << std::setw(14) << "speciality" << std::setw(10) << "e(L)"
       << std::setw(8) << "dim" << "pencil\n";
    for (const auto& s : systems)
        os << std::setw(16) << s["label"].get<std::string>() << std::setw(14) << s["speciality"].get<std::string>()
           << std::setw(10) << s["expected_dim"].get<std::string>() << std::setw(8)
           << (s["known_dim"].is_null() ? "?" : s["known_dim"].get<std::string>())
           << (s.contains("pencil") ? s["pencil"]["verdict"].get<std::string>() + " (chi=" +
                                          s["pencil"]["chi"].get<std::string>() + ", dim+g+1=" +
                                          s["pencil"]["dim_plus_g_plus_1"].get<std::string>() + ")"
                                    : "-")
           << "\n";
    res.body = os.str();
    return res;
}

Result cmd_strict(const RunConfig& cfg, std::ostream& err)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    StrictReport sr = strict_inclusion_report(in.model);
    Result res;
    if (!sr.found) {
        err << "conditions not satisfied: no strict-inclusion witness (sets "
            << (sr.report["conditions"].empty() ? std::string("none") : sr.report["conditions"].dump()) << ")\n";
        res.code = kExitConditionsUnmet;
    }
    if (cfg.format == "text") {
        std::ostringstream os;
        os << (sr.found ? "strict inclusion Pos_{K>=0} < NE_{K>=0}: witness found\n"
                        : "strict inclusion: conditions not satisfied\n");
        os << text_lines(sr.report);
        res.body = os.str();
        return res;
    }
    Json out = bundle_json(std::move(sr.witnesses));
    out["report"] = sr.report;
    out["surface"] = model_to_json(*in.model);
    res.body = dump(out);
    return res;
}

Result cmd_slice(const RunConfig& cfg, std::ostream&)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    std::vector<LabelledClass> classes;
    for (const auto& c : in.curves) classes.push_back({c.label, c.cls});
    classes.push_back({"L", polarization(in.model)});
    classes.push_back({"K", canonical(in.model)});
    const DivisorClass normal =
        cfg.normal.empty() ? polarization(in.model) : from_rational(in.model, parse_coords(cfg.normal, "--normal"));
    return {kExitOk, slice_export(in.model, classes, normal, cfg.boundary)};
}

Result cmd_verify(const RunConfig& cfg, std::ostream& err)
{
    const VerifyResult v = verify_certificate(read_json_file(cfg.input));
    Json rep{{"command", "verify"}, {"ok", v.ok}, {"checked", v.checked}, {"certified", v.certified}};
    rep["violation"] = v.ok ? Json(nullptr) : Json(v.violation);
    Result res;
    if (!v.ok) {
        err << v.violation << "\n";
        res.code = kExitVerifyFailed;
    } else if (!v.certified) {
        err << "note: produced with an overridden delta cap (non-certified mode)\n";
    }
    res.body = cfg.format == "text" ? (v.ok ? "ok\n" : "fail\n") : dump(rep);
    return res;
}

Result cmd_analyze(const RunConfig& cfg, std::ostream& err)
{
    const SurfaceInput in = surface_from_json(read_json_file(cfg.input));
    const ModelPtr& model = in.model;
    const ThresholdContext ctx = ThresholdContext::from_model(*model);
    const ListBounds lb = list_bounds(in);
    Json rep{{"command", "analyze"}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"surface", model_to_json(*model)}};
    if (!in.label.empty()) rep["label"] = in.label;
    rep["segre"] = segre_json(lb.segre);
    rep["list"] = Json{{"nu", lb.nu}, {"pi", lb.pi}, {"source", lb.source}, {"curves", in.curves.size()}};
    const ConditionReport cond = check_conditions(ctx, lb.nu, lb.pi);
    rep["conditions"] = conditions_json(cond);

    Result res;
    if (!cond.satisfied) {
        err << "conditions unmet: " << cond.binding << "\n";
        rep["thresholds"] = nullptr;
        rep["main_theorem"] = nullptr;
        res.code = kExitConditionsUnmet;
    } else {
        rep["thresholds"] = thresholds_json(ctx, lb.nu);
        try {
            const MainTheoremReport mt = main_theorem_check(model, in.curves, lb.nu, lb.pi, cfg.samples, cfg.seed);
            std::size_t valid = 0;
            for (const auto& c : mt.certificates) valid += c.valid ? 1 : 0;
            Json ce = Json::array();
            for (const auto& c : mt.counterexamples)
                ce.push_back(Json{{"sample", c.sample}, {"gamma", to_json(c.gamma)}});
            rep["main_theorem"] = Json{{"s", scalar_report(mt.s)},
                                       {"delta", to_json(mt.delta)},
                                       {"delta_overridden", delta_cap_overridden()},
                                       {"certificates", mt.certificates.size()},
                                       {"certificates_valid", valid},
                                       {"k_minus_sl_h_negative", mt.k_minus_sl_h_negative},
                                       {"samples", mt.samples},
                                       {"tested", mt.tested},
                                       {"counterexamples", ce},
                                       {"failures", mt.failures},
                                       {"passed", mt.passed()}};
            if (!mt.passed()) {
                for (const auto& f : mt.failures) err << "main theorem: " << f << "\n";
                for (const auto& c : mt.counterexamples)
                    err << "counterexample at sample " << c.sample << ": " << to_json(c.gamma).dump() << "\n";
                res.code = kExitVerifyFailed;
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Precondition && e.kind() != ErrorKind::Infeasible) throw;
            err << "main theorem: " << e.what() << "\n";
            rep["main_theorem"] = Json{{"error", e.what()}};
            res.code = kExitConditionsUnmet;
        }
    }
    rep["strict_inclusion"] = strict_inclusion_report(model).report;
    res.body = cfg.format == "text" ? text_lines(rep) : dump(rep);
    return res;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact cone computations on blown-up surfaces"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool needs_input = true) {
        auto* opt = sub->add_option("--input,-i", cfg.input, "input JSON (surface, or certificate for verify)");
        if (needs_input) opt->required();
        sub->add_option("--output,-o", cfg.output, "write the report to this file");
        sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "number of samples")->capture_default_str();
        sub->add_option("--format", cfg.format, "json, text or csv")
            ->check(CLI::IsMember({"json", "text", "csv"}))
            ->capture_default_str();
    };
    const std::vector<std::pair<std::string, std::string>> commands{
        {"analyze", "bounds, thresholds, main-theorem check and strict inclusion in one report"},
        {"thresholds", "conditions on r and the thresholds s_1..s_nu"},
        {"certify-ray", "ray-containment certificates for listed curves"},
        {"zariski", "Zariski decomposition of --divisor, or the sampled list check"},
        {"segre-check", "Segre bounds, curve chain, K3 kinds, speciality and pencils"},
        {"strict-inclusion", "witnesses for Pos_{K>=0} strictly inside NE_{K>=0}"},
        {"slice", "CSV of classes in an affine slice of the positive cone"},
        {"verify", "re-check a certificate JSON"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        common(sub);
        if (name == "certify-ray") sub->add_option("--curve", cfg.curve, "label of the curve to certify");
        if (name == "zariski") sub->add_option("--divisor", cfg.divisor, "comma-separated rational coordinates");
        if (name == "slice") {
            sub->add_option("--normal", cfg.normal, "comma-separated coordinates of the slice normal (default L)");
            sub->add_option("--boundary", cfg.boundary, "number of boundary samples")->check(CLI::NonNegativeNumber);
        }
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        Result res;
        if (cfg.command == "thresholds") res = cmd_thresholds(cfg, err);
        else if (cfg.command == "certify-ray") res = cmd_certify_ray(cfg, err);
        else if (cfg.command == "zariski") res = cmd_zariski(cfg, err);
        else if (cfg.command == "segre-check") res = cmd_segre(cfg, err);
        else if (cfg.command == "strict-inclusion") res = cmd_strict(cfg, err);
        else if (cfg.command == "slice") res = cmd_slice(cfg, err);
        else if (cfg.command == "verify") res = cmd_verify(cfg, err);
        else res = cmd_analyze(cfg, err);

        if (cfg.output.empty()) {
            out << res.body;
        } else {
            std::ofstream f(cfg.output);
            if (!f) {
                err << "error: cannot write " << cfg.output << "\n";
                return kExitError;
            }
            f << res.body;
        }
        return res.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Infeasible ? kExitConditionsUnmet : kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace necone
