// arcshare: construct, verify, and operate ideal secret sharing schemes
// built from arcs in finite projective planes.
//
// Machine-readable JSON goes to stdout, human summaries to stderr.
// Exit codes: 0 success/pass, 2 usage or malformed input, 3 verification
// or construction failure, 4 inconsistent data.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "arcshare/serialize.hpp"

using namespace arcshare;
namespace fs = std::filesystem;

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::InconsistentShares: return 4;
        case Errc::VerificationFailed:
        case Errc::NotAnArc:
        case Errc::Degenerate:
        case Errc::NoExternalLine:
        case Errc::UnverifiedScheme: return 3;
        default: return 2;
    }
}

FieldPtr field_for_order(uint32_t q) {
    auto [p, n] = factor_prime_power(q);
    return Field::make(p, n);
}

void emit(const json& payload, const std::string& out_path) {
    if (!out_path.empty()) save_json_file(out_path, payload);
    std::cout << payload.dump(2) << "\n";
}

VerifyMode parse_mode(const std::string& mode) {
    if (mode == "vector") return VerifyMode::Vector;
    if (mode == "definitional") return VerifyMode::Definitional;
    if (mode == "char") return VerifyMode::Char;
    if (mode == "all") return VerifyMode::All;
    raise(Errc::BadInput, "unknown mode " + mode);
}

json scheme_summary(const Scheme& s) {
    return json{{"participants", s.generator.m()},
                {"k", s.generator.k()},
                {"q", s.generator.field()->q()},
                {"verdict", s.report.verdict ? "pass" : "fail"}};
}

struct Options {
    uint32_t q = 0;
    int variant = 28;
    int l_inf_index = 0;
    int center_index = 0;
    int t = 2, n = 2;
    uint64_t seed = 1;
    bool seed_given = false;
    bool exhaustive = false;
    std::string mode = "all";
    std::string out, input, array_path, access_path, format = "csv", secret;
    std::vector<std::string> share_paths;
};

int run_construct(const std::string& target, const Options& opt) {
    if (target == "conic") {
        FieldPtr f = field_for_order(opt.q);
        auto arc = conic_arc(f);
        json payload = point_set_to_json(arc, f, 2);
        payload["kind"] = "conic-arc";
        emit(payload, opt.out);
        std::cerr << "conic arc in PG(2," << opt.q << "): " << arc.size() << " points\n";
        return 0;
    }
    if (target == "parc") {
        BaerStructure bs = baer_structure(opt.q, {opt.l_inf_index, opt.center_index});
        ConstructedParc built = construct_parc(bs, opt.variant);
        json payload = parc_to_json(built.parc, built.parc.points[0].field());
        payload["kind"] = "parc";
        payload["variant"] = opt.variant;
        payload["derived_arc"] = built.derived_arc;
        emit(payload, opt.out);
        json prof = built.parc.nonzero_profile();
        std::cerr << "parc in PG(2," << opt.q * opt.q << "): " << built.parc.points.size()
                  << " points, profile " << prof.dump() << "\n";
        return 0;
    }
    if (target == "harc") {
        HierarchicalArc harc = construct_harc(baer_structure(opt.q, {opt.l_inf_index, opt.center_index}));
        json payload = harc_to_json(harc, harc.k1_points[0].field());
        payload["kind"] = "harc";
        emit(payload, opt.out);
        std::cerr << "harc in PG(2," << opt.q * opt.q << "): (" << harc.k1_points.size() << ","
                  << harc.k2_points.size() << ")\n";
        return 0;
    }
    if (target == "baer") {
        BaerStructure bs = baer_structure(opt.q, {opt.l_inf_index, opt.center_index});
        json segments = json::array();
        for (const auto& seg : bs.segments) {
            json pts = json::array();
            for (int pt : seg) pts.push_back(point_to_json(bs.plane.points()[pt]));
            segments.push_back(pts);
        }
        json subplanes = json::array();
        for (const auto& sub : bs.baer_subplanes) {
            json pts = json::array();
            for (int pt : sub) pts.push_back(point_to_json(bs.plane.points()[pt]));
            subplanes.push_back(pts);
        }
        json payload{{"kind", "baer-structure"},
                     {"field", field_to_json(bs.field)},
                     {"q", bs.sub_q},
                     {"l_inf", point_to_json(bs.plane.lines()[bs.l_inf].dual())},
                     {"center", point_to_json(bs.plane.points()[bs.center_p])},
                     {"subplane_size", bs.subplane_points.size()},
                     {"segments", segments},
                     {"disjoint_subplanes", subplanes},
                     {"theta", {{"points", bs.theta.n_points}, {"lines", bs.theta.lines.size()}}},
                     {"theta_star",
                      {{"points", bs.theta_star.n_points}, {"lines", bs.theta_star.lines.size()}}}};
        emit(payload, opt.out);
        std::cerr << "Baer structure of PG(2," << opt.q * opt.q << "): Theta(S) "
                  << bs.theta.n_points << " points / " << bs.theta.lines.size() << " lines\n";
        return 0;
    }
    raise(Errc::BadInput, "unknown construct target " + target);
}

int run_scheme(const std::string& kind, const Options& opt) {
    Scheme scheme = [&] {
        if (kind == "threshold") {
            FieldPtr f = field_for_order(opt.q);
            return make_scheme(threshold_generator(f, opt.t, opt.n),
                               threshold_basis(opt.t, opt.n), parse_mode(opt.mode));
        }
        json j = load_json_file(opt.input);
        if (kind == "from-parc") {
            ExtractedScheme ex = scheme_from_parc(parc_from_json(j));
            return make_scheme(ex.scheme.generator, ex.scheme.gamma, parse_mode(opt.mode));
        }
        if (kind == "from-harc") {
            ExtractedScheme ex = scheme_from_harc(harc_from_json(j));
            return make_scheme(ex.scheme.generator, ex.scheme.gamma, parse_mode(opt.mode));
        }
        raise(Errc::BadInput, "unknown scheme kind " + kind);
    }();

    json payload = scheme_to_json(scheme);
    emit(payload, opt.out);
    std::cerr << "scheme: " << scheme_summary(scheme).dump() << "\n";
    if (!scheme.report.verdict) {
        std::cerr << "verification failed\n";
        return 3;
    }
    return 0;
}

int run_verify(const Options& opt) {
    VerificationReport report;
    if (!opt.array_path.empty()) {
        RepresentativeArray arr = [&] {
            if (opt.array_path.size() > 4 &&
                opt.array_path.substr(opt.array_path.size() - 4) == ".csv") {
                if (opt.q == 0) raise(Errc::BadInput, "--q is required for CSV arrays");
                return array_from_csv(load_text_file(opt.array_path), field_for_order(opt.q));
            }
            return array_from_json(load_json_file(opt.array_path));
        }();
        AccessStructure gamma = access_from_json(load_json_file(opt.access_path));
        VerifyMode mode = parse_mode(opt.mode);
        if (mode == VerifyMode::Vector)
            raise(Errc::BadInput, "vector mode needs a scheme file, not an array");
        if (mode == VerifyMode::Definitional || mode == VerifyMode::All)
            report.merge(verify_definitional(arr, gamma, opt.exhaustive));
        if (mode == VerifyMode::Char || mode == VerifyMode::All)
            report.merge(verify_char(arr, gamma));
        report.mode = opt.mode;
    } else {
        json j = load_json_file(opt.input);
        Scheme base = scheme_from_json(j);
        Scheme rechecked = make_scheme(base.generator, base.gamma, parse_mode(opt.mode));
        if (opt.exhaustive) {
            RepresentativeArray arr = generate_array(rechecked.generator);
            rechecked.report.merge(verify_definitional(arr, rechecked.gamma, true));
        }
        report = rechecked.report;
    }
    json payload = report_to_json(report);
    emit(payload, opt.out);
    std::cerr << (report.verdict ? "PASS" : "FAIL") << " (" << opt.mode << ")\n";
    return report.verdict ? 0 : 3;
}

int run_deal(const Options& opt) {
    Scheme scheme = scheme_from_json(load_json_file(opt.input));
    FieldPtr f = scheme.generator.field();
    if (!opt.seed_given)
        std::cerr << "warning: no --seed given, using fixed seed " << opt.seed << "\n";
    uint32_t secret = static_cast<uint32_t>(std::stoul(opt.secret));
    if (secret >= f->q()) raise(Errc::BadInput, "secret outside the key space");

    std::vector<Share> shares = deal(scheme, f->el(secret), opt.seed);
    fs::path dir = opt.out.empty() ? fs::path("shares") : fs::path(opt.out);
    fs::create_directories(dir);
    json listing = json::array();
    for (const auto& sh : shares) {
        json sj = share_to_json(sh, f);
        save_json_file((dir / ("share_" + sh.label + ".json")).string(), sj);
        listing.push_back(sj);
    }
    std::cout << json{{"shares", listing}, {"dir", dir.string()}}.dump(2) << "\n";
    std::cerr << "dealt " << shares.size() << " shares to " << dir << "\n";
    return 0;
}

int run_reconstruct(const Options& opt) {
    Scheme scheme = scheme_from_json(load_json_file(opt.input));
    FieldPtr f = scheme.generator.field();
    std::vector<Share> shares;
    for (const auto& path : opt.share_paths)
        shares.push_back(share_from_json(load_json_file(path), f));
    ReconstructResult r = reconstruct(scheme, shares);
    if (r.unique) {
        std::cout << json{{"secret", r.secret.repr()}}.dump(2) << "\n";
        std::cerr << "secret: " << r.secret.repr() << "\n";
    } else {
        std::cout << ambiguity_to_json(r.ambiguity).dump(2) << "\n";
        std::cerr << "unauthorized set: " << f->q() << " keys remain equally likely\n";
    }
    return 0;
}

int run_bounds(const std::string& target, const Options& opt) {
    if (target == "parc") {
        ParcBoundResult r = parc_bound_check(opt.q);
        json witness = json::array();
        for (const auto& p : r.witness) witness.push_back(point_to_json(p));
        emit(json{{"search", "parc"},
                  {"field", field_to_json(field_for_order(opt.q))},
                  {"q", opt.q},
                  {"max_size", r.max_size},
                  {"bound_2q", 2 * opt.q},
                  {"witness", witness}},
             opt.out);
        std::cerr << "max parc size in PG(2," << opt.q << ") with a fixed pencil: " << r.max_size
                  << "\n";
        return 0;
    }
    if (target == "harc") {
        HarcBoundResult r = harc_bound_check(opt.q);
        json k1 = json::array(), k2 = json::array();
        for (const auto& p : r.k1_witness) k1.push_back(point_to_json(p));
        for (const auto& p : r.k2_witness) k2.push_back(point_to_json(p));
        emit(json{{"search", "harc"},
                  {"field", field_to_json(field_for_order(opt.q))},
                  {"q", opt.q},
                  {"max_total", r.max_total},
                  {"bound_q_plus_2", opt.q + 2},
                  {"k1_witness", k1},
                  {"k2_witness", k2}},
             opt.out);
        std::cerr << "max harc size in PG(2," << opt.q << ") with a fixed line: " << r.max_total
                  << "\n";
        return 0;
    }
    raise(Errc::BadInput, "unknown bounds target " + target);
}

int run_export(const Options& opt) {
    Scheme scheme = scheme_from_json(load_json_file(opt.input));
    RepresentativeArray arr = generate_array(scheme.generator);
    if (opt.format == "csv") {
        std::string text = array_to_csv(arr);
        if (!opt.out.empty()) save_text_file(opt.out, text);
        else std::cout << text;
    } else if (opt.format == "json") {
        emit(array_to_json(arr), opt.out);
    } else {
        raise(Errc::BadInput, "format must be csv or json");
    }
    std::cerr << "array: " << arr.n_rows() << " rules x " << arr.n_cols() << " columns\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal secret sharing schemes from finite projective planes"};
    app.require_subcommand(1);
    Options opt;

    auto* construct = app.add_subcommand("construct", "build geometric objects");
    std::string construct_target;
    construct->add_option("target", construct_target, "conic|parc|harc|baer")->required();
    construct->add_option("--q", opt.q, "subplane/base order q")->required();
    construct->add_option("--variant", opt.variant, "parc variant: 26|27|28|31|32");
    construct->add_option("--l-inf-index", opt.l_inf_index, "which full subplane line becomes l_inf");
    construct->add_option("--center-index", opt.center_index, "which subplane point of l_inf is P");
    construct->add_option("-o,--out", opt.out, "output file");

    auto* scheme = app.add_subcommand("scheme", "build and verify a scheme");
    std::string scheme_kind;
    scheme->add_option("kind", scheme_kind, "threshold|from-parc|from-harc")->required();
    scheme->add_option("input", opt.input, "parc/harc JSON file");
    scheme->add_option("--q", opt.q, "field order (threshold)");
    scheme->add_option("--t", opt.t, "threshold t");
    scheme->add_option("--n", opt.n, "participant count");
    scheme->add_option("--mode", opt.mode, "vector|definitional|char|all");
    scheme->add_option("-o,--out", opt.out, "output file");

    auto* verify = app.add_subcommand("verify", "verify a scheme or array");
    verify->add_option("input", opt.input, "scheme JSON file");
    verify->add_option("--array", opt.array_path, "array CSV/JSON file");
    verify->add_option("--access", opt.access_path, "access structure JSON");
    verify->add_option("--q", opt.q, "field order for CSV arrays");
    verify->add_option("--mode", opt.mode, "vector|definitional|char|all");
    verify->add_flag("--exhaustive", opt.exhaustive, "check all subsets (n <= 12)");
    verify->add_option("-o,--out", opt.out, "report file");

    auto* deal_cmd = app.add_subcommand("deal", "deal shares of a secret");
    deal_cmd->add_option("input", opt.input, "scheme JSON file")->required();
    deal_cmd->add_option("--secret", opt.secret, "secret key (canonical index)")->required();
    deal_cmd->add_option("--seed", opt.seed, "RNG seed")->each([&](const std::string&) {
        opt.seed_given = true;
    });
    deal_cmd->add_option("-o,--out", opt.out, "share directory");

    auto* rec = app.add_subcommand("reconstruct", "recover the secret from shares");
    rec->add_option("input", opt.input, "scheme JSON file")->required();
    rec->add_option("-s,--share", opt.share_paths, "share file (repeatable)")->required();

    auto* bounds = app.add_subcommand("bounds", "exhaustive maximum searches");
    std::string bounds_target;
    bounds->add_option("target", bounds_target, "parc|harc")->required();
    bounds->add_option("--q", opt.q, "plane order (<= 4)")->required();
    bounds->add_option("-o,--out", opt.out, "report file");

    auto* exp = app.add_subcommand("export", "export the representative array");
    std::string export_what;
    exp->add_option("what", export_what, "array")->required();
    exp->add_option("input", opt.input, "scheme JSON file")->required();
    exp->add_option("--format", opt.format, "csv|json");
    exp->add_option("-o,--out", opt.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return run_construct(construct_target, opt);
        if (scheme->parsed()) {
            if (scheme_kind != "threshold" && opt.input.empty())
                raise(Errc::BadInput, "scheme from-parc/from-harc needs an input file");
            return run_scheme(scheme_kind, opt);
        }
        if (verify->parsed()) {
            if (opt.array_path.empty() && opt.input.empty())
                raise(Errc::BadInput, "verify needs a scheme file or --array/--access");
            if (!opt.array_path.empty() && opt.access_path.empty())
                raise(Errc::BadInput, "--array needs --access");
            return run_verify(opt);
        }
        if (deal_cmd->parsed()) return run_deal(opt);
        if (rec->parsed()) return run_reconstruct(opt);
        if (bounds->parsed()) return run_bounds(bounds_target, opt);
        if (exp->parsed()) return run_export(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
