#include "arcshare/serialize.hpp"

#include <fstream>
#include <sstream>

namespace arcshare {

namespace {

std::vector<uint32_t> repr_list(const json& j) {
    std::vector<uint32_t> out;
    for (const auto& v : j) out.push_back(v.get<uint32_t>());
    return out;
}

VerifyMode mode_from_string(const std::string& s) {
    if (s == "vector") return VerifyMode::Vector;
    if (s == "definitional") return VerifyMode::Definitional;
    if (s == "char") return VerifyMode::Char;
    if (s == "all") return VerifyMode::All;
    raise(Errc::BadInput, "unknown verification mode " + s);
}

} // namespace

json field_to_json(const FieldPtr& f) {
    return json{{"p", f->p()}, {"n", f->n()}, {"modulus", f->modulus()}};
}

FieldPtr field_from_json(const json& j) {
    if (j.contains("q") && !j.contains("p")) {
        auto [p, n] = factor_prime_power(j.at("q").get<uint32_t>());
        return Field::make(p, n);
    }
    std::optional<std::vector<uint32_t>> modulus;
    if (j.contains("modulus")) modulus = repr_list(j.at("modulus"));
    return Field::make(j.at("p").get<uint32_t>(), j.at("n").get<uint32_t>(), modulus);
}

json matrix_to_json(const FMatrix& m) {
    return json{{"spec", field_to_json(m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", m.entries()}};
}

FMatrix matrix_from_json(const json& j) {
    return FMatrix(field_from_json(j.at("spec")), j.at("rows").get<size_t>(),
                   j.at("cols").get<size_t>(), repr_list(j.at("entries")));
}

json point_to_json(const ProjectivePoint& p) { return json(p.coords().coords()); }

ProjectivePoint point_from_json(const json& j, const FieldPtr& f) {
    return normalize(FVector(f, repr_list(j)));
}

json point_set_to_json(const std::vector<ProjectivePoint>& pts, const FieldPtr& f, int dim) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    return json{{"field", field_to_json(f)}, {"dim", dim}, {"points", arr}};
}

std::vector<ProjectivePoint> point_set_from_json(const json& j, FieldPtr* field_out) {
    FieldPtr f = field_from_json(j.at("field"));
    if (field_out) *field_out = f;
    std::vector<ProjectivePoint> out;
    for (const auto& pj : j.at("points")) out.push_back(point_from_json(pj, f));
    return out;
}

json access_to_json(const AccessStructure& g) {
    return json{{"n", g.n_participants()}, {"basis", g.basis()}};
}

AccessStructure access_from_json(const json& j) {
    if (j.contains("model")) {
        std::string model = j.at("model").get<std::string>();
        if (model == "threshold")
            return threshold_basis(j.at("t").get<int>(), j.at("n").get<int>());
        if (model == "parallel")
            return parallel_basis(j.at("groups").get<std::vector<std::vector<int>>>(),
                                  j.at("t").get<int>());
        if (model == "hierarchical")
            return hierarchical_basis(j.at("upper").get<std::vector<int>>(),
                                      j.at("lower").get<std::vector<int>>(), j.at("t").get<int>());
        raise(Errc::BadInput, "unknown access model " + model);
    }
    return AccessStructure(j.at("n").get<int>(),
                           j.at("basis").get<std::vector<std::vector<int>>>());
}

json report_to_json(const VerificationReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"condition", e.condition},
                               {"subset", e.subset},
                               {"pass", e.pass},
                               {"detail", e.detail}});
    return json{{"mode", r.mode}, {"verdict", r.verdict ? "pass" : "fail"}, {"entries", entries}};
}

json scheme_to_json(const Scheme& s) {
    json participants = json::array();
    for (const auto& v : s.generator.participants()) participants.push_back(v.coords());
    return json{{"field", field_to_json(s.generator.field())},
                {"k", s.generator.k()},
                {"dealer", s.generator.dealer().coords()},
                {"participants", participants},
                {"labels", s.generator.labels()},
                {"access", access_to_json(s.gamma)},
                {"verification", report_to_json(s.report)}};
}

Scheme scheme_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    FVector dealer(f, repr_list(j.at("dealer")));
    std::vector<FVector> participants;
    for (const auto& pj : j.at("participants")) participants.emplace_back(f, repr_list(pj));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    GeneratorMatrix gen(std::move(dealer), std::move(participants), std::move(labels));
    AccessStructure gamma = access_from_json(j.at("access"));
    VerifyMode mode = VerifyMode::Vector;
    if (j.contains("verification") && j.at("verification").contains("mode"))
        mode = mode_from_string(j.at("verification").at("mode").get<std::string>());
    return make_scheme(std::move(gen), std::move(gamma), mode);
}

json share_to_json(const Share& s, const FieldPtr& f) {
    return json{{"index", s.index},
                {"label", s.label},
                {"value", s.value.repr()},
                {"field", field_to_json(f)}};
}

Share share_from_json(const json& j, const FieldPtr& expected) {
    FieldPtr f = j.contains("field") ? field_from_json(j.at("field")) : expected;
    require_same_field(f, expected, "share file");
    return Share{j.at("index").get<int>(),
                 j.value("label", std::string{}),
                 expected->el(j.at("value").get<uint32_t>())};
}

json array_to_json(const RepresentativeArray& m) {
    return json{{"spec", field_to_json(m.field())}, {"labels", m.labels()}, {"rows", m.rows()}};
}

RepresentativeArray array_from_json(const json& j) {
    return RepresentativeArray(field_from_json(j.at("spec")),
                               j.at("labels").get<std::vector<std::string>>(),
                               j.at("rows").get<std::vector<std::vector<uint32_t>>>());
}

std::string array_to_csv(const RepresentativeArray& m) {
    std::ostringstream os;
    for (size_t c = 0; c < m.labels().size(); ++c) os << (c ? "," : "") << m.labels()[c];
    os << "\n";
    for (const auto& row : m.rows()) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << "\n";
    }
    return os.str();
}

RepresentativeArray array_from_csv(const std::string& text, const FieldPtr& field) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) raise(Errc::BadInput, "empty CSV");
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') { out.push_back(cur); cur.clear(); }
            else if (ch != '\r') cur += ch;
        }
        out.push_back(cur);
        return out;
    };
    std::vector<std::string> labels = split(line);
    std::vector<std::vector<uint32_t>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<uint32_t> row;
        for (const auto& cell : split(line)) row.push_back(std::stoul(cell));
        rows.push_back(std::move(row));
    }
    return RepresentativeArray(field, std::move(labels), std::move(rows));
}

json parc_to_json(const PencilArc& parc, const FieldPtr& f) {
    json points = json::array();
    for (const auto& p : parc.points) points.push_back(point_to_json(p));
    json center = json::array();
    for (const auto& b : parc.pencil.center.basis()) center.push_back(b.coords());
    json members = json::array();
    for (const auto& h : parc.pencil.members) members.push_back(point_to_json(h.dual()));
    return json{{"field", field_to_json(f)},
                {"ambient_dim", parc.r},
                {"points", points},
                {"pencil", json{{"center", center}, {"members", members}}},
                {"profile", parc.profile}};
}

PencilArc parc_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    int r = j.at("ambient_dim").get<int>();
    std::vector<ProjectivePoint> points;
    for (const auto& pj : j.at("points")) points.push_back(point_from_json(pj, f));
    std::vector<FVector> center_basis;
    for (const auto& bj : j.at("pencil").at("center")) center_basis.emplace_back(f, repr_list(bj));
    Pencil pencil;
    pencil.center = Subspace(std::move(center_basis));
    for (const auto& mj : j.at("pencil").at("members"))
        pencil.members.emplace_back(point_from_json(mj, f));
    PencilArc parc = make_parc(std::move(points), std::move(pencil), r);
    if (j.contains("profile") && j.at("profile").get<std::vector<int>>() != parc.profile)
        raise(Errc::BadInput, "stored profile disagrees with the point set");
    return parc;
}

json harc_to_json(const HierarchicalArc& harc, const FieldPtr& f) {
    json k1 = json::array(), k2 = json::array();
    for (const auto& p : harc.k1_points) k1.push_back(point_to_json(p));
    for (const auto& p : harc.k2_points) k2.push_back(point_to_json(p));
    return json{{"field", field_to_json(f)},
                {"ambient_dim", harc.r},
                {"k1_points", k1},
                {"k2_points", k2},
                {"psi", point_to_json(harc.psi.dual())}};
}

HierarchicalArc harc_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    int r = j.at("ambient_dim").get<int>();
    std::vector<ProjectivePoint> k1, k2;
    for (const auto& pj : j.at("k1_points")) k1.push_back(point_from_json(pj, f));
    for (const auto& pj : j.at("k2_points")) k2.push_back(point_from_json(pj, f));
    Hyperplane psi(point_from_json(j.at("psi"), f));
    return make_harc(std::move(k1), std::move(k2), std::move(psi), r);
}

json ambiguity_to_json(const AmbiguitySet& a) {
    json counts = json::object();
    for (size_t k = 0; k < a.key_counts.size(); ++k)
        counts[std::to_string(k)] = a.key_counts[k];
    return json{{"matching_rules", a.matching_rows}, {"key_counts", counts}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::BadInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(Errc::BadInput, "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) raise(Errc::BadInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) raise(Errc::BadInput, "cannot write " + path);
    out << text;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::BadInput, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace arcshare
