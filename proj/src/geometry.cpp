#include "arcshare/geometry.hpp"

#include <algorithm>
#include <set>

namespace arcshare {

namespace {

void validate_pencil(const Pencil& pencil, int r, const FieldPtr& field) {
    if (pencil.center.proj_dim() != r - 2)
        raise(Errc::BadDimension, "pencil center dimension");
    if (pencil.members.size() != field->q() + 1)
        raise(Errc::BadDimension, "pencil must have q+1 members");
    std::set<Hyperplane> distinct(pencil.members.begin(), pencil.members.end());
    if (distinct.size() != pencil.members.size())
        raise(Errc::BadDimension, "pencil members not distinct");
    for (const auto& h : pencil.members)
        for (const auto& b : pencil.center.basis())
            if (!dot(h.dual().coords(), b).is_zero())
                raise(Errc::BadDimension, "pencil member misses the center");
}

std::vector<ProjectivePoint> sorted_unique(std::vector<ProjectivePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

std::vector<int> PencilArc::nonzero_profile() const {
    std::vector<int> out;
    for (int h : profile)
        if (h > 0) out.push_back(h);
    return out;
}

bool PencilArc::regular() const {
    std::vector<int> nz = nonzero_profile();
    return !nz.empty() && std::all_of(nz.begin(), nz.end(), [&](int h) { return h == nz[0]; });
}

GeoCheck verify_parc(const std::vector<ProjectivePoint>& points, const Pencil& pencil, int r) {
    if (points.empty()) return {true, "", {}};
    const FieldPtr& field = points[0].field();
    validate_pencil(pencil, r, field);

    // (12): no point of K on two members (equivalently, K avoids the center)
    for (const auto& p : points) {
        int on = 0;
        for (const auto& h : pencil.members)
            if (h.contains(p)) ++on;
        if (on > 1) return {false, "(12)", {p}};
    }

    // (11): each section K meet member is an arc of the member
    for (const auto& h : pencil.members) {
        std::vector<ProjectivePoint> section;
        for (const auto& p : points)
            if (h.contains(p)) section.push_back(p);
        if (!t_independent_relaxed(section, r)) return {false, "(11)", section};
    }

    // (13): cross-member (r+1)-sets are independent
    GeoCheck out;
    for_each_subset(points.size(), static_cast<size_t>(r) + 1, [&](const std::vector<size_t>& idx) {
        std::vector<ProjectivePoint> sel;
        for (size_t i : idx) sel.push_back(points[i]);
        for (const auto& h : pencil.members) {
            bool all_on = true;
            for (const auto& p : sel)
                if (!h.contains(p)) { all_on = false; break; }
            if (all_on) return true; // inside one member: exempt
        }
        std::vector<FVector> vecs;
        for (const auto& p : sel) vecs.push_back(p.coords());
        if (!is_independent(vecs)) {
            out = {false, "(13)", sel};
            return false;
        }
        return true;
    });
    return out;
}

GeoCheck verify_harc(const std::vector<ProjectivePoint>& k1,
                     const std::vector<ProjectivePoint>& k2, const Hyperplane& psi, int r) {
    for (const auto& p : k1)
        if (psi.contains(p)) return {false, "(14)", {p}}; // K1 must avoid psi
    for (const auto& p : k2)
        if (!psi.contains(p)) return {false, "(15)", {p}};

    if (!t_independent_relaxed(k1, r + 1)) return {false, "(14)", k1};
    if (!t_independent_relaxed(k2, r)) return {false, "(15)", k2};

    std::vector<ProjectivePoint> all = k1;
    all.insert(all.end(), k2.begin(), k2.end());

    GeoCheck out;
    for_each_subset(all.size(), static_cast<size_t>(r) + 1, [&](const std::vector<size_t>& idx) {
        std::vector<ProjectivePoint> sel;
        bool inside_psi = true;
        for (size_t i : idx) {
            sel.push_back(all[i]);
            if (!psi.contains(all[i])) inside_psi = false;
        }
        if (inside_psi) return true; // (16) only constrains sets leaving psi
        std::vector<FVector> vecs;
        for (const auto& p : sel) vecs.push_back(p.coords());
        if (!is_independent(vecs)) {
            out = {false, "(16)", sel};
            return false;
        }
        return true;
    });
    return out;
}

PencilArc make_parc(std::vector<ProjectivePoint> points, Pencil pencil, int r) {
    points = sorted_unique(std::move(points));
    GeoCheck check = verify_parc(points, pencil, r);
    if (!check.ok)
        raise(Errc::NotAnArc, "pencil arc condition " + check.condition + " violated");
    PencilArc parc;
    parc.r = r;
    parc.points = std::move(points);
    parc.profile.assign(pencil.members.size(), 0);
    for (size_t i = 0; i < pencil.members.size(); ++i)
        for (const auto& p : parc.points)
            if (pencil.members[i].contains(p)) ++parc.profile[i];
    parc.pencil = std::move(pencil);
    return parc;
}

HierarchicalArc make_harc(std::vector<ProjectivePoint> k1, std::vector<ProjectivePoint> k2,
                          Hyperplane psi, int r) {
    k1 = sorted_unique(std::move(k1));
    k2 = sorted_unique(std::move(k2));
    GeoCheck check = verify_harc(k1, k2, psi, r);
    if (!check.ok)
        raise(Errc::NotAnArc, "hierarchical arc condition " + check.condition + " violated");
    return HierarchicalArc{r, std::move(k1), std::move(k2), std::move(psi)};
}

std::vector<ProjectivePoint> conic_arc(const FieldPtr& field) {
    const Field& f = *field;
    std::vector<ProjectivePoint> out;
    for (uint32_t t = 0; t < f.q(); ++t)
        out.push_back(normalize(FVector(field, {1, t, f.mul(t, t)})));
    out.push_back(normalize(FVector(field, {0, 0, 1})));
    if (f.p() == 2) out.push_back(normalize(FVector(field, {0, 1, 0}))); // nucleus
    return out;
}

namespace {

// Shared DFS for the two bound searches. `candidates` are point ids,
// `admissible(chosen, next)` encodes the incremental conditions.
template <typename Admissible>
void max_set_dfs(const std::vector<int>& candidates, size_t start, std::vector<int>& chosen,
                 std::vector<int>& best, const Admissible& admissible) {
    if (chosen.size() > best.size()) best = chosen;
    if (chosen.size() + (candidates.size() - start) <= best.size()) return;
    for (size_t i = start; i < candidates.size(); ++i) {
        if (!admissible(chosen, candidates[i])) continue;
        chosen.push_back(candidates[i]);
        max_set_dfs(candidates, i + 1, chosen, best, admissible);
        chosen.pop_back();
    }
}

} // namespace

ParcBoundResult parc_bound_check(uint32_t q) {
    if (q > 4) raise(Errc::TooLarge, "parc bound search supports q <= 4");
    auto [p, n] = factor_prime_power(q);
    FieldPtr field = Field::make(p, n);
    PlaneGeometry plane(field);

    const int center = 0; // transitivity makes the center choice harmless
    std::vector<int> member_of(plane.points().size(), -1);
    for (int l : plane.lines_through_point(center))
        for (int pt : plane.points_on_line(l))
            if (pt != center) member_of[pt] = l;

    std::vector<int> candidates;
    for (size_t i = 0; i < plane.points().size(); ++i)
        if (static_cast<int>(i) != center) candidates.push_back(static_cast<int>(i));

    // adding `next` keeps (13): for any chosen pair on distinct members,
    // next must avoid their joining line; pairs on one member are exempt
    // only when next shares that member
    auto admissible = [&](const std::vector<int>& chosen, int next) {
        for (size_t a = 0; a < chosen.size(); ++a)
            for (size_t b = a + 1; b < chosen.size(); ++b) {
                bool same_member = member_of[chosen[a]] == member_of[chosen[b]];
                if (same_member && member_of[chosen[a]] == member_of[next]) continue;
                int join = plane.line_through(chosen[a], chosen[b]);
                if (plane.incident(next, join)) return false;
            }
        return true;
    };

    std::vector<int> chosen, best;
    max_set_dfs(candidates, 0, chosen, best, admissible);

    ParcBoundResult out;
    out.max_size = static_cast<int>(best.size());
    for (int id : best) out.witness.push_back(plane.points()[id]);
    out.pencil = pencil_through(Subspace({plane.points()[center].coords()}), 2, field);
    GeoCheck check = verify_parc(out.witness, out.pencil, 2);
    if (!check.ok) raise(Errc::VerificationFailed, "bound witness failed re-verification");
    return out;
}

HarcBoundResult harc_bound_check(uint32_t q) {
    if (q > 4) raise(Errc::TooLarge, "harc bound search supports q <= 4");
    auto [p, n] = factor_prime_power(q);
    FieldPtr field = Field::make(p, n);
    PlaneGeometry plane(field);

    const int psi_line = 0;
    std::vector<bool> on_psi(plane.points().size(), false);
    for (int pt : plane.points_on_line(psi_line)) on_psi[pt] = true;

    std::vector<int> candidates(plane.points().size());
    for (size_t i = 0; i < candidates.size(); ++i) candidates[i] = static_cast<int>(i);

    // (16) incrementally: any triple leaving psi must be independent;
    // triples inside psi are unconstrained, and (14)/(15) are the same
    // check restricted to K1 / psi sections
    auto admissible = [&](const std::vector<int>& chosen, int next) {
        for (size_t a = 0; a < chosen.size(); ++a)
            for (size_t b = a + 1; b < chosen.size(); ++b) {
                if (on_psi[chosen[a]] && on_psi[chosen[b]] && on_psi[next]) continue;
                int join = plane.line_through(chosen[a], chosen[b]);
                if (plane.incident(next, join)) return false;
            }
        return true;
    };

    std::vector<int> chosen, best;
    max_set_dfs(candidates, 0, chosen, best, admissible);

    HarcBoundResult out;
    out.psi = plane.lines()[psi_line];
    for (int id : best) {
        if (on_psi[id]) {
            out.k2_witness.push_back(plane.points()[id]);
        } else {
            out.k1_witness.push_back(plane.points()[id]);
        }
    }
    out.k1 = static_cast<int>(out.k1_witness.size());
    out.k2 = static_cast<int>(out.k2_witness.size());
    out.max_total = out.k1 + out.k2;
    GeoCheck check = verify_harc(out.k1_witness, out.k2_witness, out.psi, 2);
    if (!check.ok) raise(Errc::VerificationFailed, "bound witness failed re-verification");
    return out;
}

ExtractedScheme scheme_from_parc(const PencilArc& parc, int dealer_choice) {
    const int t = parc.r + 1;

    // sections per member, in member order; points sorted canonically
    std::vector<std::vector<ProjectivePoint>> sections(parc.pencil.members.size());
    for (size_t i = 0; i < parc.pencil.members.size(); ++i)
        for (const auto& p : parc.points)
            if (parc.pencil.members[i].contains(p)) sections[i].push_back(p);

    int dealer_member = -1, h0 = 0;
    for (size_t i = 0; i < sections.size(); ++i) {
        int h = static_cast<int>(sections[i].size());
        if (h == 0) continue;
        if (dealer_member < 0 || h < h0) { dealer_member = static_cast<int>(i); h0 = h; }
    }
    if (dealer_member < 0) raise(Errc::Degenerate, "pencil arc has no points");
    if (dealer_choice < 0 || dealer_choice >= h0)
        raise(Errc::BadIndex, "dealer choice outside the dealer group");

    ProjectivePoint dealer_point = sections[dealer_member][dealer_choice];
    std::vector<FVector> participants;
    std::vector<std::vector<int>> groups;
    for (size_t i = 0; i < sections.size(); ++i) {
        if (sections[i].empty() || static_cast<int>(i) == dealer_member) continue;
        std::vector<int> group;
        for (const auto& p : sections[i]) {
            group.push_back(static_cast<int>(participants.size()));
            participants.push_back(p.coords());
        }
        groups.push_back(std::move(group));
    }
    if (participants.empty()) raise(Errc::Degenerate, "no participants outside the dealer group");

    AccessStructure gamma = parallel_basis(groups, t);
    GeneratorMatrix gen(dealer_point.coords(), std::move(participants));
    Scheme scheme = make_scheme(std::move(gen), std::move(gamma), VerifyMode::Vector);
    if (!scheme.report.verdict)
        raise(Errc::VerificationFailed, "extracted parallel scheme failed verification");
    return {std::move(scheme), std::move(groups), std::move(dealer_point)};
}

ExtractedScheme scheme_from_harc(const HierarchicalArc& harc, int dealer_choice) {
    const int t = harc.r + 1;
    if (harc.k1_points.size() < 2)
        raise(Errc::Degenerate, "need k1 >= 2: the dealer leaves the upper group empty");
    if (dealer_choice < 0 || dealer_choice >= static_cast<int>(harc.k1_points.size()))
        raise(Errc::BadIndex, "dealer choice outside K1");

    ProjectivePoint dealer_point = harc.k1_points[dealer_choice];
    std::vector<FVector> participants;
    std::vector<int> upper, lower;
    for (size_t i = 0; i < harc.k1_points.size(); ++i) {
        if (static_cast<int>(i) == dealer_choice) continue;
        upper.push_back(static_cast<int>(participants.size()));
        participants.push_back(harc.k1_points[i].coords());
    }
    for (const auto& p : harc.k2_points) {
        lower.push_back(static_cast<int>(participants.size()));
        participants.push_back(p.coords());
    }

    AccessStructure gamma = hierarchical_basis(upper, lower, t);
    GeneratorMatrix gen(dealer_point.coords(), std::move(participants));
    Scheme scheme = make_scheme(std::move(gen), std::move(gamma), VerifyMode::Vector);
    if (!scheme.report.verdict)
        raise(Errc::VerificationFailed, "extracted hierarchical scheme failed verification");
    return {std::move(scheme), {upper, lower}, std::move(dealer_point)};
}

} // namespace arcshare
