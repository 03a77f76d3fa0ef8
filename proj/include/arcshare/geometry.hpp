#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcshare/projective.hpp"
#include "arcshare/scheme.hpp"

namespace arcshare {

// Pencil arc: points meeting each pencil member in an arc of the member,
// avoiding the pencil center, with every cross-member (r+1)-set
// independent. profile[i] = |K meet members[i]|, aligned with the pencil.
struct PencilArc {
    int r = 2;
    std::vector<ProjectivePoint> points;
    Pencil pencil;
    std::vector<int> profile;

    // nonzero profile values, descending member order as stored
    std::vector<int> nonzero_profile() const;
    // regular means all nonzero profile values equal
    bool regular() const;
};

// Hierarchical arc: a k1-arc off the hyperplane psi plus a k2-arc on it;
// (r+1)-sets not inside psi must be independent.
struct HierarchicalArc {
    int r = 2;
    std::vector<ProjectivePoint> k1_points;
    std::vector<ProjectivePoint> k2_points;
    Hyperplane psi;
};

// Outcome of a geometric condition check; on failure, `witness` holds the
// offending points and `condition` names the violated clause.
struct GeoCheck {
    bool ok = true;
    std::string condition;
    std::vector<ProjectivePoint> witness;
};

// Exhaustive check of the pencil arc conditions (section arcs, no point on
// two members, cross-member independence).
GeoCheck verify_parc(const std::vector<ProjectivePoint>& points, const Pencil& pencil, int r);

// Exhaustive check of the hierarchical arc conditions.
GeoCheck verify_harc(const std::vector<ProjectivePoint>& k1,
                     const std::vector<ProjectivePoint>& k2, const Hyperplane& psi, int r);

// Computes the profile and re-verifies; throws NotAnArc when the points do
// not form a pencil arc.
PencilArc make_parc(std::vector<ProjectivePoint> points, Pencil pencil, int r);

HierarchicalArc make_harc(std::vector<ProjectivePoint> k1, std::vector<ProjectivePoint> k2,
                          Hyperplane psi, int r);

// The conic {(1,t,t^2)} plus (0,0,1) in PG(2,q): a (q+1)-arc; for even q
// the nucleus (0,1,0) joins to give a (q+2)-arc.
std::vector<ProjectivePoint> conic_arc(const FieldPtr& field);

// Exhaustive maximum search with a fixed pencil center / fixed hyperplane
// (the collineation group is transitive on those choices); q <= 4.
struct ParcBoundResult {
    int max_size = 0;
    std::vector<ProjectivePoint> witness;
    Pencil pencil;
};
ParcBoundResult parc_bound_check(uint32_t q);

struct HarcBoundResult {
    int max_total = 0;
    int k1 = 0, k2 = 0;
    std::vector<ProjectivePoint> k1_witness, k2_witness;
    Hyperplane psi;
};
HarcBoundResult harc_bound_check(uint32_t q);

// Scheme extraction. The dealer takes the first canonical point of the
// group with the smallest non-zero section (lowest member index breaks
// ties); the rest of that section is discarded. Participants are grouped
// by pencil member, strength t = r+1.
struct ExtractedScheme {
    Scheme scheme;
    std::vector<std::vector<int>> groups; // participant indices per group
    ProjectivePoint dealer_point;
};

// dealer_choice overrides which point of the dealer group is used.
ExtractedScheme scheme_from_parc(const PencilArc& parc, int dealer_choice = 0);

// Hierarchical extraction: dealer = first canonical point of K1, upper
// group = rest of K1, lower group = K2, strength t = r+1.
ExtractedScheme scheme_from_harc(const HierarchicalArc& harc, int dealer_choice = 0);

} // namespace arcshare
