#pragma once

#include <cstdint>
#include <vector>

#include "arcshare/geometry.hpp"

namespace arcshare {

// Abstract point/line incidence structure with integer point ids. Used for
// the derived planes: their "points" are affine segments, not points of
// the ambient plane.
struct IncidencePlane {
    uint32_t order = 0;
    bool projective = false;
    int n_points = 0;
    std::vector<std::vector<int>> lines; // sorted point ids

    bool collinear(int a, int b, int c) const;
    // every subset of the line set meets the ids in at most 2 points
    bool is_arc(const std::vector<int>& ids) const;
    int line_through(int a, int b) const; // unique common line
};

// Incidence axioms checked exhaustively: counts, line sizes, and a unique
// joining line per point pair. Throws VerificationFailed.
void verify_affine_plane(const IncidencePlane& plane);
void verify_projective_plane(const IncidencePlane& plane);

// The full derivation data of PG(2,q^2) with respect to its subfield Baer
// subplane: the canonical flag (l_inf, P), the pencil lines, the q
// mutually disjoint affine Baer subplanes, the parallel class S of affine
// segments, the ambient affine 3-space Lambda, and the derived planes
// Theta(S) (affine, order q) and Theta*(S) (projective, order q).
//
// Every incidence claim is re-verified during construction; nothing is
// trusted from theory alone.
struct BaerStructure {
    FieldPtr field;   // GF(q^2)
    uint32_t sub_q;   // q
    PlaneGeometry plane;

    std::vector<int> subplane_points; // sorted point ids of Pi'
    int l_inf = -1;                   // line id
    int center_p = -1;                // point id, on l_inf and in Pi'
    std::vector<int> pencil_lines;    // l_1..l_q, sorted line ids (l_inf excluded)

    std::vector<std::vector<int>> baer_subplanes; // A_1..A_q as projective point sets
    std::vector<std::vector<int>> affine_parts;   // their q^2 off-l_inf points

    std::vector<std::vector<int>> segments; // S: q^2 sorted point-id sets
    std::vector<int> segment_line;          // pencil line id per segment

    std::vector<int> lambda_points;               // q^3 ids
    std::vector<std::vector<int>> lambda_lines;   // within-line and transversal segments

    IncidencePlane theta;              // points = segment indices
    std::vector<int> theta_line_pencil; // pencil line id of a section line, else -1

    IncidencePlane theta_star;               // segments, then P, then G_1..G_q
    std::vector<std::vector<int>> g_segments; // infinite segments on l_inf

    int theta_star_p() const { return theta.n_points; }
    int theta_star_g(int j) const { return theta.n_points + 1 + j; }
};

// Overrides for the canonical flag: pick the i-th line of Pi meeting the
// subplane fully as l_inf, and the j-th subplane point on it as P. The
// defaults (0, 0) give the reproducible canonical structure.
struct BaerOptions {
    int l_inf_index = 0;
    int center_index = 0;
};

// q a prime power with q^2 <= 2^16 (UnsupportedOrder otherwise).
BaerStructure baer_structure(uint32_t q, const BaerOptions& opt = {});

// Expansion step: a k-arc of Theta(S) (given by segment indices) blows up
// to the kq points of its segments, a pencil arc with pencil centered at
// P. Throws NotAnArc when the ids are not an arc.
PencilArc expand_arc_to_parc(const std::vector<int>& theta_arc, const BaerStructure& bs);

// Same for arcs of Theta*(S); infinite points G_j contribute their l_inf
// segments. The center P must not be part of the arc.
PencilArc expand_star_arc_to_parc(const std::vector<int>& theta_star_arc, const BaerStructure& bs);

struct ConstructedParc {
    PencilArc parc;
    std::vector<int> derived_arc; // the witness arc in Theta(S) / Theta*(S)
    bool in_theta_star = false;
};

// The named pencil-arc families in PG(2,q^2):
//   26: profile (q, q, 2q x (q-1)/2)   [q odd]
//   27: regular ((q+1)/2, 2q)          [q odd]
//   28: regular (q, q)                 [q odd]
//   31: regular (q+1, q)               [q even]
//   32: regular ((q+2)/2, 2q)          [q even]
// The witness arc in the derived plane is found by exhaustive search with
// the prescribed section counts, then expanded and fully re-verified.
ConstructedParc construct_parc(const BaerStructure& bs, int variant);
ConstructedParc construct_parc(uint32_t q, int variant);

// Maximal-type hierarchical arc in PG(2,q^2): K1 = conic (q odd) or
// hyperoval (q even) inside the Baer subplane, positioned so the subplane
// line on l_inf is external to it; K2 = the q^2-q points of l_inf outside
// the subplane.
HierarchicalArc construct_harc(const BaerStructure& bs);
HierarchicalArc construct_harc(uint32_t q);

} // namespace arcshare
