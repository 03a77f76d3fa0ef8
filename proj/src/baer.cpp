#include "arcshare/baer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arcshare {

namespace {

uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

bool contains_sorted(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

FMatrix inverse3(const FMatrix& m) {
    std::vector<FVector> cols;
    for (size_t i = 0; i < m.cols(); ++i) {
        std::vector<uint32_t> e(m.rows(), 0);
        e[i] = 1;
        SolveResult r = solve_unique(m, FVector(m.field(), std::move(e)));
        if (r.status != SolveStatus::Unique) raise(Errc::BadInput, "matrix not invertible");
        cols.push_back(r.x);
    }
    return FMatrix::from_cols(cols);
}

} // namespace

bool IncidencePlane::collinear(int a, int b, int c) const {
    for (const auto& line : lines)
        if (contains_sorted(line, a) && contains_sorted(line, b) && contains_sorted(line, c))
            return true;
    return false;
}

bool IncidencePlane::is_arc(const std::vector<int>& ids) const {
    for (const auto& line : lines) {
        int hits = 0;
        for (int id : ids)
            if (contains_sorted(line, id) && ++hits > 2) return false;
    }
    return true;
}

int IncidencePlane::line_through(int a, int b) const {
    for (size_t i = 0; i < lines.size(); ++i)
        if (contains_sorted(lines[i], a) && contains_sorted(lines[i], b))
            return static_cast<int>(i);
    raise(Errc::BadIndex, "no common line");
}

namespace {

void verify_plane_common(const IncidencePlane& plane, size_t expect_points, size_t expect_lines,
                         size_t line_size, const char* kind) {
    if (static_cast<size_t>(plane.n_points) != expect_points ||
        plane.lines.size() != expect_lines)
        raise(Errc::VerificationFailed, std::string(kind) + ": point/line count");
    std::set<uint64_t> joined;
    for (const auto& line : plane.lines) {
        if (line.size() != line_size)
            raise(Errc::VerificationFailed, std::string(kind) + ": line size");
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j)
                if (!joined.insert(pair_key(line[i], line[j])).second)
                    raise(Errc::VerificationFailed, std::string(kind) + ": pair on two lines");
    }
    size_t n = expect_points;
    if (joined.size() != n * (n - 1) / 2)
        raise(Errc::VerificationFailed, std::string(kind) + ": unjoined point pair");
}

} // namespace

void verify_affine_plane(const IncidencePlane& plane) {
    size_t q = plane.order;
    verify_plane_common(plane, q * q, q * (q + 1), q, "affine plane");
}

void verify_projective_plane(const IncidencePlane& plane) {
    size_t q = plane.order;
    verify_plane_common(plane, q * q + q + 1, q * q + q + 1, q + 1, "projective plane");
}

namespace {

std::vector<uint32_t> subfield_elements(const Field& f, uint32_t sub_q) {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < f.q(); ++x)
        if (f.pow(x, sub_q) == x) out.push_back(x);
    if (out.size() != sub_q)
        raise(Errc::VerificationFailed, "subfield has the wrong size");
    return out;
}

bool point_in_subfield(const ProjectivePoint& pt, const std::vector<bool>& in_sub) {
    for (uint32_t c : pt.coords().coords())
        if (!in_sub[c]) return false;
    return true;
}

} // namespace

BaerStructure baer_structure(uint32_t q, const BaerOptions& opt) {
    auto [p, e] = factor_prime_power(q);
    uint64_t q2 = static_cast<uint64_t>(q) * q;
    if (q2 > (1u << 16)) raise(Errc::UnsupportedOrder, "q^2 exceeds 2^16");

    FieldPtr f2 = Field::make(p, 2 * e);
    BaerStructure bs;
    bs.field = f2;
    bs.sub_q = q;
    bs.plane = PlaneGeometry(f2);
    const Field& f = *bs.field;
    const PlaneGeometry& plane = bs.plane;

    std::vector<uint32_t> sub_elems = subfield_elements(f, q);
    std::vector<bool> in_sub(f.q(), false);
    for (uint32_t x : sub_elems) in_sub[x] = true;

    for (size_t i = 0; i < plane.points().size(); ++i)
        if (point_in_subfield(plane.points()[i], in_sub))
            bs.subplane_points.push_back(static_cast<int>(i));
    if (bs.subplane_points.size() != q2 + q + 1)
        raise(Errc::VerificationFailed, "subfield subplane has the wrong size");

    // Baer property: every line meets the subplane in one or q+1 points
    auto subplane_section = [&](int line) {
        std::vector<int> out;
        for (int pt : plane.points_on_line(line))
            if (contains_sorted(bs.subplane_points, pt)) out.push_back(pt);
        return out;
    };
    std::vector<int> full_lines;
    for (size_t l = 0; l < plane.lines().size(); ++l) {
        size_t hits = subplane_section(static_cast<int>(l)).size();
        if (hits != 1 && hits != q + 1)
            raise(Errc::VerificationFailed, "line meets subplane in neither 1 nor q+1 points");
        if (hits == q + 1) full_lines.push_back(static_cast<int>(l));
    }
    if (opt.l_inf_index < 0 || opt.l_inf_index >= static_cast<int>(full_lines.size()))
        raise(Errc::BadIndex, "l_inf index out of range");
    bs.l_inf = full_lines[opt.l_inf_index];
    std::vector<int> l_inf_section = subplane_section(bs.l_inf);
    if (opt.center_index < 0 || opt.center_index >= static_cast<int>(l_inf_section.size()))
        raise(Errc::BadIndex, "center index out of range");
    bs.center_p = l_inf_section[opt.center_index];

    for (int l : plane.lines_through_point(bs.center_p)) {
        if (l == bs.l_inf) continue;
        if (subplane_section(l).size() == q + 1) bs.pencil_lines.push_back(l);
    }
    std::sort(bs.pencil_lines.begin(), bs.pencil_lines.end());
    if (bs.pencil_lines.size() != q)
        raise(Errc::VerificationFailed, "pencil of the subplane at P has the wrong size");

    // elations with axis l_inf and center P sweep out the disjoint family
    const FVector w = plane.lines()[bs.l_inf].dual().coords();
    const FVector v = plane.points()[bs.center_p].coords();
    auto elate_subplane = [&](uint32_t lambda) {
        std::vector<int> image;
        for (int pt : bs.subplane_points) {
            const FVector& x = plane.points()[pt].coords();
            uint32_t s = f.mul(lambda, dot(w, x).repr());
            image.push_back(plane.point_id(normalize(add(x, scale(v, s)))));
        }
        return sorted(std::move(image));
    };
    auto affine_of = [&](const std::vector<int>& pts) {
        std::vector<int> out;
        for (int pt : pts)
            if (!plane.incident(pt, bs.l_inf)) out.push_back(pt);
        return out;
    };

    for (uint32_t lambda = 0; lambda < f.q() && bs.baer_subplanes.size() < q; ++lambda) {
        std::vector<int> image = elate_subplane(lambda);
        std::vector<int> affine = affine_of(image);
        bool disjoint = true;
        for (const auto& other : bs.affine_parts) {
            std::vector<int> meet;
            std::set_intersection(affine.begin(), affine.end(), other.begin(), other.end(),
                                  std::back_inserter(meet));
            if (!meet.empty()) { disjoint = false; break; }
        }
        if (!disjoint) continue;
        bs.baer_subplanes.push_back(std::move(image));
        bs.affine_parts.push_back(std::move(affine));
    }
    if (bs.baer_subplanes.size() != q)
        raise(Errc::VerificationFailed, "could not find q disjoint affine Baer subplanes");

    for (const auto& sub : bs.baer_subplanes) {
        if (!contains_sorted(sub, bs.center_p))
            raise(Errc::VerificationFailed, "family subplane misses P");
        for (int l : bs.pencil_lines) {
            int hits = 0;
            for (int pt : plane.points_on_line(l))
                if (contains_sorted(sub, pt)) ++hits;
            if (hits != static_cast<int>(q) + 1)
                raise(Errc::VerificationFailed, "family subplane not full on a pencil line");
        }
    }

    std::set<int> lambda_point_set;
    for (int l : bs.pencil_lines)
        for (int pt : plane.points_on_line(l))
            if (pt != bs.center_p) lambda_point_set.insert(pt);
    bs.lambda_points.assign(lambda_point_set.begin(), lambda_point_set.end());
    {
        std::set<int> covered;
        for (const auto& aff : bs.affine_parts) covered.insert(aff.begin(), aff.end());
        if (covered != lambda_point_set)
            raise(Errc::VerificationFailed, "affine subplanes do not partition the pencil points");
    }

    // S: one segment per (pencil line, subplane) pair
    for (int l : bs.pencil_lines)
        for (const auto& sub : bs.baer_subplanes) {
            std::vector<int> seg;
            for (int pt : plane.points_on_line(l))
                if (pt != bs.center_p && contains_sorted(sub, pt)) seg.push_back(pt);
            if (seg.size() != q) raise(Errc::VerificationFailed, "segment has the wrong size");
            bs.segments.push_back(sorted(std::move(seg)));
            bs.segment_line.push_back(l);
        }

    // within-line segments: cosets of the q+1 one-dimensional subfield
    // subspaces in the affine parametrization u + y*v of each pencil line
    std::set<std::vector<int>> within_line_set;
    for (int l : bs.pencil_lines) {
        FVector u;
        for (int pt : plane.points_on_line(l))
            if (pt != bs.center_p) { u = plane.points()[pt].coords(); break; }
        std::map<uint32_t, int> point_of_y;
        std::set<int> distinct;
        for (uint32_t y = 0; y < f.q(); ++y) {
            int pid = plane.point_id(normalize(add(u, scale(v, y))));
            point_of_y[y] = pid;
            distinct.insert(pid);
        }
        if (distinct.size() != f.q() || distinct.count(bs.center_p))
            raise(Errc::VerificationFailed, "affine parametrization of a pencil line failed");
        std::set<std::vector<uint32_t>> directions;
        for (uint32_t mu = 1; mu < f.q(); ++mu) {
            std::vector<uint32_t> span;
            for (uint32_t s : sub_elems) span.push_back(f.mul(mu, s));
            directions.insert(sorted(std::move(span)));
        }
        if (directions.size() != q + 1)
            raise(Errc::VerificationFailed, "wrong number of segment directions");
        for (const auto& dir : directions) {
            std::vector<bool> used(f.q(), false);
            for (uint32_t y = 0; y < f.q(); ++y) {
                if (used[y]) continue;
                std::vector<int> seg;
                for (uint32_t d : dir) {
                    uint32_t z = f.add(y, d);
                    used[z] = true;
                    seg.push_back(point_of_y.at(z));
                }
                within_line_set.insert(sorted(std::move(seg)));
            }
        }
    }
    if (within_line_set.size() != static_cast<size_t>(q) * q * (q + 1))
        raise(Errc::VerificationFailed, "wrong number of within-line segments");

    // transversal segments: one per line of the plane avoiding P
    std::vector<std::vector<int>> transversal;
    for (size_t l = 0; l < plane.lines().size(); ++l) {
        if (plane.incident(bs.center_p, static_cast<int>(l))) continue;
        std::vector<int> seg;
        for (int pl : bs.pencil_lines) seg.push_back(plane.meet(static_cast<int>(l), pl));
        transversal.push_back(sorted(std::move(seg)));
    }

    bs.lambda_lines.assign(within_line_set.begin(), within_line_set.end());
    bs.lambda_lines.insert(bs.lambda_lines.end(), transversal.begin(), transversal.end());

    // Lambda must be a linear space: every point pair on exactly one line
    std::map<uint64_t, int> pair_line;
    for (size_t i = 0; i < bs.lambda_lines.size(); ++i)
        for (size_t a = 0; a < bs.lambda_lines[i].size(); ++a)
            for (size_t b = a + 1; b < bs.lambda_lines[i].size(); ++b) {
                auto [it, inserted] =
                    pair_line.emplace(pair_key(bs.lambda_lines[i][a], bs.lambda_lines[i][b]),
                                      static_cast<int>(i));
                if (!inserted)
                    raise(Errc::VerificationFailed, "two Lambda lines share a point pair");
            }
    size_t n_lambda = bs.lambda_points.size();
    if (n_lambda != static_cast<size_t>(q) * q * q ||
        pair_line.size() != n_lambda * (n_lambda - 1) / 2)
        raise(Errc::VerificationFailed, "Lambda is not a linear space on q^3 points");

    // each Theta_i = (l_i minus P, its within-line segments) is an affine plane
    for (int l : bs.pencil_lines) {
        std::map<int, int> reindex;
        for (int pt : plane.points_on_line(l))
            if (pt != bs.center_p) {
                int id = static_cast<int>(reindex.size());
                reindex.emplace(pt, id);
            }
        IncidencePlane theta_i;
        theta_i.order = q;
        theta_i.n_points = static_cast<int>(reindex.size());
        for (const auto& seg : within_line_set)
            if (reindex.count(seg[0])) {
                std::vector<int> line;
                for (int pt : seg) line.push_back(reindex.at(pt));
                theta_i.lines.push_back(sorted(std::move(line)));
            }
        verify_affine_plane(theta_i);
    }

    // S is a parallel class: all lines of Lambda, disjoint, covering
    {
        std::set<int> covered;
        for (const auto& seg : bs.segments) {
            if (!within_line_set.count(seg))
                raise(Errc::VerificationFailed, "S segment is not a Lambda line");
            for (int pt : seg)
                if (!covered.insert(pt).second)
                    raise(Errc::VerificationFailed, "S segments overlap");
        }
        if (covered.size() != n_lambda)
            raise(Errc::VerificationFailed, "S does not cover Lambda");
    }

    // Theta(S): the plane of Lambda through two of its (parallel) segments
    // is the union of all lines joining them; each such plane carries
    // exactly q segments of S and becomes a line of Theta(S)
    std::set<std::vector<int>> planes_of_lambda;
    for (size_t s1 = 0; s1 < bs.segments.size(); ++s1)
        for (size_t s2 = s1 + 1; s2 < bs.segments.size(); ++s2) {
            std::set<int> flat;
            for (int u : bs.segments[s1])
                for (int u2 : bs.segments[s2]) {
                    const auto& join = bs.lambda_lines[pair_line.at(pair_key(u, u2))];
                    flat.insert(join.begin(), join.end());
                }
            if (flat.size() != q2)
                raise(Errc::VerificationFailed, "parallel segments failed to span a plane");
            planes_of_lambda.insert(std::vector<int>(flat.begin(), flat.end()));
        }

    bs.theta.order = q;
    bs.theta.projective = false;
    bs.theta.n_points = static_cast<int>(bs.segments.size());
    for (const auto& flat : planes_of_lambda) {
        std::vector<int> line;
        for (size_t s = 0; s < bs.segments.size(); ++s) {
            bool inside = true;
            for (int pt : bs.segments[s])
                if (!contains_sorted(flat, pt)) { inside = false; break; }
            if (inside) line.push_back(static_cast<int>(s));
        }
        if (line.size() != q)
            raise(Errc::VerificationFailed, "Lambda plane does not carry q segments");
        bs.theta.lines.push_back(std::move(line));
    }
    std::sort(bs.theta.lines.begin(), bs.theta.lines.end());
    verify_affine_plane(bs.theta);

    bs.theta_line_pencil.assign(bs.theta.lines.size(), -1);
    for (size_t i = 0; i < bs.theta.lines.size(); ++i) {
        int first_line = bs.segment_line[bs.theta.lines[i][0]];
        bool all_same = true;
        for (int s : bs.theta.lines[i])
            if (bs.segment_line[s] != first_line) { all_same = false; break; }
        if (all_same) bs.theta_line_pencil[i] = first_line;
    }

    // Theta*(S): section lines concur at P; every other line determines a
    // common infinite segment on l_inf through the joining lines of Pi
    std::map<std::vector<int>, int> g_index;
    std::vector<int> line_infinite_point(bs.theta.lines.size(), -1);
    for (size_t i = 0; i < bs.theta.lines.size(); ++i) {
        if (bs.theta_line_pencil[i] >= 0) continue;
        std::set<std::vector<int>> g_candidates;
        const auto& segs = bs.theta.lines[i];
        for (size_t a = 0; a < segs.size(); ++a)
            for (size_t b = a + 1; b < segs.size(); ++b) {
                if (bs.segment_line[segs[a]] == bs.segment_line[segs[b]]) continue;
                std::set<int> dirs;
                for (int u : bs.segments[segs[a]])
                    for (int u2 : bs.segments[segs[b]])
                        dirs.insert(plane.meet(plane.line_through(u, u2), bs.l_inf));
                g_candidates.insert(std::vector<int>(dirs.begin(), dirs.end()));
            }
        if (g_candidates.size() != 1 || g_candidates.begin()->size() != q)
            raise(Errc::VerificationFailed, "inconsistent infinite segment for a Theta line");
        auto [it, ignored] =
            g_index.emplace(*g_candidates.begin(), static_cast<int>(g_index.size()));
        line_infinite_point[i] = it->second;
    }
    if (g_index.size() != q)
        raise(Errc::VerificationFailed, "expected q infinite segments");

    bs.g_segments.assign(q, {});
    for (const auto& [seg, idx] : g_index) bs.g_segments[idx] = seg;
    {
        std::set<int> covered;
        for (const auto& g : bs.g_segments)
            for (int pt : g)
                if (pt == bs.center_p || !covered.insert(pt).second)
                    raise(Errc::VerificationFailed, "infinite segments do not partition l_inf");
        if (covered.size() != q2)
            raise(Errc::VerificationFailed, "infinite segments miss part of l_inf");
    }

    bs.theta_star.order = q;
    bs.theta_star.projective = true;
    bs.theta_star.n_points = bs.theta.n_points + 1 + static_cast<int>(q);
    for (size_t i = 0; i < bs.theta.lines.size(); ++i) {
        std::vector<int> line = bs.theta.lines[i];
        line.push_back(bs.theta_line_pencil[i] >= 0 ? bs.theta_star_p()
                                                    : bs.theta_star_g(line_infinite_point[i]));
        bs.theta_star.lines.push_back(sorted(std::move(line)));
    }
    std::vector<int> infinite_line{bs.theta_star_p()};
    for (uint32_t j = 0; j < q; ++j) infinite_line.push_back(bs.theta_star_g(static_cast<int>(j)));
    bs.theta_star.lines.push_back(sorted(std::move(infinite_line)));
    std::sort(bs.theta_star.lines.begin(), bs.theta_star.lines.end());
    verify_projective_plane(bs.theta_star);

    return bs;
}

namespace {

PencilArc expand_points(const std::vector<ProjectivePoint>& pts, const BaerStructure& bs) {
    Subspace center({bs.plane.points()[bs.center_p].coords()});
    Pencil pencil = pencil_through(center, 2, bs.field);
    return make_parc(pts, std::move(pencil), 2);
}

} // namespace

PencilArc expand_arc_to_parc(const std::vector<int>& theta_arc, const BaerStructure& bs) {
    for (int id : theta_arc)
        if (id < 0 || id >= bs.theta.n_points) raise(Errc::BadIndex, "segment index");
    if (!bs.theta.is_arc(theta_arc)) raise(Errc::NotAnArc, "segments are not an arc of Theta(S)");
    std::vector<ProjectivePoint> pts;
    for (int id : theta_arc)
        for (int pt : bs.segments[id]) pts.push_back(bs.plane.points()[pt]);
    return expand_points(pts, bs);
}

PencilArc expand_star_arc_to_parc(const std::vector<int>& theta_star_arc, const BaerStructure& bs) {
    for (int id : theta_star_arc) {
        if (id < 0 || id >= bs.theta_star.n_points) raise(Errc::BadIndex, "point index");
        if (id == bs.theta_star_p())
            raise(Errc::NotAnArc, "the pencil center cannot be part of an expanded arc");
    }
    if (!bs.theta_star.is_arc(theta_star_arc))
        raise(Errc::NotAnArc, "points are not an arc of Theta*(S)");
    std::vector<ProjectivePoint> pts;
    for (int id : theta_star_arc) {
        const std::vector<int>& seg =
            id < bs.theta.n_points ? bs.segments[id] : bs.g_segments[id - bs.theta.n_points - 1];
        for (int pt : seg) pts.push_back(bs.plane.points()[pt]);
    }
    return expand_points(pts, bs);
}

namespace {

// Backtracking search for an arc of a derived plane with prescribed
// section counts against a point partition; the first hit in id order is
// the deterministic witness.
struct DerivedArcSearch {
    const IncidencePlane& plane;
    const std::vector<int>& class_of; // class per point, -1 = unconstrained
    std::vector<int> target_counts;   // per-class multiset, empty = none
    size_t k = 0;
    std::vector<int> excluded;

    std::vector<int> chosen;
    std::vector<int> counts;
    std::vector<int> found;

    bool matches_target() const {
        if (target_counts.empty()) return true;
        std::vector<int> a = counts, b = target_counts;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    bool arc_with(int next) const {
        for (size_t a = 0; a < chosen.size(); ++a)
            for (size_t b = a + 1; b < chosen.size(); ++b)
                if (plane.collinear(chosen[a], chosen[b], next)) return false;
        return true;
    }

    bool run(int start) {
        if (chosen.size() == k) {
            if (!matches_target()) return false;
            found = chosen;
            return true;
        }
        for (int pt = start; pt < plane.n_points; ++pt) {
            if (std::find(excluded.begin(), excluded.end(), pt) != excluded.end()) continue;
            int cls = pt < static_cast<int>(class_of.size()) ? class_of[pt] : -1;
            if (cls >= 0 && !target_counts.empty() &&
                counts[cls] >= *std::max_element(target_counts.begin(), target_counts.end()))
                continue;
            if (!arc_with(pt)) continue;
            chosen.push_back(pt);
            if (cls >= 0 && !counts.empty()) ++counts[cls];
            if (run(pt + 1)) return true;
            chosen.pop_back();
            if (cls >= 0 && !counts.empty()) --counts[cls];
        }
        return false;
    }
};

} // namespace

ConstructedParc construct_parc(const BaerStructure& bs, int variant) {
    const uint32_t q = bs.sub_q;
    const bool odd = q % 2 == 1;
    if (variant == 26 || variant == 27 || variant == 28) {
        if (!odd) raise(Errc::ParityMismatch, "variant needs odd q");
    } else if (variant == 31 || variant == 32) {
        if (odd) raise(Errc::ParityMismatch, "variant needs even q");
    } else {
        raise(Errc::BadInput, "variant must be one of 26,27,28,31,32");
    }

    if (variant == 31 || variant == 32) {
        // hyperoval search in Theta*(S); 31 pivots on P, 32 avoids it
        std::vector<int> class_of(bs.theta_star.n_points, -1);
        DerivedArcSearch search{bs.theta_star, class_of, {}, q + 2, {}, {}, {}, {}};
        if (variant == 31) {
            search.chosen.push_back(bs.theta_star_p());
        }
        search.excluded.push_back(bs.theta_star_p());
        if (!search.run(0)) raise(Errc::VerificationFailed, "no hyperoval found in Theta*(S)");
        std::vector<int> arc = search.found;
        if (variant == 31) arc.erase(std::find(arc.begin(), arc.end(), bs.theta_star_p()));
        PencilArc parc = expand_star_arc_to_parc(arc, bs);
        return {std::move(parc), std::move(arc), true};
    }

    // class = index of the pencil line carrying the segment
    std::vector<int> class_of(bs.theta.n_points, -1);
    for (int s = 0; s < bs.theta.n_points; ++s) {
        auto it = std::find(bs.pencil_lines.begin(), bs.pencil_lines.end(), bs.segment_line[s]);
        class_of[s] = static_cast<int>(it - bs.pencil_lines.begin());
    }

    std::vector<int> target(q, 0);
    size_t k = 0;
    if (variant == 26) { // two 1-sections, (q-1)/2 2-sections
        target[0] = target[1] = 1;
        for (uint32_t i = 0; i < (q - 1) / 2; ++i) target[2 + i] = 2;
        k = q + 1;
    } else if (variant == 27) { // (q+1)/2 2-sections
        for (uint32_t i = 0; i < (q + 1) / 2; ++i) target[i] = 2;
        k = q + 1;
    } else { // 28: every section once
        std::fill(target.begin(), target.end(), 1);
        k = q;
    }

    DerivedArcSearch search{bs.theta, class_of, std::move(target), k, {}, {}, {}, {}};
    search.counts.assign(q, 0);
    if (!search.run(0))
        raise(Errc::VerificationFailed, "no derived arc with the requested sections");
    PencilArc parc = expand_arc_to_parc(search.found, bs);
    return {std::move(parc), std::move(search.found), false};
}

ConstructedParc construct_parc(uint32_t q, int variant) {
    return construct_parc(baer_structure(q), variant);
}

HierarchicalArc construct_harc(const BaerStructure& bs) {
    const uint32_t q = bs.sub_q;
    const Field& f = *bs.field;
    const PlaneGeometry& plane = bs.plane;

    std::vector<uint32_t> sub_elems = subfield_elements(f, q);

    // standard conic of the subplane, nucleus added for even q
    std::vector<int> conic_ids;
    for (uint32_t t : sub_elems)
        conic_ids.push_back(plane.point_id(normalize(FVector(bs.field, {1, t, f.mul(t, t)}))));
    conic_ids.push_back(plane.point_id(normalize(FVector(bs.field, {0, 0, 1}))));
    if (f.p() == 2) conic_ids.push_back(plane.point_id(normalize(FVector(bs.field, {0, 1, 0}))));
    conic_ids = sorted(std::move(conic_ids));

    auto is_subplane_line = [&](int l) {
        int hits = 0;
        for (int pt : plane.points_on_line(l))
            if (contains_sorted(bs.subplane_points, pt)) ++hits;
        return hits == static_cast<int>(q) + 1;
    };

    int external = -1;
    for (size_t l = 0; l < plane.lines().size(); ++l) {
        if (!is_subplane_line(static_cast<int>(l))) continue;
        bool misses = true;
        for (int pt : conic_ids)
            if (plane.incident(pt, static_cast<int>(l))) { misses = false; break; }
        if (misses) { external = static_cast<int>(l); break; }
    }
    if (external < 0) raise(Errc::NoExternalLine, "the subplane arc has no external line");

    std::vector<int> k1_ids = conic_ids;
    if (external != bs.l_inf) {
        // move the external line onto l_inf with a subplane collineation:
        // map a frame on `external` to a frame on l_inf
        auto subplane_points_on = [&](int l) {
            std::vector<int> out;
            for (int pt : plane.points_on_line(l))
                if (contains_sorted(bs.subplane_points, pt)) out.push_back(pt);
            return out;
        };
        auto off_line_point = [&](int l) -> int {
            for (int pt : bs.subplane_points)
                if (!plane.incident(pt, l)) return pt;
            raise(Errc::VerificationFailed, "no subplane point off the line");
        };
        std::vector<int> src = subplane_points_on(external);
        std::vector<int> dst = subplane_points_on(bs.l_inf);
        FMatrix m_src = FMatrix::from_cols({plane.points()[src[0]].coords(),
                                            plane.points()[src[1]].coords(),
                                            plane.points()[off_line_point(external)].coords()});
        FMatrix m_dst = FMatrix::from_cols({plane.points()[dst[0]].coords(),
                                            plane.points()[dst[1]].coords(),
                                            plane.points()[off_line_point(bs.l_inf)].coords()});
        FMatrix inv_src = inverse3(m_src);
        FMatrix t(bs.field, 3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                uint32_t acc = 0;
                for (size_t k = 0; k < 3; ++k)
                    acc = f.add(acc, f.mul(m_dst.r(i, k), inv_src.r(k, j)));
                t.set(i, j, acc);
            }
        k1_ids.clear();
        for (int pt : conic_ids)
            k1_ids.push_back(plane.point_id(normalize(mat_vec(t, plane.points()[pt].coords()))));
        k1_ids = sorted(std::move(k1_ids));
    }

    std::vector<ProjectivePoint> k1, k2;
    for (int pt : k1_ids) {
        if (!contains_sorted(bs.subplane_points, pt))
            raise(Errc::VerificationFailed, "K1 left the subplane");
        if (plane.incident(pt, bs.l_inf))
            raise(Errc::NoExternalLine, "K1 touches l_inf after the collineation");
        k1.push_back(plane.points()[pt]);
    }
    for (int pt : plane.points_on_line(bs.l_inf))
        if (!contains_sorted(bs.subplane_points, pt)) k2.push_back(plane.points()[pt]);

    return make_harc(std::move(k1), std::move(k2), plane.lines()[bs.l_inf], 2);
}

HierarchicalArc construct_harc(uint32_t q) {
    return construct_harc(baer_structure(q));
}

} // namespace arcshare
