#include "arcshare/projective.hpp"

#include <algorithm>

namespace arcshare {

ProjectivePoint::ProjectivePoint(FVector v) : coords_(std::move(v)) {
    size_t lead = 0;
    while (lead < coords_.size() && coords_.r(lead) == 0) ++lead;
    if (lead == coords_.size()) raise(Errc::ZeroVector, "projective point");
    if (coords_.r(lead) != 1) raise(Errc::BadInput, "point representative not canonical");
}

ProjectivePoint normalize(const FVector& v) {
    size_t lead = 0;
    while (lead < v.size() && v.r(lead) == 0) ++lead;
    if (lead == v.size()) raise(Errc::ZeroVector, "normalize");
    uint32_t c = v.field()->inv(v.r(lead));
    return ProjectivePoint(scale(v, c));
}

std::vector<ProjectivePoint> enumerate_points(int r, const FieldPtr& field) {
    uint32_t q = field->q();
    size_t len = static_cast<size_t>(r) + 1;
    std::vector<ProjectivePoint> out;
    // first non-zero coordinate = 1 selects one representative per class;
    // iterating the coordinate tuple lexicographically fixes the order
    std::vector<uint32_t> coords(len, 0);
    for (size_t lead = 0; lead < len; ++lead) {
        std::fill(coords.begin(), coords.end(), 0);
        coords[lead] = 1;
        size_t free_positions = len - lead - 1;
        uint64_t count = 1;
        for (size_t i = 0; i < free_positions; ++i) count *= q;
        for (uint64_t idx = 0; idx < count; ++idx) {
            uint64_t rest = idx;
            for (size_t i = 0; i < free_positions; ++i) {
                size_t pos = len - 1 - i; // least significant digit at the tail
                coords[pos] = static_cast<uint32_t>(rest % q);
                rest /= q;
            }
            out.emplace_back(FVector(field, coords));
        }
    }
    return out;
}

bool t_independent_relaxed(const std::vector<ProjectivePoint>& points, int t) {
    if (static_cast<int>(points.size()) < t) return true;
    std::vector<FVector> vecs;
    vecs.reserve(points.size());
    for (const auto& p : points) vecs.push_back(p.coords());
    return for_each_subset(points.size(), static_cast<size_t>(t), [&](const std::vector<size_t>& idx) {
        std::vector<FVector> sel;
        sel.reserve(idx.size());
        for (size_t i : idx) sel.push_back(vecs[i]);
        return is_independent(sel);
    });
}

bool is_t_independent_set(const std::vector<ProjectivePoint>& points, int t) {
    if (static_cast<int>(points.size()) < t)
        raise(Errc::TooFewPoints, "need at least t points");
    return t_independent_relaxed(points, t);
}

bool is_arc(const std::vector<ProjectivePoint>& points, int r) {
    if (static_cast<int>(points.size()) < r + 1)
        raise(Errc::TooFewPoints, "arc needs at least r+1 points");
    return t_independent_relaxed(points, r + 1);
}

Subspace::Subspace(std::vector<FVector> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) raise(Errc::BadInput, "empty subspace basis");
    if (!is_independent(basis_)) raise(Errc::BadInput, "subspace basis dependent");
}

Subspace Subspace::spanned_by(const std::vector<ProjectivePoint>& pts) {
    if (pts.empty()) raise(Errc::BadInput, "span of no points");
    std::vector<FVector> basis;
    for (const auto& p : pts)
        if (!in_span(p.coords(), basis)) basis.push_back(p.coords());
    return Subspace(std::move(basis));
}

bool Subspace::contains(const ProjectivePoint& p) const {
    return in_span(p.coords(), basis_);
}

bool Hyperplane::contains(const ProjectivePoint& p) const {
    return dot(dual_.coords(), p.coords()).is_zero();
}

Subspace Hyperplane::as_subspace() const {
    FMatrix m = FMatrix::from_rows({dual_.coords()});
    return Subspace(nullspace(m));
}

Hyperplane dual_of_hyperplane(const Subspace& s) {
    FMatrix m = FMatrix::from_rows(s.basis());
    std::vector<FVector> duals = nullspace(m);
    if (duals.size() != 1) raise(Errc::BadDimension, "subspace is not a hyperplane");
    return Hyperplane(normalize(duals[0]));
}

Pencil pencil_through(const Subspace& center, int r, const FieldPtr& field) {
    if (center.proj_dim() != r - 2)
        raise(Errc::BadDimension, "pencil center must have projective dimension r-2");
    if (center.basis()[0].size() != static_cast<size_t>(r) + 1)
        raise(Errc::BadDimension, "center lives in the wrong space");
    FMatrix m = FMatrix::from_rows(center.basis());
    std::vector<FVector> duals = nullspace(m); // 2-dimensional
    if (duals.size() != 2) raise(Errc::BadDimension, "pencil dual space is not a line");

    Pencil out;
    out.center = center;
    out.members.emplace_back(normalize(duals[1]));
    for (uint32_t c = 0; c < field->q(); ++c)
        out.members.emplace_back(normalize(add(duals[0], scale(duals[1], c))));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

FVector cross(const FVector& a, const FVector& b) {
    if (a.size() != 3 || b.size() != 3) raise(Errc::DimensionMismatch, "cross");
    require_same_field(a.field(), b.field(), "cross");
    const Field& f = *a.field();
    auto det2 = [&](uint32_t x, uint32_t y, uint32_t z, uint32_t w) {
        return f.sub(f.mul(x, w), f.mul(y, z));
    };
    return FVector(a.field(), {det2(a.r(1), a.r(2), b.r(1), b.r(2)),
                               f.neg(det2(a.r(0), a.r(2), b.r(0), b.r(2))),
                               det2(a.r(0), a.r(1), b.r(0), b.r(1))});
}

PlaneGeometry::PlaneGeometry(FieldPtr field) : field_(std::move(field)) {
    points_ = enumerate_points(2, field_);
    for (size_t i = 0; i < points_.size(); ++i)
        point_index_[points_[i].coords().coords()] = static_cast<int>(i);
    for (size_t i = 0; i < points_.size(); ++i) {
        lines_.emplace_back(points_[i]); // self-dual coordinatization
        line_index_[points_[i].coords().coords()] = static_cast<int>(i);
    }
    line_points_.assign(lines_.size(), {});
    point_lines_.assign(points_.size(), {});
    for (size_t l = 0; l < lines_.size(); ++l)
        for (size_t p = 0; p < points_.size(); ++p)
            if (lines_[l].contains(points_[p])) {
                line_points_[l].push_back(static_cast<int>(p));
                point_lines_[p].push_back(static_cast<int>(l));
            }
}

int PlaneGeometry::point_id(const ProjectivePoint& p) const {
    auto it = point_index_.find(p.coords().coords());
    if (it == point_index_.end()) raise(Errc::BadIndex, "unknown point");
    return it->second;
}

int PlaneGeometry::line_id(const Hyperplane& l) const {
    auto it = line_index_.find(l.dual().coords().coords());
    if (it == line_index_.end()) raise(Errc::BadIndex, "unknown line");
    return it->second;
}

int PlaneGeometry::line_through(int p1, int p2) const {
    FVector n = cross(points_[p1].coords(), points_[p2].coords());
    if (n.is_zero()) raise(Errc::BadInput, "line through equal points");
    auto it = line_index_.find(normalize(n).coords().coords());
    return it->second;
}

int PlaneGeometry::meet(int l1, int l2) const {
    FVector x = cross(lines_[l1].dual().coords(), lines_[l2].dual().coords());
    if (x.is_zero()) raise(Errc::BadInput, "meet of equal lines");
    auto it = point_index_.find(normalize(x).coords().coords());
    return it->second;
}

bool PlaneGeometry::incident(int point, int line) const {
    return lines_[line].contains(points_[point]);
}

} // namespace arcshare
