#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arcshare/linalg.hpp"
#include "arcshare/subsets.hpp"

namespace arcshare {

// Point of PG(r,q): canonical representative of a scalar class, normalized
// so the first non-zero coordinate is 1. Canonicity makes points directly
// comparable and hashable, so geometric sets are plain sorted containers.
class ProjectivePoint {
public:
    ProjectivePoint() = default;
    // v must already be canonical; use normalize() for arbitrary vectors.
    explicit ProjectivePoint(FVector v);

    const FVector& coords() const { return coords_; }
    const FieldPtr& field() const { return coords_.field(); }
    int dim() const { return static_cast<int>(coords_.size()) - 1; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ < b.coords_;
    }

private:
    FVector coords_;
};

// Scales v so its leading non-zero coordinate is 1. Throws ZeroVector.
ProjectivePoint normalize(const FVector& v);

// All (q^(r+1)-1)/(q-1) canonical points in a fixed deterministic order:
// grouped by the position of the leading 1, tail coordinates ascending.
std::vector<ProjectivePoint> enumerate_points(int r, const FieldPtr& field);

// True iff every t-subset of points has independent coordinate vectors.
// Requires |points| >= t (TooFewPoints).
bool is_t_independent_set(const std::vector<ProjectivePoint>& points, int t);

// Same check but vacuously true for fewer than t points; the arc
// conditions on hyperplane sections need this relaxation.
bool t_independent_relaxed(const std::vector<ProjectivePoint>& points, int t);

// k-arc test in PG(r,q): (r+1)-independence. Requires |points| >= r+1.
bool is_arc(const std::vector<ProjectivePoint>& points, int r);

// Projective subspace stored by an independent basis of representatives;
// projective dimension = |basis| - 1.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::vector<FVector> basis);
    static Subspace spanned_by(const std::vector<ProjectivePoint>& pts);

    const std::vector<FVector>& basis() const { return basis_; }
    int proj_dim() const { return static_cast<int>(basis_.size()) - 1; }
    bool contains(const ProjectivePoint& p) const;

private:
    std::vector<FVector> basis_;
};

// Hyperplane as a normalized dual vector: x lies on it iff dual . x = 0.
class Hyperplane {
public:
    Hyperplane() = default;
    explicit Hyperplane(ProjectivePoint dual) : dual_(std::move(dual)) {}

    const ProjectivePoint& dual() const { return dual_; }
    bool contains(const ProjectivePoint& p) const;
    Subspace as_subspace() const;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.dual_ == b.dual_;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        return a.dual_ < b.dual_;
    }

private:
    ProjectivePoint dual_;
};

// Dual vector of the hyperplane spanned by an (r-1)-dimensional subspace.
Hyperplane dual_of_hyperplane(const Subspace& s);

// The q+1 hyperplanes through a common codimension-2 center.
struct Pencil {
    Subspace center;
    std::vector<Hyperplane> members;
};

// center must have projective dimension r-2 (BadDimension otherwise).
Pencil pencil_through(const Subspace& center, int r, const FieldPtr& field);

// Cross product in GF(q)^3; spans the line through two plane points and
// dually the meet of two lines.
FVector cross(const FVector& a, const FVector& b);

// Fully materialized PG(2,q): point and line tables with incidence lists.
// Orders up to 2^8 stay tiny; everything downstream works on integer ids.
class PlaneGeometry {
public:
    PlaneGeometry() = default;
    explicit PlaneGeometry(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    uint32_t order() const { return field_->q(); }

    const std::vector<ProjectivePoint>& points() const { return points_; }
    const std::vector<Hyperplane>& lines() const { return lines_; }

    int point_id(const ProjectivePoint& p) const;
    int line_id(const Hyperplane& l) const;

    const std::vector<int>& points_on_line(int line) const { return line_points_[line]; }
    const std::vector<int>& lines_through_point(int point) const { return point_lines_[point]; }

    int line_through(int p1, int p2) const;  // p1 != p2
    int meet(int l1, int l2) const;          // l1 != l2
    bool incident(int point, int line) const;

private:
    FieldPtr field_;
    std::vector<ProjectivePoint> points_;
    std::vector<Hyperplane> lines_;
    std::map<std::vector<uint32_t>, int> point_index_;
    std::map<std::vector<uint32_t>, int> line_index_;
    std::vector<std::vector<int>> line_points_;
    std::vector<std::vector<int>> point_lines_;
};

} // namespace arcshare
