#include "arcshare/linalg.hpp"

#include <algorithm>

namespace arcshare {

FVector::FVector(FieldPtr field, std::vector<uint32_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) raise(Errc::BadInput, "vector without field");
    for (uint32_t c : coords_)
        if (c >= field_->q()) raise(Errc::BadInput, "coordinate index out of range");
}

FVector::FVector(FieldPtr field, std::initializer_list<uint32_t> coords)
    : FVector(std::move(field), std::vector<uint32_t>(coords)) {}

bool FVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](uint32_t c) { return c == 0; });
}

bool operator==(const FVector& a, const FVector& b) {
    if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.coords_ == b.coords_;
    return a.field_->same_as(*b.field_) && a.coords_ == b.coords_;
}

bool operator<(const FVector& a, const FVector& b) {
    return a.coords_ < b.coords_;
}

FVector add(const FVector& a, const FVector& b) {
    require_same_field(a.field(), b.field(), "vector add");
    if (a.size() != b.size()) raise(Errc::DimensionMismatch, "vector add");
    std::vector<uint32_t> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a.field()->add(a.r(i), b.r(i));
    return FVector(a.field(), std::move(out));
}

FVector scale(const FVector& a, uint32_t c) {
    std::vector<uint32_t> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a.field()->mul(a.r(i), c);
    return FVector(a.field(), std::move(out));
}

FieldElement dot(const FVector& a, const FVector& b) {
    require_same_field(a.field(), b.field(), "dot");
    if (a.size() != b.size()) raise(Errc::DimensionMismatch, "dot");
    uint32_t acc = 0;
    const Field& f = *a.field();
    for (size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a.r(i), b.r(i)));
    return a.field()->el(acc);
}

FMatrix::FMatrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (!field_) raise(Errc::BadInput, "matrix without field");
}

FMatrix::FMatrix(FieldPtr field, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) raise(Errc::BadInput, "matrix without field");
    if (entries_.size() != rows_ * cols_) raise(Errc::DimensionMismatch, "matrix entries");
    for (uint32_t e : entries_)
        if (e >= field_->q()) raise(Errc::BadInput, "entry index out of range");
}

FMatrix FMatrix::from_rows(const std::vector<FVector>& rows) {
    if (rows.empty()) raise(Errc::BadInput, "from_rows needs at least one row");
    size_t cols = rows[0].size();
    FMatrix m(rows[0].field(), rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        require_same_field(rows[i].field(), m.field_, "from_rows");
        if (rows[i].size() != cols) raise(Errc::DimensionMismatch, "ragged rows");
        for (size_t j = 0; j < cols; ++j) m.set(i, j, rows[i].r(j));
    }
    return m;
}

FMatrix FMatrix::from_cols(const std::vector<FVector>& cols) {
    if (cols.empty()) raise(Errc::BadInput, "from_cols needs at least one column");
    size_t rows = cols[0].size();
    FMatrix m(cols[0].field(), rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        require_same_field(cols[j].field(), m.field_, "from_cols");
        if (cols[j].size() != rows) raise(Errc::DimensionMismatch, "ragged columns");
        for (size_t i = 0; i < rows; ++i) m.set(i, j, cols[j].r(i));
    }
    return m;
}

FMatrix FMatrix::identity(const FieldPtr& field, size_t n) {
    FMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FVector FMatrix::row(size_t i) const {
    std::vector<uint32_t> out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = r(i, j);
    return FVector(field_, std::move(out));
}

FVector FMatrix::col(size_t j) const {
    std::vector<uint32_t> out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = r(i, j);
    return FVector(field_, std::move(out));
}

FMatrix FMatrix::transposed() const {
    FMatrix t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, r(i, j));
    return t;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
           (a.field_.get() == b.field_.get() || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
}

FVector mat_vec(const FMatrix& m, const FVector& x) {
    require_same_field(m.field(), x.field(), "mat_vec");
    if (m.cols() != x.size()) raise(Errc::DimensionMismatch, "mat_vec");
    const Field& f = *m.field();
    std::vector<uint32_t> out(m.rows(), 0);
    for (size_t i = 0; i < m.rows(); ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m.r(i, j), x.r(j)));
        out[i] = acc;
    }
    return FVector(m.field(), std::move(out));
}

FVector vec_mat(const FVector& x, const FMatrix& m) {
    require_same_field(m.field(), x.field(), "vec_mat");
    if (m.rows() != x.size()) raise(Errc::DimensionMismatch, "vec_mat");
    const Field& f = *m.field();
    std::vector<uint32_t> out(m.cols(), 0);
    for (size_t j = 0; j < m.cols(); ++j) {
        uint32_t acc = 0;
        for (size_t i = 0; i < m.rows(); ++i) acc = f.add(acc, f.mul(x.r(i), m.r(i, j)));
        out[j] = acc;
    }
    return FVector(m.field(), std::move(out));
}

namespace {

// In-place forward elimination; returns pivot columns. Rows end up in
// echelon order with pivots normalized to 1.
std::vector<size_t> echelonize(FMatrix& m) {
    const Field& f = *m.field();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pivot = row;
        while (pivot < m.rows() && m.r(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (size_t j = 0; j < m.cols(); ++j) {
                uint32_t tmp = m.r(row, j);
                m.set(row, j, m.r(pivot, j));
                m.set(pivot, j, tmp);
            }
        uint32_t piv_inv = f.inv(m.r(row, col));
        for (size_t j = col; j < m.cols(); ++j) m.set(row, j, f.mul(m.r(row, j), piv_inv));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.r(i, col) == 0) continue;
            uint32_t c = m.r(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.r(i, j), f.mul(c, m.r(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(const FMatrix& m) {
    FMatrix work = m;
    return static_cast<int>(echelonize(work).size());
}

int rank_of(const std::vector<FVector>& vs) {
    if (vs.empty()) return 0;
    return rank(FMatrix::from_rows(vs));
}

bool is_independent(const std::vector<FVector>& vs) {
    if (vs.empty()) return true;
    size_t len = vs[0].size();
    for (const auto& v : vs)
        if (v.size() != len) raise(Errc::DimensionMismatch, "is_independent");
    if (vs.size() > len) return false;
    return rank_of(vs) == static_cast<int>(vs.size());
}

bool in_span(const FVector& v, const std::vector<FVector>& vs) {
    for (const auto& w : vs)
        if (w.size() != v.size()) raise(Errc::DimensionMismatch, "in_span");
    std::vector<FVector> ext = vs;
    ext.push_back(v);
    return rank_of(ext) == rank_of(vs);
}

SolveResult solve_unique(const FMatrix& a, const FVector& b) {
    AffineSolutions sol = solve_affine(a, b);
    if (!sol.consistent) return {SolveStatus::NoSolution, FVector()};
    if (!sol.null_basis.empty()) return {SolveStatus::Underdetermined, FVector()};
    return {SolveStatus::Unique, sol.particular};
}

AffineSolutions solve_affine(const FMatrix& a, const FVector& b) {
    require_same_field(a.field(), b.field(), "solve");
    if (a.rows() != b.size()) raise(Errc::DimensionMismatch, "solve");
    // augmented [A | b]
    FMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.r(i, j));
        aug.set(i, a.cols(), b.r(i));
    }
    std::vector<size_t> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return {false, FVector(), {}};

    std::vector<uint32_t> x(a.cols(), 0);
    for (size_t idx = 0; idx < pivots.size(); ++idx) x[pivots[idx]] = aug.r(idx, a.cols());
    FVector particular(a.field(), std::move(x));

    // null basis: one vector per free column
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<FVector> null_basis;
    for (size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint32_t> v(a.cols(), 0);
        v[free_col] = 1;
        for (size_t idx = 0; idx < pivots.size(); ++idx)
            v[pivots[idx]] = a.field()->neg(aug.r(idx, free_col));
        null_basis.emplace_back(a.field(), std::move(v));
    }
    return {true, std::move(particular), std::move(null_basis)};
}

std::vector<FVector> nullspace(const FMatrix& a) {
    FVector zero(a.field(), std::vector<uint32_t>(a.rows(), 0));
    return solve_affine(a, zero).null_basis;
}

} // namespace arcshare
