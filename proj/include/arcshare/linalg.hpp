#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "arcshare/field.hpp"

namespace arcshare {

// Vector over a single field. Coordinates are stored as canonical indices;
// the shared FieldPtr enforces the one-spec-per-vector invariant.
class FVector {
public:
    FVector() = default;
    FVector(FieldPtr field, std::vector<uint32_t> coords);
    FVector(FieldPtr field, std::initializer_list<uint32_t> coords);

    const FieldPtr& field() const { return field_; }
    size_t size() const { return coords_.size(); }
    uint32_t r(size_t i) const { return coords_[i]; }
    void set(size_t i, uint32_t v) { coords_[i] = v; }
    FieldElement at(size_t i) const { return field_->el(coords_[i]); }
    const std::vector<uint32_t>& coords() const { return coords_; }

    bool is_zero() const;

    friend bool operator==(const FVector& a, const FVector& b);
    friend bool operator!=(const FVector& a, const FVector& b) { return !(a == b); }
    // lexicographic by coordinate index; total order within one field
    friend bool operator<(const FVector& a, const FVector& b);

private:
    FieldPtr field_;
    std::vector<uint32_t> coords_;
};

FVector add(const FVector& a, const FVector& b);
FVector scale(const FVector& a, uint32_t c);
FieldElement dot(const FVector& a, const FVector& b);

// Row-major matrix over one field.
class FMatrix {
public:
    FMatrix() = default;
    FMatrix(FieldPtr field, size_t rows, size_t cols);
    FMatrix(FieldPtr field, size_t rows, size_t cols, std::vector<uint32_t> entries);

    static FMatrix from_rows(const std::vector<FVector>& rows);
    static FMatrix from_cols(const std::vector<FVector>& cols);
    static FMatrix identity(const FieldPtr& field, size_t n);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t r(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { entries_[i * cols_ + j] = v; }
    FieldElement at(size_t i, size_t j) const { return field_->el(r(i, j)); }
    const std::vector<uint32_t>& entries() const { return entries_; }

    FVector row(size_t i) const;
    FVector col(size_t j) const;
    FMatrix transposed() const;

    friend bool operator==(const FMatrix& a, const FMatrix& b);

private:
    FieldPtr field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> entries_;
};

FVector mat_vec(const FMatrix& m, const FVector& x);
// x^T * M, the row-vector product used to generate representative arrays
FVector vec_mat(const FVector& x, const FMatrix& m);

// Row rank by Gaussian elimination with first-nonzero pivoting. Exact
// fields need no pivot strategy beyond determinism.
int rank(const FMatrix& m);
int rank_of(const std::vector<FVector>& vs); // 0 for the empty set

bool is_independent(const std::vector<FVector>& vs);
bool in_span(const FVector& v, const std::vector<FVector>& vs);

enum class SolveStatus { Unique, NoSolution, Underdetermined };

struct SolveResult {
    SolveStatus status;
    FVector x; // valid only when status == Unique
};

// Solves a * x = b; reports NoSolution on inconsistency and
// Underdetermined when the solution space has free variables.
SolveResult solve_unique(const FMatrix& a, const FVector& b);

// Full solution set of a * x = b: particular solution plus nullspace basis.
struct AffineSolutions {
    bool consistent;
    FVector particular;
    std::vector<FVector> null_basis;
};
AffineSolutions solve_affine(const FMatrix& a, const FVector& b);

// Deterministic basis of { x : a * x = 0 }.
std::vector<FVector> nullspace(const FMatrix& a);

} // namespace arcshare
