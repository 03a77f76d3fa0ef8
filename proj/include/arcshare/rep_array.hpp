#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcshare/linalg.hpp"
#include "arcshare/subsets.hpp"

namespace arcshare {

// Representative array M of a secret sharing scheme: one row per
// distribution rule, column 0 indexed by the dealer D, remaining columns
// by the participants. Ideal schemes have key set = share set, so every
// entry lives in one field.
class RepresentativeArray {
public:
    RepresentativeArray(FieldPtr field, std::vector<std::string> labels,
                        std::vector<std::vector<uint32_t>> rows);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& labels() const { return labels_; }
    size_t n_rows() const { return rows_.size(); }
    size_t n_cols() const { return labels_.size(); }
    size_t n_participants() const { return labels_.size() - 1; }
    uint32_t entry(size_t row, size_t col) const { return rows_[row][col]; }
    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }

    // Mutable access exists for corruption / mutation experiments only.
    void set_entry(size_t row, size_t col, uint32_t v) { rows_[row][col] = v; }

private:
    FieldPtr field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<uint32_t>> rows_;
};

// Array columns (0 = dealer). Participant subsets use participant indices
// and are shifted by one internally.
using ColumnSet = std::vector<int>;

// Rows x^T * G for every x in GF(q)^k, in canonical order of x (first
// coordinate most significant). G is k x (m+1) with column 0 the dealer
// column; zero columns are rejected (ZeroColumn).
RepresentativeArray generate_array(const FMatrix& generator, std::vector<std::string> labels);

// True iff every |cols|-tuple over the field occurs equally often in the
// projection; false when |rows| is not divisible by q^|cols|.
bool is_orthogonal(const RepresentativeArray& m, const ColumnSet& cols);

// Largest t such that every t-subset of cols is orthogonal (0 when some
// single column is non-uniform).
int strength(const RepresentativeArray& m, const ColumnSet& cols);

// Orthogonal rank phi: maximum size of an orthogonal subset of cols.
// Exact subset search with monotone pruning; |cols| capped at 20.
int orthogonal_rank(const RepresentativeArray& m, const ColumnSet& cols);

// phi together with every orthogonal subset of that maximum size.
struct OrthogonalRank {
    int phi;
    std::vector<ColumnSet> max_subsets;
};
OrthogonalRank max_orthogonal_subsets(const RepresentativeArray& m, const ColumnSet& cols);

// Regularity of the subarray on cols: vacuous when phi = |cols|;
// otherwise, for every maximum orthogonal subset, rows agreeing there
// must agree on all remaining columns of cols.
bool is_regular(const RepresentativeArray& m, const ColumnSet& cols);

// Condition "K-uniqueness" on a participant subset b: equal share tuples
// on b force equal dealer entries.
bool check_k_uniqueness(const RepresentativeArray& m, const std::vector<int>& b);

// Condition "K-balance" on b: for every share tuple occurring on b, each
// of the q keys appears equally often among the matching rows.
bool check_k_balance(const RepresentativeArray& m, const std::vector<int>& b);

} // namespace arcshare
