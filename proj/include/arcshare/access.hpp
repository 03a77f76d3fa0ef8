#pragma once

#include <cstdint>
#include <vector>

#include "arcshare/errors.hpp"

namespace arcshare {

// Monotone access structure given by its basis (the inclusion-minimal
// authorized subsets). Construction enforces: antichain, no singleton
// members, every participant covered. The monotone closure is implicit:
// a set is authorized iff it contains a basis member.
class AccessStructure {
public:
    AccessStructure(int n_participants, std::vector<std::vector<int>> basis);

    int n_participants() const { return n_; }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    bool is_authorized(const std::vector<int>& subset) const;

    friend bool operator==(const AccessStructure& a, const AccessStructure& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    int n_;
    std::vector<std::vector<int>> basis_;       // sorted members, sorted list
    std::vector<uint32_t> basis_masks_;
};

// All t-subsets of {0..n-1}.
AccessStructure threshold_basis(int t, int n);

// Basis = t-subsets not contained in a single group. groups must
// partition {0..n-1}; throws Degenerate when the basis comes out empty
// (fewer than two groups, or t too large).
AccessStructure parallel_basis(const std::vector<std::vector<int>>& groups, int t);

// Basis = t-subsets meeting the (non-empty) upper group; upper and lower
// must partition {0..n-1}.
AccessStructure hierarchical_basis(const std::vector<int>& upper, const std::vector<int>& lower,
                                   int t);

// Inclusion-maximal unauthorized subsets by full subset scan; n <= 20.
std::vector<std::vector<int>> maximal_unauthorized(const AccessStructure& gamma);

} // namespace arcshare
