#include "arcshare/access.hpp"

#include <algorithm>
#include <string>

namespace arcshare {

namespace {

uint32_t mask_of(const std::vector<int>& subset, int n) {
    uint32_t mask = 0;
    for (int i : subset) {
        if (i < 0 || i >= n) raise(Errc::BadIndex, "participant index " + std::to_string(i));
        mask |= 1u << i;
    }
    return mask;
}

std::vector<int> unmask(uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

void check_partition(const std::vector<std::vector<int>>& parts, int n) {
    std::vector<int> seen(n, 0);
    for (const auto& part : parts)
        for (int i : part) {
            if (i < 0 || i >= n) raise(Errc::NotAPartition, "index out of range");
            if (seen[i]++) raise(Errc::NotAPartition, "index repeated across groups");
        }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) raise(Errc::NotAPartition, "index " + std::to_string(i) + " missing");
}

std::vector<std::vector<int>> all_t_subsets(int n, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    if (t > n) return out;
    while (true) {
        out.push_back(idx);
        int i = t - 1;
        while (i >= 0 && idx[i] == i + n - t) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

AccessStructure::AccessStructure(int n_participants, std::vector<std::vector<int>> basis)
    : n_(n_participants), basis_(std::move(basis)) {
    if (n_ < 2 || n_ > 31) raise(Errc::BadInput, "participant count out of range");
    if (basis_.empty()) raise(Errc::Degenerate, "empty basis");
    for (auto& member : basis_) {
        std::sort(member.begin(), member.end());
        member.erase(std::unique(member.begin(), member.end()), member.end());
        if (member.size() < 2) raise(Errc::Degenerate, "singleton basis member");
        basis_masks_.push_back(mask_of(member, n_));
    }
    std::sort(basis_.begin(), basis_.end());
    std::sort(basis_masks_.begin(), basis_masks_.end(),
              [](uint32_t a, uint32_t b) { return a < b; });
    // antichain: no member may contain another
    for (size_t i = 0; i < basis_masks_.size(); ++i)
        for (size_t j = 0; j < basis_masks_.size(); ++j) {
            if (i == j) continue;
            if ((basis_masks_[i] & basis_masks_[j]) == basis_masks_[i])
                raise(Errc::BadInput, "basis is not an antichain");
        }
    uint32_t covered = 0;
    for (uint32_t m : basis_masks_) covered |= m;
    if (covered != (n_ >= 31 ? ~0u : (1u << n_) - 1))
        raise(Errc::Degenerate, "participant outside every authorized subset");
}

bool AccessStructure::is_authorized(const std::vector<int>& subset) const {
    uint32_t mask = mask_of(subset, n_);
    for (uint32_t b : basis_masks_)
        if ((mask & b) == b) return true;
    return false;
}

AccessStructure threshold_basis(int t, int n) {
    if (t < 2 || t > n) raise(Errc::BadThreshold, "need 2 <= t <= n");
    return AccessStructure(n, all_t_subsets(n, t));
}

AccessStructure parallel_basis(const std::vector<std::vector<int>>& groups, int t) {
    int n = 0;
    for (const auto& g : groups) n += static_cast<int>(g.size());
    check_partition(groups, n);
    if (t < 2) raise(Errc::BadThreshold, "parallel model needs t >= 2");

    std::vector<uint32_t> group_masks;
    for (const auto& g : groups) group_masks.push_back(mask_of(g, n));

    std::vector<std::vector<int>> basis;
    for (auto& s : all_t_subsets(n, t)) {
        uint32_t m = mask_of(s, n);
        bool inside_one = false;
        for (uint32_t gm : group_masks)
            if ((m & gm) == m) { inside_one = true; break; }
        if (!inside_one) basis.push_back(std::move(s));
    }
    if (basis.empty()) raise(Errc::Degenerate, "parallel basis is empty");
    return AccessStructure(n, std::move(basis));
}

AccessStructure hierarchical_basis(const std::vector<int>& upper, const std::vector<int>& lower,
                                   int t) {
    if (upper.empty()) raise(Errc::EmptyUpper, "upper group is empty");
    int n = static_cast<int>(upper.size() + lower.size());
    check_partition({upper, lower}, n);
    if (t < 2) raise(Errc::BadThreshold, "hierarchical model needs t >= 2");

    uint32_t upper_mask = mask_of(upper, n);
    std::vector<std::vector<int>> basis;
    for (auto& s : all_t_subsets(n, t))
        if (mask_of(s, n) & upper_mask) basis.push_back(std::move(s));
    if (basis.empty()) raise(Errc::Degenerate, "hierarchical basis is empty");
    return AccessStructure(n, std::move(basis));
}

std::vector<std::vector<int>> maximal_unauthorized(const AccessStructure& gamma) {
    int n = gamma.n_participants();
    if (n > 20) raise(Errc::TooLarge, "subset scan capped at 20 participants");

    std::vector<uint32_t> basis_masks;
    for (const auto& b : gamma.basis()) basis_masks.push_back(mask_of(b, n));
    uint32_t full = (1u << n) - 1;

    auto authorized = [&](uint32_t mask) {
        for (uint32_t b : basis_masks)
            if ((mask & b) == b) return true;
        return false;
    };

    std::vector<std::vector<int>> out;
    for (uint32_t mask = 0; mask <= full; ++mask) {
        if (authorized(mask)) continue;
        bool maximal = true;
        for (int i = 0; i < n && maximal; ++i)
            if (!(mask & (1u << i)) && !authorized(mask | (1u << i))) maximal = false;
        if (maximal) out.push_back(unmask(mask, n));
    }
    return out;
}

} // namespace arcshare
