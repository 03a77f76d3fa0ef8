#include "arcshare/rep_array.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace arcshare {

namespace {

constexpr size_t kColCap = 20;

void validate_cols(const RepresentativeArray& m, const ColumnSet& cols) {
    for (int c : cols)
        if (c < 0 || c >= static_cast<int>(m.n_cols()))
            raise(Errc::BadColumnIndex, "column index " + std::to_string(c));
}

ColumnSet participant_cols(const RepresentativeArray& m, const std::vector<int>& b) {
    ColumnSet cols;
    cols.reserve(b.size());
    for (int p : b) {
        if (p < 0 || p >= static_cast<int>(m.n_participants()))
            raise(Errc::BadColumnIndex, "participant index " + std::to_string(p));
        cols.push_back(p + 1);
    }
    return cols;
}

// base-q radix key of a row projection; the design keeps projections small
// enough for 64 bits (guarded below)
uint64_t radix_key(const RepresentativeArray& m, size_t row, const ColumnSet& cols) {
    uint64_t key = 0;
    for (int c : cols) key = key * m.field()->q() + m.entry(row, c);
    return key;
}

bool radix_fits(uint32_t q, size_t t) {
    long double width = 1.0L;
    for (size_t i = 0; i < t; ++i) {
        width *= q;
        if (width > 9.0e18L) return false;
    }
    return true;
}

} // namespace

RepresentativeArray::RepresentativeArray(FieldPtr field, std::vector<std::string> labels,
                                         std::vector<std::vector<uint32_t>> rows)
    : field_(std::move(field)), labels_(std::move(labels)), rows_(std::move(rows)) {
    if (!field_) raise(Errc::BadInput, "array without field");
    if (labels_.empty()) raise(Errc::BadInput, "array needs at least the dealer column");
    if (rows_.empty()) raise(Errc::BadInput, "array needs at least one row");
    for (const auto& r : rows_) {
        if (r.size() != labels_.size()) raise(Errc::DimensionMismatch, "ragged array row");
        for (uint32_t v : r)
            if (v >= field_->q()) raise(Errc::BadInput, "array entry out of range");
    }
}

RepresentativeArray generate_array(const FMatrix& generator, std::vector<std::string> labels) {
    size_t k = generator.rows(), n_cols = generator.cols();
    if (labels.size() != n_cols) raise(Errc::DimensionMismatch, "label count");
    for (size_t j = 0; j < n_cols; ++j)
        if (generator.col(j).is_zero())
            raise(Errc::ZeroColumn, "generator column " + std::to_string(j));

    const Field& f = *generator.field();
    uint64_t n_rows = 1;
    for (size_t i = 0; i < k; ++i) {
        n_rows *= f.q();
        if (n_rows > (1u << 24)) raise(Errc::TooLarge, "array would exceed 2^24 rows");
    }

    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(n_rows);
    std::vector<uint32_t> x(k, 0);
    for (uint64_t idx = 0; idx < n_rows; ++idx) {
        uint64_t rest = idx;
        for (size_t i = 0; i < k; ++i) {
            x[k - 1 - i] = static_cast<uint32_t>(rest % f.q());
            rest /= f.q();
        }
        std::vector<uint32_t> row(n_cols, 0);
        for (size_t j = 0; j < n_cols; ++j) {
            uint32_t acc = 0;
            for (size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(x[i], generator.r(i, j)));
            row[j] = acc;
        }
        rows.push_back(std::move(row));
    }
    return RepresentativeArray(generator.field(), std::move(labels), std::move(rows));
}

bool is_orthogonal(const RepresentativeArray& m, const ColumnSet& cols) {
    if (cols.empty()) raise(Errc::BadColumnIndex, "empty column set");
    validate_cols(m, cols);
    if (!radix_fits(m.field()->q(), cols.size()))
        raise(Errc::TooLarge, "projection exceeds 64-bit radix key");

    uint64_t tuple_count = 1;
    for (size_t i = 0; i < cols.size(); ++i) tuple_count *= m.field()->q();
    if (m.n_rows() % tuple_count != 0) return false;
    uint64_t lambda = m.n_rows() / tuple_count;

    std::unordered_map<uint64_t, uint64_t> counts;
    counts.reserve(std::min<uint64_t>(tuple_count, m.n_rows()));
    for (size_t r = 0; r < m.n_rows(); ++r) {
        uint64_t c = ++counts[radix_key(m, r, cols)];
        if (c > lambda) return false;
    }
    return counts.size() == tuple_count;
}

int strength(const RepresentativeArray& m, const ColumnSet& cols) {
    validate_cols(m, cols);
    int best = 0;
    for (size_t t = 1; t <= cols.size(); ++t) {
        bool all_ok = for_each_subset(cols.size(), t, [&](const std::vector<size_t>& idx) {
            ColumnSet sub;
            sub.reserve(t);
            for (size_t i : idx) sub.push_back(cols[i]);
            return is_orthogonal(m, sub);
        });
        if (!all_ok) break;
        best = static_cast<int>(t);
    }
    return best;
}

OrthogonalRank max_orthogonal_subsets(const RepresentativeArray& m, const ColumnSet& raw_cols) {
    validate_cols(m, raw_cols);
    ColumnSet cols = raw_cols;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (cols.size() > kColCap) raise(Errc::TooLarge, "orthogonal rank capped at 20 columns");

    // grow orthogonal subsets level by level; supersets of non-orthogonal
    // sets can never be orthogonal, so each level only extends survivors
    std::vector<ColumnSet> level;
    for (int c : cols)
        if (is_orthogonal(m, {c})) level.push_back({c});
    if (level.empty()) return {0, {}};

    OrthogonalRank out{1, level};
    while (true) {
        std::set<ColumnSet> prev(level.begin(), level.end());
        std::vector<ColumnSet> next;
        for (const auto& s : level) {
            for (int c : cols) {
                if (c <= s.back()) continue;
                ColumnSet cand = s;
                cand.push_back(c);
                bool sub_ok = true;
                for (size_t drop = 0; drop + 1 < cand.size() && sub_ok; ++drop) {
                    ColumnSet sub;
                    for (size_t i = 0; i < cand.size(); ++i)
                        if (i != drop) sub.push_back(cand[i]);
                    sub_ok = prev.count(sub) > 0;
                }
                if (sub_ok && is_orthogonal(m, cand)) next.push_back(cand);
            }
        }
        if (next.empty()) break;
        level = std::move(next);
        out.phi = static_cast<int>(level[0].size());
        out.max_subsets = level;
    }
    return out;
}

int orthogonal_rank(const RepresentativeArray& m, const ColumnSet& cols) {
    return max_orthogonal_subsets(m, cols).phi;
}

bool is_regular(const RepresentativeArray& m, const ColumnSet& cols) {
    validate_cols(m, cols);
    OrthogonalRank ranked = max_orthogonal_subsets(m, cols);
    if (ranked.phi == static_cast<int>(cols.size())) return true;

    for (const auto& o : ranked.max_subsets) {
        ColumnSet rest;
        for (int c : cols)
            if (std::find(o.begin(), o.end(), c) == o.end()) rest.push_back(c);
        std::unordered_map<uint64_t, uint64_t> completion; // key on o -> key on rest
        for (size_t r = 0; r < m.n_rows(); ++r) {
            uint64_t key = radix_key(m, r, o);
            uint64_t val = radix_key(m, r, rest);
            auto [it, inserted] = completion.emplace(key, val);
            if (!inserted && it->second != val) return false;
        }
    }
    return true;
}

bool check_k_uniqueness(const RepresentativeArray& m, const std::vector<int>& b) {
    ColumnSet cols = participant_cols(m, b);
    std::unordered_map<uint64_t, uint32_t> dealer_of;
    for (size_t r = 0; r < m.n_rows(); ++r) {
        uint64_t key = cols.empty() ? 0 : radix_key(m, r, cols);
        auto [it, inserted] = dealer_of.emplace(key, m.entry(r, 0));
        if (!inserted && it->second != m.entry(r, 0)) return false;
    }
    return true;
}

bool check_k_balance(const RepresentativeArray& m, const std::vector<int>& b) {
    ColumnSet cols = participant_cols(m, b);
    uint32_t q = m.field()->q();
    std::unordered_map<uint64_t, std::vector<uint64_t>> key_counts;
    for (size_t r = 0; r < m.n_rows(); ++r) {
        uint64_t key = cols.empty() ? 0 : radix_key(m, r, cols);
        auto& counts = key_counts[key];
        if (counts.empty()) counts.assign(q, 0);
        ++counts[m.entry(r, 0)];
    }
    for (const auto& [key, counts] : key_counts)
        for (uint32_t v = 1; v < q; ++v)
            if (counts[v] != counts[0]) return false;
    return true;
}

} // namespace arcshare
