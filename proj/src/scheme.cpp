#include "arcshare/scheme.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace arcshare {

namespace {

std::string subset_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

std::vector<std::string> default_labels(size_t m) {
    std::vector<std::string> out;
    for (size_t i = 0; i < m; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

ColumnSet dealer_and(const std::vector<int>& b) {
    ColumnSet cols{0};
    for (int p : b) cols.push_back(p + 1);
    return cols;
}

uint32_t uniform_repr(std::mt19937_64& rng, uint32_t q) {
    // rejection keeps the draw exactly uniform
    uint64_t bound = UINT64_MAX - UINT64_MAX % q;
    uint64_t v = rng();
    while (v >= bound) v = rng();
    return static_cast<uint32_t>(v % q);
}

} // namespace

GeneratorMatrix::GeneratorMatrix(FVector dealer, std::vector<FVector> participants,
                                 std::vector<std::string> labels)
    : dealer_(std::move(dealer)), participants_(std::move(participants)), labels_(std::move(labels)) {
    if (dealer_.is_zero()) raise(Errc::ZeroColumn, "dealer column is zero");
    for (size_t i = 0; i < participants_.size(); ++i) {
        require_same_field(participants_[i].field(), dealer_.field(), "generator");
        if (participants_[i].size() != dealer_.size())
            raise(Errc::DimensionMismatch, "participant column length");
        if (participants_[i].is_zero())
            raise(Errc::ZeroColumn, "participant column " + std::to_string(i) + " is zero");
    }
    if (labels_.empty()) labels_ = default_labels(participants_.size());
    if (labels_.size() != participants_.size())
        raise(Errc::DimensionMismatch, "label count");
}

GeneratorMatrix GeneratorMatrix::unchecked(FVector dealer, std::vector<FVector> participants,
                                           std::vector<std::string> labels) {
    GeneratorMatrix g;
    g.dealer_ = std::move(dealer);
    g.participants_ = std::move(participants);
    g.labels_ = labels.empty() ? default_labels(g.participants_.size()) : std::move(labels);
    return g;
}

FMatrix GeneratorMatrix::full_matrix() const {
    std::vector<FVector> cols;
    cols.reserve(participants_.size() + 1);
    cols.push_back(dealer_);
    for (const auto& v : participants_) cols.push_back(v);
    return FMatrix::from_cols(cols);
}

RepresentativeArray generate_array(const GeneratorMatrix& g) {
    std::vector<std::string> labels;
    labels.push_back("D");
    for (const auto& l : g.labels()) labels.push_back(l);
    return arcshare::generate_array(g.full_matrix(), std::move(labels));
}

void VerificationReport::add(std::string condition, std::vector<int> subset, bool pass,
                             std::string detail) {
    if (!pass) verdict = false;
    entries.push_back({std::move(condition), std::move(subset), pass, std::move(detail)});
}

void VerificationReport::note(std::string condition, std::string detail) {
    entries.push_back({std::move(condition), {}, true, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other) {
    verdict = verdict && other.verdict;
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

VerificationReport verify_vector_scheme(const GeneratorMatrix& g, const AccessStructure& gamma) {
    if (g.m() != gamma.n_participants())
        raise(Errc::SizeMismatch, "participant count differs between generator and access structure");

    VerificationReport report;
    report.mode = "vector";
    const int k = g.k();

    for (const auto& x : gamma.basis()) {
        if (static_cast<int>(x.size()) > k) {
            report.add("(9)", x, false, "basis set larger than dimension k=" + std::to_string(k));
            continue;
        }
        std::vector<FVector> with_dealer{g.dealer()};
        for (int p : x) with_dealer.push_back(g.participants()[p]);

        bool every_sub_independent = for_each_subset(
            with_dealer.size(), x.size(), [&](const std::vector<size_t>& idx) {
                std::vector<FVector> sel;
                for (size_t i : idx) sel.push_back(with_dealer[i]);
                return is_independent(sel);
            });
        bool all_dependent = !is_independent(with_dealer);
        report.add("(9)", x, every_sub_independent && all_dependent,
                   every_sub_independent
                       ? (all_dependent ? "" : "dealer not in span of " + subset_str(x))
                       : "some |X| vectors of {d} u " + subset_str(x) + " are dependent");
    }

    report.note("(10)", "checked on maximal unauthorized sets only; d outside span(Y) "
                        "implies d outside span of every subset of Y");
    for (const auto& y : maximal_unauthorized(gamma)) {
        std::vector<FVector> vs;
        for (int p : y) vs.push_back(g.participants()[p]);
        int r_y = rank_of(vs);
        vs.push_back(g.dealer());
        int r_dy = rank_of(vs);
        bool pass = r_dy == r_y + 1 && r_dy <= k;
        report.add("(10)", y, pass,
                   "rank(Y)=" + std::to_string(r_y) + " rank({d} u Y)=" + std::to_string(r_dy));
    }
    return report;
}

namespace {

void guard_array(const RepresentativeArray& m, const AccessStructure& gamma) {
    if (m.n_rows() > 1000000) raise(Errc::TooLarge, "array exceeds 10^6 rows");
    if (gamma.n_participants() > 20) raise(Errc::TooLarge, "more than 20 participants");
    if (static_cast<int>(m.n_participants()) != gamma.n_participants())
        raise(Errc::SizeMismatch, "participant count differs between array and access structure");
}

} // namespace

VerificationReport verify_definitional(const RepresentativeArray& m, const AccessStructure& gamma,
                                       bool exhaustive) {
    guard_array(m, gamma);
    VerificationReport report;
    report.mode = "definitional";

    for (const auto& b : gamma.basis())
        report.add("(5)", b, check_k_uniqueness(m, b));
    for (const auto& b : maximal_unauthorized(gamma))
        report.add("(6)", b, check_k_balance(m, b));

    if (exhaustive) {
        int n = gamma.n_participants();
        if (n > 12) raise(Errc::TooLarge, "exhaustive mode capped at 12 participants");
        bool all_ok = true;
        std::vector<int> first_bad;
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) subset.push_back(i);
            bool ok = gamma.is_authorized(subset) ? check_k_uniqueness(m, subset)
                                                  : check_k_balance(m, subset);
            if (!ok && all_ok) { all_ok = false; first_bad = subset; }
        }
        report.add("(5)/(6) exhaustive", first_bad, all_ok,
                   all_ok ? "all subsets" : "first failing subset");
    }
    return report;
}

VerificationReport verify_char(const RepresentativeArray& m, const AccessStructure& gamma) {
    guard_array(m, gamma);
    VerificationReport report;
    report.mode = "char";

    for (const auto& b : gamma.basis()) {
        ColumnSet cols = dealer_and(b);
        int st = strength(m, cols);
        bool strength_ok = st == static_cast<int>(b.size());
        bool regular_ok = is_regular(m, cols);
        report.add("(7)", b, strength_ok && regular_ok,
                   "strength=" + std::to_string(st) + (regular_ok ? "" : " not regular"));
    }

    for (const auto& b : maximal_unauthorized(gamma)) {
        ColumnSet participant_cols;
        for (int p : b) participant_cols.push_back(p + 1);
        int phi_b = participant_cols.empty() ? 0 : orthogonal_rank(m, participant_cols);
        int phi_db = orthogonal_rank(m, dealer_and(b));
        bool regular_ok = is_regular(m, dealer_and(b));
        report.add("(8)", b, phi_db == phi_b + 1 && regular_ok,
                   "phi(B)=" + std::to_string(phi_b) + " phi({D} u B)=" + std::to_string(phi_db) +
                       (regular_ok ? "" : " not regular"));
    }
    return report;
}

Scheme make_scheme(GeneratorMatrix g, AccessStructure gamma, VerifyMode mode) {
    VerificationReport report;
    if (mode == VerifyMode::Vector || mode == VerifyMode::All)
        report.merge(verify_vector_scheme(g, gamma));
    if (mode == VerifyMode::Definitional || mode == VerifyMode::Char || mode == VerifyMode::All) {
        RepresentativeArray arr = generate_array(g);
        if (mode == VerifyMode::Definitional || mode == VerifyMode::All)
            report.merge(verify_definitional(arr, gamma));
        if (mode == VerifyMode::Char || mode == VerifyMode::All)
            report.merge(verify_char(arr, gamma));
    }
    report.mode = mode == VerifyMode::Vector ? "vector"
                : mode == VerifyMode::Definitional ? "definitional"
                : mode == VerifyMode::Char ? "char" : "all";
    return Scheme{std::move(g), std::move(gamma), std::move(report)};
}

GeneratorMatrix threshold_generator(const FieldPtr& field, int t, int n) {
    if (t < 2 || t > n) raise(Errc::BadThreshold, "need 2 <= t <= n");
    if (n > static_cast<int>(field->q()))
        raise(Errc::BadThreshold, "threshold model over GF(q) supports at most q participants");
    const Field& f = *field;
    auto curve_point = [&](uint32_t alpha) {
        std::vector<uint32_t> v(t);
        uint32_t acc = 1;
        for (int i = 0; i < t; ++i) { v[i] = acc; acc = f.mul(acc, alpha); }
        return FVector(field, std::move(v));
    };
    FVector dealer = curve_point(0); // (1,0,...,0)
    std::vector<FVector> participants;
    for (int i = 0; i < n; ++i) {
        if (i < static_cast<int>(field->q()) - 1) {
            participants.push_back(curve_point(static_cast<uint32_t>(i + 1)));
        } else {
            std::vector<uint32_t> v(t, 0); // the point at infinity
            v[t - 1] = 1;
            participants.push_back(FVector(field, std::move(v)));
        }
    }
    return GeneratorMatrix(std::move(dealer), std::move(participants));
}

std::vector<Share> deal(const Scheme& s, const FieldElement& secret, uint64_t seed) {
    if (!s.report.verdict) raise(Errc::UnverifiedScheme, "scheme did not pass verification");
    require_same_field(secret.field(), s.generator.field(), "deal");

    const FieldPtr& field = s.generator.field();
    const FVector& d = s.generator.dealer();
    size_t pivot = 0;
    while (d.r(pivot) == 0) ++pivot;

    std::vector<uint32_t> x0(d.size(), 0);
    x0[pivot] = field->mul(secret.repr(), field->inv(d.r(pivot)));
    FVector x(field, std::move(x0));

    std::vector<FVector> complement = nullspace(FMatrix::from_rows({d}));
    std::mt19937_64 rng(seed);
    for (const auto& basis_vec : complement)
        x = add(x, scale(basis_vec, uniform_repr(rng, field->q())));

    std::vector<Share> shares;
    shares.reserve(s.generator.m());
    for (int i = 0; i < s.generator.m(); ++i)
        shares.push_back({i, s.generator.labels()[i], dot(x, s.generator.participants()[i])});
    return shares;
}

ReconstructResult reconstruct(const Scheme& s, const std::vector<Share>& shares,
                              bool claim_authorized) {
    const FieldPtr& field = s.generator.field();
    std::vector<Share> sorted = shares;
    std::sort(sorted.begin(), sorted.end(),
              [](const Share& a, const Share& b) { return a.index < b.index; });
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].index < 0 || sorted[i].index >= s.generator.m())
            raise(Errc::BadIndex, "share index out of range");
        if (i > 0 && sorted[i].index == sorted[i - 1].index)
            raise(Errc::BadIndex, "duplicate share index");
        require_same_field(sorted[i].value.field(), field, "reconstruct");
    }

    const int k = s.generator.k();
    FMatrix a(field, sorted.size(), k);
    std::vector<uint32_t> b_coords(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
        const FVector& v = s.generator.participants()[sorted[i].index];
        for (int j = 0; j < k; ++j) a.set(i, j, v.r(j));
        b_coords[i] = sorted[i].value.repr();
    }
    AffineSolutions sol = solve_affine(a, FVector(field, std::move(b_coords)));
    if (!sol.consistent) raise(Errc::InconsistentShares, "no rule matches the given shares");

    const FVector& d = s.generator.dealer();
    bool determined = true;
    for (const auto& nv : sol.null_basis)
        if (!dot(nv, d).is_zero()) { determined = false; break; }

    ReconstructResult out;
    if (determined) {
        out.unique = true;
        out.secret = dot(sol.particular, d);
        return out;
    }
    if (claim_authorized)
        raise(Errc::VerificationFailed, "claimed authorized but the secret is ambiguous");

    // the key map is a non-zero linear functional on the solution space, so
    // it is onto: every key occurs q^(nullity-1) times among the q^nullity
    // consistent rules
    uint32_t q = field->q();
    size_t nullity = sol.null_basis.size();
    uint64_t total = 1;
    for (size_t i = 0; i < nullity; ++i) {
        if (total > (1ull << 62) / q) raise(Errc::TooLarge, "ambiguity count overflow");
        total *= q;
    }
    out.unique = false;
    out.ambiguity.matching_rows = total;
    out.ambiguity.key_counts.assign(q, total / q);
    return out;
}

Rational information_rate(const Scheme&) {
    // keys and shares are drawn from the same field in every scheme here
    return {1, 1};
}

} // namespace arcshare
