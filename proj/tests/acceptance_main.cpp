// Acceptance suite: exact combinatorial reproduction of the named
// constructions and characterizations at desk scale. One line per
// criterion; the process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "arcshare/baer.hpp"
#include "arcshare/serialize.hpp"

using namespace arcshare;

namespace {

struct Check {
    int failures = 0;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::printf("        failed: %s\n", what.c_str());
        }
    }
};

using Criterion = std::function<void(Check&)>;

int run_criterion(int number, const std::string& title, double budget_seconds,
                  const Criterion& body) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(elapsed < budget_seconds, "time budget exceeded");
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", check.failures == 0 ? "PASS" : "FAIL", number,
                title.c_str(), elapsed);
    std::fflush(stdout);
    return check.failures == 0 ? 0 : 1;
}

// ---- shared battery -------------------------------------------------------

struct Fixture {
    std::string name;
    Scheme scheme;
};

std::vector<Fixture> scheme_battery() {
    std::vector<Fixture> out;
    auto add = [&](const std::string& name, GeneratorMatrix g, AccessStructure gamma) {
        out.push_back({name, make_scheme(std::move(g), std::move(gamma), VerifyMode::Vector)});
    };
    add("threshold-(2,2)-gf2", threshold_generator(Field::make(2, 1), 2, 2), threshold_basis(2, 2));
    add("threshold-(2,3)-gf3", threshold_generator(Field::make(3, 1), 2, 3), threshold_basis(2, 3));
    add("threshold-(2,4)-gf4", threshold_generator(Field::make(2, 2), 2, 4), threshold_basis(2, 4));
    add("threshold-(2,3)-gf5", threshold_generator(Field::make(5, 1), 2, 3), threshold_basis(2, 3));

    ExtractedScheme v28 = scheme_from_parc(construct_parc(3, 28).parc);
    out.push_back({"parallel-(3,3)parc-gf9", std::move(v28.scheme)});
    ExtractedScheme v31 = scheme_from_parc(construct_parc(2, 31).parc);
    out.push_back({"parallel-(3,2)parc-gf4", std::move(v31.scheme)});

    ExtractedScheme h2 = scheme_from_harc(construct_harc(2));
    out.push_back({"hierarchical-harc-gf4", std::move(h2.scheme)});
    ExtractedScheme h3 = scheme_from_harc(construct_harc(3));
    out.push_back({"hierarchical-harc-gf9", std::move(h3.scheme)});
    return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

// ---- criteria -------------------------------------------------------------

void criterion_1(Check& c) {
    auto f5 = Field::make(5, 1);
    GeneratorMatrix g = threshold_generator(f5, 2, 3);
    RepresentativeArray arr = generate_array(g);
    c.require(arr.n_rows() == 25 && arr.n_cols() == 4, "array is 25 x 4");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            c.require(is_orthogonal(arr, {a, b}), "column pair orthogonal with lambda 1");
    c.require(strength(arr, {0, 1, 2, 3}) == 2, "strength exactly 2");
}

void criterion_2(Check& c) {
    for (const auto& fx : scheme_battery()) {
        VerificationReport vec = verify_vector_scheme(fx.scheme.generator, fx.scheme.gamma);
        RepresentativeArray arr = generate_array(fx.scheme.generator);
        VerificationReport def = verify_definitional(arr, fx.scheme.gamma);
        VerificationReport chr = verify_char(arr, fx.scheme.gamma);
        c.require(vec.verdict && def.verdict && chr.verdict, fx.name + ": all three verdicts pass");

        // set-by-set agreement: same subsets, and every per-set entry passes
        auto sets_of = [](const VerificationReport& r) {
            std::set<std::vector<int>> subsets;
            bool all = true;
            for (const auto& e : r.entries) {
                if (e.condition.find("(10)") != std::string::npos && e.subset.empty() && !e.detail.empty()
                    && e.detail.find("implies") != std::string::npos)
                    continue; // the reduction note
                subsets.insert(e.subset);
                all = all && e.pass;
            }
            return std::pair(subsets, all);
        };
        auto [sv, av] = sets_of(vec);
        auto [sd, ad] = sets_of(def);
        auto [sc, ac] = sets_of(chr);
        c.require(av && ad && ac, fx.name + ": every per-set entry passes");
        c.require(sv == sd && sd == sc, fx.name + ": the three verifiers cover the same sets");
    }
    // the (2,4)-parc from variant 32 leaves one participant group and is
    // rejected, so it cannot join the battery as a scheme
    bool degenerate = false;
    try {
        scheme_from_parc(construct_parc(2, 32).parc);
    } catch (const Error& e) {
        degenerate = e.code() == Errc::Degenerate;
    }
    c.require(degenerate, "variant 32 extraction is the documented Degenerate rejection");
}

void criterion_3(Check& c) {
    ExtractedScheme ex = scheme_from_parc(construct_parc(3, 28).parc);
    const Scheme& s = ex.scheme;
    auto f9 = s.generator.field();
    c.require(f9->q() == 9, "field is GF(9)");
    c.require(s.generator.m() == 6, "six participants");
    c.require(ex.groups.size() == 2 && ex.groups[0].size() == 3 && ex.groups[1].size() == 3,
              "two groups of three");

    RepresentativeArray arr = generate_array(s.generator);
    for (uint32_t secret = 0; secret < 9; ++secret) {
        std::vector<Share> shares = deal(s, f9->el(secret), 1000 + secret);
        for (const auto& subset : all_subsets(6)) {
            if (subset.size() != 3) continue;
            bool in_g0 = std::includes(ex.groups[0].begin(), ex.groups[0].end(), subset.begin(),
                                       subset.end());
            bool in_g1 = std::includes(ex.groups[1].begin(), ex.groups[1].end(), subset.begin(),
                                       subset.end());
            std::vector<Share> some;
            for (int i : subset) some.push_back(shares[i]);
            ReconstructResult r = reconstruct(s, some);
            if (!in_g0 && !in_g1) {
                c.require(r.unique && r.secret.repr() == secret, "cross-group 3-subset reconstructs");
            } else {
                c.require(!r.unique, "within-group 3-subset stays ambiguous");
            }
        }
        // every subset inside one group, all sizes including the full group
        for (const auto& group : ex.groups)
            for (const auto& subset : all_subsets(6)) {
                if (subset.empty() ||
                    !std::includes(group.begin(), group.end(), subset.begin(), subset.end()))
                    continue;
                std::vector<Share> some;
                std::vector<int> cols;
                std::vector<uint32_t> vals;
                for (int i : subset) {
                    some.push_back(shares[i]);
                    cols.push_back(i);
                    vals.push_back(shares[i].value.repr());
                }
                ReconstructResult r = reconstruct(s, some);
                c.require(!r.unique, "within-group subset is ambiguous");
                if (r.unique) continue;
                c.require(r.ambiguity.key_counts.size() == 9, "all 9 keys listed");
                for (uint64_t count : r.ambiguity.key_counts)
                    c.require(count == r.ambiguity.key_counts[0], "uniform ambiguity");
                // exact agreement with row enumeration for one seed
                if (secret == 0) {
                    std::map<uint32_t, uint64_t> dist;
                    for (size_t row = 0; row < arr.n_rows(); ++row) {
                        bool match = true;
                        for (size_t i = 0; i < cols.size(); ++i)
                            if (arr.entry(row, cols[i] + 1) != vals[i]) { match = false; break; }
                        if (match) ++dist[arr.entry(row, 0)];
                    }
                    for (uint32_t key = 0; key < 9; ++key)
                        c.require(dist[key] == r.ambiguity.key_counts[key],
                                  "enumerated distribution matches");
                }
            }
    }
}

void criterion_4(Check& c) {
    ExtractedScheme ex = scheme_from_harc(construct_harc(2));
    const Scheme& s = ex.scheme;
    auto f4 = s.generator.field();
    c.require(f4->q() == 4, "field is GF(4)");
    c.require(s.generator.m() == 5, "five participants");
    c.require(ex.groups[0].size() == 3 && ex.groups[1].size() == 2, "|U|=3 and |L|=2");

    std::set<int> upper(ex.groups[0].begin(), ex.groups[0].end());
    for (uint32_t secret = 0; secret < 4; ++secret) {
        std::vector<Share> shares = deal(s, f4->el(secret), 77 + secret);
        for (const auto& subset : all_subsets(5)) {
            if (subset.size() != 3) continue;
            bool meets_upper = false;
            for (int i : subset) meets_upper |= upper.count(i) > 0;
            std::vector<Share> some;
            for (int i : subset) some.push_back(shares[i]);
            ReconstructResult r = reconstruct(s, some);
            c.require(r.unique == meets_upper, "3-subset authorized iff it meets the upper group");
            if (r.unique) c.require(r.secret.repr() == secret, "reconstructs the secret");
        }
        // the full lower group stays perfectly ambiguous
        std::vector<Share> lower_shares;
        for (int i : ex.groups[1]) lower_shares.push_back(shares[i]);
        ReconstructResult r = reconstruct(s, lower_shares);
        c.require(!r.unique, "full lower group is unauthorized");
        if (!r.unique)
            for (uint64_t count : r.ambiguity.key_counts)
                c.require(count == r.ambiguity.key_counts[0], "uniform ambiguity over 4 keys");
    }
}

void criterion_5(Check& c) {
    for (uint32_t q : {2u, 3u}) {
        BaerStructure bs = baer_structure(q);
        // deterministic k-arc of Theta(S): greedy maximal in id order
        std::vector<int> arc;
        for (int pt = 0; pt < bs.theta.n_points; ++pt) {
            std::vector<int> cand = arc;
            cand.push_back(pt);
            if (bs.theta.is_arc(cand)) arc = cand;
        }
        c.require(arc.size() == q + (q % 2 == 0 ? 2 : 1), "greedy finds a maximal affine arc");
        PencilArc parc = expand_arc_to_parc(arc, bs);
        c.require(parc.points.size() == arc.size() * q, "expansion has exactly kq points");
        c.require(verify_parc(parc.points, parc.pencil, 2).ok, "expansion passes (11)-(13)");
    }
}

void criterion_6(Check& c) {
    auto sorted_nonzero = [](const PencilArc& parc) {
        std::vector<int> nz = parc.nonzero_profile();
        std::sort(nz.begin(), nz.end());
        return nz;
    };
    c.require(sorted_nonzero(construct_parc(3, 28).parc) == std::vector<int>{3, 3, 3},
              "variant 28 at q=3: profile (3,3,3)");
    c.require(sorted_nonzero(construct_parc(3, 27).parc) == std::vector<int>{6, 6},
              "variant 27 at q=3: profile (6,6)");
    std::vector<int> v26 = sorted_nonzero(construct_parc(3, 26).parc);
    c.require(v26 == std::vector<int>{3, 3, 6}, "variant 26 at q=3: two lines of 3, one of 6");
    c.require(sorted_nonzero(construct_parc(2, 31).parc) == std::vector<int>{2, 2, 2},
              "variant 31 at q=2: profile (2,2,2)");
    c.require(sorted_nonzero(construct_parc(2, 32).parc) == std::vector<int>{4, 4},
              "variant 32 at q=2: profile (4,4)");
}

void criterion_7(Check& c) {
    for (uint32_t q : {2u, 3u}) {
        ParcBoundResult parc = parc_bound_check(q);
        c.require(parc.max_size == static_cast<int>(2 * q), "parc maximum is exactly 2q");
        c.require(parc.witness.size() == 2 * q, "stored parc witness attains the bound");
        c.require(verify_parc(parc.witness, parc.pencil, 2).ok, "parc witness re-verifies");

        HarcBoundResult harc = harc_bound_check(q);
        c.require(harc.max_total == static_cast<int>(q + 2), "harc maximum is exactly q+2");
        c.require(verify_harc(harc.k1_witness, harc.k2_witness, harc.psi, 2).ok,
                  "harc witness re-verifies");
    }
}

void criterion_8(Check& c) {
    HierarchicalArc h2 = construct_harc(2);
    c.require(h2.k1_points.size() + h2.k2_points.size() == 6, "q=2 total 6 = q^2+2");
    c.require(verify_harc(h2.k1_points, h2.k2_points, h2.psi, 2).ok, "q=2 harc verifies");

    HierarchicalArc h3 = construct_harc(3);
    c.require(h3.k1_points.size() + h3.k2_points.size() == 10, "q=3 total 10 <= 11");
    c.require(verify_harc(h3.k1_points, h3.k2_points, h3.psi, 2).ok, "q=3 harc verifies");

    HierarchicalArc h4 = construct_harc(4);
    c.require(h4.k1_points.size() + h4.k2_points.size() == 18, "q=4 total 18 = q^2+2");
    c.require(verify_harc(h4.k1_points, h4.k2_points, h4.psi, 2).ok, "q=4 harc verifies");
}

void criterion_9(Check& c) {
    for (const auto& fx : scheme_battery()) {
        const Scheme& s = fx.scheme;
        const FieldPtr& f = s.generator.field();
        RepresentativeArray arr = generate_array(s.generator);

        // column uniformity: dealer and every participant column
        for (size_t col = 0; col < arr.n_cols(); ++col) {
            std::vector<uint64_t> counts(f->q(), 0);
            for (size_t row = 0; row < arr.n_rows(); ++row) ++counts[arr.entry(row, col)];
            for (uint64_t count : counts)
                c.require(count == arr.n_rows() / f->q(), fx.name + ": column uniform");
        }

        // phi(M(B)) = |B| for every basis set
        for (const auto& b : s.gamma.basis()) {
            ColumnSet cols;
            for (int i : b) cols.push_back(i + 1);
            c.require(orthogonal_rank(arr, cols) == static_cast<int>(b.size()),
                      fx.name + ": phi(M(B)) = |B|");
        }

        // regularity of the full generated array
        ColumnSet all_cols;
        for (size_t col = 0; col < arr.n_cols(); ++col) all_cols.push_back(static_cast<int>(col));
        c.require(is_regular(arr, all_cols), fx.name + ": generated array regular");

        // round trip over all secrets, all authorized subsets, 10 seeds
        for (uint32_t secret = 0; secret < f->q(); ++secret)
            for (uint64_t seed = 1; seed <= 10; ++seed) {
                std::vector<Share> shares = deal(s, f->el(secret), seed);
                for (const auto& subset : all_subsets(s.generator.m())) {
                    if (!s.gamma.is_authorized(subset)) continue;
                    std::vector<Share> some;
                    for (int i : subset) some.push_back(shares[i]);
                    ReconstructResult r = reconstruct(s, some, true);
                    c.require(r.unique && r.secret.repr() == secret, fx.name + ": round trip");
                }
            }
    }
}

void criterion_10(Check& c) {
    auto f5 = Field::make(5, 1);
    AccessStructure gamma23 = threshold_basis(2, 3);

    // (a) dealer column zeroed
    {
        GeneratorMatrix bad = GeneratorMatrix::unchecked(
            FVector(f5, {0, 0}),
            {FVector(f5, {1, 1}), FVector(f5, {1, 2}), FVector(f5, {1, 3})});
        c.require(!verify_vector_scheme(bad, gamma23).verdict, "(a) vector verifier fails");
        RepresentativeArray arr = generate_array(threshold_generator(f5, 2, 3));
        for (size_t row = 0; row < arr.n_rows(); ++row) arr.set_entry(row, 0, 0);
        c.require(!verify_definitional(arr, gamma23).verdict, "(a) definitional verifier fails");
        c.require(!verify_char(arr, gamma23).verdict, "(a) char verifier fails");
    }

    // (b) two participant columns duplicated under a 2-subset basis
    {
        GeneratorMatrix dup(FVector(f5, {1, 0}),
                            {FVector(f5, {1, 1}), FVector(f5, {1, 1}), FVector(f5, {1, 3})});
        c.require(!verify_vector_scheme(dup, gamma23).verdict, "(b) vector verifier fails");
        RepresentativeArray arr = generate_array(dup);
        c.require(!verify_definitional(arr, gamma23).verdict, "(b) definitional verifier fails");
        c.require(!verify_char(arr, gamma23).verdict, "(b) char verifier fails");
    }

    // (c) one array row perturbed so that a maximum orthogonal column set
    // no longer determines the rest: a doubled linear array (lambda = 2)
    // passes as-is; flipping one entry breaks regularity and balance
    {
        auto f2 = Field::make(2, 1);
        GeneratorMatrix g = threshold_generator(f2, 2, 2);
        RepresentativeArray base = generate_array(g);
        std::vector<std::vector<uint32_t>> doubled = base.rows();
        doubled.insert(doubled.end(), base.rows().begin(), base.rows().end());
        RepresentativeArray arr(f2, base.labels(), doubled);
        AccessStructure gamma22 = threshold_basis(2, 2);
        c.require(verify_definitional(arr, gamma22).verdict, "(c) doubled array passes");
        c.require(verify_char(arr, gamma22).verdict, "(c) doubled array passes char");

        arr.set_entry(arr.n_rows() - 1, 2, 1 - arr.entry(arr.n_rows() - 1, 2));
        c.require(!is_regular(arr, {0, 1, 2}), "(c) regularity broken");
        c.require(!verify_definitional(arr, gamma22).verdict, "(c) definitional verifier fails");
        c.require(!verify_char(arr, gamma22).verdict, "(c) char verifier fails");
    }
}

} // namespace

int main() {
    int failures = 0;
    failures += run_criterion(1, "threshold/OA equivalence: OA_1(25,4,5,2) from (2,3) over GF(5)",
                              1.0, criterion_1);
    failures += run_criterion(2, "vector/definitional/char agreement across the scheme battery",
                              30.0, criterion_2);
    failures += run_criterion(3, "parallel realization: (3,3)-parc over GF(9), strength 3", 10.0,
                              criterion_3);
    failures += run_criterion(4, "hierarchical realization: (4,2)-harc in PG(2,4), strength 3", 5.0,
                              criterion_4);
    failures += run_criterion(5, "arc expansion gives kq-point pencil arcs (q = 2, 3)", 10.0,
                              criterion_5);
    failures += run_criterion(6, "constructed parc profiles match the named families", 60.0,
                              criterion_6);
    failures += run_criterion(7, "exhaustive maxima: parcs reach 2q, harcs reach q+2 (q = 2, 3)",
                              300.0, criterion_7);
    failures += run_criterion(8, "hierarchical arc maximality: totals 6, 10, 18 for q = 2, 3, 4",
                              30.0, criterion_8);
    failures += run_criterion(9, "property suites: uniformity, phi = |B|, regularity, round trips",
                              120.0, criterion_9);
    failures += run_criterion(10, "mutation sensitivity: canned corruptions flip every verifier",
                              10.0, criterion_10);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria failed\n", failures);
    }
    return failures;
}
