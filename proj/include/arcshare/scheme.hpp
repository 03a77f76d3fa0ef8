#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcshare/access.hpp"
#include "arcshare/rep_array.hpp"

namespace arcshare {

// Column data of a linear scheme: dealer vector d plus one vector per
// participant, all in GF(q)^k and none zero.
class GeneratorMatrix {
public:
    GeneratorMatrix(FVector dealer, std::vector<FVector> participants,
                    std::vector<std::string> labels = {});

    // Bypasses the zero-column check; exists so corruption experiments can
    // feed deliberately broken generators to the verifiers.
    static GeneratorMatrix unchecked(FVector dealer, std::vector<FVector> participants,
                                     std::vector<std::string> labels = {});

    const FieldPtr& field() const { return dealer_.field(); }
    int k() const { return static_cast<int>(dealer_.size()); }
    int m() const { return static_cast<int>(participants_.size()); }
    const FVector& dealer() const { return dealer_; }
    const std::vector<FVector>& participants() const { return participants_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // k x (m+1) matrix, dealer first.
    FMatrix full_matrix() const;

private:
    GeneratorMatrix() = default;
    FVector dealer_;
    std::vector<FVector> participants_;
    std::vector<std::string> labels_;
};

// The q^k distribution rules of the linear scheme.
RepresentativeArray generate_array(const GeneratorMatrix& g);

struct ReportEntry {
    std::string condition;
    std::vector<int> subset;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::string mode;
    std::vector<ReportEntry> entries;
    bool verdict = true;

    void add(std::string condition, std::vector<int> subset, bool pass, std::string detail = "");
    void note(std::string condition, std::string detail);
    void merge(const VerificationReport& other);
};

// Linear characterization: for every basis set X, each |X| of the vectors
// {d} u X are independent while all |X|+1 are dependent; for every maximal
// unauthorized Y, rank({d} u Y) = rank(Y) + 1 <= k. Checking only maximal
// Y suffices (d outside span(Y) stays outside spans of subsets); the
// report records that reduction.
VerificationReport verify_vector_scheme(const GeneratorMatrix& g, const AccessStructure& gamma);

// Definitional check on the representative array: K-uniqueness on every
// basis set, K-balance on every maximal unauthorized set. The exhaustive
// flag extends both to all subsets (n <= 12).
VerificationReport verify_definitional(const RepresentativeArray& m, const AccessStructure& gamma,
                                       bool exhaustive = false);

// Orthogonality characterization: every basis B gives a regular orthogonal
// array of strength exactly |B| on columns {D} u B; every maximal
// unauthorized B satisfies phi({D} u B) = phi(B) + 1 with regularity.
VerificationReport verify_char(const RepresentativeArray& m, const AccessStructure& gamma);

enum class VerifyMode { Vector, Definitional, Char, All };

struct Scheme {
    GeneratorMatrix generator;
    AccessStructure gamma;
    VerificationReport report;
};

// Builds and verifies in one step; the report (pass or fail) is attached.
Scheme make_scheme(GeneratorMatrix g, AccessStructure gamma, VerifyMode mode = VerifyMode::Vector);

// Shamir-style (t,n) threshold generator over GF(q): dealer at the curve
// point of 0, participants at the q-1 non-zero points plus the point at
// infinity, so n can reach q.
GeneratorMatrix threshold_generator(const FieldPtr& field, int t, int n);

struct Share {
    int index;
    std::string label;
    FieldElement value;
};

// Uniformly random rule consistent with the secret, derived from the seed
// alone: x = x0(secret) + sum of seeded coefficients over a basis of the
// dealer's orthogonal complement. Requires a passing report.
std::vector<Share> deal(const Scheme& s, const FieldElement& secret, uint64_t seed);

struct AmbiguitySet {
    uint64_t matching_rows = 0;        // rules consistent with the shares
    std::vector<uint64_t> key_counts;   // per key repr, size q
};

struct ReconstructResult {
    bool unique = false;
    FieldElement secret;    // set when unique
    AmbiguitySet ambiguity; // set when not
};

// Solves the share equations. Authorized sets determine the secret
// uniquely; unauthorized sets yield the exact key distribution over all
// consistent rules. Contradictory shares raise InconsistentShares. With
// claim_authorized set, an ambiguous outcome raises VerificationFailed.
ReconstructResult reconstruct(const Scheme& s, const std::vector<Share>& shares,
                              bool claim_authorized = false);

struct Rational {
    int64_t num, den;
};

// log|K| / log|S|; identically 1 here since keys and shares share a field.
Rational information_rate(const Scheme& s);

} // namespace arcshare
