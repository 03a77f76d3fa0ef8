#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcshare/errors.hpp"

namespace arcshare {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement;

// Exact arithmetic in GF(p^n). Elements are encoded canonically as an index
// in [0, q): the base-p digits of the index are the coefficients of the
// residue polynomial, lowest degree first. q = p^n is capped at 2^16; all
// constructions here are desk scale and must stay exhaustively checkable.
//
// A Field is immutable once built and is always handled through a shared
// FieldPtr, so elements and containers can reference it safely from any
// thread.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Builds GF(p^n). If no modulus is given, the lexicographically least
    // monic irreducible polynomial of degree n over GF(p) is found by
    // exhaustive search ("least" = smallest canonical index of the
    // non-leading coefficients). A supplied modulus must be monic of degree
    // n with coefficients reduced mod p; irreducibility is verified by
    // trial division against every monic polynomial of degree <= n/2.
    static FieldPtr make(uint32_t p, uint32_t n,
                         std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }
    // Coefficients c0..cn, low degree first, cn = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // Arithmetic on canonical indices. Hot paths (linear algebra, array
    // scans) use these directly; FieldElement wraps them with spec checks.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const; // throws DivisionByZero on 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    bool same_as(const Field& other) const;

    FieldElement el(uint32_t repr) const;
    FieldElement zero() const;
    FieldElement one() const;
    // All q elements, 0 first, ordered by canonical index.
    std::vector<FieldElement> elements() const;

    std::string describe() const; // e.g. "GF(9)=GF(3)[x]/(x^2+1)"

private:
    Field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus);
    void build_tables();

    uint32_t mul_slow(uint32_t a, uint32_t b) const;
    uint32_t inv_slow(uint32_t a) const;

    uint32_t p_, n_, q_;
    std::vector<uint32_t> modulus_;
    // Dense tables for small fields; everything the constructions touch
    // fits here. Larger fields fall back to polynomial arithmetic.
    bool tabled_ = false;
    std::vector<uint32_t> mul_table_;
    std::vector<uint32_t> inv_table_;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, uint32_t repr);

    uint32_t repr() const { return repr_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return repr_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    FieldPtr field_;
    uint32_t repr_ = 0;
};

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, uint64_t e);

// Shared-spec guard used across modules; throws SpecMismatch.
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

bool is_prime(uint32_t v);
// Factors a prime power q = p^n; throws NotPrime when q is not one.
std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q);

} // namespace arcshare
