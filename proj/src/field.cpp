#include "arcshare/field.hpp"

#include <algorithm>
#include <sstream>

namespace arcshare {

namespace {

constexpr uint32_t kMaxOrder = 1u << 16;
constexpr uint32_t kTableLimit = 256; // dense mul/inv tables up to GF(256)

using Poly = std::vector<uint32_t>; // coefficients mod p, low degree first

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly from_index(uint64_t idx, uint32_t p, size_t width) {
    Poly out(width, 0);
    for (size_t i = 0; i < width; ++i) {
        out[i] = static_cast<uint32_t>(idx % p);
        idx /= p;
    }
    return out;
}

uint32_t to_index(const Poly& a, uint32_t p) {
    uint64_t idx = 0;
    for (int i = degree(a); i >= 0; --i) idx = idx * p + a[i];
    return static_cast<uint32_t>(idx);
}

// a mod b over GF(p), b non-zero; plain schoolbook division.
Poly poly_rem(Poly a, const Poly& b, uint32_t p) {
    int db = degree(b);
    uint32_t lead_inv = 1;
    { // inverse of b's leading coefficient mod p
        uint32_t lead = b[db];
        for (uint32_t x = 1; x < p; ++x)
            if (lead * x % p == 1) { lead_inv = x; break; }
    }
    for (int da = degree(a); da >= db; da = degree(a)) {
        uint64_t c = static_cast<uint64_t>(a[da]) * lead_inv % p;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            uint64_t s = static_cast<uint64_t>(c) * b[i] % p;
            a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - s) % p);
        }
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    Poly out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    return out;
}

bool is_irreducible(const Poly& m, uint32_t p) {
    int n = degree(m);
    if (n <= 0) return false;
    // trial division by every monic polynomial of degree 1..n/2
    for (int d = 1; 2 * d <= n; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g = from_index(idx, p, d + 1);
            g[d] = 1;
            if (degree(poly_rem(m, g, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
    if (q < 2) raise(Errc::NotPrime, "order must be at least 2");
    for (uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        // p is the smallest divisor, hence prime
        uint32_t n = 0, rest = q;
        while (rest % p == 0) { rest /= p; ++n; }
        if (rest != 1) raise(Errc::NotPrime, std::to_string(q) + " is not a prime power");
        return {p, n};
    }
    raise(Errc::NotPrime, "unreachable");
}

FieldPtr Field::make(uint32_t p, uint32_t n, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) raise(Errc::BadInput, "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxOrder) raise(Errc::UnsupportedOrder, "field order exceeds 2^16");
    }

    Poly m;
    if (modulus) {
        m = *modulus;
        if (m.size() != n + 1 || m[n] != 1)
            raise(Errc::BadInput, "modulus must be monic of degree n");
        for (uint32_t c : m)
            if (c >= p) raise(Errc::BadInput, "modulus coefficient not reduced mod p");
        if (!is_irreducible(m, p))
            raise(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
    } else {
        // smallest canonical index of the low coefficients wins
        uint64_t count = 1;
        for (uint32_t i = 0; i < n; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly cand = from_index(idx, p, n + 1);
            cand[n] = 1;
            if (is_irreducible(cand, p)) { m = cand; break; }
        }
    }

    return FieldPtr(new Field(p, n, std::move(m)));
}

Field::Field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < n_; ++i) q *= p_;
    q_ = static_cast<uint32_t>(q);
    if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    inv_table_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
        for (uint32_t b = a; b < q_; ++b) {
            uint32_t v = mul_slow(a, b);
            mul_table_[static_cast<size_t>(a) * q_ + b] = v;
            mul_table_[static_cast<size_t>(b) * q_ + a] = v;
            if (v == 1) { inv_table_[a] = b; inv_table_[b] = a; }
        }
    tabled_ = true;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (n_ == 1) return (a + b) % p_;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_; mult *= p_;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    if (n_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    Poly pa = from_index(a, p_, n_), pb = from_index(b, p_, n_);
    Poly prod = poly_rem(poly_mul(pa, pb, p_), modulus_, p_);
    return to_index(prod, p_);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (tabled_) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

uint32_t Field::inv_slow(uint32_t a) const {
    // Fermat: a^(q-2); fields above the table limit are rare here and small
    // enough for this to be fine.
    return pow(a, q_ - 2);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
    if (tabled_) return inv_table_[a];
    return inv_slow(a);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool Field::same_as(const Field& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
}

FieldElement Field::el(uint32_t repr) const {
    return FieldElement(shared_from_this(), repr);
}

FieldElement Field::zero() const { return el(0); }
FieldElement Field::one() const { return el(1); }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint32_t r = 0; r < q_; ++r) out.push_back(el(r));
    return out;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (n_ > 1) {
        os << "=GF(" << p_ << ")[x]/(";
        bool first = true;
        for (int i = static_cast<int>(n_); i >= 0; --i) {
            uint32_t c = modulus_[i];
            if (c == 0) continue;
            if (!first) os << "+";
            if (i == 0 || c != 1) os << c;
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

FieldElement::FieldElement(FieldPtr field, uint32_t repr) : field_(std::move(field)), repr_(repr) {
    if (!field_) raise(Errc::BadInput, "element without field");
    if (repr_ >= field_->q()) raise(Errc::BadInput, "element index out of range");
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        raise(Errc::SpecMismatch, std::string("mixed fields in ") + where);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field(), b.field(), "add");
    return FieldElement(a.field(), a.field()->add(a.repr(), b.repr()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field(), b.field(), "sub");
    return FieldElement(a.field(), a.field()->sub(a.repr(), b.repr()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field(), b.field(), "mul");
    return FieldElement(a.field(), a.field()->mul(a.repr(), b.repr()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field(), b.field(), "div");
    return FieldElement(a.field(), a.field()->mul(a.repr(), a.field()->inv(b.repr())));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg(repr_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) return a.field() == b.field() && a.repr() == b.repr();
    return a.field()->same_as(*b.field()) && a.repr() == b.repr();
}

FieldElement inv(const FieldElement& a) {
    return FieldElement(a.field(), a.field()->inv(a.repr()));
}

FieldElement pow(const FieldElement& a, uint64_t e) {
    return FieldElement(a.field(), a.field()->pow(a.repr(), e));
}

} // namespace arcshare
