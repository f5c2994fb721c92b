#ifndef PROJCODE_GF_HPP
#define PROJCODE_GF_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace projcode {

// Raw element encoding: base-p digits of the polynomial coefficients,
// little-endian (e = sum a_j p^j represents sum a_j alpha^j).
using Elem = std::uint16_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * GF(p^m) for prime p, 1 <= m <= 8 and q <= 2^16.
 *
 * Fields are interned: Field::get(p, m) always returns the same object, so
 * two elements belong to the same field iff their Field pointers compare
 * equal. For q <= 256 the addition, multiplication, negation and inverse
 * tables are precomputed; larger fields compute on demand.
 */
class Field {
public:
    static constexpr std::uint32_t kMaxDegree = 8;
    static constexpr std::uint32_t kMaxOrder = 1u << 16;
    static constexpr std::uint32_t kTableOrder = 256;

    static const Field& get(std::uint32_t p, std::uint32_t m = 1);
    // Accepts any prime power q.
    static const Field& of_order(std::uint32_t q);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    bool is_prime_field() const { return m_ == 1; }

    // Monic modulus, coefficients low to high (size m+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        if (tabled_) return add_[a * q_ + b];
        return add_slow(a, b);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        if (tabled_) return neg_[a];
        return neg_slow(a);
    }
    Elem mul(Elem a, Elem b) const {
        if (tabled_) return mul_[a * q_ + b];
        return mul_slow(a, b);
    }
    // Throws FieldError on a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    // 0^0 = 1.
    Elem pow(Elem a, std::uint64_t e) const;

    bool is_square(Elem a) const;
    // Smallest encoding that is not a square; throws for even q.
    Elem first_nonsquare() const;

    // Encoding of the integer c (c * 1, i.e. c mod p in the prime subfield).
    Elem from_int(std::int64_t c) const;

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    Elem add_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    Elem mul_slow(Elem a, Elem b) const;
    Elem inv_slow(Elem a) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    bool tabled_ = false;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

bool is_prime(std::uint64_t n);

// Returns true iff the monic polynomial (coefficients low to high) is
// irreducible over GF(p). Trial division by every monic polynomial of degree
// 1..deg/2; intended for deg <= 8.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Decomposes q = p^m; throws FieldError if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

/*
 * Element value type bound to its field. Arithmetic between elements of
 * different fields throws FieldError.
 */
class FieldElement {
public:
    FieldElement(const Field& field, std::uint32_t value);

    const Field& field() const { return *field_; }
    Elem value() const { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {*field_, field_->inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && value_ == o.value_;
    }

private:
    void check_same(const FieldElement& o) const;

    const Field* field_;
    Elem value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

} // namespace projcode

#endif // PROJCODE_GF_HPP
