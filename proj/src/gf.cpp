#include "projcode/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace projcode {

namespace {

// Fixed moduli so that element encodings never depend on a search order.
// Coefficients low to high, monic.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& modulus_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{5, 2}, {2, 1, 1}},
        {{7, 2}, {3, 1, 1}},
        {{11, 2}, {7, 1, 1}},
    };
    return table;
}

std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    // b monic
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const std::vector<std::uint32_t>& a) {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

std::vector<std::uint32_t> search_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> poly(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            poly[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        poly[m] = 1;
        if (is_irreducible_mod_p(poly, p)) return poly;
    }
    throw FieldError("no irreducible polynomial found");
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> divisor(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            divisor[d] = 1;
            if (poly_is_zero(poly_mod(poly, divisor, p))) return false;
        }
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
    if (q < 2) throw FieldError("field order must be a prime power >= 2");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw FieldError("field order " + std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), m};
}

const Field& Field::get(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1 || m > kMaxDegree) throw FieldError("extension degree out of range [1, 8]");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw FieldError("field order exceeds 2^16");
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    std::vector<std::uint32_t> modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        auto t = modulus_table().find(key);
        modulus = t != modulus_table().end() ? t->second : search_irreducible(p, m);
        if (!is_irreducible_mod_p(modulus, p)) throw FieldError("modulus table entry is reducible");
    }
    auto field = std::unique_ptr<Field>(new Field(p, m, std::move(modulus)));
    const Field& ref = *field;
    cache.emplace(key, std::move(field));
    return ref;
}

const Field& Field::of_order(std::uint32_t q) {
    auto [p, m] = prime_power_decompose(q);
    return get(p, m);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
    if (q_ <= kTableOrder) {
        const std::size_t qq = static_cast<std::size_t>(q_) * q_;
        add_.resize(qq);
        mul_.resize(qq);
        neg_.resize(q_);
        inv_.resize(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_[a] = neg_slow(static_cast<Elem>(a));
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_[a * q_ + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
                mul_[a * q_ + b] = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = static_cast<Elem>(b);
                    break;
                }
        tabled_ = true;
    }
}

Elem Field::add_slow(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>((static_cast<std::uint32_t>(a) + b) % p_);
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    std::uint32_t out = 0, scale = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::neg_slow(Elem a) const {
    if (m_ == 1) return static_cast<Elem>((p_ - a % p_) % p_);
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::mul_slow(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::vector<std::uint32_t> da(m_), db(m_);
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    prod = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < prod.size(); ++i) {
        out += prod[i] * scale;
        scale *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::inv_slow(Elem a) const {
    // a^(q-2) in the multiplicative group of order q-1
    Elem result = 1, base = a;
    std::uint64_t e = q_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero");
    if (a >= q_) throw FieldError("element encoding out of range");
    if (tabled_) return inv_[a];
    return inv_slow(a);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool Field::is_square(Elem a) const {
    for (std::uint32_t x = 0; x < q_; ++x)
        if (mul(static_cast<Elem>(x), static_cast<Elem>(x)) == a) return true;
    return false;
}

Elem Field::first_nonsquare() const {
    for (std::uint32_t a = 1; a < q_; ++a)
        if (!is_square(static_cast<Elem>(a))) return static_cast<Elem>(a);
    throw FieldError("every element of GF(" + std::to_string(q_) + ") is a square");
}

Elem Field::from_int(std::int64_t c) const {
    const std::int64_t p = p_;
    return static_cast<Elem>(((c % p) + p) % p);
}

FieldElement::FieldElement(const Field& field, std::uint32_t value) : field_(&field) {
    if (value >= field.q()) throw FieldError("element encoding out of range");
    value_ = static_cast<Elem>(value);
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->div(value_, o.value_)};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

} // namespace projcode
