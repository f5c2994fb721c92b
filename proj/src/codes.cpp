#include "projcode/codes.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "projcode/qanalog.hpp"

namespace projcode {

namespace {

std::uint64_t codeword_count(const Subspace& c) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        total *= c.field().q();
        if (total > kMaxCodewords) throw GuardError("q^k exceeds the codeword scan guard (2^24)");
    }
    return total;
}

struct VecHash {
    std::size_t operator()(const std::vector<Elem>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : v) h = (h ^ e) * 1099511628211ull;
        return h;
    }
};

} // namespace

std::size_t hamming_weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw LinalgError("vector length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

bool is_nondegenerate(const Subspace& c) {
    const Matrix& g = c.basis();
    for (std::size_t j = 0; j < c.ambient(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < c.dim() && !nonzero; ++i) nonzero = g(i, j) != 0;
        if (!nonzero) return false;
    }
    return true;
}

bool is_projective(const Subspace& c) {
    if (!is_nondegenerate(c)) return false;
    const Field& f = c.field();
    std::unordered_set<std::vector<Elem>, VecHash> seen;
    for (std::size_t j = 0; j < c.ambient(); ++j) {
        auto col = monic(f, c.basis().column(j));
        if (!seen.insert(std::move(col)).second) return false;
    }
    return true;
}

bool is_projective_via_cij(const Subspace& c) {
    const std::size_t k = c.dim();
    const std::size_t n = c.ambient();
    if (k < 2) throw LinalgError("coordinate-pair criterion needs dim >= 2");
    const Field& f = c.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // C_ij = span of e_l for l not in {i, j}
            Matrix gens(f, n - 2, n);
            std::size_t r = 0;
            for (std::size_t l = 0; l < n; ++l)
                if (l != i && l != j) gens(r++, l) = 1;
            if (intersect_dim(c, canonicalize(gens)) != k - 2) return false;
        }
    return true;
}

ProjectiveSystem projective_system(const Subspace& c) {
    if (!is_nondegenerate(c)) throw LinalgError("projective system of a degenerate code");
    const Field& f = c.field();
    ProjectiveSystem ps;
    std::unordered_set<Subspace> distinct;
    for (std::size_t j = 0; j < c.ambient(); ++j) {
        Matrix col(f, 1, c.dim(), c.basis().column(j));
        ps.points.push_back(canonicalize(col));
        distinct.insert(ps.points.back());
    }
    ps.distinct_count = distinct.size();
    return ps;
}

void for_each_codeword(const Subspace& c, const std::function<void(std::span<const Elem>)>& fn) {
    const std::uint64_t total = codeword_count(c);
    const Field& f = c.field();
    const std::size_t k = c.dim();
    const std::size_t n = c.ambient();
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> digits(k, 0);
    std::vector<Elem> word(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        fn(word);
        // advance the coefficient odometer; word changes by (new - old) * row
        for (std::size_t pos = 0; pos < k; ++pos) {
            const Elem old = static_cast<Elem>(digits[pos]);
            digits[pos] = (digits[pos] + 1) % q;
            const Elem delta = f.sub(static_cast<Elem>(digits[pos]), old);
            auto row = c.basis().row(pos);
            for (std::size_t j = 0; j < n; ++j)
                if (row[j] != 0) word[j] = f.add(word[j], f.mul(delta, row[j]));
            if (digits[pos] != 0) break;
        }
    }
}

WeightDistribution weight_distribution(const Subspace& c) {
    WeightDistribution wd;
    for_each_codeword(c, [&wd](std::span<const Elem> w) {
        const std::size_t wt = hamming_weight(w);
        if (wt > 0) ++wd[wt];
    });
    return wd;
}

std::uint32_t lucas_binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    if (!is_prime(p)) throw FieldError("Lucas reduction needs a prime modulus");
    std::uint64_t result = 1;
    while (a > 0 || b > 0) {
        const std::uint64_t ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        // binomial(ad, bd) mod p with ad < p via the multiplicative formula
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < bd; ++i) {
            num = num * ((ad - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        // den is a unit since all factors are < p
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * (num * inv % p) % p;
        a /= p;
        b /= p;
    }
    return static_cast<std::uint32_t>(result);
}

std::vector<std::uint64_t> simplex_equation_degrees(const Field& field, std::size_t k) {
    std::vector<std::uint64_t> degrees;
    const std::uint64_t count = static_cast<std::uint64_t>(field.m()) * k - field.m();
    std::uint64_t d = 1;
    for (std::uint64_t j = 0; j < count; ++j) {
        degrees.push_back(d);
        d *= field.p();
    }
    return degrees;
}

bool simplex_equations_satisfied(std::span<const Elem> v, const Field& field, std::size_t k, EquationMethod method) {
    const std::uint64_t n = bracket(k, field.q());
    if (v.size() != n) throw LinalgError("vector length must be [k]_q");
    const auto degrees = simplex_equation_degrees(field, k);
    if (degrees.empty()) return true;

    if (method == EquationMethod::kLucas) {
        const std::size_t w = hamming_weight(v);
        return std::all_of(degrees.begin(), degrees.end(),
                           [&](std::uint64_t d) { return lucas_binom_mod_p(w, d, field.p()) == 0; });
    }

    // e_d of y_i = x_i^{q-1} via e_d <- e_d + y_i e_{d-1}, processing one variable at a time
    const std::size_t top = static_cast<std::size_t>(degrees.back());
    std::vector<Elem> e(top + 1, 0);
    e[0] = 1;
    for (auto x : v) {
        const Elem y = field.pow(x, field.q() - 1);
        if (y == 0) continue;
        for (std::size_t d = top; d >= 1; --d) e[d] = field.add(e[d], field.mul(y, e[d - 1]));
    }
    return std::all_of(degrees.begin(), degrees.end(), [&](std::uint64_t d) { return e[d] == 0; });
}

bool is_simplex_vector(std::span<const Elem> v, const Field& field, std::size_t k) {
    const std::uint64_t n = bracket(k, field.q());
    if (v.size() != n) throw LinalgError("vector length must be [k]_q");
    std::uint64_t target = 1;
    for (std::size_t i = 1; i < k; ++i) target *= field.q();
    return hamming_weight(v) == target;
}

bool is_simplex_code(const Subspace& c) {
    const std::size_t k = c.dim();
    if (k == 0) return false;
    codeword_count(c);
    if (bracket(k, c.field().q()) != c.ambient()) return false;
    bool ok = true;
    std::uint64_t target = 1;
    for (std::size_t i = 1; i < k; ++i) target *= c.field().q();
    bool first = true;
    for_each_codeword(c, [&](std::span<const Elem> w) {
        if (first) {
            first = false;
            return;
        }
        if (ok && hamming_weight(w) != target) ok = false;
    });
    return ok;
}

CodeProfile profile(const Subspace& c) {
    CodeProfile p;
    p.n = c.ambient();
    p.k = c.dim();
    p.q = c.field().q();
    p.nondegenerate = is_nondegenerate(c);
    p.projective = p.nondegenerate && is_projective(c);
    p.weight_distribution = weight_distribution(c);
    std::uint64_t target = 1;
    for (std::size_t i = 1; i < p.k; ++i) target *= p.q;
    p.simplex = p.k > 0 && p.projective && bracket(p.k, p.q) == p.n && p.weight_distribution.size() == 1 &&
                p.weight_distribution.begin()->first == target;
    return p;
}

// ---- monomial equivalence -----------------------------------------------------

namespace {

class MonomialSearch {
public:
    MonomialSearch(const Subspace& c1, const Subspace& c2)
        : f_(c1.field()), g1_(c1.basis()), g2_(c2.basis()), n_(c1.ambient()), k_(c1.dim()) {}

    std::optional<MonomialWitness> run() {
        // group columns of G2 by point
        for (std::size_t j = 0; j < n_; ++j) {
            auto col = g2_.column(j);
            if (hamming_weight(col) == 0) {
                zero2_.push_back(j);
                continue;
            }
            auto key = monic(f_, col);
            auto [it, inserted] = point_index_.try_emplace(key, point_cols_.size());
            if (inserted) point_cols_.emplace_back();
            point_cols_[it->second].push_back(j);
        }
        used_.assign(point_cols_.size(), 0);
        // level of a G1 column = last nonzero coordinate; zero columns get none
        level_.assign(n_, SIZE_MAX);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < k_; ++i)
                if (g1_(i, j) != 0) level_[j] = i;
        std::size_t zero1 = static_cast<std::size_t>(std::count(level_.begin(), level_.end(), SIZE_MAX));
        if (zero1 != zero2_.size()) return std::nullopt;
        if (k_ == 0) return finish();
        t_.assign(k_, std::vector<Elem>(k_, 0));
        return descend(0);
    }

private:
    std::vector<Elem> image(std::size_t col, std::size_t upto) const {
        std::vector<Elem> out(k_, 0);
        for (std::size_t i = 0; i <= upto; ++i) {
            const Elem a = g1_(i, col);
            if (a == 0) continue;
            for (std::size_t r = 0; r < k_; ++r) out[r] = f_.add(out[r], f_.mul(a, t_[i][r]));
        }
        return out;
    }

    bool independent(std::size_t upto) const {
        Matrix m(f_, upto + 1, k_);
        for (std::size_t i = 0; i <= upto; ++i)
            for (std::size_t r = 0; r < k_; ++r) m(i, r) = t_[i][r];
        return rank(m) == upto + 1;
    }

    std::optional<MonomialWitness> descend(std::size_t depth) {
        const std::uint32_t q = f_.q();
        for (std::size_t j = 0; j < n_; ++j) {
            if (std::find(zero2_.begin(), zero2_.end(), j) != zero2_.end()) continue;
            for (std::uint32_t mu = 1; mu < q; ++mu) {
                // a global scalar on T is absorbed by the per-coordinate scalars
                if (depth == 0 && mu != 1) break;
                for (std::size_t r = 0; r < k_; ++r) t_[depth][r] = f_.mul(static_cast<Elem>(mu), g2_(r, j));
                if (!independent(depth)) continue;
                std::vector<std::size_t> touched;
                bool ok = true;
                for (std::size_t c = 0; c < n_ && ok; ++c) {
                    if (level_[c] != depth) continue;
                    auto key = monic(f_, image(c, depth));
                    auto it = point_index_.find(key);
                    if (it == point_index_.end() || used_[it->second] >= point_cols_[it->second].size()) {
                        ok = false;
                        break;
                    }
                    ++used_[it->second];
                    touched.push_back(it->second);
                }
                if (ok) {
                    auto res = depth + 1 == k_ ? finish() : descend(depth + 1);
                    if (res) return res;
                }
                for (auto p : touched) --used_[p];
            }
        }
        return std::nullopt;
    }

    std::optional<MonomialWitness> finish() {
        MonomialWitness w;
        w.permutation.assign(n_, 0);
        w.scalars.assign(n_, 1);
        std::vector<std::size_t> next(point_cols_.size(), 0);
        std::size_t next_zero = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            if (level_[c] == SIZE_MAX) {
                w.permutation[c] = zero2_[next_zero++];
                continue;
            }
            auto img = image(c, k_ - 1);
            auto p = point_index_.at(monic(f_, img));
            const std::size_t j = point_cols_[p][next[p]++];
            w.permutation[c] = j;
            std::size_t t = 0;
            while (img[t] == 0) ++t;
            w.scalars[c] = f_.div(g2_(t, j), img[t]);
        }
        return w;
    }

    struct VecHashLocal {
        std::size_t operator()(const std::vector<Elem>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (auto e : v) h = (h ^ e) * 1099511628211ull;
            return h;
        }
    };

    const Field& f_;
    const Matrix& g1_;
    const Matrix& g2_;
    std::size_t n_, k_;
    std::vector<std::size_t> zero2_;
    std::unordered_map<std::vector<Elem>, std::size_t, VecHashLocal> point_index_;
    std::vector<std::vector<std::size_t>> point_cols_;
    std::vector<std::size_t> used_;
    std::vector<std::size_t> level_;
    std::vector<std::vector<Elem>> t_;  // t_[i] = image of the i-th unit vector
};

} // namespace

Subspace apply_monomial(const Subspace& c, const MonomialWitness& w) {
    const std::size_t n = c.ambient();
    if (w.permutation.size() != n || w.scalars.size() != n) throw LinalgError("witness length mismatch");
    const Field& f = c.field();
    Matrix out(f, c.dim(), n);
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, w.permutation[j]) = f.mul(w.scalars[j], c.basis()(i, j));
    return canonicalize(out);
}

std::optional<MonomialWitness> monomial_equivalent(const Subspace& c1, const Subspace& c2) {
    if (&c1.field() != &c2.field() || c1.ambient() != c2.ambient() || c1.dim() != c2.dim())
        throw LinalgError("monomial equivalence needs equal (n, k, q)");
    if (c1.ambient() > 16 || c1.field().q() > 4) throw GuardError("monomial search limited to n <= 16, q <= 4");

    std::uint64_t words = 1;
    bool small = true;
    for (std::size_t i = 0; i < c1.dim() && small; ++i) {
        words *= c1.field().q();
        small = words <= kMaxCodewords;
    }
    if (small && weight_distribution(c1) != weight_distribution(c2)) return std::nullopt;

    auto w = MonomialSearch(c1, c2).run();
    if (!w) return std::nullopt;
    // replay
    std::vector<bool> hit(c1.ambient(), false);
    for (auto j : w->permutation) {
        if (j >= hit.size() || hit[j]) throw std::logic_error("monomial witness is not a permutation");
        hit[j] = true;
    }
    for (auto s : w->scalars)
        if (s == 0) throw std::logic_error("monomial witness has a zero scalar");
    if (apply_monomial(c1, *w) != c2) throw std::logic_error("monomial witness failed replay");
    return w;
}

} // namespace projcode
