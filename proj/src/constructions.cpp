#include "projcode/constructions.hpp"

#include <algorithm>
#include <set>

#include "projcode/codes.hpp"

namespace projcode {

namespace {

using Column = std::vector<Elem>;

Matrix from_columns(const Field& f, std::size_t k, const std::vector<Column>& cols) {
    Matrix m(f, k, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) m(i, j) = cols[j][i];
    return m;
}

std::vector<Column> columns_of(const Matrix& m) {
    std::vector<Column> out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
    return out;
}

// All monic vectors of F_q^k in lexicographic order (first coordinate most significant).
std::vector<Column> monic_vectors(const Field& f, std::size_t k) {
    std::vector<Column> out;
    Column v(k, 0);
    const std::uint32_t q = f.q();
    while (true) {
        auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
        if (lead != v.end() && *lead == 1) out.push_back(v);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++v[pos] < q) break;
            v[pos] = 0;
            if (pos == 0) return out;
        }
        if (k == 0) return out;
    }
}

// Greedy scan in lexicographic order for `count` columns whose points avoid `used`.
std::vector<Column> greedy_fill(const Field& f, std::size_t k, std::set<Column> used, std::size_t count) {
    std::vector<Column> out;
    for (auto& v : monic_vectors(f, k)) {
        if (out.size() == count) break;
        if (used.insert(v).second) out.push_back(v);
    }
    if (out.size() < count) throw ConstructionError("not enough points left for the filler block");
    return out;
}

std::set<Column> points_of(const Field& f, const std::vector<Column>& cols) {
    std::set<Column> s;
    for (const auto& c : cols) s.insert(monic(f, c));
    return s;
}

void require_pair(std::size_t n, std::size_t k, std::uint32_t q) {
    if (!(1 < k && k + 1 < n)) throw std::invalid_argument("need 1 < k < n-1");
    if (!pair_admissible(n, k, q))
        throw std::invalid_argument("no projective pair at these parameters: min([k]_q, [n-k]_q) < n");
}

ConstructionPair finish(Matrix gx, Matrix gy, std::size_t n, std::size_t k, const Field& f, Provenance prov, Elem a,
                        Elem lambda) {
    ConstructionPair out{canonicalize(gx), canonicalize(gy), std::move(gx), std::move(gy), n, k, f.q(),
                         2 * k > n ? 2 * k - n : 0, prov, a, lambda};
    if (out.x.dim() != k || out.y.dim() != k) throw ConstructionError("generator matrix lost rank");
    if (!is_projective(out.x) || !is_projective(out.y)) throw ConstructionError("constructed code is not projective");
    if (intersect_dim(out.x, out.y) != out.expected_meet) throw ConstructionError("intersection has the wrong dimension");
    return out;
}

// X = X' + Z, Y = Y' + Z for a complement Z of X' + Y'.
ConstructionPair extend_by_complement(const ConstructionPair& inner, std::size_t k, const Field& f, Provenance prov) {
    const std::size_t n = inner.n;
    const Subspace s = sum(inner.x, inner.y);
    std::vector<std::vector<std::uint32_t>> zrows;
    for (std::size_t j = 0; j < n; ++j) {
        if (std::binary_search(s.pivots().begin(), s.pivots().end(), j)) continue;
        std::vector<std::uint32_t> e(n, 0);
        e[j] = 1;
        zrows.push_back(std::move(e));
    }
    Matrix z = Matrix::from_rows(f, zrows, n);
    Matrix gx = Matrix::vconcat({&inner.x_generator, &z});
    Matrix gy = Matrix::vconcat({&inner.y_generator, &z});
    return finish(std::move(gx), std::move(gy), n, k, f, prov, inner.a, inner.lambda);
}

} // namespace

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::kLemma14: return "lemma14";
    case Provenance::kRemark1: return "remark1";
    case Provenance::kFixtureBinary: return "fixture_binary";
    case Provenance::kFixtureTernary: return "fixture_ternary";
    }
    return "unknown";
}

Matrix simplex_generator_matrix(const Field& field, std::size_t k) {
    if (k == 0) throw std::invalid_argument("simplex code needs k >= 1");
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < k; ++i) {
        words *= field.q();
        if (words > kMaxCodewords) throw GuardError("q^k exceeds the 2^24 guard");
    }
    return from_columns(field, k, monic_vectors(field, k));
}

Subspace simplex_generator(const Field& field, std::size_t k) { return canonicalize(simplex_generator_matrix(field, k)); }

bool pair_admissible(std::size_t n, std::size_t k, std::uint32_t q) {
    if (!(1 < k && k + 1 < n)) return false;
    return std::min(bracket(k, q), bracket(n - k, q)) >= n;
}

ConstructionPair lemma14_pair(std::size_t n, std::size_t k, const Field& f) {
    if (f.q() == 2) throw NotCoveredError("the banded construction needs q > 2; for q = 2 only 3 <= k <= n-3 is covered");
    require_pair(n, k, f.q());
    if (2 * k > n) {
        auto inner = lemma14_pair(n, n - k, f);
        return extend_by_complement(inner, k, f, Provenance::kLemma14);
    }

    const Elem a = f.q() % 2 == 1 ? f.first_nonsquare() : Elem{2};
    Matrix id = Matrix::identity(f, k);
    Matrix A(f, k, k);
    for (std::size_t i = 0; i < k; ++i) A(i, i) = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) A(i + 1, i) = 1;
    A(k - 2, k - 1) = a;

    auto used = points_of(f, columns_of(id));
    for (const auto& p : points_of(f, columns_of(A))) used.insert(p);
    if (used.size() != 2 * k) throw ConstructionError("[I, A] has proportional columns");
    Matrix B = from_columns(f, k, greedy_fill(f, k, used, n - 2 * k));

    Matrix gx = Matrix::hconcat({&id, &A, &B});
    // The eigenvalue argument guarantees some lambda; find it by rank.
    for (std::uint32_t l = 1; l < f.q(); ++l) {
        const Elem lambda = static_cast<Elem>(l);
        Matrix la = A.scaled(lambda);
        Matrix gy = Matrix::hconcat({&la, &id, &B});
        if (rank(Matrix::vconcat({&gx, &gy})) == 2 * k)
            return finish(std::move(gx), std::move(gy), n, k, f, Provenance::kLemma14, a, lambda);
    }
    throw ConstructionError("no lambda gives a full-rank stacked matrix");
}

ConstructionPair remark1_pair(std::size_t n, std::size_t k, const Field& f) {
    if (k < 3 || k + 3 > n) throw NotCoveredError("the shift construction needs 3 <= k <= n-3");
    require_pair(n, k, f.q());
    if (2 * k > n) {
        auto inner = remark1_pair(n, n - k, f);
        return extend_by_complement(inner, k, f, Provenance::kRemark1);
    }

    Matrix id = Matrix::identity(f, k);
    Matrix neg_id = id.scaled(f.neg(1));
    Matrix U(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) U(i, j) = 1;
    Matrix A(f, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) A(i, i + 1) = 1;
    Matrix u_minus_a = U - A;
    Matrix i_minus_u = id - U;

    auto used_x = points_of(f, columns_of(id));
    for (const auto& p : points_of(f, columns_of(u_minus_a))) used_x.insert(p);
    auto used_y = points_of(f, columns_of(neg_id));
    for (const auto& p : points_of(f, columns_of(i_minus_u))) used_y.insert(p);
    if (used_x.size() != 2 * k || used_y.size() != 2 * k) throw ConstructionError("shift blocks have proportional columns");

    Matrix B = from_columns(f, k, greedy_fill(f, k, used_x, n - 2 * k));
    Matrix B2 = from_columns(f, k, greedy_fill(f, k, used_y, n - 2 * k));
    Matrix gx = Matrix::hconcat({&id, &u_minus_a, &B});
    Matrix gy = Matrix::hconcat({&neg_id, &i_minus_u, &B2});
    return finish(std::move(gx), std::move(gy), n, k, f, Provenance::kRemark1, 0, 0);
}

ConstructionPair construction_pair(std::size_t n, std::size_t k, const Field& f) {
    if (f.q() > 2) return lemma14_pair(n, k, f);
    if (k >= 3 && k + 3 <= n) return remark1_pair(n, k, f);
    throw NotCoveredError("q = 2 with k = " + std::to_string(k) + ", n = " + std::to_string(n) +
                          " is not covered by either explicit construction");
}

} // namespace projcode
