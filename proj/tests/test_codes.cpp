#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "projcode/codes.hpp"
#include "projcode/constructions.hpp"

using namespace projcode;

namespace {

oracle::Field mirror(const Field& f) { return {f.p(), f.m(), f.modulus()}; }

oracle::Rows rows_of(const Matrix& m) {
    oracle::Rows out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

// Calls fn on every vector of F_q^n.
template <class Fn>
void all_vectors(std::uint32_t q, std::size_t n, Fn fn) {
    std::vector<Elem> v(n, 0);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == q) v[i++] = 0;
        if (i == n) break;
    }
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

TEST_CASE("hamming weight and distance") {
    std::vector<Elem> a{0, 1, 2, 0}, b{1, 1, 0, 0};
    CHECK(hamming_weight(a) == 2);
    CHECK(hamming_distance(a, b) == 2);
}

TEST_CASE("weight distributions") {
    const Field& f2 = Field::of_order(2);
    CHECK(weight_distribution(simplex_generator(f2, 4)) == WeightDistribution{{8, 15}});
    CHECK(weight_distribution(Subspace::full(f2, 2)) == WeightDistribution{{1, 2}, {2, 1}});
    CHECK(weight_distribution(simplex_generator(Field::of_order(3), 3)) == WeightDistribution{{9, 26}});

    std::mt19937_64 rng(2);
    for (auto q : {2u, 3u, 4u}) {
        const Field& f = Field::of_order(q);
        const auto o = mirror(f);
        for (int t = 0; t < 10; ++t) {
            Matrix g(f, 3, 6);
            for (auto r = 0u; r < 3; ++r)
                for (auto c = 0u; c < 6; ++c) g(r, c) = static_cast<Elem>(rng() % q);
            Subspace s = canonicalize(g);
            auto expected = oracle::weight_distribution(o, rows_of(g), 6);
            CHECK(weight_distribution(s) == WeightDistribution(expected.begin(), expected.end()));
        }
    }
    CHECK_THROWS_AS(weight_distribution(Subspace::full(Field::of_order(2), 25)), GuardError);
}

TEST_CASE("lucas reduction matches binomials mod p") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint64_t a = 0; a <= 100; ++a)
            for (std::uint64_t b = 0; b <= 100; ++b) REQUIRE(lucas_binom_mod_p(a, b, p) == oracle::binom_mod(a, b, p));
    CHECK(lucas_binom_mod_p(6, 2, 2) == 1);
    CHECK(lucas_binom_mod_p(8, 2, 2) == 0);
    CHECK(lucas_binom_mod_p(17, 0, 7) == 1);
    CHECK_THROWS_AS(lucas_binom_mod_p(5, 2, 4), FieldError);
}

TEST_CASE("simplex equation examples") {
    const Field& f = Field::of_order(2);
    std::vector<Elem> w4{1, 1, 1, 1, 0, 0, 0}, w2{1, 1, 0, 0, 0, 0, 0}, z(7, 0);
    for (auto m : {EquationMethod::kLucas, EquationMethod::kPolynomial}) {
        CHECK(simplex_equations_satisfied(w4, f, 3, m));
        CHECK_FALSE(simplex_equations_satisfied(w2, f, 3, m));
        CHECK(simplex_equations_satisfied(z, f, 3, m));
    }
    CHECK_FALSE(is_simplex_vector(z, f, 3));
    CHECK(is_simplex_vector(w4, f, 3));
    std::vector<Elem> ones(13, 1);
    CHECK_FALSE(is_simplex_vector(ones, Field::of_order(3), 3));
    std::vector<Elem> short_v(6, 0);
    CHECK_THROWS_AS(simplex_equations_satisfied(short_v, f, 3), LinalgError);
    CHECK_THROWS_AS(is_simplex_vector(short_v, f, 3), LinalgError);
    CHECK(simplex_equation_degrees(f, 3) == std::vector<std::uint64_t>{1, 2});
    CHECK(simplex_equation_degrees(Field::of_order(4), 2) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("equation system against literal elementary symmetric sums") {
    // (q, k) with n small enough to enumerate every vector
    for (auto [q, k] : {std::pair{2u, 3u}, {3u, 2u}, {4u, 2u}, {2u, 4u}}) {
        const Field& f = Field::of_order(q);
        const auto o = mirror(f);
        const std::size_t n = (ipow(q, k) - 1) / (q - 1);
        const auto degrees = simplex_equation_degrees(f, k);
        CHECK(degrees.size() == f.m() * k - f.m());
        std::size_t checked = 0;
        all_vectors(q, n, [&](const std::vector<Elem>& v) {
            if (q == 2 && k == 4 && (checked++ % 7) != 0) return;
            oracle::Vec y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = o.pow(v[i], q - 1);
            bool literal = true;
            for (auto d : degrees) literal = literal && oracle::elementary_symmetric(o, y, d) == 0;
            const bool lucas = simplex_equations_satisfied(v, f, k, EquationMethod::kLucas);
            const bool poly = simplex_equations_satisfied(v, f, k, EquationMethod::kPolynomial);
            REQUIRE(lucas == literal);
            REQUIRE(poly == literal);
            if (hamming_weight(v) > 0) REQUIRE(lucas == (oracle::weight(y) == ipow(q, k - 1)));
        });
    }
}

TEST_CASE("both projectivity criteria agree with brute force") {
    const Field& f2 = Field::of_order(2);
    const auto o2 = mirror(f2);
    auto run = [&](const Field& f, const oracle::Field& o, std::size_t n, std::size_t k) {
        for_each_subspace(f, n, k, [&](const Subspace& s) {
            const bool expected = oracle::projective(o, rows_of(s.basis()), n);
            REQUIRE(is_projective(s) == expected);
            REQUIRE(is_projective_via_cij(s) == expected);
        });
    };
    run(f2, o2, 4, 2);
    run(f2, o2, 5, 3);
    const Field& f3 = Field::of_order(3);
    run(f3, mirror(f3), 4, 2);
    const Field& f4 = Field::of_order(4);
    run(f4, mirror(f4), 4, 2);

    const Field& f = Field::of_order(2);
    CHECK_FALSE(is_nondegenerate(canonicalize(Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}}))));
    CHECK(is_nondegenerate(canonicalize(Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}}))));
}

TEST_CASE("simplex codes") {
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {4u, 2u}, {5u, 2u}}) {
        CAPTURE(q);
        CAPTURE(k);
        const Field& f = Field::of_order(q);
        Subspace s = simplex_generator(f, k);
        CHECK(is_simplex_code(s));
        CHECK(is_projective(s));
        CHECK(weight_distribution(s) == WeightDistribution{{ipow(q, k - 1), ipow(q, k) - 1}});
        auto ps = projective_system(s);
        CHECK(ps.distinct_count == s.ambient());
        std::set<Subspace> pts(ps.points.begin(), ps.points.end());
        CHECK(pts.size() == s.ambient());
        auto prof = profile(s);
        CHECK(prof.simplex);
        CHECK(prof.projective);
        CHECK(prof.nondegenerate);
        CHECK(prof.n == s.ambient());
        CHECK(prof.k == k);
        CHECK(prof.q == q);
    }
    const Field& f = Field::of_order(2);
    CHECK_FALSE(is_simplex_code(Subspace::full(f, 3)));
}

TEST_CASE("fixture lines give simplex sums") {
    auto lines = binary_fixture_lines();
    const Field& f = Field::of_order(2);
    CHECK(is_simplex_vector(lines.l1.row(0), f, 4));
    Subspace l12 = canonicalize(Matrix::vconcat({&lines.l1, &lines.l2}));
    Subspace l23 = canonicalize(Matrix::vconcat({&lines.l2, &lines.l3}));
    CHECK(l12.dim() == 4);
    CHECK(is_simplex_code(l12));
    CHECK(is_simplex_code(l23));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix x(f, 1, 15), y(f, 1, 15);
            for (std::size_t c = 0; c < 15; ++c) {
                x(0, c) = lines.l1(i, c);
                y(0, c) = lines.l3(j, c);
            }
            CHECK(hamming_distance(x.row(0), y.row(0)) != 8);
            CHECK_FALSE(is_simplex_code(canonicalize(Matrix::vconcat({&x, &y, &lines.l2}))));
        }
}

TEST_CASE("monomial equivalence") {
    const Field& f2 = Field::of_order(2);
    Subspace s = simplex_generator(f2, 3);
    auto id = monomial_equivalent(s, s);
    REQUIRE(id);
    CHECK(apply_monomial(s, *id) == s);

    Matrix g = simplex_generator_matrix(f2, 3);
    Matrix shuffled(f2, 3, 7);
    const std::vector<std::size_t> perm{3, 6, 0, 5, 1, 2, 4};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 7; ++c) shuffled(r, perm[c]) = g(r, c);
    Subspace t = canonicalize(shuffled);
    REQUIRE(t != s);
    auto w = monomial_equivalent(s, t);
    REQUIRE(w);
    CHECK(apply_monomial(s, *w) == t);

    const Field& f3 = Field::of_order(3);
    Matrix g3 = simplex_generator_matrix(f3, 2);
    Matrix scaled = g3;
    for (std::size_t r = 0; r < 2; ++r) scaled(r, 1) = f3.mul(2, g3(r, 1));
    auto w3 = monomial_equivalent(canonicalize(g3), canonicalize(scaled));
    REQUIRE(w3);
    CHECK(apply_monomial(canonicalize(g3), *w3) == canonicalize(scaled));

    Subspace a = canonicalize(Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    Subspace b = canonicalize(Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK_FALSE(monomial_equivalent(a, b));
    CHECK_THROWS_AS(monomial_equivalent(a, s), LinalgError);
    CHECK_THROWS_AS(monomial_equivalent(Subspace::full(Field::of_order(5), 3), Subspace::full(Field::of_order(5), 3)),
                    GuardError);
}
