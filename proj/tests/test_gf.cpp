#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "projcode/gf.hpp"

using namespace projcode;

namespace {

oracle::Field mirror(const Field& f) { return {f.p(), f.m(), f.modulus()}; }

const std::vector<std::uint32_t> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 128, 256};

} // namespace

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q);
        const Field& f = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("tables agree with digit-wise polynomial arithmetic") {
    for (auto q : kOrders) {
        CAPTURE(q);
        const Field& f = Field::of_order(q);
        const auto o = mirror(f);
        const std::uint32_t step = q > 64 ? 7 : 1;
        for (std::uint32_t a = 0; a < q; a += step)
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(f.add(a, b) == o.add(a, b));
                REQUIRE(f.mul(a, b) == o.mul(a, b));
            }
    }
}

TEST_CASE("untabled fields agree with the oracle on samples") {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{7, 4}, {3, 6}, {257, 1}, {65521, 1}, {5, 5}}) {
        CAPTURE(p);
        CAPTURE(m);
        const Field& f = Field::get(p, m);
        const auto o = mirror(f);
        std::uint32_t a = 1, b = 2;
        for (int i = 0; i < 500; ++i) {
            a = (a * 1103515245u + 12345u) % f.q();
            b = (b * 22695477u + 1u) % f.q();
            REQUIRE(f.add(a, b) == o.add(a, b));
            REQUIRE(f.mul(a, b) == o.mul(a, b));
            if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("fixed modulus table") {
    const std::map<std::uint32_t, std::vector<std::uint32_t>> expected = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {64, {1, 1, 0, 0, 0, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {9, {1, 0, 1}},
        {27, {1, 2, 0, 1}},
        {81, {2, 1, 0, 0, 1}},
        {25, {2, 1, 1}},
        {49, {3, 1, 1}},
        {121, {7, 1, 1}},
    };
    for (const auto& [q, mod] : expected) {
        CAPTURE(q);
        const Field& f = Field::of_order(q);
        CHECK(f.modulus() == mod);
        CHECK(oracle::irreducible(mod, f.p()));
    }
}

TEST_CASE("fallback moduli are irreducible and deterministic") {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{11, 3}, {3, 5}, {5, 3}, {7, 3}, {13, 2}}) {
        const Field& f = Field::get(p, m);
        CHECK(f.modulus().size() == m + 1);
        CHECK(f.modulus().back() == 1);
        CHECK(oracle::irreducible(f.modulus(), p));
        CHECK(is_irreducible_mod_p(f.modulus(), p));
    }
}

TEST_CASE("irreducibility test matches the oracle on all small monic polynomials") {
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t deg = 1; deg <= 4; ++deg) {
            std::uint32_t count = 1;
            for (std::size_t i = 0; i < deg; ++i) count *= p;
            for (std::uint32_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> poly(deg + 1, 1);
                std::uint32_t c = code;
                for (std::size_t i = 0; i < deg; ++i) {
                    poly[i] = c % p;
                    c /= p;
                }
                REQUIRE(is_irreducible_mod_p(poly, p) == oracle::irreducible(poly, p));
            }
        }
    }
}

TEST_CASE("interning returns the same object") {
    CHECK(&Field::get(2, 3) == &Field::of_order(8));
    CHECK(&Field::get(7) == &Field::of_order(7));
    CHECK(&Field::get(3, 2) != &Field::get(3, 1));
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Field::of_order(6), FieldError);
    CHECK_THROWS_AS(Field::of_order(1), FieldError);
    CHECK_THROWS_AS(Field::get(4, 1), FieldError);
    CHECK_THROWS_AS(Field::get(2, 17), FieldError);
    CHECK_THROWS_AS(Field::get(3, 11), FieldError);
    CHECK_THROWS_AS(Field::get(2).inv(0), FieldError);
}

TEST_CASE("prime power decomposition") {
    CHECK(prime_power_decompose(2) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
    CHECK(prime_power_decompose(125) == std::pair<std::uint32_t, std::uint32_t>{5, 3});
    CHECK(prime_power_decompose(65536) == std::pair<std::uint32_t, std::uint32_t>{2, 16});
    CHECK_THROWS_AS(prime_power_decompose(12), FieldError);
    CHECK_THROWS_AS(prime_power_decompose(0), FieldError);
}

TEST_CASE("powers, squares and the first non-square") {
    for (auto q : {3u, 5u, 7u, 9u, 11u, 25u, 27u}) {
        CAPTURE(q);
        const Field& f = Field::of_order(q);
        const auto o = mirror(f);
        std::set<Elem> squares;
        for (Elem a = 0; a < q; ++a) squares.insert(static_cast<Elem>(o.mul(a, a)));
        CHECK(squares.size() == (q + 1) / 2);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f.is_square(a) == (squares.count(a) == 1));
            CHECK(f.pow(a, q - 1) == (a ? 1 : 0));
            CHECK(f.pow(a, 5) == o.pow(a, 5));
        }
        Elem ns = 0;
        while (squares.count(ns)) ++ns;
        CHECK(f.first_nonsquare() == ns);
    }
    CHECK(Field::of_order(4).pow(0, 0) == 1);
    CHECK_THROWS(Field::of_order(8).first_nonsquare());
}

TEST_CASE("field elements") {
    const Field& f = Field::of_order(9);
    FieldElement a(f, 5), b(f, 7);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == FieldElement(f, 1));
    CHECK(-a + a == FieldElement(f, 0));
    CHECK(a.pow(8) == FieldElement(f, 1));
    FieldElement c(Field::of_order(3), 1);
    CHECK_THROWS_AS(a + c, FieldError);
    CHECK_THROWS_AS(FieldElement(f, 9), FieldError);
}

TEST_CASE("from_int reduces into the prime subfield") {
    const Field& f = Field::of_order(25);
    CHECK(f.from_int(7) == 2);
    CHECK(f.from_int(-1) == 4);
    CHECK(Field::of_order(8).from_int(3) == 1);
}
