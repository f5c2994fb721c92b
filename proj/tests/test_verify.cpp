#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "projcode/codes.hpp"
#include "projcode/constructions.hpp"
#include "projcode/graphs.hpp"
#include "projcode/verify.hpp"

using namespace projcode;
using nlohmann::json;

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// C(n, w) (q-1)^w vectors of weight w in F_q^n
std::uint64_t vectors_of_weight(std::size_t n, std::size_t w, std::uint32_t q) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < w; ++i) c = c * (n - i) / (i + 1);
    return c * ipow(q - 1, w);
}

// Projective Z adjacent to both, by scanning every k-subspace.
std::size_t brute_common_neighbours(const Subspace& x, const Subspace& y) {
    std::size_t count = 0;
    const std::size_t k = x.dim();
    for_each_subspace(x.field(), x.ambient(), k, [&](const Subspace& z) {
        if (intersect_dim(z, x) == k - 1 && intersect_dim(z, y) == k - 1 && is_projective(z)) ++count;
    });
    return count;
}

} // namespace

TEST_CASE("status strings") {
    CHECK(to_string(Status::kPass) == "pass");
    CHECK(to_string(Status::kFail) == "fail");
    CHECK(to_string(Status::kSkippedGuard) == "skipped-guard");
    CHECK(parse_status("skipped-guard") == Status::kSkippedGuard);
    CHECK_THROWS(parse_status("ok"));
}

TEST_CASE("equation system scans count the weight class exactly") {
    for (auto [q, k] : {std::pair{2u, 3u}, {2u, 4u}, {4u, 2u}, {3u, 3u}}) {
        CAPTURE(q);
        CAPTURE(k);
        auto r = check_theorem2(q, k);
        CHECK(r.status == Status::kPass);
        const std::size_t n = bracket(k, q);
        const auto expected = vectors_of_weight(n, ipow(q, k - 1), q);
        CHECK(r.counts["nonzero_solutions"].get<std::uint64_t>() == expected);
        CHECK(r.counts["simplex_vectors"].get<std::uint64_t>() == expected);
        CHECK(r.counts["mismatches"].get<std::uint64_t>() == 0);
        CHECK(r.counts["vectors_scanned"].get<std::uint64_t>() == ipow(q, n));
        CHECK(r.counts["zero_vector_satisfies"].get<bool>());
        CHECK_FALSE(r.notes.empty());
    }
    CHECK(check_theorem2(3, 3).counts["nonzero_solutions"] == 366080);
    Guards tight;
    tight.max_scan = 1000;
    CHECK(check_theorem2(3, 3, kDefaultSeed, tight).status == Status::kSkippedGuard);
}

TEST_CASE("maximality of simplex codes") {
    auto r = check_corollary1(2, 3);
    CHECK(r.status == Status::kPass);
    CHECK(r.counts["simplex_codes"] == 30);
    CHECK(r.counts["non_maximal"] == 0);
    CHECK(r.counts["codewords_violating_equations"] == 0);
    CHECK(r.counts["extensions_rejected"] == 30 * (128 - 8));
    auto r22 = check_corollary1(2, 2);
    CHECK(r22.status == Status::kPass);
    CHECK(r22.counts["simplex_codes"] == 1);
}

TEST_CASE("simplex graph claim and its controls") {
    auto std_r = check_corollary2(Corollary2Variant::kStandard);
    CHECK(std_r.status == Status::kPass);
    CHECK(std_r.counts["isomorphism_found"].get<bool>());
    CHECK(std_r.counts["witness_replayed"].get<bool>());
    CHECK(check_corollary2(Corollary2Variant::kShuffled, 7).status == Status::kPass);
    auto mutated = check_corollary2(Corollary2Variant::kMutated);
    CHECK(mutated.status == Status::kFail);
    CHECK_FALSE(mutated.witnesses.empty());
}

TEST_CASE("common neighbour counts against a full scan") {
    const Field& f = Field::of_order(5);
    std::mt19937_64 rng(4);
    int checked = 0;
    while (checked < 6) {
        Subspace x = random_subspace(f, 4, 2, rng), y = random_subspace(f, 4, 2, rng);
        if (!is_projective(x) || !is_projective(y) || intersect_dim(x, y) != 0) continue;
        const auto c = lemma11_count(x, y);
        CHECK(c == brute_common_neighbours(x, y));
        CHECK(c >= 6);
        ++checked;
    }
    Subspace x = random_subspace(f, 4, 2, rng);
    CHECK_THROWS_AS(lemma11_count(x, x), std::invalid_argument);
}

TEST_CASE("sampled lemma checks") {
    auto l11 = check_lemma11(5, 2, 11, 20, 3);
    CHECK(l11.status == Status::kPass);
    CHECK(l11.counts["pairs"] == 20);
    CHECK(l11.counts["min"].get<std::uint64_t>() >= 12);
    auto l12 = check_lemma12(5, 3, 11, 20, 0, 3);
    CHECK(l12.status == Status::kPass);
    CHECK(l12.counts["codes"] == 20);
    CHECK_THROWS_AS(check_lemma12(5, 3, 11, 5, 1), std::invalid_argument);
    auto l13 = check_lemma13(6, 3, 31, 3, 3, 3);
    CHECK(l13.status == Status::kPass);
    CHECK(l13.counts["pairs"] == 3);
    CHECK(check_lemma13(5, 2, 11, 2, 3, 3).status == Status::kPass);
}

TEST_CASE("graph claim at small parameters") {
    auto r = check_theorem1(4, 2, 7);
    CHECK(r.status == Status::kPass);
    CHECK(r.counts["connected"].get<bool>());
    CHECK(r.counts["diameter"] == 2);
    CHECK(r.counts["bad_pairs"] == 0);
    CHECK(r.counts["vertices"] == 1080);

    auto explore = check_theorem1(4, 2, 3);
    CHECK(explore.status == Status::kPass);
    CHECK(explore.counts.contains("conclusions_hold"));

    auto skipped = check_theorem1(15, 4, 2);
    CHECK(skipped.status == Status::kSkippedGuard);
}

TEST_CASE("grassmann formula check") {
    auto r = check_grassmann_formula(4, 2, 2);
    CHECK(r.status == Status::kPass);
    CHECK(r.counts["vertices"] == 35);
    CHECK(r.counts["distance_mismatches"] == 0);
    CHECK(r.counts["geodesic_mismatches"] == 0);
}

TEST_CASE("counterexample reports") {
    auto b = check_counterexample("binary-15-4");
    CHECK(b.status == Status::kPass);
    CHECK(b.claim == "cex-binary");
    CHECK(b.counts["candidates"] == 9);
    CHECK(b.counts["projective_candidates"] == 0);
    CHECK(b.counts["l1_l3_pairs"] == 9);
    CHECK(b.counts["l1_l3_pairs_at_distance_8"] == 0);
    auto t = check_counterexample("ternary-13-3");
    CHECK(t.status == Status::kPass);
    CHECK(t.claim == "cex-ternary");
    CHECK(t.counts["candidates"] == 16);
    CHECK(t.counts["printed_equals_computed"].get<bool>());
    CHECK_THROWS_AS(check_counterexample("quaternary"), std::invalid_argument);
}

TEST_CASE("report json round trip and determinism") {
    auto a = check_lemma11(4, 2, 7, 10, 42);
    auto b = check_lemma11(4, 2, 7, 10, 42);
    CHECK(a.same_content(b));
    CHECK(a.seed == 42);
    auto back = VerificationReport::from_json(a.to_json());
    CHECK(back == a);
    json j = a.to_json();
    for (auto key : {"claim", "params", "status", "counts", "witnesses", "notes", "seed", "wall_time", "version"})
        CHECK(j.contains(key));
    CHECK(j["version"] == kVersion);

    auto failing = check_corollary2(Corollary2Variant::kMutated);
    CHECK(VerificationReport::from_json(failing.to_json()) == failing);
    CHECK(failing.to_json()["status"] == "fail");
}

TEST_CASE("claim dispatch") {
    ClaimRequest req;
    req.claim = "theorem2";
    req.params = {2, 3};
    auto out = run_claim(req);
    REQUIRE(out.size() == 1);
    CHECK(out[0].status == Status::kPass);

    req.claim = "counterexample";
    req.params = {};
    req.fixture = "ternary-13-3";
    CHECK(run_claim(req).at(0).claim == "cex-ternary");

    req.claim = "lemma12";
    req.params = {5, 3, 11};
    req.dim_u = 1;
    CHECK_THROWS_AS(run_claim(req), std::invalid_argument);

    req = {};
    req.claim = "nonsense";
    CHECK_THROWS_AS(run_claim(req), std::invalid_argument);
    req.claim = "theorem2";
    req.params = {2};
    CHECK_THROWS_AS(run_claim(req), std::invalid_argument);
    req.claim = "corollary2";
    req.params = {};
    req.variant = "other";
    CHECK_THROWS_AS(run_claim(req), std::invalid_argument);
}

TEST_CASE("random subspaces have the requested dimension") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto s = random_subspace(Field::of_order(3), 6, t % 7, rng);
        CHECK(s.dim() == static_cast<std::size_t>(t % 7));
    }
}

TEST_CASE("full desk run") {
    auto all = check_all();
    std::size_t fails = 0, skips = 0;
    for (const auto& r : all) {
        fails += r.status == Status::kFail;
        skips += r.status == Status::kSkippedGuard;
    }
    CHECK(fails == 0);
    CHECK(skips == 2);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].claim <= all[i].claim);
}
