#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "projcode/codes.hpp"
#include "projcode/constructions.hpp"
#include "projcode/graphs.hpp"

using namespace projcode;

namespace {

oracle::Field mirror(const Field& f) { return {f.p(), f.m(), f.modulus()}; }

oracle::Rows rows_of(const Matrix& m) {
    oracle::Rows out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

// Adjacency recomputed from enumerated spans: |X cap Y| = q^{k-1}.
std::vector<std::vector<bool>> oracle_adjacency(const CodeGraph& g) {
    const Field& f = g.vertices.front().field();
    const auto o = mirror(f);
    const std::size_t n = g.vertices.front().ambient(), k = g.vertices.front().dim();
    std::vector<std::set<oracle::Vec>> spans;
    for (const auto& v : g.vertices) spans.push_back(oracle::span(o, rows_of(v.basis()), n));
    std::uint64_t target = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) target *= f.q();
    std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size(), false));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            std::uint64_t common = 0;
            for (const auto& v : spans[i]) common += spans[j].count(v);
            adj[i][j] = adj[j][i] = common == target;
        }
    return adj;
}

CodeGraph complete_graph(std::size_t n) {
    const Field& f = Field::of_order(2);
    std::vector<Subspace> vs;
    for_each_subspace(f, 5, 1, [&](const Subspace& s) {
        if (vs.size() < n) vs.push_back(s);
    });
    return graph_from_vertices(vs, {5, 1, 2, "all"});
}

} // namespace

TEST_CASE("grassmann distance and geodesic formula") {
    auto bin = fixture_binary_15_4();
    CHECK(grassmann_distance(bin.x, bin.y) == 2);
    CHECK(grassmann_distance(bin.x, bin.x) == 0);
    auto ter = fixture_ternary_13_3();
    CHECK(grassmann_distance(ter.pair.x, ter.pair.y) == 2);
    CHECK_THROWS(grassmann_distance(bin.x, ter.pair.x));
    CHECK(grassmann_geodesic_count(0, 5) == 1);
    CHECK(grassmann_geodesic_count(1, 5) == 1);
    CHECK(grassmann_geodesic_count(2, 2) == 9);
    CHECK(grassmann_geodesic_count(2, 7) == 64);
    CHECK(grassmann_geodesic_count(3, 2) == 9 * 49);
}

TEST_CASE("build_graph vertex counts") {
    CHECK(build_graph(4, 2, 2, Predicate::kProjective).size() == 0);
    CHECK(build_graph(4, 2, 7, Predicate::kAll).size() == 2850);
    CHECK(build_graph(4, 2, 2, Predicate::kAll).size() == 35);
    auto s = build_graph(7, 3, 2, Predicate::kSimplex);
    CHECK(s.size() == 30);
    CHECK(regular_degree(s) == std::optional<std::size_t>{7});
    CHECK_THROWS_AS(build_graph(8, 3, 2, Predicate::kSimplex), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(12, 6, 3, Predicate::kAll), GuardError);
    CHECK_THROWS_AS(build_graph(4, 2, 7, Predicate::kAll, AdjacencyMethod::kAuto, 1000), GuardError);
    CHECK(parse_predicate("projective") == Predicate::kProjective);
    CHECK(to_string(Predicate::kSimplex) == "simplex");
    CHECK_THROWS(parse_predicate("mds"));
}

TEST_CASE("edges coincide with enumerated intersections") {
    for (auto [n, k, q, pred] : {std::tuple{4u, 2u, 2u, Predicate::kAll}, {4u, 2u, 3u, Predicate::kAll},
                                 {6u, 3u, 2u, Predicate::kProjective}, {7u, 3u, 2u, Predicate::kSimplex}}) {
        auto g = build_graph(n, k, q, pred);
        auto adj = oracle_adjacency(g);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) REQUIRE(g.adjacent(i, j) == adj[i][j]);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < g.size(); ++i) edges += g.adjacency[i].size();
        CHECK(g.edge_count() * 2 == edges);
        CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.index.at(g.vertices[i]) == i);
    }
}

TEST_CASE("adjacency methods agree") {
    for (auto [n, k, q, pred] : {std::tuple{5u, 2u, 2u, Predicate::kAll}, {4u, 2u, 4u, Predicate::kAll},
                                 {6u, 3u, 2u, Predicate::kProjective}, {5u, 2u, 4u, Predicate::kProjective}}) {
        auto a = build_graph(n, k, q, pred, AdjacencyMethod::kPairwise);
        auto b = build_graph(n, k, q, pred, AdjacencyMethod::kNeighborGeneration);
        CHECK(a.vertices == b.vertices);
        CHECK(a.adjacency == b.adjacency);
    }
}

TEST_CASE("bfs distances and geodesic counts against adjacency powers") {
    for (auto [n, k, q] : {std::tuple{4u, 2u, 2u}, {5u, 2u, 2u}, {4u, 2u, 3u}}) {
        auto g = build_graph(n, k, q, Predicate::kAll);
        std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size(), false));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (auto j : g.adjacency[i]) adj[i][j] = true;
        auto dist = oracle::all_distances(adj);
        auto walks = oracle::walk_counts(adj, 2);
        for (std::size_t s = 0; s < g.size(); ++s) {
            auto rep = bfs(g, s);
            auto counts = geodesic_counts_from(g, s);
            for (std::size_t t = 0; t < g.size(); ++t) {
                REQUIRE(rep.distances[t] == dist[s][t]);
                REQUIRE(static_cast<std::size_t>(dist[s][t]) == grassmann_distance(g.vertices[s], g.vertices[t]));
                REQUIRE(counts[t] == BigInt(walks[dist[s][t]][s][t]));
                REQUIRE(counts[t] == grassmann_geodesic_count(dist[s][t], q));
            }
        }
        CHECK(is_connected(g));
        CHECK(diameter(g) == 2);
    }
}

TEST_CASE("bfs edge cases") {
    auto one = complete_graph(1);
    auto rep = bfs(one, 0);
    CHECK(rep.distances == std::vector<std::int64_t>{0});
    CHECK(rep.eccentricity == 0);
    CHECK_THROWS(bfs(one, 1));

    auto k4 = complete_graph(4);
    CHECK(count_geodesics(k4, 0, 1) == 1);
    auto cut = remove_edge(k4, 0, 1);
    CHECK(count_geodesics(cut, 0, 1) == 2);
    CHECK(diameter(cut) == 2);

    // two components: points of F_2^3 and planes of F_2^3 do not mix
    const Field& f = Field::of_order(2);
    std::vector<Subspace> vs;
    vs.push_back(canonicalize(Matrix::from_rows(f, {{1, 0, 0}})));
    vs.push_back(canonicalize(Matrix::from_rows(f, {{0, 1, 0}})));
    vs.push_back(canonicalize(Matrix::from_rows(f, {{0, 0, 1}})));
    auto tri = graph_from_vertices(vs, {3, 1, 2, "all"});
    CHECK(is_connected(tri));
    auto broken = remove_edge(remove_edge(tri, 0, 1), 0, 2);
    CHECK_FALSE(is_connected(broken));
    CHECK_FALSE(bfs(broken, 0).all_reachable);
    CHECK(bfs(broken, 0).distances[1] == kUnreachable);
    CHECK_THROWS_AS(count_geodesics(broken, 0, 1), std::invalid_argument);
    CHECK_THROWS(diameter(broken));
}

TEST_CASE("simplex graph and incidence graph") {
    auto g = build_graph(7, 3, 2, Predicate::kSimplex);
    for (const auto& v : g.vertices) CHECK(is_simplex_code(v));
    CHECK(is_connected(g));
    CHECK(diameter(g) == 3);
    CHECK(is_bipartite(g));
    for (std::size_t s = 0; s < g.size(); ++s) {
        auto rep = bfs(g, s);
        CHECK(rep.eccentricity == 3);
        for (std::size_t t = 0; t < g.size(); ++t)
            CHECK(static_cast<std::size_t>(rep.distances[t]) == 3 - intersect_dim(g.vertices[s], g.vertices[t]));
    }

    auto inc = incidence_graph_1_3();
    CHECK(inc.size() == 30);
    CHECK(regular_degree(inc) == std::optional<std::size_t>{7});
    CHECK(is_bipartite(inc));
    std::size_t points = 0;
    for (const auto& v : inc.vertices) points += v.dim() == 1;
    CHECK(points == 15);
    for (std::size_t i = 0; i < inc.size(); ++i)
        for (auto j : inc.adjacency[i]) CHECK(inc.vertices[i].dim() != inc.vertices[j].dim());

    auto phi = isomorphic(g, inc);
    REQUIRE(phi);
    CHECK(is_isomorphism(g, inc, *phi));
    CHECK_FALSE(isomorphic(g, complete_graph(30)));
    auto self = isomorphic(inc, inc);
    REQUIRE(self);
    CHECK(is_isomorphism(inc, inc, *self));
}

TEST_CASE("isomorphism search on permuted and perturbed graphs") {
    auto g = build_graph(7, 3, 2, Predicate::kSimplex);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; ++t) {
        std::vector<std::size_t> perm(g.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = permute_graph(g, perm);
        CHECK(is_isomorphism(g, h, perm));
        auto phi = isomorphic(g, h);
        REQUIRE(phi);
        CHECK(is_isomorphism(g, h, *phi));
    }
    auto cut = remove_edge(g, 0, g.adjacency[0][0]);
    CHECK_FALSE(isomorphic(g, cut));
    std::vector<std::size_t> bad(g.size());
    for (std::size_t i = 0; i < bad.size(); ++i) bad[i] = i;
    CHECK_FALSE(is_isomorphism(g, cut, bad));
    CHECK_THROWS_AS(isomorphic(build_graph(4, 2, 3, Predicate::kAll), build_graph(4, 2, 3, Predicate::kAll)),
                    GuardError);
}

TEST_CASE("common neighbours of the fixtures") {
    auto bin = fixture_binary_15_4();
    auto cb = common_projective_neighbors(bin.x, bin.y);
    CHECK(cb.candidates.size() == 9);
    CHECK(cb.projective.empty());
    auto ter = fixture_ternary_13_3();
    auto ct = common_projective_neighbors(ter.pair.x, ter.pair.y);
    CHECK(ct.candidates.size() == 16);
    CHECK(ct.projective.empty());
    std::set<Subspace> printed;
    for (const auto& m : ter.candidates) printed.insert(canonicalize(m));
    CHECK(std::set<Subspace>(ct.candidates.begin(), ct.candidates.end()) == printed);
    CHECK_THROWS_AS(common_projective_neighbors(bin.x, bin.x), std::invalid_argument);
    CHECK_THROWS_AS(common_projective_neighbors(canonicalize(ter.candidates[0]), ter.pair.x), std::invalid_argument);
}

TEST_CASE("common neighbours match built graphs") {
    for (auto [n, k, q] : {std::tuple{5u, 2u, 4u}, {6u, 3u, 2u}, {5u, 2u, 5u}}) {
        auto g = build_graph(n, k, q, Predicate::kProjective);
        REQUIRE(g.size() > 0);
        std::mt19937_64 rng(n * 100 + q);
        std::size_t by_distance[3] = {0, 0, 0};
        for (int t = 0; t < 300; ++t) {
            const std::size_t i = rng() % g.size(), j = rng() % g.size();
            if (i == j) continue;
            auto cn = common_projective_neighbors(g.vertices[i], g.vertices[j]);
            std::vector<std::size_t> common;
            std::set_intersection(g.adjacency[i].begin(), g.adjacency[i].end(), g.adjacency[j].begin(),
                                  g.adjacency[j].end(), std::back_inserter(common));
            std::set<Subspace> from_graph;
            for (auto c : common) from_graph.insert(g.vertices[c]);
            REQUIRE(std::set<Subspace>(cn.projective.begin(), cn.projective.end()) == from_graph);
            const auto d = grassmann_distance(g.vertices[i], g.vertices[j]);
            if (d <= 2) ++by_distance[d];
            for (const auto& z : cn.candidates) {
                CHECK(intersect_dim(z, g.vertices[i]) == k - 1);
                CHECK(intersect_dim(z, g.vertices[j]) == k - 1);
            }
            if (d == 2) CHECK(cn.candidates.size() == (q + 1) * (q + 1));
        }
        CHECK(by_distance[1] > 0);
        CHECK(by_distance[2] > 0);
    }
}

TEST_CASE("export formats") {
    auto g = build_graph(7, 3, 2, Predicate::kSimplex);
    auto j = to_json(g);
    CHECK(j["params"]["n"] == 7);
    CHECK(j["params"]["predicate"] == "simplex");
    CHECK(j["vertices"].size() == 30);
    CHECK(j["edges"].size() == 105);
    const std::string dot = to_dot(g);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') >= 135);
    const Field& f = Field::of_order(3);
    CHECK(basis_label(canonicalize(Matrix::from_rows(f, {{1, 0, 2}, {0, 1, 1}}))) == "1,0,2;0,1,1");
}
