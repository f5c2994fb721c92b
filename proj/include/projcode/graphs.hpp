#ifndef PROJCODE_GRAPHS_HPP
#define PROJCODE_GRAPHS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "projcode/linalg.hpp"
#include "projcode/qanalog.hpp"

namespace projcode {

enum class Predicate { kAll, kProjective, kSimplex };

std::string to_string(Predicate p);
// Accepts "all", "projective", "simplex".
Predicate parse_predicate(const std::string& name);

// Enumeration guard on gaussian_binomial(n, k, q).
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

struct GraphParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint32_t q = 0;
    std::string predicate;
};

struct CodeGraph {
    std::vector<Subspace> vertices;
    std::unordered_map<Subspace, std::size_t, SubspaceHash> index;
    // sorted, symmetric, irreflexive
    std::vector<std::vector<std::size_t>> adjacency;
    GraphParams params;

    std::size_t size() const { return vertices.size(); }
    std::size_t edge_count() const;
    bool adjacent(std::size_t i, std::size_t j) const;
};

enum class AdjacencyMethod {
    kAuto,
    // stacked-rank test on every vertex pair
    kPairwise,
    // enumerate H + <v> over hyperplanes H of each vertex and look them up
    kNeighborGeneration,
};

// Throws GuardError when gaussian_binomial(n, k, q) > max_enumeration and
// std::invalid_argument for a simplex predicate with n != [k]_q.
CodeGraph build_graph(std::size_t n, std::size_t k, std::uint32_t q, Predicate predicate,
                      AdjacencyMethod method = AdjacencyMethod::kAuto,
                      std::uint64_t max_enumeration = kMaxEnumeration);

// Graph on the given vertices with edges at Grassmann distance 1.
CodeGraph graph_from_vertices(std::vector<Subspace> vertices, GraphParams params,
                              AdjacencyMethod method = AdjacencyMethod::kAuto);

// Points and planes of PG(3,2): 15 one-dim then 15 three-dim subspaces of
// F_2^4, adjacent when incident.
CodeGraph incidence_graph_1_3();

inline constexpr std::int64_t kUnreachable = -1;

struct DistanceReport {
    std::size_t source = 0;
    std::vector<std::int64_t> distances;
    // largest finite distance
    std::size_t eccentricity = 0;
    bool all_reachable = true;
};

DistanceReport bfs(const CodeGraph& g, std::size_t source);

// Number of shortest paths from source to each vertex (0 if unreachable).
std::vector<BigInt> geodesic_counts_from(const CodeGraph& g, std::size_t source);
// Throws std::invalid_argument when the pair is disconnected.
BigInt count_geodesics(const CodeGraph& g, std::size_t x, std::size_t y);

bool is_connected(const CodeGraph& g);
// Diameter of a connected graph; throws on a disconnected one.
std::size_t diameter(const CodeGraph& g);
bool is_bipartite(const CodeGraph& g);
// The common degree, or nothing if the graph is not regular.
std::optional<std::size_t> regular_degree(const CodeGraph& g);

// k - dim(X cap Y)
std::size_t grassmann_distance(const Subspace& x, const Subspace& y);
// prod_{i=2}^{m} [i]_q^2
BigInt grassmann_geodesic_count(std::size_t m, std::uint32_t q);

struct CommonNeighbors {
    // every Z with dim(Z cap X) = dim(Z cap Y) = k-1, ascending
    std::vector<Subspace> candidates;
    // the projective ones
    std::vector<Subspace> projective;
};

/*
 * Common neighbours of X and Y in the Grassmann graph, and which of them are
 * projective. At distance 2 these are H + H' for hyperplanes H of X and H'
 * of Y through X cap Y ([2]_q^2 of them); at distance 1 they are the other
 * k-subspaces of X + Y together with the k-superspaces of X cap Y outside
 * X + Y; beyond distance 2 there are none. Throws std::invalid_argument for
 * X = Y, mismatched shapes or non-projective inputs.
 */
CommonNeighbors common_projective_neighbors(const Subspace& x, const Subspace& y);

// Vertex bijection phi with i ~ j iff phi[i] ~ phi[j], verified before it is
// returned. Throws GuardError above 64 vertices.
std::optional<std::vector<std::size_t>> isomorphic(const CodeGraph& g1, const CodeGraph& g2);
bool is_isomorphism(const CodeGraph& g1, const CodeGraph& g2, const std::vector<std::size_t>& phi);

// Vertex i of g becomes vertex perm[i] of the result.
CodeGraph permute_graph(const CodeGraph& g, const std::vector<std::size_t>& perm);
CodeGraph remove_edge(const CodeGraph& g, std::size_t i, std::size_t j);

// "r0c0,r0c1,...;r1c0,..." over the canonical basis
std::string basis_label(const Subspace& s);
std::string to_dot(const CodeGraph& g);
nlohmann::json to_json(const CodeGraph& g);

} // namespace projcode

#endif // PROJCODE_GRAPHS_HPP
