#include "projcode/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "projcode/codes.hpp"

namespace projcode {

namespace {

void rebuild_index(CodeGraph& g) {
    g.index.clear();
    g.index.reserve(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) g.index.emplace(g.vertices[i], i);
}

void require_vertex(const CodeGraph& g, std::size_t v) {
    if (v >= g.size()) throw std::invalid_argument("vertex id out of range");
}

void pairwise_edges(CodeGraph& g) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = g.vertices[i].dim();
        if (k == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.vertices[j].dim() != k) continue;
            if (intersect_dim(g.vertices[i], g.vertices[j]) == k - 1) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
        }
    }
}

void generated_edges(CodeGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Subspace& x = g.vertices[i];
        if (x.dim() == 0) continue;
        const Subspace full = Subspace::full(x.field(), x.ambient());
        // Every neighbour Z meets X in exactly one hyperplane, so no duplicates.
        for (const auto& h : hyperplanes_of(x)) {
            for (const auto& z : superspaces_in(h, full, x.dim())) {
                if (z == x) continue;
                auto it = g.index.find(z);
                if (it != g.index.end()) g.adjacency[i].push_back(it->second);
            }
        }
    }
}

BigInt big_bracket(std::size_t m, std::uint32_t q) {
    BigInt sum = 0, power = 1;
    for (std::size_t i = 0; i < m; ++i) {
        sum += power;
        power *= q;
    }
    return sum;
}

using Invariant = std::vector<std::int64_t>;

std::vector<Invariant> vertex_invariants(const CodeGraph& g) {
    std::vector<Invariant> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        Invariant inv{static_cast<std::int64_t>(g.adjacency[v].size())};
        std::vector<std::int64_t> nd;
        for (auto u : g.adjacency[v]) nd.push_back(static_cast<std::int64_t>(g.adjacency[u].size()));
        std::sort(nd.begin(), nd.end());
        inv.insert(inv.end(), nd.begin(), nd.end());
        inv.push_back(-1);
        std::map<std::int64_t, std::int64_t> profile;
        for (auto d : bfs(g, v).distances) ++profile[d];
        for (auto [d, c] : profile) {
            inv.push_back(d);
            inv.push_back(c);
        }
        out[v] = std::move(inv);
    }
    return out;
}

class IsoSearch {
public:
    IsoSearch(const CodeGraph& g1, const CodeGraph& g2, std::vector<Invariant> inv1, std::vector<Invariant> inv2)
        : n_(g1.size()), inv1_(std::move(inv1)), inv2_(std::move(inv2)), adj1_(n_, 0), adj2_(n_, 0),
          phi_(n_, n_), used_(n_, false) {
        for (std::size_t v = 0; v < n_; ++v) {
            for (auto u : g1.adjacency[v]) adj1_[v] |= std::uint64_t{1} << u;
            for (auto u : g2.adjacency[v]) adj2_[v] |= std::uint64_t{1} << u;
        }
        order_ = search_order(g1);
    }

    std::optional<std::vector<std::size_t>> run() {
        if (extend(0)) return phi_;
        return std::nullopt;
    }

private:
    // BFS from the vertex with the rarest invariant, so each vertex after the
    // first of its component has an already-mapped neighbour.
    std::vector<std::size_t> search_order(const CodeGraph& g) const {
        std::map<Invariant, std::size_t> freq;
        for (const auto& inv : inv1_) ++freq[inv];
        std::vector<std::size_t> starts(n_);
        for (std::size_t v = 0; v < n_; ++v) starts[v] = v;
        std::stable_sort(starts.begin(), starts.end(),
                         [&](std::size_t a, std::size_t b) { return freq[inv1_[a]] < freq[inv1_[b]]; });
        std::vector<std::size_t> order;
        std::vector<bool> seen(n_, false);
        for (auto s : starts) {
            if (seen[s]) continue;
            std::deque<std::size_t> queue{s};
            seen[s] = true;
            while (!queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                order.push_back(v);
                for (auto u : g.adjacency[v])
                    if (!seen[u]) {
                        seen[u] = true;
                        queue.push_back(u);
                    }
            }
        }
        return order;
    }

    bool consistent(std::size_t pos, std::size_t c) const {
        const std::size_t v = order_[pos];
        for (std::size_t t = 0; t < pos; ++t) {
            const std::size_t u = order_[t];
            const bool e1 = (adj1_[v] >> u) & 1;
            const bool e2 = (adj2_[c] >> phi_[u]) & 1;
            if (e1 != e2) return false;
        }
        return true;
    }

    bool extend(std::size_t pos) {
        if (pos == n_) return true;
        const std::size_t v = order_[pos];
        for (std::size_t c = 0; c < n_; ++c) {
            if (used_[c] || inv2_[c] != inv1_[v] || !consistent(pos, c)) continue;
            phi_[v] = c;
            used_[c] = true;
            if (extend(pos + 1)) return true;
            used_[c] = false;
        }
        phi_[v] = n_;
        return false;
    }

    std::size_t n_;
    std::vector<Invariant> inv1_, inv2_;
    std::vector<std::uint64_t> adj1_, adj2_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> phi_;
    std::vector<bool> used_;
};

} // namespace

std::string to_string(Predicate p) {
    switch (p) {
    case Predicate::kAll: return "all";
    case Predicate::kProjective: return "projective";
    case Predicate::kSimplex: return "simplex";
    }
    return "unknown";
}

Predicate parse_predicate(const std::string& name) {
    if (name == "all") return Predicate::kAll;
    if (name == "projective") return Predicate::kProjective;
    if (name == "simplex") return Predicate::kSimplex;
    throw std::invalid_argument("unknown predicate: " + name);
}

std::size_t CodeGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency) twice += a.size();
    return twice / 2;
}

bool CodeGraph::adjacent(std::size_t i, std::size_t j) const {
    const auto& a = adjacency.at(i);
    return std::binary_search(a.begin(), a.end(), j);
}

CodeGraph graph_from_vertices(std::vector<Subspace> vertices, GraphParams params, AdjacencyMethod method) {
    CodeGraph g;
    g.vertices = std::move(vertices);
    g.params = std::move(params);
    rebuild_index(g);
    if (g.index.size() != g.vertices.size()) throw std::invalid_argument("duplicate vertices");
    g.adjacency.assign(g.size(), {});
    if (method == AdjacencyMethod::kAuto) {
        method = AdjacencyMethod::kPairwise;
        if (!g.vertices.empty()) {
            const auto& v = g.vertices.front();
            const std::uint32_t q = v.field().q();
            const std::size_t k = v.dim(), n = v.ambient();
            // Generation touches [k]_q [n-k+1]_q candidates per vertex.
            const double per_vertex = static_cast<double>(bracket(k, q)) * static_cast<double>(bracket(n - k + 1, q));
            if (static_cast<double>(g.size()) > 20.0 * per_vertex) method = AdjacencyMethod::kNeighborGeneration;
        }
    }
    if (method == AdjacencyMethod::kPairwise)
        pairwise_edges(g);
    else
        generated_edges(g);
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

CodeGraph build_graph(std::size_t n, std::size_t k, std::uint32_t q, Predicate predicate, AdjacencyMethod method,
                      std::uint64_t max_enumeration) {
    const Field& f = Field::of_order(q);
    if (k > n) throw std::invalid_argument("k exceeds n");
    if (gaussian_binomial(n, k, q) > max_enumeration)
        throw GuardError("gaussian_binomial(n, k, q) exceeds the enumeration guard");
    if (predicate == Predicate::kSimplex && (k == 0 || bracket(k, q) != n))
        throw std::invalid_argument("simplex predicate needs n = [k]_q");
    std::vector<Subspace> vertices;
    for_each_subspace(f, n, k, [&](const Subspace& s) {
        bool keep = true;
        if (predicate == Predicate::kProjective) keep = is_projective(s);
        if (predicate == Predicate::kSimplex) keep = is_simplex_code(s);
        if (keep) vertices.push_back(s);
    });
    std::sort(vertices.begin(), vertices.end());
    return graph_from_vertices(std::move(vertices), {n, k, q, to_string(predicate)}, method);
}

CodeGraph incidence_graph_1_3() {
    const Field& f = Field::get(2);
    std::vector<Subspace> vertices = all_subspaces(f, 4, 1);
    const std::size_t points = vertices.size();
    for (auto& plane : all_subspaces(f, 4, 3)) vertices.push_back(std::move(plane));
    CodeGraph g;
    g.vertices = std::move(vertices);
    g.params = {4, 0, 2, "incidence-1-3"};
    rebuild_index(g);
    g.adjacency.assign(g.size(), {});
    for (std::size_t i = 0; i < points; ++i)
        for (std::size_t j = points; j < g.size(); ++j)
            if (g.vertices[j].contains(g.vertices[i])) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

DistanceReport bfs(const CodeGraph& g, std::size_t source) {
    require_vertex(g, source);
    DistanceReport r;
    r.source = source;
    r.distances.assign(g.size(), kUnreachable);
    r.distances[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto u : g.adjacency[v]) {
            if (r.distances[u] != kUnreachable) continue;
            r.distances[u] = r.distances[v] + 1;
            queue.push_back(u);
        }
    }
    for (auto d : r.distances) {
        if (d == kUnreachable)
            r.all_reachable = false;
        else
            r.eccentricity = std::max(r.eccentricity, static_cast<std::size_t>(d));
    }
    return r;
}

std::vector<BigInt> geodesic_counts_from(const CodeGraph& g, std::size_t source) {
    const auto dist = bfs(g, source).distances;
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (dist[v] != kUnreachable) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

    // 64-bit counters first; redo with BigInt only if they overflow.
    std::vector<std::uint64_t> small(g.size(), 0);
    small[source] = 1;
    bool overflow = false;
    for (auto v : order) {
        if (v == source) continue;
        for (auto u : g.adjacency[v]) {
            if (dist[u] + 1 != dist[v]) continue;
            if (__builtin_add_overflow(small[v], small[u], &small[v])) overflow = true;
        }
        if (overflow) break;
    }
    std::vector<BigInt> out(g.size(), 0);
    if (!overflow) {
        for (std::size_t v = 0; v < g.size(); ++v) out[v] = small[v];
        return out;
    }
    out[source] = 1;
    for (auto v : order) {
        if (v == source) continue;
        for (auto u : g.adjacency[v])
            if (dist[u] + 1 == dist[v]) out[v] += out[u];
    }
    return out;
}

BigInt count_geodesics(const CodeGraph& g, std::size_t x, std::size_t y) {
    require_vertex(g, y);
    auto counts = geodesic_counts_from(g, x);
    if (counts[y] == 0) throw std::invalid_argument("vertices are not connected");
    return counts[y];
}

bool is_connected(const CodeGraph& g) { return g.size() == 0 || bfs(g, 0).all_reachable; }

std::size_t diameter(const CodeGraph& g) {
    std::size_t d = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto r = bfs(g, v);
        if (!r.all_reachable) throw std::invalid_argument("graph is disconnected");
        d = std::max(d, r.eccentricity);
    }
    return d;
}

bool is_bipartite(const CodeGraph& g) {
    std::vector<int> colour(g.size(), -1);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto u : g.adjacency[v]) {
                if (colour[u] == -1) {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::size_t> regular_degree(const CodeGraph& g) {
    if (g.size() == 0) return std::nullopt;
    const std::size_t d = g.adjacency[0].size();
    for (const auto& a : g.adjacency)
        if (a.size() != d) return std::nullopt;
    return d;
}

std::size_t grassmann_distance(const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim() || x.ambient() != y.ambient() || &x.field() != &y.field())
        throw std::invalid_argument("grassmann_distance needs subspaces of equal dimension in the same space");
    return x.dim() - intersect_dim(x, y);
}

BigInt grassmann_geodesic_count(std::size_t m, std::uint32_t q) {
    BigInt out = 1;
    for (std::size_t i = 2; i <= m; ++i) {
        BigInt b = big_bracket(i, q);
        out *= b * b;
    }
    return out;
}

CommonNeighbors common_projective_neighbors(const Subspace& x, const Subspace& y) {
    const std::size_t k = x.dim();
    if (y.dim() != k || x.ambient() != y.ambient() || &x.field() != &y.field())
        throw std::invalid_argument("common neighbours need subspaces of equal dimension in the same space");
    if (x == y) throw std::invalid_argument("common neighbours need distinct subspaces");
    if (!is_projective(x) || !is_projective(y)) throw std::invalid_argument("inputs must be projective codes");

    CommonNeighbors out;
    const Subspace w = intersection(x, y);
    const std::size_t m = k - w.dim();
    if (m == 2) {
        const auto hx = superspaces_in(w, x, k - 1);
        const auto hy = superspaces_in(w, y, k - 1);
        for (const auto& h : hx)
            for (const auto& h2 : hy) out.candidates.push_back(sum(h, h2));
    } else if (m == 1) {
        const Subspace s = sum(x, y);
        for (auto& z : hyperplanes_of(s))
            if (z != x && z != y) out.candidates.push_back(std::move(z));
        for (auto& z : superspaces_in(w, Subspace::full(x.field(), x.ambient()), k))
            if (!s.contains(z)) out.candidates.push_back(std::move(z));
    }
    std::sort(out.candidates.begin(), out.candidates.end());
    out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()), out.candidates.end());
    for (const auto& z : out.candidates)
        if (is_projective(z)) out.projective.push_back(z);
    return out;
}

bool is_isomorphism(const CodeGraph& g1, const CodeGraph& g2, const std::vector<std::size_t>& phi) {
    if (g1.size() != g2.size() || phi.size() != g1.size()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    std::vector<bool> hit(g2.size(), false);
    for (auto v : phi) {
        if (v >= g2.size() || hit[v]) return false;
        hit[v] = true;
    }
    for (std::size_t i = 0; i < g1.size(); ++i)
        for (auto j : g1.adjacency[i])
            if (!g2.adjacent(phi[i], phi[j])) return false;
    return true;
}

std::optional<std::vector<std::size_t>> isomorphic(const CodeGraph& g1, const CodeGraph& g2) {
    if (g1.size() > 64 || g2.size() > 64) throw GuardError("isomorphism search is limited to 64 vertices");
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    auto inv1 = vertex_invariants(g1);
    auto inv2 = vertex_invariants(g2);
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
    auto phi = IsoSearch(g1, g2, std::move(inv1), std::move(inv2)).run();
    if (phi && !is_isomorphism(g1, g2, *phi)) throw std::logic_error("isomorphism search returned an invalid map");
    return phi;
}

CodeGraph permute_graph(const CodeGraph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.size()) throw std::invalid_argument("permutation has the wrong length");
    std::vector<bool> hit(g.size(), false);
    for (auto p : perm) {
        if (p >= g.size() || hit[p]) throw std::invalid_argument("not a permutation");
        hit[p] = true;
    }
    CodeGraph out;
    out.params = g.params;
    out.vertices.assign(g.vertices.begin(), g.vertices.end());
    out.adjacency.assign(g.size(), {});
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.vertices[perm[i]] = g.vertices[i];
        for (auto j : g.adjacency[i]) out.adjacency[perm[i]].push_back(perm[j]);
    }
    for (auto& a : out.adjacency) std::sort(a.begin(), a.end());
    rebuild_index(out);
    return out;
}

CodeGraph remove_edge(const CodeGraph& g, std::size_t i, std::size_t j) {
    require_vertex(g, i);
    require_vertex(g, j);
    if (!g.adjacent(i, j)) throw std::invalid_argument("no such edge");
    CodeGraph out = g;
    auto drop = [](std::vector<std::size_t>& a, std::size_t v) { a.erase(std::find(a.begin(), a.end(), v)); };
    drop(out.adjacency[i], j);
    drop(out.adjacency[j], i);
    return out;
}

std::string basis_label(const Subspace& s) {
    std::string out;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out += ';';
        for (std::size_t c = 0; c < s.ambient(); ++c) {
            if (c) out += ',';
            out += std::to_string(s.basis()(r, c));
        }
    }
    return out;
}

std::string to_dot(const CodeGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i << " [label=\"" << basis_label(g.vertices[i]) << "\"];\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (auto j : g.adjacency[i])
            if (i < j) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const CodeGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : g.vertices) vertices.push_back(basis_label(v));
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (auto j : g.adjacency[i])
            if (i < j) edges.push_back({i, j});
    return {{"params", {{"n", g.params.n}, {"k", g.params.k}, {"q", g.params.q}, {"predicate", g.params.predicate}}},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
}

} // namespace projcode
