#include "projcode/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "projcode/codes.hpp"
#include "projcode/constructions.hpp"

namespace projcode {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxWitnesses = 20;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

VerificationReport start_report(std::string claim, json params, std::uint64_t seed = 0) {
    VerificationReport r;
    r.claim = std::move(claim);
    r.params = std::move(params);
    r.seed = seed;
    return r;
}

void push_witness(VerificationReport& r, json w) {
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

void fail(VerificationReport& r, json w) {
    r.status = Status::kFail;
    push_witness(r, std::move(w));
}

void skip(VerificationReport& r, std::string why) {
    r.status = Status::kSkippedGuard;
    r.notes.push_back(std::move(why));
}

bool hypothesis_met(std::size_t n, std::uint32_t q) { return BigInt(q) >= binomial(n, 2); }

// Hypothesis met: violations fail the check. Otherwise the run is
// exploratory and only records whether the conclusions held.
void conclude(VerificationReport& r, bool hypothesis, const std::vector<json>& violations) {
    r.counts["violations"] = violations.size();
    if (hypothesis) {
        for (const auto& v : violations) fail(r, v);
        return;
    }
    r.counts["conclusions_hold"] = violations.empty();
    for (const auto& v : violations) push_witness(r, v);
}

void note_hypothesis(VerificationReport& r, std::size_t n, std::uint32_t q) {
    const bool met = hypothesis_met(n, q);
    r.params["hypothesis_met"] = met;
    if (!met) r.notes.push_back("q < C(n,2): hypothesis unmet, exploratory run");
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > cap / base) return std::nullopt;
        out *= base;
    }
    return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) out *= base;
    return out;
}

std::string big_str(const BigInt& b) { return b.str(); }

json vec_json(std::span<const Elem> v) { return json(std::vector<Elem>(v.begin(), v.end())); }

// Advances v through F_q^n in lexicographic order; false after the last vector.
bool next_vector(std::vector<Elem>& v, std::uint32_t q) {
    for (std::size_t i = v.size(); i > 0; --i) {
        if (++v[i - 1] < q) return true;
        v[i - 1] = 0;
    }
    return false;
}

std::vector<Elem> random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    std::vector<Elem> v(n);
    for (auto& e : v) e = static_cast<Elem>(d(rng));
    return v;
}

// Random m-dim subspace of x: a random full-rank m x dim(x) coefficient
// matrix applied to the canonical basis.
Subspace random_subspace_of(const Subspace& x, std::size_t m, std::mt19937_64& rng) {
    if (m == 0) return Subspace::zero(x.field(), x.ambient());
    Subspace coeffs = random_subspace(x.field(), x.dim(), m, rng);
    return canonicalize(coeffs.basis() * x.basis());
}

std::optional<Subspace> sample_projective(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng,
                                          std::uint64_t& draws) {
    while (draws < kSamplingRetries) {
        ++draws;
        Subspace x = random_subspace(f, n, k, rng);
        if (is_projective(x)) return x;
    }
    return std::nullopt;
}

struct Pair {
    Subspace x, y;
};

// Projective X, Y with dim(X cap Y) = meet: Y is a random meet-dim subspace
// of X plus k - meet random vectors, rejected until everything fits.
std::optional<Pair> sample_pair(const Field& f, std::size_t n, std::size_t k, std::size_t meet, std::mt19937_64& rng,
                                std::uint64_t& draws) {
    auto x = sample_projective(f, n, k, rng, draws);
    if (!x) return std::nullopt;
    while (draws < kSamplingRetries) {
        ++draws;
        Subspace u = random_subspace_of(*x, meet, rng);
        Matrix extra(f, k - meet, n);
        for (std::size_t i = 0; i < k - meet; ++i) {
            auto v = random_vector(f, n, rng);
            std::copy(v.begin(), v.end(), extra.row(i).begin());
        }
        Subspace y = canonicalize(Matrix::vconcat({&u.basis(), &extra}));
        if (y.dim() == k && intersect_dim(*x, y) == meet && is_projective(y)) return Pair{*x, y};
    }
    return std::nullopt;
}

json sampling_exhausted(std::uint64_t draws) {
    return {{"kind", "sampling-budget-exhausted"}, {"draws", draws}};
}

void finish(VerificationReport& r, const Stopwatch& sw) { r.wall_time = sw.seconds(); }

// [m]_q [m-1]_q ... [2]_q
BigInt theorem1_bound(std::size_t m, std::uint32_t q) {
    BigInt out = 1;
    for (std::size_t i = 2; i <= m; ++i) {
        BigInt b = 0, p = 1;
        for (std::size_t j = 0; j < i; ++j) {
            b += p;
            p *= q;
        }
        out *= b;
    }
    return out;
}

std::size_t count_weight(const Subspace& c, std::size_t w) {
    std::size_t out = 0;
    for_each_codeword(c, [&](std::span<const Elem> v) {
        if (hamming_weight(v) == w) ++out;
    });
    return out;
}

} // namespace

std::string to_string(Status s) {
    switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkippedGuard: return "skipped-guard";
    }
    return "unknown";
}

Status parse_status(const std::string& s) {
    if (s == "pass") return Status::kPass;
    if (s == "fail") return Status::kFail;
    if (s == "skipped-guard") return Status::kSkippedGuard;
    throw std::invalid_argument("unknown status: " + s);
}

json VerificationReport::to_json() const {
    return {{"claim", claim},       {"params", params}, {"status", projcode::to_string(status)},
            {"counts", counts},     {"witnesses", witnesses}, {"notes", notes},
            {"seed", seed},         {"wall_time", wall_time}, {"version", version}};
}

VerificationReport VerificationReport::from_json(const json& j) {
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    r.params = j.at("params");
    r.status = parse_status(j.at("status").get<std::string>());
    r.counts = j.at("counts");
    r.witnesses = j.at("witnesses");
    r.notes = j.value("notes", std::vector<std::string>{});
    r.seed = j.value("seed", std::uint64_t{0});
    r.wall_time = j.value("wall_time", 0.0);
    r.version = j.at("version").get<std::string>();
    return r;
}

bool VerificationReport::same_content(const VerificationReport& o) const {
    return claim == o.claim && params == o.params && status == o.status && counts == o.counts &&
           witnesses == o.witnesses && notes == o.notes && seed == o.seed && version == o.version;
}

bool VerificationReport::operator==(const VerificationReport& o) const {
    return same_content(o) && wall_time == o.wall_time;
}

Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    if (k > n) throw std::invalid_argument("k exceeds n");
    if (k == 0) return Subspace::zero(f, n);
    for (std::uint64_t attempt = 0; attempt < kSamplingRetries; ++attempt) {
        Matrix m(f, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            auto v = random_vector(f, n, rng);
            std::copy(v.begin(), v.end(), m.row(i).begin());
        }
        Subspace s = canonicalize(m);
        if (s.dim() == k) return s;
    }
    throw std::runtime_error("could not draw a full-rank matrix");
}

VerificationReport check_theorem1(std::size_t n, std::size_t k, std::uint32_t q, const Guards& guards) {
    Stopwatch sw;
    auto r = start_report("theorem1", {{"n", n}, {"k", k}, {"q", q}});
    note_hypothesis(r, n, q);
    const bool hyp = hypothesis_met(n, q);
    if (gaussian_binomial(n, k, q) > guards.max_vertices) {
        skip(r, "gaussian_binomial(n,k,q) exceeds max_vertices");
        finish(r, sw);
        return r;
    }
    const CodeGraph g = build_graph(n, k, q, Predicate::kProjective, AdjacencyMethod::kAuto, guards.max_vertices);
    r.counts["subspaces_enumerated"] = static_cast<std::uint64_t>(gaussian_binomial(n, k, q));
    r.counts["vertices"] = g.size();
    r.counts["edges"] = g.edge_count();

    std::vector<json> violations;
    auto violate = [&](json v) {
        if (violations.size() < kMaxWitnesses) violations.push_back(std::move(v));
    };
    std::vector<BigInt> bound(k + 1);
    for (std::size_t m = 0; m <= k; ++m) bound[m] = theorem1_bound(m, q);
    std::map<std::size_t, BigInt> min_geodesics;
    std::map<std::size_t, std::uint64_t> pairs_at;
    bool connected = true;
    std::size_t diam = 0;
    std::uint64_t bad_pairs = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        const auto dist = bfs(g, s);
        const auto paths = geodesic_counts_from(g, s);
        diam = std::max(diam, dist.eccentricity);
        for (std::size_t t = s + 1; t < g.size(); ++t) {
            if (dist.distances[t] == kUnreachable) {
                connected = false;
                ++bad_pairs;
                violate({{"kind", "disconnected"}, {"x", basis_label(g.vertices[s])}, {"y", basis_label(g.vertices[t])}});
                continue;
            }
            const auto m = static_cast<std::size_t>(dist.distances[t]);
            const std::size_t expected = grassmann_distance(g.vertices[s], g.vertices[t]);
            ++pairs_at[m];
            auto [it, fresh] = min_geodesics.emplace(m, paths[t]);
            if (!fresh && paths[t] < it->second) it->second = paths[t];
            if (m != expected) {
                ++bad_pairs;
                violate({{"kind", "distance"},
                         {"x", basis_label(g.vertices[s])},
                         {"y", basis_label(g.vertices[t])},
                         {"graph_distance", m},
                         {"grassmann_distance", expected}});
            } else if (paths[t] < bound[m]) {
                ++bad_pairs;
                violate({{"kind", "geodesics"},
                         {"x", basis_label(g.vertices[s])},
                         {"y", basis_label(g.vertices[t])},
                         {"distance", m},
                         {"geodesics", big_str(paths[t])},
                         {"bound", big_str(bound[m])}});
            }
        }
    }
    const std::size_t expected_diam = std::min(k, n - k);
    r.counts["connected"] = connected;
    r.counts["bad_pairs"] = bad_pairs;
    if (connected && g.size() > 0) {
        r.counts["diameter"] = diam;
        if (diam != expected_diam)
            violate({{"kind", "diameter"}, {"diameter", diam}, {"expected", expected_diam}});
    }
    if (g.size() == 0) r.notes.push_back("no projective codes at these parameters");
    json by_distance = json::object();
    for (const auto& [m, c] : min_geodesics)
        by_distance[std::to_string(m)] = {{"pairs", pairs_at[m]}, {"min_geodesics", big_str(c)},
                                          {"lower_bound", big_str(bound[std::min(m, k)])}};
    r.counts["by_distance"] = by_distance;
    conclude(r, hyp, violations);
    finish(r, sw);
    return r;
}

VerificationReport check_theorem2(std::uint32_t q, std::size_t k, std::uint64_t seed, const Guards& guards) {
    Stopwatch sw;
    auto r = start_report("theorem2", {{"q", q}, {"k", k}}, seed);
    const Field& f = Field::of_order(q);
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const std::uint64_t n = bracket(k, q);
    r.params["n"] = n;
    const auto total = checked_power(q, n, guards.max_scan);
    if (!total) {
        skip(r, "q^n exceeds max_scan");
        finish(r, sw);
        return r;
    }
    const std::uint64_t target = ipow(q, k - 1);
    r.counts["equations"] = simplex_equation_degrees(f, k).size();

    std::vector<Elem> v(n, 0);
    std::uint64_t scanned = 0, solutions = 0, simplex_vectors = 0, mismatches = 0;
    const bool zero_ok = simplex_equations_satisfied(v, f, k);
    while (next_vector(v, q)) {
        ++scanned;
        const bool eq = simplex_equations_satisfied(v, f, k, EquationMethod::kLucas);
        const bool simplex = hamming_weight(v) == target;
        solutions += eq;
        simplex_vectors += simplex;
        if (eq != simplex) {
            ++mismatches;
            fail(r, {{"kind", "mismatch"}, {"vector", vec_json(v)}, {"equations", eq}, {"weight", hamming_weight(v)}});
        }
    }
    r.counts["vectors_scanned"] = scanned + 1;
    r.counts["nonzero_solutions"] = solutions;
    r.counts["simplex_vectors"] = simplex_vectors;
    r.counts["mismatches"] = mismatches;
    r.counts["zero_vector_satisfies"] = zero_ok;
    if (zero_ok) r.notes.push_back("the zero vector satisfies every equation but has weight 0");

    // Literal polynomial evaluation against the Lucas shortcut.
    constexpr std::uint64_t kSample = 20'000;
    std::mt19937_64 rng(seed);
    std::uint64_t compared = 0, disagreements = 0;
    auto compare = [&](const std::vector<Elem>& w) {
        ++compared;
        const bool a = simplex_equations_satisfied(w, f, k, EquationMethod::kPolynomial);
        const bool b = simplex_equations_satisfied(w, f, k, EquationMethod::kLucas);
        if (a != b) {
            ++disagreements;
            fail(r, {{"kind", "method-disagreement"}, {"vector", vec_json(w)}, {"polynomial", a}, {"lucas", b}});
        }
    };
    if (*total <= kSample) {
        std::vector<Elem> w(n, 0);
        do compare(w);
        while (next_vector(w, q));
    } else {
        for (std::uint64_t i = 0; i < kSample; ++i) compare(random_vector(f, n, rng));
    }
    r.counts["methods_compared"] = compared;
    r.counts["method_disagreements"] = disagreements;
    finish(r, sw);
    return r;
}

VerificationReport check_corollary1(std::uint32_t q, std::size_t k, const Guards& guards) {
    Stopwatch sw;
    auto r = start_report("corollary1", {{"q", q}, {"k", k}});
    const Field& f = Field::of_order(q);
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const std::uint64_t n = bracket(k, q);
    r.params["n"] = n;
    if (gaussian_binomial(n, k, q) > guards.max_vertices) {
        skip(r, "gaussian_binomial([k]_q, k, q) exceeds max_vertices");
        finish(r, sw);
        return r;
    }
    if (!checked_power(q, n, guards.max_scan)) {
        skip(r, "q^n exceeds max_scan");
        finish(r, sw);
        return r;
    }
    std::vector<Subspace> codes;
    for_each_subspace(f, n, k, [&](const Subspace& s) {
        if (is_simplex_code(s)) codes.push_back(s);
    });
    std::sort(codes.begin(), codes.end());

    std::uint64_t rejected = 0, not_maximal = 0, bad_codewords = 0;
    for (const auto& c : codes) {
        std::vector<std::vector<Elem>> words;
        for_each_codeword(c, [&](std::span<const Elem> w) {
            words.emplace_back(w.begin(), w.end());
            if (hamming_weight(w) != 0 && !simplex_equations_satisfied(w, f, k)) {
                ++bad_codewords;
                fail(r, {{"kind", "codeword-violates-equations"}, {"code", basis_label(c)}, {"vector", vec_json(w)}});
            }
        });
        std::vector<Elem> v(n, 0), w(n);
        while (next_vector(v, q)) {
            if (c.contains(v)) continue;
            // C + <v> \ C is the union of the cosets a v + C, a != 0.
            bool found = false;
            for (std::uint32_t a = 1; a < q && !found; ++a) {
                for (const auto& cw : words) {
                    for (std::size_t i = 0; i < n; ++i) w[i] = f.add(f.mul(static_cast<Elem>(a), v[i]), cw[i]);
                    if (!simplex_equations_satisfied(w, f, k)) {
                        found = true;
                        break;
                    }
                }
            }
            if (found) {
                ++rejected;
            } else {
                ++not_maximal;
                fail(r, {{"kind", "extension-keeps-equations"}, {"code", basis_label(c)}, {"vector", vec_json(v)}});
            }
        }
    }
    r.counts["simplex_codes"] = codes.size();
    r.counts["extension_candidates_per_code"] = ipow(q, n) - ipow(q, k);
    r.counts["extensions_rejected"] = rejected;
    r.counts["non_maximal"] = not_maximal;
    r.counts["codewords_violating_equations"] = bad_codewords;
    finish(r, sw);
    return r;
}

VerificationReport check_corollary2(Corollary2Variant variant, std::uint64_t seed) {
    Stopwatch sw;
    static const char* names[] = {"standard", "shuffled", "mutated"};
    auto r = start_report("corollary2", {{"variant", names[static_cast<int>(variant)]}}, seed);
    const CodeGraph base = build_graph(7, 3, 2, Predicate::kSimplex);
    const CodeGraph inc = incidence_graph_1_3();
    r.counts["subspaces_enumerated"] = static_cast<std::uint64_t>(gaussian_binomial(7, 3, 2));
    CodeGraph g = base;
    std::vector<std::size_t> perm(base.size());
    std::iota(perm.begin(), perm.end(), 0);
    if (variant == Corollary2Variant::kShuffled) {
        std::mt19937_64 rng(seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        g = permute_graph(base, perm);
    } else if (variant == Corollary2Variant::kMutated) {
        const std::size_t a = 0, b = base.adjacency[0].front();
        g = remove_edge(base, a, b);
        r.params["removed_edge"] = {a, b};
    }

    auto describe = [](const CodeGraph& h) {
        auto deg = regular_degree(h);
        return json{{"vertices", h.size()},
                    {"edges", h.edge_count()},
                    {"regular_degree", deg ? json(*deg) : json(nullptr)},
                    {"bipartite", is_bipartite(h)},
                    {"connected", is_connected(h)}};
    };
    r.counts["simplex_graph"] = describe(g);
    r.counts["incidence_graph"] = describe(inc);
    for (const CodeGraph* h : {static_cast<const CodeGraph*>(&g), &inc}) {
        const char* which = h == &g ? "simplex_graph" : "incidence_graph";
        if (h->size() != 30) fail(r, {{"kind", "vertex-count"}, {"graph", which}, {"vertices", h->size()}});
        if (regular_degree(*h) != std::optional<std::size_t>(7)) fail(r, {{"kind", "not-7-regular"}, {"graph", which}});
        if (!is_bipartite(*h)) fail(r, {{"kind", "not-bipartite"}, {"graph", which}});
    }
    if (is_connected(g)) {
        r.counts["simplex_graph"]["diameter"] = diameter(g);
        std::uint64_t bad = 0, pairs = 0;
        for (std::size_t s = 0; s < g.size(); ++s) {
            auto d = bfs(g, s).distances;
            for (std::size_t t = s + 1; t < g.size(); ++t, ++pairs)
                if (d[t] != static_cast<std::int64_t>(grassmann_distance(g.vertices[s], g.vertices[t]))) ++bad;
        }
        r.counts["simplex_graph"]["pairs_checked"] = pairs;
        r.counts["simplex_graph"]["distance_mismatches"] = bad;
        if (bad) fail(r, {{"kind", "distance-mismatch"}, {"pairs", bad}});
    }

    const auto phi = isomorphic(g, inc);
    r.counts["isomorphism_found"] = phi.has_value();
    if (!phi) {
        fail(r, {{"kind", "no-isomorphism"}, {"isomorphism", nullptr}});
    } else {
        r.counts["witness_replayed"] = is_isomorphism(g, inc, *phi);
        json map = json::array();
        for (std::size_t i = 0; i < phi->size(); ++i)
            map.push_back({basis_label(g.vertices[i]), basis_label(inc.vertices[(*phi)[i]])});
        push_witness(r, {{"kind", "isomorphism"}, {"map", (*phi)}, {"labels", map}});
    }
    if (variant == Corollary2Variant::kShuffled) {
        // The witness found on the original labelling, carried through perm.
        const auto phi0 = isomorphic(base, inc);
        bool replays = false;
        if (phi0) {
            std::vector<std::size_t> moved(phi0->size());
            for (std::size_t i = 0; i < moved.size(); ++i) moved[perm[i]] = (*phi0)[i];
            replays = is_isomorphism(g, inc, moved);
        }
        r.counts["standard_witness_replays"] = replays;
        if (!replays) fail(r, {{"kind", "witness-does-not-replay"}});
    }
    finish(r, sw);
    return r;
}

std::size_t lemma11_count(const Subspace& x, const Subspace& y) {
    if (x.dim() < 2 || x.dim() != y.dim() || intersect_dim(x, y) + 2 != x.dim())
        throw std::invalid_argument("the pair must satisfy dim(X cap Y) = k - 2");
    return common_projective_neighbors(x, y).projective.size();
}

VerificationReport check_lemma11(std::size_t n, std::size_t k, std::uint32_t q, std::size_t trials,
                                 std::uint64_t seed) {
    Stopwatch sw;
    auto r = start_report("lemma11", {{"n", n}, {"k", k}, {"q", q}, {"trials", trials}}, seed);
    if (k < 2 || 2 * k - 2 > n) throw std::invalid_argument("need 2 <= k and 2k - 2 <= n");
    note_hypothesis(r, n, q);
    const Field& f = Field::of_order(q);
    std::mt19937_64 rng(seed);
    std::vector<json> violations;
    std::uint64_t draws = 0;
    std::size_t done = 0, lo = SIZE_MAX, hi = 0, total = 0;
    for (; done < trials; ++done) {
        auto pair = sample_pair(f, n, k, k - 2, rng, draws);
        if (!pair) {
            fail(r, sampling_exhausted(draws));
            break;
        }
        const std::size_t c = lemma11_count(pair->x, pair->y);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        total += c;
        if (c < q + 1)
            violations.push_back({{"kind", "too-few-common-neighbours"},
                                  {"x", basis_label(pair->x)},
                                  {"y", basis_label(pair->y)},
                                  {"count", c},
                                  {"bound", q + 1}});
    }
    r.counts["pairs"] = done;
    r.counts["draws"] = draws;
    r.counts["bound"] = q + 1;
    if (done) {
        r.counts["min"] = lo;
        r.counts["max"] = hi;
        r.counts["mean"] = static_cast<double>(total) / static_cast<double>(done);
    }
    conclude(r, hypothesis_met(n, q), violations);
    finish(r, sw);
    return r;
}

VerificationReport check_lemma12(std::size_t n, std::size_t k, std::uint32_t q, std::size_t trials, std::size_t dim_u,
                                 std::uint64_t seed) {
    Stopwatch sw;
    auto r = start_report("lemma12", {{"n", n}, {"k", k}, {"q", q}, {"trials", trials}, {"dim_u", dim_u}}, seed);
    if (dim_u + 2 >= k) throw std::invalid_argument("dim U must be less than k - 2");
    if (k >= n) throw std::invalid_argument("need k < n");
    note_hypothesis(r, n, q);
    const Field& f = Field::of_order(q);
    std::mt19937_64 rng(seed);
    std::vector<json> violations;
    std::uint64_t draws = 0;
    std::size_t done = 0, lo = SIZE_MAX;
    for (; done < trials; ++done) {
        auto x = sample_projective(f, n, k, rng, draws);
        if (!x) {
            fail(r, sampling_exhausted(draws));
            break;
        }
        const Subspace u = random_subspace_of(*x, dim_u, rng);
        std::size_t good = 0;
        for (const auto& h : superspaces_in(u, *x, k - 1)) good += is_projective(h);
        lo = std::min(lo, good);
        if (good == 0)
            violations.push_back({{"kind", "no-projective-hyperplane"}, {"x", basis_label(*x)}, {"u", basis_label(u)}});
    }
    r.counts["codes"] = done;
    r.counts["draws"] = draws;
    r.counts["hyperplanes_through_u"] = bracket(k - dim_u, q);
    if (done) r.counts["min_projective_hyperplanes"] = lo;
    conclude(r, hypothesis_met(n, q), violations);
    finish(r, sw);
    return r;
}

VerificationReport check_lemma13(std::size_t n, std::size_t k, std::uint32_t q, std::size_t m, std::size_t trials,
                                 std::uint64_t seed) {
    Stopwatch sw;
    auto r = start_report("lemma13", {{"n", n}, {"k", k}, {"q", q}, {"m", m}, {"trials", trials}}, seed);
    if (m < 2 || m > k || k + m > n) throw std::invalid_argument("need 2 <= m <= min(k, n-k)");
    note_hypothesis(r, n, q);
    const Field& f = Field::of_order(q);
    const std::uint64_t bound = bracket(m, q);
    std::mt19937_64 rng(seed);
    std::vector<json> violations;
    std::uint64_t draws = 0;
    std::size_t done = 0, lo = SIZE_MAX;
    for (; done < trials; ++done) {
        auto pair = sample_pair(f, n, k, k - m, rng, draws);
        if (!pair) {
            fail(r, sampling_exhausted(draws));
            break;
        }
        const Subspace& x = pair->x;
        const Subspace& y = pair->y;
        std::size_t count = 0;
        if (m == 2) {
            count = lemma11_count(x, y);
        } else {
            const Subspace w = intersection(x, y);
            std::optional<Subspace> xp;
            for (auto& h : superspaces_in(w, x, k - 1))
                if (is_projective(h)) {
                    xp = std::move(h);
                    break;
                }
            if (!xp) {
                violations.push_back({{"kind", "no-projective-hyperplane"}, {"x", basis_label(x)}, {"y", basis_label(y)}});
                continue;
            }
            std::set<Subspace> zs;
            for (const auto& s : superspaces_in(w, y, k - m + 1)) {
                Subspace z = sum(*xp, s);
                if (z.dim() == k && is_projective(z) && intersect_dim(z, x) == k - 1 &&
                    intersect_dim(z, y) == k - m + 1)
                    zs.insert(std::move(z));
            }
            count = zs.size();
        }
        lo = std::min(lo, count);
        if (count < bound)
            violations.push_back({{"kind", "too-few-codes"},
                                  {"x", basis_label(x)},
                                  {"y", basis_label(y)},
                                  {"count", count},
                                  {"bound", bound}});
    }
    r.counts["pairs"] = done;
    r.counts["draws"] = draws;
    r.counts["bound"] = bound;
    if (done) r.counts["min"] = lo;
    conclude(r, hypothesis_met(n, q), violations);
    finish(r, sw);
    return r;
}

VerificationReport check_counterexample(const std::string& which) {
    Stopwatch sw;
    auto r = start_report(which == "binary-15-4" ? "cex-binary" : "cex-ternary", {{"fixture", which}});
    auto expect = [&r](bool ok, const char* what, json detail = json::object()) {
        if (!ok) {
            detail["kind"] = what;
            fail(r, std::move(detail));
        }
    };
    if (which == "binary-15-4") {
        const auto fx = fixture_binary_15_4();
        const auto lines = binary_fixture_lines();
        const Field& f = Field::get(2);
        auto span2 = [&f](const Matrix& a, const Matrix& b) {
            std::vector<std::vector<std::uint32_t>> rows;
            for (const Matrix* m : {&a, &b})
                for (std::size_t i = 0; i < 2; ++i) rows.emplace_back(m->row(i).begin(), m->row(i).end());
            return Matrix::from_rows(f, rows);
        };
        // The displayed generators are (u1, u2, v1, v2) and (v1, v2, w1, w2).
        expect(fx.x_generator == span2(lines.l1, lines.l2), "x-generator-differs-from-lines");
        expect(fx.y_generator == span2(lines.l2, lines.l3), "y-generator-differs-from-lines");
        const Subspace l1 = canonicalize(lines.l1), l2 = canonicalize(lines.l2), l3 = canonicalize(lines.l3);
        expect(l1.dim() == 2 && l2.dim() == 2 && l3.dim() == 2, "lines-not-2-dimensional");
        expect(intersection(fx.x, fx.y) == l2, "meet-is-not-L2");
        r.counts["fixture_checksum"] = fixture_checksum();

        const std::size_t meet = intersect_dim(fx.x, fx.y);
        r.counts["meet"] = meet;
        expect(meet == 2, "meet", {{"meet", meet}});
        const bool sx = is_simplex_code(fx.x), sy = is_simplex_code(fx.y);
        r.counts["x_weight8_codewords"] = count_weight(fx.x, 8);
        r.counts["y_weight8_codewords"] = count_weight(fx.y, 8);
        expect(sx && sy && r.counts["x_weight8_codewords"] == 15 && r.counts["y_weight8_codewords"] == 15,
               "not-simplex");

        const auto cn = common_projective_neighbors(fx.x, fx.y);
        r.counts["candidates"] = cn.candidates.size();
        r.counts["projective_candidates"] = cn.projective.size();
        expect(cn.candidates.size() == 9, "candidate-count", {{"candidates", cn.candidates.size()}});
        for (const auto& z : cn.projective) expect(false, "projective-candidate", {{"code", basis_label(z)}});

        std::size_t pairs = 0, at8 = 0;
        for_each_codeword(l1, [&](std::span<const Elem> a) {
            if (hamming_weight(a) == 0) return;
            for_each_codeword(l3, [&](std::span<const Elem> b) {
                if (hamming_weight(b) == 0) return;
                ++pairs;
                if (hamming_distance(a, b) == 8) {
                    ++at8;
                    expect(false, "distance-8-pair", {{"x", vec_json(a)}, {"y", vec_json(b)}});
                }
            });
        });
        r.counts["l1_l3_pairs"] = pairs;
        r.counts["l1_l3_pairs_at_distance_8"] = at8;
    } else if (which == "ternary-13-3") {
        const auto fx = fixture_ternary_13_3();
        r.counts["fixture_checksum"] = fixture_checksum();
        const std::size_t meet = intersect_dim(fx.pair.x, fx.pair.y);
        r.counts["meet"] = meet;
        expect(meet == 1, "meet", {{"meet", meet}});
        r.counts["x_weight9_codewords"] = count_weight(fx.pair.x, 9);
        r.counts["y_weight9_codewords"] = count_weight(fx.pair.y, 9);
        expect(is_simplex_code(fx.pair.x) && is_simplex_code(fx.pair.y), "not-simplex");

        const auto cn = common_projective_neighbors(fx.pair.x, fx.pair.y);
        r.counts["candidates"] = cn.candidates.size();
        r.counts["projective_candidates"] = cn.projective.size();
        expect(cn.candidates.size() == 16, "candidate-count", {{"candidates", cn.candidates.size()}});
        for (const auto& z : cn.projective) expect(false, "projective-candidate", {{"code", basis_label(z)}});

        std::set<Subspace> printed;
        std::size_t printed_projective = 0;
        for (const auto& m : fx.candidates) {
            Subspace s = canonicalize(m);
            printed_projective += is_projective(s);
            printed.insert(std::move(s));
        }
        const std::set<Subspace> computed(cn.candidates.begin(), cn.candidates.end());
        r.counts["printed_candidates"] = fx.candidates.size();
        r.counts["printed_distinct"] = printed.size();
        r.counts["printed_projective"] = printed_projective;
        r.counts["printed_equals_computed"] = printed == computed;
        expect(printed == computed, "printed-candidates-differ");
        expect(printed_projective == 0, "printed-candidate-projective");
    } else {
        throw std::invalid_argument("unknown fixture: " + which);
    }
    finish(r, sw);
    return r;
}

VerificationReport check_constructions(const SweepBounds& bounds) {
    Stopwatch sw;
    auto r = start_report("constructions",
                          {{"max_n", bounds.max_n}, {"banded_fields", bounds.banded_fields}, {"binary", bounds.binary}});
    json per_q = json::object();
    std::uint64_t instances = 0;
    auto check = [&](std::size_t n, std::size_t k, const Field& f, bool banded) {
        json where = {{"n", n}, {"k", k}, {"q", f.q()}, {"construction", banded ? "banded" : "shift"}};
        try {
            const auto p = banded ? lemma14_pair(n, k, f) : remark1_pair(n, k, f);
            const std::size_t meet = intersect_dim(p.x, p.y);
            const std::size_t expected = 2 * k > n ? 2 * k - n : 0;
            ++instances;
            per_q[std::to_string(f.q())] = per_q.value(std::to_string(f.q()), 0) + 1;
            if (p.x.dim() != k || p.y.dim() != k || !is_projective_via_cij(p.x) || !is_projective_via_cij(p.y) ||
                meet != expected) {
                where["meet"] = meet;
                where["expected"] = expected;
                fail(r, where);
            }
        } catch (const std::exception& e) {
            where["error"] = e.what();
            fail(r, where);
        }
    };
    for (auto q : bounds.banded_fields) {
        const Field& f = Field::of_order(q);
        for (std::size_t n = 4; n <= bounds.max_n; ++n)
            for (std::size_t k = 2; k + 2 <= n; ++k)
                if (pair_admissible(n, k, q)) check(n, k, f, true);
    }
    json not_covered = json::array();
    if (bounds.binary) {
        const Field& f = Field::get(2);
        for (std::size_t n = 4; n <= bounds.max_n; ++n)
            for (std::size_t k = 2; k + 2 <= n; ++k) {
                if (k >= 3 && k + 3 <= n) {
                    if (pair_admissible(n, k, 2)) check(n, k, f, false);
                    continue;
                }
                try {
                    construction_pair(n, k, f);
                    fail(r, {{"kind", "expected-not-covered"}, {"n", n}, {"k", k}, {"q", 2}});
                } catch (const NotCoveredError&) {
                    not_covered.push_back({n, k, 2});
                }
            }
        if (!not_covered.empty())
            r.notes.push_back("q = 2 with k = 2 or k = n-2 is outside both constructions; rejected as not covered");
    }
    r.counts["instances"] = instances;
    r.counts["instances_by_q"] = per_q;
    r.counts["not_covered"] = not_covered;
    finish(r, sw);
    return r;
}

VerificationReport check_grassmann_formula(std::size_t n, std::size_t k, std::uint32_t q, const Guards& guards) {
    Stopwatch sw;
    auto r = start_report("grassmann-formula", {{"n", n}, {"k", k}, {"q", q}});
    if (gaussian_binomial(n, k, q) > guards.max_vertices) {
        skip(r, "gaussian_binomial(n,k,q) exceeds max_vertices");
        finish(r, sw);
        return r;
    }
    const CodeGraph g = build_graph(n, k, q, Predicate::kAll, AdjacencyMethod::kAuto, guards.max_vertices);
    std::vector<BigInt> expected(k + 1);
    for (std::size_t m = 0; m <= k; ++m) expected[m] = grassmann_geodesic_count(m, q);
    std::uint64_t pairs = 0, distance_bad = 0, count_bad = 0;
    std::map<std::size_t, std::string> observed;
    for (std::size_t s = 0; s < g.size(); ++s) {
        const auto dist = bfs(g, s).distances;
        const auto paths = geodesic_counts_from(g, s);
        for (std::size_t t = s + 1; t < g.size(); ++t) {
            ++pairs;
            const std::size_t m = grassmann_distance(g.vertices[s], g.vertices[t]);
            if (dist[t] != static_cast<std::int64_t>(m)) {
                ++distance_bad;
                fail(r, {{"kind", "distance"}, {"x", basis_label(g.vertices[s])}, {"y", basis_label(g.vertices[t])},
                         {"graph_distance", dist[t]}, {"formula", m}});
            } else if (paths[t] != expected[m]) {
                ++count_bad;
                fail(r, {{"kind", "geodesics"}, {"x", basis_label(g.vertices[s])}, {"y", basis_label(g.vertices[t])},
                         {"geodesics", big_str(paths[t])}, {"formula", big_str(expected[m])}});
            }
            observed.emplace(m, big_str(paths[t]));
        }
    }
    r.counts["vertices"] = g.size();
    r.counts["pairs"] = pairs;
    r.counts["distance_mismatches"] = distance_bad;
    r.counts["geodesic_mismatches"] = count_bad;
    json per = json::object();
    for (const auto& [m, c] : observed) per[std::to_string(m)] = {{"observed", c}, {"formula", big_str(expected[m])}};
    r.counts["geodesics_by_distance"] = per;
    finish(r, sw);
    return r;
}

VerificationReport check_cross_validation(std::uint64_t seed, std::size_t random_matrices) {
    Stopwatch sw;
    auto r = start_report("cross-validation", {{"random_matrices", random_matrices}}, seed);
    const Field& f2 = Field::get(2);

    std::uint64_t subspaces = 0, proj_bad = 0;
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 2}, {5, 3}}) {
        for_each_subspace(f2, n, k, [&](const Subspace& s) {
            ++subspaces;
            if (is_projective(s) != is_projective_via_cij(s)) {
                ++proj_bad;
                fail(r, {{"kind", "projectivity-criteria-disagree"}, {"code", basis_label(s)}});
            }
        });
    }
    r.counts["projectivity_subspaces"] = subspaces;
    r.counts["projectivity_disagreements"] = proj_bad;

    std::uint64_t binoms = 0, lucas_bad = 0;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint64_t a = 0; a <= 100; ++a)
            for (std::uint64_t b = 0; b <= 100; ++b) {
                ++binoms;
                const BigInt direct = b > a ? BigInt(0) : binomial(a, b) % p;
                if (BigInt(lucas_binom_mod_p(a, b, p)) != direct) {
                    ++lucas_bad;
                    fail(r, {{"kind", "lucas"}, {"a", a}, {"b", b}, {"p", p}});
                }
            }
    r.counts["binomials"] = binoms;
    r.counts["lucas_disagreements"] = lucas_bad;

    // Shapes straddle the 64-bit word boundaries of the packed rows.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> rows_d(1, 12), cols_d(1, 140);
    std::uint64_t rref_bad = 0;
    for (std::size_t i = 0; i < random_matrices; ++i) {
        const std::size_t rows = rows_d(rng), cols = cols_d(rng);
        // Sparse rows make rank deficiency and zero columns common.
        std::bernoulli_distribution bit(i % 2 == 0 ? 0.5 : 0.1);
        Matrix m(f2, rows, cols);
        for (std::size_t a = 0; a < rows; ++a)
            for (std::size_t b = 0; b < cols; ++b) m(a, b) = bit(rng) ? 1 : 0;
        const auto x = rref_gf2(m), y = rref_generic(m);
        if (!(x.reduced == y.reduced) || x.rank != y.rank || x.pivots != y.pivots) {
            ++rref_bad;
            fail(r, {{"kind", "rref-disagreement"}, {"matrix", to_text(m)}});
        }
    }
    r.counts["rref_matrices"] = random_matrices;
    r.counts["rref_disagreements"] = rref_bad;
    finish(r, sw);
    return r;
}

std::vector<VerificationReport> check_all(std::uint64_t seed, const Guards& guards) {
    std::vector<VerificationReport> out;
    for (auto [q, k] : {std::pair<std::uint32_t, std::size_t>{2, 3}, {2, 4}, {3, 3}, {4, 2}})
        out.push_back(check_theorem2(q, k, seed, guards));
    for (auto [q, k] : {std::pair<std::uint32_t, std::size_t>{2, 2}, {2, 3}, {3, 3}})
        out.push_back(check_corollary1(q, k, guards));
    out.push_back(check_corollary2(Corollary2Variant::kStandard, seed));
    out.push_back(check_corollary2(Corollary2Variant::kShuffled, seed));
    out.push_back(check_counterexample("binary-15-4"));
    out.push_back(check_counterexample("ternary-13-3"));
    out.push_back(check_theorem1(4, 2, 7, guards));
    out.push_back(check_theorem1(4, 2, 3, guards));
    out.push_back(check_theorem1(15, 4, 2, guards));
    for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{4, 2}, {5, 2}, {4, 3}})
        out.push_back(check_grassmann_formula(n, 2, q, guards));
    out.push_back(check_lemma11(5, 2, 11, 100, seed));
    out.push_back(check_lemma11(4, 2, 7, 100, seed));
    out.push_back(check_lemma12(5, 3, 11, 100, 0, seed));
    out.push_back(check_lemma12(6, 4, 31, 25, 1, seed));
    out.push_back(check_lemma13(5, 2, 11, 2, 20, seed));
    out.push_back(check_lemma13(6, 3, 31, 3, 10, seed));
    out.push_back(check_constructions());
    out.push_back(check_cross_validation(seed));
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.claim < b.claim; });
    return out;
}

namespace {

void expect_arity(const ClaimRequest& a, std::size_t n) {
    if (a.params.size() != n)
        throw std::invalid_argument(a.claim + " takes " + std::to_string(n) + " numeric parameter(s), got " +
                                    std::to_string(a.params.size()));
}

std::uint32_t as_q(std::uint64_t v) {
    if (v > Field::kMaxOrder) throw std::invalid_argument("q out of range");
    return static_cast<std::uint32_t>(v);
}

} // namespace

std::vector<VerificationReport> run_claim(const ClaimRequest& a) {
    const auto& p = a.params;
    const std::string& c = a.claim;
    if (c == "all") {
        if (a.profile != "desk") throw std::invalid_argument("only the desk profile is defined");
        expect_arity(a, 0);
        return check_all(a.seed, a.guards);
    }
    if (c == "theorem1") {
        expect_arity(a, 3);
        return {check_theorem1(p[0], p[1], as_q(p[2]), a.guards)};
    }
    if (c == "theorem2") {
        expect_arity(a, 2);
        return {check_theorem2(as_q(p[0]), p[1], a.seed, a.guards)};
    }
    if (c == "corollary1") {
        expect_arity(a, 2);
        return {check_corollary1(as_q(p[0]), p[1], a.guards)};
    }
    if (c == "corollary2") {
        expect_arity(a, 0);
        Corollary2Variant v = Corollary2Variant::kStandard;
        if (a.variant == "shuffled")
            v = Corollary2Variant::kShuffled;
        else if (a.variant == "mutated")
            v = Corollary2Variant::kMutated;
        else if (a.variant != "standard")
            throw std::invalid_argument("unknown variant " + a.variant);
        return {check_corollary2(v, a.seed)};
    }
    if (c == "lemma11") {
        expect_arity(a, 3);
        return {check_lemma11(p[0], p[1], as_q(p[2]), a.trials ? a.trials : 100, a.seed)};
    }
    if (c == "lemma12") {
        expect_arity(a, 3);
        return {check_lemma12(p[0], p[1], as_q(p[2]), a.trials ? a.trials : 100, a.dim_u, a.seed)};
    }
    if (c == "lemma13") {
        expect_arity(a, 4);
        return {check_lemma13(p[0], p[1], as_q(p[2]), p[3], a.trials ? a.trials : 20, a.seed)};
    }
    if (c == "counterexample" || c == "cex-binary" || c == "cex-ternary") {
        expect_arity(a, 0);
        std::string which = a.fixture;
        if (c == "cex-binary") which = "binary-15-4";
        if (c == "cex-ternary") which = "ternary-13-3";
        if (which != "binary-15-4" && which != "ternary-13-3")
            throw std::invalid_argument("counterexample needs fixture binary-15-4 or ternary-13-3");
        return {check_counterexample(which)};
    }
    if (c == "constructions") {
        expect_arity(a, 0);
        SweepBounds b;
        b.max_n = a.max_n;
        return {check_constructions(b)};
    }
    if (c == "grassmann-formula") {
        expect_arity(a, 3);
        return {check_grassmann_formula(p[0], p[1], as_q(p[2]), a.guards)};
    }
    if (c == "cross-validation") {
        expect_arity(a, 0);
        return {check_cross_validation(a.seed)};
    }
    throw std::invalid_argument("unknown claim " + c);
}

} // namespace projcode
