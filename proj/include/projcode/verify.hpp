#ifndef PROJCODE_VERIFY_HPP
#define PROJCODE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "projcode/graphs.hpp"

namespace projcode {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { kPass, kFail, kSkippedGuard };

std::string to_string(Status s);
Status parse_status(const std::string& s);

struct VerificationReport {
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::kPass;
    nlohmann::json counts = nlohmann::json::object();
    // Non-empty whenever status is kFail.
    nlohmann::json witnesses = nlohmann::json::array();
    std::vector<std::string> notes;
    std::uint64_t seed = 0;
    double wall_time = 0.0;
    std::string version = kVersion;

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);

    bool operator==(const VerificationReport& o) const;
    // Equality of everything except wall_time.
    bool same_content(const VerificationReport& o) const;
};

// Desk-scale limits, overridable from the command line.
struct Guards {
    // on gaussian_binomial(n, k, q) for subspace enumeration
    std::uint64_t max_vertices = kMaxEnumeration;
    // on q^n for exhaustive vector scans
    std::uint64_t max_scan = 20'000'000;
};

inline constexpr std::uint64_t kDefaultSeed = 1;
// Rejection sampling gives up after this many draws.
inline constexpr std::uint64_t kSamplingRetries = 100'000;

// Builds the projective graph and checks connectivity, diameter min(k, n-k),
// graph distance = k - dim(X cap Y) and the geodesic lower bound
// prod_{i=2}^m [i]_q for every pair. With q < C(n, 2) the run is exploratory:
// status stays pass and counts.conclusions_hold records the outcome.
VerificationReport check_theorem1(std::size_t n, std::size_t k, std::uint32_t q, const Guards& guards = {});

// Exhaustive scan of F_q^n, n = [k]_q: for nonzero v the equations hold iff
// wt(v) = q^{k-1}. The two evaluation methods are compared on a sample.
VerificationReport check_theorem2(std::uint32_t q, std::size_t k, std::uint64_t seed = kDefaultSeed,
                                  const Guards& guards = {});

// Every simplex code consists of equation-satisfying vectors, and adjoining
// any vector outside it brings in one that does not.
VerificationReport check_corollary1(std::uint32_t q, std::size_t k, const Guards& guards = {});

enum class Corollary2Variant {
    kStandard,
    // relabel the simplex graph by a seeded permutation first
    kShuffled,
    // negative control: drop one edge, so no isomorphism exists
    kMutated,
};

VerificationReport check_corollary2(Corollary2Variant variant = Corollary2Variant::kStandard,
                                    std::uint64_t seed = kDefaultSeed);

// Number of projective common neighbours of X and Y; throws
// std::invalid_argument unless dim(X cap Y) = k - 2.
std::size_t lemma11_count(const Subspace& x, const Subspace& y);

VerificationReport check_lemma11(std::size_t n, std::size_t k, std::uint32_t q, std::size_t trials,
                                 std::uint64_t seed = kDefaultSeed);

// Throws std::invalid_argument unless dim_u < k - 2.
VerificationReport check_lemma12(std::size_t n, std::size_t k, std::uint32_t q, std::size_t trials,
                                 std::size_t dim_u, std::uint64_t seed = kDefaultSeed);

// Pairs at distance m >= 2. For m >= 3 the codes X' + S are counted, where X'
// is a projective hyperplane of X through X cap Y and S runs over the
// (k-m+1)-subspaces of Y through X cap Y; for m = 2 the projective common
// neighbours are counted.
VerificationReport check_lemma13(std::size_t n, std::size_t k, std::uint32_t q, std::size_t m, std::size_t trials,
                                 std::uint64_t seed = kDefaultSeed);

// which: "binary-15-4" or "ternary-13-3"
VerificationReport check_counterexample(const std::string& which);

struct SweepBounds {
    std::size_t max_n = 10;
    std::vector<std::uint32_t> banded_fields{3, 4, 5, 7, 8, 9};
    // q = 2 instances go through the shift construction
    bool binary = true;
};

VerificationReport check_constructions(const SweepBounds& bounds = {});

// Full Grassmann graphs: BFS distance and exact geodesic counts against the
// closed forms, over every vertex pair.
VerificationReport check_grassmann_formula(std::size_t n, std::size_t k, std::uint32_t q, const Guards& guards = {});

// Independent implementations compared: projectivity criteria, Lucas
// binomials, GF(2) versus generic elimination.
VerificationReport check_cross_validation(std::uint64_t seed = kDefaultSeed, std::size_t random_matrices = 10'000);

// Every check at desk-scale parameters, sorted by claim id.
std::vector<VerificationReport> check_all(std::uint64_t seed = kDefaultSeed, const Guards& guards = {});

struct ClaimRequest {
    std::string claim;
    std::vector<std::uint64_t> params;
    std::uint64_t seed = kDefaultSeed;
    Guards guards;
    // corollary2: standard | shuffled | mutated
    std::string variant = "standard";
    // all: only "desk" is defined
    std::string profile = "desk";
    // counterexample: binary-15-4 | ternary-13-3
    std::string fixture;
    // lemma checks; 0 selects the default
    std::size_t trials = 0;
    std::size_t dim_u = 0;
    // constructions sweep
    std::size_t max_n = 10;
};

// Dispatch by claim id with positional parameters:
//   theorem1 n k q | theorem2 q k | corollary1 q k | corollary2
//   lemma11 n k q | lemma12 n k q | lemma13 n k q m
//   counterexample | cex-binary | cex-ternary | constructions
//   grassmann-formula n k q | cross-validation | all
// Throws std::invalid_argument on unknown claims, wrong arity or bad options.
std::vector<VerificationReport> run_claim(const ClaimRequest& req);

// Random k-dim subspace of F_q^n from a uniformly random full-rank matrix.
Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng);

} // namespace projcode

#endif // PROJCODE_VERIFY_HPP
