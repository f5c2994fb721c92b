#ifndef PROJCODE_CONSTRUCTIONS_HPP
#define PROJCODE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "projcode/linalg.hpp"
#include "projcode/qanalog.hpp"

namespace projcode {

// Parameters outside the ranges for which an explicit pair is known.
class NotCoveredError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A construction that should succeed did not; always a defect.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Provenance { kLemma14, kRemark1, kFixtureBinary, kFixtureTernary };

std::string to_string(Provenance p);

struct ConstructionPair {
    Subspace x;
    Subspace y;
    Matrix x_generator;
    Matrix y_generator;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint32_t q = 0;
    std::size_t expected_meet = 0;
    Provenance provenance = Provenance::kLemma14;
    // Field choices of the banded construction (encodings; 0 when unused).
    Elem a = 0;
    Elem lambda = 0;
};

// k x [k]_q matrix whose columns are the monic representatives of all points
// of PG(k-1, q), in lexicographic order.
Matrix simplex_generator_matrix(const Field& field, std::size_t k);
Subspace simplex_generator(const Field& field, std::size_t k);

// min([k]_q, [n-k]_q) >= n and 1 < k < n-1
bool pair_admissible(std::size_t n, std::size_t k, std::uint32_t q);

/*
 * Projective [n,k]_q codes X, Y with dim(X cap Y) = max(0, 2k-n), for q > 2.
 *
 * For 2k <= n: X = rowspace [I, A, B], Y = rowspace [lambda A, I, B] with A
 * lower-bidiagonal of ones plus a_{k-1,k} = a. The stacked matrix has full
 * rank iff I - lambda A^2 is invertible; a is taken non-square for odd q so
 * that A^2 has the single eigenvalue 1. lambda is found by testing ranks.
 * For n < 2k the (n, n-k) pair is extended by a common complement of its sum.
 */
ConstructionPair lemma14_pair(std::size_t n, std::size_t k, const Field& field);

// Same target with X = [I, U-A, B], Y = [-I, I-U, B'] (U all ones, A the
// superdiagonal shift); valid for 3 <= k <= n-3, in particular for q = 2.
ConstructionPair remark1_pair(std::size_t n, std::size_t k, const Field& field);

// Dispatches to lemma14_pair (q > 2) or remark1_pair (q = 2, 3 <= k <= n-3);
// throws NotCoveredError otherwise.
ConstructionPair construction_pair(std::size_t n, std::size_t k, const Field& field);

struct BinaryFixtureLines {
    // rows (u1, u2, u1+u2) / (v1, v2, v1+v2) / (w1, w2, w1+w2)
    Matrix l1, l2, l3;
};

BinaryFixtureLines binary_fixture_lines();
ConstructionPair fixture_binary_15_4();

struct TernaryFixture {
    ConstructionPair pair;
    // The sixteen 3 x 13 generator matrices [w; v-combination; u-combination].
    std::vector<Matrix> candidates;
};

TernaryFixture fixture_ternary_13_3();

// FNV-1a over every literal fixture entry, for integrity tests.
std::uint64_t fixture_checksum();

} // namespace projcode

#endif // PROJCODE_CONSTRUCTIONS_HPP
