#ifndef PROJCODE_CODES_HPP
#define PROJCODE_CODES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "projcode/linalg.hpp"

namespace projcode {

class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// q^k above this is refused by exhaustive codeword scans.
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 24;

using WeightDistribution = std::map<std::size_t, std::uint64_t>;

struct CodeProfile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint32_t q = 0;
    bool nondegenerate = false;
    bool projective = false;
    bool simplex = false;
    // weight -> number of nonzero codewords of that weight
    WeightDistribution weight_distribution;
};

struct ProjectiveSystem {
    // One point per coordinate, in coordinate order: the span of the i-th
    // column of the canonical generator matrix, as a 1-dim subspace of F_q^k.
    std::vector<Subspace> points;
    std::size_t distinct_count = 0;
};

// Coordinate i of a codeword x lands at position permutation[i] scaled by
// scalars[i]: y[permutation[i]] = scalars[i] * x[i].
struct MonomialWitness {
    std::vector<std::size_t> permutation;
    std::vector<Elem> scalars;
};

std::size_t hamming_weight(std::span<const Elem> v);
std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

bool is_nondegenerate(const Subspace& c);
// Column criterion: nondegenerate and no two columns proportional.
bool is_projective(const Subspace& c);
// Coordinate-pair criterion: dim(C cap C_ij) = k - 2 for every i < j, where
// C_ij is the subspace of vectors vanishing at i and j.
bool is_projective_via_cij(const Subspace& c);

ProjectiveSystem projective_system(const Subspace& c);

// Visits every codeword (including zero) once. Throws GuardError when
// q^k exceeds kMaxCodewords.
void for_each_codeword(const Subspace& c, const std::function<void(std::span<const Elem>)>& fn);
WeightDistribution weight_distribution(const Subspace& c);

// binomial(a, b) mod p by base-p digits.
std::uint32_t lucas_binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p);

enum class EquationMethod {
    // evaluate e_{p^j}(x_1^{q-1}, ..., x_n^{q-1}) with field arithmetic
    kPolynomial,
    // x^{q-1} is a 0/1 indicator, so e_d reduces to binomial(weight, d) mod p
    kLucas,
};

// The power-sum system characterising weight-q^{k-1} vectors of length
// [k]_q: for j = 0 .. mk-m-1 the elementary symmetric polynomial of degree
// p^j in the (q-1)-th powers vanishes. The zero vector satisfies it.
bool simplex_equations_satisfied(std::span<const Elem> v, const Field& field, std::size_t k,
                                 EquationMethod method = EquationMethod::kLucas);
// Degrees p^j of the equations, j = 0 .. mk-m-1.
std::vector<std::uint64_t> simplex_equation_degrees(const Field& field, std::size_t k);

bool is_simplex_vector(std::span<const Elem> v, const Field& field, std::size_t k);
bool is_simplex_code(const Subspace& c);

CodeProfile profile(const Subspace& c);

// Backtracking search for a monomial map carrying C1 onto C2. Guarded to
// n <= 16 and q <= 4.
std::optional<MonomialWitness> monomial_equivalent(const Subspace& c1, const Subspace& c2);
Subspace apply_monomial(const Subspace& c, const MonomialWitness& w);

} // namespace projcode

#endif // PROJCODE_CODES_HPP
