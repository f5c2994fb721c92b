#ifndef PROJCODE_LINALG_HPP
#define PROJCODE_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "projcode/gf.hpp"

namespace projcode {

class LinalgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);
    Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix from_rows(const Field& field, const std::vector<std::vector<std::uint32_t>>& rows,
                            std::size_t cols_if_empty = 0);
    static Matrix identity(const Field& field, std::size_t k);

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Elem>& entries() const { return entries_; }

    Elem operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::vector<Elem> column(std::size_t c) const;

    // Horizontal concatenation; all blocks must share the field and row count.
    static Matrix hconcat(const std::vector<const Matrix*>& blocks);
    // Vertical concatenation; all blocks must share the field and column count.
    static Matrix vconcat(const std::vector<const Matrix*>& blocks);

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(Elem s) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Dispatches to the bit-packed elimination for
// GF(2) and to the table-driven elimination otherwise; both produce the same
// unique RREF.
RrefResult rref(const Matrix& m);
RrefResult rref_generic(const Matrix& m);
RrefResult rref_gf2(const Matrix& m);

std::size_t rank(const Matrix& m);

/*
 * A subspace of F_q^n stored by its canonical basis: the RREF of any
 * generator matrix with zero rows dropped. Equality, ordering and hashing
 * are on the canonical basis, so two Subspace values compare equal iff they
 * are the same subspace. The zero subspace has an empty (0 x n) basis.
 */
class Subspace {
public:
    static Subspace zero(const Field& field, std::size_t ambient);
    static Subspace full(const Field& field, std::size_t ambient);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v with respect to the canonical basis; v must lie in the subspace.
    std::vector<Elem> coordinates(std::span<const Elem> v) const;
    // sum_i coeffs[i] * basis row i
    std::vector<Elem> combine(std::span<const Elem> coeffs) const;

    std::size_t hash() const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // Lexicographic on (ambient, dim, canonical basis entries).
    bool operator<(const Subspace& o) const;

private:
    friend Subspace canonicalize(const Matrix& generators);
    friend Subspace subspace_from_rref(Matrix basis, std::vector<std::size_t> pivots);

    Subspace(Matrix basis, std::vector<std::size_t> pivots);

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace canonicalize(const Matrix& generators);
// Wraps a matrix the caller guarantees is already in RREF with no zero rows.
Subspace subspace_from_rref(Matrix basis, std::vector<std::size_t> pivots);

// dim(X cap Y) = dim X + dim Y - rank [X; Y]
std::size_t intersect_dim(const Subspace& x, const Subspace& y);
Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersection(const Subspace& x, const Subspace& y);

// All hyperplanes of X in ascending order; exactly [dim X]_q of them.
std::vector<Subspace> hyperplanes_of(const Subspace& x);
// All d-dimensional W with U <= W <= Y, in ascending order.
std::vector<Subspace> superspaces_in(const Subspace& u, const Subspace& y, std::size_t d);

// Calls fn once for every k-dimensional subspace of F_q^n, generated
// directly as RREF matrices by pivot pattern (no deduplication).
void for_each_subspace(const Field& field, std::size_t n, std::size_t k,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> all_subspaces(const Field& field, std::size_t n, std::size_t k);

// Monic normalization: scale so that the first nonzero entry is 1.
std::vector<Elem> monic(const Field& field, std::span<const Elem> v);

// Text format: "n k q p m" header then k lines of n decimal encodings.
std::string to_text(const Matrix& m);
std::string to_text(const Subspace& s);
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix(const std::string& text);
// Reads consecutive matrices separated by optional blank lines.
std::vector<Matrix> parse_matrices(std::istream& in);

} // namespace projcode

template <>
struct std::hash<projcode::Subspace> {
    std::size_t operator()(const projcode::Subspace& s) const { return s.hash(); }
};

#endif // PROJCODE_LINALG_HPP
