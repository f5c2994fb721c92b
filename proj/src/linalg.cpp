#include "projcode/linalg.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>

namespace projcode {

namespace {

void require_same_space(const Subspace& x, const Subspace& y) {
    if (&x.field() != &y.field()) throw LinalgError("subspaces over different fields");
    if (x.ambient() != y.ambient()) throw LinalgError("ambient dimension mismatch");
}

// In-place Gauss-Jordan on a row-major buffer. Returns pivot columns.
std::vector<std::size_t> eliminate(const Field& f, std::vector<Elem>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols, a.begin() + r * cols);
        Elem* pr = a.data() + r * cols;
        const Elem iv = f.inv(pr[c]);
        if (iv != 1)
            for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], iv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Elem* pi = a.data() + i * cols;
            const Elem factor = pi[c];
            if (factor == 0) continue;
            const Elem nf = f.neg(factor);
            for (std::size_t j = c; j < cols; ++j)
                if (pr[j] != 0) pi[j] = f.add(pi[j], f.mul(nf, pr[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Bit-packed GF(2) rows; column c lives in word c / 64, bit c % 64.
struct PackedRows {
    std::size_t rows, cols, words;
    std::vector<std::uint64_t> bits;

    PackedRows(std::size_t r, std::size_t c) : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

    std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }
    bool get(std::size_t i, std::size_t c) const { return (bits[i * words + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t i, std::size_t c) { bits[i * words + c / 64] |= std::uint64_t{1} << (c % 64); }
};

std::vector<std::size_t> eliminate_packed(PackedRows& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t sel = r;
        while (sel < a.rows && !a.get(sel, c)) ++sel;
        if (sel == a.rows) continue;
        if (sel != r) std::swap_ranges(a.row(sel), a.row(sel) + a.words, a.row(r));
        const std::uint64_t* pr = a.row(r);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || !a.get(i, c)) continue;
            std::uint64_t* pi = a.row(i);
            for (std::size_t w = 0; w < a.words; ++w) pi[w] ^= pr[w];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Rank of the row stack [X; extra rows], X given in RREF. Stops early once
// the rank exceeds stop_above (pass SIZE_MAX for the exact rank).
std::size_t stacked_rank(const Subspace& x, const Matrix& extra, std::size_t stop_above = SIZE_MAX) {
    const Field& f = x.field();
    const std::size_t n = x.ambient();
    const std::size_t k = x.dim();
    const auto& piv = x.pivots();
    std::vector<Elem> residual;
    residual.reserve(extra.rows() * n);
    std::vector<std::size_t> res_pivots;
    std::size_t rank = k;
    std::vector<Elem> v(n);
    for (std::size_t r = 0; r < extra.rows(); ++r) {
        std::copy(extra.row(r).begin(), extra.row(r).end(), v.begin());
        for (std::size_t i = 0; i < k; ++i) {
            const Elem c = v[piv[i]];
            if (c == 0) continue;
            const Elem nc = f.neg(c);
            auto br = x.basis().row(i);
            for (std::size_t j = piv[i]; j < n; ++j)
                if (br[j] != 0) v[j] = f.add(v[j], f.mul(nc, br[j]));
        }
        for (std::size_t i = 0; i < res_pivots.size(); ++i) {
            const Elem c = v[res_pivots[i]];
            if (c == 0) continue;
            const Elem nc = f.neg(c);
            const Elem* br = residual.data() + i * n;
            for (std::size_t j = 0; j < n; ++j)
                if (br[j] != 0) v[j] = f.add(v[j], f.mul(nc, br[j]));
        }
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead == n) continue;
        const Elem iv = f.inv(v[lead]);
        for (std::size_t j = lead; j < n; ++j) v[j] = f.mul(v[j], iv);
        // keep residual rows reduced at each other's pivots
        for (std::size_t i = 0; i < res_pivots.size(); ++i) {
            Elem* br = residual.data() + i * n;
            const Elem c = br[lead];
            if (c == 0) continue;
            const Elem nc = f.neg(c);
            for (std::size_t j = 0; j < n; ++j)
                if (v[j] != 0) br[j] = f.add(br[j], f.mul(nc, v[j]));
        }
        residual.insert(residual.end(), v.begin(), v.end());
        res_pivots.push_back(lead);
        ++rank;
        if (rank > stop_above) return rank;
    }
    return rank;
}

std::size_t stacked_rank_gf2(const Subspace& x, const Subspace& y) {
    const std::size_t n = x.ambient();
    PackedRows a(x.dim() + y.dim(), n);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (x.basis()(i, c)) a.set(i, c);
    for (std::size_t i = 0; i < y.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (y.basis()(i, c)) a.set(x.dim() + i, c);
    return eliminate_packed(a).size();
}

} // namespace

// ---- Matrix ---------------------------------------------------------------

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(&field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw LinalgError("matrix entry count does not match shape");
    for (auto e : entries_)
        if (e >= field.q()) throw LinalgError("matrix entry outside field");
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<std::uint32_t>>& rows,
                         std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw LinalgError("ragged rows");
        for (auto v : r) {
            if (v >= field.q()) throw LinalgError("matrix entry outside field");
            entries.push_back(static_cast<Elem>(v));
        }
    }
    return Matrix(field, rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(const Field& field, std::size_t k) {
    Matrix m(field, k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::hconcat(const std::vector<const Matrix*>& blocks) {
    if (blocks.empty()) throw LinalgError("hconcat of nothing");
    const Field& f = blocks.front()->field();
    const std::size_t rows = blocks.front()->rows();
    std::size_t cols = 0;
    for (auto* b : blocks) {
        if (&b->field() != &f || b->rows() != rows) throw LinalgError("hconcat shape mismatch");
        cols += b->cols();
    }
    Matrix out(f, rows, cols);
    std::size_t off = 0;
    for (auto* b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b->cols(); ++c) out(r, off + c) = (*b)(r, c);
        off += b->cols();
    }
    return out;
}

Matrix Matrix::vconcat(const std::vector<const Matrix*>& blocks) {
    if (blocks.empty()) throw LinalgError("vconcat of nothing");
    const Field& f = blocks.front()->field();
    const std::size_t cols = blocks.front()->cols();
    std::vector<Elem> entries;
    std::size_t rows = 0;
    for (auto* b : blocks) {
        if (&b->field() != &f || b->cols() != cols) throw LinalgError("vconcat shape mismatch");
        entries.insert(entries.end(), b->entries().begin(), b->entries().end());
        rows += b->rows();
    }
    return Matrix(f, rows, cols, std::move(entries));
}

Matrix Matrix::transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_ || cols_ != rhs.rows_) throw LinalgError("matrix product shape mismatch");
    const Field& f = *field_;
    Matrix out(f, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Elem a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, rhs(l, j)));
        }
    return out;
}

Matrix Matrix::scaled(Elem s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = field_->mul(e, s);
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) throw LinalgError("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_->add(entries_[i], rhs.entries_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) throw LinalgError("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_->sub(entries_[i], rhs.entries_[i]);
    return out;
}

// ---- RREF -----------------------------------------------------------------

RrefResult rref_generic(const Matrix& m) {
    std::vector<Elem> a = m.entries();
    auto pivots = eliminate(m.field(), a, m.rows(), m.cols());
    const std::size_t r = pivots.size();
    return {Matrix(m.field(), m.rows(), m.cols(), std::move(a)), r, std::move(pivots)};
}

RrefResult rref_gf2(const Matrix& m) {
    if (m.field().q() != 2) throw LinalgError("bit-packed elimination requires GF(2)");
    PackedRows a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(i, c)) a.set(i, c);
    auto pivots = eliminate_packed(a);
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = a.get(i, c) ? 1 : 0;
    const std::size_t r = pivots.size();
    return {std::move(out), r, std::move(pivots)};
}

RrefResult rref(const Matrix& m) { return m.field().q() == 2 ? rref_gf2(m) : rref_generic(m); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---- Subspace ---------------------------------------------------------------

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(const Field& field, std::size_t ambient) { return {Matrix(field, 0, ambient), {}}; }

Subspace Subspace::full(const Field& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    std::iota(piv.begin(), piv.end(), 0);
    return {Matrix::identity(field, ambient), std::move(piv)};
}

Subspace canonicalize(const Matrix& generators) {
    auto res = rref(generators);
    std::vector<Elem> entries(res.reduced.entries().begin(),
                              res.reduced.entries().begin() + res.rank * generators.cols());
    return {Matrix(generators.field(), res.rank, generators.cols(), std::move(entries)), std::move(res.pivots)};
}

Subspace subspace_from_rref(Matrix basis, std::vector<std::size_t> pivots) {
    return {std::move(basis), std::move(pivots)};
}

bool Subspace::contains(std::span<const Elem> v) const {
    if (v.size() != ambient()) throw LinalgError("vector length does not match ambient dimension");
    const Field& f = field();
    std::vector<Elem> r(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        const Elem c = r[pivots_[i]];
        if (c == 0) continue;
        const Elem nc = f.neg(c);
        auto br = basis_.row(i);
        for (std::size_t j = pivots_[i]; j < r.size(); ++j)
            if (br[j] != 0) r[j] = f.add(r[j], f.mul(nc, br[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    require_same_space(*this, other);
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

std::vector<Elem> Subspace::coordinates(std::span<const Elem> v) const {
    if (!contains(v)) throw LinalgError("vector is not in the subspace");
    std::vector<Elem> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

std::vector<Elem> Subspace::combine(std::span<const Elem> coeffs) const {
    if (coeffs.size() != dim()) throw LinalgError("coefficient count does not match dimension");
    const Field& f = field();
    std::vector<Elem> v(ambient(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (coeffs[i] == 0) continue;
        auto br = basis_.row(i);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (br[j] != 0) v[j] = f.add(v[j], f.mul(coeffs[i], br[j]));
    }
    return v;
}

std::size_t Subspace::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(ambient());
    mix(dim());
    for (auto e : basis_.entries()) mix(e);
    return static_cast<std::size_t>(h);
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient() != o.ambient()) return ambient() < o.ambient();
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.entries() < o.basis_.entries();
}

// ---- lattice operations --------------------------------------------------------

std::size_t intersect_dim(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    const std::size_t r = x.field().q() == 2 ? stacked_rank_gf2(x, y) : stacked_rank(x, y.basis());
    return x.dim() + y.dim() - r;
}

Subspace sum(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    return canonicalize(Matrix::vconcat({&x.basis(), &y.basis()}));
}

Subspace intersection(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    // Zassenhaus: rows [x | x] and [y | 0]; rows with zero left half span X cap Y.
    const Field& f = x.field();
    const std::size_t n = x.ambient();
    Matrix z(f, x.dim() + y.dim(), 2 * n);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) {
            z(i, c) = x.basis()(i, c);
            z(i, n + c) = x.basis()(i, c);
        }
    for (std::size_t i = 0; i < y.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) z(x.dim() + i, c) = y.basis()(i, c);
    auto res = rref(z);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < res.rank; ++i) {
        if (res.pivots[i] < n) continue;
        std::vector<std::uint32_t> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = res.reduced(i, n + c);
        rows.push_back(std::move(row));
    }
    return canonicalize(Matrix::from_rows(f, rows, n));
}

std::vector<Elem> monic(const Field& field, std::span<const Elem> v) {
    std::vector<Elem> out(v.begin(), v.end());
    auto it = std::find_if(out.begin(), out.end(), [](Elem e) { return e != 0; });
    if (it == out.end() || *it == 1) return out;
    const Elem iv = field.inv(*it);
    for (auto& e : out) e = field.mul(e, iv);
    return out;
}

std::vector<Subspace> hyperplanes_of(const Subspace& x) {
    const std::size_t k = x.dim();
    if (k == 0) throw LinalgError("the zero subspace has no hyperplanes");
    const Field& f = x.field();
    const std::uint32_t q = f.q();
    std::vector<Subspace> out;
    // Enumerate monic functionals on the coordinate space of X; each kernel
    // is one hyperplane, so no deduplication is needed.
    std::vector<Elem> func(k, 0);
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t tail = k - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::fill(func.begin(), func.end(), 0);
            func[lead] = 1;
            std::uint64_t c = code;
            for (std::size_t i = 0; i < tail; ++i) {
                func[k - 1 - i] = static_cast<Elem>(c % q);
                c /= q;
            }
            Matrix gens(f, k - 1, x.ambient());
            std::size_t row = 0;
            std::vector<Elem> coeff(k);
            for (std::size_t i = 0; i < k; ++i) {
                if (i == lead) continue;
                std::fill(coeff.begin(), coeff.end(), 0);
                coeff[i] = 1;
                coeff[lead] = f.neg(func[i]);
                auto v = x.combine(coeff);
                std::copy(v.begin(), v.end(), gens.row(row).begin());
                ++row;
            }
            out.push_back(canonicalize(gens));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_subspace(const Field& field, std::size_t n, std::size_t k,
                       const std::function<void(const Subspace&)>& fn) {
    if (k > n) return;
    const std::uint32_t q = field.q();
    std::vector<std::size_t> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
        // free positions: row i, column c > piv[i], c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = piv[i] + 1; c < n; ++c)
                if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(i, c);
        Matrix m(field, k, n);
        for (std::size_t i = 0; i < k; ++i) m(i, piv[i]) = 1;
        std::vector<std::uint32_t> digits(free.size(), 0);
        while (true) {
            fn(subspace_from_rref(m, piv));
            std::size_t pos = 0;
            while (pos < digits.size()) {
                if (++digits[pos] < q) break;
                digits[pos] = 0;
                ++pos;
            }
            for (std::size_t j = 0; j < digits.size(); ++j)
                m(free[j].first, free[j].second) = static_cast<Elem>(digits[j]);
            if (pos == digits.size()) break;
        }
        // next pivot combination
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> all_subspaces(const Field& field, std::size_t n, std::size_t k) {
    std::vector<Subspace> out;
    for_each_subspace(field, n, k, [&out](const Subspace& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> superspaces_in(const Subspace& u, const Subspace& y, std::size_t d) {
    require_same_space(u, y);
    if (!y.contains(u)) throw LinalgError("U is not contained in Y");
    if (d < u.dim() || d > y.dim()) throw LinalgError("target dimension out of range");
    const Field& f = u.field();
    // Complete U to a basis of Y using rows of Y's canonical basis.
    std::vector<std::vector<Elem>> complement;
    Subspace acc = u;
    for (std::size_t i = 0; i < y.dim() && acc.dim() < y.dim(); ++i) {
        if (acc.contains(y.basis().row(i))) continue;
        complement.emplace_back(y.basis().row(i).begin(), y.basis().row(i).end());
        Matrix one(f, 1, y.ambient(), complement.back());
        acc = sum(acc, canonicalize(one));
    }
    const std::size_t r = complement.size();
    std::vector<Subspace> out;
    for_each_subspace(f, r, d - u.dim(), [&](const Subspace& s) {
        Matrix gens(f, u.dim() + s.dim(), u.ambient());
        for (std::size_t i = 0; i < u.dim(); ++i)
            std::copy(u.basis().row(i).begin(), u.basis().row(i).end(), gens.row(i).begin());
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto dst = gens.row(u.dim() + i);
            for (std::size_t j = 0; j < r; ++j) {
                const Elem c = s.basis()(i, j);
                if (c == 0) continue;
                for (std::size_t col = 0; col < dst.size(); ++col)
                    dst[col] = f.add(dst[col], f.mul(c, complement[j][col]));
            }
        }
        out.push_back(canonicalize(gens));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---- text format ------------------------------------------------------------

std::string to_text(const Matrix& m) {
    std::ostringstream os;
    const Field& f = m.field();
    os << m.cols() << ' ' << m.rows() << ' ' << f.q() << ' ' << f.p() << ' ' << f.m() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_text(const Subspace& s) { return to_text(s.basis()); }

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

Matrix parse_one(std::istream& in, const std::string& header) {
    std::istringstream hs(header);
    long long n = -1, k = -1, q = -1, p = -1, m = -1;
    if (!(hs >> n >> k >> q >> p >> m)) throw LinalgError("malformed matrix header: expected \"n k q p m\"");
    std::string extra;
    if (hs >> extra) throw LinalgError("trailing tokens in matrix header");
    if (n < 0 || k < 0 || p < 2 || m < 1) throw LinalgError("invalid matrix header values");
    const Field& f = Field::get(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    if (static_cast<long long>(f.q()) != q) throw LinalgError("header q does not equal p^m");
    std::vector<std::vector<std::uint32_t>> rows;
    std::string line;
    for (long long r = 0; r < k; ++r) {
        if (!next_content_line(in, line)) throw LinalgError("matrix text ended early");
        std::istringstream ls(line);
        std::vector<std::uint32_t> row;
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= q) throw LinalgError("matrix entry outside [0, q)");
            row.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof()) throw LinalgError("non-numeric matrix entry");
        if (static_cast<long long>(row.size()) != n) throw LinalgError("matrix row has wrong length");
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(f, rows, static_cast<std::size_t>(n));
}

} // namespace

Matrix parse_matrix(std::istream& in) {
    std::string header;
    if (!next_content_line(in, header)) throw LinalgError("empty matrix text");
    return parse_one(in, header);
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::vector<Matrix> parse_matrices(std::istream& in) {
    std::vector<Matrix> out;
    std::string header;
    while (next_content_line(in, header)) out.push_back(parse_one(in, header));
    return out;
}

} // namespace projcode
