#include "homlr/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace homlr {

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Rational& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec zero_vec(int n) { return Vec(size_t(n)); }

Vec unit_vec(int n, int i) {
    Vec v(size_t(n), Rational(0));
    v[i] = Rational(1);
    return v;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(int(rows.size()), cols);
    for (int r = 0; r < int(rows.size()); ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    return m;
}

Vec Matrix::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
    Matrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
    Matrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw DimensionMismatch("matrix apply shape");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? Rational(1) : Rational(0))) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

void Tensor3::set(int i, int j, int k, const Rational& v) {
    if (i < 0 || i >= d1_ || j < 0 || j >= d2_ || k < 0 || k >= d3_)
        throw DimensionMismatch("tensor index out of range");
    if (v.is_zero())
        e_.erase({i, j, k});
    else
        e_[{i, j, k}] = v;
}

void Tensor3::add(int i, int j, int k, const Rational& v) { set(i, j, k, get(i, j, k) + v); }

Rational Tensor3::get(int i, int j, int k) const {
    auto it = e_.find({i, j, k});
    return it == e_.end() ? Rational(0) : it->second;
}

Vec Tensor3::eval(const Vec& u, const Vec& v) const {
    if (int(u.size()) != d1_ || int(v.size()) != d2_) throw DimensionMismatch("tensor eval shape");
    Vec r(d3_);
    for (const auto& [idx, val] : e_) {
        auto [i, j, k] = idx;
        if (u[i].is_zero() || v[j].is_zero()) continue;
        r[k] += u[i] * v[j] * val;
    }
    return r;
}

Matrix Tensor3::slice1(int i) const {
    Matrix m(d3_, d2_);
    for (const auto& [idx, val] : e_) {
        auto [a, j, k] = idx;
        if (a == i) m.at(k, j) = val;
    }
    return m;
}

bool Tensor3::operator==(const Tensor3& o) const {
    return d1_ == o.d1_ && d2_ == o.d2_ && d3_ == o.d3_ && e_ == o.e_;
}

namespace {

int elimination_cap() {
    static int cap = [] {
        const char* s = std::getenv("HOMLR_MAX_ELIM_DIM");
        if (!s) return 100000;
        int v = std::atoi(s);
        return v > 0 ? v : 100000;
    }();
    return cap;
}

void check_cap(int rows, int cols) {
    if (std::max(rows, cols) > elimination_cap())
        throw EliminationCapExceeded("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                     " exceeds HOMLR_MAX_ELIM_DIM");
}

struct Echelon {
    std::vector<Vec> rows;   // reduced rows, one per pivot
    std::vector<int> pivots; // pivot column per row, strictly increasing
};

// Dense reduced row echelon form; pivot = first nonzero in row-major order.
Echelon rref_dense(const Matrix& m) {
    check_cap(m.rows(), m.cols());
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    Echelon ech;
    int pr = 0;
    for (int c = 0; c < m.cols() && pr < int(rows.size()); ++c) {
        int piv = -1;
        for (int r = pr; r < int(rows.size()); ++r)
            if (!rows[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[pr], rows[piv]);
        Rational inv = Rational(1) / rows[pr][c];
        for (int j = c; j < m.cols(); ++j) rows[pr][j] *= inv;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == pr || rows[r][c].is_zero()) continue;
            Rational f = rows[r][c];
            for (int j = c; j < m.cols(); ++j) rows[r][j] -= f * rows[pr][j];
        }
        ech.pivots.push_back(c);
        ++pr;
    }
    ech.rows.assign(rows.begin(), rows.begin() + pr);
    return ech;
}

using SparseRow = std::map<int, Rational>;

// Map-based elimination for wide systems (cochain constraint matrices can
// reach C(dim L, n) x dim M columns).
Echelon rref_sparse(const Matrix& m) {
    check_cap(m.rows(), m.cols());
    std::vector<SparseRow> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) rows[r][c] = m.at(r, c);

    auto axpy = [](SparseRow& dst, const Rational& f, const SparseRow& src) {
        for (const auto& [c, v] : src) {
            auto it = dst.find(c);
            if (it == dst.end()) {
                dst[c] = f * v;
            } else {
                it->second += f * v;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    };

    Echelon ech;
    size_t pr = 0;
    for (int c = 0; c < m.cols() && pr < rows.size(); ++c) {
        int piv = -1;
        for (size_t r = pr; r < rows.size(); ++r) {
            auto it = rows[r].begin();
            if (it != rows[r].end() && it->first == c) { piv = int(r); break; }
        }
        if (piv < 0) continue;
        std::swap(rows[pr], rows[piv]);
        Rational inv = Rational(1) / rows[pr].at(c);
        for (auto& [cc, v] : rows[pr]) v *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pr) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            axpy(rows[r], -it->second, rows[pr]);
        }
        ech.pivots.push_back(c);
        ++pr;
    }
    for (size_t r = 0; r < pr; ++r) {
        Vec row(m.cols());
        for (const auto& [c, v] : rows[r]) row[c] = v;
        ech.rows.push_back(std::move(row));
    }
    return ech;
}

Echelon rref(const Matrix& m) {
    return m.cols() >= kSparseThreshold ? rref_sparse(m) : rref_dense(m);
}

} // namespace

int rank(const Matrix& m) { return int(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Echelon ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : ech.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols());
        v[c] = Rational(1);
        for (size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of_vectors(const std::vector<Vec>& vecs, int dim) {
    if (vecs.empty()) return 0;
    return rank(Matrix::from_rows(vecs, dim));
}

int quotient_dim(const std::vector<Vec>& big, const std::vector<Vec>& sub) {
    int dim = big.empty() ? (sub.empty() ? 0 : int(sub[0].size())) : int(big[0].size());
    int rb = rank_of_vectors(big, dim);
    std::vector<Vec> all(big);
    all.insert(all.end(), sub.begin(), sub.end());
    if (rank_of_vectors(all, dim) != rb)
        throw SubspaceNotContained("quotient_dim: sub is not contained in big");
    return rb - rank_of_vectors(sub, dim);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (int(b.size()) != m.rows()) throw DimensionMismatch("solve shape");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    Echelon ech = rref(aug);
    Vec x(m.cols());
    for (size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == m.cols()) return std::nullopt; // pivot in the rhs column
        x[ech.pivots[r]] = ech.rows[r][m.cols()];
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    Echelon ech = rref(aug);
    if (int(ech.pivots.size()) < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = ech.rows[r][n + c];
    return inv;
}

Matrix matrix_power(const Matrix& m, int k) {
    if (m.rows() != m.cols()) throw DimensionMismatch("matrix_power needs a square matrix");
    if (k < 0) {
        auto inv = inverse(m);
        if (!inv) throw AlphaNotInvertible("negative power of a singular matrix");
        return matrix_power(*inv, -k);
    }
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

bool subspace_contained(const std::vector<Vec>& sub, const std::vector<Vec>& big, int dim) {
    std::vector<Vec> all(big);
    all.insert(all.end(), sub.begin(), sub.end());
    return rank_of_vectors(all, dim) == rank_of_vectors(big, dim);
}

} // namespace homlr
