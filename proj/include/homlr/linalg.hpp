#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "homlr/rational.hpp"

namespace homlr {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& a);
bool is_zero(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);
    static Matrix from_cols(const std::vector<Vec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec apply(const Vec& v) const; // matrix * column vector
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

// Sparse 3-index structure-constant array; at most one entry per (i,j,k).
class Tensor3 {
public:
    Tensor3() : d1_(0), d2_(0), d3_(0) {}
    Tensor3(int d1, int d2, int d3) : d1_(d1), d2_(d2), d3_(d3) {}

    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    int dim3() const { return d3_; }

    void set(int i, int j, int k, const Rational& v);
    void add(int i, int j, int k, const Rational& v);
    Rational get(int i, int j, int k) const;

    // Bilinear evaluation: result_k = sum_{i,j} u_i v_j t[i][j][k].
    Vec eval(const Vec& u, const Vec& v) const;

    // Matrix of the partial map v -> t(e_i, v) (dim3 x dim2).
    Matrix slice1(int i) const;

    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    const std::map<std::tuple<int, int, int>, Rational>& entries() const { return e_; }

private:
    int d1_, d2_, d3_;
    std::map<std::tuple<int, int, int>, Rational> e_;
};

// --- exact elimination ------------------------------------------------------
//
// Pivot choice is the first nonzero entry in row-major order, so all results
// are deterministic. Matrices at or above kSparseThreshold columns go through
// a map-based sparse elimination; the dense path covers everything this
// library produces in practice. HOMLR_MAX_ELIM_DIM caps max(rows, cols).

constexpr int kSparseThreshold = 512;

int rank(const Matrix& m);

// Basis of { v : m v = 0 }, size cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

// rank(big) - rank(sub); requires span(sub) subset of span(big),
// verified by rank(big) == rank(big ++ sub).
int quotient_dim(const std::vector<Vec>& big, const std::vector<Vec>& sub);

int rank_of_vectors(const std::vector<Vec>& vecs, int dim);

// Particular solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

// m^k for k >= 0 by repeated multiplication; negative k requires invertibility.
Matrix matrix_power(const Matrix& m, int k);

// span(sub) subset of span(big)?
bool subspace_contained(const std::vector<Vec>& sub, const std::vector<Vec>& big, int dim);

} // namespace homlr
