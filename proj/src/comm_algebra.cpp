#include "homlr/comm_algebra.hpp"

#include "homlr/errors.hpp"

namespace homlr {

Matrix CommAlgebra::mult_by(const Vec& a) const {
    Matrix m(dim, dim);
    for (int c = 0; c < dim; ++c) {
        Vec v = mul(a, unit_vec(dim, c));
        for (int r = 0; r < dim; ++r) m.at(r, c) = v[r];
    }
    return m;
}

Report check_comm_algebra(const CommAlgebra& a) {
    if (a.mult.dim1() != a.dim || a.mult.dim2() != a.dim || a.mult.dim3() != a.dim ||
        int(a.unit.size()) != a.dim || a.phi.rows() != a.dim || a.phi.cols() != a.dim)
        throw DimensionMismatch("commutative algebra data sizes");

    Report rep;

    bool ok = true;
    std::string wit;
    for (int i = 0; i < a.dim && ok; ++i)
        for (int j = 0; j < i && ok; ++j) {
            Vec ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j);
            if (!is_zero(a.mul(ei, ej) - a.mul(ej, ei))) {
                ok = false;
                wit = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    rep.add("commutative", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < a.dim && ok; ++i)
        for (int j = 0; j < a.dim && ok; ++j)
            for (int k = 0; k < a.dim && ok; ++k) {
                Vec ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j), ek = unit_vec(a.dim, k);
                if (!is_zero(a.mul(a.mul(ei, ej), ek) - a.mul(ei, a.mul(ej, ek)))) {
                    ok = false;
                    wit = "basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")";
                }
            }
    rep.add("associative", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < a.dim && ok; ++i) {
        Vec ei = unit_vec(a.dim, i);
        if (!is_zero(a.mul(a.unit, ei) - ei) || !is_zero(a.mul(ei, a.unit) - ei)) {
            ok = false;
            wit = "basis element " + std::to_string(i);
        }
    }
    rep.add("unital", ok, wit);

    rep.add("phi_fixes_unit", is_zero(a.ph(a.unit) - a.unit));

    ok = true;
    wit.clear();
    for (int i = 0; i < a.dim && ok; ++i)
        for (int j = 0; j < a.dim && ok; ++j) {
            Vec ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j);
            if (!is_zero(a.ph(a.mul(ei, ej)) - a.mul(a.ph(ei), a.ph(ej)))) {
                ok = false;
                wit = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    rep.add("phi_multiplicative", ok, wit);

    return rep;
}

Report check_phi_derivation(const CommAlgebra& a, const Matrix& d) {
    if (d.rows() != a.dim || d.cols() != a.dim)
        throw DimensionMismatch("phi-derivation matrix must be dim A x dim A");

    Report rep;
    bool ok = true;
    std::string wit;
    for (int i = 0; i < a.dim && ok; ++i)
        for (int j = 0; j <= i && ok; ++j) {
            Vec ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j);
            Vec lhs = d.apply(a.mul(ei, ej));
            Vec rhs = a.mul(a.ph(ei), d.apply(ej)) + a.mul(a.ph(ej), d.apply(ei));
            if (!is_zero(lhs - rhs)) {
                ok = false;
                wit = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    rep.add("twisted_leibniz", ok, wit);
    rep.add("kills_unit", is_zero(d.apply(a.unit)));
    return rep;
}

std::vector<PhiDerivation> phi_derivations_basis(const CommAlgebra& a) {
    const int n = a.dim;
    // Unknowns: the n^2 entries D_{rc}, flattened row-major.
    // One block of n equations per basis pair (i,j):
    //   D(e_i e_j) - phi(e_i) D(e_j) - phi(e_j) D(e_i) = 0.
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Vec prod = a.mul(unit_vec(n, i), unit_vec(n, j));
            Matrix mi = a.mult_by(a.ph(unit_vec(n, i)));
            Matrix mj = a.mult_by(a.ph(unit_vec(n, j)));
            for (int out = 0; out < n; ++out) {
                Vec row(size_t(n) * n);
                for (int c = 0; c < n; ++c)
                    if (!prod[c].is_zero())
                        for (int r = 0; r < n; ++r)
                            if (r == out) row[size_t(r) * n + c] += prod[c];
                // phi(e_i) D(e_j): out-coordinate = sum_r mi(out, r) D_{r j}
                for (int r = 0; r < n; ++r) {
                    row[size_t(r) * n + j] -= mi.at(out, r);
                    row[size_t(r) * n + i] -= mj.at(out, r);
                }
                rows.push_back(std::move(row));
            }
        }
    Matrix system = Matrix::from_rows(rows, n * n);
    std::vector<PhiDerivation> basis;
    for (const Vec& v : kernel_basis(system)) {
        Matrix d(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) d.at(r, c) = v[size_t(r) * n + c];
        basis.push_back({a, d});
    }
    return basis;
}

} // namespace homlr
