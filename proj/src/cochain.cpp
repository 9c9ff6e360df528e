#include "homlr/cochain.hpp"

#include <algorithm>
#include <map>

#include "homlr/errors.hpp"

namespace homlr {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::vector<int>> increasing_tuples(int r, int n) {
    std::vector<std::vector<int>> out;
    if (n < 0 || n > r) return out;
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int i = n - 1;
        while (i >= 0 && t[i] == r - n + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < n; ++j) t[j] = t[j - 1] + 1;
    }
    if (n == 0) out = {{}};
    return out;
}

namespace {

long tuple_rank(int r, const std::vector<int>& t) {
    // Lexicographic rank of a strictly increasing tuple.
    long rank = 0;
    int prev = -1;
    int n = int(t.size());
    for (int pos = 0; pos < n; ++pos) {
        for (int v = prev + 1; v < t[pos]; ++v) rank += binomial(r - 1 - v, n - 1 - pos);
        prev = t[pos];
    }
    return rank;
}

// Sort an index tuple, returning the permutation sign, or 0 on repeats.
int sort_with_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

} // namespace

Vec cochain_value(const Cochain& f, int rank_l, int dim_m, const std::vector<int>& idx) {
    std::vector<int> s(idx);
    int sign = sort_with_sign(s);
    if (sign == 0) return zero_vec(dim_m);
    long t = tuple_rank(rank_l, s);
    Vec v(dim_m);
    for (int c = 0; c < dim_m; ++c) v[c] = Rational(sign) * f.flat[size_t(t) * dim_m + c];
    return v;
}

Vec cochain_eval(const Cochain& f, int rank_l, int dim_m, const std::vector<Vec>& args) {
    const int n = int(args.size());
    Vec out(dim_m);
    if (rank_l == 0 && n > 0) return out;
    std::vector<int> idx(n, 0);
    while (true) {
        Rational coeff(1);
        for (int p = 0; p < n && !coeff.is_zero(); ++p) coeff *= args[p][idx[p]];
        if (!coeff.is_zero()) {
            Vec v = cochain_value(f, rank_l, dim_m, idx);
            for (int c = 0; c < dim_m; ++c) out[c] += coeff * v[c];
        }
        int p = n - 1;
        while (p >= 0 && idx[p] == rank_l - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
    return out;
}

namespace {

// Linear functional of the flat unknowns: value of f on a raw index tuple.
void accumulate_value_row(std::vector<Vec>& rows, int rank_l, int dim_m,
                          const std::vector<int>& idx, const Rational& coeff, size_t row0) {
    std::vector<int> s(idx);
    int sign = sort_with_sign(s);
    if (sign == 0) return;
    long t = tuple_rank(rank_l, s);
    for (int c = 0; c < dim_m; ++c) rows[row0 + c][size_t(t) * dim_m + c] += Rational(sign) * coeff;
}

// Row block for "f evaluated multilinearly on vector arguments".
void accumulate_eval_rows(std::vector<Vec>& rows, int rank_l, int dim_m,
                          const std::vector<Vec>& args, const Rational& scale, size_t row0) {
    const int n = int(args.size());
    std::vector<int> idx(n, 0);
    if (rank_l == 0) return;
    while (true) {
        Rational coeff = scale;
        for (int p = 0; p < n && !coeff.is_zero(); ++p) coeff *= args[p][idx[p]];
        if (!coeff.is_zero()) accumulate_value_row(rows, rank_l, dim_m, idx, coeff, row0);
        int p = n - 1;
        while (p >= 0 && idx[p] == rank_l - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
}

// Rows of the two membership conditions applied to an unknown cochain.
// Condition (1) runs over strictly increasing tuples (both sides alternate),
// condition (2) over tuples increasing outside the twisted slot.
std::vector<Vec> membership_rows(const HomLieRinehart& l, const HLRModule& m, int n) {
    const int r = l.rank, dm = m.dim, na = l.algebra.dim;
    const long tuples = binomial(r, n);
    const size_t width = size_t(tuples) * dm;
    std::vector<Vec> rows;

    Matrix phi_pow = matrix_power(l.algebra.phi, n - 1);

    // (1) f(alpha x_1, ..., alpha x_n) - beta f(x_1, ..., x_n) = 0
    for (const auto& t : increasing_tuples(r, n)) {
        size_t row0 = rows.size();
        for (int c = 0; c < dm; ++c) rows.emplace_back(width);
        std::vector<Vec> args;
        for (int i : t) args.push_back(l.al(unit_vec(r, i)));
        accumulate_eval_rows(rows, r, dm, args, Rational(1), row0);
        long tr = tuple_rank(r, t);
        for (int c = 0; c < dm; ++c)
            for (int c2 = 0; c2 < dm; ++c2)
                rows[row0 + c][size_t(tr) * dm + c2] -= m.beta.at(c, c2);
    }

    // (2) f(x_1, ..., a.x_i, ..., x_n) - phi^{n-1}(a) f(x_1, ..., x_n) = 0
    for (int pos = 0; pos < n; ++pos) {
        for (const auto& rest : increasing_tuples(r, n - 1)) {
            for (int xi = 0; xi < r; ++xi) {
                std::vector<int> t;
                t.reserve(n);
                t.insert(t.end(), rest.begin(), rest.begin() + pos);
                t.push_back(xi);
                t.insert(t.end(), rest.begin() + pos, rest.end());
                for (int a = 0; a < na; ++a) {
                    Vec ea = unit_vec(na, a);
                    size_t row0 = rows.size();
                    for (int c = 0; c < dm; ++c) rows.emplace_back(width);
                    std::vector<Vec> args;
                    for (int p = 0; p < n; ++p)
                        args.push_back(p == pos ? l.act(ea, unit_vec(r, t[p]))
                                                : unit_vec(r, t[p]));
                    accumulate_eval_rows(rows, r, dm, args, Rational(1), row0);
                    // - (phi^{n-1}(a)) . f(t): the module action of a scalar
                    //   from A on the unknown value vector.
                    Vec pa = phi_pow.apply(ea);
                    Matrix act(dm, dm);
                    for (int u = 0; u < na; ++u)
                        if (!pa[u].is_zero())
                            for (int r2 = 0; r2 < dm; ++r2)
                                for (int c2 = 0; c2 < dm; ++c2)
                                    act.at(r2, c2) += pa[u] * m.a_action.get(u, c2, r2);
                    std::vector<int> s(t);
                    int sign = sort_with_sign(s);
                    if (sign != 0) {
                        long tr = tuple_rank(r, s);
                        for (int c = 0; c < dm; ++c)
                            for (int c2 = 0; c2 < dm; ++c2)
                                rows[row0 + c][size_t(tr) * dm + c2] -=
                                    Rational(sign) * act.at(c, c2);
                    }
                }
            }
        }
    }
    return rows;
}

} // namespace

bool is_cochain(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                std::string* witness) {
    const long amb = binomial(l.rank, f.degree) * m.dim;
    if (long(f.flat.size()) != amb) {
        if (witness) *witness = "flat size mismatch";
        return false;
    }
    for (const Vec& row : membership_rows(l, m, f.degree)) {
        Rational acc(0);
        for (size_t i = 0; i < row.size(); ++i) acc += row[i] * f.flat[i];
        if (!acc.is_zero()) {
            if (witness) *witness = "membership condition violated";
            return false;
        }
    }
    return true;
}

CochainSpace cochain_space(const HomLieRinehart& l, const HLRModule& m, int n) {
    if (n < 1) throw InvalidDegree("the complex starts at n = 1");
    CochainSpace cs;
    cs.degree = n;
    cs.ambient_dim = binomial(l.rank, n) * m.dim;
    if (cs.ambient_dim == 0) return cs;
    std::vector<Vec> rows = membership_rows(l, m, n);
    Matrix sys = rows.empty() ? Matrix(0, int(cs.ambient_dim))
                              : Matrix::from_rows(rows, int(cs.ambient_dim));
    for (Vec& v : kernel_basis(sys)) cs.basis.push_back({n, std::move(v)});
    return cs;
}

Cochain coboundary_apply(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                         SignConvention conv) {
    const int n = f.degree, r = l.rank, dm = m.dim;
    Matrix alpha_pow = matrix_power(l.alpha, n - 1);
    Cochain out;
    out.degree = n + 1;
    out.flat = zero_vec(int(binomial(r, n + 1) * dm));
    long t_idx = 0;
    for (const auto& t : increasing_tuples(r, n + 1)) {
        Vec val(dm);
        // sum_i (-1)^{i+1} { alpha^{n-1}(x_i), f(..., x_i hat, ...) }
        for (int i = 0; i < n + 1; ++i) {
            std::vector<int> rest;
            for (int p = 0; p < n + 1; ++p)
                if (p != i) rest.push_back(t[p]);
            Vec fv = cochain_value(f, r, dm, rest);
            Vec term = m.th(alpha_pow.apply(unit_vec(r, t[i])), fv);
            Rational s((i % 2 == 0) ? 1 : -1); // (-1)^{i+1} with 1-based i
            for (int c = 0; c < dm; ++c) val[c] += s * term[c];
        }
        // sum_{i<j} sign(i,j) f([x_i, x_j], alpha(x_1), ..hat i..hat j.., alpha(x_{n+1}))
        for (int i = 0; i < n + 1; ++i)
            for (int j = i + 1; j < n + 1; ++j) {
                std::vector<Vec> args;
                args.push_back(l.br(unit_vec(r, t[i]), unit_vec(r, t[j])));
                for (int p = 0; p < n + 1; ++p)
                    if (p != i && p != j) args.push_back(l.al(unit_vec(r, t[p])));
                Vec term = cochain_eval(f, r, dm, args);
                Rational s(1);
                if (conv == SignConvention::signed_convention)
                    s = Rational(((i + j) % 2 == 0) ? 1 : -1); // (-1)^{i+j} with 1-based indices
                for (int c = 0; c < dm; ++c) val[c] += s * term[c];
            }
        for (int c = 0; c < dm; ++c) out.flat[size_t(t_idx) * dm + c] = val[c];
        ++t_idx;
    }
    return out;
}

Matrix coboundary_matrix(const HomLieRinehart& l, const HLRModule& m, int n, SignConvention conv) {
    if (n < 1) throw InvalidDegree("the complex starts at n = 1");
    CochainSpace cn = cochain_space(l, m, n);
    CochainSpace cn1 = cochain_space(l, m, n + 1);
    Matrix out(int(cn1.basis.size()), int(cn.basis.size()));
    if (cn.basis.empty()) return out;
    std::vector<Vec> target_cols;
    for (const auto& b : cn1.basis) target_cols.push_back(b.flat);
    Matrix target = cn1.basis.empty() ? Matrix(int(cn1.ambient_dim), 0)
                                      : Matrix::from_cols(target_cols, int(cn1.ambient_dim));
    for (size_t k = 0; k < cn.basis.size(); ++k) {
        Cochain img = coboundary_apply(l, m, cn.basis[k], conv);
        std::string wit;
        if (!is_cochain(l, m, img, &wit))
            throw ImageNotInCochainSpace("delta image escapes C^{n+1}: " + wit);
        if (cn1.basis.empty()) {
            if (!is_zero(img.flat))
                throw ImageNotInCochainSpace("nonzero image in a zero cochain space");
            continue;
        }
        auto coords = solve(target, img.flat);
        if (!coords) throw ImageNotInCochainSpace("image not expressible in the computed basis");
        for (int row = 0; row < out.rows(); ++row) out.at(row, int(k)) = (*coords)[row];
    }
    return out;
}

int cohomology_dim(const HomLieRinehart& l, const HLRModule& m, int n, SignConvention conv) {
    if (n < 1) throw InvalidDegree("the complex starts at n = 1");
    Matrix dn = coboundary_matrix(l, m, n, conv);
    std::vector<Vec> cocycles = kernel_basis(dn);
    if (n == 1) return int(cocycles.size());
    Matrix dprev = coboundary_matrix(l, m, n - 1, conv);
    std::vector<Vec> boundaries;
    for (int c = 0; c < dprev.cols(); ++c) boundaries.push_back(dprev.col(c));
    // dn has dim C^n columns; kernel vectors live there too.
    return quotient_dim(cocycles, boundaries);
}

bool is_cocycle(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                SignConvention conv) {
    std::string wit;
    if (!is_cochain(l, m, f, &wit)) throw NotACochain(wit);
    return is_zero(coboundary_apply(l, m, f, conv).flat);
}

std::optional<Cochain> is_coboundary(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                                     SignConvention conv) {
    std::string wit;
    if (!is_cochain(l, m, f, &wit)) throw NotACochain(wit);
    if (f.degree == 1) {
        if (is_zero(f.flat)) return Cochain{0, {}}; // no C^0: only 0 is a boundary
        return std::nullopt;
    }
    const int n = f.degree;
    CochainSpace cn = cochain_space(l, m, n);
    CochainSpace cprev = cochain_space(l, m, n - 1);
    std::vector<Vec> cols;
    for (const auto& b : cn.basis) cols.push_back(b.flat);
    Matrix basis_mat = cn.basis.empty() ? Matrix(int(cn.ambient_dim), 0)
                                        : Matrix::from_cols(cols, int(cn.ambient_dim));
    auto f_coords = solve(basis_mat, f.flat);
    if (!f_coords) throw NotACochain("cochain not in the computed basis span");
    Matrix delta = coboundary_matrix(l, m, n - 1, conv);
    auto g_coords = solve(delta, *f_coords);
    if (!g_coords) return std::nullopt;
    Cochain g;
    g.degree = n - 1;
    g.flat = zero_vec(int(cprev.ambient_dim));
    for (size_t k = 0; k < cprev.basis.size(); ++k)
        if (!(*g_coords)[k].is_zero()) g.flat = g.flat + (*g_coords)[k] * cprev.basis[k].flat;
    return g;
}

} // namespace homlr
