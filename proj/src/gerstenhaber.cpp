#include "homlr/gerstenhaber.hpp"

#include <algorithm>

#include "homlr/errors.hpp"

namespace homlr {

Vec GradedAlgebra::wedge_mul(int p, int q, const Vec& u, const Vec& v) const {
    return wedge.at({p, q}).eval(u, v);
}

Vec GradedAlgebra::bracket_mul(int p, int q, const Vec& u, const Vec& v) const {
    if (p + q == 0) return {}; // [A_0, A_0] lands in degree -1 = 0
    return bracket.at({p, q}).eval(u, v);
}

namespace {

std::string idx2(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string idx3(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Sign of sorting the concatenation of two disjoint increasing runs; 0 on overlap.
int merge_sign(const std::vector<int>& s, const std::vector<int>& t, std::vector<int>* merged) {
    std::vector<int> all(s);
    all.insert(all.end(), t.begin(), t.end());
    int sign = 1;
    for (size_t i = 1; i < all.size(); ++i)
        for (size_t j = i; j > 0 && all[j] < all[j - 1]; --j) {
            std::swap(all[j], all[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1]) return 0;
    if (merged) *merged = all;
    return sign;
}

// Builder for wedge^*_A L with a declared free A-basis.
struct GBuilder {
    const HomLieRinehart& l;
    const std::vector<Vec>& xs; // A-basis of L
    int top;
    SignConvention conv;
    int na, r;
    Matrix freeness;     // columns (a, i) -> e_a . X_i
    Matrix freeness_inv; // inverse, for A-coefficient expansion
    std::vector<std::vector<std::vector<int>>> subsets; // per degree
    std::vector<std::map<std::vector<int>, int>> subset_rank;
    GradedAlgebra g;

    GBuilder(const HomLieRinehart& l_, const std::vector<Vec>& xs_, int top_, SignConvention c)
        : l(l_), xs(xs_), top(top_), conv(c), na(l_.algebra.dim), r(int(xs_.size())) {
        if (l.rank != na * r)
            throw NotFreeModule("rank L = " + std::to_string(l.rank) + " != dim A * |basis| = " +
                                std::to_string(na * r));
        freeness = Matrix(l.rank, na * r);
        for (int a = 0; a < na; ++a)
            for (int i = 0; i < r; ++i) {
                Vec col = l.act(unit_vec(na, a), xs[i]);
                for (int k = 0; k < l.rank; ++k) freeness.at(k, a * r + i) = col[k];
            }
        auto inv = inverse(freeness);
        if (!inv) throw NotFreeModule("the declared A-basis does not generate L freely");
        freeness_inv = *inv;

        g.top_degree = top;
        g.dims.resize(top + 1);
        subsets.resize(top + 1);
        subset_rank.resize(top + 1);
        for (int k = 0; k <= top; ++k) {
            subsets[k] = increasing_tuples(r, k);
            for (size_t s = 0; s < subsets[k].size(); ++s) subset_rank[k][subsets[k][s]] = int(s);
            g.dims[k] = na * int(subsets[k].size());
        }
        g.alpha.assign(top + 1, Matrix());
    }

    int flat(int k, int a, int srank) const { return a * int(subsets[k].size()) + srank; }

    // A-coefficients of an L-vector on the declared basis: c_i in A with
    // v = sum_i c_i . X_i.
    std::vector<Vec> acoeffs(const Vec& v) const {
        Vec c = freeness_inv.apply(v);
        std::vector<Vec> out(r, zero_vec(na));
        for (int a = 0; a < na; ++a)
            for (int i = 0; i < r; ++i) out[i][a] = c[a * r + i];
        return out;
    }

    Vec elem(int k, const Vec& acoeff, const std::vector<int>& subset, int sign) const {
        Vec v = zero_vec(g.dims[k]);
        if (sign == 0) return v;
        int sr = subset_rank[k].at(subset);
        for (int a = 0; a < na; ++a) v[flat(k, a, sr)] = Rational(sign) * acoeff[a];
        return v;
    }

    void build_wedges() {
        for (int p = 0; p <= top; ++p)
            for (int q = 0; p + q <= top; ++q) {
                Tensor3 t(g.dims[p], g.dims[q], g.dims[p + q]);
                for (int a = 0; a < na; ++a)
                    for (size_t si = 0; si < subsets[p].size(); ++si)
                        for (int b = 0; b < na; ++b)
                            for (size_t ti = 0; ti < subsets[q].size(); ++ti) {
                                std::vector<int> merged;
                                int sign = merge_sign(subsets[p][si], subsets[q][ti], &merged);
                                if (sign == 0) continue;
                                Vec ab = l.algebra.mul(unit_vec(na, a), unit_vec(na, b));
                                int mr = subset_rank[p + q].at(merged);
                                for (int u = 0; u < na; ++u)
                                    if (!ab[u].is_zero())
                                        t.add(flat(p, a, int(si)), flat(q, b, int(ti)),
                                              flat(p + q, u, mr), Rational(sign) * ab[u]);
                            }
                g.wedge[{p, q}] = std::move(t);
            }
    }

    // alpha_G(a . X_S) = phi(a) . (alpha X_{s_1} ^ ... ^ alpha X_{s_k}).
    void build_alpha() {
        for (int k = 0; k <= top; ++k) {
            Matrix m(g.dims[k], g.dims[k]);
            for (int a = 0; a < na; ++a)
                for (size_t si = 0; si < subsets[k].size(); ++si) {
                    Vec img = pure_alpha_wedge(subsets[k][si]);
                    img = g.wedge_mul(0, k, l.algebra.ph(unit_vec(na, a)), img);
                    for (int row = 0; row < g.dims[k]; ++row)
                        m.at(row, flat(k, a, int(si))) = img[row];
                }
            g.alpha[k] = std::move(m);
        }
    }

    // alpha(X_{s_1}) ^ ... ^ alpha(X_{s_k}) with unit coefficient.
    Vec pure_alpha_wedge(const std::vector<int>& s) const {
        Vec acc = elem(0, l.algebra.unit, {}, 1);
        int deg = 0;
        for (int idx : s) {
            Vec w = degree_one(l.al(xs[idx]));
            acc = g.wedge.at({deg, 1}).eval(acc, w);
            ++deg;
        }
        return acc;
    }

    Vec degree_one(const Vec& lv) const {
        std::vector<Vec> cs = acoeffs(lv);
        Vec v = zero_vec(g.dims[1]);
        for (int i = 0; i < r; ++i)
            for (int a = 0; a < na; ++a) v[flat(1, a, i)] += cs[i][a];
        return v;
    }

    Vec one_wedge(int k, const std::vector<int>& s) const { return elem(k, l.algebra.unit, s, 1); }

    // [X_S, b] = sum_i sgn_i rho(X_{s_i})(b) . alpha_G(X_{S \ s_i}),
    // sgn_i = (-1)^{|S| + i} in the signed convention (1-based i).
    Vec wedge_zero_bracket(const std::vector<int>& s, const Vec& b) const {
        int p = int(s.size());
        Vec out = zero_vec(g.dims[p - 1]);
        for (int i = 0; i < p; ++i) {
            Vec rho_b = l.rho(xs[s[i]]).apply(b);
            std::vector<int> rest;
            for (int j = 0; j < p; ++j)
                if (j != i) rest.push_back(s[j]);
            Vec aw = g.alpha_apply(p - 1, one_wedge(p - 1, rest));
            Vec term = g.wedge_mul(0, p - 1, rho_b, aw);
            Rational sgn(1);
            if (conv == SignConvention::signed_convention && (p + i + 1) % 2 == 1) sgn = Rational(-1);
            for (int u = 0; u < g.dims[p - 1]; ++u) out[u] += sgn * term[u];
        }
        return out;
    }

    // [X_S, X_T] = sum_{i,j} sgn_{ij} [X_{s_i}, X_{t_j}] ^ alpha_G(rest),
    // sgn_{ij} = (-1)^{i+j} in the signed convention (1-based).
    Vec wedge_wedge_bracket(const std::vector<int>& s, const std::vector<int>& t) const {
        int p = int(s.size()), q = int(t.size());
        Vec out = zero_vec(g.dims[p + q - 1]);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                Vec br = degree_one(l.br(xs[s[i]], xs[t[j]]));
                std::vector<int> rs, rt;
                for (int u = 0; u < p; ++u)
                    if (u != i) rs.push_back(s[u]);
                for (int u = 0; u < q; ++u)
                    if (u != j) rt.push_back(t[u]);
                std::vector<int> merged;
                int msign = merge_sign(rs, rt, &merged);
                if (msign == 0) continue;
                Vec aw = g.alpha_apply(p + q - 2, one_wedge(p + q - 2, merged));
                Vec term = g.wedge_mul(1, p + q - 2, br, aw);
                Rational sgn(msign);
                if (conv == SignConvention::signed_convention && (i + j) % 2 == 1)
                    sgn = Rational(-1) * sgn;
                for (int u = 0; u < g.dims[p + q - 1]; ++u) out[u] += sgn * term[u];
            }
        return out;
    }

    void build_brackets() {
        for (int p = 0; p <= top; ++p)
            for (int q = 0; q <= top; ++q) {
                if (p + q < 1 || p + q - 1 > top) continue;
                Tensor3 t(g.dims[p], g.dims[q], g.dims[p + q - 1]);
                for (int a = 0; a < na; ++a)
                    for (size_t si = 0; si < subsets[p].size(); ++si)
                        for (int b = 0; b < na; ++b)
                            for (size_t ti = 0; ti < subsets[q].size(); ++ti) {
                                Vec v = basis_bracket(p, q, a, subsets[p][si], b, subsets[q][ti]);
                                for (int u = 0; u < g.dims[p + q - 1]; ++u)
                                    if (!v[u].is_zero())
                                        t.add(flat(p, a, int(si)), flat(q, b, int(ti)), u, v[u]);
                            }
                g.bracket[{p, q}] = std::move(t);
            }
    }

    // [e_a . X_S, e_b . X_T] assembled from the pure-wedge brackets via
    //   [a w, b h] = phi(a)([w, b] ^ alpha_G(h)) + phi(ab) [w, h]
    //               - (-1)^{(q-1)(p-1)} phi(b)([h, a] ^ alpha_G(w)).
    Vec basis_bracket(int p, int q, int a, const std::vector<int>& s, int b,
                      const std::vector<int>& t) const {
        const Vec ea = unit_vec(na, a), eb = unit_vec(na, b);
        if (p == 0 && q == 0) return {};
        if (q == 0) {
            Vec core = wedge_zero_bracket(s, eb);
            return g.wedge_mul(0, p - 1, l.algebra.ph(ea), core);
        }
        if (p == 0) {
            // antisymmetry: [u, v] = -(-1)^{(p-1)(q-1)} [v, u]; with p = 0 the
            // exponent is congruent to q - 1.
            Vec flip = basis_bracket(q, p, b, t, a, s);
            Rational sgn((q - 1) % 2 == 0 ? -1 : 1);
            Vec out = zero_vec(int(flip.size()));
            for (size_t u = 0; u < flip.size(); ++u) out[u] = sgn * flip[u];
            return out;
        }
        Vec out = zero_vec(g.dims[p + q - 1]);
        // phi(a) ([X_S, e_b] ^ alpha_G(X_T))
        {
            Vec core = wedge_zero_bracket(s, eb);
            Vec aw = g.alpha_apply(q, one_wedge(q, t));
            Vec term = g.wedge_mul(p - 1, q, core, aw);
            term = g.wedge_mul(0, p + q - 1, l.algebra.ph(ea), term);
            for (size_t u = 0; u < term.size(); ++u) out[u] += term[u];
        }
        // phi(ab) [X_S, X_T]
        {
            Vec core = wedge_wedge_bracket(s, t);
            Vec term = g.wedge_mul(0, p + q - 1, l.algebra.ph(l.algebra.mul(ea, eb)), core);
            for (size_t u = 0; u < term.size(); ++u) out[u] += term[u];
        }
        // -(-1)^{(q-1)(p-1)} phi(b) ([X_T, e_a] ^ alpha_G(X_S))
        {
            Vec core = wedge_zero_bracket(t, ea);
            Vec aw = g.alpha_apply(p, one_wedge(p, s));
            Vec term = g.wedge_mul(q - 1, p, core, aw);
            term = g.wedge_mul(0, p + q - 1, l.algebra.ph(eb), term);
            Rational sgn(((q - 1) * (p - 1)) % 2 == 0 ? -1 : 1);
            for (size_t u = 0; u < term.size(); ++u) out[u] += sgn * term[u];
        }
        return out;
    }
};

} // namespace

GradedAlgebra functor_G(const HomLieRinehart& l, const std::vector<Vec>& a_basis, int top_degree,
                        SignConvention conv) {
    Report lr_check = check_hom_lr(l);
    if (!lr_check.all_passed())
        throw AxiomFailure("functor_G input fails check_hom_lr: " + lr_check.first_failure());
    if (top_degree < 1) throw InvalidDegree("top_degree must be >= 1");
    GBuilder b(l, a_basis, top_degree, conv);
    b.build_wedges();
    b.build_alpha();
    b.build_brackets();
    return b.g;
}

Report check_hom_gerstenhaber(const GradedAlgebra& g) {
    const int N = g.top_degree;
    Report rep;

    auto basis_loop = [&](int p, auto&& f) {
        for (int i = 0; i < g.dims[p]; ++i) f(unit_vec(g.dims[p], i), i);
    };

    bool ok = true;
    std::string wit;
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; p + q <= N && ok; ++q)
            basis_loop(p, [&](const Vec& u, int i) {
                if (!ok) return;
                basis_loop(q, [&](const Vec& v, int j) {
                    if (!ok) return;
                    Vec lhs = g.wedge_mul(p, q, u, v);
                    Vec rhs = g.wedge_mul(q, p, v, u);
                    Rational sgn((p * q) % 2 == 0 ? 1 : -1);
                    if (!is_zero(lhs - sgn * rhs)) {
                        ok = false;
                        wit = "degrees " + idx2(p, q) + ", basis " + idx2(i, j);
                    }
                });
            });
    rep.add("wedge_graded_commutative", ok, wit);

    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; p + q <= N && ok; ++q)
            for (int s = 0; p + q + s <= N && ok; ++s)
                basis_loop(p, [&](const Vec& u, int i) {
                    if (!ok) return;
                    basis_loop(q, [&](const Vec& v, int j) {
                        if (!ok) return;
                        basis_loop(s, [&](const Vec& w, int k) {
                            if (!ok) return;
                            Vec lhs = g.wedge_mul(p + q, s, g.wedge_mul(p, q, u, v), w);
                            Vec rhs = g.wedge_mul(p, q + s, u, g.wedge_mul(q, s, v, w));
                            if (!is_zero(lhs - rhs)) {
                                ok = false;
                                wit = "degrees " + idx3(p, q, s) + ", basis " + idx3(i, j, k);
                            }
                        });
                    });
                });
    rep.add("wedge_associative", ok, wit);

    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; p + q <= N && ok; ++q)
            basis_loop(p, [&](const Vec& u, int i) {
                if (!ok) return;
                basis_loop(q, [&](const Vec& v, int j) {
                    if (!ok) return;
                    Vec lhs = g.alpha_apply(p + q, g.wedge_mul(p, q, u, v));
                    Vec rhs = g.wedge_mul(p, q, g.alpha_apply(p, u), g.alpha_apply(q, v));
                    if (!is_zero(lhs - rhs)) {
                        ok = false;
                        wit = "degrees " + idx2(p, q) + ", basis " + idx2(i, j);
                    }
                });
            });
    rep.add("alpha_wedge_multiplicative", ok, wit);

    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; q <= N && ok; ++q) {
            if (!g.has_bracket(p, q) || p + q - 1 < 0) continue;
            basis_loop(p, [&](const Vec& u, int i) {
                if (!ok) return;
                basis_loop(q, [&](const Vec& v, int j) {
                    if (!ok) return;
                    Vec lhs = g.alpha_apply(p + q - 1, g.bracket_mul(p, q, u, v));
                    Vec rhs = g.bracket_mul(p, q, g.alpha_apply(p, u), g.alpha_apply(q, v));
                    if (!is_zero(lhs - rhs)) {
                        ok = false;
                        wit = "degrees " + idx2(p, q) + ", basis " + idx2(i, j);
                    }
                });
            });
        }
    rep.add("alpha_bracket_multiplicative", ok, wit);

    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; q <= N && ok; ++q) {
            if (!g.has_bracket(p, q)) continue;
            basis_loop(p, [&](const Vec& u, int i) {
                if (!ok) return;
                basis_loop(q, [&](const Vec& v, int j) {
                    if (!ok) return;
                    Vec lhs = g.bracket_mul(p, q, u, v);
                    Vec rhs = g.bracket_mul(q, p, v, u);
                    Rational sgn(((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1);
                    if (!is_zero(lhs - sgn * rhs)) {
                        ok = false;
                        wit = "degrees " + idx2(p, q) + ", basis " + idx2(i, j);
                    }
                });
            });
        }
    rep.add("bracket_graded_antisymmetric", ok, wit);

    // (-1)^{(p-1)(s-1)}[a(x),[y,z]] + (-1)^{(q-1)(p-1)}[a(y),[z,x]]
    //   + (-1)^{(s-1)(q-1)}[a(z),[x,y]] = 0
    ok = true;
    wit.clear();
    auto jacobi_term = [&](int pa, int pb, int pc, const Vec& xa, const Vec& xb, const Vec& xc,
                           int out_deg) -> Vec {
        // [alpha(xa), [xb, xc]] with degree bookkeeping; zero when the inner
        // bracket lands in degree -1.
        if (pb + pc == 0) return zero_vec(g.dims[out_deg]);
        Vec inner = g.bracket_mul(pb, pc, xb, xc);
        if (pa + (pb + pc - 1) == 0) return zero_vec(g.dims[out_deg]);
        return g.bracket_mul(pa, pb + pc - 1, g.alpha_apply(pa, xa), inner);
    };
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; q <= N && ok; ++q)
            for (int s = 0; s <= N && ok; ++s) {
                int out_deg = p + q + s - 2;
                if (out_deg < 0 || out_deg > N) continue;
                bool representable = (q + s <= 1 || q + s - 1 <= N) &&
                                     (s + p <= 1 || s + p - 1 <= N) &&
                                     (p + q <= 1 || p + q - 1 <= N);
                if (!representable) continue;
                basis_loop(p, [&](const Vec& x, int i) {
                    if (!ok) return;
                    basis_loop(q, [&](const Vec& y, int j) {
                        if (!ok) return;
                        basis_loop(s, [&](const Vec& z, int k) {
                            if (!ok) return;
                            Vec t1 = jacobi_term(p, q, s, x, y, z, out_deg);
                            Vec t2 = jacobi_term(q, s, p, y, z, x, out_deg);
                            Vec t3 = jacobi_term(s, p, q, z, x, y, out_deg);
                            Rational s1(((p - 1) * (s - 1)) % 2 == 0 ? 1 : -1);
                            Rational s2(((q - 1) * (p - 1)) % 2 == 0 ? 1 : -1);
                            Rational s3(((s - 1) * (q - 1)) % 2 == 0 ? 1 : -1);
                            if (!is_zero(s1 * t1 + (s2 * t2 + s3 * t3))) {
                                ok = false;
                                wit = "degrees " + idx3(p, q, s) + ", basis " + idx3(i, j, k);
                            }
                        });
                    });
                });
            }
    rep.add("graded_hom_jacobi", ok, wit);

    // [X, Y ^ Z] = [X,Y] ^ alpha(Z) + (-1)^{(p-1)q} alpha(Y) ^ [X,Z]
    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; q <= N && ok; ++q)
            for (int s = 0; s <= N && ok; ++s) {
                int out_deg = p + q + s - 1;
                if (out_deg < 0 || out_deg > N || q + s > N) continue;
                basis_loop(p, [&](const Vec& x, int i) {
                    if (!ok) return;
                    basis_loop(q, [&](const Vec& y, int j) {
                        if (!ok) return;
                        basis_loop(s, [&](const Vec& z, int k) {
                            if (!ok) return;
                            Vec lhs = (p + q + s >= 1)
                                          ? g.bracket_mul(p, q + s, x, g.wedge_mul(q, s, y, z))
                                          : Vec{};
                            Vec term1 = zero_vec(g.dims[out_deg]);
                            if (p + q >= 1)
                                term1 = g.wedge_mul(p + q - 1, s, g.bracket_mul(p, q, x, y),
                                                    g.alpha_apply(s, z));
                            Vec term2 = zero_vec(g.dims[out_deg]);
                            if (p + s >= 1) {
                                Vec t = g.wedge_mul(q, p + s - 1, g.alpha_apply(q, y),
                                                    g.bracket_mul(p, s, x, z));
                                Rational sgn(((p - 1) * q) % 2 == 0 ? 1 : -1);
                                t = sgn * t;
                                term2 = t;
                            }
                            if (lhs.empty()) lhs = zero_vec(g.dims[out_deg]);
                            if (!is_zero(lhs - (term1 + term2))) {
                                ok = false;
                                wit = "degrees " + idx3(p, q, s) + ", basis " + idx3(i, j, k);
                            }
                        });
                    });
                });
            }
    rep.add("hom_leibniz", ok, wit);

    return rep;
}

HomLieRinehart functor_F(const GradedAlgebra& g) {
    Report chk = check_hom_gerstenhaber(g);
    if (!chk.all_passed()) throw AxiomFailure("functor_F input: " + chk.first_failure());
    if (g.top_degree < 1) throw InvalidDegree("functor_F needs degrees 0 and 1");

    const int n0 = g.dims[0], n1 = g.dims[1];

    // Unit of the degree-0 algebra, by exact solve of u ^ e_i = e_i.
    Matrix sys(n0 * n0, n0);
    for (int i = 0; i < n0; ++i) {
        for (int a = 0; a < n0; ++a) {
            Vec col = g.wedge_mul(0, 0, unit_vec(n0, a), unit_vec(n0, i));
            for (int k = 0; k < n0; ++k) sys.at(i * n0 + k, a) = col[k];
        }
    }
    Vec rhs(size_t(n0) * n0);
    for (int i = 0; i < n0; ++i) rhs[size_t(i) * n0 + i] = Rational(1);
    auto unit = solve(sys, rhs);
    if (!unit) throw AxiomFailure("degree-0 component has no unit");

    HomLieRinehart out;
    out.algebra.dim = n0;
    out.algebra.mult = g.wedge.at({0, 0});
    out.algebra.unit = *unit;
    out.algebra.phi = g.alpha[0];
    out.rank = n1;
    out.action = g.wedge.at({0, 1});
    out.bracket = g.bracket.at({1, 1});
    out.alpha = g.alpha[1];
    out.anchor = g.bracket.at({1, 0}); // rho(f_x)(e_c) = [f_x, e_c], same layout

    Report lr = check_hom_lr(out);
    if (!lr.all_passed())
        throw InternalError("functor_F output fails check_hom_lr: " + lr.first_failure());
    return out;
}

BVOperator bv_generator(const HomLieAlgebra& g, int top_degree) {
    HomLieRinehart lr = hom_lie_as_hom_lr(g);
    std::vector<Vec> basis;
    for (int i = 0; i < g.dim; ++i) basis.push_back(unit_vec(g.dim, i));
    BVOperator op;
    op.carrier = functor_G(lr, basis, top_degree, SignConvention::signed_convention);

    const int r = g.dim;
    std::vector<std::vector<std::vector<int>>> subsets(top_degree + 1);
    std::vector<std::map<std::vector<int>, int>> srank(top_degree + 1);
    for (int k = 0; k <= top_degree; ++k) {
        subsets[k] = increasing_tuples(r, k);
        for (size_t s = 0; s < subsets[k].size(); ++s) srank[k][subsets[k][s]] = int(s);
    }

    op.d.assign(top_degree + 1, Matrix());
    op.d[0] = Matrix(0, op.carrier.dims[0]);
    if (top_degree >= 1) op.d[1] = Matrix(op.carrier.dims[0], op.carrier.dims[1]);
    for (int k = 2; k <= top_degree; ++k) {
        Matrix m(op.carrier.dims[k - 1], op.carrier.dims[k]);
        for (size_t si = 0; si < subsets[k].size(); ++si) {
            const auto& s = subsets[k][si];
            Vec acc = zero_vec(op.carrier.dims[k - 1]);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    Vec br = g.br(unit_vec(r, s[i]), unit_vec(r, s[j]));
                    std::vector<int> rest;
                    for (int u = 0; u < k; ++u)
                        if (u != i && u != j) rest.push_back(s[u]);
                    Vec rest_elem = unit_vec(op.carrier.dims[k - 2], srank[k - 2].at(rest));
                    Vec aw = op.carrier.alpha_apply(k - 2, rest_elem);
                    Vec one_br = zero_vec(op.carrier.dims[1]);
                    for (int u = 0; u < r; ++u) one_br[u] = br[u];
                    Vec term = op.carrier.wedge_mul(1, k - 2, one_br, aw);
                    Rational sgn(((i + j) % 2 == 0) ? 1 : -1); // (-1)^{i+j}, 1-based indices
                    for (size_t u = 0; u < term.size(); ++u) acc[u] += sgn * term[u];
                }
            for (int row = 0; row < m.rows(); ++row) m.at(row, int(si)) = acc[row];
        }
        op.d[k] = std::move(m);
    }
    return op;
}

Report check_bv_identity(const BVOperator& op) {
    const GradedAlgebra& g = op.carrier;
    const int N = g.top_degree;
    Report rep;

    bool ok = true;
    std::string wit;
    for (int k = 2; k <= N && ok; ++k)
        if (!(op.d[k - 1] * op.d[k]).is_zero()) {
            ok = false;
            wit = "degree " + std::to_string(k);
        }
    rep.add("d_squared_zero", ok, wit);

    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; p + q <= N && ok; ++q) {
            if (p + q == 0) continue;
            for (int i = 0; i < g.dims[p] && ok; ++i)
                for (int j = 0; j < g.dims[q] && ok; ++j) {
                    Vec x = unit_vec(g.dims[p], i), y = unit_vec(g.dims[q], j);
                    Vec lhs = g.bracket_mul(p, q, x, y);
                    Vec xy = g.wedge_mul(p, q, x, y);
                    Vec t1 = op.d[p + q].apply(xy);
                    Vec t2 = zero_vec(g.dims[p + q - 1]);
                    if (p >= 1)
                        t2 = g.wedge_mul(p - 1, q, op.d[p].apply(x), g.alpha_apply(q, y));
                    Vec t3 = zero_vec(g.dims[p + q - 1]);
                    if (q >= 1)
                        t3 = g.wedge_mul(p, q - 1, g.alpha_apply(p, x), op.d[q].apply(y));
                    Rational sp(p % 2 == 0 ? 1 : -1);
                    // (-1)^{|X|} ( d(XY) - dX a(Y) - (-1)^{|X|} a(X) dY )
                    Vec rhs = sp * (t1 - t2 - sp * t3);
                    if (!is_zero(lhs - rhs)) {
                        ok = false;
                        wit = "degrees " + idx2(p, q) + ", basis " + idx2(i, j);
                    }
                }
        }
    rep.add("generating_identity", ok, wit);

    return rep;
}

Report check_sigma_tau_dga(const GradedAlgebra& carrier, const std::vector<Matrix>& sigma,
                           const std::vector<Matrix>& tau, const std::vector<Matrix>& d) {
    const int N = carrier.top_degree;
    if (int(sigma.size()) != N + 1 || int(tau.size()) != N + 1 || int(d.size()) != N)
        throw DimensionMismatch("per-degree operator counts");
    for (int k = 0; k < N; ++k)
        if (d[k].rows() != carrier.dims[k + 1] || d[k].cols() != carrier.dims[k])
            throw DimensionMismatch("d must raise degree by one");

    Report rep;

    bool ok = true;
    std::string wit;
    for (int k = 0; k + 2 <= N && ok; ++k)
        if (!(d[k + 1] * d[k]).is_zero()) {
            ok = false;
            wit = "degree " + std::to_string(k);
        }
    rep.add("d_squared_zero", ok, wit);

    ok = true;
    wit.clear();
    for (int k = 0; k < N && ok; ++k)
        if (!(d[k] * sigma[k] == sigma[k + 1] * d[k])) {
            ok = false;
            wit = "degree " + std::to_string(k);
        }
    rep.add("d_sigma_commute", ok, wit);

    ok = true;
    wit.clear();
    for (int k = 0; k < N && ok; ++k)
        if (!(d[k] * tau[k] == tau[k + 1] * d[k])) {
            ok = false;
            wit = "degree " + std::to_string(k);
        }
    rep.add("d_tau_commute", ok, wit);

    // d(ab) = d(a) tau(b) + (-1)^{|a|} sigma(a) d(b)
    ok = true;
    wit.clear();
    for (int p = 0; p <= N && ok; ++p)
        for (int q = 0; p + q + 1 <= N && ok; ++q)
            for (int i = 0; i < carrier.dims[p] && ok; ++i)
                for (int j = 0; j < carrier.dims[q] && ok; ++j) {
                    Vec a = unit_vec(carrier.dims[p], i), b = unit_vec(carrier.dims[q], j);
                    Vec lhs = d[p + q].apply(carrier.wedge_mul(p, q, a, b));
                    Vec t1 = carrier.wedge_mul(p + 1, q, d[p].apply(a), tau[q].apply(b));
                    Vec t2 = carrier.wedge_mul(p, q + 1, sigma[p].apply(a), d[q].apply(b));
                    Rational sgn(p % 2 == 0 ? 1 : -1);
                    if (!is_zero(lhs - (t1 + sgn * t2))) {
                        ok = false;
                        wit = "degrees " + idx2(p, q) + ", basis " + idx2(i, j);
                    }
                }
    rep.add("twisted_leibniz", ok, wit);

    return rep;
}

} // namespace homlr
