#include "homlr/hom_lr.hpp"

#include <sstream>

#include "homlr/errors.hpp"

namespace homlr {

namespace {

std::string idx2(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Coordinates of v in the column span of basis; throws on failure.
Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& v, const char* what) {
    if (basis.empty()) {
        if (!is_zero(v)) throw ClosureFailure(std::string(what) + ": nonzero vector, empty basis");
        return {};
    }
    Matrix b = Matrix::from_cols(basis, int(v.size()));
    auto c = solve(b, v);
    if (!c) throw ClosureFailure(std::string(what) + ": vector escapes the subspace");
    return *c;
}

} // namespace

Matrix HomLieRinehart::rho(const Vec& x) const {
    Matrix m(algebra.dim, algebra.dim);
    for (int i = 0; i < rank; ++i) {
        if (x[i].is_zero()) continue;
        for (int r = 0; r < algebra.dim; ++r)
            for (int c = 0; c < algebra.dim; ++c) m.at(r, c) += x[i] * anchor.get(i, c, r);
    }
    return m;
}

Report check_hom_lr(const HomLieRinehart& cand) {
    const CommAlgebra& A = cand.algebra;
    const int n = A.dim, r = cand.rank;
    if (cand.action.dim1() != n || cand.action.dim2() != r || cand.action.dim3() != r ||
        cand.bracket.dim1() != r || cand.bracket.dim2() != r || cand.bracket.dim3() != r ||
        cand.alpha.rows() != r || cand.alpha.cols() != r || cand.anchor.dim1() != r ||
        cand.anchor.dim2() != n || cand.anchor.dim3() != n)
        throw DimensionMismatch("hom-Lie-Rinehart data sizes");

    Report rep;
    rep.merge("algebra", check_comm_algebra(A));

    // A-module axioms on L.
    bool ok = true;
    std::string wit;
    for (int x = 0; x < r && ok; ++x)
        if (!is_zero(cand.act(A.unit, unit_vec(r, x)) - unit_vec(r, x))) {
            ok = false;
            wit = "basis element " + std::to_string(x);
        }
    rep.add("action_unital", ok, wit);

    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
            for (int x = 0; x < r && ok; ++x) {
                Vec ea = unit_vec(n, a), eb = unit_vec(n, b), fx = unit_vec(r, x);
                if (!is_zero(cand.act(A.mul(ea, eb), fx) - cand.act(ea, cand.act(eb, fx)))) {
                    ok = false;
                    wit = "(a,b,x) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(x) + ")";
                }
            }
    rep.add("action_associative", ok, wit);

    // (1) hom-Lie axioms on L.
    rep.merge("cond1_hom_lie", check_hom_lie(cand.underlying_hom_lie()));

    // (2) alpha(a.x) = phi(a).alpha(x).
    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int x = 0; x < r && ok; ++x) {
            Vec ea = unit_vec(n, a), fx = unit_vec(r, x);
            if (!is_zero(cand.al(cand.act(ea, fx)) - cand.act(A.ph(ea), cand.al(fx)))) {
                ok = false;
                wit = "(a,x) = " + idx2(a, x);
            }
        }
    rep.add("cond2_alpha_action", ok, wit);

    // (3) (rho, phi) is a representation of (L, [.,.], alpha) on A.
    {
        HomLieRep rho_rep{cand.underlying_hom_lie(), n, cand.anchor, A.phi};
        rep.merge("cond3_anchor_representation", check_representation(rho_rep));
    }

    // (4) rho(a.x) = phi(a) rho(x)  (A-module structure on Der_phi).
    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int x = 0; x < r && ok; ++x) {
            Vec ea = unit_vec(n, a), fx = unit_vec(r, x);
            Matrix lhs = cand.rho(cand.act(ea, fx));
            Matrix rhs = A.mult_by(A.ph(ea)) * cand.rho(fx);
            if (lhs != rhs) {
                ok = false;
                wit = "(a,x) = " + idx2(a, x);
            }
        }
    rep.add("cond4_anchor_a_linear", ok, wit);

    // (5) [x, a.y] = phi(a)[x,y] + rho(x)(a) . alpha(y).
    ok = true;
    wit.clear();
    for (int x = 0; x < r && ok; ++x)
        for (int a = 0; a < n && ok; ++a)
            for (int y = 0; y < r && ok; ++y) {
                Vec fx = unit_vec(r, x), ea = unit_vec(n, a), fy = unit_vec(r, y);
                Vec lhs = cand.br(fx, cand.act(ea, fy));
                Vec rhs = cand.act(A.ph(ea), cand.br(fx, fy)) +
                          cand.act(cand.rho(fx).apply(ea), cand.al(fy));
                if (!is_zero(lhs - rhs)) {
                    ok = false;
                    wit = "(x,a,y) = (" + std::to_string(x) + "," + std::to_string(a) + "," +
                          std::to_string(y) + ")";
                }
            }
    rep.add("cond5_twisted_leibniz", ok, wit);

    // Each rho(x) is a phi-derivation.
    ok = true;
    wit.clear();
    for (int x = 0; x < r && ok; ++x)
        if (!check_phi_derivation(A, cand.rho(unit_vec(r, x))).all_passed()) {
            ok = false;
            wit = "basis element " + std::to_string(x);
        }
    rep.add("anchor_in_der_phi", ok, wit);

    // Faithfulness: a.x = 0 for all x forces a = 0. Several useful
    // constructions (zero anchors on quotients, kernels) violate it, so it
    // is reported as a warning only.
    {
        std::vector<Vec> rows;
        for (int x = 0; x < r; ++x)
            for (int out = 0; out < r; ++out) {
                Vec row(n);
                for (int a = 0; a < n; ++a) row[a] = cand.action.get(a, x, out);
                rows.push_back(std::move(row));
            }
        bool faithful = r == 0 ? (n == 0) : (rank_of_vectors(rows, n) == n);
        rep.add_warning("action_faithful", faithful, "A has elements acting as zero on L");
    }

    return rep;
}

HomLieRinehart hom_lie_as_hom_lr(const HomLieAlgebra& g) {
    CommAlgebra q;
    q.dim = 1;
    q.mult = Tensor3(1, 1, 1);
    q.mult.set(0, 0, 0, Rational(1));
    q.unit = Vec{Rational(1)};
    q.phi = Matrix::identity(1);

    HomLieRinehart lr;
    lr.algebra = q;
    lr.rank = g.dim;
    lr.bracket = g.bracket;
    lr.alpha = g.alpha;
    lr.action = Tensor3(1, g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i) lr.action.set(0, i, i, Rational(1));
    lr.anchor = Tensor3(g.dim, 1, 1);
    return lr;
}

HomLieRinehart der_phi_hom_lr(const CommAlgebra& a) {
    auto phi_inv = inverse(a.phi);
    if (!phi_inv) throw PhiNotInvertible("der_phi_hom_lr needs an automorphism phi");

    std::vector<PhiDerivation> ders = phi_derivations_basis(a);
    const int r = int(ders.size());
    std::vector<Vec> der_vecs; // flattened matrices, for coordinates
    for (const auto& d : ders) {
        Vec v;
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) v.push_back(d.matrix.at(i, j));
        der_vecs.push_back(std::move(v));
    }
    auto flat = [&](const Matrix& m) {
        Vec v;
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) v.push_back(m.at(i, j));
        return v;
    };
    auto in_basis = [&](const Matrix& m, const char* what) {
        return coords_in_basis(der_vecs, flat(m), what);
    };

    HomLieRinehart lr;
    lr.algebra = a;
    lr.rank = r;
    lr.bracket = Tensor3(r, r, r);
    lr.alpha = Matrix(r, r);
    lr.action = Tensor3(a.dim, r, r);
    lr.anchor = Tensor3(r, a.dim, a.dim);

    std::vector<Matrix> twisted(r); // alpha_phi(D_i) = phi D_i phi^-1
    for (int i = 0; i < r; ++i) twisted[i] = a.phi * ders[i].matrix * *phi_inv;

    for (int i = 0; i < r; ++i) {
        Vec c = in_basis(twisted[i], "alpha_phi");
        for (int k = 0; k < r; ++k) lr.alpha.at(k, i) = c[k];
        for (int p = 0; p < a.dim; ++p)
            for (int q = 0; q < a.dim; ++q) lr.anchor.set(i, q, p, twisted[i].at(p, q));
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Matrix lhs = a.phi * ders[i].matrix * *phi_inv * ders[j].matrix * *phi_inv -
                         a.phi * ders[j].matrix * *phi_inv * ders[i].matrix * *phi_inv;
            Vec c = in_basis(lhs, "bracket_phi");
            for (int k = 0; k < r; ++k) lr.bracket.add(i, j, k, c[k]);
        }
    for (int p = 0; p < a.dim; ++p)
        for (int i = 0; i < r; ++i) {
            Matrix ad = a.mult_by(unit_vec(a.dim, p)) * ders[i].matrix;
            Vec c = in_basis(ad, "a_action");
            for (int k = 0; k < r; ++k) lr.action.add(p, i, k, c[k]);
        }
    return lr;
}

HomLieRinehart compose_hom_lr(const HomLieRinehart& lr, const Matrix& endo_a, const Matrix& endo_l) {
    if (!lr.alpha.is_identity() || !lr.algebra.phi.is_identity())
        throw NotLREndomorphism("compose_hom_lr expects a classical Lie-Rinehart input");
    if (!check_hom_lr(lr).all_passed())
        throw NotLREndomorphism("input fails the Lie-Rinehart axioms: " +
                                check_hom_lr(lr).first_failure());

    HomLieRinehart probe = lr;
    probe.algebra.phi = endo_a;
    // (g, f) must be an endomorphism of the classical structure.
    Report morph = check_hom_lr_morphism(endo_a, endo_l, lr, lr);
    if (!morph.all_passed())
        throw NotLREndomorphism("endo pair fails: " + morph.first_failure());

    HomLieRinehart out = lr;
    out.algebra.phi = endo_a;
    out.alpha = endo_l;
    out.bracket = Tensor3(lr.rank, lr.rank, lr.rank);
    out.anchor = Tensor3(lr.rank, lr.algebra.dim, lr.algebra.dim);
    for (int i = 0; i < lr.rank; ++i)
        for (int j = 0; j < lr.rank; ++j) {
            Vec v = endo_l.apply(lr.br(unit_vec(lr.rank, i), unit_vec(lr.rank, j)));
            for (int k = 0; k < lr.rank; ++k) out.bracket.add(i, j, k, v[k]);
        }
    for (int i = 0; i < lr.rank; ++i) {
        Matrix m = endo_a * lr.rho(unit_vec(lr.rank, i));
        for (int p = 0; p < lr.algebra.dim; ++p)
            for (int q = 0; q < lr.algebra.dim; ++q) out.anchor.set(i, q, p, m.at(p, q));
    }
    return out;
}

HomLieRinehart transformation_hom_lr(const HomLieAlgebra& g, const CommAlgebra& a,
                                     const Tensor3& rho) {
    if (rho.dim1() != g.dim || rho.dim2() != a.dim || rho.dim3() != a.dim)
        throw DimensionMismatch("transformation rho tensor sizes");
    // (rho, phi) must represent g on A by phi-derivations.
    HomLieRep rr{g, a.dim, rho, a.phi};
    if (!check_representation(rr).all_passed())
        throw NotRepresentationByDerivations("(rho, phi) is not a representation: " +
                                             check_representation(rr).first_failure());
    for (int i = 0; i < g.dim; ++i)
        if (!check_phi_derivation(a, rho.slice1(i)).all_passed())
            throw NotRepresentationByDerivations("rho(e_" + std::to_string(i) +
                                                 ") is not a phi-derivation");

    const int n = a.dim, r = g.dim, N = n * r;
    auto idx = [&](int p, int i) { return p * r + i; };

    HomLieRinehart out;
    out.algebra = a;
    out.rank = N;
    out.action = Tensor3(n, N, N);
    out.bracket = Tensor3(N, N, N);
    out.alpha = Matrix(N, N);
    out.anchor = Tensor3(N, n, n);

    // c . (e_p (x) x_i) = (c e_p) (x) x_i
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < n; ++p) {
            Vec prod = a.mul(unit_vec(n, c), unit_vec(n, p));
            for (int q = 0; q < n; ++q)
                if (!prod[q].is_zero())
                    for (int i = 0; i < r; ++i) out.action.add(c, idx(p, i), idx(q, i), prod[q]);
        }

    // alpha~(e_p (x) x_i) = phi(e_p) (x) alpha(x_i)
    for (int p = 0; p < n; ++p) {
        Vec pp = a.ph(unit_vec(n, p));
        for (int i = 0; i < r; ++i) {
            Vec ai = g.al(unit_vec(r, i));
            for (int q = 0; q < n; ++q)
                for (int j = 0; j < r; ++j) out.alpha.at(idx(q, j), idx(p, i)) += pp[q] * ai[j];
        }
    }

    // rho~(e_p (x) x_i)(b) = phi(e_p) rho(x_i)(b)
    for (int p = 0; p < n; ++p)
        for (int i = 0; i < r; ++i) {
            Matrix m = a.mult_by(a.ph(unit_vec(n, p))) * rho.slice1(i);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) out.anchor.set(idx(p, i), v, u, m.at(u, v));
        }

    // [a (x) x, b (x) y] = phi(ab) (x) [x,y] + phi(a) rho(x)(b) (x) alpha(y)
    //                      - phi(b) rho(y)(a) (x) alpha(x)
    for (int p = 0; p < n; ++p)
        for (int i = 0; i < r; ++i)
            for (int q = 0; q < n; ++q)
                for (int j = 0; j < r; ++j) {
                    Vec ea = unit_vec(n, p), eb = unit_vec(n, q);
                    Vec xi = unit_vec(r, i), yj = unit_vec(r, j);
                    Vec term_a = a.ph(a.mul(ea, eb));
                    Vec brL = g.br(xi, yj);
                    Vec term_b = a.mul(a.ph(ea), rho.slice1(i).apply(eb));
                    Vec ay = g.al(yj);
                    Vec term_c = a.mul(a.ph(eb), rho.slice1(j).apply(ea));
                    Vec ax = g.al(xi);
                    for (int u = 0; u < n; ++u)
                        for (int k = 0; k < r; ++k) {
                            Rational v = term_a[u] * brL[k] + term_b[u] * ay[k] -
                                         term_c[u] * ax[k];
                            if (!v.is_zero()) out.bracket.add(idx(p, i), idx(q, j), idx(u, k), v);
                        }
                }
    return out;
}

HomLieRinehart restrict_to_subspace(const HomLieRinehart& big, const std::vector<Vec>& basis) {
    const int r = int(basis.size());
    HomLieRinehart out;
    out.algebra = big.algebra;
    out.rank = r;
    out.action = Tensor3(big.algebra.dim, r, r);
    out.bracket = Tensor3(r, r, r);
    out.alpha = Matrix(r, r);
    out.anchor = Tensor3(r, big.algebra.dim, big.algebra.dim);

    for (int i = 0; i < r; ++i) {
        Vec c = coords_in_basis(basis, big.al(basis[i]), "alpha restriction");
        for (int k = 0; k < r; ++k) out.alpha.at(k, i) = c[k];
        Matrix m = big.rho(basis[i]);
        for (int p = 0; p < big.algebra.dim; ++p)
            for (int q = 0; q < big.algebra.dim; ++q) out.anchor.set(i, q, p, m.at(p, q));
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Vec c = coords_in_basis(basis, big.br(basis[i], basis[j]), "bracket restriction");
            for (int k = 0; k < r; ++k) out.bracket.add(i, j, k, c[k]);
        }
    for (int p = 0; p < big.algebra.dim; ++p)
        for (int i = 0; i < r; ++i) {
            Vec c = coords_in_basis(basis, big.act(unit_vec(big.algebra.dim, p), basis[i]),
                                    "action restriction");
            for (int k = 0; k < r; ++k) out.action.add(p, i, k, c[k]);
        }
    return out;
}

FiberedProduct fibered_product(const HomLieRinehart& left, const HomLieRinehart& right) {
    if (!(left.algebra == right.algebra))
        throw AlgebraMismatch("fibered product needs the same (A, phi) on both sides");
    const int n = left.algebra.dim;
    const int rl = left.rank, rr = right.rank;

    // Kernel of (l, m) -> rho_L(l) - rho_M(m), flattened on A x A.
    Matrix sys(n * n, rl + rr);
    for (int i = 0; i < rl; ++i) {
        Matrix m = left.rho(unit_vec(rl, i));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) sys.at(p * n + q, i) = m.at(p, q);
    }
    for (int j = 0; j < rr; ++j) {
        Matrix m = right.rho(unit_vec(rr, j));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) sys.at(p * n + q, rl + j) = -m.at(p, q);
    }
    std::vector<Vec> carrier = kernel_basis(sys);

    // Componentwise structure on L (+) M, then restricted to the carrier.
    HomLieRinehart sum;
    sum.algebra = left.algebra;
    sum.rank = rl + rr;
    sum.action = Tensor3(n, sum.rank, sum.rank);
    sum.bracket = Tensor3(sum.rank, sum.rank, sum.rank);
    sum.alpha = Matrix(sum.rank, sum.rank);
    sum.anchor = Tensor3(sum.rank, n, n);
    for (const auto& [id, v] : left.action.entries()) {
        auto [a, r, x] = id;
        sum.action.set(a, r, x, v);
    }
    for (const auto& [id, v] : right.action.entries()) {
        auto [a, r, x] = id;
        sum.action.set(a, rl + r, rl + x, v);
    }
    for (const auto& [id, v] : left.bracket.entries()) {
        auto [i, j, k] = id;
        sum.bracket.set(i, j, k, v);
    }
    for (const auto& [id, v] : right.bracket.entries()) {
        auto [i, j, k] = id;
        sum.bracket.set(rl + i, rl + j, rl + k, v);
    }
    for (int i = 0; i < rl; ++i)
        for (int k = 0; k < rl; ++k) sum.alpha.at(k, i) = left.alpha.at(k, i);
    for (int i = 0; i < rr; ++i)
        for (int k = 0; k < rr; ++k) sum.alpha.at(rl + k, rl + i) = right.alpha.at(k, i);
    // anchor rho(l, m) = rho_L(l) (= rho_M(m) on the carrier)
    for (const auto& [id, v] : left.anchor.entries()) {
        auto [x, p, q] = id;
        sum.anchor.set(x, p, q, v);
    }

    FiberedProduct fp{restrict_to_subspace(sum, carrier), Matrix(rl, int(carrier.size())),
                      Matrix(rr, int(carrier.size()))};
    for (int c = 0; c < int(carrier.size()); ++c) {
        for (int i = 0; i < rl; ++i) fp.proj_left.at(i, c) = carrier[c][i];
        for (int j = 0; j < rr; ++j) fp.proj_right.at(j, c) = carrier[c][rl + j];
    }
    return fp;
}

Report check_hom_lr_morphism(const Matrix& g, const Matrix& f, const HomLieRinehart& src,
                             const HomLieRinehart& dst) {
    const int nA = src.algebra.dim, nB = dst.algebra.dim;
    const int rs = src.rank, rd = dst.rank;
    if (g.rows() != nB || g.cols() != nA || f.rows() != rd || f.cols() != rs)
        throw DimensionMismatch("morphism matrix sizes");

    Report rep;

    bool ok = true;
    std::string wit;
    for (int a = 0; a < nA && ok; ++a)
        for (int b = 0; b < nA && ok; ++b) {
            Vec ea = unit_vec(nA, a), eb = unit_vec(nA, b);
            if (!is_zero(g.apply(src.algebra.mul(ea, eb)) -
                         dst.algebra.mul(g.apply(ea), g.apply(eb))) ||
                !is_zero(g.apply(src.algebra.unit) - dst.algebra.unit)) {
                ok = false;
                wit = "basis pair " + idx2(a, b);
            }
        }
    rep.add("g_algebra_homomorphism", ok, wit);

    ok = true;
    wit.clear();
    for (int a = 0; a < nA && ok; ++a)
        for (int x = 0; x < rs && ok; ++x) {
            Vec ea = unit_vec(nA, a), fx = unit_vec(rs, x);
            if (!is_zero(f.apply(src.act(ea, fx)) - dst.act(g.apply(ea), f.apply(fx)))) {
                ok = false;
                wit = "(a,x) = " + idx2(a, x);
            }
        }
    rep.add("cond1_action", ok, wit);

    ok = true;
    wit.clear();
    for (int x = 0; x < rs && ok; ++x)
        for (int y = 0; y < rs && ok; ++y) {
            Vec fx = unit_vec(rs, x), fy = unit_vec(rs, y);
            if (!is_zero(f.apply(src.br(fx, fy)) - dst.br(f.apply(fx), f.apply(fy)))) {
                ok = false;
                wit = "(x,y) = " + idx2(x, y);
            }
        }
    rep.add("cond2_bracket", ok, wit);

    rep.add("cond3_alpha", f * src.alpha == dst.alpha * f, "f alpha != alpha' f");
    rep.add("cond4_phi", g * src.algebra.phi == dst.algebra.phi * g, "g phi != psi g");

    ok = true;
    wit.clear();
    for (int x = 0; x < rs && ok; ++x)
        for (int a = 0; a < nA && ok; ++a) {
            Vec fx = unit_vec(rs, x), ea = unit_vec(nA, a);
            Vec lhs = g.apply(src.rho(fx).apply(ea));
            Vec rhs = dst.rho(f.apply(fx)).apply(g.apply(ea));
            if (!is_zero(lhs - rhs)) {
                ok = false;
                wit = "(x,a) = " + idx2(x, a);
            }
        }
    rep.add("cond5_anchor", ok, wit);

    return rep;
}

} // namespace homlr
