#include "homlr/extensions.hpp"

#include "homlr/errors.hpp"

namespace homlr {

namespace {

std::string idx2(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Psi matrix (dim M x rank L) of a degree-1 cochain.
Matrix psi_matrix(const Cochain& psi, int rank_l, int dim_m) {
    Matrix p(dim_m, rank_l);
    for (int x = 0; x < rank_l; ++x)
        for (int c = 0; c < dim_m; ++c) p.at(c, x) = psi.flat[size_t(x) * dim_m + c];
    return p;
}

// i^{-1} on the image; throws `err` when v is not in the image of inj.
Vec inj_preimage(const Matrix& inj, const Vec& v, const char* err) {
    auto w = solve(inj, v);
    if (!w) throw SectionInvalid(std::string(err));
    return *w;
}

} // namespace

Report check_action(const HLRAction& act) {
    const HomLieRinehart& L = act.actor;
    const HomLieRinehart& M = act.target;
    if (!(L.algebra == M.algebra))
        throw AlgebraMismatch("action requires both structures over the same (A, phi)");
    const int n = L.algebra.dim, rl = L.rank, rm = M.rank;
    if (act.theta.dim1() != rl || act.theta.dim2() != rm || act.theta.dim3() != rm)
        throw DimensionMismatch("action theta sizes");

    auto th = [&](const Vec& x, const Vec& m) { return act.theta.eval(x, m); };

    Report rep;
    rep.add("target_anchor_trivial", [&] {
        for (int i = 0; i < rm; ++i)
            if (!M.rho(unit_vec(rm, i)).is_zero()) return false;
        return true;
    }());

    // (1) (theta, beta) is a representation of (L, [.,.]_1, alpha) on M.
    rep.merge("cond1_representation",
              check_representation(HomLieRep{L.underlying_hom_lie(), rm, act.theta, M.alpha}));

    // (2) {alpha(x), [m,n]_2} = [{x,m}, beta(n)]_2 + [beta(m), {x,n}]_2
    bool ok = true;
    std::string wit;
    for (int x = 0; x < rl && ok; ++x)
        for (int i = 0; i < rm && ok; ++i)
            for (int j = 0; j < rm && ok; ++j) {
                Vec fx = unit_vec(rl, x), mi = unit_vec(rm, i), mj = unit_vec(rm, j);
                Vec lhs = th(L.al(fx), M.br(mi, mj));
                Vec rhs = M.br(th(fx, mi), M.al(mj)) + M.br(M.al(mi), th(fx, mj));
                if (!is_zero(lhs - rhs)) {
                    ok = false;
                    wit = "(x,m,n) = (" + std::to_string(x) + "," + std::to_string(i) + "," +
                          std::to_string(j) + ")";
                }
            }
    rep.add("cond2_bracket_action", ok, wit);

    // (3) {a.x, m} = phi(a){x, m}
    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int x = 0; x < rl && ok; ++x)
            for (int i = 0; i < rm && ok; ++i) {
                Vec ea = unit_vec(n, a), fx = unit_vec(rl, x), mi = unit_vec(rm, i);
                if (!is_zero(th(L.act(ea, fx), mi) - M.act(L.algebra.ph(ea), th(fx, mi)))) {
                    ok = false;
                    wit = "(a,x,m) = (" + std::to_string(a) + "," + std::to_string(x) + "," +
                          std::to_string(i) + ")";
                }
            }
    rep.add("cond3_theta_a_linear", ok, wit);

    // (4) {x, a.m} = phi(a){x, m} + rho(x)(a) . beta(m)
    ok = true;
    wit.clear();
    for (int x = 0; x < rl && ok; ++x)
        for (int a = 0; a < n && ok; ++a)
            for (int i = 0; i < rm && ok; ++i) {
                Vec fx = unit_vec(rl, x), ea = unit_vec(n, a), mi = unit_vec(rm, i);
                Vec lhs = th(fx, M.act(ea, mi));
                Vec rhs = M.act(L.algebra.ph(ea), th(fx, mi)) +
                          M.act(L.rho(fx).apply(ea), M.al(mi));
                if (!is_zero(lhs - rhs)) {
                    ok = false;
                    wit = "(x,a,m) = (" + std::to_string(x) + "," + std::to_string(a) + "," +
                          std::to_string(i) + ")";
                }
            }
    rep.add("cond4_theta_leibniz", ok, wit);

    return rep;
}

HomLieRinehart semidirect_product(const HLRAction& act) {
    Report chk = check_action(act);
    if (!chk.all_passed()) throw ActionInvalid(chk.first_failure());

    const HomLieRinehart& L = act.actor;
    const HomLieRinehart& M = act.target;
    const int n = L.algebra.dim, rl = L.rank, rm = M.rank, N = rl + rm;

    HomLieRinehart out;
    out.algebra = L.algebra;
    out.rank = N;
    out.action = Tensor3(n, N, N);
    out.bracket = Tensor3(N, N, N);
    out.alpha = Matrix(N, N);
    out.anchor = Tensor3(N, n, n);

    for (const auto& [id, v] : L.action.entries()) {
        auto [a, r, x] = id;
        out.action.set(a, r, x, v);
    }
    for (const auto& [id, v] : M.action.entries()) {
        auto [a, r, x] = id;
        out.action.set(a, rl + r, rl + x, v);
    }
    for (int i = 0; i < rl; ++i)
        for (int k = 0; k < rl; ++k) out.alpha.at(k, i) = L.alpha.at(k, i);
    for (int i = 0; i < rm; ++i)
        for (int k = 0; k < rm; ++k) out.alpha.at(rl + k, rl + i) = M.alpha.at(k, i);
    for (const auto& [id, v] : L.anchor.entries()) {
        auto [x, p, q] = id;
        out.anchor.set(x, p, q, v);
    }
    // [(x,m),(y,n)] = ([x,y]_1, [m,n]_2 + {x,n} - {y,m})
    for (const auto& [id, v] : L.bracket.entries()) {
        auto [i, j, k] = id;
        out.bracket.set(i, j, k, v);
    }
    for (const auto& [id, v] : M.bracket.entries()) {
        auto [i, j, k] = id;
        out.bracket.set(rl + i, rl + j, rl + k, v);
    }
    for (const auto& [id, v] : act.theta.entries()) {
        auto [x, j, k] = id;
        out.bracket.add(x, rl + j, rl + k, v);  // {x, n}
        out.bracket.add(rl + j, x, rl + k, -v); // -{y, m} via antisymmetry
    }
    return out;
}

Report check_extension(const ExtensionData& ext) {
    const HomLieRinehart& L = ext.base;
    const HomLieRinehart& T = ext.total;
    const int rl = L.rank, rm = ext.module.dim, rt = T.rank;
    if (ext.inj.rows() != rt || ext.inj.cols() != rm || ext.proj.rows() != rl ||
        ext.proj.cols() != rt)
        throw DimensionMismatch("extension map sizes");

    Report rep;
    rep.add("inj_injective", rank(ext.inj) == rm);
    rep.add("proj_surjective", rank(ext.proj) == rl);
    rep.add("proj_inj_zero", (ext.proj * ext.inj).is_zero());

    HomLieRinehart m_lr = module_as_hom_lr(ext.module);
    Matrix id_a = Matrix::identity(L.algebra.dim);
    rep.merge("inj_morphism", check_hom_lr_morphism(id_a, ext.inj, m_lr, T));
    rep.merge("proj_morphism", check_hom_lr_morphism(id_a, ext.proj, T, L));

    // Abelian-extension identity: [x', i(m)]' = i({sigma(x'), m}).
    bool ok = true;
    std::string wit;
    for (int x = 0; x < rt && ok; ++x)
        for (int i = 0; i < rm && ok; ++i) {
            Vec xv = unit_vec(rt, x);
            Vec lhs = T.br(xv, ext.inj.col(i));
            Vec rhs = ext.inj.apply(ext.module.th(ext.proj.apply(xv), unit_vec(rm, i)));
            if (!is_zero(lhs - rhs)) {
                ok = false;
                wit = "(x',m) = " + idx2(x, i);
            }
        }
    rep.add("abelian_identity", ok, wit);

    if (ext.section) {
        const Matrix& tau = *ext.section;
        rep.add("split_sigma_tau_id", (ext.proj * tau).is_identity());
        ok = true;
        wit.clear();
        for (int a = 0; a < L.algebra.dim && ok; ++a)
            for (int x = 0; x < rl && ok; ++x) {
                Vec ea = unit_vec(L.algebra.dim, a), fx = unit_vec(rl, x);
                if (!is_zero(tau.apply(L.act(ea, fx)) - T.act(ea, tau.apply(fx)))) {
                    ok = false;
                    wit = "(a,x) = " + idx2(a, x);
                }
            }
        rep.add("split_tau_a_linear", ok, wit);
        rep.add("split_tau_alpha", tau * L.alpha == T.alpha * tau);
    }
    return rep;
}

namespace {

// Total-space candidate built from any degree-2 cochain,
// cocycle or not; hom-Jacobi of the result fails exactly when delta f != 0.
HomLieRinehart abelian_total(const HomLieRinehart& l, const HLRModule& m, const Cochain& f) {
    const int n = l.algebra.dim, rl = l.rank, rm = m.dim, N = rl + rm;
    HomLieRinehart out;
    out.algebra = l.algebra;
    out.rank = N;
    out.action = Tensor3(n, N, N);
    out.bracket = Tensor3(N, N, N);
    out.alpha = Matrix(N, N);
    out.anchor = Tensor3(N, n, n);

    for (const auto& [id, v] : l.action.entries()) {
        auto [a, r, x] = id;
        out.action.set(a, r, x, v);
    }
    for (const auto& [id, v] : m.a_action.entries()) {
        auto [a, r, x] = id;
        out.action.set(a, rl + r, rl + x, v);
    }
    for (int i = 0; i < rl; ++i)
        for (int k = 0; k < rl; ++k) out.alpha.at(k, i) = l.alpha.at(k, i);
    for (int i = 0; i < rm; ++i)
        for (int k = 0; k < rm; ++k) out.alpha.at(rl + k, rl + i) = m.beta.at(k, i);
    for (const auto& [id, v] : l.anchor.entries()) {
        auto [x, p, q] = id;
        out.anchor.set(x, p, q, v);
    }
    for (const auto& [id, v] : l.bracket.entries()) {
        auto [i, j, k] = id;
        out.bracket.set(i, j, k, v);
    }
    for (const auto& [id, v] : m.theta.entries()) {
        auto [x, j, k] = id;
        out.bracket.add(x, rl + j, rl + k, v);  // {x, n}
        out.bracket.add(rl + j, x, rl + k, -v); // -{y, m}
    }
    for (int i = 0; i < rl; ++i)
        for (int j = 0; j < rl; ++j) {
            Vec fv = cochain_value(f, rl, rm, {i, j});
            for (int c = 0; c < rm; ++c) out.bracket.add(i, j, rl + c, fv[c]);
        }
    return out;
}

} // namespace

ExtensionData extension_from_cocycle(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                                     SignConvention conv) {
    if (f.degree != 2) throw InvalidDegree("extension_from_cocycle needs a degree-2 cochain");
    if (!is_cocycle(l, m, f, conv))
        throw NotACocycle("delta f != 0; the candidate total space violates hom-Jacobi");

    ExtensionData ext;
    ext.base = l;
    ext.module = m;
    ext.total = abelian_total(l, m, f);
    const int rl = l.rank, rm = m.dim;
    ext.inj = Matrix(rl + rm, rm);
    for (int i = 0; i < rm; ++i) ext.inj.at(rl + i, i) = Rational(1);
    ext.proj = Matrix(rl, rl + rm);
    for (int i = 0; i < rl; ++i) ext.proj.at(i, i) = Rational(1);
    Matrix tau(rl + rm, rl);
    for (int i = 0; i < rl; ++i) tau.at(i, i) = Rational(1);
    ext.section = tau;

    Report total_chk = check_hom_lr(ext.total);
    if (!total_chk.all_passed())
        throw InternalError("cocycle total space fails check_hom_lr: " + total_chk.first_failure());
    return ext;
}

HomLieRinehart abelian_extension_candidate(const HomLieRinehart& l, const HLRModule& m,
                                           const Cochain& f) {
    if (f.degree != 2) throw InvalidDegree("candidate needs a degree-2 cochain");
    return abelian_total(l, m, f);
}

Cochain cocycle_from_extension(const ExtensionData& ext, SignConvention conv) {
    if (!ext.section) throw NoSection("cocycle_from_extension needs an A-split section");
    const Matrix& tau = *ext.section;
    const HomLieRinehart& L = ext.base;
    const HomLieRinehart& T = ext.total;
    const int rl = L.rank, rm = ext.module.dim;

    if (!(ext.proj * tau).is_identity()) throw SectionInvalid("sigma o tau != Id");
    if (!(tau * L.alpha == T.alpha * tau)) throw SectionInvalid("tau does not intertwine alpha");
    for (int a = 0; a < L.algebra.dim; ++a)
        for (int x = 0; x < rl; ++x) {
            Vec ea = unit_vec(L.algebra.dim, a), fx = unit_vec(rl, x);
            if (!is_zero(tau.apply(L.act(ea, fx)) - T.act(ea, tau.apply(fx))))
                throw SectionInvalid("tau is not A-linear");
        }

    Cochain omega;
    omega.degree = 2;
    omega.flat = zero_vec(int(binomial(rl, 2) * rm));
    long t = 0;
    for (const auto& pair : increasing_tuples(rl, 2)) {
        Vec v = T.br(tau.col(pair[0]), tau.col(pair[1])) -
                tau.apply(L.br(unit_vec(rl, pair[0]), unit_vec(rl, pair[1])));
        Vec w = inj_preimage(ext.inj, v, "Omega_tau escapes i(M)");
        for (int c = 0; c < rm; ++c) omega.flat[size_t(t) * rm + c] = w[c];
        ++t;
    }
    std::string wit;
    if (!is_cochain(ext.base, ext.module, omega, &wit))
        throw SectionInvalid("Omega_tau fails cochain membership: " + wit);
    if (!is_cocycle(ext.base, ext.module, omega, conv))
        throw SectionInvalid("Omega_tau is not a cocycle");
    return omega;
}

std::optional<Cochain> extensions_cohomologous(const HomLieRinehart& l, const HLRModule& m,
                                               const Cochain& f1, const Cochain& f2,
                                               SignConvention conv) {
    if (f1.degree != 2 || f2.degree != 2)
        throw InvalidDegree("extension classes live in degree 2");
    if (!is_cocycle(l, m, f1, conv) || !is_cocycle(l, m, f2, conv))
        throw NotACocycle("both inputs must be 2-cocycles");
    Cochain diff{2, f1.flat - f2.flat};
    return is_coboundary(l, m, diff, conv);
}

Matrix automorphism_from_cocycle(const ExtensionData& ext, const Cochain& psi,
                                 SignConvention conv) {
    if (psi.degree != 1) throw InvalidDegree("extension automorphisms come from 1-cocycles");
    if (!ext.section) throw NoSection("the (x,m)_tau normal form needs a section");
    if (!is_cocycle(ext.base, ext.module, psi, conv)) throw NotACocycle("delta psi != 0");

    const int rl = ext.base.rank, rm = ext.module.dim, rt = ext.total.rank;
    // G : L' -> L (+) M, G(X) = (sigma X, i^{-1}(X - tau sigma X)).
    Matrix g(rl + rm, rt);
    for (int c = 0; c < rt; ++c) {
        Vec x = unit_vec(rt, c);
        Vec top = ext.proj.apply(x);
        Vec residue = x - ext.section->apply(top);
        Vec bottom = inj_preimage(ext.inj, residue, "total space is not tau(L) + i(M)");
        for (int r = 0; r < rl; ++r) g.at(r, c) = top[r];
        for (int r = 0; r < rm; ++r) g.at(rl + r, c) = bottom[r];
    }
    auto g_inv = inverse(g);
    if (!g_inv) throw SectionInvalid("tau-coordinates are degenerate");

    Matrix block = Matrix::identity(rl + rm);
    Matrix psi_m = psi_matrix(psi, rl, rm);
    for (int r = 0; r < rm; ++r)
        for (int c = 0; c < rl; ++c) block.at(rl + r, c) = psi_m.at(r, c);
    return *g_inv * block * g;
}

Cochain cocycle_from_automorphism(const ExtensionData& ext, const Matrix& f, SignConvention conv) {
    if (!ext.section) throw NoSection("the (x,m)_tau normal form needs a section");
    const int rt = ext.total.rank;
    if (f.rows() != rt || f.cols() != rt) throw DimensionMismatch("automorphism matrix size");

    if (!(ext.proj * f == ext.proj))
        throw NotExtensionAutomorphism("sigma o F != sigma");
    if (!(f * ext.inj == ext.inj)) throw NotExtensionAutomorphism("F o i != i");
    Report morph = check_hom_lr_morphism(Matrix::identity(ext.base.algebra.dim), f, ext.total,
                                         ext.total);
    if (!morph.all_passed())
        throw NotExtensionAutomorphism("F is not an endomorphism: " + morph.first_failure());
    if (!inverse(f)) throw NotExtensionAutomorphism("F is singular");

    const Matrix& tau = *ext.section;
    Cochain psi;
    psi.degree = 1;
    for (int x = 0; x < ext.base.rank; ++x) {
        Vec v = f.apply(tau.col(x)) - tau.col(x);
        Vec w = inj_preimage(ext.inj, v, "F(tau x) - tau x escapes i(M)");
        for (int c = 0; c < ext.module.dim; ++c) psi.flat.push_back(w[c]);
    }
    std::string wit;
    if (!is_cochain(ext.base, ext.module, psi, &wit))
        throw InternalError("automorphism cocycle fails membership: " + wit);
    if (!is_cocycle(ext.base, ext.module, psi, conv))
        throw InternalError("automorphism cocycle fails delta psi = 0");
    return psi;
}

std::vector<Vec> center(const HomLieRinehart& l) {
    const int n = l.algebra.dim, r = l.rank;
    std::vector<Vec> cols;
    for (int i = 0; i < r; ++i) {
        Vec col;
        Vec xi = unit_vec(r, i);
        for (int a = 0; a < n; ++a)
            for (int z = 0; z < r; ++z) {
                Vec v1 = l.br(l.act(unit_vec(n, a), xi), unit_vec(r, z));
                Vec v2 = l.br(l.act(unit_vec(n, a), l.al(xi)), unit_vec(r, z));
                col.insert(col.end(), v1.begin(), v1.end());
                col.insert(col.end(), v2.begin(), v2.end());
            }
        Matrix rho = l.rho(xi);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) col.push_back(rho.at(p, q));
        cols.push_back(std::move(col));
    }
    Matrix sys = Matrix::from_cols(cols, cols.empty() ? 0 : int(cols[0].size()));
    return kernel_basis(sys);
}

Report check_central_extension(const ExtensionData& ext) {
    Report rep;
    const int rt = ext.total.rank, rm = ext.module.dim;

    std::vector<Vec> image;
    for (int c = 0; c < rm; ++c) image.push_back(ext.inj.col(c));
    std::vector<Vec> ker = kernel_basis(ext.proj);
    rep.add("kernel_equals_image", subspace_contained(image, ker, rt) &&
                                       subspace_contained(ker, image, rt));

    std::vector<Vec> z = center(ext.total);
    rep.add("kernel_in_center", subspace_contained(image, z, rt));

    bool ok = true;
    for (int i = 0; i < rm && ok; ++i)
        for (int j = 0; j < rm && ok; ++j)
            ok = is_zero(ext.total.br(ext.inj.col(i), ext.inj.col(j)));
    rep.add("kernel_bracket_trivial", ok);

    ok = true;
    for (int i = 0; i < rm && ok; ++i) ok = ext.total.rho(ext.inj.col(i)).is_zero();
    rep.add("kernel_anchor_zero", ok);

    return rep;
}

} // namespace homlr
