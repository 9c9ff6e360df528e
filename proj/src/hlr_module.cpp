#include "homlr/hlr_module.hpp"

#include "homlr/errors.hpp"

namespace homlr {

Report check_module(const HLRModule& m) {
    const HomLieRinehart& L = m.base;
    const CommAlgebra& A = L.algebra;
    const int n = A.dim, r = L.rank, d = m.dim;
    if (m.a_action.dim1() != n || m.a_action.dim2() != d || m.a_action.dim3() != d ||
        m.theta.dim1() != r || m.theta.dim2() != d || m.theta.dim3() != d ||
        m.beta.rows() != d || m.beta.cols() != d)
        throw DimensionMismatch("module data sizes");

    Report rep;

    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i)
        if (!is_zero(m.act(A.unit, unit_vec(d, i)) - unit_vec(d, i))) {
            ok = false;
            wit = "basis element " + std::to_string(i);
        }
    rep.add("a_module_unital", ok, wit);

    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
            for (int i = 0; i < d && ok; ++i) {
                Vec ea = unit_vec(n, a), eb = unit_vec(n, b), mi = unit_vec(d, i);
                if (!is_zero(m.act(A.mul(ea, eb), mi) - m.act(ea, m.act(eb, mi)))) {
                    ok = false;
                    wit = "(a,b,m) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(i) + ")";
                }
            }
    rep.add("a_module_associative", ok, wit);

    // (1) (theta, beta) is a hom-Lie representation.
    rep.merge("cond1_representation",
              check_representation(HomLieRep{L.underlying_hom_lie(), d, m.theta, m.beta}));

    // (2) beta(a.m) = phi(a).beta(m)
    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int i = 0; i < d && ok; ++i) {
            Vec ea = unit_vec(n, a), mi = unit_vec(d, i);
            if (!is_zero(m.be(m.act(ea, mi)) - m.act(A.ph(ea), m.be(mi)))) {
                ok = false;
                wit = "(a,m) = (" + std::to_string(a) + "," + std::to_string(i) + ")";
            }
        }
    rep.add("cond2_beta_action", ok, wit);

    // (3) {a.X, m} = phi(a){X, m}
    ok = true;
    wit.clear();
    for (int a = 0; a < n && ok; ++a)
        for (int x = 0; x < r && ok; ++x)
            for (int i = 0; i < d && ok; ++i) {
                Vec ea = unit_vec(n, a), fx = unit_vec(r, x), mi = unit_vec(d, i);
                if (!is_zero(m.th(L.act(ea, fx), mi) - m.act(A.ph(ea), m.th(fx, mi)))) {
                    ok = false;
                    wit = "(a,x,m) = (" + std::to_string(a) + "," + std::to_string(x) + "," +
                          std::to_string(i) + ")";
                }
            }
    rep.add("cond3_theta_a_linear", ok, wit);

    // (4) {X, a.m} = phi(a){X, m} + rho(X)(a).beta(m)
    ok = true;
    wit.clear();
    for (int x = 0; x < r && ok; ++x)
        for (int a = 0; a < n && ok; ++a)
            for (int i = 0; i < d && ok; ++i) {
                Vec fx = unit_vec(r, x), ea = unit_vec(n, a), mi = unit_vec(d, i);
                Vec lhs = m.th(fx, m.act(ea, mi));
                Vec rhs = m.act(A.ph(ea), m.th(fx, mi)) +
                          m.act(L.rho(fx).apply(ea), m.be(mi));
                if (!is_zero(lhs - rhs)) {
                    ok = false;
                    wit = "(x,a,m) = (" + std::to_string(x) + "," + std::to_string(a) + "," +
                          std::to_string(i) + ")";
                }
            }
    rep.add("cond4_theta_leibniz", ok, wit);

    return rep;
}

HLRModule coefficients_in_a(const HomLieRinehart& base) {
    HLRModule m;
    m.base = base;
    m.dim = base.algebra.dim;
    m.a_action = base.algebra.mult;
    m.theta = base.anchor;
    m.beta = base.algebra.phi;
    return m;
}

HLRModule adjoint_module(const HomLieRinehart& base) {
    HLRModule m;
    m.base = base;
    m.dim = base.rank;
    m.a_action = base.action;
    m.theta = base.bracket;
    m.beta = base.alpha;
    return m;
}

HomLieRinehart module_as_hom_lr(const HLRModule& m) {
    HomLieRinehart lr;
    lr.algebra = m.base.algebra;
    lr.rank = m.dim;
    lr.action = m.a_action;
    lr.bracket = Tensor3(m.dim, m.dim, m.dim);
    lr.alpha = m.beta;
    lr.anchor = Tensor3(m.dim, lr.algebra.dim, lr.algebra.dim);
    return lr;
}

HLRModule trivial_module(const HomLieRinehart& base, const Rational& beta_scalar) {
    if (base.algebra.dim != 1)
        throw DimensionMismatch("trivial_module is defined over A = Q bases");
    HLRModule m;
    m.base = base;
    m.dim = 1;
    m.a_action = Tensor3(1, 1, 1);
    m.a_action.set(0, 0, 0, Rational(1));
    m.theta = Tensor3(base.rank, 1, 1);
    m.beta = Matrix(1, 1);
    m.beta.at(0, 0) = beta_scalar;
    return m;
}

} // namespace homlr
