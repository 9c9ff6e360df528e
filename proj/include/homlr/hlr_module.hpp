#pragma once

#include "homlr/hom_lr.hpp"

namespace homlr {

// Left module (M, beta) over a hom-Lie-Rinehart algebra.
// theta.get(x, c, r) = coefficient of m_r in {f_x, m_c}.
struct HLRModule {
    HomLieRinehart base;
    int dim = 0;
    Tensor3 a_action; // (dim A, dim M, dim M)
    Tensor3 theta;    // (rank L, dim M, dim M)
    Matrix beta;      // dim M x dim M

    Vec act(const Vec& a, const Vec& m) const { return a_action.eval(a, m); }
    Vec th(const Vec& x, const Vec& m) const { return theta.eval(x, m); }
    Vec be(const Vec& m) const { return beta.apply(m); }
};

// The four conditions of a left module, plus the A-module axioms on M.
Report check_module(const HLRModule& m);

// (A, phi) as a module over L: beta = phi, theta = anchor.
HLRModule coefficients_in_a(const HomLieRinehart& base);

// L as a module over itself (adjoint); valid when the anchor vanishes.
HLRModule adjoint_module(const HomLieRinehart& base);

// One-dimensional trivial module over a base with A = Q: theta = 0,
// a-action by scalars, beta an arbitrary rational scalar.
HLRModule trivial_module(const HomLieRinehart& base, const Rational& beta_scalar);

// (M, beta) as the anchor-0, trivial-bracket object of hLR_A^phi.
HomLieRinehart module_as_hom_lr(const HLRModule& m);

} // namespace homlr
