#pragma once

#include <optional>

#include "homlr/hom_lr.hpp"

namespace homlr {

// Finite-dimensional A-module given by its action tensor.
struct AModule {
    int dim = 0;
    Tensor3 a_action; // (dim A, dim, dim)
};

Report check_a_module(const CommAlgebra& a, const AModule& m);

// Twisted Leibniz for a linear map A -> (M, action).
Report check_module_phi_derivation(const CommAlgebra& a, const AModule& m, const Matrix& d);

// Basis of Der_phi(A, M), by exact kernel computation.
std::vector<Matrix> phi_derivations_into(const CommAlgebra& a, const AModule& m);

// Poisson algebra with a Poisson automorphism phi (carried by base.phi).
struct PoissonAlgebra {
    CommAlgebra base;
    Tensor3 pbracket; // [-,-]_A
};

Report check_poisson(const PoissonAlgebra& p);

// Purely hom-Poisson axioms for a quadruple (A, mult, pbr, alpha) on basis
// tuples: hom-Lie bracket, associative commutative product, and the twisted
// compatibility [x, yz] = alpha(y)[x,z] + alpha(z)[x,y].
Report check_purely_hom_poisson(int dim, const Tensor3& mult, const Tensor3& pbr,
                                const Matrix& alpha);

// Semi-direct product algebra A |x M with (a,m)(b,n) = (ab, a.n + b.m).
// phi on the result is phi_A (+) beta when a compatible beta is supplied,
// phi_A (+) 0 otherwise.
CommAlgebra semidirect_algebra(const CommAlgebra& a, const AModule& m,
                               const std::optional<Matrix>& beta = std::nullopt);

// d~(a) = (a, d phi^{-1}(a)) : A -> A |x M; an algebra homomorphism with
// pi_1 o d~ = Id, both verified exactly.
Matrix tilde_d(const CommAlgebra& a, const AModule& m, const Matrix& d);

// Inverse direction: an algebra homomorphism h with pi_1 o h = Id determines
// the phi-derivation d(a) = h_2(phi(a)).
Matrix derivation_from_hom(const CommAlgebra& a, const AModule& m, const Matrix& h);

// The universal phi-derivation d : A -> I/I^2, I = ker(mult : A(x)A -> A),
// d(a) = phi(a)(x)1 - 1(x)phi(a) + I^2, with the A-action a.(u(x)v) = au(x)v.
struct PhiDifferentials {
    CommAlgebra source;
    int space_dim = 0;          // dim I/I^2
    Matrix d_map;               // dim A -> space_dim
    Tensor3 a_action;           // (dim A, space_dim, space_dim)
    std::vector<Vec> basis_lift; // representatives in A(x)A of the basis classes
    std::vector<Vec> i2_basis;
    int dim_i = 0;

    // Class coordinates of a representative in I.
    Vec coords(const Vec& rep) const;
    Vec d_of(const Vec& a) const { return d_map.apply(a); }
    Vec act(const Vec& a, const Vec& w) const { return a_action.eval(a, w); }

private:
    friend PhiDifferentials universal_phi_derivation(const CommAlgebra& a);
    Matrix coord_solver_;
};

PhiDifferentials universal_phi_derivation(const CommAlgebra& a);

// The unique A-linear f : D_A^phi -> N with delta = f o d, by exact solve.
Matrix hom_from_derivation(const PhiDifferentials& d, const AModule& n, const Matrix& delta);

// Poisson-induced package on D_A^phi: pi(adx, bdy) = ab{x,y} with
// {-,-} = phi o [-,-]_A,
// alpha~(adx) = phi(a) d(phi(x)), rho = pi* o alpha~, and the induced bracket.
struct PoissonStructure {
    PhiDifferentials differentials;
    Tensor3 pi;          // (space_dim, space_dim, dim A)
    Matrix alpha_tilde;  // space_dim x space_dim
    HomLieRinehart hlr;  // the hom-Lie-Rinehart algebra on D_A^phi
};

PoissonStructure poisson_structure(const PoissonAlgebra& p);
HomLieRinehart poisson_hom_lr(const PoissonAlgebra& p);

// L_X(a df) = phi(a) d(X(f)) + (phi X phi^{-1})(a) d(phi(f)) as a matrix on
// D_A^phi; X must be a phi-derivation.
Matrix lie_derivative_operator(const PhiDifferentials& d, const Matrix& x);
Vec lie_derivative(const PhiDifferentials& d, const Matrix& x, const Vec& omega);

} // namespace homlr
