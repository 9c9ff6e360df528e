#pragma once

#include "homlr/linalg.hpp"
#include "homlr/report.hpp"

namespace homlr {

// Hom-Lie algebra by structure constants: [e_i, e_j] = sum_k c^k_{ij} e_k
// together with the twisting endomorphism alpha. All values immutable;
// the checkers never mutate.
struct HomLieAlgebra {
    int dim = 0;
    Tensor3 bracket; // (dim, dim, dim)
    Matrix alpha;    // dim x dim

    Vec br(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }
    Vec al(const Vec& x) const { return alpha.apply(x); }
};

// Representation (theta, beta) on a space of dimension space_dim.
// Like every structure tensor here, theta is stored (input, input, output):
// theta.get(i, c, r) = coefficient of m_r in theta(e_i)(m_c), so slice1(i)
// is the matrix of theta(e_i).
struct HomLieRep {
    HomLieAlgebra algebra;
    int space_dim = 0;
    Tensor3 theta; // (dim g, space_dim, space_dim)
    Matrix beta;   // space_dim x space_dim

    Matrix theta_of(const Vec& x) const;
};

// Antisymmetry, alpha-multiplicativity and the hom-Jacobi identity
// [alpha(x),[y,z]] + [alpha(y),[z,x]] + [alpha(z),[x,y]] = 0,
// each on all basis tuples (multilinearity makes this sufficient).
Report check_hom_lie(const HomLieAlgebra& g);

// Example "obtained by composition": a Lie algebra (alpha = Id) composed with
// one of its endomorphisms gives (dim, endo o bracket, endo).
HomLieAlgebra compose_hom_lie(const HomLieAlgebra& lie, const Matrix& endo);

// The two displayed identities of a hom-Lie representation on basis pairs.
Report check_representation(const HomLieRep& rep);

// alpha^s-adjoint representation: theta(g)(h) = [alpha^s(g), h], beta = alpha.
// s is unbounded; powers of alpha are formed by repeated multiplication, and
// s < 0 requires a regular (invertible alpha) hom-Lie algebra.
HomLieRep adjoint_rep(const HomLieAlgebra& g, int s);

} // namespace homlr
