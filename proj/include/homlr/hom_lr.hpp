#pragma once

#include <utility>
#include <vector>

#include "homlr/comm_algebra.hpp"
#include "homlr/hom_lie.hpp"

namespace homlr {

// Hom-Lie-Rinehart algebra over (A, phi). L is a plain rational vector space
// of dimension `rank` carrying an explicit A-action tensor; the bracket is a
// full R-bilinear tensor and the twisted Leibniz rule is checked as a
// constraint, so non-free carriers (kernels, fibered products) work uniformly.
//
// Tensor layouts are uniformly (input, input, output):
//   action.get(a, x, r) = coefficient of f_r in e_a . f_x
//   bracket             = c^k_{ij} on the L basis
//   anchor.get(x, c, r) = coefficient of e_r in rho(f_x)(e_c)
struct HomLieRinehart {
    CommAlgebra algebra;
    int rank = 0;
    Tensor3 action;  // (dim A, rank, rank)
    Tensor3 bracket; // (rank, rank, rank)
    Matrix alpha;    // rank x rank
    Tensor3 anchor;  // (rank, dim A, dim A)

    Vec br(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }
    Vec al(const Vec& x) const { return alpha.apply(x); }
    Vec act(const Vec& a, const Vec& x) const { return action.eval(a, x); }
    // rho(x) as a matrix on A.
    Matrix rho(const Vec& x) const;

    HomLieAlgebra underlying_hom_lie() const { return {rank, bracket, alpha}; }
};

// All five defining conditions plus the A axioms, the A-module axioms on L,
// and rho landing in Der_phi(A). Faithfulness of the A-action is reported as
// a warning, not a failure.
Report check_hom_lr(const HomLieRinehart& cand);

// A hom-Lie algebra viewed over A = Q with trivial anchor.
HomLieRinehart hom_lie_as_hom_lr(const HomLieAlgebra& g);

// (Der_phi A, [.,.]_phi, alpha_phi) with anchor alpha_phi; phi must be an
// automorphism. [D1,D2]_phi = phi D1 phi^-1 D2 phi^-1 - phi D2 phi^-1 D1 phi^-1,
// alpha_phi(D) = phi D phi^-1.
HomLieRinehart der_phi_hom_lr(const CommAlgebra& a);

// Composition of a classical Lie-Rinehart algebra (alpha = Id, phi = Id) with
// a Lie-Rinehart endomorphism (g on A, f on L): bracket becomes f o [.,.],
// anchor becomes g o rho(.).
HomLieRinehart compose_hom_lr(const HomLieRinehart& lr, const Matrix& endo_a, const Matrix& endo_l);

// Transformation algebra on A (x) L from a hom-Lie algebra acting on A by
// phi-derivations. Basis order is (a, i) -> a * dim L + i.
HomLieRinehart transformation_hom_lr(const HomLieAlgebra& g, const CommAlgebra& a, const Tensor3& rho);

// Fibered product over Der_phi(A): carrier { (l, m) : rho_L(l) = rho_M(m) },
// componentwise structure. Also returns the two projection matrices.
struct FiberedProduct {
    HomLieRinehart product;
    Matrix proj_left;
    Matrix proj_right;
};
FiberedProduct fibered_product(const HomLieRinehart& left, const HomLieRinehart& right);

// The five conditions of a hom-Lie-Rinehart morphism (g, f) : src -> dst,
// allowing a base change g : A -> B.
Report check_hom_lr_morphism(const Matrix& g, const Matrix& f, const HomLieRinehart& src,
                             const HomLieRinehart& dst);

// Subspace closure helper: expresses structure maps of a sub-carrier in a
// given basis, solving exactly; throws ClosureFailure when the subspace is
// not closed.
HomLieRinehart restrict_to_subspace(const HomLieRinehart& big, const std::vector<Vec>& basis);

} // namespace homlr
