#pragma once

#include <map>
#include <utility>

#include "homlr/cochain.hpp"
#include "homlr/hom_lr.hpp"

namespace homlr {

// Graded commutative algebra with a degree -1 bracket and a degree-0 twist,
// truncated at top_degree. Structure tensors are stored per degree pair:
//   wedge[(p,q)]   : (dims[p], dims[q], dims[p+q])      for p+q <= N
//   bracket[(p,q)] : (dims[p], dims[q], dims[p+q-1])    for 1 <= p+q <= N+1
// The (0,0) bracket is identically zero and is not stored.
struct GradedAlgebra {
    int top_degree = 0;
    std::vector<int> dims;
    std::map<std::pair<int, int>, Tensor3> wedge;
    std::vector<Matrix> alpha;
    std::map<std::pair<int, int>, Tensor3> bracket;

    Vec wedge_mul(int p, int q, const Vec& u, const Vec& v) const;
    Vec bracket_mul(int p, int q, const Vec& u, const Vec& v) const;
    Vec alpha_apply(int k, const Vec& u) const { return alpha[k].apply(u); }
    bool has_wedge(int p, int q) const { return p >= 0 && q >= 0 && p + q <= top_degree; }
    bool has_bracket(int p, int q) const {
        return p >= 0 && q >= 0 && p + q >= 1 && p + q - 1 <= top_degree;
    }
};

// Named checks: graded commutativity/associativity of the wedge, alpha
// multiplicativity for wedge and bracket, graded antisymmetry, graded
// hom-Jacobi, hom-Leibniz; each exhaustive on basis tuples within top_degree.
Report check_hom_gerstenhaber(const GradedAlgebra& g);

// Exterior-algebra functor: wedge^*_A L for L free over A with the declared
// A-basis (given as L-vectors), truncated at top_degree. The degree-k basis
// is ordered (a, S) -> a * C(r, k) + rank(S), so degree 1 matches the
// (a, i) -> a*r + i convention of the transformation algebras.
// `conv` switches between the internally consistent signed bracket and the
// unsigned variant as printed, for the regression test.
GradedAlgebra functor_G(const HomLieRinehart& l, const std::vector<Vec>& a_basis, int top_degree,
                        SignConvention conv = SignConvention::signed_convention);

// Degree-(0,1) extraction: A = degree 0, L = degree 1, rho(x)(a) = [x, a].
HomLieRinehart functor_F(const GradedAlgebra& g);

// The boundary operator of the trivial-coefficient hom-Lie complex, realized
// as a degree -1 operator on wedge^* g:
//   d(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^{i+j} [x_i,x_j] ^ alpha_G(... i^ ... j^ ...).
struct BVOperator {
    GradedAlgebra carrier;
    std::vector<Matrix> d; // d[k] : dims[k] -> dims[k-1]; d[0] and d[1] vanish
};

BVOperator bv_generator(const HomLieAlgebra& g, int top_degree);

// d^2 = 0 and the generating identity
// [X,Y] = (-1)^{|X|} ( d(XY) - (dX) alpha(Y) - (-1)^{|X|} alpha(X) (dY) ).
Report check_bv_identity(const BVOperator& op);

// (sigma, tau)-differential graded commutative algebra axioms for a degree +1
// operator d: d^2 = 0, d sigma = sigma d, d tau = tau d, and
// d(ab) = d(a) tau(b) + (-1)^{|a|} sigma(a) d(b).
Report check_sigma_tau_dga(const GradedAlgebra& carrier, const std::vector<Matrix>& sigma,
                           const std::vector<Matrix>& tau, const std::vector<Matrix>& d);

} // namespace homlr
