#pragma once

#include <vector>

#include "homlr/linalg.hpp"
#include "homlr/report.hpp"

namespace homlr {

// Finite-dimensional commutative associative unital algebra A over Q,
// with a distinguished algebra endomorphism phi.
struct CommAlgebra {
    int dim = 0;
    Tensor3 mult; // mu^k_{ij}
    Vec unit;
    Matrix phi;

    Vec mul(const Vec& a, const Vec& b) const { return mult.eval(a, b); }
    Vec ph(const Vec& a) const { return phi.apply(a); }

    // Matrix of b -> a b.
    Matrix mult_by(const Vec& a) const;

    bool operator==(const CommAlgebra& o) const {
        return dim == o.dim && mult == o.mult && unit == o.unit && phi == o.phi;
    }
};

// Commutativity, associativity, unit axioms, phi(1) = 1 and
// phi(ab) = phi(a)phi(b), all on basis tuples.
Report check_comm_algebra(const CommAlgebra& a);

// D(ab) = phi(a)D(b) + phi(b)D(a) on all basis pairs; D(1) = 0 is a forced
// consequence and is reported as its own named check.
struct PhiDerivation {
    CommAlgebra algebra;
    Matrix matrix;
};

Report check_phi_derivation(const CommAlgebra& a, const Matrix& d);

// Basis of Der_phi(A), solved as the kernel of the assembled Leibniz system.
std::vector<PhiDerivation> phi_derivations_basis(const CommAlgebra& a);

} // namespace homlr
