#pragma once

#include <optional>

#include "homlr/cochain.hpp"

namespace homlr {

// Action of (L, alpha) on an anchor-0 hom-Lie-Rinehart algebra (M, beta) with
// its own bracket [.,.]_2, written {-,-} and stored like a module theta.
struct HLRAction {
    HomLieRinehart actor;  // L
    HomLieRinehart target; // M, anchor must vanish
    Tensor3 theta;         // (rank L, rank M, rank M)
};

Report check_action(const HLRAction& act);

// Semidirect product (L, alpha) |x (M, beta) on L (+) M:
// [(x,m),(y,n)] = ([x,y]_1, [m,n]_2 + {x,n} - {y,m}).
HomLieRinehart semidirect_product(const HLRAction& act);

// A-split extension data. Coordinates of the total space are arbitrary; the
// (x, m)_tau normal form is recovered through the section.
struct ExtensionData {
    HomLieRinehart base;   // L
    HLRModule module;      // (M, beta) over L
    HomLieRinehart total;  // L'
    Matrix inj;            // i : M -> L'
    Matrix proj;           // sigma : L' -> L
    std::optional<Matrix> section; // tau : L -> L'

    int total_rank() const { return total.rank; }
};

// i injective, sigma surjective, sigma o i = 0; with a section also the three
// A-split conditions and the abelian-extension identity.
Report check_extension(const ExtensionData& ext);

// Abelian extension of a 2-cocycle: total L (+) M with
// [(x,m),(y,n)]' = ([x,y], {x,n} - {y,m} + f(x,y)). Throws NotACocycle
// exactly when delta f != 0.
ExtensionData extension_from_cocycle(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                                     SignConvention conv = SignConvention::signed_convention);

// The same total space without the cocycle gate; hom-Jacobi of the result
// fails exactly when delta f != 0 (tested both directions by mutation).
HomLieRinehart abelian_extension_candidate(const HomLieRinehart& l, const HLRModule& m,
                                           const Cochain& f);

// Omega_tau(x, y) = i^{-1}([tau x, tau y] - tau [x, y]).
Cochain cocycle_from_extension(const ExtensionData& ext,
                               SignConvention conv = SignConvention::signed_convention);

// f1 - f2 a coboundary? Witness g with f1 - f2 = delta g on success.
std::optional<Cochain> extensions_cohomologous(const HomLieRinehart& l, const HLRModule& m,
                                               const Cochain& f1, const Cochain& f2,
                                               SignConvention conv = SignConvention::signed_convention);

// Correspondence between 1-cocycles and extension automorphisms
// F((x,m)_tau) = (x, m + psi(x))_tau.
Matrix automorphism_from_cocycle(const ExtensionData& ext, const Cochain& psi,
                                 SignConvention conv = SignConvention::signed_convention);

Cochain cocycle_from_automorphism(const ExtensionData& ext, const Matrix& f,
                                  SignConvention conv = SignConvention::signed_convention);

// Basis of Z_A(L) = { x : [a.x, z] = [a.alpha(x), z] = 0, rho(x) = 0 }.
std::vector<Vec> center(const HomLieRinehart& l);

// i(M) = ker(sigma) and i(M) in Z_A(L'); re-derives trivial kernel bracket
// and vanishing kernel anchor.
Report check_central_extension(const ExtensionData& ext);

} // namespace homlr
