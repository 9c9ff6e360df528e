#pragma once

#include <optional>

#include "homlr/hlr_module.hpp"

namespace homlr {

// Sign switch for the second sum of the coboundary (and for the exterior
// bracket): `signed_convention` applies the classical (-1)^{i+j};
// `printed` drops those signs, which demonstrably breaks delta^2 = 0 on
// classical examples and is kept only for the regression tests.
enum class SignConvention { signed_convention, printed };

// Element of C^n(L;M), stored on strictly increasing basis n-tuples of L.
// flat[t * dimM + c] = c-th M-coordinate of f(tuple t); tuples in
// lexicographic order. Alternation is by convention; evaluation on arbitrary
// tuples expands by sign.
struct Cochain {
    int degree = 1;
    Vec flat;

    bool operator==(const Cochain& o) const { return degree == o.degree && flat == o.flat; }
};

struct CochainSpace {
    int degree = 1;
    long ambient_dim = 0;       // C(rank L, n) * dim M
    std::vector<Cochain> basis; // solution space of the two membership conditions
};

std::vector<std::vector<int>> increasing_tuples(int r, int n);
long binomial(int n, int k);

// f(e_{i_1}, ..., e_{i_n}) for an arbitrary index tuple (sorted with sign,
// zero on repeats).
Vec cochain_value(const Cochain& f, int rank_l, int dim_m, const std::vector<int>& idx);

// Multilinear evaluation on arbitrary L-vectors.
Vec cochain_eval(const Cochain& f, int rank_l, int dim_m, const std::vector<Vec>& args);

// Membership in C^n(L;M): equivariance f o alpha^(wedge n) = beta o f and the
// phi^{n-1}-twisted A-linearity, both as exact linear identities.
bool is_cochain(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                std::string* witness = nullptr);

// Basis of C^n(L;M) by exact kernel computation. n >= 1.
CochainSpace cochain_space(const HomLieRinehart& l, const HLRModule& m, int n);

// delta f as raw values on increasing (n+1)-tuples.
Cochain coboundary_apply(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                         SignConvention conv = SignConvention::signed_convention);

// Matrix of delta : C^n -> C^{n+1} in the computed bases. Image vectors are
// verified to satisfy the C^{n+1} membership conditions first.
Matrix coboundary_matrix(const HomLieRinehart& l, const HLRModule& m, int n,
                         SignConvention conv = SignConvention::signed_convention);

// dim ker delta^1 for n = 1; dim ker delta^n - dim im delta^{n-1} otherwise.
int cohomology_dim(const HomLieRinehart& l, const HLRModule& m, int n,
                   SignConvention conv = SignConvention::signed_convention);

bool is_cocycle(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                SignConvention conv = SignConvention::signed_convention);

// Exact solve for g with delta g = f; g is returned on success. Degree-1
// cochains are coboundaries only when zero (the complex starts at n = 1).
std::optional<Cochain> is_coboundary(const HomLieRinehart& l, const HLRModule& m, const Cochain& f,
                                     SignConvention conv = SignConvention::signed_convention);

} // namespace homlr
