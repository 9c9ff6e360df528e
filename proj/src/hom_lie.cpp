#include "homlr/hom_lie.hpp"

#include <sstream>

#include "homlr/errors.hpp"

namespace homlr {

namespace {

std::string defect_witness(const std::string& tuple, const Vec& defect) {
    std::ostringstream os;
    os << "basis tuple " << tuple << ", defect (";
    for (size_t i = 0; i < defect.size(); ++i) os << (i ? ", " : "") << defect[i].str();
    os << ")";
    return os.str();
}

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string triple_str(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

Matrix HomLieRep::theta_of(const Vec& x) const {
    Matrix m(space_dim, space_dim);
    for (int i = 0; i < algebra.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int r = 0; r < space_dim; ++r)
            for (int c = 0; c < space_dim; ++c) m.at(r, c) += x[i] * theta.get(i, c, r);
    }
    return m;
}

Report check_hom_lie(const HomLieAlgebra& g) {
    if (g.bracket.dim1() != g.dim || g.bracket.dim2() != g.dim || g.bracket.dim3() != g.dim ||
        g.alpha.rows() != g.dim || g.alpha.cols() != g.dim)
        throw DimensionMismatch("hom-Lie data sizes");

    Report rep;

    bool ok = true;
    std::string wit;
    for (int i = 0; i < g.dim && ok; ++i)
        for (int j = 0; j <= i && ok; ++j) {
            Vec d = g.bracket.eval(unit_vec(g.dim, i), unit_vec(g.dim, j)) +
                    g.bracket.eval(unit_vec(g.dim, j), unit_vec(g.dim, i));
            if (!is_zero(d)) {
                ok = false;
                wit = defect_witness(pair_str(i, j), d);
            }
        }
    rep.add("antisymmetry", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < g.dim && ok; ++i)
        for (int j = 0; j < g.dim && ok; ++j) {
            Vec ei = unit_vec(g.dim, i), ej = unit_vec(g.dim, j);
            Vec d = g.al(g.br(ei, ej)) - g.br(g.al(ei), g.al(ej));
            if (!is_zero(d)) {
                ok = false;
                wit = defect_witness(pair_str(i, j), d);
            }
        }
    rep.add("alpha_multiplicative", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < g.dim && ok; ++i)
        for (int j = 0; j < g.dim && ok; ++j)
            for (int k = 0; k < g.dim && ok; ++k) {
                Vec x = unit_vec(g.dim, i), y = unit_vec(g.dim, j), z = unit_vec(g.dim, k);
                Vec d = g.br(g.al(x), g.br(y, z)) + g.br(g.al(y), g.br(z, x)) +
                        g.br(g.al(z), g.br(x, y));
                if (!is_zero(d)) {
                    ok = false;
                    wit = defect_witness(triple_str(i, j, k), d);
                }
            }
    rep.add("hom_jacobi", ok, wit);

    return rep;
}

HomLieAlgebra compose_hom_lie(const HomLieAlgebra& lie, const Matrix& endo) {
    if (!lie.alpha.is_identity())
        throw NotLieEndomorphism("compose_hom_lie expects a classical Lie algebra (alpha = Id)");
    if (!check_hom_lie(lie).all_passed())
        throw NotLieEndomorphism("input fails the Lie axioms: " + check_hom_lie(lie).first_failure());
    for (int i = 0; i < lie.dim; ++i)
        for (int j = 0; j < lie.dim; ++j) {
            Vec ei = unit_vec(lie.dim, i), ej = unit_vec(lie.dim, j);
            if (!is_zero(endo.apply(lie.br(ei, ej)) - lie.br(endo.apply(ei), endo.apply(ej))))
                throw NotLieEndomorphism("endo does not commute with the bracket at basis pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    HomLieAlgebra out;
    out.dim = lie.dim;
    out.alpha = endo;
    out.bracket = Tensor3(lie.dim, lie.dim, lie.dim);
    for (int i = 0; i < lie.dim; ++i)
        for (int j = 0; j < lie.dim; ++j) {
            Vec v = endo.apply(lie.br(unit_vec(lie.dim, i), unit_vec(lie.dim, j)));
            for (int k = 0; k < lie.dim; ++k) out.bracket.add(i, j, k, v[k]);
        }
    return out;
}

Report check_representation(const HomLieRep& rep) {
    const HomLieAlgebra& g = rep.algebra;
    if (rep.theta.dim1() != g.dim || rep.theta.dim2() != rep.space_dim ||
        rep.theta.dim3() != rep.space_dim || rep.beta.rows() != rep.space_dim ||
        rep.beta.cols() != rep.space_dim)
        throw DimensionMismatch("representation data sizes");

    Report out;

    bool ok = true;
    std::string wit;
    for (int i = 0; i < g.dim && ok; ++i) {
        Matrix lhs = rep.theta_of(g.al(unit_vec(g.dim, i))) * rep.beta;
        Matrix rhs = rep.beta * rep.theta.slice1(i);
        if (lhs != rhs) {
            ok = false;
            wit = "basis element " + std::to_string(i);
        }
    }
    out.add("theta_alpha_beta_compat", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < g.dim && ok; ++i)
        for (int j = 0; j < g.dim && ok; ++j) {
            Vec ei = unit_vec(g.dim, i), ej = unit_vec(g.dim, j);
            Matrix lhs = rep.theta_of(g.br(ei, ej)) * rep.beta;
            Matrix rhs = rep.theta_of(g.al(ei)) * rep.theta.slice1(j) -
                         rep.theta_of(g.al(ej)) * rep.theta.slice1(i);
            if (lhs != rhs) {
                ok = false;
                wit = "basis pair " + pair_str(i, j);
            }
        }
    out.add("theta_bracket_identity", ok, wit);

    return out;
}

HomLieRep adjoint_rep(const HomLieAlgebra& g, int s) {
    Matrix alpha_s;
    if (s >= 0) {
        alpha_s = matrix_power(g.alpha, s);
    } else {
        auto inv = inverse(g.alpha);
        if (!inv) throw AlphaNotInvertible("alpha^s with s < 0 needs a regular hom-Lie algebra");
        alpha_s = matrix_power(*inv, -s);
    }
    HomLieRep rep;
    rep.algebra = g;
    rep.space_dim = g.dim;
    rep.beta = g.alpha;
    rep.theta = Tensor3(g.dim, g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i) {
        Vec ai = alpha_s.apply(unit_vec(g.dim, i));
        for (int c = 0; c < g.dim; ++c) {
            Vec v = g.br(ai, unit_vec(g.dim, c));
            for (int r = 0; r < g.dim; ++r) rep.theta.add(i, c, r, v[r]);
        }
    }
    return rep;
}

} // namespace homlr
