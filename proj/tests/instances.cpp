#include "instances.hpp"

#include "homlr/errors.hpp"

namespace homlr::testing {

namespace {

Matrix diag(const std::vector<Rational>& d) {
    Matrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

} // namespace

HomLieAlgebra sl2() {
    // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    HomLieAlgebra g;
    g.dim = 3;
    g.bracket = Tensor3(3, 3, 3);
    g.bracket.set(0, 1, 1, Rational(2));
    g.bracket.set(1, 0, 1, Rational(-2));
    g.bracket.set(0, 2, 2, Rational(-2));
    g.bracket.set(2, 0, 2, Rational(2));
    g.bracket.set(1, 2, 0, Rational(1));
    g.bracket.set(2, 1, 0, Rational(-1));
    g.alpha = Matrix::identity(3);
    return g;
}

HomLieAlgebra sl2_composed(const Rational& lambda) {
    return compose_hom_lie(sl2(), diag({Rational(1), lambda, Rational(1) / lambda}));
}

HomLieAlgebra heisenberg() {
    // basis (x, y, z): [x,y] = z
    HomLieAlgebra g;
    g.dim = 3;
    g.bracket = Tensor3(3, 3, 3);
    g.bracket.set(0, 1, 2, Rational(1));
    g.bracket.set(1, 0, 2, Rational(-1));
    g.alpha = Matrix::identity(3);
    return g;
}

HomLieAlgebra heisenberg_composed(const Rational& a, const Rational& b) {
    return compose_hom_lie(heisenberg(), diag({a, b, a * b}));
}

HomLieAlgebra abelian_lie(int dim, const Matrix& alpha) {
    HomLieAlgebra g;
    g.dim = dim;
    g.bracket = Tensor3(dim, dim, dim);
    g.alpha = alpha;
    return g;
}

HomLieAlgebra affine2() {
    HomLieAlgebra g;
    g.dim = 2;
    g.bracket = Tensor3(2, 2, 2);
    g.bracket.set(0, 1, 1, Rational(1));
    g.bracket.set(1, 0, 1, Rational(-1));
    g.alpha = Matrix::identity(2);
    return g;
}

CommAlgebra q_algebra() {
    CommAlgebra a;
    a.dim = 1;
    a.mult = Tensor3(1, 1, 1);
    a.mult.set(0, 0, 0, Rational(1));
    a.unit = Vec{Rational(1)};
    a.phi = Matrix::identity(1);
    return a;
}

CommAlgebra dual_numbers(const Rational& phi_x) {
    CommAlgebra a;
    a.dim = 2;
    a.mult = Tensor3(2, 2, 2);
    a.mult.set(0, 0, 0, Rational(1));
    a.mult.set(0, 1, 1, Rational(1));
    a.mult.set(1, 0, 1, Rational(1));
    a.unit = unit_vec(2, 0);
    a.phi = diag({Rational(1), phi_x});
    return a;
}

CommAlgebra truncated_cubic(const Rational& phi_x) {
    CommAlgebra a;
    a.dim = 3; // (1, x, x^2)
    a.mult = Tensor3(3, 3, 3);
    for (int i = 0; i < 3; ++i) {
        a.mult.set(0, i, i, Rational(1));
        if (i) a.mult.set(i, 0, i, Rational(1));
    }
    a.mult.set(1, 1, 2, Rational(1));
    a.unit = unit_vec(3, 0);
    a.phi = diag({Rational(1), phi_x, phi_x * phi_x});
    return a;
}

CommAlgebra q_times_q() {
    CommAlgebra a;
    a.dim = 2;
    a.mult = Tensor3(2, 2, 2);
    a.mult.set(0, 0, 0, Rational(1));
    a.mult.set(1, 1, 1, Rational(1));
    a.unit = Vec{Rational(1), Rational(1)};
    a.phi = Matrix::identity(2);
    return a;
}

CommAlgebra planar_nilpotent(const Rational& phi_x) {
    CommAlgebra a;
    a.dim = 3; // (1, x, y), (x,y)^2 = 0
    a.mult = Tensor3(3, 3, 3);
    for (int i = 0; i < 3; ++i) {
        a.mult.set(0, i, i, Rational(1));
        if (i) a.mult.set(i, 0, i, Rational(1));
    }
    a.unit = unit_vec(3, 0);
    a.phi = diag({Rational(1), phi_x, Rational(1)});
    return a;
}

HomLieRinehart transformation_zero_rho(const CommAlgebra& a, const HomLieAlgebra& g) {
    return transformation_hom_lr(g, a, Tensor3(g.dim, a.dim, a.dim));
}

HomLieRinehart derivation_action_example() {
    CommAlgebra a = dual_numbers(Rational(1));
    HomLieAlgebra g = abelian_lie(1, Matrix::identity(1));
    Tensor3 rho(1, 2, 2);
    rho.set(0, 1, 1, Rational(1)); // rho(e)(x) = x, rho(e)(1) = 0
    return transformation_hom_lr(g, a, rho);
}

PoissonAlgebra poisson_planar(const Rational& phi_x) {
    PoissonAlgebra p;
    p.base = planar_nilpotent(phi_x);
    p.pbracket = Tensor3(3, 3, 3);
    p.pbracket.set(1, 2, 1, Rational(1));  // {x, y} = x
    p.pbracket.set(2, 1, 1, Rational(-1));
    return p;
}

PoissonAlgebra poisson_trivial(const CommAlgebra& a) {
    return PoissonAlgebra{a, Tensor3(a.dim, a.dim, a.dim)};
}

namespace {

struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned seed) : s(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    unsigned next(unsigned bound) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return unsigned((s >> 33) % bound);
    }
};

Rational pick_scalar(Lcg& rng) {
    static const Rational pool[] = {Rational(1), Rational(2),      Rational(3),
                                    Rational(5), Rational(1, 2),   Rational(1, 3),
                                    Rational(-1), Rational(-2, 3), Rational(7, 2)};
    return pool[rng.next(9)];
}

Rational pick_nonzero(Lcg& rng) {
    Rational r = pick_scalar(rng);
    return r.is_zero() ? Rational(1) : r;
}

std::vector<HomLieRinehart> base_pool(Lcg& rng) {
    std::vector<HomLieRinehart> pool;

    pool.push_back(hom_lie_as_hom_lr(sl2()));
    pool.push_back(hom_lie_as_hom_lr(sl2_composed(pick_nonzero(rng))));
    pool.push_back(hom_lie_as_hom_lr(sl2_composed(pick_nonzero(rng))));
    pool.push_back(hom_lie_as_hom_lr(heisenberg()));
    pool.push_back(hom_lie_as_hom_lr(heisenberg_composed(pick_nonzero(rng), pick_nonzero(rng))));
    pool.push_back(hom_lie_as_hom_lr(heisenberg_composed(pick_nonzero(rng), pick_nonzero(rng))));
    pool.push_back(hom_lie_as_hom_lr(affine2()));
    {
        // affine algebra composed with diag(1, c)
        Matrix endo = Matrix::identity(2);
        endo.at(1, 1) = pick_nonzero(rng);
        pool.push_back(hom_lie_as_hom_lr(compose_hom_lie(affine2(), endo)));
    }
    for (int dim = 1; dim <= 4; ++dim) {
        Matrix alpha(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                alpha.at(i, j) = (rng.next(3) == 0) ? pick_scalar(rng) : Rational(0);
        pool.push_back(hom_lie_as_hom_lr(abelian_lie(dim, alpha)));
    }

    // transformation algebras over 2- and 3-dimensional A
    pool.push_back(transformation_zero_rho(dual_numbers(Rational(1)), affine2()));
    pool.push_back(transformation_zero_rho(dual_numbers(Rational(2)),
                                           abelian_lie(2, diag({pick_scalar(rng), Rational(1)}))));
    pool.push_back(transformation_zero_rho(q_times_q(), affine2()));
    pool.push_back(transformation_zero_rho(planar_nilpotent(Rational(2)),
                                           abelian_lie(1, Matrix::identity(1))));
    pool.push_back(transformation_zero_rho(truncated_cubic(Rational(2)),
                                           abelian_lie(1, diag({pick_scalar(rng)}))));
    pool.push_back(derivation_action_example());
    pool.push_back(der_phi_hom_lr(dual_numbers(Rational(1))));
    pool.push_back(der_phi_hom_lr(dual_numbers(Rational(2))));
    pool.push_back(der_phi_hom_lr(truncated_cubic(Rational(1))));
    pool.push_back(der_phi_hom_lr(truncated_cubic(Rational(3))));
    return pool;
}

bool anchor_is_zero(const HomLieRinehart& l) {
    for (int i = 0; i < l.rank; ++i)
        if (!l.rho(unit_vec(l.rank, i)).is_zero()) return false;
    return true;
}

} // namespace

std::vector<LMInstance> randomized_lm_instances(int count, unsigned seed) {
    Lcg rng(seed);
    std::vector<LMInstance> out;
    int salt = 0;
    while (int(out.size()) < count) {
        std::vector<HomLieRinehart> pool = base_pool(rng);
        for (const auto& l : pool) {
            if (int(out.size()) >= count) break;
            ++salt;
            std::string tag = "instance-" + std::to_string(salt);
            // M = (A, phi) always works.
            out.push_back({tag + "-coeffA", l, coefficients_in_a(l)});
            if (int(out.size()) >= count) break;
            if (l.rank <= 3 && anchor_is_zero(l)) {
                ++salt;
                out.push_back({tag + "-adjoint", l, adjoint_module(l)});
                if (int(out.size()) >= count) break;
            }
            if (l.algebra.dim == 1) {
                ++salt;
                out.push_back({tag + "-trivial", l, trivial_module(l, pick_scalar(rng))});
            }
        }
    }
    return out;
}

std::vector<FreeInstance> free_instances() {
    std::vector<FreeInstance> out;
    auto std_basis = [](const HomLieRinehart& l) {
        std::vector<Vec> b;
        for (int i = 0; i < l.rank; ++i) b.push_back(unit_vec(l.rank, i));
        return b;
    };
    {
        HomLieRinehart l = hom_lie_as_hom_lr(sl2());
        out.push_back({"sl2-over-Q", l, std_basis(l)});
    }
    {
        HomLieRinehart l = hom_lie_as_hom_lr(sl2_composed(Rational(3)));
        out.push_back({"sl2-lambda3-over-Q", l, std_basis(l)});
    }
    {
        HomLieRinehart l = hom_lie_as_hom_lr(heisenberg());
        out.push_back({"heisenberg-over-Q", l, std_basis(l)});
    }
    {
        // rank-1 free module over the dual numbers with a derivation action
        HomLieRinehart l = derivation_action_example();
        std::vector<Vec> basis{unit_vec(2, 0)}; // 1 (x) e
        out.push_back({"derivation-action-dual", l, basis});
    }
    {
        // rank-2 with twisted phi, zero anchor
        HomLieRinehart l = transformation_zero_rho(dual_numbers(Rational(2)),
                                                   abelian_lie(2, diag({Rational(2), Rational(1)})));
        std::vector<Vec> basis{unit_vec(4, 0), unit_vec(4, 1)}; // 1 (x) x_i
        out.push_back({"abelian2-dual-twisted", l, basis});
    }
    {
        // rank-2 nonabelian over the dual numbers
        HomLieRinehart l = transformation_zero_rho(dual_numbers(Rational(1)), affine2());
        std::vector<Vec> basis{unit_vec(4, 0), unit_vec(4, 1)};
        out.push_back({"affine2-dual", l, basis});
    }
    {
        // rank-3 over a 2-dimensional algebra: A (x) sl2 with zero rho
        HomLieRinehart l = transformation_zero_rho(dual_numbers(Rational(1)), sl2());
        std::vector<Vec> basis{unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)};
        out.push_back({"sl2-dual", l, basis});
    }
    return out;
}

} // namespace homlr::testing
