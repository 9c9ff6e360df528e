// Regenerates the bundled corpus documents from the canonical constructions.
// Usage: homlr-gen-corpus <output-dir>

#include <fstream>
#include <iostream>

#include "homlr/json_io.hpp"
#include "instances.hpp"

using namespace homlr;
using namespace homlr::testing;

namespace {

void write(const std::string& dir, const std::string& name, const json& doc) {
    std::ofstream out(dir + "/" + name);
    if (!out) {
        std::cerr << "cannot write " << dir << "/" << name << "\n";
        std::exit(1);
    }
    out << doc.dump(2) << "\n";
    std::cout << "wrote " << name << "\n";
}

json hom_lie_doc(const HomLieAlgebra& g) {
    AlgebraSpec s;
    s.kind = "hom_lie";
    s.hom_lie = g;
    return serialize_spec(s);
}

json comm_algebra_doc(const CommAlgebra& a) {
    AlgebraSpec s;
    s.kind = "comm_algebra";
    s.comm_algebra = a;
    return serialize_spec(s);
}

json hom_lr_doc(const HomLieRinehart& l, const std::vector<Vec>* basis = nullptr) {
    AlgebraSpec s;
    s.kind = "hom_lr";
    s.hom_lr = l;
    if (basis) s.a_basis = *basis;
    return serialize_spec(s);
}

json module_doc(const HLRModule& m) {
    AlgebraSpec s;
    s.kind = "module";
    s.module = m;
    return serialize_spec(s);
}

json poisson_doc(const PoissonAlgebra& p) {
    AlgebraSpec s;
    s.kind = "poisson";
    s.poisson = p;
    return serialize_spec(s);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: homlr-gen-corpus <output-dir>\n";
        return 2;
    }
    std::string dir = argv[1];

    write(dir, "abelian2.json", hom_lie_doc(abelian_lie(2, Matrix::identity(2))));
    write(dir, "sl2.json", hom_lie_doc(sl2()));
    write(dir, "sl2_lambda3.json", hom_lie_doc(sl2_composed(Rational(3))));
    write(dir, "heisenberg.json", hom_lie_doc(heisenberg()));
    write(dir, "heisenberg_twisted.json",
          hom_lie_doc(heisenberg_composed(Rational(2), Rational(3))));

    write(dir, "dual_numbers.json", comm_algebra_doc(dual_numbers(Rational(1))));
    write(dir, "dual_numbers_2x.json", comm_algebra_doc(dual_numbers(Rational(2))));
    write(dir, "qxq.json", comm_algebra_doc(q_times_q()));
    write(dir, "qx3.json", comm_algebra_doc(truncated_cubic(Rational(1))));
    write(dir, "qx3_2x.json", comm_algebra_doc(truncated_cubic(Rational(2))));
    write(dir, "planar.json", comm_algebra_doc(planar_nilpotent(Rational(1))));

    {
        HomLieRinehart s = hom_lie_as_hom_lr(sl2());
        std::vector<Vec> basis{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)};
        write(dir, "sl2_hlr.json", hom_lr_doc(s, &basis));
        HomLieRinehart h = hom_lie_as_hom_lr(heisenberg());
        write(dir, "heisenberg_hlr.json", hom_lr_doc(h, &basis));
        write(dir, "der_dual.json", hom_lr_doc(der_phi_hom_lr(dual_numbers(Rational(1)))));
        HomLieRinehart t = derivation_action_example();
        std::vector<Vec> tbasis{unit_vec(2, 0)};
        write(dir, "transformation_dual.json", hom_lr_doc(t, &tbasis));

        write(dir, "trivial_module_sl2.json", module_doc(trivial_module(s, Rational(1))));
        write(dir, "trivial_module_h3.json", module_doc(trivial_module(h, Rational(1))));
        write(dir, "adjoint_module_h3.json", module_doc(adjoint_module(h)));

        // a representative of a nonzero class in H^2(h3; Q): x ^ z -> 1
        json cochain;
        cochain["kind"] = "cochain";
        cochain["degree"] = 2;
        cochain["rank"] = 3;
        cochain["module_dim"] = 1;
        cochain["values"] = json::array({json::array({json::array({0, 2}), json::array({"1"})})});
        write(dir, "h3_cocycle.json", cochain);

        // the zero cocycle (the semidirect-product class)
        json zero;
        zero["kind"] = "cochain";
        zero["degree"] = 2;
        zero["rank"] = 3;
        zero["module_dim"] = 1;
        zero["values"] = json::array();
        write(dir, "h3_zero_cocycle.json", zero);

        // a coboundary-shifted representative of the same class: + delta(g)
        // with g = x* (g(x) = 1), i.e. delta g (u, v) = -g([u, v])
        json cochain2;
        cochain2["kind"] = "cochain";
        cochain2["degree"] = 2;
        cochain2["rank"] = 3;
        cochain2["module_dim"] = 1;
        cochain2["values"] = json::array({json::array({json::array({0, 2}), json::array({"1"})}),
                                          json::array({json::array({0, 1}), json::array({"-1"})})});
        write(dir, "h3_cocycle_shifted.json", cochain2);
    }

    write(dir, "poisson_planar.json", poisson_doc(poisson_planar(Rational(1))));
    write(dir, "poisson_planar_2x.json", poisson_doc(poisson_planar(Rational(2))));

    {
        // phi-derivation X = x d/dx of the planar algebra, for lie-derivative
        json xder;
        xder["matrix"] = json::array({json::array({"0", "0", "0"}),
                                      json::array({"0", "1", "0"}),
                                      json::array({"0", "0", "0"})});
        write(dir, "planar_xder.json", xder);
    }

    return 0;
}
