// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Usage: acceptance <corpus-dir> <cli-path>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homlr/gerstenhaber.hpp"
#include "homlr/json_io.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace homlr;
using namespace homlr::testing;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << criterion << ": " << detail << "\n";
    if (!pass) ++g_failures;
}

struct Cli {
    std::string path;
    // runs the CLI through the shell; returns exit status, fills stdout
    int run(const std::string& args, std::string* out) const {
        std::string cmd = path + " " + args + " 2>/dev/null";
        FILE* p = popen(cmd.c_str(), "r");
        if (!p) return -1;
        std::string acc;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0) acc.append(buf, n);
        int status = pclose(p);
        if (out) *out = acc;
        return WEXITSTATUS(status);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Cochain cocycle_from_coeffs(const CochainSpace& cs, const Vec& coeffs) {
    Cochain f{cs.degree, zero_vec(int(cs.ambient_dim))};
    for (size_t i = 0; i < cs.basis.size(); ++i)
        if (!coeffs[i].is_zero()) f.flat = f.flat + coeffs[i] * cs.basis[i].flat;
    return f;
}

// --- criterion 1: delta^2 = 0 -------------------------------------------------

void criterion_1() {
    auto instances = randomized_lm_instances(50, 2024);
    int composites = 0;
    bool ok = true;
    std::string why;
    for (const auto& inst : instances) {
        for (int n = 1; binomial(inst.l.rank, n + 2) > 0; ++n) {
            Matrix dn = coboundary_matrix(inst.l, inst.m, n);
            Matrix dn1 = coboundary_matrix(inst.l, inst.m, n + 1);
            ++composites;
            if (!(dn1 * dn).is_zero()) {
                ok = false;
                why = inst.name + " degree " + std::to_string(n);
            }
        }
    }
    // the printed convention must fail on sl2 with trivial coefficients
    HomLieRinehart s = hom_lie_as_hom_lr(sl2());
    HLRModule triv = trivial_module(s, Rational(1));
    Matrix p1 = coboundary_matrix(s, triv, 1, SignConvention::printed);
    Matrix p2 = coboundary_matrix(s, triv, 2, SignConvention::printed);
    bool printed_fails = !(p2 * p1).is_zero();
    report(1, ok && printed_fails && int(instances.size()) >= 50,
           "delta^2 = 0 on " + std::to_string(instances.size()) + " randomized instances (" +
               std::to_string(composites) + " composites), printed convention refuted on sl2" +
               (why.empty() ? "" : " [first failure: " + why + "]"));
}

// --- criterion 2: classical degeneration --------------------------------------

void criterion_2() {
    bool ok = true;
    std::string detail = "cohomology_dim vs brute-force CE:";
    for (const HomLieAlgebra& g : {sl2(), heisenberg()}) {
        HomLieRinehart base = hom_lie_as_hom_lr(g);
        HLRModule triv = trivial_module(base, Rational(1));
        Tensor3 theta0(g.dim, 1, 1);
        detail += (g.bracket == sl2().bracket) ? " sl2(" : " h3(";
        for (int n = 1; n <= 3; ++n) {
            int mine = cohomology_dim(base, triv, n);
            int oracle = ce_cohomology_dim(g, 1, theta0, n);
            ok = ok && (mine == oracle);
            detail += std::to_string(mine) + (n < 3 ? "," : ")");
        }
    }
    report(2, ok, detail);
}

// --- criteria 3 and 4: extension <-> cocycle ------------------------------------

void criterion_3() {
    auto pool = randomized_lm_instances(60, 77);
    int used = 0, cocycles = 0;
    bool ok = true;
    std::string why;
    for (const auto& inst : pool) {
        if (used >= 12) break;
        if (inst.l.rank < 2) continue;
        CochainSpace c2 = cochain_space(inst.l, inst.m, 2);
        if (c2.basis.empty()) continue;
        Matrix d2 = coboundary_matrix(inst.l, inst.m, 2);
        std::vector<Vec> kernel = kernel_basis(d2);
        if (kernel.empty()) continue;
        ++used;
        CochainSpace c1 = cochain_space(inst.l, inst.m, 1);
        for (const Vec& k : kernel) {
            ++cocycles;
            Cochain f = cocycle_from_coeffs(c2, k);
            ExtensionData ext = extension_from_cocycle(inst.l, inst.m, f);
            if (!(cocycle_from_extension(ext) == f)) {
                ok = false;
                why = inst.name + ": canonical section roundtrip";
                continue;
            }
            if (!c1.basis.empty()) {
                Cochain g = c1.basis[0];
                if (c1.basis.size() > 1) g.flat = g.flat + Rational(2) * c1.basis[1].flat;
                Matrix gm(inst.m.dim, inst.l.rank);
                for (int x = 0; x < inst.l.rank; ++x)
                    for (int c = 0; c < inst.m.dim; ++c)
                        gm.at(c, x) = g.flat[size_t(x) * inst.m.dim + c];
                ExtensionData pert = ext;
                pert.section = *ext.section + ext.inj * gm;
                Cochain back = cocycle_from_extension(pert);
                Cochain dg = coboundary_apply(inst.l, inst.m, g);
                if (!(back.flat == f.flat + dg.flat)) {
                    ok = false;
                    why = inst.name + ": perturbed section";
                }
            }
        }
    }
    report(3, ok && used >= 10,
           "extension <-> cocycle roundtrip on " + std::to_string(used) + " instances, " +
               std::to_string(cocycles) + " spanning cocycles" +
               (why.empty() ? "" : " [" + why + "]"));
}

void criterion_4() {
    bool ok = true;
    int mutated = 0, intact = 0;
    std::string why;
    auto pool = randomized_lm_instances(60, 99);
    for (const auto& inst : pool) {
        if (mutated >= 6 && intact >= 6) break;
        if (inst.l.rank < 2) continue;
        CochainSpace c2 = cochain_space(inst.l, inst.m, 2);
        if (c2.basis.empty()) continue;
        Matrix d2 = coboundary_matrix(inst.l, inst.m, 2);
        for (const auto& b : c2.basis) {
            Cochain f{2, b.flat};
            bool is_z = is_zero(coboundary_apply(inst.l, inst.m, f).flat);
            HomLieRinehart cand = abelian_extension_candidate(inst.l, inst.m, f);
            bool jacobi = check_hom_lie(cand.underlying_hom_lie()).all_passed();
            if (jacobi != is_z) {
                ok = false;
                why = inst.name;
            }
            bool threw = false;
            try {
                extension_from_cocycle(inst.l, inst.m, f);
            } catch (const NotACocycle&) {
                threw = true;
            }
            if (threw == is_z) {
                ok = false;
                why = inst.name + " (throw mismatch)";
            }
            (is_z ? intact : mutated)++;
        }
    }
    report(4, ok && mutated > 0 && intact > 0,
           "hom-Jacobi of the total space fails exactly when delta f != 0 (" +
               std::to_string(intact) + " cocycles, " + std::to_string(mutated) +
               " non-cocycles)" + (why.empty() ? "" : " [" + why + "]"));
}

// --- criterion 5: automorphism <-> 1-cocycle ------------------------------------

void criterion_5() {
    HomLieRinehart h = hom_lie_as_hom_lr(heisenberg());
    HLRModule triv = trivial_module(h, Rational(1));
    CochainSpace c2 = cochain_space(h, triv, 2);
    Matrix d2 = coboundary_matrix(h, triv, 2);
    Cochain f = cocycle_from_coeffs(c2, kernel_basis(d2)[1]);
    ExtensionData ext = extension_from_cocycle(h, triv, f);

    CochainSpace c1 = cochain_space(h, triv, 1);
    Matrix d1 = coboundary_matrix(h, triv, 1);
    std::vector<Cochain> ones;
    for (const Vec& k : kernel_basis(d1)) ones.push_back(cocycle_from_coeffs(c1, k));

    bool ok = int(ones.size()) >= 1;
    std::string why = ok ? "" : "dim H^1 < 1";
    for (const Cochain& psi : ones) {
        Matrix fmat = automorphism_from_cocycle(ext, psi);
        Report morph = check_hom_lr_morphism(Matrix::identity(1), fmat, ext.total, ext.total);
        if (!morph.all_passed() || !(ext.proj * fmat == ext.proj) ||
            !(fmat * ext.inj == ext.inj) ||
            !(fmat * ext.total.alpha == ext.total.alpha * fmat)) {
            ok = false;
            why = "automorphism checks";
        }
        Cochain back = cocycle_from_automorphism(ext, fmat);
        if (!(back == psi)) {
            ok = false;
            why = "matrix -> cocycle roundtrip";
        }
        if (!(automorphism_from_cocycle(ext, back) == fmat)) {
            ok = false;
            why = "cocycle -> matrix roundtrip";
        }
    }
    // composition corresponds to addition across the spanning set
    for (size_t i = 0; i < ones.size() && ok; ++i)
        for (size_t j = 0; j < ones.size() && ok; ++j) {
            Cochain sum{1, ones[i].flat + ones[j].flat};
            if (!(automorphism_from_cocycle(ext, ones[i]) *
                      automorphism_from_cocycle(ext, ones[j]) ==
                  automorphism_from_cocycle(ext, sum))) {
                ok = false;
                why = "composition vs addition";
            }
        }
    report(5, ok,
           "automorphism <-> 1-cocycle bijection on the h3 central extension, dim ker(delta^1) = " +
               std::to_string(ones.size()) + (why.empty() ? "" : " [" + why + "]"));
}

// --- criterion 6: F o G --------------------------------------------------------

void criterion_6() {
    bool ok = true;
    std::string why;
    int count = 0;
    for (const auto& inst : free_instances()) {
        int top = std::max<size_t>(2, inst.a_basis.size());
        GradedAlgebra g = functor_G(inst.l, inst.a_basis, top);
        Report chk = check_hom_gerstenhaber(g);
        if (!chk.all_passed()) {
            ok = false;
            why = inst.name + ": " + chk.first_failure();
            continue;
        }
        HomLieRinehart back = functor_F(g);
        bool equal = back.algebra.dim == inst.l.algebra.dim &&
                     back.algebra.mult == inst.l.algebra.mult &&
                     back.algebra.unit == inst.l.algebra.unit &&
                     back.algebra.phi == inst.l.algebra.phi && back.rank == inst.l.rank &&
                     back.action == inst.l.action && back.bracket == inst.l.bracket &&
                     back.alpha == inst.l.alpha && back.anchor == inst.l.anchor;
        if (!equal) {
            ok = false;
            why = inst.name + ": F(G(L)) != L";
        }
        ++count;
    }
    report(6, ok,
           "F(G(L)) = L as tensors and G(L) passes the axioms on " + std::to_string(count) +
               " free instances" + (why.empty() ? "" : " [" + why + "]"));
}

// --- criterion 7: BV -----------------------------------------------------------

void criterion_7() {
    bool ok = true;
    std::string why;
    for (const HomLieAlgebra& g : {sl2(), sl2_composed(Rational(3))}) {
        BVOperator op = bv_generator(g, 3);
        Report r = check_bv_identity(op);
        if (!r.all_passed()) {
            ok = false;
            why = r.first_failure();
        }
    }
    report(7, ok, std::string("BV generator: d^2 = 0 and the generating identity on sl2 and its "
                              "lambda = 3 twist, degrees <= 3") +
                      (why.empty() ? "" : " [" + why + "]"));
}

// --- criterion 8: differentials ------------------------------------------------

void criterion_8() {
    struct Case {
        CommAlgebra a;
        const char* name;
    };
    std::vector<Case> cases = {{q_algebra(), "Q"},
                               {dual_numbers(Rational(1)), "dual/Id"},
                               {dual_numbers(Rational(2)), "dual/2x"},
                               {q_times_q(), "QxQ"},
                               {truncated_cubic(Rational(1)), "cubic/Id"},
                               {truncated_cubic(Rational(2)), "cubic/2x"}};
    bool ok = true;
    std::string detail = "dim D_A^phi (= presentation):";
    for (const auto& c : cases) {
        PhiDifferentials d = universal_phi_derivation(c.a);
        int pres = kaehler_presentation_dim(c.a);
        // Hom_A(D, A) via the A-linearity system
        const int un = c.a.dim * d.space_dim;
        std::vector<Vec> rows;
        for (int p = 0; p < c.a.dim; ++p)
            for (int k = 0; k < d.space_dim; ++k) {
                Vec aw = d.act(unit_vec(c.a.dim, p), unit_vec(d.space_dim, k));
                for (int out = 0; out < c.a.dim; ++out) {
                    Vec row(un);
                    for (int j = 0; j < d.space_dim; ++j) row[out * d.space_dim + j] = aw[j];
                    for (int r = 0; r < c.a.dim; ++r)
                        row[r * d.space_dim + k] -= c.a.mult.get(p, r, out);
                    rows.push_back(std::move(row));
                }
            }
        int hom_dim =
            un - (rows.empty() ? 0 : rank(Matrix::from_rows(rows, un)));
        int der_dim = int(phi_derivations_basis(c.a).size());
        bool this_ok = d.space_dim == pres && hom_dim == der_dim;
        ok = ok && this_ok;
        detail += std::string(" ") + c.name + "=" + std::to_string(d.space_dim) +
                  (this_ok ? "" : "(MISMATCH)");
    }
    report(8, ok, detail);
}

// --- criterion 9: Poisson-induced structure -------------------------------------

void criterion_9() {
    bool ok = true;
    std::string why;
    // trivial-bracket instances
    for (const CommAlgebra& a : {dual_numbers(Rational(1)), dual_numbers(Rational(2)),
                                 truncated_cubic(Rational(2)), planar_nilpotent(Rational(1))}) {
        PoissonStructure ps = poisson_structure(poisson_trivial(a));
        if (!check_hom_lr(ps.hlr).all_passed()) {
            ok = false;
            why = "trivial-bracket instance";
        }
    }
    // solver-found nonzero instances, plus the Lie-derivative rewriting
    for (const Rational& c : {Rational(1), Rational(2)}) {
        PoissonAlgebra p = poisson_planar(c);
        // certify: the bracket solves the constraint system and Jacobi
        auto space = poisson_bracket_space(p.base);
        if (space.empty() || !poisson_jacobi_holds(p.base, p.pbracket)) {
            ok = false;
            why = "solver certificate";
        }
        PoissonStructure ps = poisson_structure(p);
        if (!check_hom_lr(ps.hlr).all_passed()) {
            ok = false;
            why = "poisson_hom_lr checks";
        }
        const PhiDifferentials& d = ps.differentials;
        const int m = d.space_dim, n = p.base.dim;
        std::vector<Matrix> pistar;
        for (int k = 0; k < m; ++k) {
            Matrix xk(n, n);
            for (int cc = 0; cc < n; ++cc) {
                Vec dec = d.d_of(unit_vec(n, cc));
                for (int l = 0; l < m; ++l)
                    for (int r = 0; r < n; ++r) xk.at(r, cc) += dec[l] * ps.pi.get(k, l, r);
            }
            pistar.push_back(xk);
        }
        for (int k = 0; k < m && ok; ++k)
            for (int l = 0; l < m && ok; ++l) {
                Vec lhs = ps.hlr.br(unit_vec(m, k), unit_vec(m, l));
                Vec pival = zero_vec(n);
                for (int r = 0; r < n; ++r) pival[r] = ps.pi.get(k, l, r);
                Vec rhs = lie_derivative(d, pistar[k], unit_vec(m, l)) -
                          lie_derivative(d, pistar[l], unit_vec(m, k)) - d.d_of(pival);
                if (!(lhs == rhs)) {
                    ok = false;
                    why = "Lie-derivative rewriting";
                }
            }
    }
    report(9, ok, std::string("Poisson case: poisson_hom_lr passes all checks; bracket = "
                              "L_{pi*} rewriting exact on all basis pairs") +
                      (why.empty() ? "" : " [" + why + "]"));
}

// --- criterion 10: corpus stability ---------------------------------------------

void criterion_10(const std::string& corpus, const Cli& cli) {
    struct Fixture {
        std::string name;
        std::string args;
    };
    std::vector<std::string> check_docs = {
        "abelian2",       "adjoint_module_h3", "der_dual",
        "dual_numbers",   "dual_numbers_2x",   "h3_cocycle",
        "h3_cocycle_shifted", "h3_zero_cocycle", "heisenberg",
        "heisenberg_hlr",
        "heisenberg_twisted", "planar",      "poisson_planar",
        "poisson_planar_2x",  "qx3",           "qx3_2x",
        "qxq",            "sl2",               "sl2_hlr",
        "sl2_lambda3",    "transformation_dual", "trivial_module_h3",
        "trivial_module_sl2"};
    std::vector<Fixture> fixtures;
    for (const auto& d : check_docs)
        fixtures.push_back({"check_" + d, "check " + corpus + "/" + d + ".json"});
    fixtures.push_back({"cohomology_h3_deg1", "cohomology --degree 1 " + corpus +
                                                  "/heisenberg_hlr.json " + corpus +
                                                  "/trivial_module_h3.json"});
    fixtures.push_back({"cohomology_h3_deg2", "cohomology --degree 2 " + corpus +
                                                  "/heisenberg_hlr.json " + corpus +
                                                  "/trivial_module_h3.json"});
    fixtures.push_back({"cohomology_sl2_adj_deg2", "cohomology --degree 2 " + corpus +
                                                       "/sl2_hlr.json " + corpus +
                                                       "/trivial_module_sl2.json"});
    fixtures.push_back({"center_h3", "center " + corpus + "/heisenberg_hlr.json"});
    fixtures.push_back({"center_sl2", "center " + corpus + "/sl2_hlr.json"});
    fixtures.push_back({"gerstenhaber_sl2", "gerstenhaber " + corpus + "/sl2_hlr.json"});
    fixtures.push_back(
        {"gerstenhaber_transformation", "gerstenhaber " + corpus + "/transformation_dual.json"});
    fixtures.push_back({"bv_sl2", "bv-check " + corpus + "/sl2.json"});
    fixtures.push_back({"bv_sl2_lambda3", "bv-check " + corpus + "/sl2_lambda3.json"});
    fixtures.push_back({"kaehler_dual", "kaehler " + corpus + "/dual_numbers.json"});
    fixtures.push_back({"kaehler_qx3_2x", "kaehler " + corpus + "/qx3_2x.json"});
    fixtures.push_back({"kaehler_qxq", "kaehler " + corpus + "/qxq.json"});
    fixtures.push_back({"extend_h3", "extend --cocycle " + corpus + "/h3_cocycle.json " + corpus +
                                         "/heisenberg_hlr.json " + corpus +
                                         "/trivial_module_h3.json"});
    fixtures.push_back({"classify_shifted", "classify --left " + corpus + "/h3_cocycle.json " +
                                                "--right " + corpus + "/h3_cocycle_shifted.json " +
                                                corpus + "/heisenberg_hlr.json " + corpus +
                                                "/trivial_module_h3.json"});
    fixtures.push_back({"classify_vs_semidirect",
                        "classify --left " + corpus + "/h3_cocycle.json --right " + corpus +
                            "/h3_zero_cocycle.json " + corpus + "/heisenberg_hlr.json " + corpus +
                            "/trivial_module_h3.json"});
    fixtures.push_back({"lie_planar", "lie-derivative " + corpus + "/planar.json " + corpus +
                                          "/planar_xder.json"});

    bool ok = true;
    std::string why;
    int compared = 0;
    for (const auto& f : fixtures) {
        std::string expected = slurp(corpus + "/expected/" + f.name + ".out");
        if (expected.empty()) {
            ok = false;
            why = f.name + " (missing fixture)";
            continue;
        }
        std::string got;
        cli.run(f.args, &got);
        ++compared;
        if (got != expected) {
            ok = false;
            why = f.name;
        }
    }
    // the elimination cap environment variable guards blowups (exit 2)
    {
        Cli capped{"HOMLR_MAX_ELIM_DIM=1 " + cli.path};
        std::string out;
        int code = capped.run("cohomology --degree 2 " + corpus + "/heisenberg_hlr.json " +
                                  corpus + "/trivial_module_h3.json",
                              &out);
        if (code != 2) {
            ok = false;
            why = "HOMLR_MAX_ELIM_DIM cap did not trip (exit " + std::to_string(code) + ")";
        }
    }
    report(10, ok,
           "corpus stability: " + std::to_string(compared) +
               " expected-report fixtures reproduced bit-for-bit" +
               (why.empty() ? "" : " [first mismatch: " + why + "]"));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <corpus-dir> <cli-path>\n";
        return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    std::string corpus = argv[1];
    Cli cli{argv[2]};

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(corpus, cli);

    auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << (g_failures == 0 ? "PASS" : "FAIL") << " summary: " << (10 - g_failures)
              << "/10 criteria, " << secs << "s\n";
    return g_failures == 0 ? 0 : 1;
}
