// Python bindings for the main operations. Documents travel as JSON strings
// in the same schema the CLI reads; reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homlr/gerstenhaber.hpp"
#include "homlr/json_io.hpp"

namespace py = pybind11;
using namespace homlr;

namespace {

SignConvention conv_of(const std::string& s) {
    if (s == "signed") return SignConvention::signed_convention;
    if (s == "printed") return SignConvention::printed;
    throw SchemaError("sign convention must be 'signed' or 'printed'");
}

py::dict report_to_dict(const Report& rep) {
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict e;
        e["name"] = c.name;
        e["pass"] = c.passed;
        if (c.warning) e["warning"] = true;
        if (!c.passed && !c.witness.empty()) e["witness"] = c.witness;
        checks.append(e);
    }
    py::dict d;
    d["checks"] = checks;
    d["passed"] = rep.passed_count();
    d["total"] = rep.total();
    d["all_passed"] = rep.all_passed();
    return d;
}

py::list matrix_to_py(const Matrix& m) {
    py::list rows;
    for (int r = 0; r < m.rows(); ++r) {
        py::list row;
        for (int c = 0; c < m.cols(); ++c) row.append(m.at(r, c).str());
        rows.append(row);
    }
    return rows;
}

HomLieRinehart hom_lr_of(const std::string& text) {
    AlgebraSpec s = parse_spec(text);
    if (s.kind != "hom_lr") throw SchemaError("expected kind hom_lr");
    return *s.hom_lr;
}

HLRModule module_of(const std::string& text) {
    AlgebraSpec s = parse_spec(text);
    if (s.kind != "module") throw SchemaError("expected kind module");
    return *s.module;
}

Cochain cochain_of(const std::string& text, const HomLieRinehart& l, const HLRModule& m) {
    AlgebraSpec s = parse_spec(text);
    if (s.kind != "cochain") throw SchemaError("expected kind cochain");
    if (s.cochain_rank != l.rank || s.cochain_module_dim != m.dim)
        throw DimensionMismatch("cochain carrier dims do not match");
    return *s.cochain;
}

py::dict check_doc(const std::string& text) {
    AlgebraSpec s = parse_spec(text);
    Report rep;
    if (s.kind == "hom_lie")
        rep = check_hom_lie(*s.hom_lie);
    else if (s.kind == "comm_algebra")
        rep = check_comm_algebra(*s.comm_algebra);
    else if (s.kind == "hom_lr")
        rep = check_hom_lr(*s.hom_lr);
    else if (s.kind == "module")
        rep = check_module(*s.module);
    else if (s.kind == "extension")
        rep = check_extension(*s.extension);
    else if (s.kind == "poisson")
        rep = check_poisson(*s.poisson);
    else
        throw SchemaError("no checker for kind '" + s.kind + "'");
    py::dict d = report_to_dict(rep);
    d["kind"] = s.kind;
    return d;
}

int cohomology_dim_py(const std::string& base, const std::string& module, int degree,
                      const std::string& conv) {
    HomLieRinehart l = hom_lr_of(base);
    return cohomology_dim(l, module_of(module), degree, conv_of(conv));
}

py::list coboundary_py(const std::string& base, const std::string& module, int degree,
                       const std::string& conv) {
    HomLieRinehart l = hom_lr_of(base);
    return matrix_to_py(coboundary_matrix(l, module_of(module), degree, conv_of(conv)));
}

py::list center_py(const std::string& base) {
    py::list out;
    for (const Vec& v : center(hom_lr_of(base))) {
        py::list row;
        for (const auto& x : v) row.append(x.str());
        out.append(row);
    }
    return out;
}

py::dict extension_roundtrip_py(const std::string& base, const std::string& module,
                                const std::string& cocycle) {
    HomLieRinehart l = hom_lr_of(base);
    HLRModule m = module_of(module);
    Cochain f = cochain_of(cocycle, l, m);
    ExtensionData ext = extension_from_cocycle(l, m, f);
    Cochain back = cocycle_from_extension(ext);
    py::dict d;
    d["total_rank"] = ext.total.rank;
    d["roundtrip_exact"] = (back == f);
    d["extension_checks"] = report_to_dict(check_extension(ext));
    return d;
}

py::dict gerstenhaber_py(const std::string& base, int top, const std::string& conv) {
    AlgebraSpec s = parse_spec(base);
    if (s.kind != "hom_lr") throw SchemaError("expected kind hom_lr");
    std::vector<Vec> basis;
    if (s.a_basis) {
        basis = *s.a_basis;
    } else if (s.hom_lr->algebra.dim == 1) {
        for (int i = 0; i < s.hom_lr->rank; ++i) basis.push_back(unit_vec(s.hom_lr->rank, i));
    } else {
        throw NotFreeModule("document must declare a_basis when dim A > 1");
    }
    if (top <= 0) top = int(basis.size());
    GradedAlgebra g = functor_G(*s.hom_lr, basis, top, conv_of(conv));
    py::dict d = report_to_dict(check_hom_gerstenhaber(g));
    py::list dims;
    for (int k : g.dims) dims.append(k);
    d["dims"] = dims;
    return d;
}

py::dict bv_check_py(const std::string& doc, int top) {
    AlgebraSpec s = parse_spec(doc);
    if (s.kind != "hom_lie") throw SchemaError("expected kind hom_lie");
    if (top <= 0) top = s.hom_lie->dim;
    return report_to_dict(check_bv_identity(bv_generator(*s.hom_lie, top)));
}

py::dict kaehler_py(const std::string& doc) {
    AlgebraSpec s = parse_spec(doc);
    if (s.kind != "comm_algebra") throw SchemaError("expected kind comm_algebra");
    PhiDifferentials d = universal_phi_derivation(*s.comm_algebra);
    py::dict out;
    out["dim_i"] = d.dim_i;
    out["dim_i2"] = int(d.i2_basis.size());
    out["dim_differentials"] = d.space_dim;
    out["d_matrix"] = matrix_to_py(d.d_map);
    return out;
}

py::dict poisson_py(const std::string& doc) {
    AlgebraSpec s = parse_spec(doc);
    if (s.kind != "poisson") throw SchemaError("expected kind poisson");
    HomLieRinehart lr = poisson_hom_lr(*s.poisson);
    py::dict out;
    out["rank"] = lr.rank;
    out["hom_lr_checks"] = report_to_dict(check_hom_lr(lr));
    return out;
}

} // namespace

PYBIND11_MODULE(_homlr, m) {
    m.doc() = "hom-Lie-Rinehart computer algebra (exact rational arithmetic)";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<MathError>(m, "MathError");

    m.def("check", &check_doc, py::arg("document"),
          "Run the axiom checks for a JSON document of any supported kind.");
    m.def("cohomology_dim", &cohomology_dim_py, py::arg("base"), py::arg("module"),
          py::arg("degree"), py::arg("sign_convention") = "signed",
          "dim H^n_{hLR}(L; M) for a hom_lr base and a module document.");
    m.def("coboundary_matrix", &coboundary_py, py::arg("base"), py::arg("module"),
          py::arg("degree"), py::arg("sign_convention") = "signed",
          "Matrix of delta : C^n -> C^{n+1} as rational strings.");
    m.def("center", &center_py, py::arg("base"), "Basis of Z_A(L).");
    m.def("extension_roundtrip", &extension_roundtrip_py, py::arg("base"), py::arg("module"),
          py::arg("cocycle"),
          "Build the abelian extension of a 2-cocycle and read the cocycle back.");
    m.def("gerstenhaber_check", &gerstenhaber_py, py::arg("base"), py::arg("top") = 0,
          py::arg("sign_convention") = "signed",
          "Build wedge*_A L and run the hom-Gerstenhaber axiom checks.");
    m.def("bv_check", &bv_check_py, py::arg("hom_lie"), py::arg("top") = 0,
          "d^2 = 0 and the generating identity for the BV operator.");
    m.def("kaehler", &kaehler_py, py::arg("comm_algebra"),
          "Universal phi-derivation: dims of I, I^2 and I/I^2 plus the d matrix.");
    m.def("poisson_hom_lr", &poisson_py, py::arg("poisson"),
          "Hom-Lie-Rinehart structure on D_A^phi from a Poisson algebra.");
}
