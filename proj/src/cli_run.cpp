#include "homlr/cli_run.hpp"

#include <iostream>
#include <fstream>

#include "homlr/gerstenhaber.hpp"
#include "homlr/json_io.hpp"

namespace homlr::cli {

namespace {

struct Args {
    std::string command;
    std::vector<std::string> positional;
    SignConvention conv = SignConvention::signed_convention;
    int degree = -1;
    int top = -1;
    std::string cocycle_file, left_file, right_file, out_file;
};

int parse_int_flag(const std::string& v, const char* flag) {
    try {
        size_t pos = 0;
        int value = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return value;
    } catch (const std::exception&) {
        throw SchemaError(std::string(flag) + " needs an integer, got '" + v + "'");
    }
}

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    if (argv.empty()) throw SchemaError("no command given");
    a.command = argv[0];
    for (size_t i = 1; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        auto next = [&](const char* flag) -> std::string {
            if (i + 1 >= argv.size()) throw SchemaError(std::string(flag) + " needs a value");
            return argv[++i];
        };
        if (s == "--sign-convention") {
            std::string v = next("--sign-convention");
            if (v == "signed")
                a.conv = SignConvention::signed_convention;
            else if (v == "printed")
                a.conv = SignConvention::printed;
            else
                throw SchemaError("--sign-convention must be 'signed' or 'printed'");
        } else if (s == "--degree") {
            a.degree = parse_int_flag(next("--degree"), "--degree");
        } else if (s == "--top") {
            a.top = parse_int_flag(next("--top"), "--top");
        } else if (s == "--cocycle") {
            a.cocycle_file = next("--cocycle");
        } else if (s == "--left") {
            a.left_file = next("--left");
        } else if (s == "--right") {
            a.right_file = next("--right");
        } else if (s == "--out") {
            a.out_file = next("--out");
        } else if (!s.empty() && s[0] == '-') {
            throw SchemaError("unknown flag '" + s + "'");
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

json report_to_json(const Report& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.passed;
        if (c.warning) e["warning"] = true;
        if (!c.passed && !c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    json j;
    j["checks"] = checks;
    j["summary"] = {{"passed", rep.passed_count()}, {"total", rep.total()}};
    return j;
}

const std::string& positional(const Args& a, size_t i, const char* what) {
    if (i >= a.positional.size()) throw SchemaError(std::string("missing argument: ") + what);
    return a.positional[i];
}

HomLieRinehart load_hom_lr(const std::string& path, std::optional<std::vector<Vec>>* basis = nullptr) {
    AlgebraSpec s = load_spec_file(path);
    if (s.kind != "hom_lr") throw SchemaError(path + ": expected kind hom_lr");
    if (basis) *basis = s.a_basis;
    return *s.hom_lr;
}

HLRModule load_module(const std::string& path, const HomLieRinehart& base) {
    AlgebraSpec s = load_spec_file(path);
    if (s.kind != "module") throw SchemaError(path + ": expected kind module");
    HLRModule m = *s.module;
    if (!(m.base.algebra == base.algebra) || m.base.rank != base.rank ||
        m.base.bracket != base.bracket || m.base.alpha != base.alpha ||
        m.base.anchor != base.anchor || m.base.action != base.action)
        throw SchemaError(path + ": module base differs from the base document");
    return m;
}

Cochain load_cochain(const std::string& path, const HomLieRinehart& base, const HLRModule& m) {
    AlgebraSpec s = load_spec_file(path);
    if (s.kind != "cochain") throw SchemaError(path + ": expected kind cochain");
    if (s.cochain_rank != base.rank || s.cochain_module_dim != m.dim)
        throw DimensionMismatch(path + ": cochain carrier dims do not match base/module");
    return *s.cochain;
}

json cmd_check(const Args& a) {
    AlgebraSpec s = load_spec_file(positional(a, 0, "input file"));
    json out;
    out["command"] = "check";
    out["kind"] = s.kind;
    Report rep;
    if (s.kind == "hom_lie") {
        rep = check_hom_lie(*s.hom_lie);
    } else if (s.kind == "comm_algebra") {
        rep = check_comm_algebra(*s.comm_algebra);
    } else if (s.kind == "hom_lr") {
        rep = check_hom_lr(*s.hom_lr);
    } else if (s.kind == "module") {
        rep = check_module(*s.module);
    } else if (s.kind == "extension") {
        rep = check_extension(*s.extension);
    } else if (s.kind == "poisson") {
        rep = check_poisson(*s.poisson);
    } else if (s.kind == "cochain") {
        rep.add("schema_valid", true);
    } else {
        throw SchemaError("no checker for kind '" + s.kind + "'");
    }
    out.update(report_to_json(rep));
    return out;
}

json cmd_cohomology(const Args& a) {
    if (a.degree < 1) throw SchemaError("--degree must be >= 1");
    HomLieRinehart base = load_hom_lr(positional(a, 0, "base file"));
    HLRModule mod = load_module(positional(a, 1, "module file"), base);
    Report rep;
    rep.merge("base", check_hom_lr(base));
    rep.merge("module", check_module(mod));
    json out;
    out["command"] = "cohomology";
    out["degree"] = a.degree;
    if (rep.all_passed()) out["cohomology_dim"] = cohomology_dim(base, mod, a.degree, a.conv);
    out.update(report_to_json(rep));
    return out;
}

json cmd_extend(const Args& a) {
    if (a.cocycle_file.empty()) throw SchemaError("extend needs --cocycle");
    HomLieRinehart base = load_hom_lr(positional(a, 0, "base file"));
    HLRModule mod = load_module(positional(a, 1, "module file"), base);
    Cochain f = load_cochain(a.cocycle_file, base, mod);
    ExtensionData ext = extension_from_cocycle(base, mod, f, a.conv);
    Report rep = check_extension(ext);
    rep.merge("total", check_hom_lr(ext.total));
    json out;
    out["command"] = "extend";
    out["total_rank"] = ext.total.rank;
    out.update(report_to_json(rep));
    if (!a.out_file.empty()) {
        AlgebraSpec s;
        s.kind = "extension";
        s.extension = ext;
        std::ofstream of(a.out_file);
        if (!of) throw SchemaError("cannot write '" + a.out_file + "'");
        of << serialize_spec(s).dump(2) << "\n";
    }
    return out;
}

json cmd_classify(const Args& a) {
    HomLieRinehart base = load_hom_lr(positional(a, 0, "base file"));
    HLRModule mod = load_module(positional(a, 1, "module file"), base);
    if (a.left_file.empty() || a.right_file.empty())
        throw SchemaError("classify needs --left and --right");
    auto to_cocycle = [&](const std::string& path) {
        AlgebraSpec s = load_spec_file(path);
        if (s.kind == "cochain") {
            if (s.cochain_rank != base.rank || s.cochain_module_dim != mod.dim)
                throw DimensionMismatch(path + ": cochain carrier dims do not match");
            return *s.cochain;
        }
        if (s.kind == "extension") return cocycle_from_extension(*s.extension, a.conv);
        throw SchemaError(path + ": expected a cochain or extension document");
    };
    Cochain f1 = to_cocycle(a.left_file);
    Cochain f2 = to_cocycle(a.right_file);
    auto witness = extensions_cohomologous(base, mod, f1, f2, a.conv);
    json out;
    out["command"] = "classify";
    out["cohomologous"] = witness.has_value();
    if (witness) {
        AlgebraSpec s;
        s.kind = "cochain";
        s.cochain = *witness;
        s.cochain_rank = base.rank;
        s.cochain_module_dim = mod.dim;
        out["witness"] = serialize_spec(s);
    }
    Report rep;
    rep.add("both_cocycles", true);
    out.update(report_to_json(rep));
    return out;
}

json cmd_center(const Args& a) {
    HomLieRinehart base = load_hom_lr(positional(a, 0, "input file"));
    std::vector<Vec> z = center(base);
    json out;
    out["command"] = "center";
    out["center_dim"] = int(z.size());
    json basis = json::array();
    for (const auto& v : z) basis.push_back(vec_to_json(v));
    out["center_basis"] = basis;
    Report rep;
    rep.add("computed", true);
    out.update(report_to_json(rep));
    return out;
}

json cmd_gerstenhaber(const Args& a) {
    std::optional<std::vector<Vec>> basis;
    HomLieRinehart base = load_hom_lr(positional(a, 0, "input file"), &basis);
    std::vector<Vec> a_basis;
    if (basis) {
        a_basis = *basis;
    } else if (base.algebra.dim == 1) {
        for (int i = 0; i < base.rank; ++i) a_basis.push_back(unit_vec(base.rank, i));
    } else {
        throw NotFreeModule("hom_lr document must declare a_basis when dim A > 1");
    }
    int top = a.top > 0 ? a.top : int(a_basis.size());
    GradedAlgebra g = functor_G(base, a_basis, top, a.conv);
    Report rep = check_hom_gerstenhaber(g);
    json out;
    out["command"] = "gerstenhaber";
    out["top_degree"] = top;
    json dims = json::array();
    for (int d : g.dims) dims.push_back(d);
    out["dims"] = dims;
    out.update(report_to_json(rep));
    return out;
}

json cmd_bv_check(const Args& a) {
    AlgebraSpec s = load_spec_file(positional(a, 0, "input file"));
    if (s.kind != "hom_lie") throw SchemaError("bv-check expects a hom_lie document");
    int top = a.top > 0 ? a.top : s.hom_lie->dim;
    BVOperator op = bv_generator(*s.hom_lie, top);
    Report rep = check_bv_identity(op);
    json out;
    out["command"] = "bv-check";
    out["top_degree"] = top;
    out.update(report_to_json(rep));
    return out;
}

json cmd_kaehler(const Args& a) {
    AlgebraSpec s = load_spec_file(positional(a, 0, "input file"));
    if (s.kind != "comm_algebra") throw SchemaError("kaehler expects a comm_algebra document");
    PhiDifferentials d = universal_phi_derivation(*s.comm_algebra);
    Report rep;
    rep.merge("algebra", check_comm_algebra(*s.comm_algebra));
    rep.merge("universal_d",
              check_module_phi_derivation(*s.comm_algebra, AModule{d.space_dim, d.a_action},
                                          d.d_map));
    json out;
    out["command"] = "kaehler";
    out["dim_i"] = d.dim_i;
    out["dim_i2"] = int(d.i2_basis.size());
    out["dim_differentials"] = d.space_dim;
    out["d_matrix"] = matrix_to_json(d.d_map);
    out.update(report_to_json(rep));
    return out;
}

json cmd_lie_derivative(const Args& a) {
    AlgebraSpec s = load_spec_file(positional(a, 0, "algebra file"));
    if (s.kind != "comm_algebra")
        throw SchemaError("lie-derivative expects a comm_algebra document first");
    std::ifstream in(positional(a, 1, "derivation file"));
    if (!in) throw ParseError("cannot open derivation file");
    json xdoc;
    try {
        in >> xdoc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!xdoc.contains("matrix")) throw SchemaError("derivation file needs a 'matrix' field");
    Matrix x = json_to_matrix(xdoc["matrix"]);
    PhiDifferentials d = universal_phi_derivation(*s.comm_algebra);
    Report rep = check_phi_derivation(*s.comm_algebra, x);
    json out;
    out["command"] = "lie-derivative";
    if (rep.all_passed()) out["operator"] = matrix_to_json(lie_derivative_operator(d, x));
    out["dim_differentials"] = d.space_dim;
    out.update(report_to_json(rep));
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Args a = parse_args(args);
        json report;
        if (a.command == "check")
            report = cmd_check(a);
        else if (a.command == "cohomology")
            report = cmd_cohomology(a);
        else if (a.command == "extend")
            report = cmd_extend(a);
        else if (a.command == "classify")
            report = cmd_classify(a);
        else if (a.command == "center")
            report = cmd_center(a);
        else if (a.command == "gerstenhaber")
            report = cmd_gerstenhaber(a);
        else if (a.command == "bv-check")
            report = cmd_bv_check(a);
        else if (a.command == "kaehler")
            report = cmd_kaehler(a);
        else if (a.command == "lie-derivative")
            report = cmd_lie_derivative(a);
        else
            throw SchemaError("unknown command '" + a.command + "'");

        out << report.dump(2) << "\n";
        int passed = report["summary"]["passed"].get<int>();
        int total = report["summary"]["total"].get<int>();
        bool ok = passed == total;
        err << a.command << ": " << passed << "/" << total << " checks passed\n";
        return ok ? 0 : 1;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // last resort: never abort on unexpected exceptions
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace homlr::cli
