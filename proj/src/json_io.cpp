#include "homlr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace homlr {

Rational json_to_rational(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw SchemaError("rational must be a string \"p/q\" or an integer");
}

json rational_to_json(const Rational& r) { return r.str(); }

Vec json_to_vec(const json& j) {
    if (!j.is_array()) throw SchemaError("vector must be an array");
    Vec v;
    for (const auto& e : j) v.push_back(json_to_rational(e));
    return v;
}

json vec_to_json(const Vec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(rational_to_json(x));
    return j;
}

Matrix json_to_matrix(const json& j) {
    if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
    if (j.empty()) return Matrix(0, 0); // rank-0 carriers serialize as []
    int rows = int(j.size());
    int cols = int(j[0].size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || int(j[r].size()) != cols)
            throw SchemaError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(r, c) = json_to_rational(j[r][c]);
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json j = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        j.push_back(row);
    }
    return j;
}

Tensor3 json_to_tensor(const json& j, int d1, int d2, int d3) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("entries"))
        throw SchemaError("tensor must be {dims, entries}");
    auto dims = j["dims"];
    if (!dims.is_array() || dims.size() != 3) throw SchemaError("tensor dims must have 3 entries");
    if (dims[0].get<int>() != d1 || dims[1].get<int>() != d2 || dims[2].get<int>() != d3)
        throw DimensionMismatch("tensor dims " + dims.dump() + " expected [" + std::to_string(d1) +
                                "," + std::to_string(d2) + "," + std::to_string(d3) + "]");
    Tensor3 t(d1, d2, d3);
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 4) throw SchemaError("tensor entry must be [i,j,k,value]");
        int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= d1 || jj < 0 || jj >= d2 || k < 0 || k >= d3)
            throw DimensionMismatch("tensor entry index out of range: " + e.dump());
        t.set(i, jj, k, json_to_rational(e[3]));
    }
    return t;
}

json tensor_to_json(const Tensor3& t) {
    json j;
    j["dims"] = {t.dim1(), t.dim2(), t.dim3()};
    json entries = json::array();
    for (const auto& [idx, v] : t.entries()) {
        auto [i, jj, k] = idx;
        entries.push_back(json::array({i, jj, k, rational_to_json(v)}));
    }
    j["entries"] = entries;
    return j;
}

namespace {

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw SchemaError(std::string("missing field '") + name + "'");
    return j.at(name);
}

HomLieAlgebra parse_hom_lie(const json& j) {
    HomLieAlgebra g;
    g.dim = field(j, "dim").get<int>();
    if (g.dim < 0) throw SchemaError("negative dim");
    g.bracket = json_to_tensor(field(j, "bracket"), g.dim, g.dim, g.dim);
    g.alpha = json_to_matrix(field(j, "alpha"));
    if (g.alpha.rows() != g.dim || g.alpha.cols() != g.dim)
        throw DimensionMismatch("alpha must be dim x dim");
    return g;
}

json hom_lie_to_json(const HomLieAlgebra& g) {
    json j;
    j["dim"] = g.dim;
    j["bracket"] = tensor_to_json(g.bracket);
    j["alpha"] = matrix_to_json(g.alpha);
    return j;
}

CommAlgebra parse_comm_algebra(const json& j) {
    CommAlgebra a;
    a.dim = field(j, "dim").get<int>();
    if (a.dim <= 0) throw SchemaError("algebra dim must be positive");
    a.mult = json_to_tensor(field(j, "mult"), a.dim, a.dim, a.dim);
    a.unit = json_to_vec(field(j, "unit"));
    if (int(a.unit.size()) != a.dim) throw DimensionMismatch("unit length");
    a.phi = json_to_matrix(field(j, "phi"));
    if (a.phi.rows() != a.dim || a.phi.cols() != a.dim) throw DimensionMismatch("phi size");
    return a;
}

json comm_algebra_to_json(const CommAlgebra& a) {
    json j;
    j["dim"] = a.dim;
    j["mult"] = tensor_to_json(a.mult);
    j["unit"] = vec_to_json(a.unit);
    j["phi"] = matrix_to_json(a.phi);
    return j;
}

HomLieRinehart parse_hom_lr(const json& j) {
    HomLieRinehart lr;
    lr.algebra = parse_comm_algebra(field(j, "algebra"));
    lr.rank = field(j, "rank").get<int>();
    if (lr.rank < 0) throw SchemaError("negative rank");
    const int n = lr.algebra.dim, r = lr.rank;
    lr.action = json_to_tensor(field(j, "action"), n, r, r);
    lr.bracket = json_to_tensor(field(j, "bracket"), r, r, r);
    lr.alpha = json_to_matrix(field(j, "alpha"));
    if (lr.alpha.rows() != r || lr.alpha.cols() != r) throw DimensionMismatch("alpha size");
    lr.anchor = json_to_tensor(field(j, "anchor"), r, n, n);
    return lr;
}

json hom_lr_to_json(const HomLieRinehart& lr) {
    json j;
    j["algebra"] = comm_algebra_to_json(lr.algebra);
    j["rank"] = lr.rank;
    j["action"] = tensor_to_json(lr.action);
    j["bracket"] = tensor_to_json(lr.bracket);
    j["alpha"] = matrix_to_json(lr.alpha);
    j["anchor"] = tensor_to_json(lr.anchor);
    return j;
}

HLRModule parse_module_fields(const json& j, const HomLieRinehart& base) {
    HLRModule m;
    m.base = base;
    m.dim = field(j, "dim").get<int>();
    if (m.dim < 0) throw SchemaError("negative module dim");
    m.a_action = json_to_tensor(field(j, "a_action"), base.algebra.dim, m.dim, m.dim);
    m.theta = json_to_tensor(field(j, "theta"), base.rank, m.dim, m.dim);
    m.beta = json_to_matrix(field(j, "beta"));
    if (m.beta.rows() != m.dim || m.beta.cols() != m.dim) throw DimensionMismatch("beta size");
    return m;
}

json module_fields_to_json(const HLRModule& m) {
    json j;
    j["dim"] = m.dim;
    j["a_action"] = tensor_to_json(m.a_action);
    j["theta"] = tensor_to_json(m.theta);
    j["beta"] = matrix_to_json(m.beta);
    return j;
}

Cochain parse_cochain_fields(const json& j, int rank, int dim_m) {
    Cochain c;
    c.degree = field(j, "degree").get<int>();
    if (c.degree < 1) throw SchemaError("cochain degree must be >= 1");
    c.flat = zero_vec(int(binomial(rank, c.degree) * dim_m));
    auto tuples = increasing_tuples(rank, c.degree);
    std::map<std::vector<int>, long> rank_of;
    for (size_t i = 0; i < tuples.size(); ++i) rank_of[tuples[i]] = long(i);
    for (const auto& entry : field(j, "values")) {
        if (!entry.is_array() || entry.size() != 2)
            throw SchemaError("cochain value must be [tuple, vector]");
        std::vector<int> t;
        for (const auto& e : entry[0]) t.push_back(e.get<int>());
        auto it = rank_of.find(t);
        if (it == rank_of.end())
            throw SchemaError("cochain tuple must be strictly increasing and in range");
        Vec v = json_to_vec(entry[1]);
        if (int(v.size()) != dim_m) throw DimensionMismatch("cochain value length");
        for (int c2 = 0; c2 < dim_m; ++c2) c.flat[size_t(it->second) * dim_m + c2] = v[c2];
    }
    return c;
}

json cochain_fields_to_json(const Cochain& c, int rank, int dim_m) {
    json j;
    j["degree"] = c.degree;
    j["rank"] = rank;
    j["module_dim"] = dim_m;
    json values = json::array();
    auto tuples = increasing_tuples(rank, c.degree);
    for (size_t t = 0; t < tuples.size(); ++t) {
        Vec v(dim_m);
        bool nonzero = false;
        for (int c2 = 0; c2 < dim_m; ++c2) {
            v[c2] = c.flat[t * dim_m + c2];
            nonzero = nonzero || !v[c2].is_zero();
        }
        if (nonzero) values.push_back(json::array({tuples[t], vec_to_json(v)}));
    }
    j["values"] = values;
    return j;
}

} // namespace

AlgebraSpec parse_spec_json(const json& doc) {
    try {
        return parse_spec_json_impl(doc);
    } catch (const nlohmann::json::exception& e) {
        // wrong-typed fields surface as nlohmann type errors
        throw SchemaError(std::string("malformed document: ") + e.what());
    }
}

AlgebraSpec parse_spec_json_impl(const json& doc) {
    AlgebraSpec spec;
    if (!doc.is_object()) throw SchemaError("document must be a JSON object");
    spec.kind = field(doc, "kind").get<std::string>();
    if (spec.kind == "hom_lie") {
        spec.hom_lie = parse_hom_lie(doc);
    } else if (spec.kind == "comm_algebra") {
        spec.comm_algebra = parse_comm_algebra(doc);
    } else if (spec.kind == "hom_lr") {
        spec.hom_lr = parse_hom_lr(doc);
        if (doc.contains("a_basis")) {
            std::vector<Vec> basis;
            for (const auto& v : doc["a_basis"]) {
                Vec b = json_to_vec(v);
                if (int(b.size()) != spec.hom_lr->rank)
                    throw DimensionMismatch("a_basis vector length");
                basis.push_back(std::move(b));
            }
            spec.a_basis = basis;
        }
    } else if (spec.kind == "module") {
        HomLieRinehart base = parse_hom_lr(field(doc, "base"));
        spec.module = parse_module_fields(doc, base);
    } else if (spec.kind == "cochain") {
        spec.cochain_rank = field(doc, "rank").get<int>();
        spec.cochain_module_dim = field(doc, "module_dim").get<int>();
        if (spec.cochain_rank < 0 || spec.cochain_module_dim < 0)
            throw SchemaError("negative cochain carrier dims");
        spec.cochain = parse_cochain_fields(doc, spec.cochain_rank, spec.cochain_module_dim);
    } else if (spec.kind == "extension") {
        ExtensionData ext;
        ext.base = parse_hom_lr(field(doc, "base"));
        ext.module = parse_module_fields(field(doc, "module"), ext.base);
        ext.total = parse_hom_lr(field(doc, "total"));
        ext.inj = json_to_matrix(field(doc, "inj"));
        ext.proj = json_to_matrix(field(doc, "proj"));
        if (doc.contains("section") && !doc["section"].is_null())
            ext.section = json_to_matrix(doc["section"]);
        if (ext.inj.rows() != ext.total.rank || ext.inj.cols() != ext.module.dim ||
            ext.proj.rows() != ext.base.rank || ext.proj.cols() != ext.total.rank)
            throw DimensionMismatch("extension map sizes");
        if (ext.section && (ext.section->rows() != ext.total.rank ||
                            ext.section->cols() != ext.base.rank))
            throw DimensionMismatch("section size");
        spec.extension = ext;
    } else if (spec.kind == "poisson") {
        PoissonAlgebra p;
        p.base = parse_comm_algebra(field(doc, "algebra"));
        p.pbracket = json_to_tensor(field(doc, "pbracket"), p.base.dim, p.base.dim, p.base.dim);
        spec.poisson = p;
    } else {
        throw SchemaError("unknown kind '" + spec.kind + "'");
    }
    return spec;
}

AlgebraSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(e.what()));
    }
    return parse_spec_json(doc);
}

json serialize_spec(const AlgebraSpec& spec) {
    json j;
    j["kind"] = spec.kind;
    if (spec.kind == "hom_lie") {
        json b = hom_lie_to_json(*spec.hom_lie);
        j.update(b);
    } else if (spec.kind == "comm_algebra") {
        j.update(comm_algebra_to_json(*spec.comm_algebra));
    } else if (spec.kind == "hom_lr") {
        j.update(hom_lr_to_json(*spec.hom_lr));
        if (spec.a_basis) {
            json basis = json::array();
            for (const auto& v : *spec.a_basis) basis.push_back(vec_to_json(v));
            j["a_basis"] = basis;
        }
    } else if (spec.kind == "module") {
        j["base"] = hom_lr_to_json(spec.module->base);
        j.update(module_fields_to_json(*spec.module));
    } else if (spec.kind == "cochain") {
        j.update(cochain_fields_to_json(*spec.cochain, spec.cochain_rank, spec.cochain_module_dim));
    } else if (spec.kind == "extension") {
        const ExtensionData& e = *spec.extension;
        j["base"] = hom_lr_to_json(e.base);
        j["module"] = module_fields_to_json(e.module);
        j["total"] = hom_lr_to_json(e.total);
        j["inj"] = matrix_to_json(e.inj);
        j["proj"] = matrix_to_json(e.proj);
        j["section"] = e.section ? matrix_to_json(*e.section) : json(nullptr);
    } else if (spec.kind == "poisson") {
        j["algebra"] = comm_algebra_to_json(spec.poisson->base);
        j["pbracket"] = tensor_to_json(spec.poisson->pbracket);
    }
    return j;
}

AlgebraSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

} // namespace homlr
