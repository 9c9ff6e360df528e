#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "homlr/extensions.hpp"
#include "homlr/phi_differentials.hpp"

namespace homlr {

using json = nlohmann::ordered_json;

// Structured-text input document. `kind` selects which payload is present.
// All rationals travel as strings "p/q"; tensors as {dims, entries} with
// entries [i, j, k, "p/q"].
struct AlgebraSpec {
    std::string kind;
    std::optional<HomLieAlgebra> hom_lie;
    std::optional<CommAlgebra> comm_algebra;
    std::optional<HomLieRinehart> hom_lr;
    std::optional<std::vector<Vec>> a_basis; // optional free A-basis on hom_lr docs
    std::optional<HLRModule> module;
    std::optional<Cochain> cochain;
    int cochain_rank = 0;      // carrier dims for standalone cochain docs
    int cochain_module_dim = 0;
    std::optional<ExtensionData> extension;
    std::optional<PoissonAlgebra> poisson;
};

Rational json_to_rational(const json& j);
json rational_to_json(const Rational& r);
Vec json_to_vec(const json& j);
Matrix json_to_matrix(const json& j);
Tensor3 json_to_tensor(const json& j, int d1, int d2, int d3);
json vec_to_json(const Vec& v);
json matrix_to_json(const Matrix& m);
json tensor_to_json(const Tensor3& t);

// Throws ParseError (with byte position) on malformed JSON, SchemaError on
// unknown kinds / missing fields, DimensionMismatch on inconsistent sizes.
AlgebraSpec parse_spec(const std::string& text);
AlgebraSpec parse_spec_json(const json& doc);
AlgebraSpec parse_spec_json_impl(const json& doc);
json serialize_spec(const AlgebraSpec& spec);

AlgebraSpec load_spec_file(const std::string& path);

} // namespace homlr
