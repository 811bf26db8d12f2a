#pragma once

#include <json.hpp>

#include "monocross/classify.hpp"
#include "monocross/extend_divide.hpp"
#include "monocross/family.hpp"
#include "monocross/monomial_ideal.hpp"
#include "monocross/poly.hpp"

namespace monocross {

using Json = nlohmann::json;

// Strict object validation: every listed required key must be present, every
// present key must be listed. Throws input_error otherwise.
void require_object(const Json& j, const char* context,
                    const std::vector<const char*>& required,
                    const std::vector<const char*>& optional = {});

int int_field(const Json& j, const char* context, const char* key);

// --- loaders (all strict; throw input_error on schema violations) ---

Vector vector_from_json(const Json& j, const char* context, int length);
Subspace subspace_from_json(const Json& j, int ambient);
LinearFamily family_from_json(const Json& j);
SparsePoly poly_from_json(const Json& j);
TypeLambda type_from_json(const Json& j);
SquareFreeIdeal ideal_from_json(const Json& j);
GermDescriptor germ_from_json(const Json& j);

// --- serializers (deterministic: map-backed JSON, canonical listing orders) ---

Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);
Json subspace_to_json(const Subspace& s);
Json family_to_json(const LinearFamily& f);
Json poly_to_json(const SparsePoly& p);
Json type_to_json(const TypeLambda& t);
Json ideal_to_json(const SquareFreeIdeal& i);
Json mask_to_json(Mask m);
Json masks_to_json(const std::vector<Mask>& masks);
Json signature_to_json(const LoadSignature& s);
Json adapted_to_json(const AdaptedBasis& b);
Json extremality_to_json(const ExtremalityReport& r);
Json singularity_to_json(const SingularityReport& r);
Json decomposition_to_json(const Decomposition& d);

}  // namespace monocross
