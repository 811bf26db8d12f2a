#include "monocross/json_io.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "monocross/errors.hpp"

namespace monocross {

void require_object(const Json& j, const char* context, const std::vector<const char*>& required,
                    const std::vector<const char*>& optional) {
  if (!j.is_object()) throw input_error(std::string(context) + " must be a JSON object");
  for (const char* key : required) {
    if (!j.contains(key)) {
      throw input_error(std::string(context) + " is missing field '" + key + "'");
    }
  }
  for (const auto& [key, value] : j.items()) {
    const auto known = [&key](const char* k) { return key == k; };
    if (!std::any_of(required.begin(), required.end(), known) &&
        !std::any_of(optional.begin(), optional.end(), known)) {
      throw input_error(std::string("unknown field '") + key + "' in " + context);
    }
  }
}

int int_field(const Json& j, const char* context, const char* key) {
  const Json& value = j.at(key);
  if (!value.is_number_integer()) {
    throw input_error(std::string(context) + " field '" + key + "' must be an integer");
  }
  return value.get<int>();
}

namespace {

std::vector<int> int_list(const Json& j, const char* context) {
  if (!j.is_array()) throw input_error(std::string(context) + " must be an array of integers");
  std::vector<int> out;
  for (const Json& item : j) {
    if (!item.is_number_integer()) {
      throw input_error(std::string(context) + " must contain integers only");
    }
    out.push_back(item.get<int>());
  }
  return out;
}

Mask mask_field(const Json& j, const char* context, int n) {
  return mask_from_indices(int_list(j, context), n);
}

std::vector<Mask> mask_list(const Json& j, const char* context, int n) {
  if (!j.is_array()) throw input_error(std::string(context) + " must be an array");
  std::vector<Mask> out;
  for (const Json& item : j) out.push_back(mask_field(item, context, n));
  return out;
}

}  // namespace

Vector vector_from_json(const Json& j, const char* context, int length) {
  if (!j.is_array() || static_cast<int>(j.size()) != length) {
    throw input_error(std::string(context) + " must be an array of " + std::to_string(length) +
                      " rationals");
  }
  Vector out;
  out.reserve(length);
  for (const Json& entry : j) {
    if (!entry.is_string()) {
      throw input_error(std::string(context) + " entries must be rational strings");
    }
    out.push_back(parse_rational(entry.get<std::string>()));
  }
  return out;
}

Subspace subspace_from_json(const Json& j, int ambient) {
  require_object(j, "subspace", {"basis"});
  const Json& basis = j.at("basis");
  if (!basis.is_array()) throw input_error("subspace 'basis' must be an array of vectors");
  std::vector<Vector> rows;
  for (const Json& row : basis) rows.push_back(vector_from_json(row, "basis vector", ambient));
  return canonicalize(rows, ambient);
}

LinearFamily family_from_json(const Json& j) {
  require_object(j, "family", {"ambient", "subspaces"});
  const int ambient = int_field(j, "family", "ambient");
  if (ambient < 1) throw input_error("family 'ambient' must be positive");
  const Json& list = j.at("subspaces");
  if (!list.is_array() || list.empty()) {
    throw input_error("family 'subspaces' must be a nonempty array");
  }
  std::vector<Subspace> members;
  for (const Json& item : list) members.push_back(subspace_from_json(item, ambient));
  return LinearFamily(ambient, std::move(members));
}

SparsePoly poly_from_json(const Json& j) {
  require_object(j, "polynomial", {"nvars", "terms"});
  const int nvars = int_field(j, "polynomial", "nvars");
  if (nvars < 1) throw input_error("polynomial 'nvars' must be positive");
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw input_error("polynomial 'terms' must be an array");
  SparsePoly p(nvars);
  std::set<Monomial> seen;
  for (const Json& term : terms) {
    require_object(term, "term", {"coeff", "exps"});
    if (!term.at("coeff").is_string()) throw input_error("term 'coeff' must be a rational string");
    const Rational coeff = parse_rational(term.at("coeff").get<std::string>());
    if (coeff == 0) throw input_error("term coefficients must be nonzero");
    const std::vector<int> exps = int_list(term.at("exps"), "term 'exps'");
    if (static_cast<int>(exps.size()) != nvars) {
      throw input_error("term 'exps' must list one exponent per variable");
    }
    for (int e : exps) {
      if (e < 0) throw input_error("term exponents must be nonnegative");
    }
    if (!seen.insert(exps).second) throw input_error("duplicate monomial in 'terms'");
    p.add_term(exps, coeff);
  }
  return p;
}

TypeLambda type_from_json(const Json& j) {
  require_object(j, "type", {"ambient", "components"});
  const int ambient = int_field(j, "type", "ambient");
  if (ambient < 1) throw input_error("type 'ambient' must be positive");
  return TypeLambda(ambient, mask_list(j.at("components"), "type component", ambient));
}

SquareFreeIdeal ideal_from_json(const Json& j) {
  require_object(j, "ideal", {"ambient", "generators"});
  const int ambient = int_field(j, "ideal", "ambient");
  if (ambient < 1) throw input_error("ideal 'ambient' must be positive");
  return SquareFreeIdeal(ambient, mask_list(j.at("generators"), "ideal generator", ambient));
}

GermDescriptor germ_from_json(const Json& j) {
  require_object(j, "germ", {"ambient", "tangents"}, {"germ_dims"});
  const int ambient = int_field(j, "germ", "ambient");
  LinearFamily tangents = family_from_json(j.at("tangents"));
  if (tangents.ambient() != ambient) {
    throw input_error("germ 'ambient' does not match the tangent family");
  }
  std::vector<std::pair<Mask, int>> dims;
  if (j.contains("germ_dims")) {
    const Json& list = j.at("germ_dims");
    if (!list.is_array()) throw input_error("'germ_dims' must be an array");
    for (const Json& entry : list) {
      require_object(entry, "germ_dims entry", {"I", "dim"});
      dims.emplace_back(mask_field(entry.at("I"), "germ_dims entry 'I'", tangents.size()),
                        int_field(entry, "germ_dims entry", "dim"));
    }
  }
  return GermDescriptor(std::move(tangents), dims);
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(format_rational(x));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"basis", matrix_to_json(s.basis())}};
}

Json family_to_json(const LinearFamily& f) {
  Json list = Json::array();
  for (const Subspace& member : f.members()) list.push_back(subspace_to_json(member));
  return Json{{"ambient", f.ambient()}, {"subspaces", list}};
}

Json poly_to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    terms.push_back(Json{{"coeff", format_rational(coeff)}, {"exps", mono}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Json mask_to_json(Mask m) {
  Json out = Json::array();
  for (int index : indices_from_mask(m)) out.push_back(index);
  return out;
}

Json masks_to_json(const std::vector<Mask>& masks) {
  Json out = Json::array();
  for (Mask m : masks) out.push_back(mask_to_json(m));
  return out;
}

Json type_to_json(const TypeLambda& t) {
  return Json{{"ambient", t.ambient()}, {"components", masks_to_json(t.components())}};
}

Json ideal_to_json(const SquareFreeIdeal& i) {
  return Json{{"ambient", i.ambient()}, {"generators", masks_to_json(i.generators())}};
}

Json signature_to_json(const LoadSignature& s) {
  std::vector<Mask> masks;
  for (Mask mask = 1; mask < (Mask{1} << s.members); ++mask) masks.push_back(mask);
  masks = sorted_canonical(std::move(masks));
  Json entries = Json::array();
  for (Mask mask : masks) {
    entries.push_back(Json{{"I", mask_to_json(mask)}, {"dim", s.at(mask)}});
  }
  return Json{{"s", s.members}, {"w", entries}};
}

Json adapted_to_json(const AdaptedBasis& b) {
  Json basis = Json::array();
  for (const Vector& v : b.vectors) basis.push_back(vector_to_json(v));
  Json blocks = Json::array();
  for (const AdaptedBlock& block : b.blocks) {
    Json vectors = Json::array();
    for (int position : block.positions) vectors.push_back(vector_to_json(b.vectors[position]));
    blocks.push_back(Json{{"I", mask_to_json(block.members)}, {"vectors", vectors}});
  }
  return Json{{"basis", basis}, {"blocks", blocks}};
}

Json extremality_to_json(const ExtremalityReport& r) {
  if (!r.extremal) {
    const LevelCheck failure = r.first_failure();
    return Json{{"result", false}, {"level", failure.level}, {"lhs", failure.lhs}, {"rhs", failure.rhs}};
  }
  Json levels = Json::array();
  for (const LevelCheck& check : r.levels) {
    levels.push_back(Json{{"p", check.level}, {"lhs", check.lhs}, {"rhs", check.rhs}});
  }
  return Json{{"result", true}, {"levels", levels}};
}

Json singularity_to_json(const SingularityReport& r) {
  if (r.monomial) return Json{{"result", true}};
  Json witness;
  if (r.witness->kind == SingularityWitness::Kind::not_extremal) {
    witness = Json{{"kind", "not_extremal"},
                   {"level", r.witness->level.level},
                   {"lhs", r.witness->level.lhs},
                   {"rhs", r.witness->level.rhs}};
  } else {
    witness = Json{{"kind", "dimension_mismatch"},
                   {"I", mask_to_json(r.witness->members)},
                   {"germ", r.witness->germ_dim},
                   {"tangent", r.witness->tangent_dim}};
  }
  return Json{{"result", false}, {"witness", witness}};
}

Json decomposition_to_json(const Decomposition& d) {
  Json entries = Json::array();
  for (const auto& [sigma, coeff] : d.entries) {
    entries.push_back(Json{{"sigma", mask_to_json(sigma)}, {"coeff_poly", poly_to_json(coeff)}});
  }
  Json degree = d.degree < 0 ? Json(nullptr) : Json(d.degree);
  return Json{{"degree", degree}, {"entries", entries}};
}

}  // namespace monocross
