#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "monocross/classify.hpp"
#include "monocross/errors.hpp"
#include "monocross/extend_divide.hpp"
#include "monocross/family.hpp"
#include "monocross/monomial_ideal.hpp"
#include "monocross/poly.hpp"
#include "monocross/version.hpp"

namespace py = pybind11;
using namespace monocross;

namespace {

// Rationals cross the boundary as "p/q" strings, matching the JSON formats.
using StrVector = std::vector<std::string>;
using StrRows = std::vector<StrVector>;

Vector vector_in(const StrVector& entries) {
  Vector out;
  out.reserve(entries.size());
  for (const std::string& e : entries) out.push_back(parse_rational(e));
  return out;
}

std::vector<Vector> rows_in(const StrRows& rows) {
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (const StrVector& row : rows) out.push_back(vector_in(row));
  return out;
}

StrVector vector_out(const Vector& v) {
  StrVector out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(format_rational(x));
  return out;
}

StrRows rows_out(const std::vector<Vector>& rows) {
  StrRows out;
  out.reserve(rows.size());
  for (const Vector& row : rows) out.push_back(vector_out(row));
  return out;
}

StrRows matrix_out(const Matrix& m) { return rows_out(m.row_list()); }

Mask mask_in(const std::vector<int>& indices, int n) { return mask_from_indices(indices, n); }

std::vector<std::vector<int>> masks_out(const std::vector<Mask>& masks) {
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(indices_from_mask(m));
  return out;
}

TypeLambda type_in(int ambient, const std::vector<std::vector<int>>& components) {
  std::vector<Mask> masks;
  masks.reserve(components.size());
  for (const auto& c : components) masks.push_back(mask_in(c, ambient));
  return TypeLambda(ambient, std::move(masks));
}

SquareFreeIdeal ideal_in(int ambient, const std::vector<std::vector<int>>& generators) {
  std::vector<Mask> masks;
  masks.reserve(generators.size());
  for (const auto& g : generators) masks.push_back(mask_in(g, ambient));
  return SquareFreeIdeal(ambient, std::move(masks));
}

py::dict extremality_out(const ExtremalityReport& report) {
  py::dict out;
  out["extremal"] = report.extremal;
  py::list levels;
  for (const LevelCheck& check : report.levels) {
    py::dict level;
    level["p"] = check.level;
    level["lhs"] = check.lhs;
    level["rhs"] = check.rhs;
    levels.append(level);
  }
  out["levels"] = levels;
  return out;
}

py::object signature_out(const LoadSignature& signature) {
  py::list entries;
  std::vector<Mask> masks;
  for (Mask mask = 1; mask < (Mask{1} << signature.members); ++mask) masks.push_back(mask);
  for (Mask mask : sorted_canonical(std::move(masks))) {
    entries.append(py::make_tuple(indices_from_mask(mask), signature.at(mask)));
  }
  return entries;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact linear-subspace families, square-free monomial ideals, and the "
            "extension/division operators on unions of coordinate varieties";
  m.attr("__version__") = kVersion;

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Subspace>(m, "Subspace")
      .def_static("span",
                  [](const StrRows& rows, int ambient) { return canonicalize(rows_in(rows), ambient); },
                  py::arg("vectors"), py::arg("ambient"))
      .def_property_readonly("ambient", &Subspace::ambient)
      .def_property_readonly("dim", &Subspace::dim)
      .def("basis", [](const Subspace& s) { return rows_out(s.basis_rows()); })
      .def("contains_vector",
           [](const Subspace& s, const StrVector& v) { return s.contains(vector_in(v)); })
      .def("contains", [](const Subspace& s, const Subspace& o) { return s.contains(o); })
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
      .def("__repr__", [](const Subspace& s) {
        return "Subspace(ambient=" + std::to_string(s.ambient()) +
               ", dim=" + std::to_string(s.dim()) + ")";
      });

  m.def("sum", [](const Subspace& a, const Subspace& b) { return sum(a, b); });
  m.def("intersect", [](const Subspace& a, const Subspace& b) { return intersect(a, b); });
  m.def("extend_to_basis",
        [](const StrRows& rows, int ambient) { return rows_out(extend_to_basis(rows_in(rows), ambient)); },
        py::arg("independent"), py::arg("ambient"));

  py::class_<SparsePoly>(m, "SparsePoly")
      .def(py::init([](int nvars, const std::vector<std::pair<std::string, Monomial>>& terms) {
             SparsePoly p(nvars);
             for (const auto& [coeff, exps] : terms) p.add_term(exps, parse_rational(coeff));
             return p;
           }),
           py::arg("nvars"), py::arg("terms"))
      .def_static("variable", &SparsePoly::variable, py::arg("nvars"), py::arg("index"))
      .def_static("constant",
                  [](int nvars, const std::string& c) { return SparsePoly::constant(nvars, parse_rational(c)); })
      .def_property_readonly("nvars", &SparsePoly::nvars)
      .def_property_readonly("degree", &SparsePoly::degree)
      .def("is_zero", &SparsePoly::is_zero)
      .def("terms",
           [](const SparsePoly& p) {
             std::vector<std::pair<std::string, Monomial>> out;
             for (const auto& [mono, coeff] : p.terms()) out.emplace_back(format_rational(coeff), mono);
             return out;
           })
      .def("eval", [](const SparsePoly& p, const StrVector& point) {
        return format_rational(p.eval(vector_in(point)));
      })
      .def("__add__", [](const SparsePoly& a, const SparsePoly& b) { return a + b; })
      .def("__sub__", [](const SparsePoly& a, const SparsePoly& b) { return a - b; })
      .def("__mul__", [](const SparsePoly& a, const SparsePoly& b) { return a * b; })
      .def("__neg__", [](const SparsePoly& a) { return -a; })
      .def("__eq__", [](const SparsePoly& a, const SparsePoly& b) { return a == b; })
      .def("__repr__", &SparsePoly::to_string);

  m.def("substitute_zero",
        [](const SparsePoly& p, const std::vector<int>& vars) {
          return substitute_zero(p, mask_in(vars, p.nvars()));
        },
        py::arg("poly"), py::arg("vars"));
  m.def("variable_quotient", &variable_quotient, py::arg("poly"), py::arg("var"));

  py::class_<TypeLambda>(m, "TypeLambda")
      .def(py::init(&type_in), py::arg("ambient"), py::arg("components"))
      .def_property_readonly("ambient", &TypeLambda::ambient)
      .def("components", [](const TypeLambda& t) { return masks_out(t.components()); })
      .def("__eq__", [](const TypeLambda& a, const TypeLambda& b) { return a == b; })
      .def("__len__", &TypeLambda::size);

  py::class_<SquareFreeIdeal>(m, "SquareFreeIdeal")
      .def(py::init(&ideal_in), py::arg("ambient"), py::arg("generators"))
      .def_property_readonly("ambient", &SquareFreeIdeal::ambient)
      .def("generators", [](const SquareFreeIdeal& i) { return masks_out(i.generators()); })
      .def("__eq__", [](const SquareFreeIdeal& a, const SquareFreeIdeal& b) { return a == b; });

  m.def("associated_monomials", &associated_monomials, py::arg("type"));
  m.def("associated_monomials_detailed", [](const TypeLambda& type) {
    const auto detailed = associated_monomials_detailed(type);
    return py::make_tuple(detailed.ideal, detailed.raw_product_count);
  });
  m.def("prime_decomposition",
        [](const SquareFreeIdeal& ideal) { return masks_out(prime_decomposition(ideal)); });
  m.def("minimal_transversals",
        [](const std::vector<std::vector<int>>& family, int nvars) {
          std::vector<Mask> masks;
          for (const auto& member : family) masks.push_back(mask_in(member, nvars));
          return masks_out(minimal_transversals(masks, nvars));
        },
        py::arg("family"), py::arg("nvars"));
  m.def("zero_set", &zero_set, py::arg("ideal"));
  m.def("ideal_membership", &ideal_membership, py::arg("poly"), py::arg("ideal"));

  py::class_<LinearFamily>(m, "LinearFamily")
      .def(py::init<int, std::vector<Subspace>>(), py::arg("ambient"), py::arg("members"))
      .def_static("minimalized", &LinearFamily::minimalized, py::arg("ambient"), py::arg("members"))
      .def_property_readonly("ambient", &LinearFamily::ambient)
      .def("member", &LinearFamily::member, py::arg("i"))
      .def("__len__", &LinearFamily::size);

  m.def("component_intersection",
        [](const LinearFamily& f, const std::vector<int>& members) {
          return component_intersection(f, mask_in(members, f.size()));
        },
        py::arg("family"), py::arg("members"));
  m.def("level_space", &level_space, py::arg("family"), py::arg("p"));
  m.def("extremality", [](const LinearFamily& f) { return extremality_out(extremality(f)); });
  m.def("is_extremal", &is_extremal, py::arg("family"));
  m.def("supplement",
        [](const LinearFamily& f, const std::vector<int>& members) {
          return supplement(f, mask_in(members, f.size()));
        },
        py::arg("family"), py::arg("members"));
  m.def("adapted_basis", [](const LinearFamily& f) -> py::object {
    const auto basis = adapted_basis(f);
    if (!basis.has_value()) return py::none();
    py::dict out;
    out["basis"] = rows_out(basis->vectors);
    py::list blocks;
    for (const AdaptedBlock& block : basis->blocks) {
      py::dict item;
      item["I"] = indices_from_mask(block.members);
      item["positions"] = block.positions;
      blocks.append(item);
    }
    out["blocks"] = blocks;
    return out;
  });
  m.def("is_adapted",
        [](const StrRows& basis, const LinearFamily& f) { return is_adapted(rows_in(basis), f); });
  m.def("load_of_collection",
        [](const LinearFamily& f, const std::vector<std::vector<int>>& collection) {
          std::vector<Mask> masks;
          for (const auto& entry : collection) masks.push_back(mask_in(entry, f.size()));
          return load_of_collection(f, masks);
        },
        py::arg("family"), py::arg("collection"));
  m.def("load_signature", [](const LinearFamily& f) { return signature_out(load_signature(f)); });
  m.def("families_equivalent",
        [](const LinearFamily& f, const LinearFamily& g, bool reorder,
           std::uint64_t budget) -> py::object {
          const auto permutation = families_equivalent(f, g, reorder, budget);
          if (!permutation.has_value()) return py::none();
          return py::cast(*permutation);
        },
        py::arg("family"), py::arg("other"), py::arg("reorder") = false,
        py::arg("permutation_budget") = kDefaultPermutationBudget);
  m.def("build_isomorphism",
        [](const LinearFamily& f, const LinearFamily& g) { return matrix_out(build_isomorphism(f, g)); },
        py::arg("family"), py::arg("other"));
  m.def("apply_linear_map",
        [](const StrRows& map, const LinearFamily& f) {
          return apply_linear_map(Matrix::from_rows(rows_in(map), f.ambient()), f);
        },
        py::arg("matrix"), py::arg("family"));
  m.def("coordinate_model",
        [](const LinearFamily& f) { return coordinate_model(f); }, py::arg("family"));
  m.def("coordinate_family", &coordinate_family, py::arg("type"));
  m.def("sperner_bound", &sperner_bound, py::arg("m"));

  py::class_<GermDescriptor>(m, "GermDescriptor")
      .def(py::init([](LinearFamily tangents,
                       const std::vector<std::pair<std::vector<int>, int>>& germ_dims) {
             std::vector<std::pair<Mask, int>> entries;
             for (const auto& [members, dim] : germ_dims) {
               entries.emplace_back(mask_in(members, tangents.size()), dim);
             }
             return GermDescriptor(std::move(tangents), entries);
           }),
           py::arg("tangents"), py::arg("germ_dims"))
      .def_property_readonly("ambient", &GermDescriptor::ambient);

  m.def("is_monomial_singularity", [](const GermDescriptor& descriptor) {
    const SingularityReport report = is_monomial_singularity(descriptor);
    py::dict out;
    out["result"] = report.monomial;
    if (!report.monomial) {
      py::dict witness;
      if (report.witness->kind == SingularityWitness::Kind::not_extremal) {
        witness["kind"] = "not_extremal";
        witness["level"] = report.witness->level.level;
        witness["lhs"] = report.witness->level.lhs;
        witness["rhs"] = report.witness->level.rhs;
      } else {
        witness["kind"] = "dimension_mismatch";
        witness["I"] = indices_from_mask(report.witness->members);
        witness["germ"] = report.witness->germ_dim;
        witness["tangent"] = report.witness->tangent_dim;
      }
      out["witness"] = witness;
    }
    return out;
  });
  m.def("multiplicity", &multiplicity, py::arg("type"));
  m.def("type_invariant",
        [](const TypeLambda& type, std::uint64_t budget) {
          const TypeInvariant invariant = type_invariant(type, budget);
          return py::make_tuple(invariant.ambient, invariant.members, invariant.w);
        },
        py::arg("type"), py::arg("permutation_budget") = kDefaultPermutationBudget);
  m.def("types_equivalent",
        [](const TypeLambda& a, const TypeLambda& b, std::uint64_t budget) {
          return types_equivalent(a, b, budget);
        },
        py::arg("a"), py::arg("b"), py::arg("permutation_budget") = kDefaultPermutationBudget);

  m.def("check_compatible", &check_compatible, py::arg("type"), py::arg("pieces"));
  m.def("extend_inclusion_exclusion",
        [](const TypeLambda& type, const std::vector<SparsePoly>& pieces) {
          return extend_inclusion_exclusion(PiecewisePoly(type, pieces));
        },
        py::arg("type"), py::arg("pieces"));
  m.def("lemma_easy_split", &lemma_easy_split, py::arg("poly"), py::arg("var"));
  m.def("divide_on_crossings",
        [](const TypeLambda& type, const SparsePoly& poly, bool fold_to_minimal) {
          const Decomposition decomposition = divide_on_crossings(type, poly, fold_to_minimal);
          py::dict out;
          out["degree"] = decomposition.degree;
          py::list entries;
          for (const auto& [sigma, coeff] : decomposition.entries) {
            entries.append(py::make_tuple(indices_from_mask(sigma), coeff));
          }
          out["entries"] = entries;
          return out;
        },
        py::arg("type"), py::arg("poly"), py::arg("fold_to_minimal") = false);
  m.def("loss_constant", &loss_constant, py::arg("domain_dim"), py::arg("codomain_dim"),
        py::arg("divisor") = false);
}
