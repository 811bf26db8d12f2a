// monocross: exact classification of unions of coordinate linear varieties and
// their polynomial algebra. Reads one JSON case (or an array of cases) and
// writes one JSON report per case on stdout.
//
// Exit codes: 0 analysis completed (negative verdicts included), 2 malformed
// input, 3 precondition violation, 4 resource guard exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monocross/errors.hpp"
#include "monocross/json_io.hpp"
#include "monocross/version.hpp"

namespace {

using monocross::Json;
using monocross::Mask;

struct Limits {
  int max_ambient = 12;
  int max_members = 12;
  std::uint64_t permutation_budget = 1'000'000;
};

struct Options {
  bool pretty = false;
  bool fold_minimal = false;
  bool reorder = false;
  bool divisor = false;
  Limits limits;
};

Limits parse_limits_flag(const std::string& text, Limits base) {
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw monocross::input_error("bad --limits entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "m") {
        base.max_ambient = std::stoi(value);
      } else if (key == "s") {
        base.max_members = std::stoi(value);
      } else if (key == "perm") {
        base.permutation_budget = std::stoull(value);
      } else {
        throw monocross::input_error("unknown --limits key '" + key + "'");
      }
    } catch (const monocross::input_error&) {
      throw;
    } catch (const std::exception&) {
      throw monocross::input_error("bad --limits value '" + item + "'");
    }
  }
  return base;
}

Limits case_limits(const Json& case_json, Limits base) {
  if (!case_json.contains("limits")) return base;
  const Json& j = case_json.at("limits");
  monocross::require_object(j, "limits", {}, {"m", "s", "perm"});
  if (j.contains("m")) base.max_ambient = monocross::int_field(j, "limits", "m");
  if (j.contains("s")) base.max_members = monocross::int_field(j, "limits", "s");
  if (j.contains("perm")) {
    const Json& perm = j.at("perm");
    if (!perm.is_number_integer() || (perm.is_number_integer() && !perm.is_number_unsigned() &&
                                      perm.get<long long>() < 0)) {
      throw monocross::input_error("limits field 'perm' must be a nonnegative integer");
    }
    base.permutation_budget = perm.get<std::uint64_t>();
  }
  return base;
}

void guard_sizes(int ambient, int members, const Limits& limits) {
  if (ambient > limits.max_ambient) {
    throw monocross::resource_error("ambient dimension " + std::to_string(ambient) +
                                    " exceeds the limit m=" + std::to_string(limits.max_ambient));
  }
  if (members > limits.max_members) {
    throw monocross::resource_error("member count " + std::to_string(members) +
                                    " exceeds the limit s=" + std::to_string(limits.max_members));
  }
}

monocross::LinearFamily load_family(const Json& j, const char* key, const Limits& limits) {
  monocross::LinearFamily family = monocross::family_from_json(j.at(key));
  guard_sizes(family.ambient(), family.size(), limits);
  return family;
}

monocross::TypeLambda load_type(const Json& j, const char* key, const Limits& limits) {
  monocross::TypeLambda type = monocross::type_from_json(j.at(key));
  guard_sizes(type.ambient(), type.size(), limits);
  return type;
}

monocross::SquareFreeIdeal load_ideal(const Json& j, const char* key, const Limits& limits) {
  monocross::SquareFreeIdeal ideal = monocross::ideal_from_json(j.at(key));
  guard_sizes(ideal.ambient(), static_cast<int>(ideal.generators().size()), limits);
  return ideal;
}

monocross::SparsePoly load_poly(const Json& j, const char* key, const Limits& limits) {
  monocross::SparsePoly poly = monocross::poly_from_json(j.at(key));
  guard_sizes(poly.nvars(), 0, limits);
  return poly;
}

std::vector<Mask> load_collection(const Json& j, const char* key, int members) {
  const Json& list = j.at(key);
  if (!list.is_array() || list.empty()) {
    throw monocross::input_error("'collection' must be a nonempty array of index sets");
  }
  std::vector<Mask> out;
  for (const Json& entry : list) {
    if (!entry.is_array()) throw monocross::input_error("collection entries must be index arrays");
    std::vector<int> indices;
    for (const Json& v : entry) {
      if (!v.is_number_integer()) throw monocross::input_error("collection indices must be integers");
      indices.push_back(v.get<int>());
    }
    out.push_back(monocross::mask_from_indices(indices, members));
  }
  return out;
}

void check_payload(const Json& j, const std::vector<const char*>& required) {
  std::vector<const char*> optional = {"seed", "limits"};
  monocross::require_object(j, "case", required, optional);
  if (j.contains("seed") && !j.at("seed").is_number_integer()) {
    throw monocross::input_error("case field 'seed' must be an integer");
  }
}

Json run_case(const std::string& command, const Json& j, const Options& options) {
  using namespace monocross;
  const Limits limits = case_limits(j, options.limits);

  if (command == "extremal") {
    check_payload(j, {"family"});
    return extremality_to_json(extremality(load_family(j, "family", limits)));
  }
  if (command == "basis") {
    check_payload(j, {"family"});
    LinearFamily family = load_family(j, "family", limits);
    LevelData data(family);
    auto basis = adapted_basis(data);
    if (!basis.has_value()) {
      const LevelCheck failure = data.extremality().first_failure();
      return Json{{"result", false}, {"level", failure.level}, {"lhs", failure.lhs}, {"rhs", failure.rhs}};
    }
    Json out = adapted_to_json(*basis);
    out["result"] = true;
    return out;
  }
  if (command == "load") {
    check_payload(j, {"family", "collection"});
    LinearFamily family = load_family(j, "family", limits);
    const auto collection = load_collection(j, "collection", family.size());
    const int dim = load_of_collection(family, collection);
    return Json{{"result", dim}};
  }
  if (command == "signature") {
    check_payload(j, {"family"});
    const LoadSignature signature = load_signature(load_family(j, "family", limits));
    return Json{{"result", signature_to_json(signature)}};
  }
  if (command == "equiv") {
    check_payload(j, {"family", "other"});
    LinearFamily f = load_family(j, "family", limits);
    LinearFamily g = load_family(j, "other", limits);
    const auto permutation = families_equivalent(f, g, options.reorder, limits.permutation_budget);
    if (!permutation.has_value()) return Json{{"result", false}};
    return Json{{"result", true}, {"permutation", *permutation}};
  }
  if (command == "iso") {
    check_payload(j, {"family", "other"});
    LinearFamily f = load_family(j, "family", limits);
    LinearFamily g = load_family(j, "other", limits);
    const Matrix map = build_isomorphism(f, g);
    return Json{{"result", matrix_to_json(map)}};
  }
  if (command == "model") {
    check_payload(j, {"family"});
    const TypeLambda model = coordinate_model(load_family(j, "family", limits));
    return Json{{"result", type_to_json(model)}};
  }
  if (command == "ideal") {
    check_payload(j, {"type"});
    const auto detailed = associated_monomials_detailed(load_type(j, "type", limits));
    return Json{{"result", ideal_to_json(detailed.ideal)},
                {"raw_products", detailed.raw_product_count}};
  }
  if (command == "decompose-primes") {
    check_payload(j, {"ideal"});
    const auto primes = prime_decomposition(load_ideal(j, "ideal", limits));
    return Json{{"result", masks_to_json(primes)}};
  }
  if (command == "zeroset") {
    check_payload(j, {"ideal"});
    const TypeLambda type = zero_set(load_ideal(j, "ideal", limits));
    return Json{{"result", type_to_json(type)}};
  }
  if (command == "member") {
    check_payload(j, {"poly", "ideal"});
    SquareFreeIdeal ideal = load_ideal(j, "ideal", limits);
    const bool verdict = ideal_membership(load_poly(j, "poly", limits), ideal);
    return Json{{"result", verdict}};
  }
  if (command == "extend") {
    check_payload(j, {"type", "pieces"});
    TypeLambda type = load_type(j, "type", limits);
    const Json& list = j.at("pieces");
    if (!list.is_array()) throw input_error("'pieces' must be an array of polynomials");
    std::vector<SparsePoly> pieces;
    for (const Json& item : list) pieces.push_back(poly_from_json(item));
    PiecewisePoly data(type, pieces);  // throws precondition_error when incompatible
    const SparsePoly extension = extend_inclusion_exclusion(data);
    return Json{{"result", poly_to_json(extension)}};
  }
  if (command == "split") {
    check_payload(j, {"poly", "var"});
    SparsePoly poly = load_poly(j, "poly", limits);
    const int var = int_field(j, "case", "var");
    auto [quotient, tail] = lemma_easy_split(poly, var);
    return Json{{"result", Json{{"f1", poly_to_json(quotient)}, {"g", poly_to_json(tail)}}}};
  }
  if (command == "divide") {
    check_payload(j, {"type", "poly"});
    TypeLambda type = load_type(j, "type", limits);
    SparsePoly poly = load_poly(j, "poly", limits);
    const Decomposition decomposition = divide_on_crossings(type, poly, options.fold_minimal);
    return Json{{"result", decomposition_to_json(decomposition)}};
  }
  if (command == "classify") {
    check_payload(j, {"germ"});
    GermDescriptor germ = germ_from_json(j.at("germ"));
    guard_sizes(germ.ambient(), germ.size(), limits);
    return singularity_to_json(is_monomial_singularity(germ));
  }
  if (command == "multiplicity") {
    check_payload(j, {"type"});
    const int count = multiplicity(load_type(j, "type", limits));
    return Json{{"result", count}};
  }
  if (command == "type-equiv") {
    check_payload(j, {"type", "other"});
    TypeLambda a = load_type(j, "type", limits);
    TypeLambda b = load_type(j, "other", limits);
    const bool verdict = types_equivalent(a, b, limits.permutation_budget);
    return Json{{"result", verdict}};
  }
  if (command == "bound") {
    check_payload(j, {"m"});
    const unsigned long long bound = sperner_bound(int_field(j, "case", "m"));
    return Json{{"result", bound}};
  }
  if (command == "loss") {
    check_payload(j, {"m", "n"});
    const unsigned long long loss =
        loss_constant(int_field(j, "case", "m"), int_field(j, "case", "n"), options.divisor);
    return Json{{"result", loss}};
  }
  throw input_error("unknown command '" + command + "'");
}

void emit(const Json& doc, bool pretty) {
  if (pretty) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of monomial crossings"};
  app.set_version_flag("--version", monocross::kVersion);

  std::string command;
  app.add_option("command", command, "one of: extremal basis load signature equiv iso model ideal "
                                     "decompose-primes zeroset member extend split divide classify "
                                     "multiplicity type-equiv bound loss")
      ->required();
  std::string input_path;
  app.add_option("--input", input_path, "input file (default: stdin)");
  Options options;
  app.add_flag("--pretty", options.pretty, "indent JSON output");
  std::string limits_text;
  app.add_option("--limits", limits_text, "resource limits, e.g. m=12,s=12,perm=1000000");
  app.add_flag("--fold-minimal", options.fold_minimal, "divide: fold entries onto minimal generators");
  app.add_flag("--reorder", options.reorder, "equiv: allow member reordering");
  app.add_flag("--divisor", options.divisor, "loss: codomain is a normal crossing divisor");
  CLI11_PARSE(app, argc, argv);

  try {
    options.limits = parse_limits_flag(limits_text, options.limits);

    std::string text;
    if (input_path.empty()) {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      text = buffer.str();
    } else {
      std::ifstream file(input_path);
      if (!file) throw monocross::input_error("cannot open input file '" + input_path + "'");
      std::stringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }

    Json parsed;
    try {
      parsed = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw monocross::input_error(std::string("JSON parse error: ") + e.what());
    }

    // A top-level array is a batch of independent cases; reports keep the
    // input order.
    if (parsed.is_array()) {
      for (const Json& case_json : parsed) emit(run_case(command, case_json, options), options.pretty);
    } else {
      emit(run_case(command, parsed, options), options.pretty);
    }
    return 0;
  } catch (const monocross::input_error& e) {
    emit({{"error", "input error"}, {"detail", e.what()}}, options.pretty);
    return 2;
  } catch (const monocross::precondition_error& e) {
    emit({{"error", "precondition violation"}, {"detail", e.what()}}, options.pretty);
    return 3;
  } catch (const monocross::resource_error& e) {
    emit({{"error", "resource limit"}, {"detail", e.what()}}, options.pretty);
    return 4;
  } catch (const std::exception& e) {
    emit({{"error", "internal error"}, {"detail", e.what()}}, options.pretty);
    return 1;
  }
}
