#include "monocross/extend_divide.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "monocross/errors.hpp"
#include "monocross/family.hpp"

namespace monocross {

PiecewisePoly::PiecewisePoly(TypeLambda type, std::vector<SparsePoly> pieces)
    : type_(std::move(type)), pieces_(std::move(pieces)) {
  if (!check_compatible(type_, pieces_)) {
    throw precondition_error("piecewise data is not compatible on overlaps");
  }
}

bool check_compatible(const TypeLambda& type, const std::vector<SparsePoly>& pieces) {
  if (static_cast<int>(pieces.size()) != type.size()) {
    throw input_error("piece count does not match the component count");
  }
  for (const SparsePoly& piece : pieces) {
    if (piece.nvars() != type.ambient()) throw input_error("piece variable count mismatch");
  }
  for (int i = 0; i < type.size(); ++i) {
    for (int j = i + 1; j < type.size(); ++j) {
      const Mask overlap = type.component(i) | type.component(j);
      if (substitute_zero(pieces[i], overlap) != substitute_zero(pieces[j], overlap)) return false;
    }
  }
  return true;
}

SparsePoly extend_inclusion_exclusion_with(const PiecewisePoly& data,
                                           const std::function<int(Mask)>& representative) {
  const TypeLambda& type = data.type();
  const int s = type.size();
  if (s > kMaxEnumerationBits) {
    throw resource_error("component count above the enumeration guard");
  }
  SparsePoly extension(type.ambient());
  for (Mask subset = 1; subset < (Mask{1} << s); ++subset) {
    const int rep = representative(subset);
    if (rep < 1 || rep > s || (subset & single_bit(rep)) == 0) {
      throw input_error("representative must pick a member of the index set");
    }
    Mask vanished = 0;
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
      vanished |= type.component(lowest_index(rest) - 1);
    }
    const SparsePoly term = substitute_zero(data.pieces()[rep - 1], vanished);
    if (popcount(subset) % 2 == 1) {
      extension = extension + term;
    } else {
      extension = extension - term;
    }
  }
  return extension;
}

SparsePoly extend_inclusion_exclusion(const PiecewisePoly& data) {
  return extend_inclusion_exclusion_with(data, [](Mask subset) { return lowest_index(subset); });
}

std::pair<SparsePoly, SparsePoly> lemma_easy_split(const SparsePoly& f, int var) {
  if (var < 1 || var > f.nvars()) throw input_error("variable index out of range");
  const SparsePoly tail = substitute_zero(f, single_bit(var));
  const SparsePoly quotient = variable_quotient(f - tail, var);
  return {quotient, tail};
}

namespace {

using EntryMap = std::map<Mask, SparsePoly, CanonicalMaskLess>;

// Double induction from the constructive division: on the component count and,
// through the residue branch, on the set of live variables.
EntryMap divide_recursive(const std::vector<Mask>& components, const SparsePoly& f) {
  EntryMap entries;
  if (f.is_zero()) return entries;
  if (components.empty()) {
    entries.emplace(0, f);
    return entries;
  }
  if (components.size() == 1) {
    // Peel one variable of the single component at a time; the final residue
    // is substitute_zero(f, lambda) = 0 because f lies in the ideal.
    SparsePoly rest = f;
    for (int v : indices_from_mask(components[0])) {
      auto [quotient, tail] = lemma_easy_split(rest, v);
      if (!quotient.is_zero()) entries.emplace(single_bit(v), std::move(quotient));
      rest = std::move(tail);
    }
    if (!rest.is_zero()) {
      throw precondition_error("polynomial does not vanish on every component");
    }
    return entries;
  }

  const int v = lowest_index(components[0]);
  const Mask bit = single_bit(v);
  auto [quotient, tail] = lemma_easy_split(f, v);

  if (!quotient.is_zero()) {
    // The quotient vanishes on the components that avoid x_v; x^tau * x_v is a
    // transversal because the remaining components all contain v.
    std::vector<Mask> avoiding;
    for (Mask component : components) {
      if ((component & bit) == 0) avoiding.push_back(component);
    }
    for (auto& [tau, coeff] : divide_recursive(avoiding, quotient)) {
      entries.emplace(tau | bit, std::move(coeff));
    }
  }

  if (!tail.is_zero()) {
    // Dimension descent: the tail misses x_v and vanishes on the components
    // with v removed; a component equal to {v} would have forced tail == 0.
    std::vector<Mask> reduced;
    for (Mask component : components) {
      const Mask rest = component & ~bit;
      if (rest == 0) {
        throw precondition_error("polynomial does not vanish on every component");
      }
      reduced.push_back(rest);
    }
    for (auto& [sigma, coeff] : divide_recursive(minimalize_antichain(std::move(reduced)), tail)) {
      entries.emplace(sigma, std::move(coeff));
    }
  }
  return entries;
}

}  // namespace

Decomposition divide_on_crossings(const TypeLambda& type, const SparsePoly& f,
                                  bool fold_to_minimal) {
  if (f.nvars() != type.ambient()) throw input_error("variable count mismatch");
  const SquareFreeIdeal ideal = associated_monomials(type);
  if (!ideal_membership(f, ideal)) throw precondition_error("not in ideal");

  Decomposition result;
  result.degree = f.degree();
  result.entries = divide_recursive(type.components(), f);

  if (fold_to_minimal) {
    EntryMap folded;
    for (auto& [sigma, coeff] : result.entries) {
      Mask target = sigma;
      SparsePoly adjusted = std::move(coeff);
      bool minimal = false;
      for (Mask generator : ideal.generators()) {
        if (generator == sigma) {
          minimal = true;
          break;
        }
      }
      if (!minimal) {
        Mask divisor = 0;
        for (Mask generator : ideal.generators()) {  // canonical order fixes the choice
          if (is_subset(generator, sigma)) {
            divisor = generator;
            break;
          }
        }
        if (divisor == 0) {
          throw std::logic_error("decomposition entry is not a transversal of the type");
        }
        Monomial extra(f.nvars(), 0);
        for (int v : indices_from_mask(sigma & ~divisor)) extra[v - 1] = 1;
        adjusted = adjusted * SparsePoly::monomial(f.nvars(), std::move(extra), Rational(1));
        target = divisor;
      }
      auto it = folded.find(target);
      if (it == folded.end()) {
        folded.emplace(target, std::move(adjusted));
      } else {
        it->second = it->second + adjusted;
        if (it->second.is_zero()) folded.erase(it);
      }
    }
    result.entries = std::move(folded);
  }
  return result;
}

unsigned long long loss_constant(int domain_dim, int codomain_dim, bool divisor) {
  if (domain_dim < 1 || codomain_dim < 1) throw input_error("dimensions must be positive");
  if (divisor) {
    return static_cast<unsigned long long>(domain_dim) *
           static_cast<unsigned long long>(codomain_dim - 1);
  }
  return static_cast<unsigned long long>(domain_dim) * (sperner_bound(codomain_dim) - 1);
}

}  // namespace monocross
