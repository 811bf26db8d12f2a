#include "monocross/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "monocross/errors.hpp"

namespace monocross {

namespace {

constexpr int kMaxAnalyzableMembers = 20;

void check_member_mask(Mask members, int s, const char* what) {
  if (members == 0) throw input_error(std::string(what) + ": index set must be nonempty");
  if (s < 32 && (members >> s) != 0) {
    throw input_error(std::string(what) + ": index set out of range 1.." + std::to_string(s));
  }
}

}  // namespace

LinearFamily::LinearFamily(int ambient, std::vector<Subspace> members)
    : ambient_(ambient), members_(std::move(members)) {
  if (ambient_ < 1) throw input_error("ambient dimension must be positive");
  if (members_.empty()) throw input_error("a family needs at least one member");
  for (const Subspace& member : members_) {
    if (member.ambient() != ambient_) throw input_error("family member ambient mismatch");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i != j && members_[j].contains(members_[i])) {
        throw input_error("family has immersed components: member " + std::to_string(i + 1) +
                          " lies inside member " + std::to_string(j + 1));
      }
    }
  }
}

LinearFamily LinearFamily::minimalized(int ambient, std::vector<Subspace> members) {
  std::vector<Subspace> kept;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool immersed = false;
    for (std::size_t j = 0; j < members.size() && !immersed; ++j) {
      if (i == j) continue;
      if (members[j].contains(members[i])) {
        // Equal members: keep the first occurrence only.
        immersed = !(members[i] == members[j]) || j < i;
      }
    }
    if (!immersed) kept.push_back(members[i]);
  }
  return LinearFamily(ambient, std::move(kept));
}

LevelCheck ExtremalityReport::first_failure() const {
  for (const LevelCheck& check : levels) {
    if (check.lhs != check.rhs) return check;
  }
  return LevelCheck{0, 0, 0};
}

LevelData::LevelData(LinearFamily family)
    : family_(std::move(family)), s_(family_.size()), m_(family_.ambient()) {
  if (s_ > kMaxAnalyzableMembers) {
    throw resource_error("family has more than " + std::to_string(kMaxAnalyzableMembers) +
                         " members; level tables would not fit");
  }
  zero_id_ = intern(Subspace::zero(m_));
  inter_id_.assign(std::size_t{1} << s_, -1);
  for (int i = 0; i < s_; ++i) inter_id_[single_bit(i + 1)] = intern(family_.member(i));
  for (Mask mask = 1; mask < inter_id_.size(); ++mask) {
    if (popcount(mask) < 2) continue;
    const Mask low = mask & (~mask + 1);
    inter_id_[mask] = intersect_ids(inter_id_[mask ^ low], inter_id_[low]);
  }
  level_id_.assign(s_ + 2, zero_id_);
  std::vector<std::vector<int>> by_size(s_ + 1);
  for (Mask mask = 1; mask < inter_id_.size(); ++mask) {
    by_size[popcount(mask)].push_back(inter_id_[mask]);
  }
  for (int p = 1; p <= s_; ++p) level_id_[p] = fold_sum(std::move(by_size[p]));
}

int LevelData::intern(const Subspace& s) {
  auto it = pool_index_.find(s.basis());
  if (it != pool_index_.end()) return it->second;
  const int id = static_cast<int>(pool_.size());
  pool_.push_back(s);
  pool_index_.emplace(s.basis(), id);
  return id;
}

int LevelData::intersect_ids(int a, int b) {
  if (a == b) return a;
  const std::pair<int, int> key = std::minmax(a, b);
  auto it = inter_memo_.find(key);
  if (it != inter_memo_.end()) return it->second;
  const int id = intern(intersect(pool_[a], pool_[b]));
  inter_memo_.emplace(key, id);
  return id;
}

int LevelData::sum_ids(int a, int b) {
  if (a == b) return a;
  const std::pair<int, int> key = std::minmax(a, b);
  auto it = sum_memo_.find(key);
  if (it != sum_memo_.end()) return it->second;
  const int id = intern(sum(pool_[a], pool_[b]));
  sum_memo_.emplace(key, id);
  return id;
}

int LevelData::fold_sum(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  int acc = zero_id_;
  for (int id : ids) acc = sum_ids(acc, id);
  return acc;
}

const Subspace& LevelData::intersection(Mask members) const {
  check_member_mask(members, s_, "intersection");
  return pool_[inter_id_[members]];
}

int LevelData::dim_intersection(Mask members) const {
  check_member_mask(members, s_, "intersection");
  return pool_[inter_id_[members]].dim();
}

const Subspace& LevelData::level(int p) const {
  if (p < 1 || p > s_ + 1) throw input_error("level out of range 1..s+1");
  return pool_[level_id_[p]];
}

int LevelData::dim_level(int p) const { return level(p).dim(); }

int LevelData::v_id(Mask members) {
  check_member_mask(members, s_, "v_space");
  const int p = popcount(members);
  return intersect_ids(level_id_[p + 1], inter_id_[members]);
}

const Subspace& LevelData::v_space(Mask members) { return pool_[v_id(members)]; }

int LevelData::w_id(Mask members) {
  const int v = v_id(members);
  const int l = inter_id_[members];
  const auto key = std::make_pair(v, l);
  auto it = suppl_memo_.find(key);
  if (it != suppl_memo_.end()) return it->second;
  // Greedy supplement: extend a basis of V_I by the canonical rows of L_I.
  RrefAccumulator acc(m_);
  for (const Vector& row : pool_[v].basis_rows()) acc.insert(row);
  std::vector<Vector> picked;
  for (const Vector& row : pool_[l].basis_rows()) {
    if (acc.insert(row)) picked.push_back(row);
  }
  const int id = intern(canonicalize(picked, m_));
  suppl_memo_.emplace(key, id);
  return id;
}

const Subspace& LevelData::w_space(Mask members) { return pool_[w_id(members)]; }

int LevelData::w_dim(Mask members) {
  const int v = v_id(members);  // validates the mask
  return pool_[inter_id_[members]].dim() - pool_[v].dim();
}

int LevelData::dim_residual_sum(Mask members) {
  check_member_mask(members, s_, "residual sum");
  std::vector<int> ids;
  for (int j = 0; j < s_; ++j) {
    const Mask bit = single_bit(j + 1);
    if (members & bit) continue;
    ids.push_back(inter_id_[members | bit]);
  }
  return pool_[fold_sum(std::move(ids))].dim();
}

int LevelData::dim_collection_sum(const std::vector<Mask>& collection) {
  std::vector<int> ids;
  ids.reserve(collection.size());
  for (Mask members : collection) {
    check_member_mask(members, s_, "collection sum");
    ids.push_back(inter_id_[members]);
  }
  return pool_[fold_sum(std::move(ids))].dim();
}

ExtremalityReport LevelData::extremality() {
  if (extremality_cache_.has_value()) return *extremality_cache_;
  ExtremalityReport report;
  std::vector<int> sums(s_ + 1, 0);
  for (Mask mask = 1; mask < inter_id_.size(); ++mask) {
    const int p = popcount(mask);
    sums[p] += pool_[inter_id_[mask]].dim() - dim_residual_sum(mask);
  }
  report.extremal = true;
  for (int p = 1; p <= s_; ++p) {
    const LevelCheck check{p, dim_level(p), dim_level(p + 1) + sums[p]};
    if (check.lhs != check.rhs) report.extremal = false;
    report.levels.push_back(check);
  }
  extremality_cache_ = report;
  return report;
}

Subspace component_intersection(const LinearFamily& family, Mask members) {
  check_member_mask(members, family.size(), "component_intersection");
  Subspace result = family.member(lowest_index(members) - 1);
  for (Mask rest = members & (members - 1); rest != 0; rest &= rest - 1) {
    result = intersect(result, family.member(lowest_index(rest) - 1));
  }
  return result;
}

Subspace level_space(const LinearFamily& family, int p) {
  if (p < 1 || p > family.size() + 1) throw input_error("level out of range 1..s+1");
  LevelData data(family);
  return data.level(p);
}

ExtremalityReport extremality(const LinearFamily& family) {
  LevelData data(family);
  return data.extremality();
}

bool is_extremal(const LinearFamily& family) { return extremality(family).extremal; }

Subspace supplement(const LinearFamily& family, Mask members) {
  check_member_mask(members, family.size(), "supplement");
  LevelData data(family);
  return data.w_space(members);
}

std::optional<AdaptedBasis> adapted_basis(LevelData& data) {
  if (!data.extremality().extremal) return std::nullopt;
  const int s = data.size();
  std::vector<Mask> blocks;
  for (Mask mask = 1; mask < (Mask{1} << s); ++mask) {
    if (data.w_dim(mask) > 0) blocks.push_back(mask);
  }
  std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
    return lex_seq_less(a, b);
  });
  AdaptedBasis result;
  for (Mask mask : blocks) {
    AdaptedBlock block;
    block.members = mask;
    for (const Vector& row : data.w_space(mask).basis_rows()) {
      block.positions.push_back(static_cast<int>(result.vectors.size()));
      result.vectors.push_back(row);
    }
    result.blocks.push_back(std::move(block));
  }
  result.vectors = extend_to_basis(result.vectors, data.ambient());
  if (!is_adapted(result.vectors, data.family())) {
    throw std::logic_error("adapted-basis construction failed verification on an extremal family");
  }
  return result;
}

std::optional<AdaptedBasis> adapted_basis(const LinearFamily& family) {
  LevelData data(family);
  return adapted_basis(data);
}

bool is_adapted(const std::vector<Vector>& basis, const LinearFamily& family) {
  if (static_cast<int>(basis.size()) != family.ambient()) return false;
  {
    RrefAccumulator acc(family.ambient());
    for (const Vector& v : basis) {
      if (!acc.insert(v)) return false;
    }
  }
  for (int i = 0; i < family.size(); ++i) {
    const Subspace& member = family.member(i);
    std::vector<Vector> inside;
    for (const Vector& v : basis) {
      if (member.contains(v)) inside.push_back(v);
    }
    if (canonicalize(inside, family.ambient()) != member) return false;
  }
  return true;
}

namespace {

void check_collection(const std::vector<Mask>& collection, int s) {
  if (collection.empty()) throw input_error("collection must contain at least one index set");
  std::set<Mask> seen;
  for (Mask members : collection) {
    check_member_mask(members, s, "load collection");
    if (!seen.insert(members).second) throw input_error("collection index sets must be distinct");
  }
}

}  // namespace

int load_of_collection(const LinearFamily& family, const std::vector<Mask>& collection) {
  check_collection(collection, family.size());
  RrefAccumulator acc(family.ambient());
  for (Mask members : collection) {
    for (const Vector& row : component_intersection(family, members).basis_rows()) {
      acc.insert(row);
    }
  }
  return acc.rank();
}

int load_of_collection(LevelData& data, const std::vector<Mask>& collection) {
  check_collection(collection, data.size());
  return data.dim_collection_sum(collection);
}

LoadSignature load_signature(LevelData& data) {
  auto report = data.extremality();
  if (!report.extremal) {
    throw precondition_error("load_signature requires an extremal family");
  }
  LoadSignature signature;
  signature.members = data.size();
  signature.w.assign(std::size_t{1} << data.size(), 0);
  int total = 0;
  for (Mask mask = 1; mask < signature.w.size(); ++mask) {
    signature.w[mask] = data.w_dim(mask);
    total += signature.w[mask];
  }
  // Lemma-level sanity: the W blocks of an extremal family fill L^(1).
  if (total != data.dim_level(1)) {
    throw std::logic_error("signature total does not match dim L^(1) on an extremal family");
  }
  return signature;
}

LoadSignature load_signature(const LinearFamily& family) {
  LevelData data(family);
  return load_signature(data);
}

namespace {

struct PermutationSearch {
  int s;
  const LoadSignature& from;
  const LoadSignature& to;
  const std::vector<std::vector<int>>& candidates;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<int> image;      // 0-based image per source member
  std::vector<bool> taken;

  bool extend(int i) {
    if (i == s) return true;
    for (int target : candidates[i]) {
      if (taken[target]) continue;
      if (++used > budget) {
        throw resource_error("permutation search exceeded its budget");
      }
      image[i] = target;
      taken[target] = true;
      if (consistent(i) && extend(i + 1)) return true;
      taken[target] = false;
    }
    return false;
  }

  // Checks every index set inside {0..i} that contains i.
  bool consistent(int i) const {
    const Mask high = single_bit(i + 1);
    const Mask below = high - 1;
    for (Mask sub = below;; sub = (sub - 1) & below) {
      const Mask source = sub | high;
      Mask mapped = 0;
      for (Mask rest = source; rest != 0; rest &= rest - 1) {
        mapped |= single_bit(image[lowest_index(rest) - 1] + 1);
      }
      if (from.at(source) != to.at(mapped)) return false;
      if (sub == 0) break;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<int>> families_equivalent(const LinearFamily& f, const LinearFamily& g,
                                                    bool reorder, std::uint64_t permutation_budget) {
  LevelData df(f);
  LevelData dg(g);
  if (!df.extremality().extremal || !dg.extremality().extremal) {
    throw precondition_error("families_equivalent requires extremal families");
  }
  if (f.ambient() != g.ambient() || f.size() != g.size()) return std::nullopt;
  const LoadSignature sf = load_signature(df);
  const LoadSignature sg = load_signature(dg);
  const int s = f.size();

  if (!reorder) {
    if (sf != sg) return std::nullopt;
    std::vector<int> identity(s);
    for (int i = 0; i < s; ++i) identity[i] = i + 1;
    return identity;
  }

  // Per-member invariants: dimension plus the multiset of pairwise intersection dims.
  const auto profile = [s](LevelData& data, int i) {
    std::vector<int> dims;
    for (int j = 0; j < s; ++j) {
      if (j != i) dims.push_back(data.dim_intersection(single_bit(i + 1) | single_bit(j + 1)));
    }
    std::sort(dims.begin(), dims.end());
    dims.push_back(data.dim_intersection(single_bit(i + 1)));
    return dims;
  };
  std::vector<std::vector<int>> profile_g(s);
  for (int j = 0; j < s; ++j) profile_g[j] = profile(dg, j);
  std::vector<std::vector<int>> candidates(s);
  for (int i = 0; i < s; ++i) {
    const auto mine = profile(df, i);
    for (int j = 0; j < s; ++j) {
      if (mine == profile_g[j]) candidates[i].push_back(j);
    }
    if (candidates[i].empty()) return std::nullopt;
  }

  PermutationSearch search{s, sf, sg, candidates, permutation_budget, 0,
                           std::vector<int>(s, -1), std::vector<bool>(s, false)};
  if (!search.extend(0)) return std::nullopt;
  std::vector<int> result(s);
  for (int i = 0; i < s; ++i) result[i] = search.image[i] + 1;
  return result;
}

Subspace apply_linear_map(const Matrix& map, const Subspace& space) {
  if (map.rows() != map.cols() || map.cols() != space.ambient()) {
    throw input_error("linear map shape does not match the ambient dimension");
  }
  std::vector<Vector> rows;
  for (const Vector& row : space.basis_rows()) {
    Vector image(space.ambient(), Rational(0));
    for (int i = 0; i < map.rows(); ++i) {
      for (int j = 0; j < map.cols(); ++j) image[i] += map.at(i, j) * row[j];
    }
    rows.push_back(std::move(image));
  }
  return canonicalize(rows, space.ambient());
}

LinearFamily apply_linear_map(const Matrix& map, const LinearFamily& family) {
  std::vector<Subspace> members;
  members.reserve(family.size());
  for (const Subspace& member : family.members()) members.push_back(apply_linear_map(map, member));
  return LinearFamily(family.ambient(), std::move(members));
}

Matrix build_isomorphism(LevelData& df, LevelData& dg) {
  const LinearFamily& f = df.family();
  const LinearFamily& g = dg.family();
  if (!df.extremality().extremal || !dg.extremality().extremal) {
    throw precondition_error("build_isomorphism requires extremal families");
  }
  if (f.ambient() != g.ambient() || f.size() != g.size()) {
    throw precondition_error("families differ in ambient dimension or member count");
  }
  if (load_signature(df) != load_signature(dg)) {
    throw precondition_error("family loads differ");
  }
  const auto basis_f = adapted_basis(df);
  const auto basis_g = adapted_basis(dg);
  const int m = f.ambient();
  const Matrix p = Matrix::from_rows(basis_f->vectors, m);
  const Matrix q = Matrix::from_rows(basis_g->vectors, m);
  // Row convention maps row x to x * (P^-1 Q); transpose for column vectors.
  const Matrix map = (inverse(p) * q).transpose();
  for (int i = 0; i < f.size(); ++i) {
    if (apply_linear_map(map, f.member(i)) != g.member(i)) {
      throw std::logic_error("isomorphism verification failed despite equal loads");
    }
  }
  return map;
}

Matrix build_isomorphism(const LinearFamily& f, const LinearFamily& g) {
  LevelData df(f);
  LevelData dg(g);
  return build_isomorphism(df, dg);
}

TypeLambda coordinate_model(LevelData& data) {
  auto basis = adapted_basis(data);
  if (!basis.has_value()) {
    throw precondition_error("coordinate_model requires an extremal family");
  }
  const LinearFamily& family = data.family();
  if (family.ambient() > 32) throw resource_error("coordinate model needs ambient dimension <= 32");
  std::vector<Mask> components;
  for (int i = 0; i < family.size(); ++i) {
    Mask lambda = 0;
    for (std::size_t k = 0; k < basis->vectors.size(); ++k) {
      if (!family.member(i).contains(basis->vectors[k])) {
        lambda |= single_bit(static_cast<int>(k) + 1);
      }
    }
    components.push_back(lambda);
  }
  return TypeLambda(family.ambient(), components);
}

TypeLambda coordinate_model(const LinearFamily& family) {
  LevelData data(family);
  return coordinate_model(data);
}

LinearFamily coordinate_family(const TypeLambda& type) {
  std::vector<Subspace> members;
  for (Mask lambda : type.components()) {
    std::vector<Vector> rows;
    for (int k = 1; k <= type.ambient(); ++k) {
      if (lambda & single_bit(k)) continue;
      Vector unit(type.ambient(), Rational(0));
      unit[k - 1] = 1;
      rows.push_back(std::move(unit));
    }
    members.push_back(canonicalize(rows, type.ambient()));
  }
  return LinearFamily(type.ambient(), std::move(members));
}

unsigned long long sperner_bound(int m) {
  if (m < 1) throw input_error("ambient dimension must be positive");
  if (m > 62) throw resource_error("binomial out of range");
  Integer result = 1;
  const int k = m / 2;
  for (int i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result.convert_to<unsigned long long>();
}

}  // namespace monocross
