#include "rcclab/automorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "rcclab/numtheory.hpp"

namespace rcclab {

namespace {

constexpr Elem kUnset = ~Elem{0};

std::uint64_t perm_order(std::span<const Elem> perm) {
  std::uint64_t ord = 1;
  for (auto len : cycle_lengths(perm)) ord = lcm(ord, len);
  return ord;
}

}  // namespace

// ---------------------------------------------------------------- Automorphism

Automorphism::Automorphism(FiniteGroup g, std::vector<Elem> perm)
    : group_(std::move(g)), perm_(std::move(perm)), order_(perm_order(perm_)) {}

Automorphism Automorphism::certify(FiniteGroup g, std::vector<Elem> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InvalidInput("automorphism permutation has wrong length");
  std::vector<char> hit(n, 0);
  for (Elem x : perm) {
    if (x >= n || hit[x]) throw InvalidInput("automorphism map is not a bijection");
    hit[x] = 1;
  }
  if (perm[g.identity()] != g.identity()) throw InvalidInput("automorphism moves the identity");
  for (std::size_t a = 0; a < n; ++a) {
    auto row = g.row(static_cast<Elem>(a));
    auto img_row = g.row(perm[a]);
    for (std::size_t b = 0; b < n; ++b)
      if (perm[row[b]] != img_row[perm[b]])
        throw InvalidInput("map is not multiplicative at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
  }
  return Automorphism(std::move(g), std::move(perm));
}

Automorphism Automorphism::identity(const FiniteGroup& g) {
  std::vector<Elem> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Elem>(i);
  return Automorphism(g, std::move(perm));
}

Automorphism trusted_automorphism(FiniteGroup g, std::vector<Elem> perm) {
  return Automorphism(std::move(g), std::move(perm));
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  if (!a.group_.same_table(b.group_)) throw InvalidInput("composing automorphisms of different groups");
  std::vector<Elem> perm(a.perm_.size());
  for (std::size_t x = 0; x < perm.size(); ++x) perm[x] = a.perm_[b.perm_[x]];
  return Automorphism(a.group_, std::move(perm));
}

Automorphism Automorphism::inverse() const {
  std::vector<Elem> perm(perm_.size());
  for (std::size_t x = 0; x < perm.size(); ++x) perm[perm_[x]] = static_cast<Elem>(x);
  return Automorphism(group_, std::move(perm));
}

Automorphism Automorphism::power(std::uint64_t k) const {
  k %= order_;
  std::vector<Elem> perm(perm_.size());
  for (std::size_t x = 0; x < perm.size(); ++x) {
    Elem y = static_cast<Elem>(x);
    for (std::uint64_t i = 0; i < k; ++i) y = perm_[y];
    perm[x] = y;
  }
  return Automorphism(group_, std::move(perm));
}

Automorphism inner_automorphism(const FiniteGroup& group, Elem g) {
  std::vector<Elem> perm(group.order());
  Elem gi = group.inv(g);
  for (std::size_t x = 0; x < perm.size(); ++x)
    perm[x] = group.mul(group.mul(g, static_cast<Elem>(x)), gi);
  return trusted_automorphism(group, std::move(perm));
}

// ---------------------------------------------------------------- cycle structure

CycleStructure::CycleStructure(std::map<std::uint64_t, std::uint64_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw InvalidInput("empty cycle structure");
  for (auto [d, z] : counts_) {
    if (d == 0 || z == 0 || z % d != 0) throw InvalidInput("inconsistent cycle structure entry");
    order_ = lcm(order_, d);
    points_ += z;
  }
}

std::uint64_t CycleStructure::zeta(std::uint64_t d) const {
  auto it = counts_.find(d);
  return it == counts_.end() ? 0 : it->second;
}

std::set<std::uint64_t> CycleStructure::lengths() const {
  std::set<std::uint64_t> out;
  for (auto [d, z] : counts_) out.insert(d);
  return out;
}

std::vector<std::uint64_t> cycle_lengths(std::span<const Elem> perm) {
  std::vector<std::uint64_t> len(perm.size(), 0);
  std::vector<Elem> orbit;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (len[s]) continue;
    orbit.clear();
    Elem x = static_cast<Elem>(s);
    do {
      orbit.push_back(x);
      x = perm[x];
    } while (x != s);
    for (Elem y : orbit) len[y] = orbit.size();
  }
  return len;
}

std::vector<std::uint64_t> cycle_lengths(const Automorphism& a) { return cycle_lengths(a.perm()); }

CycleStructure cycle_structure(std::span<const Elem> perm) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto len : cycle_lengths(perm)) ++counts[len];
  return CycleStructure(std::move(counts));
}

CycleStructure cycle_structure(const Automorphism& a) { return cycle_structure(a.perm()); }

// ---------------------------------------------------------------- generator images

std::optional<GroupHom> hom_from_generator_images(const FiniteGroup& g, std::span<const Elem> gens,
                                                  std::span<const Elem> images,
                                                  const FiniteGroup& target) {
  if (gens.size() != images.size()) throw InvalidInput("generator and image lists differ in length");
  for (Elem y : images)
    if (y >= target.order()) throw InvalidInput("generator image out of range");
  if (closure_members(g, gens).size() != g.order())
    throw InvalidInput("the given elements do not generate the group");
  std::vector<Elem> map(g.order(), kUnset);
  map[g.identity()] = target.identity();
  std::vector<Elem> queue{g.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Elem x = queue[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem z = g.mul(x, gens[i]);
      Elem w = target.mul(map[x], images[i]);
      if (map[z] == kUnset) {
        map[z] = w;
        queue.push_back(z);
      } else if (map[z] != w) {
        return std::nullopt;
      }
    }
  }
  // Consistency on every Cayley-graph edge already implies multiplicativity; GroupHom
  // re-certifies exhaustively.
  return GroupHom(g, target, std::move(map));
}

std::optional<GroupHom> hom_from_generator_images(const FiniteGroup& g, std::span<const Elem> gens,
                                                  std::span<const Elem> images) {
  return hom_from_generator_images(g, gens, images, g);
}

std::optional<Automorphism> automorphism_from_generator_images(const FiniteGroup& g,
                                                               std::span<const Elem> gens,
                                                               std::span<const Elem> images) {
  auto hom = hom_from_generator_images(g, gens, images);
  if (!hom || !hom->is_injective()) return std::nullopt;
  return trusted_automorphism(g, hom->images());
}

// ---------------------------------------------------------------- search

AutomorphismSearch::AutomorphismSearch(FiniteGroup g, const Limits& limits) : group_(std::move(g)) {
  check_enumerable(group_, limits);
  gens_ = greedy_generating_set(group_);
  auto classes = conjugacy_class_sizes(group_);
  for (Elem x : gens_) {
    std::vector<Elem> cands;
    for (std::size_t y = 0; y < group_.order(); ++y)
      if (group_.element_order(static_cast<Elem>(y)) == group_.element_order(x) && classes[y] == classes[x])
        cands.push_back(static_cast<Elem>(y));
    candidates_.push_back(std::move(cands));
  }
}

namespace {

class SearchState {
public:
  SearchState(const FiniteGroup& g, const std::vector<Elem>& gens,
              const std::vector<std::vector<Elem>>& cands, const AutomorphismSearch::Visitor& visit)
      : g_(g), gens_(gens), cands_(cands), visit_(visit), map_(g.order(), kUnset),
        used_(g.order(), 0), images_(gens.size(), 0) {
    map_[g.identity()] = g.identity();
    used_[g.identity()] = 1;
    list_.push_back(g.identity());
  }

  void descend(std::size_t level, Elem image) {
    const std::size_t old = list_.size();
    if (extend(level, image, old)) {
      if (level + 1 == gens_.size()) {
        visit_(map_);
      } else {
        for (Elem y : cands_[level + 1])
          if (!used_[y]) descend(level + 1, y);
      }
    }
    rollback(old);
  }

private:
  bool edge(Elem x, std::size_t j) {
    Elem z = g_.mul(x, gens_[j]);
    Elem w = g_.mul(map_[x], images_[j]);
    if (map_[z] == kUnset) {
      if (used_[w]) return false;
      map_[z] = w;
      used_[w] = 1;
      list_.push_back(z);
      return true;
    }
    return map_[z] == w;
  }

  bool extend(std::size_t level, Elem image, std::size_t old) {
    images_[level] = image;
    for (std::size_t k = 0; k < old; ++k)
      if (!edge(list_[k], level)) return false;
    for (std::size_t k = old; k < list_.size(); ++k)
      for (std::size_t j = 0; j <= level; ++j)
        if (!edge(list_[k], j)) return false;
    return true;
  }

  void rollback(std::size_t old) {
    for (std::size_t k = old; k < list_.size(); ++k) {
      used_[map_[list_[k]]] = 0;
      map_[list_[k]] = kUnset;
    }
    list_.resize(old);
  }

  const FiniteGroup& g_;
  const std::vector<Elem>& gens_;
  const std::vector<std::vector<Elem>>& cands_;
  const AutomorphismSearch::Visitor& visit_;
  std::vector<Elem> map_;
  std::vector<char> used_;
  std::vector<Elem> images_;
  std::vector<Elem> list_;
};

}  // namespace

void AutomorphismSearch::run_branch(std::size_t branch, const Visitor& visit) const {
  if (gens_.empty()) {
    std::vector<Elem> id{group_.identity()};
    visit(id);
    return;
  }
  SearchState state(group_, gens_, candidates_, visit);
  Elem y = candidates_[0].at(branch);
  if (y != group_.identity()) state.descend(0, y);
}

void AutomorphismSearch::run(const Visitor& visit) const {
  for (std::size_t b = 0; b < branch_count(); ++b) run_branch(b, visit);
}

bool is_elementary_abelian(const FiniteGroup& g) {
  return g.order() > 1 && g.is_abelian() && is_prime(g.exponent());
}

void check_enumerable(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_aut_enumeration)
    throw BoundExceeded("automorphism enumeration bound", limits.max_aut_enumeration, g.order());
  if (is_elementary_abelian(g)) {
    unsigned rank = 0;
    for (std::size_t n = g.order(); n > 1; n /= g.exponent()) ++rank;
    if (rank > limits.max_elementary_abelian_rank)
      throw BoundExceeded("elementary abelian rank bound", limits.max_elementary_abelian_rank, rank);
  }
}

void for_each_automorphism(const FiniteGroup& g, const AutomorphismSearch::Visitor& visit,
                           const Limits& limits) {
  AutomorphismSearch(g, limits).run(visit);
}

std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g, const Limits& limits) {
  std::vector<Automorphism> out;
  for_each_automorphism(
      g,
      [&](std::span<const Elem> perm) {
        if (out.size() >= limits.max_materialized_automorphisms)
          throw BoundExceeded("materialized automorphism bound", limits.max_materialized_automorphisms,
                              out.size() + 1);
        out.push_back(trusted_automorphism(g, std::vector<Elem>(perm.begin(), perm.end())));
      },
      limits);
  return out;
}

std::uint64_t count_automorphisms(const FiniteGroup& g, const Limits& limits) {
  std::uint64_t count = 0;
  for_each_automorphism(g, [&](std::span<const Elem>) { ++count; }, limits);
  return count;
}

// ---------------------------------------------------------------- derived objects

Subgroup per_subgroup(const Automorphism& a, std::uint64_t e) {
  if (e == 0) throw InvalidInput("period must be positive");
  auto len = cycle_lengths(a);
  std::vector<Elem> members;
  for (std::size_t x = 0; x < len.size(); ++x)
    if (e % len[x] == 0) members.push_back(static_cast<Elem>(x));
  return Subgroup(a.group(), std::move(members));
}

InducedAutomorphism induced_quotient_automorphism(const Automorphism& a, const Subgroup& n,
                                                  const Limits& limits) {
  const FiniteGroup& g = a.group();
  if (!is_normal(g, n)) throw InvalidInput("subgroup is not normal");
  for (Elem m : n.members())
    if (!n.contains(a(m))) throw InvalidInput("subgroup is not admissible for the automorphism");
  Quotient q = quotient(g, n, limits);
  std::vector<Elem> perm(q.group.order());
  for (std::size_t c = 0; c < perm.size(); ++c) perm[c] = q.projection(a(q.representatives[c]));
  Automorphism induced = Automorphism::certify(q.group, std::move(perm));
  return InducedAutomorphism{std::move(q), std::move(induced)};
}

std::uint64_t frattini_order(const Automorphism& a, const Limits& limits) {
  return induced_quotient_automorphism(a, frattini(a.group(), limits), limits).induced.order();
}

AffineMapReport affine_map(const Automorphism& a, Elem g0) {
  const FiniteGroup& g = a.group();
  const std::size_t n = g.order();
  if (g0 >= n) throw InvalidInput("affine translation element out of range");
  AffineMapReport r;
  r.images.resize(n);
  for (std::size_t x = 0; x < n; ++x) r.images[x] = g.mul(g0, a(static_cast<Elem>(x)));

  std::vector<char> hit(n, 0);
  for (Elem y : r.images) hit[y] = 1;
  r.bijective = std::count(hit.begin(), hit.end(), 1) == static_cast<std::ptrdiff_t>(n);

  // Tail and period of the functional graph.
  std::vector<std::int64_t> pos(n, -1);
  std::vector<Elem> path;
  for (std::size_t s = 0; s < n; ++s) {
    path.clear();
    Elem x = static_cast<Elem>(s);
    while (pos[x] < 0) {
      pos[x] = static_cast<std::int64_t>(path.size());
      path.push_back(x);
      x = r.images[x];
    }
    auto first = static_cast<std::uint64_t>(pos[x]);
    r.tail = std::max(r.tail, first);
    r.period = lcm(r.period, path.size() - first);
    for (Elem y : path) pos[y] = -1;
  }
  if (r.bijective) r.order = r.period;

  r.aut_order = a.order();
  for (std::size_t x = 0; x < n; ++x)
    if (a(static_cast<Elem>(x)) == x)
      r.max_fixed_point_order = std::max(r.max_fixed_point_order, g.element_order(static_cast<Elem>(x)));
  if (g.is_abelian() && r.order) r.divides = (r.aut_order * r.max_fixed_point_order) % *r.order == 0;
  return r;
}

}  // namespace rcclab
