#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rcclab/group.hpp"

namespace rcclab {

/// A bijective endomorphism, stored as an element permutation.
class Automorphism {
public:
  /// Verifies bijectivity and perm[ab] = perm[a] perm[b] for all a, b.
  static Automorphism certify(FiniteGroup g, std::vector<Elem> perm);
  static Automorphism identity(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Elem>& perm() const { return perm_; }
  Elem operator()(Elem x) const { return perm_[x]; }
  std::uint64_t order() const { return order_; }

  /// (a * b)(x) = a(b(x)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  Automorphism inverse() const;
  Automorphism power(std::uint64_t k) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.perm_ == b.perm_; }

private:
  Automorphism(FiniteGroup g, std::vector<Elem> perm);

  FiniteGroup group_;
  std::vector<Elem> perm_;
  std::uint64_t order_ = 1;

  friend class AutomorphismSearch;
  friend Automorphism trusted_automorphism(FiniteGroup g, std::vector<Elem> perm);
};

/// Wraps a permutation already known to be an automorphism (no multiplicativity check).
Automorphism trusted_automorphism(FiniteGroup g, std::vector<Elem> perm);

/// x -> g x g^-1.
Automorphism inner_automorphism(const FiniteGroup& group, Elem g);

/// Points on cycles of each exact length: counts[d] = zeta_d.
class CycleStructure {
public:
  explicit CycleStructure(std::map<std::uint64_t, std::uint64_t> counts);

  const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t zeta(std::uint64_t d) const;
  std::uint64_t max_length() const { return counts_.rbegin()->first; }
  std::uint64_t order() const { return order_; }
  std::uint64_t points() const { return points_; }
  std::set<std::uint64_t> lengths() const;

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;

private:
  std::map<std::uint64_t, std::uint64_t> counts_;
  std::uint64_t order_ = 1;
  std::uint64_t points_ = 0;
};

/// Cycle length of every point of a permutation.
std::vector<std::uint64_t> cycle_lengths(std::span<const Elem> perm);
std::vector<std::uint64_t> cycle_lengths(const Automorphism& a);

CycleStructure cycle_structure(std::span<const Elem> perm);
CycleStructure cycle_structure(const Automorphism& a);

/// The homomorphism G -> target sending gens[i] to images[i], if one exists.
/// Throws InvalidInput if `gens` do not generate G.
std::optional<GroupHom> hom_from_generator_images(const FiniteGroup& g, std::span<const Elem> gens,
                                                  std::span<const Elem> images,
                                                  const FiniteGroup& target);
std::optional<GroupHom> hom_from_generator_images(const FiniteGroup& g, std::span<const Elem> gens,
                                                  std::span<const Elem> images);
/// As above, restricted to bijective results.
std::optional<Automorphism> automorphism_from_generator_images(const FiniteGroup& g,
                                                               std::span<const Elem> gens,
                                                               std::span<const Elem> images);

/// Backtracking search over images of the group's generating set. Candidate images
/// share element order and conjugacy-class size with the generator; partial maps are
/// checked edge by edge on the Cayley graph, so every complete assignment is an
/// automorphism. Branches (choices for the first generator) are independent.
class AutomorphismSearch {
public:
  using Visitor = std::function<void(std::span<const Elem> perm)>;

  explicit AutomorphismSearch(FiniteGroup g, const Limits& limits = default_limits());

  const FiniteGroup& group() const { return group_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<std::vector<Elem>>& candidates() const { return candidates_; }
  std::size_t branch_count() const { return candidates_.empty() ? 1 : candidates_[0].size(); }

  /// Visit every automorphism whose first generator image is candidates()[0][branch].
  void run_branch(std::size_t branch, const Visitor& visit) const;
  /// Visit every automorphism in deterministic (lexicographic candidate) order.
  void run(const Visitor& visit) const;

private:
  FiniteGroup group_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
};

bool is_elementary_abelian(const FiniteGroup& g);

/// Throws BoundExceeded when Aut(G) enumeration is refused (order bound, or elementary
/// abelian of rank above the configured bound).
void check_enumerable(const FiniteGroup& g, const Limits& limits = default_limits());

/// Visit all automorphisms (no count bound).
void for_each_automorphism(const FiniteGroup& g, const AutomorphismSearch::Visitor& visit,
                           const Limits& limits = default_limits());

/// All automorphisms, no duplicates, in search order.
std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g,
                                                  const Limits& limits = default_limits());

std::uint64_t count_automorphisms(const FiniteGroup& g, const Limits& limits = default_limits());

/// {g : a^e(g) = g}.
Subgroup per_subgroup(const Automorphism& a, std::uint64_t e);

struct InducedAutomorphism {
  Quotient quotient;
  Automorphism induced;
};

/// The automorphism of G/N with pi∘a = induced∘pi. N must be normal and a[N] = N.
InducedAutomorphism induced_quotient_automorphism(const Automorphism& a, const Subgroup& n,
                                                  const Limits& limits = default_limits());

/// Order of the automorphism induced on G/Frat(G).
std::uint64_t frattini_order(const Automorphism& a, const Limits& limits = default_limits());

/// g -> g0 * a(g), with its functional order and the affine-order divisibility check.
struct AffineMapReport {
  std::vector<Elem> images;
  bool bijective = false;
  std::uint64_t tail = 0;    // longest pre-periodic path
  std::uint64_t period = 1;  // lcm of cycle lengths in the functional graph
  std::optional<std::uint64_t> order;  // set when bijective
  std::uint64_t aut_order = 1;         // o1
  std::uint64_t max_fixed_point_order = 1;  // o2
  std::optional<bool> divides;  // order | o1*o2, evaluated for abelian groups
};

AffineMapReport affine_map(const Automorphism& a, Elem g0);

}  // namespace rcclab
