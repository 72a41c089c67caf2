#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcclab/error.hpp"

namespace rcclab {

using Elem = std::uint32_t;

/// Unvalidated multiplication table plus optional metadata.
struct GroupTable {
  std::vector<std::vector<Elem>> table;
  std::vector<std::string> labels;         // empty: default labels
  std::optional<Elem> identity;            // empty: located automatically
  std::vector<Elem> generators;            // empty: computed
  std::string tag;
};

/// A certified finite group given by its Cayley table. Copies share the table.
class FiniteGroup {
public:
  std::size_t order() const { return d_->order; }
  Elem identity() const { return d_->identity; }
  Elem mul(Elem a, Elem b) const { return d_->table[static_cast<std::size_t>(a) * d_->order + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem pow(Elem a, std::uint64_t k) const;
  std::uint64_t element_order(Elem a) const { return d_->element_order[a]; }
  const std::string& label(Elem a) const { return d_->labels[a]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  /// Generating set: the supplied one, or a greedy one (largest element order first).
  const std::vector<Elem>& generators() const { return d_->generators; }
  const std::string& tag() const { return d_->tag; }
  std::span<const Elem> row(Elem a) const {
    return {d_->table.data() + static_cast<std::size_t>(a) * d_->order, d_->order};
  }
  std::span<const Elem> table() const { return d_->table; }
  bool is_abelian() const { return d_->abelian; }
  std::uint64_t exponent() const { return d_->exponent; }

  /// Tables equal (labels and metadata ignored).
  bool same_table(const FiniteGroup& other) const;
  bool same_object(const FiniteGroup& other) const { return d_ == other.d_; }

  FiniteGroup with_tag(std::string tag) const;

private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> table;
    std::vector<std::string> labels;
    Elem identity = 0;
    std::vector<Elem> generators;
    std::string tag;
    std::vector<Elem> inverse;
    std::vector<std::uint64_t> element_order;
    bool abelian = false;
    std::uint64_t exponent = 1;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend FiniteGroup validate_group(GroupTable candidate, const Limits& limits);
};

/// Certify group axioms. Throws InvalidInput naming the first violated axiom.
FiniteGroup validate_group(GroupTable candidate, const Limits& limits = default_limits());

/// A certified subgroup; members are sorted.
class Subgroup {
public:
  /// Checks identity, closure and inverses. Throws InvalidInput otherwise.
  Subgroup(FiniteGroup parent, std::vector<Elem> members);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem g) const { return mask_[g]; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

/// Homomorphism certified exhaustively on construction.
class GroupHom {
public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> images);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem operator()(Elem g) const { return images_[g]; }

  bool is_injective() const;
  bool is_surjective() const;
  std::vector<Elem> kernel() const;

private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

/// Smallest subgroup containing `gens`.
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);
std::vector<Elem> closure_members(const FiniteGroup& g, std::span<const Elem> gens);

bool is_normal(const FiniteGroup& g, const Subgroup& s);

struct Quotient {
  FiniteGroup group;      // elements are cosets, indexed by least representative order
  GroupHom projection;    // G -> G/N
  std::vector<Elem> representatives;  // least element of each coset
};

/// G/N for normal N. Throws InvalidInput if N is not normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits = default_limits());

/// Pairs (g, h) indexed g + |G| * h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const Limits& limits = default_limits());

/// N x| H with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2); pairs indexed n + |N| * h.
/// `action[h]` is the element permutation of N by which h acts.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Elem>>& action,
                               const Limits& limits = default_limits());

/// Image vector of a product of disjoint or overlapping cycles, applied left to right.
std::vector<Elem> perm_from_cycles(std::size_t degree, const std::vector<std::vector<Elem>>& cycles);

/// Cayley table of the group generated by permutations (image vectors) of {0..degree-1}.
/// Products compose left to right; elements are sorted lexicographically by image vector,
/// so the identity is element 0.
FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<Elem>>& generators,
                              const Limits& limits = default_limits());

/// Every subgroup, by breadth-first joins ⟨H, g⟩ starting from the trivial subgroup.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = default_limits());
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Limits& limits = default_limits());

/// Intersection of the maximal subgroups; for p-groups also checked against G'G^p.
Subgroup frattini(const FiniteGroup& g, const Limits& limits = default_limits());

Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup power_subgroup(const FiniteGroup& g, std::uint64_t p);
Subgroup center(const FiniteGroup& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by the union of two subgroups.
Subgroup join(const Subgroup& a, const Subgroup& b);

std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
std::uint64_t element_order(const FiniteGroup& g, Elem a);

/// Size of the conjugacy class of each element.
std::vector<std::uint64_t> conjugacy_class_sizes(const FiniteGroup& g);

/// Greedy generating set: repeatedly add the element enlarging the closure most
/// (ties: larger element order, then least index).
std::vector<Elem> greedy_generating_set(const FiniteGroup& g);

/// Invariant fingerprint: sorted element orders, abelianness, centre size.
struct Fingerprint {
  std::vector<std::uint64_t> element_orders;
  bool abelian;
  std::size_t center_size;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const FiniteGroup& g);

}  // namespace rcclab
