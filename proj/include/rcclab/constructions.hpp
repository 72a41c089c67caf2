#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcclab/automorphism.hpp"

namespace rcclab {

/// Multiplicative; f(2^n) = 2^(n+1), f(p^n) = p^n for odd p.
std::uint64_t f_function(std::uint64_t o);

/// Points expected to share one cycle length.
struct LengthClaim {
  std::string what;
  std::vector<Elem> points;
  std::uint64_t length;
};

struct ExpectedProperties {
  std::uint64_t group_order = 0;
  std::uint64_t automorphism_order = 0;
  bool rcc = true;
  std::optional<std::map<std::uint64_t, std::uint64_t>> zeta;
  std::optional<std::set<std::uint64_t>> cycle_lengths;
  std::vector<LengthClaim> length_claims;
  std::vector<Elem> fixed_points;           // must be fixed (subset of fix)
  std::optional<std::uint64_t> fixed_subgroup_order;
  bool fixed_subgroup_normal = false;       // checked when set
};

struct ConstructedInstance {
  std::string name;
  FiniteGroup group;
  Automorphism automorphism;
  ExpectedProperties expected;
};

/// Re-derives every expected property; returns the list of mismatches (empty when all hold).
std::vector<std::string> verify(const ConstructedInstance& inst);

/// B x| V4 with B = Z/f(p1^k1) x Z/f(p2^k2) x Z/f(p3^k3) and alpha = conjugation by (1,1,1).
/// Elements are indexed b1 + n1*b2 + n1*n2*b3 + |B|*(e1 + 2*e2).
ConstructedInstance construct_Go(const std::vector<std::uint64_t>& primes,
                                 const std::vector<unsigned>& exps,
                                 const Limits& limits = default_limits());

/// G_{o'} x prod Z/p^(k+1) over the primes of o beyond the three smallest.
ConstructedInstance construct_many_prime(std::uint64_t o, const Limits& limits = default_limits());

/// Tuples (k1,k2,k3,k4) in Z/5 x Z/3 x Z/2 x Z/4, index k1 + 5k2 + 15k3 + 30k4.
FiniteGroup sg120_8_from_formula(const Limits& limits = default_limits());
FiniteGroup sg120_8_from_semidirect_tower(const Limits& limits = default_limits());
/// The automorphism from its case formula, and from images of x1..x4.
std::vector<Elem> sg120_8_alpha_formula();
std::optional<Automorphism> sg120_8_alpha_from_generators(const FiniteGroup& g);
ConstructedInstance construct_sg120_8(const Limits& limits = default_limits());

FiniteGroup cyclic_group(std::uint64_t n, const Limits& limits = default_limits());
/// Direct product of cyclic groups, first factor fastest in the index.
FiniteGroup abelian_group(const std::vector<std::uint64_t>& factors, const Limits& limits = default_limits());
/// Order 2n.
FiniteGroup dihedral_group(std::uint64_t n, const Limits& limits = default_limits());
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(std::uint64_t n, const Limits& limits = default_limits());
FiniteGroup elementary_abelian_group(std::uint64_t p, unsigned n, const Limits& limits = default_limits());
/// Upper unitriangular 3x3 matrices over GF(p); (a,b,c) indexed a + p*b + p^2*c.
FiniteGroup heisenberg_group(std::uint64_t p, const Limits& limits = default_limits());

/// Parses names such as "cyclic(12)", "abelian([2,2],[3])", "dihedral(5)", "quaternion8",
/// "symmetric(4)", "elementary_abelian(2,3)", "heisenberg(3)".
FiniteGroup catalog(const std::string& name, const Limits& limits = default_limits());

/// Cyclic factor lists (prime powers, per prime descending) of every abelian group of order n.
std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t n);

/// The product automorphism a x b on direct_product(a.group(), b.group()).
Automorphism product_automorphism(const FiniteGroup& product, const Automorphism& a, const Automorphism& b);

}  // namespace rcclab
