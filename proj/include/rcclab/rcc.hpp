#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rcclab/automorphism.hpp"
#include "rcclab/gf.hpp"
#include "rcclab/numtheory.hpp"

namespace rcclab {

/// Whether a permutation has a cycle of length equal to its order.
struct RccVerdict {
  bool holds = false;
  std::uint64_t order = 1;
  std::uint64_t max_length = 1;
  std::set<std::uint64_t> lengths;
  std::optional<Elem> witness;  // least point on a regular cycle
};

RccVerdict check_rcc(std::span<const Elem> perm);
RccVerdict check_rcc(const Automorphism& a);

/// Largest cycle length over |G|, exact.
Rational lambda(const CycleStructure& cs);
Rational lambda(const Automorphism& a);
/// Maximum of lambda over Aut(G).
Rational lambda_group(const FiniteGroup& g, const Limits& limits = default_limits());

enum class CertificateKind { two_prime_order, coprime_order, nilpotent_group, lambda_third };

const char* to_string(CertificateKind k);

/// A sufficient condition for the RCC that holds for the instance.
struct FastPathCertificate {
  CertificateKind kind;
  std::uint64_t order = 1;
  std::uint64_t group_order = 1;
  std::vector<std::uint64_t> primes;  // prime divisors of the order
  Rational lambda;
};

/// Every applicable certificate, in priority order
/// (two_prime_order, coprime_order, nilpotent_group, lambda_third).
std::vector<FastPathCertificate> all_certificates(const CycleStructure& cs, bool nilpotent_group);
std::vector<FastPathCertificate> all_certificates(const Automorphism& a);

std::optional<FastPathCertificate> fast_path(const CycleStructure& cs, bool nilpotent_group);
std::optional<FastPathCertificate> fast_path(const Automorphism& a);

/// Valuation dominance for the cycle length of a product x*y.
struct DominanceReport {
  bool applicable = false;  // valuations of l_x and l_y differ
  std::uint64_t prime = 2;
  std::uint64_t length_x = 1, length_y = 1, length_xy = 1;
  unsigned nu_x = 0, nu_y = 0, nu_xy = 0;
  bool holds = false;  // nu_xy == max(nu_x, nu_y); meaningful when applicable
};

DominanceReport dominance_check(const FiniteGroup& g, std::span<const std::uint64_t> lengths, Elem x,
                                Elem y, std::uint64_t p);
DominanceReport dominance_check(const Automorphism& a, Elem x, Elem y, std::uint64_t p);

/// For all distinct primes p, q dividing the order, some cycle length is divisible
/// by p^{v_p(o)} q^{v_q(o)}.
bool two_prime_divisibility_holds(const CycleStructure& cs);

/// Structure of a non-RCC automorphism whose order is a product of three distinct primes.
struct PqrReport {
  bool applicable = false;
  std::string reason;
  std::uint64_t p = 0, q = 0, r = 0;
  std::uint64_t zeta1 = 0, zeta_pq = 0, zeta_pr = 0, zeta_qr = 0;
  std::uint64_t group_order = 0;
  bool zeta_equal = false;
  bool group_order_is_4_zeta1 = false;
  bool only_expected_lengths = false;
  bool fixed_subgroup_normal = false;
  bool holds = false;
};

PqrReport pqr_structure_check(const Automorphism& a);

/// Precomputed data for lifting regular bases from G/Frat(G) for a p-group G.
class FrattiniContext {
public:
  /// Throws InvalidInput if G is not a p-group (trivial group excluded).
  explicit FrattiniContext(FiniteGroup g, const Limits& limits = default_limits());

  const FiniteGroup& group() const { return group_; }
  const Subgroup& frattini() const { return frattini_; }
  const Quotient& quotient() const { return quotient_; }
  std::uint64_t prime() const { return p_; }
  unsigned m() const { return m_; }  // |G| = p^m
  unsigned r() const { return r_; }  // |G/Frat(G)| = p^r
  unsigned hall_exponent() const { return (m_ - r_) * r_; }

  /// Quotient element for a coordinate vector and back.
  Elem quotient_element(std::span<const Residue> coords) const;
  GFVector coordinates(Elem quotient_element) const;
  const std::vector<Elem>& coset(Elem quotient_element) const { return cosets_[quotient_element]; }

  /// Permutation of G/Frat(G) induced by perm, and its matrix in the chosen basis.
  std::vector<Elem> induced_perm(std::span<const Elem> perm) const;
  GFMatrix induced_matrix(std::span<const Elem> induced) const;

private:
  FiniteGroup group_;
  Subgroup frattini_;
  Quotient quotient_;
  std::uint64_t p_ = 2;
  unsigned m_ = 0, r_ = 0;
  std::vector<Elem> basis_;            // quotient elements
  std::vector<Elem> elem_of_index_;    // lexicographic coordinate index -> quotient element
  std::vector<std::uint64_t> index_of_elem_;
  std::vector<std::vector<Elem>> cosets_;
  Limits limits_;
};

struct RegularGeneratingSet {
  std::vector<Elem> elements;
  std::vector<unsigned> exponents;           // cycle length = p^k_i * ford
  std::vector<std::uint64_t> cycle_lengths;
  std::uint64_t ford = 1;
  std::uint64_t prime = 2;
  unsigned m = 0, r = 0;
  bool generates = false;
};

/// Lifts of a regular basis of G/Frat(G) for the induced automorphism, each chosen with minimal
/// cycle length in its coset. Throws std::logic_error if an asserted bound fails.
RegularGeneratingSet regular_generating_set_pgroup(const FrattiniContext& ctx, std::span<const Elem> perm);
RegularGeneratingSet regular_generating_set_pgroup(const Automorphism& a,
                                                   const Limits& limits = default_limits());

/// True if perm induces the identity on G/Frat(G).
bool acts_trivially_on_frattini_quotient(const FrattiniContext& ctx, std::span<const Elem> perm);

}  // namespace rcclab
