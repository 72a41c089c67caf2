#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rcclab/error.hpp"

namespace rcclab {

using Residue = std::uint64_t;
using GFVector = std::vector<Residue>;

/// Throws InvalidInput unless p is a prime below 2^31.
void check_prime_modulus(std::uint64_t p);

/// Dense polynomial over GF(p), lowest degree first, trimmed.
class GFPoly {
public:
  GFPoly() = default;
  /// Coefficients are reduced mod p; trailing zeros are trimmed.
  GFPoly(std::uint64_t p, std::vector<std::int64_t> coeffs);

  static GFPoly zero(std::uint64_t p);
  static GFPoly constant(std::uint64_t p, Residue c);
  static GFPoly x(std::uint64_t p);
  static GFPoly from_residues(std::uint64_t p, std::vector<Residue> coeffs);

  std::uint64_t modulus() const { return p_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Residue lead() const { return c_.empty() ? 0 : c_.back(); }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  GFPoly monic() const;
  Residue eval(Residue x) const;

  friend GFPoly operator+(const GFPoly& a, const GFPoly& b);
  friend GFPoly operator-(const GFPoly& a, const GFPoly& b);
  friend GFPoly operator*(const GFPoly& a, const GFPoly& b);
  friend bool operator==(const GFPoly& a, const GFPoly& b) = default;

private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<Residue> c_;
};

/// Order by (degree, coefficients lowest degree first).
bool poly_less(const GFPoly& a, const GFPoly& b);

std::pair<GFPoly, GFPoly> poly_divmod(const GFPoly& a, const GFPoly& m);
GFPoly poly_mul_mod(const GFPoly& a, const GFPoly& b, const GFPoly& m);
GFPoly poly_pow_mod(const GFPoly& a, std::uint64_t e, const GFPoly& m);
/// Monic gcd (zero if both are zero).
GFPoly poly_gcd(GFPoly a, GFPoly b);

struct PolyFactor {
  GFPoly factor;
  unsigned exponent;
};

/// Monic irreducible factorization by deterministic trial division.
/// Output sorted by (degree, coefficients). The leading coefficient is dropped.
std::vector<PolyFactor> poly_factor(const GFPoly& f, const Limits& limits = default_limits());

bool is_irreducible(const GFPoly& f, const Limits& limits = default_limits());

/// Multiplicative order of X in GF(p)[X]/(f) via the factorization formula.
std::uint64_t poly_order(const GFPoly& f, const Limits& limits = default_limits());

/// Same quantity by iterating X, X^2, ... mod f.
std::uint64_t poly_order_by_iteration(const GFPoly& f, const Limits& limits = default_limits());

/// Coefficient sum mod 2 of a polynomial over GF(2).
Residue parity(const GFPoly& f);

class GFMatrix {
public:
  GFMatrix() = default;
  GFMatrix(std::uint64_t p, std::size_t n);
  /// Rows must be n x n; entries reduced mod p.
  GFMatrix(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows);

  static GFMatrix identity(std::uint64_t p, std::size_t n);

  std::uint64_t modulus() const { return p_; }
  std::size_t size() const { return n_; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<Residue>& entries() const { return a_; }

  GFVector apply(std::span<const Residue> v) const;

  friend GFMatrix operator*(const GFMatrix& a, const GFMatrix& b);
  friend bool operator==(const GFMatrix& a, const GFMatrix& b) = default;

private:
  std::uint64_t p_ = 2;
  std::size_t n_ = 0;
  std::vector<Residue> a_;
};

/// Companion matrix with ones on the subdiagonal and -a_0..-a_{d-1} in the last column.
GFMatrix companion_matrix(const GFPoly& f);
GFMatrix block_diagonal(std::span<const GFMatrix> blocks);

std::size_t rank(const GFMatrix& a);
bool is_invertible(const GFMatrix& a);
/// Throws InvalidInput for singular input.
GFMatrix inverse(const GFMatrix& a);
bool is_identity(const GFMatrix& a);

/// Invariant-factor (rational canonical) form: inverse(basis_change) * A * basis_change
/// equals blockdiag(companion(p_1), ..., companion(p_s)) with p_1 | p_2 | ... | p_s.
struct FrobeniusDecomposition {
  GFMatrix basis_change;
  std::vector<GFPoly> invariant_factors;

  GFMatrix normal_form() const;
};

FrobeniusDecomposition frobenius_form(const GFMatrix& a, const Limits& limits = default_limits());

GFPoly minimal_polynomial(const GFMatrix& a, const Limits& limits = default_limits());
GFPoly characteristic_polynomial(const GFMatrix& a, const Limits& limits = default_limits());

/// lcm of the orders of the invariant factors; throws for singular input.
std::uint64_t matrix_order(const GFMatrix& a, const Limits& limits = default_limits());

/// Least k >= 1 with A^k = I, by repeated multiplication up to `max_steps`.
std::uint64_t matrix_order_by_powering(const GFMatrix& a, std::uint64_t max_steps);

/// Length of the cycle of v under v -> Av (A invertible).
std::uint64_t vector_cycle_length(const GFMatrix& a, std::span<const Residue> v);

/// Lexicographic enumeration index of v (coordinate 0 most significant) and back.
std::uint64_t vector_index(std::uint64_t p, std::span<const Residue> v);
GFVector vector_from_index(std::uint64_t p, std::size_t n, std::uint64_t index);

/// n linearly independent vectors, each on a cycle of length ord(A) under v -> Av.
/// Regular vectors are enumerated lexicographically and greedily extracted.
std::vector<GFVector> regular_basis(const GFMatrix& a, const Limits& limits = default_limits());

/// Rank of a list of vectors of equal length.
std::size_t vectors_rank(std::uint64_t p, std::span<const GFVector> vs);

}  // namespace rcclab
