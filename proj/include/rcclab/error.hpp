#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad table, wrong modulus, non-normal subgroup, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A configured size bound was exceeded. `bound()` names the bound.
class BoundExceeded : public Error {
public:
  BoundExceeded(std::string bound, std::uint64_t limit, std::uint64_t requested)
      : Error(bound + " exceeded: requested " + std::to_string(requested) +
              ", limit " + std::to_string(limit)),
        bound_(std::move(bound)), limit_(limit), requested_(requested) {}

  const std::string& bound() const { return bound_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t requested() const { return requested_; }

private:
  std::string bound_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

/// Size bounds shared by the group and linear-algebra code.
struct Limits {
  std::uint64_t max_group_order = 5040;        // largest Cayley table we build
  std::uint64_t exhaustive_associativity = 512;  // n^3 check up to this order
  std::uint64_t max_aut_enumeration = 720;     // |G| bound for Aut(G) enumeration
  std::uint64_t max_elementary_abelian_rank = 4;  // (Z/p)^n enumeration refused above this
  std::uint64_t max_materialized_automorphisms = 1u << 21;  // enumerate_automorphisms result size
  std::uint64_t max_subgroup_lattice = 512;    // |G| bound for subgroup lattice
  std::uint64_t max_vector_enumeration = 1u << 16;  // p^n bound for regular_basis
  std::uint64_t max_factor_candidates = 1u << 20;   // trial divisors per degree
  std::uint64_t max_poly_iteration_degree = 16;     // direct-iteration cross-check
};

/// Default limits; `max_group_order` honours the RCCLAB_MAX_ORDER environment variable.
const Limits& default_limits();

}  // namespace rcclab
