#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rcclab {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// p-adic valuation; n must be nonzero.
unsigned valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// base^exp mod m without overflow for m < 2^63.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// If n = p^k for a prime p returns (p, k); k = 0 means n == 1.
bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& k);

/// Exact nonnegative fraction kept in lowest terms.
class Rational {
public:
  Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace rcclab
