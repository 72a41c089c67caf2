#include <doctest.h>

#include "rcclab/numtheory.hpp"
#include "rcclab/error.hpp"

using namespace rcclab;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("gcd and lcm") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(7, 0) == 7);
  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(1, 9) == 9);
  for (std::uint64_t a = 1; a < 40; ++a)
    for (std::uint64_t b = 1; b < 40; ++b) CHECK(gcd(a, b) * lcm(a, b) == a * b);
}

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == naive_prime(n));
  CHECK(is_prime(2147483647ull));
  CHECK_FALSE(is_prime(2147483647ull * 3));
}

TEST_CASE("factorization multiplies back") {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t prod = 1, last = 0;
    for (auto [p, e] : factorize(n)) {
      CHECK(naive_prime(p));
      CHECK(p > last);
      last = p;
      prod *= ipow(p, e);
      CHECK(valuation(n, p) == e);
    }
    CHECK(prod == n);
  }
  CHECK(prime_divisors(210) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(prime_divisors(1).empty());
  CHECK_THROWS_AS(valuation(0, 2), InvalidInput);
}

TEST_CASE("powmod matches repeated multiplication") {
  for (std::uint64_t m = 1; m < 30; ++m)
    for (std::uint64_t b = 0; b < 30; ++b) {
      std::uint64_t acc = 1 % m;
      for (std::uint64_t e = 0; e < 20; ++e) {
        CHECK(powmod(b, e, m) == acc);
        acc = acc * b % m;
      }
    }
  CHECK(powmod(3, 1000000006ull, 1000000007ull) == 1);
}

TEST_CASE("prime powers") {
  std::uint64_t p = 0;
  unsigned k = 99;
  CHECK(prime_power(64, p, k));
  CHECK(p == 2);
  CHECK(k == 6);
  CHECK(prime_power(27, p, k));
  CHECK(p == 3);
  CHECK(k == 3);
  CHECK(prime_power(1, p, k));
  CHECK(k == 0);
  CHECK_FALSE(prime_power(12, p, k));
  CHECK_FALSE(prime_power(0, p, k));
}

TEST_CASE("rationals stay reduced and compare exactly") {
  Rational r(6, 9);
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);
  CHECK(r.str() == "2/3");
  CHECK(Rational(4, 2).str() == "2/1");
  CHECK(Rational(1, 3) == Rational(10, 30));
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(1, 2) > Rational(49, 99));
  CHECK(Rational(1, 3) >= Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}
