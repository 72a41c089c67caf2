#include "rcclab/numtheory.hpp"

#include <cstdlib>
#include <numeric>

#include "rcclab/error.hpp"

namespace rcclab {

const Limits& default_limits() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("RCCLAB_MAX_ORDER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.max_group_order = v;
    }
    return l;
  }();
  return limits;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 r = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& k) {
  if (n == 1) {
    p = 1;
    k = 0;
    return true;
  }
  auto f = factorize(n);
  if (f.size() != 1) return false;
  p = f[0].first;
  k = f[0].second;
  return true;
}

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  unsigned __int128 l = static_cast<unsigned __int128>(a.num_) * b.den_;
  unsigned __int128 r = static_cast<unsigned __int128>(b.num_) * a.den_;
  return l <=> r;
}

}  // namespace rcclab
