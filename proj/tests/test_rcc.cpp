#include <doctest.h>

#include <random>

#include "rcclab/constructions.hpp"
#include "rcclab/numtheory.hpp"
#include "rcclab/rcc.hpp"

using namespace rcclab;

namespace {

Automorphism mult_by(const FiniteGroup& zn, std::uint64_t u) {
  std::vector<Elem> perm(zn.order());
  for (std::uint64_t x = 0; x < zn.order(); ++x) perm[x] = static_cast<Elem>(x * u % zn.order());
  return Automorphism::certify(zn, perm);
}

// Coordinatewise multiplication on abelian_group({n1, n2}) (first factor fastest).
Automorphism mult_pair(const FiniteGroup& g, std::uint64_t n1, std::uint64_t n2, std::uint64_t u1, std::uint64_t u2) {
  std::vector<Elem> perm(g.order());
  for (std::uint64_t b = 0; b < n2; ++b)
    for (std::uint64_t a = 0; a < n1; ++a) perm[a + n1 * b] = static_cast<Elem>(a * u1 % n1 + n1 * (b * u2 % n2));
  return Automorphism::certify(g, perm);
}

bool has_kind(const std::vector<FastPathCertificate>& cs, CertificateKind k) {
  for (const auto& c : cs)
    if (c.kind == k) return true;
  return false;
}

std::vector<FiniteGroup> sweep_groups() {
  std::vector<FiniteGroup> gs{quaternion_group(), symmetric_group(3), symmetric_group(4), heisenberg_group(3),
                              dihedral_group(5),  dihedral_group(6),  dihedral_group(9),  dihedral_group(15)};
  for (std::uint64_t n : {6, 8, 12, 16, 18, 20, 24, 30, 36, 45})
    for (const auto& fs : abelian_groups_of_order(n)) gs.push_back(abelian_group(fs));
  return gs;
}

}  // namespace

TEST_CASE("check_rcc examples") {
  auto z9 = cyclic_group(9);
  auto id = check_rcc(Automorphism::identity(z9));
  CHECK(id.holds);
  CHECK(id.order == 1);
  REQUIRE(id.witness);

  auto a = mult_by(z9, 2);
  auto v = check_rcc(a);
  CHECK(v.holds);
  CHECK(v.order == 6);
  CHECK(v.lengths == std::set<std::uint64_t>{1, 2, 6});
  REQUIRE(v.witness);
  CHECK(cycle_lengths(a)[*v.witness] == 6);
  CHECK(*v.witness == 1);

  auto sg = construct_sg120_8();
  auto bad = check_rcc(sg.automorphism);
  CHECK_FALSE(bad.holds);
  CHECK(bad.order == 30);
  CHECK(bad.max_length == 15);
  CHECK(bad.lengths == std::set<std::uint64_t>{1, 6, 10, 15});
  CHECK_FALSE(bad.witness);
}

TEST_CASE("verdict invariants over catalog automorphisms") {
  for (const auto& g : sweep_groups())
    for (const auto& a : enumerate_automorphisms(g)) {
      auto v = check_rcc(a);
      std::uint64_t l = 1;
      for (auto d : v.lengths) l = lcm(l, d);
      CHECK(l == v.order);
      if (v.holds) {
        REQUIRE(v.witness);
        CHECK(cycle_lengths(a)[*v.witness] == a.order());
      } else {
        CHECK(v.max_length < v.order);
      }
    }
}

TEST_CASE("lambda examples") {
  CHECK(lambda(Automorphism::identity(cyclic_group(6))) == Rational(1, 6));
  CHECK(lambda(mult_by(cyclic_group(5), 2)) == Rational(4, 5));
  CHECK(lambda(mult_by(cyclic_group(9), 2)) == Rational(2, 3));
  CHECK(lambda_group(cyclic_group(5)) == Rational(4, 5));
  CHECK(lambda_group(cyclic_group(6)) == Rational(1, 3));
  Limits small = default_limits();
  small.max_aut_enumeration = 4;
  CHECK_THROWS_AS(lambda_group(cyclic_group(6), small), BoundExceeded);
}

TEST_CASE("fast_path examples") {
  auto z13 = cyclic_group(13);
  auto a12 = mult_by(z13, 2);
  REQUIRE(a12.order() == 12);
  auto c = fast_path(a12);
  REQUIRE(c);
  CHECK(c->kind == CertificateKind::two_prime_order);
  CHECK(c->primes == std::vector<std::uint64_t>{2, 3});

  // an order-7 automorphism of (Z/2)^3
  auto v8 = elementary_abelian_group(2, 3);
  std::vector<Elem> perm(8);
  for (Elem x = 0; x < 8; ++x) {  // x -> A x with A the companion matrix of X^3 + X + 1
    Elem b0 = x & 1, b1 = (x >> 1) & 1, b2 = (x >> 2) & 1;
    Elem y0 = b2, y1 = b0 ^ b2, y2 = b1;
    perm[x] = y0 | (y1 << 1) | (y2 << 2);
  }
  auto a7 = Automorphism::certify(v8, perm);
  REQUIRE(a7.order() == 7);
  auto certs7 = all_certificates(a7);
  CHECK(has_kind(certs7, CertificateKind::coprime_order));
  CHECK(has_kind(certs7, CertificateKind::nilpotent_group));

  auto a9 = mult_by(cyclic_group(9), 2);
  auto certs9 = all_certificates(a9);
  CHECK(has_kind(certs9, CertificateKind::lambda_third));
  for (const auto& cert : certs9)
    if (cert.kind == CertificateKind::lambda_third) CHECK(cert.lambda == Rational(2, 3));

  CHECK_FALSE(fast_path(construct_sg120_8().automorphism));
  CHECK(all_certificates(construct_sg120_8().automorphism).empty());
  CHECK(std::string(to_string(CertificateKind::lambda_third)) == "lambda_third");
}

TEST_CASE("certificates are sound and the numeric conditions hold") {
  for (const auto& g : sweep_groups())
    for (const auto& a : enumerate_automorphisms(g)) {
      bool holds = check_rcc(a).holds;
      auto certs = all_certificates(a);
      auto first = fast_path(a);
      CHECK(first.has_value() == !certs.empty());
      if (first) CHECK(first->kind == certs.front().kind);
      for (const auto& c : certs) {
        CHECK(holds);
        switch (c.kind) {
          case CertificateKind::two_prime_order: CHECK(prime_divisors(a.order()).size() <= 2); break;
          case CertificateKind::coprime_order: CHECK(gcd(a.order(), g.order()) == 1); break;
          case CertificateKind::nilpotent_group: CHECK(is_nilpotent(g)); break;
          case CertificateKind::lambda_third: CHECK(c.lambda >= Rational(1, 3)); break;
        }
      }
    }
}

TEST_CASE("large cycles force the RCC and trivial fixed subgroups") {
  for (const auto& g : sweep_groups())
    for (const auto& a : enumerate_automorphisms(g)) {
      auto lam = lambda(a);
      if (lam >= Rational(1, 3)) CHECK(check_rcc(a).holds);
      if (lam > Rational(1, 2)) CHECK(per_subgroup(a, 1).is_trivial());
    }
  for (const auto& inst : {construct_sg120_8(), construct_Go({2, 3, 5}, {1, 1, 1}), construct_Go({3, 5, 7}, {1, 1, 1})})
    CHECK(lambda(inst.automorphism) < Rational(1, 3));
}

TEST_CASE("dominance_check examples") {
  auto g = abelian_group({5, 7});
  auto a = mult_pair(g, 5, 7, 2, 2);
  Elem x = 1, y = 5;
  auto r = dominance_check(a, x, y, 2);
  CHECK(r.applicable);
  CHECK(r.length_x == 4);
  CHECK(r.length_y == 3);
  CHECK(r.length_xy == 12);
  CHECK(r.nu_xy == 2);
  CHECK(r.holds);

  auto z9 = cyclic_group(9);
  auto b = mult_by(z9, 2);
  auto r2 = dominance_check(b, 1, 0, 3);
  CHECK(r2.applicable);
  CHECK(r2.length_x == 6);
  CHECK(r2.nu_xy == 1);
  CHECK(r2.holds);

  auto same = dominance_check(b, 1, 2, 2);  // both on the 6-cycle
  CHECK_FALSE(same.applicable);
  CHECK_THROWS_AS(dominance_check(b, 1, 0, 4), InvalidInput);
}

TEST_CASE("dominance holds on random pairs with unequal valuations") {
  std::mt19937_64 rng(99);
  std::size_t trials = 0;
  for (const auto& g : sweep_groups()) {
    auto auts = enumerate_automorphisms(g);
    std::uniform_int_distribution<std::size_t> ai(0, auts.size() - 1);
    std::uniform_int_distribution<Elem> xi(0, static_cast<Elem>(g.order() - 1));
    for (int t = 0; t < 300; ++t) {
      const auto& a = auts[ai(rng)];
      auto len = cycle_lengths(a);
      Elem x = xi(rng), y = xi(rng);
      for (auto p : prime_divisors(lcm(len[x], len[y]))) {
        if (valuation(len[x], p) == valuation(len[y], p)) continue;
        auto r = dominance_check(a, x, y, p);
        ++trials;
        CHECK(r.applicable);
        CHECK(r.holds);
        // independent recomputation of the product's cycle length
        Elem xy = g.mul(x, y), z = a(xy);
        std::uint64_t l = 1;
        while (z != xy) {
          z = a(z);
          ++l;
        }
        CHECK(r.length_xy == l);
        CHECK(valuation(l, p) == std::max(valuation(len[x], p), valuation(len[y], p)));
      }
    }
  }
  CHECK(trials > 1000);
}

TEST_CASE("two-prime divisibility on every enumerated automorphism") {
  for (const auto& g : sweep_groups())
    for (const auto& a : enumerate_automorphisms(g)) {
      auto cs = cycle_structure(a);
      CHECK(two_prime_divisibility_holds(cs));
      auto ps = prime_divisors(a.order());
      if (ps.size() <= 2) CHECK(check_rcc(a).holds);
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          std::uint64_t need = ipow(ps[i], valuation(a.order(), ps[i])) * ipow(ps[j], valuation(a.order(), ps[j]));
          bool found = false;
          for (auto d : cs.lengths()) found |= d % need == 0;
          CHECK(found);
        }
    }
  CHECK(two_prime_divisibility_holds(cycle_structure(construct_sg120_8().automorphism)));
}

TEST_CASE("pqr_structure_check examples") {
  auto sg = pqr_structure_check(construct_sg120_8().automorphism);
  CHECK(sg.applicable);
  CHECK(sg.p == 2);
  CHECK(sg.q == 3);
  CHECK(sg.r == 5);
  CHECK(sg.zeta1 == 30);
  CHECK(sg.zeta_pq == 30);
  CHECK(sg.zeta_pr == 30);
  CHECK(sg.zeta_qr == 30);
  CHECK(sg.group_order_is_4_zeta1);
  CHECK(sg.only_expected_lengths);
  CHECK(sg.fixed_subgroup_normal);
  CHECK(sg.holds);

  auto go = pqr_structure_check(construct_Go({3, 5, 7}, {1, 1, 1}).automorphism);
  CHECK(go.applicable);
  CHECK(go.zeta1 == 105);
  CHECK(go.group_order == 420);
  CHECK(go.holds);

  auto rcc = pqr_structure_check(mult_by(cyclic_group(9), 2));
  CHECK_FALSE(rcc.applicable);
  CHECK(rcc.reason.rfind("not applicable", 0) == 0);
}

TEST_CASE("regular generating set examples") {
  auto v = elementary_abelian_group(2, 3);
  for (const auto& a : enumerate_automorphisms(v)) {
    auto rg = regular_generating_set_pgroup(a);
    CHECK(rg.ford == a.order());
    CHECK(rg.r == 3);
    CHECK(rg.m == 3);
    for (auto k : rg.exponents) CHECK(k == 0);
    CHECK(rg.generates);
  }

  auto z4 = cyclic_group(4);
  auto rg = regular_generating_set_pgroup(mult_by(z4, 3));
  CHECK(rg.m == 2);
  CHECK(rg.r == 1);
  CHECK(rg.ford == 1);
  REQUIRE(rg.elements.size() == 1);
  CHECK(rg.elements[0] == 1);
  CHECK(rg.cycle_lengths[0] == 2);
  CHECK(rg.exponents[0] == 1);

  auto q8 = quaternion_group();
  std::size_t n = 0;
  for (const auto& a : enumerate_automorphisms(q8)) {
    ++n;
    auto r = regular_generating_set_pgroup(a);
    REQUIRE(r.elements.size() == 2);
    CHECK(subgroup_closure(q8, r.elements).size() == 8);
    CHECK(r.ford == frattini_order(a));
    auto len = cycle_lengths(a);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(r.exponents[i] <= 2);
      CHECK(len[r.elements[i]] == ipow(2, r.exponents[i]) * r.ford);
    }
  }
  CHECK(n == 24);
  CHECK_THROWS_AS(regular_generating_set_pgroup(Automorphism::identity(cyclic_group(6))), InvalidInput);
}

TEST_CASE("regular generating sets, Burnside and Hall on small p-groups") {
  std::vector<FiniteGroup> gs{quaternion_group(), heisenberg_group(3), dihedral_group(4), dihedral_group(8)};
  for (std::uint64_t n : {4, 8, 9, 16, 25, 27})
    for (const auto& fs : abelian_groups_of_order(n)) gs.push_back(abelian_group(fs));
  for (const auto& g : gs) {
    FrattiniContext ctx(g);
    CHECK(ctx.frattini() == join(commutator_subgroup(g), power_subgroup(g, ctx.prime())));
    std::uint64_t kernel = 0;
    for (const auto& a : enumerate_automorphisms(g)) {
      auto rg = regular_generating_set_pgroup(ctx, a.perm());
      CHECK(rg.generates);
      CHECK(subgroup_closure(g, rg.elements).size() == g.order());
      CHECK(rg.elements.size() == ctx.r());
      auto len = cycle_lengths(a);
      for (std::size_t i = 0; i < rg.elements.size(); ++i) {
        CHECK(rg.exponents[i] <= ctx.hall_exponent());
        CHECK(len[rg.elements[i]] == ipow(ctx.prime(), rg.exponents[i]) * rg.ford);
      }
      auto ind = induced_quotient_automorphism(a, ctx.frattini());
      bool trivial = ind.induced == Automorphism::identity(ind.quotient.group);
      CHECK(trivial == acts_trivially_on_frattini_quotient(ctx, a.perm()));
      if (trivial) ++kernel;
    }
    CHECK(ipow(ctx.prime(), ctx.hall_exponent()) % kernel == 0);
  }
}

TEST_CASE("FrattiniContext coordinates round-trip") {
  FrattiniContext ctx(heisenberg_group(3));
  CHECK(ctx.m() == 3);
  CHECK(ctx.r() == 2);
  for (Elem q = 0; q < ctx.quotient().group.order(); ++q) {
    CHECK(ctx.quotient_element(ctx.coordinates(q)) == q);
    CHECK(ctx.coset(q).size() == 3);
  }
  CHECK_THROWS_AS(FrattiniContext(symmetric_group(3)), InvalidInput);
}

TEST_CASE("coprime RCC factors: product maximum is the lcm of maxima") {
  auto z4 = cyclic_group(4), z9 = cyclic_group(9);
  auto prod = direct_product(z4, z9);
  for (const auto& a : enumerate_automorphisms(z4))
    for (const auto& b : enumerate_automorphisms(z9)) {
      auto ab = product_automorphism(prod, a, b);
      auto ca = check_rcc(a), cb = check_rcc(b), cab = check_rcc(ab);
      REQUIRE(ca.holds);
      REQUIRE(cb.holds);
      CHECK(cab.max_length == lcm(ca.max_length, cb.max_length));
      CHECK(cab.holds);
    }
}
