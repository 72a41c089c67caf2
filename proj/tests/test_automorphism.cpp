#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rcclab/automorphism.hpp"
#include "rcclab/constructions.hpp"
#include "rcclab/numtheory.hpp"

using namespace rcclab;

namespace {

// |Aut(G)| by testing every bijection fixing the identity.
std::uint64_t brute_force_aut_count(const FiniteGroup& g) {
  std::vector<Elem> rest;
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity()) rest.push_back(x);
  std::vector<Elem> perm(g.order());
  std::uint64_t count = 0;
  do {
    perm[g.identity()] = g.identity();
    std::size_t k = 0;
    for (Elem x = 0; x < g.order(); ++x)
      if (x != g.identity()) perm[x] = rest[k++];
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a)
      for (Elem b = 0; b < g.order() && ok; ++b) ok = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

Automorphism mult_by(const FiniteGroup& zn, std::uint64_t u) {
  std::vector<Elem> perm(zn.order());
  for (std::uint64_t x = 0; x < zn.order(); ++x) perm[x] = static_cast<Elem>(x * u % zn.order());
  return Automorphism::certify(zn, perm);
}

Elem find_label(const FiniteGroup& g, const std::string& s) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.label(x) == s) return x;
  FAIL("label not found: " << s);
  return 0;
}

std::vector<FiniteGroup> small_catalog() {
  return {cyclic_group(1),        cyclic_group(8),          cyclic_group(12),       abelian_group({2, 2}),
          abelian_group({4, 2}),  abelian_group({3, 3}),    abelian_group({2, 2, 2}), dihedral_group(4),
          dihedral_group(5),      dihedral_group(6),        quaternion_group(),     symmetric_group(3),
          symmetric_group(4),     heisenberg_group(3),      abelian_group({4, 4})};
}

}  // namespace

TEST_CASE("certify rejects non-automorphisms") {
  auto z5 = cyclic_group(5);
  CHECK_NOTHROW(Automorphism::certify(z5, {0, 2, 4, 1, 3}));
  CHECK_THROWS_AS(Automorphism::certify(z5, {0, 2, 3, 1, 4}), InvalidInput);
  CHECK_THROWS_AS(Automorphism::certify(z5, {1, 0, 2, 3, 4}), InvalidInput);
  CHECK_THROWS_AS(Automorphism::certify(z5, {0, 1, 1, 3, 4}), InvalidInput);
  CHECK_THROWS_AS(Automorphism::certify(z5, {0, 1, 2}), InvalidInput);
}

TEST_CASE("hom_from_generator_images examples") {
  auto z5 = cyclic_group(5);
  Elem one[] = {1}, two[] = {2};
  auto id = automorphism_from_generator_images(z5, one, one);
  REQUIRE(id);
  CHECK(*id == Automorphism::identity(z5));

  auto a = automorphism_from_generator_images(z5, one, two);
  REQUIRE(a);
  CHECK(a->order() == 4);
  CHECK(a->perm() == std::vector<Elem>{0, 2, 4, 1, 3});

  auto s3 = symmetric_group(3);
  std::vector<Elem> transpositions, three_cycles;
  for (Elem x = 0; x < s3.order(); ++x) {
    if (s3.element_order(x) == 2) transpositions.push_back(x);
    if (s3.element_order(x) == 3) three_cycles.push_back(x);
  }
  Elem gens[] = {transpositions[0], transpositions[1]};
  Elem bad[] = {three_cycles[0], transpositions[1]};
  CHECK_FALSE(hom_from_generator_images(s3, gens, bad).has_value());
  Elem swapped[] = {transpositions[1], transpositions[0]};
  auto sw = automorphism_from_generator_images(s3, gens, swapped);
  REQUIRE(sw);
  CHECK(sw->order() == 2);

  Elem zero[] = {0};
  CHECK_THROWS_AS(hom_from_generator_images(z5, zero, zero), InvalidInput);
  // non-bijective homomorphism: Z/6 -> Z/6, 1 -> 2
  auto z6 = cyclic_group(6);
  Elem g6[] = {1}, i6[] = {2};
  auto h = hom_from_generator_images(z6, g6, i6);
  REQUIRE(h);
  CHECK_FALSE(h->is_injective());
  CHECK_FALSE(automorphism_from_generator_images(z6, g6, i6).has_value());
}

TEST_CASE("order equals lcm of generator periods") {
  for (const auto& g : small_catalog()) {
    if (g.order() > 64) continue;
    auto gens = greedy_generating_set(g);
    for (const auto& a : enumerate_automorphisms(g)) {
      std::uint64_t l = 1;
      for (Elem x : gens) {
        std::uint64_t e = 1;
        for (Elem y = a(x); y != x; y = a(y)) ++e;
        l = lcm(l, e);
      }
      CHECK(a.order() == l);
      std::vector<Elem> images;
      for (Elem x : gens) images.push_back(a(x));
      auto rebuilt = automorphism_from_generator_images(g, gens, images);
      REQUIRE(rebuilt);
      CHECK(*rebuilt == a);
    }
  }
}

TEST_CASE("enumerate_automorphisms examples") {
  CHECK(enumerate_automorphisms(cyclic_group(8)).size() == 4);
  auto s3 = symmetric_group(3);
  auto aut_s3 = enumerate_automorphisms(s3);
  CHECK(aut_s3.size() == 6);
  std::set<std::vector<Elem>> inner;
  for (Elem g = 0; g < s3.order(); ++g) inner.insert(inner_automorphism(s3, g).perm());
  CHECK(inner.size() == 6);
  for (const auto& a : aut_s3) CHECK(inner.count(a.perm()) == 1);
  CHECK(enumerate_automorphisms(abelian_group({2, 2})).size() == 6);
}

TEST_CASE("automorphism counts match brute force and known values") {
  for (const auto& g : {cyclic_group(8), abelian_group({2, 2}), abelian_group({4, 2}), quaternion_group(),
                        dihedral_group(4), symmetric_group(3), cyclic_group(6), cyclic_group(7)})
    CHECK(count_automorphisms(g) == brute_force_aut_count(g));
  CHECK(count_automorphisms(quaternion_group()) == 24);
  CHECK(count_automorphisms(symmetric_group(4)) == 24);
  CHECK(count_automorphisms(dihedral_group(5)) == 20);
  CHECK(count_automorphisms(abelian_group({2, 2, 2})) == 168);
  CHECK(count_automorphisms(heisenberg_group(3)) == 432);
  CHECK(count_automorphisms(abelian_group({3, 3})) == 48);
}

TEST_CASE("enumeration bounds") {
  Limits small = default_limits();
  small.max_aut_enumeration = 10;
  CHECK_THROWS_AS(enumerate_automorphisms(cyclic_group(12), small), BoundExceeded);
  CHECK_THROWS_AS(check_enumerable(elementary_abelian_group(2, 5)), BoundExceeded);
  CHECK_NOTHROW(check_enumerable(elementary_abelian_group(2, 4)));
  CHECK(is_elementary_abelian(elementary_abelian_group(3, 3)));
  CHECK_FALSE(is_elementary_abelian(cyclic_group(4)));
}

TEST_CASE("Aut(G) is closed under composition and inverse") {
  for (const auto& g : small_catalog()) {
    auto auts = enumerate_automorphisms(g);
    REQUIRE(auts.size() <= 2000);
    std::set<std::vector<Elem>> all;
    for (const auto& a : auts) CHECK(all.insert(a.perm()).second);
    CHECK(all.count(Automorphism::identity(g).perm()) == 1);
    for (const auto& a : auts) {
      CHECK(all.count(a.inverse().perm()) == 1);
      CHECK((a * a.inverse()) == Automorphism::identity(g));
    }
    std::size_t step = auts.size() > 200 ? 7 : 1;
    for (std::size_t i = 0; i < auts.size(); i += step)
      for (const auto& b : auts) CHECK(all.count((auts[i] * b).perm()) == 1);
  }
}

TEST_CASE("composition convention and powers") {
  auto z7 = cyclic_group(7);
  auto a = mult_by(z7, 2), b = mult_by(z7, 3);
  CHECK((a * b) == mult_by(z7, 6));
  CHECK(a.power(3) == Automorphism::identity(z7));
  CHECK(b.power(2) == mult_by(z7, 2));
  auto s3 = symmetric_group(3);
  auto c1 = inner_automorphism(s3, 1), c2 = inner_automorphism(s3, 2);
  for (Elem x = 0; x < 6; ++x) CHECK((c1 * c2)(x) == c1(c2(x)));
  for (Elem x = 0; x < 6; ++x) CHECK(c1(x) == s3.mul(s3.mul(1, x), s3.inv(1)));
}

TEST_CASE("cycle_structure examples") {
  auto z7 = cyclic_group(7);
  CHECK(cycle_structure(Automorphism::identity(z7)).counts() == std::map<std::uint64_t, std::uint64_t>{{1, 7}});
  CHECK(cycle_structure(mult_by(z7, 2)).counts() == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 6}});
  auto cs = cycle_structure(mult_by(cyclic_group(9), 2));
  CHECK(cs.lengths() == std::set<std::uint64_t>{1, 2, 6});
  CHECK(cs.max_length() == 6);
  CHECK(cs.order() == 6);
  CHECK(cs.zeta(6) == 6);
  CHECK(cs.zeta(5) == 0);
  CHECK_THROWS_AS(CycleStructure(std::map<std::uint64_t, std::uint64_t>{{2, 3}}), InvalidInput);
}

TEST_CASE("cycle structure and inverse-length invariants") {
  for (const auto& g : small_catalog()) {
    for (const auto& a : enumerate_automorphisms(g)) {
      auto cs = cycle_structure(a);
      std::uint64_t sum = 0, l = 1;
      for (auto [d, z] : cs.counts()) {
        sum += z;
        CHECK(z % d == 0);
        l = lcm(l, d);
      }
      CHECK(sum == g.order());
      CHECK(l == a.order());
      CHECK(cs.zeta(1) >= 1);
      CHECK(a.power(a.order()) == Automorphism::identity(g));
      auto len = cycle_lengths(a);
      for (Elem x = 0; x < g.order(); ++x) CHECK(len[x] == len[g.inv(x)]);
    }
  }
}

TEST_CASE("per_subgroup examples and monotonicity") {
  auto z5 = cyclic_group(5);
  CHECK(per_subgroup(Automorphism::identity(z5), 1).size() == 5);
  auto a = mult_by(z5, 2);
  CHECK(per_subgroup(a, 4).size() == 5);
  CHECK(per_subgroup(a, 2).is_trivial());
  CHECK_THROWS_AS(per_subgroup(a, 0), InvalidInput);

  for (const auto& g : {symmetric_group(4), heisenberg_group(3), abelian_group({4, 2, 2}), dihedral_group(6)}) {
    auto auts = enumerate_automorphisms(g);
    for (std::size_t i = 0; i < auts.size(); i += 5) {
      const auto& b = auts[i];
      for (std::uint64_t e1 = 1; e1 <= 12; ++e1)
        for (std::uint64_t e2 = e1; e2 <= 12; e2 += e1) {
          auto s1 = per_subgroup(b, e1), s2 = per_subgroup(b, e2);
          for (Elem x : s1.members()) CHECK(s2.contains(x));
        }
    }
  }
}

TEST_CASE("induced_quotient_automorphism examples") {
  auto z4 = cyclic_group(4);
  auto whole = induced_quotient_automorphism(mult_by(z4, 3), Subgroup(z4, {0, 1, 2, 3}));
  CHECK(whole.quotient.group.order() == 1);

  auto ind = induced_quotient_automorphism(mult_by(z4, 3), Subgroup(z4, {0, 2}));
  CHECK(ind.quotient.group.order() == 2);
  CHECK(ind.induced == Automorphism::identity(ind.quotient.group));

  auto q8 = quaternion_group();
  auto ci = inner_automorphism(q8, find_label(q8, "i"));
  CHECK(ci(find_label(q8, "j")) == find_label(q8, "-j"));
  CHECK(ci(find_label(q8, "i")) == find_label(q8, "i"));
  auto iq = induced_quotient_automorphism(ci, frattini(q8));
  CHECK(iq.induced == Automorphism::identity(iq.quotient.group));
  CHECK(frattini_order(ci) == 1);

  auto s3 = symmetric_group(3);
  Elem t = 0;
  for (Elem x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) t = x;
  CHECK_THROWS_AS(induced_quotient_automorphism(Automorphism::identity(s3), Subgroup(s3, {0, t})), InvalidInput);
  auto v4 = abelian_group({2, 2});
  auto swap = Automorphism::certify(v4, {0, 2, 1, 3});
  CHECK_THROWS_AS(induced_quotient_automorphism(swap, Subgroup(v4, {0, 1})), InvalidInput);
}

TEST_CASE("induced map commutes with the projection") {
  for (const auto& g : {quaternion_group(), heisenberg_group(3), dihedral_group(4), abelian_group({4, 2})}) {
    auto f = frattini(g);
    for (const auto& a : enumerate_automorphisms(g)) {
      auto ind = induced_quotient_automorphism(a, f);
      for (Elem x = 0; x < g.order(); ++x) CHECK(ind.quotient.projection(a(x)) == ind.induced(ind.quotient.projection(x)));
      CHECK(frattini_order(a) == ind.induced.order());
    }
  }
}

TEST_CASE("affine_map examples") {
  auto z9 = cyclic_group(9);
  auto a = mult_by(z9, 2);
  auto r0 = affine_map(a, 0);
  CHECK(r0.bijective);
  CHECK(r0.images == a.perm());
  REQUIRE(r0.order);
  CHECK(*r0.order == 6);

  auto z4 = cyclic_group(4);
  auto t = affine_map(Automorphism::identity(z4), 1);
  REQUIRE(t.order);
  CHECK(*t.order == 4);
  CHECK(t.aut_order == 1);
  CHECK(t.max_fixed_point_order == 4);
  CHECK(t.divides == std::optional<bool>(true));

  auto z5 = cyclic_group(5);
  auto n = affine_map(mult_by(z5, 4), 1);
  CHECK(n.images == std::vector<Elem>{1, 0, 4, 3, 2});
  REQUIRE(n.order);
  CHECK(*n.order == 2);
  CHECK(n.max_fixed_point_order == 1);
  CHECK(n.divides == std::optional<bool>(true));
  CHECK_THROWS_AS(affine_map(mult_by(z5, 4), 9), InvalidInput);
}

TEST_CASE("affine order divides o1*o2 on abelian groups") {
  std::vector<FiniteGroup> groups;
  for (std::uint64_t n : {8, 12, 16, 18, 24, 27, 36})
    for (const auto& fs : abelian_groups_of_order(n)) groups.push_back(abelian_group(fs));
  std::vector<std::vector<Automorphism>> auts;
  for (const auto& g : groups) auts.push_back(enumerate_automorphisms(g));
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> gi(0, groups.size() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t k = gi(rng);
    std::uniform_int_distribution<std::size_t> ai(0, auts[k].size() - 1);
    std::uniform_int_distribution<Elem> xi(0, static_cast<Elem>(groups[k].order() - 1));
    const auto& a = auts[k][ai(rng)];
    Elem g0 = xi(rng);
    auto rep = affine_map(a, g0);
    REQUIRE(rep.bijective);
    // order by direct iteration of the images
    std::vector<Elem> cur(rep.images);
    std::uint64_t ord = 1;
    auto is_id = [&] {
      for (Elem x = 0; x < cur.size(); ++x)
        if (cur[x] != x) return false;
      return true;
    };
    while (!is_id()) {
      for (auto& y : cur) y = rep.images[y];
      ++ord;
    }
    CHECK(*rep.order == ord);
    std::uint64_t o2 = 1;
    for (Elem x = 0; x < groups[k].order(); ++x)
      if (a(x) == x) o2 = std::max(o2, groups[k].element_order(x));
    CHECK(rep.max_fixed_point_order == o2);
    CHECK((a.order() * o2) % ord == 0);
    CHECK(rep.divides == std::optional<bool>(true));
  }
}

TEST_CASE("search internals: candidates respect order and class size") {
  auto g = symmetric_group(4);
  AutomorphismSearch s(g);
  CHECK(subgroup_closure(g, s.generators()).size() == g.order());
  auto sizes = conjugacy_class_sizes(g);
  for (std::size_t i = 0; i < s.generators().size(); ++i)
    for (Elem c : s.candidates()[i]) {
      CHECK(g.element_order(c) == g.element_order(s.generators()[i]));
      CHECK(sizes[c] == sizes[s.generators()[i]]);
    }
  std::size_t total = 0;
  for (std::size_t b = 0; b < s.branch_count(); ++b) s.run_branch(b, [&](std::span<const Elem>) { ++total; });
  CHECK(total == 24);
}
