#include <doctest.h>

#include "rcclab/json_io.hpp"
#include "rcclab/numtheory.hpp"

using namespace rcclab;
using io::json;

TEST_CASE("malformed JSON reports the byte position") {
  CHECK_THROWS_WITH_AS(io::parse("{\"order\": 2,"), doctest::Contains("malformed JSON at byte"), InvalidInput);
  CHECK_THROWS_AS(io::parse(""), InvalidInput);
  CHECK(io::parse("{\"a\": [1,2]}").at("a").size() == 2);
  CHECK_THROWS_AS(io::read_json("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("group tables round-trip") {
  for (const auto& g : {quaternion_group(), symmetric_group(4), heisenberg_group(3), cyclic_group(1)}) {
    auto back = io::group_from_json(io::parse(io::to_json(g).dump()));
    CHECK(back.same_table(g));
    CHECK(back.labels() == g.labels());
    CHECK(back.identity() == g.identity());
    CHECK(back.tag() == g.tag());
  }
}

TEST_CASE("group input forms") {
  CHECK(io::group_from_json(json("cyclic(6)")).order() == 6);
  CHECK(io::group_from_json(json{{"catalog", "dihedral(4)"}}).order() == 8);
  auto perm = io::group_from_json(io::parse(R"({"degree": 4, "generators": [[0,1], [[0,1,2,3]]]})"));
  CHECK(perm.order() == 24);
  auto v4 = io::group_from_json(io::parse(R"({"degree": 4, "generators": [[[0,1],[2,3]], [[0,2],[1,3]]]})"));
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  auto z3 = io::group_from_json(io::parse(R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})"));
  CHECK(z3.order() == 3);
  auto wrapped = io::group_from_json(io::to_json(construct_sg120_8()));
  CHECK(wrapped.order() == 120);

  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"order": 2, "table": [[0,1],[1,1]]})")), InvalidInput);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"order": 3, "table": [[0,1],[1,0]]})")), InvalidInput);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"order": 2, "table": [[0,5],[1,0]]})")), InvalidInput);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"degree": 3, "generators": [[0,3]]})")), InvalidInput);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"table": "x"})")), InvalidInput);
  CHECK_THROWS_AS(io::group_from_json(io::parse("42")), InvalidInput);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"whatever": 1})")), InvalidInput);
}

TEST_CASE("polynomial and matrix readers") {
  auto f = io::poly_from_json(io::parse(R"({"p": 2, "coeffs": [1, 1, 1]})"));
  CHECK(f == GFPoly(2, {1, 1, 1}));
  CHECK(io::to_json(f) == io::parse(R"({"p": 2, "coeffs": [1, 1, 1]})"));
  auto a = io::matrix_from_json(io::parse(R"({"p": 3, "n": 2, "entries": [[0, 2], [1, 0]]})"));
  CHECK(a == GFMatrix(3, {{0, 2}, {1, 0}}));
  CHECK(io::matrix_from_json(io::to_json(a)) == a);
  CHECK_THROWS_AS(io::poly_from_json(io::parse(R"({"p": 4, "coeffs": [1]})")), InvalidInput);
  CHECK_THROWS_AS(io::poly_from_json(io::parse(R"({"coeffs": [1]})")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"p": 3, "n": 3, "entries": [[0, 2], [1, 0]]})")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"p": 3, "entries": [[0, 2], [1]]})")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"p": 3, "entries": [[0, "a"], [1, 0]]})")), InvalidInput);
}

TEST_CASE("automorphism readers") {
  auto z9 = cyclic_group(9);
  auto a = io::automorphism_from_json(z9, io::parse(R"({"gens": [1], "images": [2]})"));
  CHECK(a.order() == 6);
  auto b = io::automorphism_from_json(z9, io::to_json(a));
  CHECK(a == b);
  CHECK_THROWS_AS(io::automorphism_from_json(z9, io::parse(R"({"gens": [1], "images": [3]})")), InvalidInput);
  CHECK_THROWS_AS(io::automorphism_from_json(z9, io::parse(R"({"perm": [0, 1]})")), InvalidInput);
  CHECK_THROWS_AS(io::automorphism_from_json(z9, io::parse(R"({"gens": [1], "images": [2, 4]})")), InvalidInput);
  CHECK_THROWS_AS(io::automorphism_from_json(z9, io::parse(R"({"perm": [0,2,1,3,4,5,6,7,8]})")), InvalidInput);
}

TEST_CASE("verdict records") {
  auto z9 = cyclic_group(9);
  auto a = io::automorphism_from_json(z9, io::parse(R"({"gens": [1], "images": [2]})"));
  auto r = io::verdict_record(a, true);
  CHECK(r["rcc"] == true);
  CHECK(r["order"] == 6);
  CHECK(r["lambda"] == "2/3");
  CHECK(r["zeta"] == io::parse(R"({"1": 1, "2": 2, "6": 6})"));
  CHECK(r["witness"] == 1);
  CHECK(r["certificate"]["kind"] == "two_prime_order");
  CHECK(r["all_certificates"].size() >= 2);

  auto sg = construct_sg120_8();
  auto s = io::verdict_record(sg.automorphism);
  CHECK(s["rcc"] == false);
  CHECK(s["witness"].is_null());
  CHECK(s["certificate"].is_null());
  CHECK(s["zeta"] == io::parse(R"({"1": 30, "6": 30, "10": 30, "15": 30})"));
  CHECK_FALSE(s.contains("all_certificates"));
}

TEST_CASE("analyze reports are internally consistent") {
  for (const char* name : {"cyclic(6)", "symmetric(4)", "quaternion8", "dihedral(6)", "abelian([4,2],[3])"}) {
    auto rep = io::analyze(json(name));
    auto g = catalog(name);
    const auto& autos = rep["automorphisms"];
    CHECK(autos["count"] == count_automorphisms(g));
    CHECK(autos["records"].size() == autos["count"].get<std::size_t>());
    bool all = true;
    std::uint64_t best = 1;
    for (const auto& rec : autos["records"]) {
      std::uint64_t sum = 0;
      for (const auto& [d, z] : rec["zeta"].items()) sum += z.get<std::uint64_t>();
      CHECK(sum == g.order());
      all &= rec["rcc"].get<bool>();
      best = std::max(best, rec["max_length"].get<std::uint64_t>());
    }
    CHECK(rep["rcc_group"] == all);
    CHECK(autos["lambda_group"] == Rational(best, g.order()).str());
    CHECK(autos["lambda_group"] == lambda_group(g).str());
  }
  auto c6 = io::analyze(json("cyclic(6)"));
  CHECK(c6["automorphisms"]["count"] == 2);
  CHECK(c6["rcc_group"] == true);
}

TEST_CASE("analyze of construct outputs") {
  auto sg = io::analyze(io::parse(io::to_json(construct_sg120_8()).dump()), {false, false});
  CHECK(sg["packaged"]["rcc"] == false);
  CHECK(sg["packaged"]["zeta"] == io::parse(R"({"1": 30, "6": 30, "10": 30, "15": 30})"));
  CHECK(sg["rcc_group"] == false);
  CHECK(sg["automorphisms"]["non_rcc_count"].get<std::uint64_t>() > 0);
  CHECK_FALSE(sg["automorphisms"].contains("records"));

  for (const auto& inst : {construct_Go({2, 3, 5}, {1, 1, 1}), construct_many_prime(105)}) {
    auto j = io::parse(io::to_json(inst).dump());
    CHECK(j["verified"] == true);
    auto g = io::group_from_json(j);
    CHECK(g.same_table(inst.group));
    CHECK(io::automorphism_from_json(g, j) == inst.automorphism);
    auto rep = io::analyze(j, {false, false});
    CHECK(rep["packaged"]["rcc"] == false);
    CHECK(rep["rcc_group"] == false);
  }
}

TEST_CASE("analyze respects enumeration bounds") {
  Limits small = default_limits();
  small.max_aut_enumeration = 100;
  CHECK_THROWS_AS(io::analyze(json("symmetric(5)"), {}, small), BoundExceeded);
  auto rep = io::analyze(io::to_json(construct_sg120_8()), {false, false}, small);
  CHECK(rep["automorphisms"].contains("skipped"));
  CHECK(rep["rcc_group"] == false);
}

TEST_CASE("linear-algebra reports") {
  auto fr = io::frobenius_report(GFMatrix(3, {{0, 2}, {1, 0}}));
  CHECK(fr["invariant_factors"] == io::parse("[[1, 0, 1]]"));
  auto po = io::poly_order_report(GFPoly(2, {1, 1, 1}));
  CHECK(po["order"] == 3);
  CHECK(po["order_by_iteration"] == 3);
  auto rb = io::regular_basis_report(GFMatrix(3, {{0, 2}, {1, 0}}));
  CHECK(rb["order"] == 4);
  CHECK(rb["cycle_lengths"] == io::parse("[4, 4]"));
}
