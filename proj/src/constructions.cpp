#include "rcclab/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <regex>

#include "rcclab/numtheory.hpp"
#include "rcclab/rcc.hpp"

namespace rcclab {

std::uint64_t f_function(std::uint64_t o) {
  if (o == 0) throw InvalidInput("f is defined on positive integers");
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(o)) r *= p == 2 ? ipow(2, e + 1) : ipow(p, e);
  return r;
}

std::vector<std::string> verify(const ConstructedInstance& inst) {
  std::vector<std::string> bad;
  const auto& ex = inst.expected;
  const auto& a = inst.automorphism;
  auto note = [&](bool ok, const std::string& msg) {
    if (!ok) bad.push_back(msg);
  };
  note(inst.group.order() == ex.group_order,
       "group order " + std::to_string(inst.group.order()) + " != " + std::to_string(ex.group_order));
  note(a.order() == ex.automorphism_order,
       "automorphism order " + std::to_string(a.order()) + " != " + std::to_string(ex.automorphism_order));
  auto verdict = check_rcc(a);
  note(verdict.holds == ex.rcc, std::string("RCC verdict is ") + (verdict.holds ? "true" : "false"));
  auto cs = cycle_structure(a);
  if (ex.zeta) note(cs.counts() == *ex.zeta, "zeta map differs");
  if (ex.cycle_lengths) note(cs.lengths() == *ex.cycle_lengths, "cycle length set differs");
  auto lengths = cycle_lengths(a);
  for (const auto& claim : ex.length_claims)
    for (Elem x : claim.points)
      if (lengths[x] != claim.length) {
        bad.push_back(claim.what + ": point " + std::to_string(x) + " has length " +
                      std::to_string(lengths[x]) + ", expected " + std::to_string(claim.length));
        break;
      }
  for (Elem x : ex.fixed_points)
    if (a(x) != x) {
      bad.push_back("point " + std::to_string(x) + " is not fixed");
      break;
    }
  auto fix = per_subgroup(a, 1);
  if (ex.fixed_subgroup_order)
    note(fix.size() == *ex.fixed_subgroup_order, "fixed subgroup has order " + std::to_string(fix.size()));
  if (ex.fixed_subgroup_normal) note(is_normal(inst.group, fix), "fixed subgroup is not normal");
  return bad;
}

// ---------------------------------------------------------------- catalog

namespace {

FiniteGroup mixed_radix_group(const std::vector<std::uint64_t>& radix,
                              const std::function<void(const std::vector<std::uint64_t>&,
                                                       const std::vector<std::uint64_t>&,
                                                       std::vector<std::uint64_t>&)>& op,
                              std::string tag, const Limits& limits) {
  std::uint64_t n = 1;
  for (auto r : radix) {
    if (r == 0) throw InvalidInput("factor orders must be positive");
    n *= r;
    if (n > limits.max_group_order) throw BoundExceeded("group order bound", limits.max_group_order, n);
  }
  auto digits = [&](std::uint64_t x) {
    std::vector<std::uint64_t> d(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      d[i] = x % radix[i];
      x /= radix[i];
    }
    return d;
  };
  auto index = [&](const std::vector<std::uint64_t>& d) {
    std::uint64_t x = 0;
    for (std::size_t i = radix.size(); i-- > 0;) x = x * radix[i] + d[i];
    return x;
  };
  std::vector<std::vector<std::uint64_t>> all(n);
  for (std::uint64_t x = 0; x < n; ++x) all[x] = digits(x);
  GroupTable t;
  t.table.assign(n, std::vector<Elem>(n));
  std::vector<std::uint64_t> out(radix.size());
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      op(all[x], all[y], out);
      for (std::size_t i = 0; i < radix.size(); ++i) out[i] %= radix[i];
      t.table[x][y] = static_cast<Elem>(index(out));
    }
  for (std::uint64_t x = 0; x < n; ++x) {
    if (radix.size() == 1) {
      t.labels.push_back(std::to_string(all[x][0]));
      continue;
    }
    std::string s = "(";
    for (std::size_t i = 0; i < radix.size(); ++i) s += (i ? "," : "") + std::to_string(all[x][i]);
    t.labels.push_back(s + ")");
  }
  t.identity = 0;
  t.tag = std::move(tag);
  return validate_group(std::move(t), limits);
}

std::string join_list(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<Elem> negation_perm(std::uint64_t n) {
  std::vector<Elem> p(n);
  for (std::uint64_t x = 0; x < n; ++x) p[x] = static_cast<Elem>((n - x) % n);
  return p;
}

std::vector<Elem> identity_perm(std::uint64_t n) {
  std::vector<Elem> p(n);
  for (std::uint64_t x = 0; x < n; ++x) p[x] = static_cast<Elem>(x);
  return p;
}

}  // namespace

FiniteGroup cyclic_group(std::uint64_t n, const Limits& limits) {
  return abelian_group({n}, limits).with_tag("cyclic(" + std::to_string(n) + ")");
}

FiniteGroup abelian_group(const std::vector<std::uint64_t>& factors, const Limits& limits) {
  std::vector<std::uint64_t> radix = factors.empty() ? std::vector<std::uint64_t>{1} : factors;
  return mixed_radix_group(
      radix,
      [](const auto& a, const auto& b, auto& out) {
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
      },
      "abelian(" + join_list(radix) + ")", limits);
}

FiniteGroup dihedral_group(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw InvalidInput("dihedral group needs n >= 1");
  // (r, s): rotation r, reflection bit s; (r1,s1)(r2,s2) = (r1 + (-1)^s1 r2, s1 + s2).
  return mixed_radix_group(
      {n, 2},
      [n](const auto& a, const auto& b, auto& out) {
        out[0] = a[1] ? a[0] + n - b[0] : a[0] + b[0];
        out[1] = a[1] + b[1];
      },
      "dihedral(" + std::to_string(n) + ")", limits);
}

FiniteGroup quaternion_group() {
  // Index 2u + s for unit u in {1, i, j, k} and sign s.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  GroupTable t;
  t.table.assign(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = x / 2, v = y / 2;
      int s = (x % 2) ^ (y % 2) ^ sign[u][v];
      t.table[x][y] = static_cast<Elem>(2 * unit[u][v] + s);
    }
  for (int x = 0; x < 8; ++x) t.labels.push_back(std::string(x % 2 ? "-" : "") + names[x / 2]);
  t.identity = 0;
  t.tag = "quaternion8";
  return validate_group(std::move(t));
}

FiniteGroup symmetric_group(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw InvalidInput("symmetric group needs n >= 1");
  std::uint64_t fact = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    fact *= k;
    if (fact > limits.max_group_order)
      throw BoundExceeded("group order bound", limits.max_group_order, fact);
  }
  std::vector<std::vector<Elem>> gens;
  if (n >= 2) {
    gens.push_back(perm_from_cycles(n, {{0, 1}}));
    std::vector<Elem> cyc(n);
    for (std::uint64_t i = 0; i < n; ++i) cyc[i] = static_cast<Elem>(i);
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  return permutation_group(n, gens, limits).with_tag("symmetric(" + std::to_string(n) + ")");
}

FiniteGroup elementary_abelian_group(std::uint64_t p, unsigned n, const Limits& limits) {
  if (!is_prime(p)) throw InvalidInput("elementary abelian group needs a prime");
  return abelian_group(std::vector<std::uint64_t>(std::max(n, 1u), n == 0 ? 1 : p), limits)
      .with_tag("elementary_abelian(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

FiniteGroup heisenberg_group(std::uint64_t p, const Limits& limits) {
  if (!is_prime(p)) throw InvalidInput("heisenberg group needs a prime");
  return mixed_radix_group(
      {p, p, p},
      [](const auto& a, const auto& b, auto& out) {
        out[0] = a[0] + b[0];
        out[1] = a[1] + b[1];
        out[2] = a[2] + b[2] + a[0] * b[1];
      },
      "heisenberg(" + std::to_string(p) + ")", limits);
}

namespace {

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidInput("expected a non-negative integer, got '" + s + "'");
  if (s.size() > 12) throw InvalidInput("integer too large: " + s);
  return std::stoull(s);
}

std::vector<std::uint64_t> parse_uint_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_uint(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

FiniteGroup catalog(const std::string& raw, const Limits& limits) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  if (name == "quaternion8" || name == "quaternion8()") return quaternion_group();
  auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')') throw InvalidInput("unknown catalog group '" + raw + "'");
  std::string head = name.substr(0, open);
  std::string args = name.substr(open + 1, name.size() - open - 2);
  if (head == "abelian") {
    std::vector<std::uint64_t> factors;
    std::regex list(R"(\[([0-9,]*)\])");
    std::string rest = std::regex_replace(args, list, "");
    for (char c : rest)
      if (c != ',') throw InvalidInput("abelian(...) expects lists such as [2,2],[3]");
    for (auto it = std::sregex_iterator(args.begin(), args.end(), list); it != std::sregex_iterator(); ++it)
      for (auto f : parse_uint_list((*it)[1].str())) factors.push_back(f);
    if (factors.empty()) factors.push_back(1);
    return abelian_group(factors, limits);
  }
  auto v = parse_uint_list(args);
  auto want = [&](std::size_t k) {
    if (v.size() != k)
      throw InvalidInput(head + " expects " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
  };
  if (head == "cyclic") return want(1), cyclic_group(v[0], limits);
  if (head == "dihedral") return want(1), dihedral_group(v[0], limits);
  if (head == "symmetric") return want(1), symmetric_group(v[0], limits);
  if (head == "heisenberg") return want(1), heisenberg_group(v[0], limits);
  if (head == "elementary_abelian") return want(2), elementary_abelian_group(v[0], static_cast<unsigned>(v[1]), limits);
  throw InvalidInput("unknown catalog group '" + raw + "'");
}

std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw InvalidInput("order must be positive");
  // partitions of e into non-increasing parts
  std::function<void(unsigned, unsigned, std::vector<unsigned>&, std::vector<std::vector<unsigned>>&)> parts =
      [&](unsigned left, unsigned maxp, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
        if (left == 0) {
          out.push_back(cur);
          return;
        }
        for (unsigned k = std::min(left, maxp); k >= 1; --k) {
          cur.push_back(k);
          parts(left - k, k, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::vector<std::uint64_t>> result{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> ps;
    std::vector<unsigned> cur;
    parts(e, e, cur, ps);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : result)
      for (const auto& part : ps) {
        auto v = base;
        for (unsigned k : part) v.push_back(ipow(p, k));
        next.push_back(std::move(v));
      }
    result = std::move(next);
  }
  if (n == 1) result = {{1}};
  return result;
}

Automorphism product_automorphism(const FiniteGroup& product, const Automorphism& a, const Automorphism& b) {
  const std::size_t na = a.group().order();
  if (product.order() != na * b.group().order()) throw InvalidInput("product order mismatch");
  std::vector<Elem> perm(product.order());
  for (std::size_t x = 0; x < product.order(); ++x)
    perm[x] = static_cast<Elem>(a(static_cast<Elem>(x % na)) + na * b(static_cast<Elem>(x / na)));
  return Automorphism::certify(product, std::move(perm));
}

// ---------------------------------------------------------------- G_o

ConstructedInstance construct_Go(const std::vector<std::uint64_t>& primes, const std::vector<unsigned>& exps,
                                 const Limits& limits) {
  if (primes.size() != 3 || exps.size() != 3) throw InvalidInput("G_o needs three primes and three exponents");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_prime(primes[i])) throw InvalidInput(std::to_string(primes[i]) + " is not prime");
    if (exps[i] == 0) throw InvalidInput("exponents must be positive");
    if (i && primes[i - 1] >= primes[i]) throw InvalidInput("primes must be distinct and increasing");
  }
  std::uint64_t n[3], q[3], o = 1;
  for (int i = 0; i < 3; ++i) {
    q[i] = ipow(primes[i], exps[i]);
    n[i] = f_function(q[i]);
    o *= q[i];
  }
  const std::uint64_t fo = n[0] * n[1] * n[2];
  if (4 * fo > limits.max_group_order) throw BoundExceeded("group order bound", limits.max_group_order, 4 * fo);

  FiniteGroup b = abelian_group({n[0], n[1], n[2]}, limits);
  FiniteGroup v4 = abelian_group({2, 2}, limits);
  // e1 = alpha_1 (identity on B_1), e2 = alpha_2 (identity on B_2); each inverts the other factors.
  std::vector<std::vector<Elem>> action(4, std::vector<Elem>(fo));
  for (std::uint64_t h = 0; h < 4; ++h) {
    bool e1 = h & 1, e2 = h & 2;
    bool inv[3] = {e2, e1, e1 != e2};
    for (std::uint64_t x = 0; x < fo; ++x) {
      std::uint64_t c[3] = {x % n[0], (x / n[0]) % n[1], x / (n[0] * n[1])};
      for (int i = 0; i < 3; ++i)
        if (inv[i]) c[i] = (n[i] - c[i]) % n[i];
      action[h][x] = static_cast<Elem>(c[0] + n[0] * c[1] + n[0] * n[1] * c[2]);
    }
  }
  std::string tag = "G_o(" + join_list({q[0], q[1], q[2]}) + ")";
  FiniteGroup g = semidirect_product(b, v4, action, limits).with_tag(tag);
  const Elem b123 = static_cast<Elem>(1 + n[0] + n[0] * n[1]);
  Automorphism alpha = inner_automorphism(g, b123);

  ExpectedProperties ex;
  ex.group_order = 4 * fo;
  ex.automorphism_order = o;
  ex.rcc = false;
  std::map<std::uint64_t, std::uint64_t> zeta{{1, fo}};
  std::set<std::uint64_t> lens{1};
  const char* coset_names[3] = {"coset alpha_1 B", "coset alpha_2 B", "coset alpha_1 alpha_2 B"};
  for (int i = 0; i < 3; ++i) {
    // coset index h: 1 -> alpha_1, 2 -> alpha_2, 3 -> alpha_1 alpha_2 (identity on B_3)
    std::uint64_t h = static_cast<std::uint64_t>(i + 1);
    LengthClaim c{coset_names[i], {}, o / q[i]};
    for (std::uint64_t x = 0; x < fo; ++x) c.points.push_back(static_cast<Elem>(x + fo * h));
    zeta[o / q[i]] += fo;
    lens.insert(o / q[i]);
    ex.length_claims.push_back(std::move(c));
  }
  ex.zeta = zeta;
  ex.cycle_lengths = lens;
  for (std::uint64_t x = 0; x < fo; ++x) ex.fixed_points.push_back(static_cast<Elem>(x));
  ex.fixed_subgroup_order = fo;
  ex.fixed_subgroup_normal = true;
  return {tag, g, alpha, ex};
}

ConstructedInstance construct_many_prime(std::uint64_t o, const Limits& limits) {
  if (o == 0) throw InvalidInput("order must be positive");
  auto f = factorize(o);
  if (f.size() < 3) throw InvalidInput("order must have at least three distinct prime divisors");
  std::uint64_t total = 4;
  for (std::size_t i = 0; i < 3; ++i) total *= f_function(ipow(f[i].first, f[i].second));
  for (std::size_t i = 3; i < f.size(); ++i) {
    total *= ipow(f[i].first, f[i].second + 1);
    if (total > limits.max_group_order) break;
  }
  if (total > limits.max_group_order) throw BoundExceeded("group order bound", limits.max_group_order, total);

  ConstructedInstance base = construct_Go({f[0].first, f[1].first, f[2].first},
                                          {f[0].second, f[1].second, f[2].second}, limits);
  std::string tag = "many_prime(" + std::to_string(o) + ")";
  if (f.size() == 3) {
    base.name = tag;
    return base;
  }
  FiniteGroup g = base.group;
  Automorphism alpha = base.automorphism;
  for (std::size_t i = 3; i < f.size(); ++i) {
    auto [p, k] = f[i];
    std::uint64_t m = ipow(p, k + 1);
    FiniteGroup z = cyclic_group(m, limits);
    std::vector<Elem> mult(m);
    for (std::uint64_t x = 0; x < m; ++x) mult[x] = static_cast<Elem>(x * (1 + p) % m);
    Automorphism beta = Automorphism::certify(z, std::move(mult));
    FiniteGroup prod = direct_product(g, z, limits);
    alpha = product_automorphism(prod, alpha, beta);
    g = prod;
  }
  g = g.with_tag(tag);
  alpha = trusted_automorphism(g, alpha.perm());
  ExpectedProperties ex;
  ex.group_order = total;
  ex.automorphism_order = o;
  ex.rcc = false;
  return {tag, g, alpha, ex};
}

// ---------------------------------------------------------------- SG(120,8)

namespace {

struct K4 {
  std::uint64_t k1, k2, k3, k4;
};

K4 decode120(std::uint64_t x) { return {x % 5, (x / 5) % 3, (x / 15) % 2, x / 30}; }
Elem encode120(const K4& k) {
  return static_cast<Elem>(k.k1 % 5 + 5 * (k.k2 % 3) + 15 * (k.k3 % 2) + 30 * (k.k4 % 4));
}

}  // namespace

FiniteGroup sg120_8_from_formula(const Limits& limits) {
  GroupTable t;
  t.table.assign(120, std::vector<Elem>(120));
  for (std::uint64_t x = 0; x < 120; ++x)
    for (std::uint64_t y = 0; y < 120; ++y) {
      K4 k = decode120(x), l = decode120(y);
      K4 r{k.k1 + (k.k3 ? 5 - l.k1 : l.k1), k.k2 + (k.k4 % 2 ? 3 - l.k2 : l.k2), k.k3 + l.k3, k.k4 + l.k4};
      t.table[x][y] = encode120(r);
    }
  for (std::uint64_t x = 0; x < 120; ++x) {
    K4 k = decode120(x);
    t.labels.push_back("(" + join_list({k.k1, k.k2, k.k3, k.k4}) + ")");
  }
  t.identity = 0;
  t.generators = {1, 5, 15, 30};
  t.tag = "sg120_8";
  return validate_group(std::move(t), limits);
}

FiniteGroup sg120_8_from_semidirect_tower(const Limits& limits) {
  FiniteGroup z5 = cyclic_group(5, limits), z3 = cyclic_group(3, limits);
  FiniteGroup h = abelian_group({2, 4}, limits);  // (k3, k4) at k3 + 2 k4
  std::vector<std::vector<Elem>> act3(8);
  for (std::uint64_t e = 0; e < 8; ++e) act3[e] = (e / 2) % 2 ? negation_perm(3) : identity_perm(3);
  FiniteGroup k = semidirect_product(z3, h, act3, limits);  // (k2, k3, k4) at k2 + 3 (k3 + 2 k4)
  std::vector<std::vector<Elem>> act5(24);
  for (std::uint64_t e = 0; e < 24; ++e) act5[e] = (e / 3) % 2 ? negation_perm(5) : identity_perm(5);
  return semidirect_product(z5, k, act5, limits);
}

std::vector<Elem> sg120_8_alpha_formula() {
  std::vector<Elem> perm(120);
  for (std::uint64_t x = 0; x < 120; ++x) {
    K4 k = decode120(x);
    K4 r{k.k1 + k.k3, k.k2 + (k.k4 % 2), k.k3, (4 - k.k4) + 2 * k.k3};
    perm[x] = encode120(r);
  }
  return perm;
}

std::optional<Automorphism> sg120_8_alpha_from_generators(const FiniteGroup& g) {
  const Elem x1 = 1, x2 = 5, x3 = 15, x4 = 30;
  std::vector<Elem> gens{x1, x2, x3, x4};
  std::vector<Elem> images{x1, x2, g.mul(g.mul(x1, x3), g.pow(x4, 2)), g.mul(x2, g.pow(x4, 3))};
  return automorphism_from_generator_images(g, gens, images);
}

ConstructedInstance construct_sg120_8(const Limits& limits) {
  FiniteGroup g = sg120_8_from_formula(limits);
  if (!g.same_table(sg120_8_from_semidirect_tower(limits)))
    throw std::logic_error("semidirect tower and normal-form tables differ");
  Automorphism alpha = Automorphism::certify(g, sg120_8_alpha_formula());
  auto from_gens = sg120_8_alpha_from_generators(g);
  if (!from_gens || !(*from_gens == alpha))
    throw std::logic_error("generator-image automorphism differs from the closed formula");

  ExpectedProperties ex;
  ex.group_order = 120;
  ex.automorphism_order = 30;
  ex.rcc = false;
  ex.zeta = std::map<std::uint64_t, std::uint64_t>{{1, 30}, {6, 30}, {10, 30}, {15, 30}};
  ex.cycle_lengths = std::set<std::uint64_t>{1, 6, 10, 15};
  LengthClaim c10{"k4 even, k3 = 1", {}, 10}, c6{"k4 odd, k3 = 0", {}, 6}, c15{"k4 odd, k3 = 1", {}, 15};
  for (std::uint64_t x = 0; x < 120; ++x) {
    K4 k = decode120(x);
    if (k.k4 % 2 == 0 && k.k3 == 0) ex.fixed_points.push_back(static_cast<Elem>(x));
    if (k.k4 % 2 == 0 && k.k3 == 1) c10.points.push_back(static_cast<Elem>(x));
    if (k.k4 % 2 == 1 && k.k3 == 0) c6.points.push_back(static_cast<Elem>(x));
    if (k.k4 % 2 == 1 && k.k3 == 1) c15.points.push_back(static_cast<Elem>(x));
  }
  ex.length_claims = {c10, c6, c15};
  ex.fixed_subgroup_order = 30;
  ex.fixed_subgroup_normal = true;
  return {"sg120_8", g, alpha, ex};
}

}  // namespace rcclab
