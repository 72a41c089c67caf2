#include "rcclab/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "rcclab/constructions.hpp"
#include "rcclab/gf.hpp"
#include "rcclab/numtheory.hpp"
#include "rcclab/rcc.hpp"

namespace rcclab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects the first few failure messages plus a total count.
struct Failures {
  std::uint64_t count = 0;
  std::vector<std::string> first;
  void add(const std::string& msg) {
    if (count++ < 3) first.push_back(msg);
  }
  bool none() const { return count == 0; }
  std::string str() const {
    std::string s = std::to_string(count) + " failure(s)";
    for (const auto& m : first) s += "; " + m;
    return s;
  }
};

std::string zeta_str(const CycleStructure& cs) {
  std::string s = "{";
  bool first = true;
  for (auto [d, c] : cs.counts()) {
    s += (first ? "" : ",") + std::to_string(d) + ":" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

std::string set_str(const std::set<std::uint64_t>& v) {
  std::string s = "{";
  for (auto it = v.begin(); it != v.end(); ++it) s += (it == v.begin() ? "" : ",") + std::to_string(*it);
  return s + "}";
}

// ---------------------------------------------------------------- GF helpers

Residue inv_mod(Residue a, std::uint64_t p) { return powmod(a, p - 2, p); }

GFMatrix random_matrix(std::mt19937_64& rng, std::uint64_t p, std::size_t n) {
  GFMatrix m(p, n);
  std::uniform_int_distribution<Residue> d(0, p - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

GFMatrix random_invertible(std::mt19937_64& rng, std::uint64_t p, std::size_t n) {
  while (true) {
    GFMatrix m = random_matrix(rng, p, n);
    if (is_invertible(m)) return m;
  }
}

// Companion matrix built directly: subdiagonal ones, last column -a_i.
GFMatrix companion_oracle(const GFPoly& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const std::uint64_t p = f.modulus();
  GFMatrix c(p, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = (p - f.coeff(i)) % p;
  return c;
}

// Characteristic polynomial by Hessenberg reduction, independent of the cyclic decomposition.
GFPoly charpoly_hessenberg(const GFMatrix& a) {
  const std::uint64_t p = a.modulus();
  const std::size_t n = a.size();
  std::vector<std::vector<Residue>> h(n, std::vector<Residue>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = a(i, j);
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    Residue inv = inv_mod(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      Residue f = h[r][j] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = (h[r][c] + (p - f) * h[j + 1][c]) % p;
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = (h[c][j + 1] + f * h[c][r]) % p;
    }
  }
  std::vector<GFPoly> q{GFPoly::constant(p, 1)};
  const GFPoly x = GFPoly::x(p);
  for (std::size_t k = 0; k < n; ++k) {
    GFPoly next = (x - GFPoly::constant(p, h[k][k])) * q[k];
    Residue prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = prod * h[i + 1][i] % p;
      next = next - GFPoly::constant(p, h[i][k] * prod % p) * q[i];
    }
    q.push_back(next);
  }
  return q[n];
}

// Orbit census of v -> Av; returns lcm of all orbit lengths.
std::uint64_t orbit_lcm(const GFMatrix& a) {
  const std::uint64_t p = a.modulus();
  const std::size_t n = a.size();
  std::uint64_t total = ipow(p, static_cast<unsigned>(n));
  std::vector<char> seen(total, 0);
  std::uint64_t l = 1;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0, cur = s;
    do {
      seen[cur] = 1;
      cur = vector_index(p, a.apply(vector_from_index(p, n, cur)));
      ++len;
    } while (cur != s);
    l = lcm(l, len);
  }
  return l;
}

// ---------------------------------------------------------------- criteria 1, 2

CriterionResult criterion1() {
  CriterionResult r{1, "SG(120,8) non-RCC automorphism", false, {}, 0};
  auto t = Clock::now();
  auto inst = construct_sg120_8();
  auto bad = verify(inst);
  auto cs = cycle_structure(inst.automorphism);
  auto pqr = pqr_structure_check(inst.automorphism);
  auto fix = per_subgroup(inst.automorphism, 1);
  std::map<std::uint64_t, std::uint64_t> want{{1, 30}, {6, 30}, {10, 30}, {15, 30}};
  bool ok = bad.empty() && inst.group.order() == 120 && inst.automorphism.order() == 30 && cs.counts() == want &&
            !check_rcc(inst.automorphism).holds && fix.size() == 30 && is_normal(inst.group, fix) &&
            inst.group.order() == 4 * cs.zeta(1) && pqr.applicable && pqr.holds;
  r.seconds = since(t);
  r.pass = ok && r.seconds < 1.0;
  r.detail = "|G|=" + std::to_string(inst.group.order()) + " ord=" + std::to_string(inst.automorphism.order()) +
             " zeta=" + zeta_str(cs) + " |fix|=" + std::to_string(fix.size()) +
             (is_normal(inst.group, fix) ? " normal" : " not normal") + (pqr.holds ? ", pqr checks hold" : ", pqr failed");
  for (const auto& b : bad) r.detail += "; " + b;
  return r;
}

CriterionResult criterion2() {
  CriterionResult r{2, "G_o family", false, {}, 0};
  auto t = Clock::now();
  double worst = 0;
  bool ok = true;
  std::string detail;
  {
    auto t1 = Clock::now();
    auto inst = construct_Go({3, 5, 7}, {1, 1, 1});
    auto bad = verify(inst);
    auto cs = cycle_structure(inst.automorphism);
    std::set<std::uint64_t> coset_lengths;
    auto len = cycle_lengths(inst.automorphism);
    for (std::size_t x = 105; x < inst.group.order(); ++x) coset_lengths.insert(len[x]);
    auto pqr = pqr_structure_check(inst.automorphism);
    ok &= bad.empty() && inst.group.order() == 420 && 420 == 4 * f_function(105) &&
          inst.automorphism.order() == 105 && coset_lengths == std::set<std::uint64_t>{15, 21, 35} &&
          cs.zeta(1) == 105 && !check_rcc(inst.automorphism).holds && pqr.holds;
    worst = std::max(worst, since(t1));
    detail += "(3,5,7): |G|=" + std::to_string(inst.group.order()) + " ord=" + std::to_string(inst.automorphism.order()) +
              " coset lengths " + set_str(coset_lengths) + " zeta_1=" + std::to_string(cs.zeta(1));
    for (const auto& b : bad) detail += "; " + b;
  }
  {
    auto t1 = Clock::now();
    auto inst = construct_Go({2, 3, 5}, {1, 1, 1});
    auto bad = verify(inst);
    auto cs = cycle_structure(inst.automorphism);
    ok &= bad.empty() && inst.group.order() == 240 && inst.automorphism.order() == 30 &&
          cs.lengths() == std::set<std::uint64_t>{1, 6, 10, 15} && !check_rcc(inst.automorphism).holds;
    worst = std::max(worst, since(t1));
    detail += "; (2,3,5): |G|=" + std::to_string(inst.group.order()) + " ord=" +
              std::to_string(inst.automorphism.order()) + " lengths " + set_str(cs.lengths());
    for (const auto& b : bad) detail += "; " + b;
  }
  r.seconds = since(t);
  r.pass = ok && worst < 5.0;
  r.detail = detail;
  return r;
}

// ---------------------------------------------------------------- sweep (criteria 3, 6, 7, 8)

struct Pool {
  FiniteGroup group;
  std::vector<std::vector<Elem>> perms;
  std::uint64_t seen = 0;
};

struct PGroupStats {
  std::uint64_t groups = 0, automorphisms = 0;
  unsigned max_k = 0;
  Failures fail;
  std::vector<std::string> notes;
};

struct SweepStats {
  std::uint64_t census_groups = 0, census_autos = 0;
  Failures census;
  std::vector<std::string> sampled_notes;
  PGroupStats pg;
  std::uint64_t two_prime_checks = 0, small_prime_autos = 0, cert_checks = 0;
  Failures two_prime, small_prime, cert;
  std::uint64_t lambda_third = 0, lambda_half = 0;
  Failures third, half;
  std::uint64_t total_autos = 0;
  std::vector<Pool> pools;
};

struct SweepGroup {
  std::string name;
  FiniteGroup group;
  bool census;
};

std::vector<SweepGroup> census_groups() {
  std::vector<SweepGroup> out;
  for (std::uint64_t n = 1; n <= 64; ++n)
    for (const auto& factors : abelian_groups_of_order(n)) {
      auto g = abelian_group(factors);
      out.push_back({g.tag(), g, true});
    }
  for (std::uint64_t n = 1; 2 * n <= 100; ++n) {
    auto g = dihedral_group(n);
    out.push_back({g.tag(), g, true});
  }
  out.push_back({"quaternion8", quaternion_group(), true});
  for (std::uint64_t n = 1; n <= 4; ++n) {
    auto g = symmetric_group(n);
    out.push_back({g.tag(), g, true});
  }
  out.push_back({"heisenberg(3)", heisenberg_group(3), true});
  return out;
}

class Sweeper {
public:
  Sweeper(SweepStats& st, std::uint64_t seed) : st_(st), rng_(seed) {}

  /// `sampled` marks a partial enumeration; the Hall count is then replaced by a per-element p-power check.
  void group(const SweepGroup& sg, bool sampled,
             const std::function<void(const std::function<void(std::span<const Elem>)>&)>& source) {
    const FiniteGroup& g = sg.group;
    const std::size_t n = g.order();
    std::uint64_t p = 0;
    unsigned m = 0;
    const bool pgroup = n > 1 && n <= 64 && prime_power(n, p, m);
    std::optional<FrattiniContext> ctx;
    std::uint64_t kernel = 0;
    if (pgroup) {
      ctx.emplace(g);
      ++st_.pg.groups;
      Subgroup burnside = join(commutator_subgroup(g), power_subgroup(g, p));
      if (!(ctx->frattini() == burnside)) st_.pg.fail.add(sg.name + ": Frat != G'G^p");
    }
    if (sg.census) ++st_.census_groups;
    st_.pools.push_back({g, {}, 0});
    Pool& pool = st_.pools.back();
    std::vector<std::uint64_t> len(n);
    std::vector<Elem> stack;

    source([&](std::span<const Elem> perm) {
      ++st_.total_autos;
      // cycle lengths
      std::fill(len.begin(), len.end(), 0);
      std::uint64_t order = 1, maxlen = 1, fixed = 0;
      for (std::size_t s = 0; s < n; ++s) {
        if (len[s]) continue;
        std::uint64_t l = 0;
        Elem x = static_cast<Elem>(s);
        do {
          stack.push_back(x);
          x = perm[x];
          ++l;
        } while (x != s);
        for (Elem y : stack) len[y] = l;
        stack.clear();
        order = lcm(order, l);
        maxlen = std::max(maxlen, l);
        if (l == 1) ++fixed;
      }
      const bool rcc = maxlen == order;
      if (sg.census) {
        ++st_.census_autos;
        if (!rcc) st_.census.add(sg.name + ": non-RCC automorphism of order " + std::to_string(order));
      }
      // criterion 7
      auto primes = prime_divisors(order);
      if (primes.size() <= 2) {
        ++st_.small_prime_autos;
        if (!rcc) st_.small_prime.add(sg.name + ": order " + std::to_string(order) + " not RCC");
      }
      if (primes.size() >= 2) {
        ++st_.two_prime_checks;
        if (!two_prime_divisibility_holds(cycle_structure(perm)))
          st_.two_prime.add(sg.name + ": two-prime divisibility fails");
      }
      if (primes.size() >= 2 || (st_.total_autos & 1023) == 0) {
        ++st_.cert_checks;
        auto c = fast_path(cycle_structure(perm), pgroup || g.is_abelian());
        if (c && !rcc) st_.cert.add(sg.name + ": certificate " + to_string(c->kind) + " on non-RCC");
      }
      // criterion 8
      if (3 * maxlen >= n) {
        ++st_.lambda_third;
        if (!rcc) st_.third.add(sg.name + ": lambda >= 1/3 but not RCC");
      }
      if (2 * maxlen > n) {
        ++st_.lambda_half;
        if (fixed != 1) st_.half.add(sg.name + ": lambda > 1/2 with " + std::to_string(fixed) + " fixed points");
      }
      // criterion 6
      if (ctx) {
        ++st_.pg.automorphisms;
        try {
          auto rg = regular_generating_set_pgroup(*ctx, perm);
          for (unsigned k : rg.exponents) st_.pg.max_k = std::max(st_.pg.max_k, k);
          if (!rg.generates) st_.pg.fail.add(sg.name + ": lifted basis does not generate");
        } catch (const std::logic_error& e) {
          st_.pg.fail.add(sg.name + ": " + e.what());
        }
        if (acts_trivially_on_frattini_quotient(*ctx, perm)) {
          ++kernel;
          std::uint64_t q = 0;
          unsigned e = 0;
          if (order > 1 && !(prime_power(order, q, e) && q == p))
            st_.pg.fail.add(sg.name + ": trivial action on G/Frat with order " + std::to_string(order));
        }
      }
      // reservoir
      ++pool.seen;
      if (pool.perms.size() < kReservoir) {
        pool.perms.emplace_back(perm.begin(), perm.end());
      } else {
        std::uniform_int_distribution<std::uint64_t> d(0, pool.seen - 1);
        auto k = d(rng_);
        if (k < kReservoir) pool.perms[k].assign(perm.begin(), perm.end());
      }
    });

    if (ctx && !sampled) {
      std::uint64_t bound = ipow(p, ctx->hall_exponent());
      if (kernel == 0 || bound % kernel != 0)
        st_.pg.fail.add(sg.name + ": |Aut_Frat| = " + std::to_string(kernel) + " does not divide " +
                        std::to_string(bound));
    }
  }

private:
  static constexpr std::size_t kReservoir = 24;
  SweepStats& st_;
  std::mt19937_64 rng_;
};

// Linear automorphism of abelian_group({p,...,p}) (first coordinate fastest).
std::vector<Elem> linear_perm(const GFMatrix& a) {
  const std::uint64_t p = a.modulus();
  const std::size_t n = a.size();
  std::uint64_t total = ipow(p, static_cast<unsigned>(n));
  std::vector<Elem> perm(total);
  GFVector v(n);
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t y = x;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = y % p;
      y /= p;
    }
    GFVector w = a.apply(v);
    std::uint64_t idx = 0;
    for (std::size_t i = n; i-- > 0;) idx = idx * p + w[i];
    perm[x] = static_cast<Elem>(idx);
  }
  return perm;
}

SweepStats run_sweep(const AcceptanceOptions& opts) {
  SweepStats st;
  Sweeper sw(st, opts.seed);
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  Limits wide = default_limits();
  wide.max_elementary_abelian_rank = 5;
  auto groups = census_groups();
  groups.push_back({"symmetric(5)", symmetric_group(5), false});
  if (opts.extended) groups.push_back({"symmetric(6)", symmetric_group(6), false});
  for (const auto& sg : groups) {
    auto t = Clock::now();
    const FiniteGroup& g = sg.group;
    bool sample = false;
    unsigned rank = 0;
    if (is_elementary_abelian(g)) {
      for (std::size_t k = g.order(); k > 1; k /= g.exponent()) ++rank;
      sample = rank > wide.max_elementary_abelian_rank;
    }
    if (sample) {
      const std::size_t trials = 2000;
      sw.group(sg, true, [&](const auto& visit) {
        for (std::size_t i = 0; i < trials; ++i) {
          auto a = Automorphism::certify(g, linear_perm(random_invertible(rng, g.exponent(), rank)));
          visit(a.perm());
        }
      });
      st.sampled_notes.push_back(sg.name + " sampled " + std::to_string(trials) + " of GL(" + std::to_string(rank) +
                                 "," + std::to_string(g.exponent()) + ")");
    } else {
      sw.group(sg, false, [&](const auto& visit) { for_each_automorphism(g, visit, wide); });
    }
    double s = since(t);
    if (opts.log && s > 1.0) *opts.log << "  sweep " << sg.name << ": " << s << " s\n";
  }
  return st;
}

CriterionResult criterion3(const SweepStats& st, double secs) {
  CriterionResult r{3, "RCC census below order 120", false, {}, 0};
  r.pass = st.census.none() && st.census_groups > 0;
  r.detail = std::to_string(st.census_groups) + " groups, " + std::to_string(st.census_autos) + " automorphisms";
  for (const auto& n : st.sampled_notes) r.detail += "; " + n;
  if (!r.pass) r.detail += "; " + st.census.str();
  r.seconds = secs;
  return r;
}

CriterionResult criterion6(const SweepStats& st) {
  CriterionResult r{6, "regular generating sets, Burnside, Hall", false, {}, 0};
  r.pass = st.pg.fail.none() && st.pg.groups > 0;
  r.detail = std::to_string(st.pg.groups) + " p-groups, " + std::to_string(st.pg.automorphisms) +
             " automorphisms, max observed k_i = " + std::to_string(st.pg.max_k);
  for (const auto& n : st.sampled_notes) r.detail += "; " + n + " (Hall count replaced by p-power orders)";
  if (!r.pass) r.detail += "; " + st.pg.fail.str();
  return r;
}

CriterionResult criterion7(const SweepStats& st, std::uint64_t seed) {
  CriterionResult r{7, "valuation dominance", false, {}, 0};
  auto t = Clock::now();
  std::mt19937_64 rng(seed + 7);
  std::vector<const Pool*> pools;
  for (const auto& p : st.pools)
    if (p.group.order() > 1 && !p.perms.empty()) pools.push_back(&p);
  Failures dom;
  std::uint64_t trials = 0, attempts = 0;
  const std::uint64_t want = 10000, cap = 2000000;
  while (trials < want && attempts < cap && !pools.empty()) {
    ++attempts;
    const Pool& pool = *pools[std::uniform_int_distribution<std::size_t>(0, pools.size() - 1)(rng)];
    const auto& perm = pool.perms[std::uniform_int_distribution<std::size_t>(0, pool.perms.size() - 1)(rng)];
    auto len = cycle_lengths(perm);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(pool.group.order() - 1));
    Elem x = pick(rng), y = pick(rng);
    std::vector<std::uint64_t> cands;
    for (auto q : prime_divisors(lcm(len[x], len[y])))
      if (valuation(len[x], q) != valuation(len[y], q)) cands.push_back(q);
    if (cands.empty()) continue;
    auto q = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    auto rep = dominance_check(pool.group, len, x, y, q);
    ++trials;
    if (!rep.applicable || !rep.holds)
      dom.add(pool.group.tag() + ": x=" + std::to_string(x) + " y=" + std::to_string(y) + " p=" + std::to_string(q));
  }
  r.pass = trials == want && dom.none() && st.two_prime.none() && st.small_prime.none() && st.cert.none();
  r.detail = std::to_string(trials) + " dominance trials, " + std::to_string(dom.count) + " violations; " +
             std::to_string(st.two_prime_checks) + " two-prime scans; " + std::to_string(st.small_prime_autos) +
             " automorphisms with <= 2 primes all RCC: " + (st.small_prime.none() ? "yes" : "no") + "; " +
             std::to_string(st.cert_checks) + " certificates cross-checked";
  for (const Failures* f : std::initializer_list<const Failures*>{&dom, &st.two_prime, &st.small_prime, &st.cert})
    if (!f->none()) r.detail += "; " + f->str();
  r.seconds = since(t);
  return r;
}

CriterionResult criterion8(const SweepStats& st, std::uint64_t seed) {
  CriterionResult r{8, "large cycles and affine maps", false, {}, 0};
  auto t = Clock::now();
  std::mt19937_64 rng(seed + 8);
  std::vector<const Pool*> pools;
  for (const auto& p : st.pools)
    if (p.group.is_abelian() && !p.perms.empty()) pools.push_back(&p);
  Failures aff;
  std::uint64_t trials = 0;
  for (; trials < 10000 && !pools.empty(); ++trials) {
    const Pool& pool = *pools[std::uniform_int_distribution<std::size_t>(0, pools.size() - 1)(rng)];
    const auto& perm = pool.perms[std::uniform_int_distribution<std::size_t>(0, pool.perms.size() - 1)(rng)];
    Elem g0 = std::uniform_int_distribution<Elem>(0, static_cast<Elem>(pool.group.order() - 1))(rng);
    auto rep = affine_map(trusted_automorphism(pool.group, perm), g0);
    if (!rep.bijective || !rep.divides || !*rep.divides)
      aff.add(pool.group.tag() + ": g0=" + std::to_string(g0));
  }
  // non-RCC constructions stay below one third
  Failures cons;
  for (auto inst : {construct_sg120_8(), construct_Go({2, 3, 5}, {1, 1, 1}), construct_Go({3, 5, 7}, {1, 1, 1})}) {
    if (check_rcc(inst.automorphism).holds) continue;
    if (lambda(inst.automorphism) >= Rational(1, 3)) cons.add(inst.name + ": lambda " + lambda(inst.automorphism).str());
  }
  r.pass = trials == 10000 && aff.none() && st.third.none() && st.half.none() && cons.none();
  r.detail = std::to_string(st.lambda_third) + " automorphisms with lambda >= 1/3 all RCC; " +
             std::to_string(st.lambda_half) + " with lambda > 1/2 fixed-point free; " + std::to_string(trials) +
             " affine trials, " + std::to_string(aff.count) + " violations; constructions below 1/3";
  for (const Failures* f : std::initializer_list<const Failures*>{&aff, &st.third, &st.half, &cons})
    if (!f->none()) r.detail += "; " + f->str();
  r.seconds = since(t);
  return r;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult criterion4(bool extended) {
  CriterionResult r{4, "symmetric groups", false, {}, 0};
  auto t = Clock::now();
  bool ok = true;
  std::string detail;
  const std::uint64_t expected[] = {0, 1, 1, 6, 24, 120, 1440};
  for (std::uint64_t n = 3; n <= (extended ? 6u : 5u); ++n) {
    auto g = symmetric_group(n);
    std::uint64_t count = 0, bad = 0;
    for_each_automorphism(g, [&](std::span<const Elem> perm) {
      ++count;
      if (!check_rcc(perm).holds) ++bad;
    });
    ok &= count == expected[n] && bad == 0;
    detail += (detail.empty() ? "" : ", ") + std::string("|Aut(S") + std::to_string(n) + ")|=" + std::to_string(count);
    if (bad) detail += " (" + std::to_string(bad) + " non-RCC)";
  }
  if (!extended) detail += "; S6 not run (extended mode off)";
  r.pass = ok;
  r.detail = detail;
  r.seconds = since(t);
  return r;
}

// ---------------------------------------------------------------- criterion 5

CriterionResult criterion5(std::uint64_t seed) {
  CriterionResult r{5, "regular bases of GF(p)^n", false, {}, 0};
  auto t = Clock::now();
  std::mt19937_64 rng(seed + 5);
  Failures f;
  std::uint64_t matrices = 0;
  auto check = [&](const GFMatrix& a) {
    ++matrices;
    auto basis = regular_basis(a);
    auto ord = matrix_order(a);
    if (basis.size() != a.size() || vectors_rank(a.modulus(), basis) != a.size()) {
      f.add("basis not of full rank");
      return;
    }
    for (const auto& v : basis)
      if (vector_cycle_length(a, v) != ord) {
        f.add("basis vector off a regular cycle");
        return;
      }
    if (orbit_lcm(a) != ord) f.add("matrix_order differs from orbit lcm");
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t total = 1ULL << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      GFMatrix a(2, n);
      for (std::size_t k = 0; k < n * n; ++k) a(k / n, k % n) = (code >> k) & 1;
      if (is_invertible(a)) check(a);
    }
  }
  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t n = 1; ipow(p, static_cast<unsigned>(n)) <= 625; ++n) {
      if (p == 2 && n <= 4) continue;
      for (int i = 0; i < 200; ++i) check(random_invertible(rng, p, n));
    }
  r.pass = f.none();
  r.detail = std::to_string(matrices) + " matrices (GL(n,2) exhaustive for n <= 4)";
  if (!r.pass) r.detail += "; " + f.str();
  r.seconds = since(t);
  return r;
}

// ---------------------------------------------------------------- criterion 9

CriterionResult criterion9(std::uint64_t seed) {
  CriterionResult r{9, "GF(p) oracle equivalence", false, {}, 0};
  auto t = Clock::now();
  std::mt19937_64 rng(seed + 9);
  Failures f;
  std::uint64_t polys = 0, mats = 0;
  for (auto [p, maxdeg] : {std::pair<std::uint64_t, unsigned>{2, 10}, {3, 6}})
    for (unsigned d = 1; d <= maxdeg; ++d) {
      std::uint64_t total = ipow(p, d);  // coefficients 0..d-1
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Residue> c(d + 1);
        std::uint64_t x = code;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = x % p;
          x /= p;
        }
        c[d] = 1;
        if (c[0] == 0) continue;
        auto poly = GFPoly::from_residues(p, c);
        ++polys;
        if (poly_order(poly) != poly_order_by_iteration(poly)) f.add("poly_order mismatch");
      }
    }
  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t n = 1; n <= 6; ++n)
      for (int i = 0; i < 500; ++i) {
        GFMatrix a;
        if (i % 2 == 0) {
          a = random_matrix(rng, p, n);
        } else {
          // conjugate of a block matrix with repeated blocks, to get several invariant factors
          std::vector<GFMatrix> blocks;
          std::size_t left = n;
          while (left > 0) {
            std::size_t d = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(left, 3))(rng);
            GFMatrix b = random_matrix(rng, p, d);
            blocks.push_back(b);
            left -= d;
            if (left >= d && rng() % 2) {
              blocks.push_back(b);
              left -= d;
            }
          }
          GFMatrix u = random_invertible(rng, p, n);
          a = inverse(u) * block_diagonal(blocks) * u;
        }
        ++mats;
        auto dec = frobenius_form(a);
        if (!is_invertible(dec.basis_change)) {
          f.add("basis change singular");
          continue;
        }
        std::vector<GFMatrix> comps;
        GFPoly prod = GFPoly::constant(p, 1);
        for (const auto& q : dec.invariant_factors) {
          comps.push_back(companion_oracle(q));
          prod = prod * q;
          if (!q.is_monic()) f.add("invariant factor not monic");
        }
        if (!(inverse(dec.basis_change) * a * dec.basis_change == block_diagonal(comps)))
          f.add("reconstruction identity fails (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
        for (std::size_t k = 1; k < dec.invariant_factors.size(); ++k)
          if (!poly_divmod(dec.invariant_factors[k], dec.invariant_factors[k - 1]).second.is_zero())
            f.add("divisibility chain fails");
        if (!(prod == charpoly_hessenberg(a))) f.add("product differs from characteristic polynomial");
      }
  r.pass = f.none();
  r.detail = std::to_string(polys) + " polynomials, " + std::to_string(mats) + " matrices";
  if (!r.pass) r.detail += "; " + f.str();
  r.seconds = since(t);
  return r;
}

// ---------------------------------------------------------------- criterion 10

CriterionResult criterion10() {
  CriterionResult r{10, "direct products", false, {}, 0};
  auto t = Clock::now();
  Failures f;
  auto base = construct_sg120_8();
  for (std::uint64_t k : {2, 3, 7}) {
    auto h = cyclic_group(k);
    auto prod = direct_product(base.group, h);
    auto a = product_automorphism(prod, base.automorphism, Automorphism::identity(h));
    if (check_rcc(a).holds) f.add("SG(120,8) x Z/" + std::to_string(k) + " automorphism is RCC");
  }
  std::uint64_t pairs = 0;
  const std::vector<std::pair<std::string, std::string>> factor_pairs = {
      {"cyclic(4)", "cyclic(9)"}, {"abelian([2,2])", "cyclic(9)"}, {"cyclic(8)", "abelian([3,3])"},
      {"symmetric(3)", "cyclic(5)"}, {"quaternion8", "cyclic(27)"}, {"cyclic(5)", "cyclic(7)"}};
  for (const auto& [an, bn] : factor_pairs) {
    auto ga = catalog(an), gb = catalog(bn);
    auto prod = direct_product(ga, gb);
    auto auts_a = enumerate_automorphisms(ga), auts_b = enumerate_automorphisms(gb);
    for (const auto& a : auts_a)
      for (const auto& b : auts_b) {
        ++pairs;
        auto ab = product_automorphism(prod, a, b);
        auto ma = check_rcc(a).max_length, mb = check_rcc(b).max_length;
        auto v = check_rcc(ab);
        if (v.max_length != lcm(ma, mb) || !v.holds) f.add(an + " x " + bn + ": product max length mismatch");
      }
    if (count_automorphisms(prod) != auts_a.size() * auts_b.size())
      f.add(an + " x " + bn + ": |Aut| is not the product");
  }
  r.pass = f.none();
  r.detail = "SG(120,8) x Z/k non-RCC for k in {2,3,7}; " + std::to_string(pairs) + " coprime product pairs";
  if (!r.pass) r.detail += "; " + f.str();
  r.seconds = since(t);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  auto want = [&](int id) { return opts.only.empty() || opts.only.count(id); };
  auto guard = [&](int id, const std::string& title, const std::function<CriterionResult()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return CriterionResult{id, title, false, std::string("exception: ") + e.what(), 0};
    }
  };
  std::vector<CriterionResult> out;
  auto note = [&](const CriterionResult& r) {
    if (opts.log) *opts.log << format_result(r) << "\n" << std::flush;
    out.push_back(r);
  };
  if (want(1)) note(guard(1, "SG(120,8) non-RCC automorphism", criterion1));
  if (want(2)) note(guard(2, "G_o family", criterion2));
  if (want(3) || want(6) || want(7) || want(8)) {
    auto t = Clock::now();
    std::optional<SweepStats> st;
    std::string err;
    try {
      st = run_sweep(opts);
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = since(t);
    auto failed = [&](int id, const char* title) { return CriterionResult{id, title, false, "sweep failed: " + err, secs}; };
    if (want(3)) note(st ? criterion3(*st, secs) : failed(3, "RCC census below order 120"));
    if (want(4)) note(guard(4, "symmetric groups", [&] { return criterion4(opts.extended); }));
    if (want(5)) note(guard(5, "regular bases of GF(p)^n", [&] { return criterion5(opts.seed); }));
    if (want(6)) note(st ? criterion6(*st) : failed(6, "regular generating sets, Burnside, Hall"));
    if (want(7)) note(st ? guard(7, "valuation dominance", [&] { return criterion7(*st, opts.seed); })
                         : failed(7, "valuation dominance"));
    if (want(8)) note(st ? guard(8, "large cycles and affine maps", [&] { return criterion8(*st, opts.seed); })
                         : failed(8, "large cycles and affine maps"));
  } else {
    if (want(4)) note(guard(4, "symmetric groups", [&] { return criterion4(opts.extended); }));
    if (want(5)) note(guard(5, "regular bases of GF(p)^n", [&] { return criterion5(opts.seed); }));
  }
  if (want(9)) note(guard(9, "GF(p) oracle equivalence", [&] { return criterion9(opts.seed); }));
  if (want(10)) note(guard(10, "direct products", criterion10));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << ": " << r.detail;
  s.precision(3);
  s << std::fixed << " (" << r.seconds << " s)";
  return s.str();
}

}  // namespace rcclab
