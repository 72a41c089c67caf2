#include "rcclab/rcc.hpp"

#include <stdexcept>

namespace rcclab {

RccVerdict check_rcc(std::span<const Elem> perm) {
  auto len = cycle_lengths(perm);
  RccVerdict v;
  for (auto l : len) {
    v.lengths.insert(l);
    v.order = lcm(v.order, l);
    v.max_length = std::max(v.max_length, l);
  }
  v.holds = v.max_length == v.order;
  if (v.holds)
    for (std::size_t x = 0; x < len.size(); ++x)
      if (len[x] == v.order) {
        v.witness = static_cast<Elem>(x);
        break;
      }
  return v;
}

RccVerdict check_rcc(const Automorphism& a) { return check_rcc(a.perm()); }

Rational lambda(const CycleStructure& cs) { return Rational(cs.max_length(), cs.points()); }

Rational lambda(const Automorphism& a) { return lambda(cycle_structure(a)); }

Rational lambda_group(const FiniteGroup& g, const Limits& limits) {
  std::uint64_t best = 1;
  for_each_automorphism(
      g,
      [&](std::span<const Elem> perm) {
        for (auto l : cycle_lengths(perm)) best = std::max(best, l);
      },
      limits);
  return Rational(best, g.order());
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::two_prime_order: return "two_prime_order";
    case CertificateKind::coprime_order: return "coprime_order";
    case CertificateKind::nilpotent_group: return "nilpotent_group";
    case CertificateKind::lambda_third: return "lambda_third";
  }
  return "unknown";
}

std::vector<FastPathCertificate> all_certificates(const CycleStructure& cs, bool nilpotent_group) {
  std::vector<FastPathCertificate> out;
  FastPathCertificate base{CertificateKind::two_prime_order, cs.order(), cs.points(),
                           prime_divisors(cs.order()), lambda(cs)};
  if (base.primes.size() <= 2) out.push_back(base);
  if (gcd(cs.order(), cs.points()) == 1) {
    out.push_back(base);
    out.back().kind = CertificateKind::coprime_order;
  }
  if (nilpotent_group) {
    out.push_back(base);
    out.back().kind = CertificateKind::nilpotent_group;
  }
  if (base.lambda >= Rational(1, 3)) {
    out.push_back(base);
    out.back().kind = CertificateKind::lambda_third;
  }
  return out;
}

std::vector<FastPathCertificate> all_certificates(const Automorphism& a) {
  return all_certificates(cycle_structure(a), is_nilpotent(a.group()));
}

std::optional<FastPathCertificate> fast_path(const CycleStructure& cs, bool nilpotent_group) {
  auto all = all_certificates(cs, nilpotent_group);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<FastPathCertificate> fast_path(const Automorphism& a) {
  return fast_path(cycle_structure(a), is_nilpotent(a.group()));
}

DominanceReport dominance_check(const FiniteGroup& g, std::span<const std::uint64_t> lengths, Elem x,
                                Elem y, std::uint64_t p) {
  DominanceReport r;
  r.prime = p;
  r.length_x = lengths[x];
  r.length_y = lengths[y];
  r.length_xy = lengths[g.mul(x, y)];
  r.nu_x = valuation(r.length_x, p);
  r.nu_y = valuation(r.length_y, p);
  r.nu_xy = valuation(r.length_xy, p);
  r.applicable = r.nu_x != r.nu_y;
  r.holds = r.applicable && r.nu_xy == std::max(r.nu_x, r.nu_y);
  return r;
}

DominanceReport dominance_check(const Automorphism& a, Elem x, Elem y, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("dominance check needs a prime");
  auto len = cycle_lengths(a);
  return dominance_check(a.group(), len, x, y, p);
}

bool two_prime_divisibility_holds(const CycleStructure& cs) {
  auto f = factorize(cs.order());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      std::uint64_t target = ipow(f[i].first, f[i].second) * ipow(f[j].first, f[j].second);
      bool found = false;
      for (auto d : cs.lengths())
        if (d % target == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

PqrReport pqr_structure_check(const Automorphism& a) {
  PqrReport rep;
  auto f = factorize(a.order());
  if (f.size() != 3 || f[0].second != 1 || f[1].second != 1 || f[2].second != 1) {
    rep.reason = "not applicable: order is not a product of three distinct primes";
    return rep;
  }
  if (check_rcc(a).holds) {
    rep.reason = "not applicable: automorphism satisfies the RCC";
    return rep;
  }
  rep.applicable = true;
  rep.p = f[0].first;
  rep.q = f[1].first;
  rep.r = f[2].first;
  auto cs = cycle_structure(a);
  rep.zeta1 = cs.zeta(1);
  rep.zeta_pq = cs.zeta(rep.p * rep.q);
  rep.zeta_pr = cs.zeta(rep.p * rep.r);
  rep.zeta_qr = cs.zeta(rep.q * rep.r);
  rep.group_order = a.group().order();
  rep.zeta_equal = rep.zeta1 == rep.zeta_pq && rep.zeta1 == rep.zeta_pr && rep.zeta1 == rep.zeta_qr;
  rep.group_order_is_4_zeta1 = rep.group_order == 4 * rep.zeta1;
  rep.only_expected_lengths =
      cs.lengths() == std::set<std::uint64_t>{1, rep.p * rep.q, rep.p * rep.r, rep.q * rep.r};
  rep.fixed_subgroup_normal = is_normal(a.group(), per_subgroup(a, 1));
  rep.holds = rep.zeta_equal && rep.group_order_is_4_zeta1 && rep.only_expected_lengths &&
              rep.fixed_subgroup_normal;
  rep.reason = rep.holds ? "all structural assertions hold" : "structural assertion failed";
  return rep;
}

// ---------------------------------------------------------------- Frattini lifting

namespace {

Subgroup checked_frattini(const FiniteGroup& g, const Limits& limits) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (g.order() < 2 || !prime_power(g.order(), p, k))
    throw InvalidInput("group of order " + std::to_string(g.order()) + " is not a nontrivial p-group");
  return frattini(g, limits);
}

}  // namespace

FrattiniContext::FrattiniContext(FiniteGroup g, const Limits& limits)
    : group_(std::move(g)),
      frattini_(checked_frattini(group_, limits)),
      quotient_(rcclab::quotient(group_, frattini_, limits)),
      limits_(limits) {
  prime_power(group_.order(), p_, m_);
  const FiniteGroup& q = quotient_.group;
  for (std::size_t n = q.order(); n > 1; n /= p_) ++r_;

  std::vector<char> span(q.order(), 0);
  span[q.identity()] = 1;
  for (std::size_t x = 0; x < q.order(); ++x) {
    if (span[x]) continue;
    basis_.push_back(static_cast<Elem>(x));
    auto members = closure_members(q, basis_);
    for (Elem y : members) span[y] = 1;
  }
  if (basis_.size() != r_) throw std::logic_error("Frattini quotient is not elementary abelian");

  std::uint64_t total = q.order();
  elem_of_index_.assign(total, 0);
  index_of_elem_.assign(total, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    GFVector c = vector_from_index(p_, r_, idx);
    Elem e = q.identity();
    for (unsigned i = 0; i < r_; ++i) e = q.mul(e, q.pow(basis_[i], c[i]));
    elem_of_index_[idx] = e;
    index_of_elem_[e] = idx;
  }
  cosets_.assign(total, {});
  for (std::size_t x = 0; x < group_.order(); ++x)
    cosets_[quotient_.projection(static_cast<Elem>(x))].push_back(static_cast<Elem>(x));
}

Elem FrattiniContext::quotient_element(std::span<const Residue> coords) const {
  return elem_of_index_[vector_index(p_, coords)];
}

GFVector FrattiniContext::coordinates(Elem quotient_element) const {
  return vector_from_index(p_, r_, index_of_elem_[quotient_element]);
}

std::vector<Elem> FrattiniContext::induced_perm(std::span<const Elem> perm) const {
  std::vector<Elem> out(quotient_.group.order());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = quotient_.projection(perm[quotient_.representatives[c]]);
  return out;
}

GFMatrix FrattiniContext::induced_matrix(std::span<const Elem> induced) const {
  GFMatrix m(p_, r_);
  for (unsigned j = 0; j < r_; ++j) {
    GFVector col = coordinates(induced[basis_[j]]);
    for (unsigned i = 0; i < r_; ++i) m(i, j) = col[i];
  }
  return m;
}

bool acts_trivially_on_frattini_quotient(const FrattiniContext& ctx, std::span<const Elem> perm) {
  const auto& q = ctx.quotient();
  for (std::size_t c = 0; c < q.group.order(); ++c)
    if (q.projection(perm[q.representatives[c]]) != c) return false;
  return true;
}

RegularGeneratingSet regular_generating_set_pgroup(const FrattiniContext& ctx, std::span<const Elem> perm) {
  RegularGeneratingSet out;
  out.prime = ctx.prime();
  out.m = ctx.m();
  out.r = ctx.r();
  auto induced = ctx.induced_perm(perm);
  out.ford = check_rcc(induced).order;
  GFMatrix mat = ctx.induced_matrix(induced);
  auto lengths = cycle_lengths(perm);

  for (const auto& v : regular_basis(mat)) {
    Elem qe = ctx.quotient_element(v);
    Elem best = ctx.coset(qe).front();
    for (Elem x : ctx.coset(qe))
      if (lengths[x] < lengths[best]) best = x;  // cosets are in increasing index order
    std::uint64_t len = lengths[best];
    if (len % out.ford != 0) throw std::logic_error("lift cycle length not divisible by ford");
    std::uint64_t ratio = len / out.ford;
    unsigned k = 0;
    while (ratio % out.prime == 0) {
      ratio /= out.prime;
      ++k;
    }
    if (ratio != 1) throw std::logic_error("lift cycle length is not p^k * ford");
    if (k > ctx.hall_exponent()) throw std::logic_error("lift exponent exceeds (m-r)r");
    out.elements.push_back(best);
    out.exponents.push_back(k);
    out.cycle_lengths.push_back(len);
  }
  out.generates = closure_members(ctx.group(), out.elements).size() == ctx.group().order();
  if (!out.generates) throw std::logic_error("lifted regular basis does not generate the group");
  return out;
}

RegularGeneratingSet regular_generating_set_pgroup(const Automorphism& a, const Limits& limits) {
  FrattiniContext ctx(a.group(), limits);
  return regular_generating_set_pgroup(ctx, a.perm());
}

}  // namespace rcclab
