#include "rcclab/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rcclab/numtheory.hpp"

namespace rcclab {

namespace {

std::string err_pos(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_order_bound(std::uint64_t order, const Limits& limits) {
  if (order > limits.max_group_order)
    throw BoundExceeded("group order bound", limits.max_group_order, order);
}

// Right-multiplication closure on a raw table.
std::vector<char> raw_closure(std::span<const Elem> table, std::size_t n, Elem e,
                              std::span<const Elem> gens, std::vector<char> seed = {}) {
  std::vector<char> in = seed.empty() ? std::vector<char>(n, 0) : std::move(seed);
  std::vector<Elem> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) queue.push_back(static_cast<Elem>(i));
  if (!in[e]) {
    in[e] = 1;
    queue.push_back(e);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Elem x = queue[k];
    for (Elem g : gens) {
      Elem y = table[static_cast<std::size_t>(x) * n + g];
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::size_t count_set(const std::vector<char>& m) {
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
}

std::vector<Elem> raw_order_greedy(std::span<const Elem> table, std::size_t n, Elem e,
                                   std::span<const std::uint64_t> orders) {
  // Closure-maximizing greedy for moderate sizes, largest-order greedy above.
  std::vector<Elem> gens;
  std::vector<char> in = raw_closure(table, n, e, gens);
  const bool full_scan = n <= 1024;
  while (count_set(in) < n) {
    Elem best = 0;
    std::size_t best_size = 0;
    std::uint64_t best_order = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      std::size_t sz = 0;
      if (full_scan) {
        std::vector<Elem> trial = gens;
        trial.push_back(static_cast<Elem>(x));
        sz = count_set(raw_closure(table, n, e, trial, in));
      }
      if (sz > best_size || (sz == best_size && orders[x] > best_order)) {
        best = static_cast<Elem>(x);
        best_size = sz;
        best_order = orders[x];
      }
    }
    gens.push_back(best);
    in = raw_closure(table, n, e, gens, std::move(in));
  }
  return gens;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

Elem FiniteGroup::pow(Elem a, std::uint64_t k) const {
  k %= element_order(a);
  Elem r = identity();
  Elem b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return d_ == other.d_ || d_->table == other.d_->table;
}

FiniteGroup FiniteGroup::with_tag(std::string tag) const {
  auto d = std::make_shared<Data>(*d_);
  d->tag = std::move(tag);
  return FiniteGroup(std::move(d));
}

FiniteGroup validate_group(GroupTable candidate, const Limits& limits) {
  const std::size_t n = candidate.table.size();
  if (n == 0) throw InvalidInput("empty multiplication table");
  check_order_bound(n, limits);

  auto d = std::make_shared<FiniteGroup::Data>();
  d->order = n;
  d->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (candidate.table[i].size() != n)
      throw InvalidInput("table row " + std::to_string(i) + " has length " +
                         std::to_string(candidate.table[i].size()) + ", expected " +
                         std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      Elem v = candidate.table[i][j];
      if (v >= n) throw InvalidInput("table entry " + err_pos(i, j) + " out of range");
      d->table[i * n + j] = v;
    }
  }
  const auto& t = d->table;

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[t[i * n + j]])
        throw InvalidInput("not a Latin square: row " + std::to_string(i) + " repeats element " +
                           std::to_string(t[i * n + j]) + " at column " + std::to_string(j));
      seen[t[i * n + j]] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[t[i * n + j]])
        throw InvalidInput("not a Latin square: column " + std::to_string(j) +
                           " repeats element " + std::to_string(t[i * n + j]) + " at row " +
                           std::to_string(i));
      seen[t[i * n + j]] = 1;
    }
  }

  auto is_identity = [&](std::size_t e) {
    for (std::size_t x = 0; x < n; ++x)
      if (t[e * n + x] != x || t[x * n + e] != x) return false;
    return true;
  };
  if (candidate.identity) {
    if (*candidate.identity >= n || !is_identity(*candidate.identity))
      throw InvalidInput("no two-sided identity: element " + std::to_string(*candidate.identity) +
                         " is not an identity");
    d->identity = *candidate.identity;
  } else {
    std::size_t e = 0;
    while (e < n && !is_identity(e)) ++e;
    if (e == n) throw InvalidInput("no two-sided identity");
    d->identity = static_cast<Elem>(e);
  }
  const Elem e = d->identity;

  d->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (t[a * n + b] != e) ++b;  // exists by the Latin property
    if (t[b * n + a] != e)
      throw InvalidInput("element " + std::to_string(a) + " has no two-sided inverse");
    d->inverse[a] = static_cast<Elem>(b);
  }

  // Provisional element orders (valid once associativity holds).
  d->element_order.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != e) {
      x = t[static_cast<std::size_t>(x) * n + a];
      if (++k > n) throw InvalidInput("element " + std::to_string(a) + " has no finite order");
    }
    d->element_order[a] = k;
  }

  if (n <= limits.exhaustive_associativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (t[ab * n + c] != t[a * n + t[b * n + c]])
            throw InvalidInput("associativity fails at triple (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }

  if (!candidate.generators.empty()) {
    for (Elem g : candidate.generators)
      if (g >= n) throw InvalidInput("generator index " + std::to_string(g) + " out of range");
    if (count_set(raw_closure(t, n, e, candidate.generators)) != n)
      throw InvalidInput("supplied generators do not generate the group");
    d->generators = std::move(candidate.generators);
  } else {
    d->generators = raw_order_greedy(t, n, e, d->element_order);
  }

  if (n > limits.exhaustive_associativity) {
    // Light's test: associativity for middle factors in a generating set suffices.
    for (Elem g : d->generators)
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t ag = t[a * n + g];
        for (std::size_t c = 0; c < n; ++c)
          if (t[ag * n + c] != t[a * n + t[static_cast<std::size_t>(g) * n + c]])
            throw InvalidInput("associativity fails at triple (" + std::to_string(a) + "," +
                               std::to_string(g) + "," + std::to_string(c) + ")");
      }
  }

  d->abelian = true;
  for (std::size_t a = 0; a < n && d->abelian; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (t[a * n + b] != t[b * n + a]) {
        d->abelian = false;
        break;
      }
  d->exponent = 1;
  for (auto o : d->element_order) d->exponent = lcm(d->exponent, o);

  if (!candidate.labels.empty()) {
    if (candidate.labels.size() != n) throw InvalidInput("label count does not match order");
    d->labels = std::move(candidate.labels);
  } else {
    d->labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) d->labels[i] = std::to_string(i);
  }
  d->tag = std::move(candidate.tag);
  return FiniteGroup(std::move(d));
}

// ---------------------------------------------------------------- Subgroup / GroupHom

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem m : members_) {
    if (m >= parent_.order()) throw InvalidInput("subgroup member out of range");
    mask_[m] = true;
  }
  if (!mask_[parent_.identity()]) throw InvalidInput("subset does not contain the identity");
  for (Elem a : members_) {
    if (!mask_[parent_.inv(a)]) throw InvalidInput("subset not closed under inverses");
    for (Elem b : members_)
      if (!mask_[parent_.mul(a, b)]) throw InvalidInput("subset not closed under multiplication");
  }
  if (parent_.order() % members_.size() != 0)
    throw std::logic_error("Lagrange violated: subgroup order does not divide group order");
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const std::size_t n = source_.order();
  if (images_.size() != n) throw InvalidInput("homomorphism image list has wrong length");
  for (Elem x : images_)
    if (x >= target_.order()) throw InvalidInput("homomorphism image out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem ab = source_.mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (images_[ab] != target_.mul(images_[a], images_[b]))
        throw InvalidInput("map is not multiplicative at " + err_pos(a, b));
    }
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target_.order(), 0);
  for (Elem x : images_) hit[x] = 1;
  return count_set(hit) == target_.order();
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> k;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == target_.identity()) k.push_back(static_cast<Elem>(i));
  return k;
}

// ---------------------------------------------------------------- closures

std::vector<Elem> closure_members(const FiniteGroup& g, std::span<const Elem> gens) {
  for (Elem x : gens)
    if (x >= g.order()) throw InvalidInput("generator index out of range");
  auto in = raw_closure(g.table(), g.order(), g.identity(), gens);
  std::vector<Elem> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  return Subgroup(g, closure_members(g, gens));
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (Elem x : g.generators())
    for (Elem m : s.members())
      if (!s.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits) {
  if (!is_normal(g, n)) throw InvalidInput("subgroup is not normal");
  const std::size_t order = g.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset(order, unset);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != unset) continue;
    auto id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem m : n.members()) coset[g.mul(static_cast<Elem>(x), m)] = id;
  }
  GroupTable qt;
  const std::size_t q = reps.size();
  qt.table.assign(q, std::vector<Elem>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) qt.table[i][j] = coset[g.mul(reps[i], reps[j])];
  for (Elem r : reps) qt.labels.push_back("[" + g.label(r) + "]");
  qt.identity = coset[g.identity()];
  for (Elem x : g.generators()) qt.generators.push_back(coset[x]);
  if (!g.tag().empty()) qt.tag = g.tag() + "/N";
  FiniteGroup qg = validate_group(std::move(qt), limits);
  GroupHom proj(g, qg, coset);
  return Quotient{std::move(qg), std::move(proj), std::move(reps)};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t a = g.order(), b = h.order();
  check_order_bound(a * b, limits);
  GroupTable t;
  t.table.assign(a * b, std::vector<Elem>(a * b));
  for (std::size_t x = 0; x < a * b; ++x)
    for (std::size_t y = 0; y < a * b; ++y) {
      Elem gx = static_cast<Elem>(x % a), hx = static_cast<Elem>(x / a);
      Elem gy = static_cast<Elem>(y % a), hy = static_cast<Elem>(y / a);
      t.table[x][y] = static_cast<Elem>(g.mul(gx, gy) + a * h.mul(hx, hy));
    }
  for (std::size_t x = 0; x < a * b; ++x)
    t.labels.push_back("(" + g.label(static_cast<Elem>(x % a)) + "," +
                       h.label(static_cast<Elem>(x / a)) + ")");
  t.identity = static_cast<Elem>(g.identity() + a * h.identity());
  for (Elem x : g.generators()) t.generators.push_back(static_cast<Elem>(x + a * h.identity()));
  for (Elem y : h.generators()) t.generators.push_back(static_cast<Elem>(g.identity() + a * y));
  if (!g.tag().empty() && !h.tag().empty()) t.tag = g.tag() + " x " + h.tag();
  return validate_group(std::move(t), limits);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Elem>>& action,
                               const Limits& limits) {
  const std::size_t a = n.order(), b = h.order();
  check_order_bound(a * b, limits);
  if (action.size() != b) throw InvalidInput("action must list one map per element of H");
  for (std::size_t k = 0; k < b; ++k) {
    const auto& phi = action[k];
    if (phi.size() != a) throw InvalidInput("action map has wrong length");
    std::vector<char> hit(a, 0);
    for (Elem x : phi) {
      if (x >= a || hit[x]) throw InvalidInput("action image " + std::to_string(k) + " is not a bijection");
      hit[x] = 1;
    }
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < a; ++y)
        if (phi[n.mul(static_cast<Elem>(x), static_cast<Elem>(y))] != n.mul(phi[x], phi[y]))
          throw InvalidInput("action image " + std::to_string(k) + " is not an automorphism");
  }
  for (std::size_t h1 = 0; h1 < b; ++h1)
    for (std::size_t h2 = 0; h2 < b; ++h2) {
      const auto& composed = action[h.mul(static_cast<Elem>(h1), static_cast<Elem>(h2))];
      for (std::size_t x = 0; x < a; ++x)
        if (composed[x] != action[h1][action[h2][x]])
          throw InvalidInput("action is not a homomorphism at " + err_pos(h1, h2));
    }
  GroupTable t;
  t.table.assign(a * b, std::vector<Elem>(a * b));
  for (std::size_t x = 0; x < a * b; ++x)
    for (std::size_t y = 0; y < a * b; ++y) {
      Elem n1 = static_cast<Elem>(x % a), h1 = static_cast<Elem>(x / a);
      Elem n2 = static_cast<Elem>(y % a), h2 = static_cast<Elem>(y / a);
      t.table[x][y] = static_cast<Elem>(n.mul(n1, action[h1][n2]) + a * h.mul(h1, h2));
    }
  for (std::size_t x = 0; x < a * b; ++x)
    t.labels.push_back("(" + n.label(static_cast<Elem>(x % a)) + "," +
                       h.label(static_cast<Elem>(x / a)) + ")");
  t.identity = static_cast<Elem>(n.identity() + a * h.identity());
  for (Elem x : n.generators()) t.generators.push_back(static_cast<Elem>(x + a * h.identity()));
  for (Elem y : h.generators()) t.generators.push_back(static_cast<Elem>(n.identity() + a * y));
  return validate_group(std::move(t), limits);
}

std::vector<Elem> perm_from_cycles(std::size_t degree, const std::vector<std::vector<Elem>>& cycles) {
  std::vector<Elem> img(degree);
  std::iota(img.begin(), img.end(), Elem{0});
  for (const auto& c : cycles) {
    std::vector<Elem> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), Elem{0});
    std::vector<char> used(degree, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw InvalidInput("cycle point " + std::to_string(c[i]) + " out of range");
      if (used[c[i]]) throw InvalidInput("cycle repeats point " + std::to_string(c[i]));
      used[c[i]] = 1;
      cyc[c[i]] = c[(i + 1) % c.size()];
    }
    for (auto& x : img) x = cyc[x];
  }
  return img;
}

namespace {

std::string cycle_label(const std::vector<Elem>& img) {
  std::string s;
  std::vector<char> seen(img.size(), 0);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i] || img[i] == i) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
      j = img[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace

FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<Elem>>& generators,
                              const Limits& limits) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidInput("permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (Elem x : g) {
      if (x >= degree || hit[x]) throw InvalidInput("generator is not a permutation");
      hit[x] = 1;
    }
  }
  std::vector<Elem> id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  std::map<std::vector<Elem>, std::size_t> index;
  std::vector<std::vector<Elem>> elems{id};
  index[id] = 0;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : generators) {
      std::vector<Elem> prod(degree);
      for (std::size_t x = 0; x < degree; ++x) prod[x] = g[elems[k][x]];
      if (index.count(prod)) continue;
      index[prod] = elems.size();
      elems.push_back(std::move(prod));
      check_order_bound(elems.size(), limits);
    }
  }
  std::sort(elems.begin(), elems.end());
  index.clear();
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const std::size_t n = elems.size();
  GroupTable t;
  t.table.assign(n, std::vector<Elem>(n));
  std::vector<Elem> prod(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = elems[b][elems[a][x]];
      t.table[a][b] = static_cast<Elem>(index.at(prod));
    }
  for (const auto& e : elems) t.labels.push_back(cycle_label(e));
  t.identity = 0;
  for (const auto& g : generators)
    if (g != id) t.generators.push_back(static_cast<Elem>(index.at(g)));
  if (t.generators.empty() && n > 1) throw std::logic_error("permutation group lost its generators");
  return validate_group(std::move(t), limits);
}

// ---------------------------------------------------------------- subgroup lattice

namespace {

struct LatticeNode {
  std::vector<char> mask;
  std::vector<Elem> gens;
  bool maximal_candidate = true;
};

std::vector<LatticeNode> lattice(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.max_subgroup_lattice)
    throw BoundExceeded("subgroup lattice bound", limits.max_subgroup_lattice, n);
  std::map<std::vector<char>, std::size_t> seen;
  std::vector<LatticeNode> nodes;
  nodes.push_back({raw_closure(g.table(), n, g.identity(), {}), {}, true});
  seen[nodes[0].mask] = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (count_set(nodes[k].mask) == n) {
      nodes[k].maximal_candidate = false;
      continue;
    }
    std::vector<char> done = nodes[k].mask;  // elements whose join is known
    std::vector<Elem> members;
    for (std::size_t x = 0; x < n; ++x)
      if (nodes[k].mask[x]) members.push_back(static_cast<Elem>(x));
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) continue;
      for (Elem m : members) done[g.mul(m, static_cast<Elem>(x))] = 1;  // same join for Hx
      std::vector<Elem> gens = nodes[k].gens;
      gens.push_back(static_cast<Elem>(x));
      auto mask = raw_closure(g.table(), n, g.identity(), gens, nodes[k].mask);
      if (count_set(mask) != n) nodes[k].maximal_candidate = false;
      if (!seen.count(mask)) {
        seen[mask] = nodes.size();
        nodes.push_back({std::move(mask), std::move(gens), true});
      }
    }
  }
  return nodes;
}

std::vector<Elem> mask_members(const std::vector<char>& mask) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  std::vector<Subgroup> out;
  for (const auto& node : lattice(g, limits)) out.emplace_back(g, mask_members(node.mask));
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Limits& limits) {
  std::vector<Subgroup> out;
  for (const auto& node : lattice(g, limits))
    if (node.maximal_candidate) out.emplace_back(g, mask_members(node.mask));
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members() < b.members(); });
  return out;
}

Subgroup frattini(const FiniteGroup& g, const Limits& limits) {
  auto maxes = maximal_subgroups(g, limits);
  std::vector<char> in(g.order(), 1);
  for (const auto& m : maxes)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!m.contains(static_cast<Elem>(x))) in[x] = 0;
  Subgroup frat(g, mask_members(in));
  std::uint64_t p = 0;
  unsigned k = 0;
  if (g.order() > 1 && prime_power(g.order(), p, k)) {
    Subgroup burnside = join(commutator_subgroup(g), power_subgroup(g, p));
    if (!(burnside == frat))
      throw std::logic_error("Frattini subgroup differs from G'G^p for a p-group");
  }
  return frat;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      Elem c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!in[c]) {
        in[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

Subgroup power_subgroup(const FiniteGroup& g, std::uint64_t p) {
  std::vector<Elem> powers;
  for (std::size_t a = 0; a < g.order(); ++a) powers.push_back(g.pow(static_cast<Elem>(a), p));
  return subgroup_closure(g, powers);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem x : g.generators())
      if (g.mul(static_cast<Elem>(a), x) != g.mul(x, static_cast<Elem>(a))) {
        central = false;
        break;
      }
    if (central) z.push_back(static_cast<Elem>(a));
  }
  return Subgroup(g, std::move(z));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.members())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.members();
  gens.insert(gens.end(), b.members().begin(), b.members().end());
  return subgroup_closure(a.parent(), gens);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  std::vector<Subgroup> series{Subgroup(g, all)};
  for (;;) {
    const Subgroup& cur = series.back();
    std::vector<Elem> comms;
    for (Elem x : cur.members())
      for (std::size_t y = 0; y < g.order(); ++y) {
        Elem yy = static_cast<Elem>(y);
        comms.push_back(g.mul(g.mul(g.inv(x), g.inv(yy)), g.mul(x, yy)));
      }
    Subgroup next = subgroup_closure(g, comms);
    if (next == cur) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }

std::uint64_t element_order(const FiniteGroup& g, Elem a) { return g.element_order(a); }

std::vector<std::uint64_t> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<std::uint64_t> out(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    std::uint64_t centralizer = 0;
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
          g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        ++centralizer;
    out[a] = g.order() / centralizer;
  }
  return out;
}

std::vector<Elem> greedy_generating_set(const FiniteGroup& g) {
  std::vector<std::uint64_t> orders(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) orders[a] = g.element_order(static_cast<Elem>(a));
  return raw_order_greedy(g.table(), g.order(), g.identity(), orders);
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  for (std::size_t a = 0; a < g.order(); ++a) f.element_orders.push_back(g.element_order(static_cast<Elem>(a)));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.abelian = g.is_abelian();
  f.center_size = center(g).size();
  return f;
}

}  // namespace rcclab
