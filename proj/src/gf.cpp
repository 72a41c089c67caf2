#include "rcclab/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rcclab/numtheory.hpp"

namespace rcclab {

namespace {

Residue fadd(Residue a, Residue b, std::uint64_t p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
Residue fsub(Residue a, Residue b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
Residue fmul(Residue a, Residue b, std::uint64_t p) { return a * b % p; }
Residue finv(Residue a, std::uint64_t p) {
  if (a == 0) throw std::logic_error("inverse of zero residue");
  return powmod(a, p - 2, p);
}

void same_modulus(std::uint64_t a, std::uint64_t b) {
  if (a != b)
    throw InvalidInput("mismatched moduli " + std::to_string(a) + " and " + std::to_string(b));
}

// Rectangular matrix used internally for elimination.
struct Dense {
  std::uint64_t p;
  std::size_t rows, cols;
  std::vector<Residue> a;

  Dense(std::uint64_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
  Residue& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Residue at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns pivot columns (restricted to the first
// `limit_cols` columns).
std::vector<std::size_t> rref(Dense& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit_cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Residue iv = finv(m.at(row, col), m.p);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = fmul(m.at(row, j), iv, m.p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Residue f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = fsub(m.at(i, j), fmul(f, m.at(row, j), m.p), m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of {x : R x = 0}.
std::vector<GFVector> kernel(Dense r) {
  auto pivots = rref(r, r.cols);
  std::vector<bool> is_pivot(r.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<GFVector> basis;
  for (std::size_t free = 0; free < r.cols; ++free) {
    if (is_pivot[free]) continue;
    GFVector v(r.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = fsub(0, r.at(i, free), r.p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of each target w.r.t. a full-column-rank basis; throws if not in span.
std::vector<GFVector> coordinates(std::uint64_t p, const std::vector<GFVector>& basis,
                                  const std::vector<GFVector>& targets) {
  std::size_t n = basis.empty() ? 0 : basis[0].size();
  std::size_t m = basis.size();
  Dense aug(p, n, m + targets.size());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) aug.at(i, j) = basis[j][i];
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) aug.at(i, m + t) = targets[t][i];
  auto pivots = rref(aug, m);
  if (pivots.size() != m) throw std::logic_error("coordinates: basis not independent");
  for (std::size_t i = m; i < n; ++i)
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (aug.at(i, m + t) != 0) throw std::logic_error("coordinates: vector not in span");
  std::vector<GFVector> out(targets.size(), GFVector(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < targets.size(); ++t) out[t][pivots[i]] = aug.at(i, m + t);
  return out;
}

// f(A) v by Horner.
GFVector poly_apply(const GFPoly& f, const GFMatrix& a, const GFVector& v) {
  std::uint64_t p = a.modulus();
  GFVector r(v.size(), 0);
  for (int d = f.degree(); d >= 0; --d) {
    r = a.apply(r);
    Residue c = f.coeff(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = fadd(r[i], fmul(c, v[i], p), p);
  }
  return r;
}

// Minimal polynomial of v under A by Krylov elimination.
GFPoly vector_minpoly(const GFMatrix& a, const GFVector& v) {
  std::uint64_t p = a.modulus();
  std::size_t n = a.size();
  struct Row {
    std::size_t pivot;
    GFVector vec;
    GFVector comb;  // combination of Krylov vectors producing vec
  };
  std::vector<Row> rows;
  GFVector w = v;
  for (std::size_t t = 0; t <= n; ++t) {
    GFVector vec = w;
    GFVector comb(t + 1, 0);
    comb[t] = 1;
    for (const auto& r : rows) {
      Residue f = vec[r.pivot];
      if (f == 0) continue;
      for (std::size_t i = 0; i < n; ++i) vec[i] = fsub(vec[i], fmul(f, r.vec[i], p), p);
      for (std::size_t i = 0; i < r.comb.size(); ++i)
        comb[i] = fsub(comb[i], fmul(f, r.comb[i], p), p);
    }
    std::size_t piv = 0;
    while (piv < n && vec[piv] == 0) ++piv;
    if (piv == n) return GFPoly::from_residues(p, comb);
    Residue iv = finv(vec[piv], p);
    for (auto& x : vec) x = fmul(x, iv, p);
    for (auto& x : comb) x = fmul(x, iv, p);
    // Keep rows reduced at the new pivot so that later reductions stay triangular.
    for (auto& r : rows) {
      Residue f = r.vec[piv];
      if (f == 0) continue;
      for (std::size_t i = 0; i < n; ++i) r.vec[i] = fsub(r.vec[i], fmul(f, vec[i], p), p);
      r.comb.resize(t + 1, 0);
      for (std::size_t i = 0; i <= t; ++i) r.comb[i] = fsub(r.comb[i], fmul(f, comb[i], p), p);
    }
    rows.push_back({piv, std::move(vec), std::move(comb)});
    w = a.apply(w);
  }
  throw std::logic_error("vector_minpoly: Krylov sequence did not terminate");
}

struct CyclicPiece {
  GFVector generator;
  GFPoly minpoly;
};

// Cyclic decomposition with minimal polynomials in decreasing divisibility order.
std::vector<CyclicPiece> cyclic_decomposition(const GFMatrix& a, const Limits& limits) {
  std::uint64_t p = a.modulus();
  std::size_t n = a.size();
  if (n == 0) return {};

  std::vector<GFPoly> unit_minpolys;
  GFPoly m = GFPoly::constant(p, 1);
  for (std::size_t j = 0; j < n; ++j) {
    GFVector e(n, 0);
    e[j] = 1;
    unit_minpolys.push_back(vector_minpoly(a, e));
    const GFPoly& mj = unit_minpolys.back();
    m = poly_divmod(m * mj, poly_gcd(m, mj)).first.monic();
  }

  // A vector whose minimal polynomial is m: sum of primary components.
  GFVector v(n, 0);
  for (const auto& [q, e] : poly_factor(m, limits)) {
    GFPoly qe = GFPoly::constant(p, 1);
    for (unsigned i = 0; i < e; ++i) qe = qe * q;
    for (std::size_t j = 0; j < n; ++j) {
      auto [quot, rem] = poly_divmod(unit_minpolys[j], qe);
      if (!rem.is_zero()) continue;
      GFVector unit(n, 0);
      unit[j] = 1;
      GFVector w = poly_apply(quot, a, unit);
      for (std::size_t i = 0; i < n; ++i) v[i] = fadd(v[i], w[i], p);
      break;
    }
  }
  if (!(vector_minpoly(a, v) == m))
    throw std::logic_error("cyclic_decomposition: maximal vector has wrong minimal polynomial");

  std::size_t d = static_cast<std::size_t>(m.degree());
  std::vector<CyclicPiece> out{{v, m}};
  if (d == n) return out;

  std::vector<GFVector> krylov{v};
  for (std::size_t i = 1; i < d; ++i) krylov.push_back(a.apply(krylov.back()));

  // Extend the Krylov basis to a full basis with unit vectors.
  std::vector<GFVector> full = krylov;
  for (std::size_t j = 0; j < n && full.size() < n; ++j) {
    GFVector e(n, 0);
    e[j] = 1;
    full.push_back(e);
    if (vectors_rank(p, full) != full.size()) full.pop_back();
  }
  GFMatrix basis(p, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = full[j][i];
  GFMatrix basis_inv = inverse(basis);

  // Functional picking the coefficient of A^{d-1} v; its A-orbit cuts out an invariant
  // complement of the cyclic subspace.
  Dense conditions(p, d, n);
  GFVector f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = basis_inv(d - 1, j);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) conditions.at(i, j) = f[j];
    GFVector next(n, 0);  // f * A
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) next[j] = fadd(next[j], fmul(f[k], a(k, j), p), p);
    f = std::move(next);
  }
  std::vector<GFVector> complement = kernel(conditions);
  if (complement.size() != n - d) throw std::logic_error("cyclic_decomposition: bad complement");

  std::vector<GFVector> images;
  for (const auto& c : complement) images.push_back(a.apply(c));
  auto coords = coordinates(p, complement, images);
  GFMatrix restricted(p, n - d);
  for (std::size_t j = 0; j < n - d; ++j)
    for (std::size_t i = 0; i < n - d; ++i) restricted(i, j) = coords[j][i];

  for (auto& piece : cyclic_decomposition(restricted, limits)) {
    GFVector ambient(n, 0);
    for (std::size_t k = 0; k < n - d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        ambient[i] = fadd(ambient[i], fmul(piece.generator[k], complement[k][i], p), p);
    out.push_back({std::move(ambient), std::move(piece.minpoly)});
  }
  return out;
}

}  // namespace

void check_prime_modulus(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw InvalidInput("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

// ---------------------------------------------------------------- GFPoly

GFPoly::GFPoly(std::uint64_t p, std::vector<std::int64_t> coeffs) : p_(p) {
  check_prime_modulus(p);
  auto sp = static_cast<std::int64_t>(p);
  for (auto c : coeffs) c_.push_back(static_cast<Residue>(((c % sp) + sp) % sp));
  trim();
}

GFPoly GFPoly::from_residues(std::uint64_t p, std::vector<Residue> coeffs) {
  GFPoly f;
  f.p_ = p;
  f.c_ = std::move(coeffs);
  for (auto& c : f.c_) c %= p;
  f.trim();
  return f;
}

GFPoly GFPoly::zero(std::uint64_t p) { return from_residues(p, {}); }
GFPoly GFPoly::constant(std::uint64_t p, Residue c) { return from_residues(p, {c}); }
GFPoly GFPoly::x(std::uint64_t p) { return from_residues(p, {0, 1}); }

void GFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GFPoly GFPoly::monic() const {
  if (is_zero()) return *this;
  Residue iv = finv(lead(), p_);
  std::vector<Residue> c = c_;
  for (auto& x : c) x = fmul(x, iv, p_);
  return from_residues(p_, std::move(c));
}

Residue GFPoly::eval(Residue x) const {
  Residue r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = fadd(fmul(r, x % p_, p_), *it, p_);
  return r;
}

GFPoly operator+(const GFPoly& a, const GFPoly& b) {
  same_modulus(a.p_, b.p_);
  std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fadd(a.coeff(i), b.coeff(i), a.p_);
  return GFPoly::from_residues(a.p_, std::move(c));
}

GFPoly operator-(const GFPoly& a, const GFPoly& b) {
  same_modulus(a.p_, b.p_);
  std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fsub(a.coeff(i), b.coeff(i), a.p_);
  return GFPoly::from_residues(a.p_, std::move(c));
}

GFPoly operator*(const GFPoly& a, const GFPoly& b) {
  same_modulus(a.p_, b.p_);
  if (a.is_zero() || b.is_zero()) return GFPoly::zero(a.p_);
  std::vector<Residue> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = fadd(c[i + j], fmul(a.c_[i], b.c_[j], a.p_), a.p_);
  return GFPoly::from_residues(a.p_, std::move(c));
}

bool poly_less(const GFPoly& a, const GFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

std::pair<GFPoly, GFPoly> poly_divmod(const GFPoly& a, const GFPoly& m) {
  same_modulus(a.modulus(), m.modulus());
  if (m.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::uint64_t p = a.modulus();
  std::vector<Residue> rem = a.coeffs();
  int dm = m.degree();
  if (a.degree() < dm) return {GFPoly::zero(p), a};
  std::vector<Residue> quot(static_cast<std::size_t>(a.degree() - dm + 1), 0);
  Residue iv = finv(m.lead(), p);
  for (int k = a.degree() - dm; k >= 0; --k) {
    Residue c = fmul(rem[static_cast<std::size_t>(k + dm)], iv, p);
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) {
      auto idx = static_cast<std::size_t>(k + i);
      rem[idx] = fsub(rem[idx], fmul(c, m.coeff(static_cast<std::size_t>(i)), p), p);
    }
  }
  return {GFPoly::from_residues(p, std::move(quot)), GFPoly::from_residues(p, std::move(rem))};
}

GFPoly poly_mul_mod(const GFPoly& a, const GFPoly& b, const GFPoly& m) {
  same_modulus(a.modulus(), b.modulus());
  same_modulus(a.modulus(), m.modulus());
  if (m.is_zero()) throw InvalidInput("reduction modulo the zero polynomial");
  return poly_divmod(a * b, m).second;
}

GFPoly poly_pow_mod(const GFPoly& a, std::uint64_t e, const GFPoly& m) {
  GFPoly result = poly_divmod(GFPoly::constant(a.modulus(), 1), m).second;
  GFPoly base = poly_divmod(a, m).second;
  while (e) {
    if (e & 1) result = poly_mul_mod(result, base, m);
    base = poly_mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

GFPoly poly_gcd(GFPoly a, GFPoly b) {
  same_modulus(a.modulus(), b.modulus());
  while (!b.is_zero()) {
    GFPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<PolyFactor> poly_factor(const GFPoly& f, const Limits& limits) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  std::uint64_t p = f.modulus();
  GFPoly rest = f.monic();
  std::vector<PolyFactor> out;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    // Candidates are all monic polynomials of degree d; any that divides `rest` once
    // smaller degrees are exhausted is irreducible.
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      count *= p;
      if (count > limits.max_factor_candidates)
        throw BoundExceeded("factor degree bound", limits.max_factor_candidates, count);
    }
    std::vector<Residue> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    for (std::uint64_t idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      if (c[0] == 0 && d > 1) continue;
      GFPoly cand = GFPoly::from_residues(p, c);
      unsigned e = 0;
      for (;;) {
        auto [q, r] = poly_divmod(rest, cand);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
      }
      if (e > 0) out.push_back({cand, e});
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& pf : out)
      if (pf.factor == rest) {
        ++pf.exponent;
        merged = true;
      }
    if (!merged) out.push_back({rest, 1});
  }
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const GFPoly& f, const Limits& limits) {
  if (f.degree() < 1) return false;
  auto fs = poly_factor(f, limits);
  return fs.size() == 1 && fs[0].exponent == 1;
}

namespace {

void check_order_input(const GFPoly& f) {
  if (f.is_zero()) throw InvalidInput("order of the zero polynomial");
  if (!f.is_monic()) throw InvalidInput("polynomial order requires a monic polynomial");
  if (f.coeff(0) == 0) throw InvalidInput("polynomial order requires a nonzero constant term");
}

// Order of X modulo an irreducible q with q(0) != 0.
std::uint64_t irreducible_order(const GFPoly& q) {
  std::uint64_t p = q.modulus();
  std::uint64_t group = 1;
  for (int i = 0; i < q.degree(); ++i) {
    if (group > (1ull << 62) / p) throw BoundExceeded("polynomial order bound", 1ull << 62, 0);
    group *= p;
  }
  group -= 1;
  std::uint64_t ord = group;
  GFPoly x = GFPoly::x(p);
  GFPoly one = poly_divmod(GFPoly::constant(p, 1), q).second;
  for (auto [r, e] : factorize(group)) {
    for (unsigned i = 0; i < e; ++i) {
      if (ord % r != 0) break;
      if (poly_pow_mod(x, ord / r, q) == one)
        ord /= r;
      else
        break;
    }
  }
  return ord;
}

}  // namespace

std::uint64_t poly_order(const GFPoly& f, const Limits& limits) {
  check_order_input(f);
  std::uint64_t p = f.modulus();
  std::uint64_t result = 1;
  for (const auto& [q, e] : poly_factor(f, limits)) {
    std::uint64_t pt = 1;
    while (pt < e) pt *= p;  // p^{ceil(log_p e)}
    result = lcm(result, pt * irreducible_order(q));
  }
  return result;
}

std::uint64_t poly_order_by_iteration(const GFPoly& f, const Limits& limits) {
  check_order_input(f);
  if (static_cast<std::uint64_t>(f.degree()) > limits.max_poly_iteration_degree)
    throw BoundExceeded("polynomial iteration degree bound", limits.max_poly_iteration_degree,
                        static_cast<std::uint64_t>(f.degree()));
  std::uint64_t p = f.modulus();
  GFPoly one = poly_divmod(GFPoly::constant(p, 1), f).second;
  GFPoly x = poly_divmod(GFPoly::x(p), f).second;
  GFPoly cur = x;
  std::uint64_t k = 1;
  while (!(cur == one)) {
    cur = poly_mul_mod(cur, x, f);
    ++k;
  }
  return k;
}

Residue parity(const GFPoly& f) {
  if (f.modulus() != 2) throw InvalidInput("parity is defined over GF(2) only");
  return f.eval(1);
}

// ---------------------------------------------------------------- GFMatrix

GFMatrix::GFMatrix(std::uint64_t p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {
  check_prime_modulus(p);
}

GFMatrix::GFMatrix(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows)
    : GFMatrix(p, rows.size()) {
  auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw InvalidInput("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j)
      a_[i * n_ + j] = static_cast<Residue>(((rows[i][j] % sp) + sp) % sp);
  }
}

GFMatrix GFMatrix::identity(std::uint64_t p, std::size_t n) {
  GFMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GFVector GFMatrix::apply(std::span<const Residue> v) const {
  GFVector r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Residue s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * v[j] % p_;
    r[i] = s % p_;
  }
  return r;
}

GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
  same_modulus(a.p_, b.p_);
  if (a.n_ != b.n_) throw InvalidInput("matrix dimension mismatch");
  GFMatrix c(a.p_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      Residue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) = fadd(c(i, j), fmul(x, b(k, j), a.p_), a.p_);
    }
  return c;
}

GFMatrix companion_matrix(const GFPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw InvalidInput("companion matrix needs a monic polynomial");
  std::uint64_t p = f.modulus();
  auto d = static_cast<std::size_t>(f.degree());
  GFMatrix c(p, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = fsub(0, f.coeff(i), p);
  return c;
}

GFMatrix block_diagonal(std::span<const GFMatrix> blocks) {
  if (blocks.empty()) throw InvalidInput("block_diagonal of no blocks");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  GFMatrix out(blocks[0].modulus(), n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    same_modulus(b.modulus(), out.modulus());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return out;
}

std::size_t rank(const GFMatrix& a) {
  Dense d(a.modulus(), a.size(), a.size());
  d.a = a.entries();
  return rref(d, d.cols).size();
}

bool is_invertible(const GFMatrix& a) { return rank(a) == a.size(); }

GFMatrix inverse(const GFMatrix& a) {
  std::size_t n = a.size();
  Dense aug(a.modulus(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a(i, j);
    aug.at(i, n + i) = 1;
  }
  if (rref(aug, n).size() != n) throw InvalidInput("singular matrix");
  GFMatrix inv(a.modulus(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug.at(i, n + j);
  return inv;
}

bool is_identity(const GFMatrix& a) { return a == GFMatrix::identity(a.modulus(), a.size()); }

std::size_t vectors_rank(std::uint64_t p, std::span<const GFVector> vs) {
  if (vs.empty()) return 0;
  Dense d(p, vs.size(), vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < d.cols; ++j) d.at(i, j) = vs[i][j];
  return rref(d, d.cols).size();
}

GFMatrix FrobeniusDecomposition::normal_form() const {
  std::vector<GFMatrix> blocks;
  for (const auto& f : invariant_factors) blocks.push_back(companion_matrix(f));
  return block_diagonal(blocks);
}

FrobeniusDecomposition frobenius_form(const GFMatrix& a, const Limits& limits) {
  if (a.size() == 0) throw InvalidInput("empty matrix");
  auto pieces = cyclic_decomposition(a, limits);
  std::reverse(pieces.begin(), pieces.end());
  std::uint64_t p = a.modulus();
  std::size_t n = a.size();
  GFMatrix u(p, n);
  FrobeniusDecomposition out;
  std::size_t col = 0;
  for (auto& piece : pieces) {
    GFVector w = piece.generator;
    for (int k = 0; k < piece.minpoly.degree(); ++k) {
      for (std::size_t i = 0; i < n; ++i) u(i, col) = w[i];
      ++col;
      w = a.apply(w);
    }
    out.invariant_factors.push_back(std::move(piece.minpoly));
  }
  out.basis_change = std::move(u);
  return out;
}

GFPoly minimal_polynomial(const GFMatrix& a, const Limits& limits) {
  return frobenius_form(a, limits).invariant_factors.back();
}

GFPoly characteristic_polynomial(const GFMatrix& a, const Limits& limits) {
  GFPoly c = GFPoly::constant(a.modulus(), 1);
  for (const auto& f : frobenius_form(a, limits).invariant_factors) c = c * f;
  return c;
}

std::uint64_t matrix_order(const GFMatrix& a, const Limits& limits) {
  if (!is_invertible(a)) throw InvalidInput("singular matrix has no multiplicative order");
  std::uint64_t ord = 1;
  for (const auto& f : frobenius_form(a, limits).invariant_factors)
    ord = lcm(ord, poly_order(f, limits));
  return ord;
}

std::uint64_t matrix_order_by_powering(const GFMatrix& a, std::uint64_t max_steps) {
  if (!is_invertible(a)) throw InvalidInput("singular matrix has no multiplicative order");
  GFMatrix cur = a;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    if (is_identity(cur)) return k;
    cur = cur * a;
  }
  throw BoundExceeded("matrix powering bound", max_steps, max_steps + 1);
}

std::uint64_t vector_cycle_length(const GFMatrix& a, std::span<const Residue> v) {
  GFVector start(v.begin(), v.end());
  GFVector cur = a.apply(start);
  std::uint64_t len = 1;
  while (cur != start) {
    cur = a.apply(cur);
    ++len;
  }
  return len;
}

std::uint64_t vector_index(std::uint64_t p, std::span<const Residue> v) {
  std::uint64_t idx = 0;
  for (auto c : v) idx = idx * p + c;
  return idx;
}

GFVector vector_from_index(std::uint64_t p, std::size_t n, std::uint64_t index) {
  GFVector v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = index % p;
    index /= p;
  }
  return v;
}

std::vector<GFVector> regular_basis(const GFMatrix& a, const Limits& limits) {
  if (!is_invertible(a)) throw InvalidInput("regular_basis requires an invertible matrix");
  std::uint64_t p = a.modulus();
  std::size_t n = a.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > limits.max_vector_enumeration)
      throw BoundExceeded("regular_basis enumeration bound", limits.max_vector_enumeration, total);
  }

  // Odometer over vectors in index order; the image is updated by columns, so no per-vector product.
  std::vector<std::uint64_t> image(total);
  std::vector<Residue> digit(n, 0), cur(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    image[idx] = vector_index(p, cur);
    for (std::size_t j = n; j-- > 0;) {
      for (std::size_t i = 0; i < n; ++i) cur[i] = fadd(cur[i], a(i, j), p);
      if (++digit[j] < p) break;
      digit[j] = 0;
    }
  }

  std::vector<std::uint64_t> length(total, 0);
  std::uint64_t order = 1;
  std::vector<std::uint64_t> orbit;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (length[start] != 0) continue;
    orbit.clear();
    std::uint64_t cur = start;
    do {
      orbit.push_back(cur);
      cur = image[cur];
    } while (cur != start);
    for (auto x : orbit) length[x] = orbit.size();
    order = lcm(order, orbit.size());
  }

  std::vector<GFVector> basis;
  Dense echelon(p, n, n);  // rows kept in reduced form on `pivots`
  std::vector<std::size_t> pivots;
  for (std::uint64_t idx = 0; idx < total && basis.size() < n; ++idx) {
    if (length[idx] != order) continue;
    GFVector v = vector_from_index(p, n, idx);
    GFVector r = v;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Residue f = r[pivots[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] = fsub(r[j], fmul(f, echelon.at(k, j), p), p);
    }
    std::size_t piv = 0;
    while (piv < n && r[piv] == 0) ++piv;
    if (piv == n) continue;
    Residue iv = finv(r[piv], p);
    std::size_t row = pivots.size();
    for (std::size_t j = 0; j < n; ++j) echelon.at(row, j) = fmul(r[j], iv, p);
    pivots.push_back(piv);
    basis.push_back(std::move(v));
  }
  if (basis.size() != n) throw std::logic_error("regular vectors do not span the space");
  return basis;
}

}  // namespace rcclab
