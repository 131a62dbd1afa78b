#include "endotriv/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "endotriv/group.hpp"

namespace endotriv {

namespace {

BigMatrix identity_matrix(std::size_t n) {
  BigMatrix I(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw MathError("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  if (m == 0) return a;
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

BigInt big_mod(const BigInt& a, std::int64_t m) {
  if (m == 0) return a;
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("coefficient overflow in relation reduction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("coefficient overflow in relation reduction");
  return r;
}


// Integer row echelon form built one row at a time; keeps the row lattice
// and never holds more rows than columns.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : pivot_(width) {}

  void insert(std::vector<BigInt> v) {
    for (std::size_t c = 0; c < pivot_.size(); ++c) {
      if (v[c] == 0) continue;
      auto& p = pivot_[c];
      if (p.empty()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        p = std::move(v);
        return;
      }
      if (v[c] % p[c] == 0) {
        BigInt q = v[c] / p[c];
        for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * p[j];
        continue;
      }
      // gcd step: [a b; -y/g x/g] is unimodular.
      BigInt x = p[c], y = v[c], a = 1, b = 0, a1 = 0, b1 = 1;
      while (y != 0) {
        BigInt q = x / y;
        BigInt t = x - q * y;
        x = y;
        y = t;
        t = a - q * a1;
        a = a1;
        a1 = t;
        t = b - q * b1;
        b = b1;
        b1 = t;
      }
      const BigInt g = x;
      const BigInt pv = p[c] / g, vv = v[c] / g;
      std::vector<BigInt> np(v.size()), nv(v.size());
      for (std::size_t j = c; j < v.size(); ++j) {
        np[j] = a * p[j] + b * v[j];
        nv[j] = pv * v[j] - vv * p[j];
      }
      if (np[c] < 0)
        for (auto& e : np) e = -e;
      p = std::move(np);
      v = std::move(nv);
    }
  }

  BigMatrix rows() const {
    BigMatrix out;
    for (const auto& p : pivot_)
      if (!p.empty()) out.push_back(p);
    return out;
  }

 private:
  std::vector<std::vector<BigInt>> pivot_;
};

}  // namespace

BigMatrix to_big(const IntMatrix& M) {
  BigMatrix B(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) B[i].assign(M[i].begin(), M[i].end());
  return B;
}

// ------------------------------------------------------------------ SNF

SmithForm smith_normal_form(const BigMatrix& M) {
  const std::size_t m = M.size();
  const std::size_t n = m ? M[0].size() : 0;
  SmithForm s;
  s.D = M;
  s.U = identity_matrix(m);
  s.V = identity_matrix(n);
  s.V_inv = identity_matrix(n);
  auto& A = s.D;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(A[a], A[b]);
    std::swap(s.U[a], s.U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : s.V) std::swap(row[a], row[b]);
    std::swap(s.V_inv[a], s.V_inv[b]);
  };
  // row_i += q * row_t
  auto add_row = [&](std::size_t i, std::size_t t, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j)
      if (A[t][j] != 0) A[i][j] += q * A[t][j];
    for (std::size_t j = 0; j < m; ++j)
      if (s.U[t][j] != 0) s.U[i][j] += q * s.U[t][j];
  };
  // col_j += q * col_t
  auto add_col = [&](std::size_t j, std::size_t t, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m; ++i)
      if (A[i][t] != 0) A[i][j] += q * A[i][t];
    for (std::size_t i = 0; i < n; ++i)
      if (s.V[i][t] != 0) s.V[i][j] += q * s.V[i][t];
    // V_inv <- E^-1 V_inv where E adds q * col_t to col_j: row_t -= q * row_j.
    for (std::size_t k = 0; k < n; ++k)
      if (s.V_inv[j][k] != 0) s.V_inv[t][k] -= q * s.V_inv[j][k];
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot of minimal absolute value in the remaining block.
    std::size_t pi = m, pj = n;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A[i][j] != 0) {
          BigInt a = abs(A[i][j]);
          if (pi == m || a < best) {
            best = a;
            pi = i;
            pj = j;
            if (best == 1) goto found;
          }
        }
  found:
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        BigInt q = A[i][t] / A[t][t];
        add_row(i, t, -q);
        if (A[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        BigInt q = A[t][j] / A[t][t];
        add_col(j, t, -q);
        if (A[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // Move the smallest leftover in row/column t onto the diagonal.
        std::size_t bi = t, bj = t;
        BigInt b = abs(A[t][t]);
        for (std::size_t i = t + 1; i < m; ++i)
          if (A[i][t] != 0 && abs(A[i][t]) < b) {
            b = abs(A[i][t]);
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[t][j] != 0 && abs(A[t][j]) < b) {
            b = abs(A[t][j]);
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Row and column clear; enforce divisibility of the remaining block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(t, bad, 1);
    }
    if (A[t][t] < 0) {
      for (auto& x : A[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
    ++t;
  }
  s.rank = t;
  s.diagonal.resize(std::min(m, n));
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) s.diagonal[i] = A[i][i];
  return s;
}

BigMatrix left_kernel(const BigMatrix& M, std::size_t rows) {
  if (rows == 0) return {};
  if (M.empty() || M[0].empty()) return identity_matrix(rows);
  SmithForm s = smith_normal_form(M);
  BigMatrix out;
  for (std::size_t i = s.rank; i < rows; ++i) out.push_back(s.U[i]);
  return out;
}

// -------------------------------------------------------------- AbGroup

AbGroup::AbGroup(std::vector<std::int64_t> torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw MathError("invariant factors must be at least 2");
    if (i && torsion_[i] % torsion_[i - 1] != 0) throw MathError("invariant factors must form a divisibility chain");
  }
}

AbGroup AbGroup::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
  IntMatrix rel;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    IntVec r(orders.size(), 0);
    r[i] = orders[i];
    rel.push_back(r);
  }
  return present(orders.size(), rel).group;
}

std::uint64_t AbGroup::order() const {
  if (free_rank_) throw MathError("infinite group has no finite order");
  std::uint64_t o = 1;
  for (auto d : torsion_) {
    if (o > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d))
      throw MathError("group order overflows");
    o *= static_cast<std::uint64_t>(d);
  }
  return o;
}

std::int64_t AbGroup::exponent() const {
  if (free_rank_) throw MathError("infinite group has no exponent");
  return torsion_.empty() ? 1 : torsion_.back();
}

IntVec AbGroup::reduce(IntVec x) const {
  for (std::size_t i = 0; i < x.size() && i < torsion_.size(); ++i) x[i] = mod_floor(x[i], torsion_[i]);
  return x;
}

std::string AbGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank_) os << (first ? "" : " + ") << "Z^" << free_rank_;
  return os.str();
}

// --------------------------------------------------------------- maps

AbGroupMap AbGroupMap::zero(const AbGroup& s, const AbGroup& t) {
  return AbGroupMap{s, t, IntMatrix(s.rank(), IntVec(t.rank(), 0))};
}

IntVec AbGroupMap::apply(const IntVec& x) const {
  IntVec y(target.rank(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      // Reduce as we go so the products stay small.
      std::int64_t d = target.modulus(j);
      std::int64_t term = checked_mul(x[i], matrix[i][j]);
      y[j] = d ? mod_floor(checked_add(y[j], mod_floor(term, d)), d) : checked_add(y[j], term);
    }
  }
  return y;
}

AbGroupMap AbGroupMap::then(const AbGroupMap& next) const {
  AbGroupMap r{source, next.target, {}};
  for (const auto& row : matrix) r.matrix.push_back(next.apply(row));
  return r;
}

bool AbGroupMap::is_zero() const {
  for (const auto& row : matrix)
    for (auto v : target.reduce(row))
      if (v != 0) return false;
  return true;
}

// --------------------------------------------------------- presentations

Presented present(std::size_t ngens, const BigMatrix& relations) {
  Presented out;
  BigMatrix R = relations;
  for (auto& r : R)
    if (r.size() != ngens) throw MathError("relation width does not match generator count");
  if (R.size() > ngens) {
    RowEchelon e(ngens);
    for (auto& r : R) e.insert(std::move(r));
    R = e.rows();
  }
  if (R.empty()) R.push_back(std::vector<BigInt>(ngens, 0));
  SmithForm s = ngens ? smith_normal_form(R) : SmithForm{};
  std::vector<std::int64_t> torsion;
  std::vector<std::size_t> cols;
  std::vector<std::int64_t> mods;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.diagonal[i] == 1) continue;
    torsion.push_back(to_i64(s.diagonal[i]));
    cols.push_back(i);
    mods.push_back(torsion.back());
  }
  for (std::size_t i = s.rank; i < ngens; ++i) {
    cols.push_back(i);
    mods.push_back(0);
  }
  out.group = AbGroup(torsion, ngens - s.rank);
  out.gen_images.assign(ngens, IntVec(cols.size(), 0));
  for (std::size_t j = 0; j < ngens; ++j)
    for (std::size_t k = 0; k < cols.size(); ++k)
      out.gen_images[j][k] = to_i64(big_mod(s.V[j][cols[k]], mods[k]));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    IntVec w(ngens);
    for (std::size_t j = 0; j < ngens; ++j) w[j] = to_i64(s.V_inv[cols[k]][j]);
    out.basis_witness.push_back(std::move(w));
  }
  return out;
}

Presented present(std::size_t ngens, const IntMatrix& relations) { return present(ngens, to_big(relations)); }

// --------------------------------------------------------- p' and duals

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::uint64_t q, std::uint64_t* p, unsigned* m) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % d == 0) {
    r /= d;
    ++e;
  }
  if (r != 1) return false;
  if (p) *p = d;
  if (m) *m = e;
  return true;
}

PPrimePart pprime_part(const AbGroup& a, std::uint64_t p) {
  if (a.free_rank()) throw MathError("p'-part requires a finite group");
  std::vector<std::int64_t> reduced;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < a.torsion().size(); ++i) {
    std::int64_t d = a.torsion()[i];
    while (d % static_cast<std::int64_t>(p) == 0) d /= static_cast<std::int64_t>(p);
    if (d > 1) {
      reduced.push_back(d);
      source.push_back(i);
    }
  }
  PPrimePart out{AbGroup(reduced), {}};
  out.projection = AbGroupMap::zero(a, out.group);
  for (std::size_t k = 0; k < source.size(); ++k) out.projection.matrix[source[k]][k] = 1;
  return out;
}

DualGroup dual_group(const AbGroup& a, std::int64_t n) {
  if (n < 1) throw MathError("character modulus must be positive");
  DualGroup out;
  out.n = n;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::int64_t g = a.modulus(i) ? std::gcd(a.modulus(i), n) : n;
    if (g > 1) {
      orders.push_back(g);
      out.component.push_back(i);
    }
  }
  // gcds of a divisibility chain with n still form a chain.
  out.group = AbGroup(orders);
  return out;
}

AbGroup hom_to_units(const AbGroup& a, std::uint64_t q) {
  if (!prime_power(q)) throw InputError("field size " + std::to_string(q) + " is not a prime power");
  return dual_group(a, static_cast<std::int64_t>(q - 1)).group;
}

AbGroupMap dual_map(const AbGroupMap& f, std::int64_t n) {
  DualGroup da = dual_group(f.source, n);
  DualGroup db = dual_group(f.target, n);
  AbGroupMap out = AbGroupMap::zero(db.group, da.group);
  for (std::size_t j = 0; j < db.component.size(); ++j) {
    std::size_t bj = db.component[j];
    std::int64_t unit_b = n / db.group.torsion()[j];
    for (std::size_t k = 0; k < da.component.size(); ++k) {
      std::size_t ai = da.component[k];
      std::int64_t unit_a = n / da.group.torsion()[k];
      std::int64_t v = mod_floor(checked_mul(mod_floor(f.matrix[ai][bj], n), unit_b), n);
      if (v % unit_a != 0) throw MathError("map is not well defined on the character groups");
      out.matrix[j][k] = v / unit_a;
    }
    // Components of A dropped from the dual must receive value 0.
    for (std::size_t i = 0; i < f.source.rank(); ++i) {
      if (std::find(da.component.begin(), da.component.end(), i) != da.component.end()) continue;
      if (mod_floor(checked_mul(mod_floor(f.matrix[i][bj], n), unit_b), n) != 0)
        throw MathError("map is not well defined on the character groups");
    }
  }
  return out;
}

// ------------------------------------------------------------ diagrams

AbGroupMap Diagram::arrow_map(std::size_t a) const {
  return AbGroupMap{objects[arrows[a].from], objects[arrows[a].to], arrows[a].matrix};
}

Colimit colimit(const Diagram& d) {
  std::vector<std::size_t> offset(d.objects.size() + 1, 0);
  for (std::size_t v = 0; v < d.objects.size(); ++v) offset[v + 1] = offset[v] + d.objects[v].rank();
  const std::size_t N = offset.back();
  BigMatrix rel;
  for (std::size_t v = 0; v < d.objects.size(); ++v)
    for (std::size_t i = 0; i < d.objects[v].rank(); ++i)
      if (d.objects[v].modulus(i)) {
        std::vector<BigInt> r(N, 0);
        r[offset[v] + i] = d.objects[v].modulus(i);
        rel.push_back(std::move(r));
      }
  for (const auto& a : d.arrows)
    for (std::size_t i = 0; i < d.objects[a.from].rank(); ++i) {
      std::vector<BigInt> r(N, 0);
      r[offset[a.from] + i] += 1;
      for (std::size_t j = 0; j < d.objects[a.to].rank(); ++j) r[offset[a.to] + j] -= a.matrix[i][j];
      rel.push_back(std::move(r));
    }
  Presented pr = present(N, rel);
  Colimit out{pr.group, {}};
  for (std::size_t v = 0; v < d.objects.size(); ++v) {
    AbGroupMap inj{d.objects[v], pr.group, {}};
    for (std::size_t i = 0; i < d.objects[v].rank(); ++i) inj.matrix.push_back(pr.gen_images[offset[v] + i]);
    out.injections.push_back(std::move(inj));
  }
  return out;
}

AbGroup limit_kernel(const Diagram& d) {
  std::vector<std::int64_t> src_orders, tgt_orders;
  std::vector<std::size_t> offset(d.objects.size() + 1, 0);
  for (std::size_t v = 0; v < d.objects.size(); ++v) offset[v + 1] = offset[v] + d.objects[v].rank();
  // Source: the vertex sum. Target: one copy of the arrow target per arrow.
  std::vector<std::size_t> toff(d.arrows.size() + 1, 0);
  for (std::size_t a = 0; a < d.arrows.size(); ++a) toff[a + 1] = toff[a] + d.objects[d.arrows[a].to].rank();
  std::vector<std::int64_t> smods, tmods;
  for (const auto& o : d.objects)
    for (std::size_t i = 0; i < o.rank(); ++i) smods.push_back(o.modulus(i));
  for (const auto& a : d.arrows)
    for (std::size_t i = 0; i < d.objects[a.to].rank(); ++i) tmods.push_back(d.objects[a.to].modulus(i));

  IntMatrix M(offset.back(), IntVec(toff.back(), 0));
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& ar = d.arrows[a];
    for (std::size_t i = 0; i < d.objects[ar.from].rank(); ++i)
      for (std::size_t j = 0; j < d.objects[ar.to].rank(); ++j) M[offset[ar.from] + i][toff[a] + j] += ar.matrix[i][j];
    for (std::size_t j = 0; j < d.objects[ar.to].rank(); ++j) M[offset[ar.to] + j][toff[a] + j] -= 1;
  }
  // Wrap as a map between groups presented by the moduli directly.
  BigMatrix W = to_big(M);
  for (std::size_t j = 0; j < tmods.size(); ++j)
    if (tmods[j]) {
      std::vector<BigInt> r(tmods.size(), 0);
      r[j] = tmods[j];
      W.push_back(std::move(r));
    }
  const std::size_t ns = smods.size();
  BigMatrix X;
  if (tmods.empty()) {
    X = identity_matrix(ns);
  } else {
    for (auto& row : left_kernel(W, W.size())) X.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ns));
  }
  // Kernel = <X> / (source relations); present on the rows of X.
  BigMatrix Y = X;
  for (std::size_t i = 0; i < ns; ++i)
    if (smods[i]) {
      std::vector<BigInt> r(ns, 0);
      r[i] = smods[i];
      Y.push_back(std::move(r));
    }
  if (X.empty()) return AbGroup();
  BigMatrix rel;
  for (auto& row : left_kernel(Y, Y.size())) rel.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(X.size()));
  return present(X.size(), rel).group;
}

Diagram dual_diagram(const Diagram& d, std::int64_t n) {
  Diagram out;
  for (const auto& o : d.objects) out.objects.push_back(dual_group(o, n).group);
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    AbGroupMap m = dual_map(d.arrow_map(a), n);
    out.arrows.push_back({d.arrows[a].to, d.arrows[a].from, m.matrix});
  }
  return out;
}

Kernel kernel(const AbGroupMap& f) {
  const std::size_t ns = f.source.rank(), nt = f.target.rank();
  BigMatrix W = to_big(f.matrix);
  for (std::size_t j = 0; j < nt; ++j)
    if (f.target.modulus(j)) {
      std::vector<BigInt> r(nt, 0);
      r[j] = f.target.modulus(j);
      W.push_back(std::move(r));
    }
  BigMatrix X;
  if (nt == 0) {
    X = identity_matrix(ns);
  } else {
    for (auto& row : left_kernel(W, W.size())) X.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ns));
  }
  Kernel out;
  if (X.empty()) return out;
  BigMatrix Y = X;
  for (std::size_t i = 0; i < ns; ++i)
    if (f.source.modulus(i)) {
      std::vector<BigInt> r(ns, 0);
      r[i] = f.source.modulus(i);
      Y.push_back(std::move(r));
    }
  BigMatrix rel;
  for (auto& row : left_kernel(Y, Y.size())) rel.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(X.size()));
  Presented pr = present(X.size(), rel);
  out.group = pr.group;
  for (const auto& w : pr.basis_witness) {
    std::vector<BigInt> acc(ns, 0);
    for (std::size_t c = 0; c < w.size(); ++c)
      if (w[c])
        for (std::size_t i = 0; i < ns; ++i) acc[i] += BigInt(w[c]) * X[c][i];
    IntVec v(ns);
    for (std::size_t i = 0; i < ns; ++i) v[i] = to_i64(big_mod(acc[i], f.source.modulus(i)));
    out.inclusion.push_back(std::move(v));
  }
  return out;
}

AbGroup cokernel(const AbGroupMap& f) {
  const std::size_t nt = f.target.rank();
  IntMatrix rel = f.matrix;
  for (std::size_t j = 0; j < nt; ++j)
    if (f.target.modulus(j)) {
      IntVec r(nt, 0);
      r[j] = f.target.modulus(j);
      rel.push_back(std::move(r));
    }
  return present(nt, rel).group;
}

bool is_surjective(const AbGroupMap& f) { return cokernel(f).is_trivial(); }

std::uint64_t image_order(const AbGroupMap& f) {
  return f.source.order() / kernel(f).group.order();
}

// ------------------------------------------------------- sparse reducer

RelationReducer::RelationReducer(std::size_t nvars) : defs_(nvars), dead_(nvars, 0) {}

namespace {

void normalize(RelationReducer::Row& r) {
  std::sort(r.begin(), r.end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < r.size();) {
    std::uint32_t v = r[i].first;
    std::int64_t c = 0;
    for (; i < r.size() && r[i].first == v; ++i) c = checked_add(c, r[i].second);
    if (c != 0) r[w++] = {v, c};
  }
  r.resize(w);
}

}  // namespace

const RelationReducer::Row& RelationReducer::resolve(std::uint32_t v) {
  // Iterative post-order so long definition chains cannot overflow the stack.
  std::vector<std::uint32_t> stack{v};
  while (!stack.empty()) {
    std::uint32_t x = stack.back();
    bool ready = true;
    for (const auto& [w, c] : defs_[x]) {
      (void)c;
      if (dead_[w] && !std::all_of(defs_[w].begin(), defs_[w].end(), [&](const auto& e) { return !dead_[e.first]; })) {
        stack.push_back(w);
        ready = false;
      }
    }
    if (!ready) continue;
    stack.pop_back();
    Row out;
    for (const auto& [w, c] : defs_[x]) {
      if (!dead_[w]) {
        out.emplace_back(w, c);
        continue;
      }
      for (const auto& [u, cu] : defs_[w]) out.emplace_back(u, checked_mul(c, cu));
    }
    normalize(out);
    defs_[x] = std::move(out);
  }
  return defs_[v];
}

RelationReducer::Row RelationReducer::resolve_row(const Row& row) {
  Row out;
  for (const auto& [v, c] : row) {
    if (v >= defs_.size()) throw MathError("relation references unknown variable");
    if (!dead_[v]) {
      out.emplace_back(v, c);
      continue;
    }
    for (const auto& [u, cu] : resolve(v)) out.emplace_back(u, checked_mul(c, cu));
  }
  normalize(out);
  return out;
}

void RelationReducer::add(Row row, std::uint32_t preferred) {
  Row r = resolve_row(row);
  if (r.empty()) return;
  std::size_t pivot = r.size();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].first == preferred && (r[i].second == 1 || r[i].second == -1)) pivot = i;
  if (pivot == r.size())
    for (std::size_t i = r.size(); i-- > 0;)
      if (r[i].second == 1 || r[i].second == -1) {
        pivot = i;
        break;
      }
  if (pivot == r.size()) {
    residual_.push_back(std::move(r));
    return;
  }
  const auto [v, c] = r[pivot];
  Row def;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (i != pivot) def.emplace_back(r[i].first, c == 1 ? -r[i].second : r[i].second);
  defs_[v] = std::move(def);
  dead_[v] = 1;
}

std::vector<std::uint32_t> RelationReducer::live() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < dead_.size(); ++v)
    if (!dead_[v]) out.push_back(v);
  return out;
}

Presented RelationReducer::finish() {
  auto L = live();
  std::vector<std::uint32_t> pos(defs_.size(), kAny);
  for (std::uint32_t k = 0; k < L.size(); ++k) pos[L[k]] = k;
  RowEchelon echelon(L.size());
  for (const auto& row : residual_) {
    Row r = resolve_row(row);
    if (r.empty()) continue;
    std::vector<BigInt> dense(L.size(), 0);
    for (const auto& [v, c] : r) dense[pos[v]] = c;
    echelon.insert(std::move(dense));
  }
  Presented core = present(L.size(), echelon.rows());
  Presented out;
  out.group = core.group;
  out.gen_images.assign(defs_.size(), core.group.zero());
  for (std::uint32_t v = 0; v < defs_.size(); ++v) {
    if (!dead_[v]) {
      out.gen_images[v] = core.gen_images[pos[v]];
      continue;
    }
    IntVec acc = core.group.zero();
    for (const auto& [u, c] : resolve(v))
      for (std::size_t k = 0; k < acc.size(); ++k) {
        std::int64_t d = core.group.modulus(k);
        std::int64_t term = checked_mul(c, core.gen_images[pos[u]][k]);
        acc[k] = d ? mod_floor(checked_add(acc[k], mod_floor(term, d)), d) : checked_add(acc[k], term);
      }
    out.gen_images[v] = std::move(acc);
  }
  for (const auto& w : core.basis_witness) {
    IntVec full(defs_.size(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) full[L[k]] = w[k];
    out.basis_witness.push_back(std::move(full));
  }
  return out;
}

}  // namespace endotriv
