#pragma once

// Slow, independent reference implementations used only by the tests.
// Nothing here calls into the library's algorithms beyond Perm arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "endotriv/perm.hpp"

namespace oracle {

using endotriv::Perm;
using PermSet = std::set<Perm>;

inline Perm identity(std::size_t n) { return Perm(n); }

/// Closure of a generating set by breadth-first multiplication.
inline PermSet closure(std::size_t degree, const std::vector<Perm>& gens) {
  PermSet seen{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

inline bool normalizes(const Perm& g, const PermSet& h) {
  for (const auto& x : h)
    if (!h.count(x.conjugate_by(g))) return false;
  return true;
}

inline PermSet normalizer(const PermSet& g, const PermSet& h) {
  PermSet out;
  for (const auto& x : g)
    if (normalizes(x, h)) out.insert(x);
  return out;
}

inline PermSet centralizer(const PermSet& g, const PermSet& h) {
  PermSet out;
  for (const auto& x : g) {
    bool ok = true;
    for (const auto& y : h) ok = ok && x * y == y * x;
    if (ok) out.insert(x);
  }
  return out;
}

inline PermSet derived(std::size_t degree, const PermSet& g) {
  std::vector<Perm> comms;
  PermSet seen;
  for (const auto& x : g)
    for (const auto& y : g) {
      Perm c = x.inverse() * y.inverse() * x * y;
      if (seen.insert(c).second) comms.push_back(c);
    }
  return closure(degree, comms);
}

/// Numbers of nontrivial subgroups of a p-group by increasing order, found
/// by closing every pair and triple of elements. Valid for groups generated by three elements.
inline std::vector<std::size_t> p_subgroup_counts(std::size_t degree, const PermSet& s) {
  std::set<PermSet> subs;
  std::vector<Perm> el(s.begin(), s.end());
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) {
      PermSet two = closure(degree, {el[i], el[j]});
      subs.insert(two);
      for (std::size_t k = j; k < el.size(); ++k)
        if (!two.count(el[k])) subs.insert(closure(degree, {el[i], el[j], el[k]}));
    }
  std::vector<std::size_t> by_order;
  std::map<std::size_t, std::size_t> counts;
  for (const auto& h : subs)
    if (h.size() > 1) ++counts[h.size()];
  for (const auto& kv : counts) by_order.push_back(kv.second);
  return by_order;
}

// ---------------------------------------------------------------- integers

inline std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss fraction-free elimination; exact for the small matrices used.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Invariant factors (>= 2) and free rank of Z^cols / rowspace(m), from
/// the gcds of k x k minors.
inline std::pair<std::vector<std::int64_t>, std::size_t> invariant_factors(
    const std::vector<std::vector<std::int64_t>>& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::int64_t> dk{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<std::int64_t>> minor(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, det(minor));
      }
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<std::int64_t> factors;
  for (std::size_t i = 1; i < dk.size(); ++i)
    if (dk[i] / dk[i - 1] > 1) factors.push_back(dk[i] / dk[i - 1]);
  return {factors, cols - (dk.size() - 1)};
}

/// Rank over the prime field F_p.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto inv = [p](std::int64_t a) {
    std::int64_t x = 1;
    for (std::int64_t e = p - 2, b = a; e; e >>= 1, b = b * b % p)
      if (e & 1) x = x * b % p;
    return x;
  };
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && ((m[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::int64_t iv = inv(((m[r][c] % p) + p) % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = ((m[i][c] % p) + p) % p * iv % p;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
