#include "endotriv/steinberg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <omp.h>

namespace endotriv {

// ------------------------------------------------------------------ ranks

namespace {

template <bool Parallel>
std::size_t rank_impl(const FiniteField& f, FqMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const auto inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    auto eliminate = [&](std::size_t i) {
      const auto a = m.at(i, c);
      if (a == 0) return;
      const auto na = f.neg(a);
      for (std::size_t j = c; j < m.cols; ++j) {
        const auto v = m.at(r, j);
        if (v) m.at(i, j) = f.add(m.at(i, j), f.mul(na, v));
      }
    };
    const std::size_t below = m.rows - r - 1;
    if constexpr (Parallel) {
      if (below * (m.cols - c) >= 4096) {
#pragma omp parallel for schedule(static)
        for (std::size_t i = r + 1; i < m.rows; ++i) eliminate(i);
      } else {
        for (std::size_t i = r + 1; i < m.rows; ++i) eliminate(i);
      }
    } else {
      for (std::size_t i = r + 1; i < m.rows; ++i) eliminate(i);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const FiniteField& f, FqMatrix m) {
  if (omp_get_max_threads() == 1) return rank_impl<false>(f, std::move(m));
  return rank_impl<true>(f, std::move(m));
}
std::size_t rank_serial(const FiniteField& f, FqMatrix m) { return rank_impl<false>(f, std::move(m)); }

FqMatrix multiply(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols != b.rows) throw MathError("matrix shapes do not match");
  FqMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto x = a.at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b.at(k, j)) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

bool squares_to_zero(const FiniteField& f, const FqComplex& c) {
  for (std::size_t n = 2; n < c.boundary.size(); ++n) {
    FqMatrix z = multiply(f, c.boundary[n - 1], c.boundary[n]);
    if (std::any_of(z.data.begin(), z.data.end(), [](auto v) { return v != 0; })) return false;
  }
  return true;
}

std::vector<std::size_t> homology_dims(const FiniteField& f, const FqComplex& c) {
  const std::size_t top = c.dims.size();
  std::vector<std::size_t> rk(top + 1, 0);
  for (std::size_t n = 1; n < top; ++n) rk[n] = rank(f, c.boundary[n]);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < top; ++n) out.push_back(c.dims[n] - rk[n] - rk[n + 1]);
  return out;
}

std::int64_t euler_characteristic(const std::vector<std::size_t>& dims) {
  std::int64_t e = 0;
  for (std::size_t n = 0; n < dims.size(); ++n) e += (n % 2 ? -1 : 1) * static_cast<std::int64_t>(dims[n]);
  return e;
}

// ------------------------------------------------------- twisted complex

FqComplex twisted_complex(const OrderComplex& x, const FinCategory& orbit, const H1Result& h, const Character& chi,
                          const FiniteField& f, std::uint64_t seed) {
  const auto& L = orbit.collection().lattice();
  const auto& t = *L.table_ptr();
  const auto& sx = x.complex.simplices;
  const std::size_t nv = x.vertices.size();
  const std::int64_t n1 = static_cast<std::int64_t>(f.q() - 1);

  std::mt19937_64 rng(seed);
  std::vector<Index> conj(x.vertex_to_rep);
  if (seed)
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& ne = L.class_info(x.vertex_class[v]).normalizer.elements();
      conj[v] = t.mul(conj[v], ne[rng() % ne.size()]);
    }

  // Exponent of the unit on each edge a < b.
  std::vector<std::int64_t> edge(sx.size() > 1 ? sx[1].size() : 0);
  for (std::size_t e = 0; e < edge.size(); ++e) {
    const auto a = sx[1][e][0], b = sx[1][e][1];
    const Index g = t.mul(t.inverse(conj[a]), conj[b]);
    edge[e] = chi.exponent(class_of_element(orbit, h, x.vertex_class[a], x.vertex_class[b], g));
  }

  // Gauge: potentials lambda with edge + lambda(a) - lambda(b) = 0 on a
  // spanning forest.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < edge.size(); ++e) {
    adj[sx[1][e][0]].emplace_back(sx[1][e][1], e);
    adj[sx[1][e][1]].emplace_back(sx[1][e][0], e);
  }
  if (seed)
    for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
  std::vector<std::int64_t> lambda(nv, 0);
  std::vector<char> seen(nv, 0);
  std::vector<std::uint32_t> roots(nv);
  for (std::uint32_t v = 0; v < nv; ++v) roots[v] = v;
  if (seed) std::shuffle(roots.begin(), roots.end(), rng);
  for (auto r : roots) {
    if (seen[r]) continue;
    seen[r] = 1;
    std::vector<std::uint32_t> queue{r};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto u = queue[i];
      for (auto [w, e] : adj[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        // edge runs a -> b with a < b
        if (sx[1][e][0] == u)
          lambda[w] = (lambda[u] + edge[e]) % n1;
        else
          lambda[w] = (lambda[u] - edge[e] % n1 + n1) % n1;
        queue.push_back(w);
      }
    }
  }

  FqComplex c;
  for (const auto& s : sx) c.dims.push_back(s.size());
  c.boundary.resize(sx.size());
  for (std::size_t n = 1; n < sx.size(); ++n) {
    FqMatrix d(sx[n - 1].size(), sx[n].size());
    std::vector<std::uint32_t> face;
    for (std::uint32_t s = 0; s < sx[n].size(); ++s) {
      const auto& tuple = sx[n][s];
      for (std::size_t i = 0; i <= n; ++i) {
        face.clear();
        for (std::size_t j = 0; j <= n; ++j)
          if (j != i) face.push_back(tuple[j]);
        const std::uint32_t row = x.simplex_index.at(face);
        std::int64_t k = 0;
        if (i == 0) {
          const std::uint32_t e = x.simplex_index.at(std::vector<std::uint32_t>{tuple[0], tuple[1]});
          k = edge[e] + lambda[tuple[0]] - lambda[tuple[1]];
        }
        FiniteField::Elem u = f.unit(k);
        if (i % 2) u = f.neg(u);
        d.at(row, s) = f.add(d.at(row, s), u);
      }
    }
    c.boundary[n] = std::move(d);
  }
  return c;
}

// --------------------------------------------------------- Euler / Brown

std::int64_t reduced_euler(const ChainClasses& chains) {
  const std::int64_t g = static_cast<std::int64_t>(chains.collection().lattice().ambient().order());
  std::int64_t e = -1;
  for (const auto& c : chains.classes())
    e += (c.length() % 2 ? -1 : 1) * (g / static_cast<std::int64_t>(c.stabilizer.order()));
  return e;
}

bool brown_congruence(const ChainClasses& chains) {
  const std::int64_t s = static_cast<std::int64_t>(chains.collection().lattice().sylow().order());
  return reduced_euler(chains) % s == 0;
}

// ------------------------------------------------------ integral homology

namespace {

// Z^{C_n} / boundary(C_{n+1}).
AbGroup boundary_cokernel(const DeltaComplex& d, std::size_t n) {
  RelationReducer r(d.counts[n]);
  if (n + 1 < d.counts.size())
    for (const auto& faces : d.faces[n + 1]) {
      RelationReducer::Row row;
      for (std::size_t i = 0; i < faces.size(); ++i) row.emplace_back(faces[i], i % 2 ? -1 : 1);
      r.add(std::move(row));
    }
  return r.finish().group;
}

}  // namespace

std::vector<AbGroup> integral_homology(const DeltaComplex& d) {
  std::vector<AbGroup> coker, out;
  for (std::size_t n = 0; n < d.counts.size(); ++n) coker.push_back(boundary_cokernel(d, n));
  for (std::size_t n = 0; n < d.counts.size(); ++n) {
    const std::size_t rank_dn = n == 0 ? 0 : d.counts[n - 1] - coker[n - 1].free_rank();
    out.emplace_back(coker[n].torsion(), coker[n].free_rank() - rank_dn);
  }
  return out;
}

std::vector<AbGroup> reduced_homology(const DeltaComplex& d) {
  auto h = integral_homology(d);
  if (!h.empty()) h[0] = AbGroup(h[0].torsion(), h[0].free_rank() - 1);
  return h;
}

AbGroup complex_h1(const DeltaComplex& d) {
  auto h = integral_homology(d);
  return h.size() > 1 ? h[1] : AbGroup();
}

// --------------------------------------------------------- presentations

Presentation edge_path_presentation(const DeltaComplex& d) {
  Presentation p;
  if (d.counts.empty() || d.counts[0] == 0) return p;
  const std::size_t nv = d.counts[0];
  const std::size_t ne = d.counts.size() > 1 ? d.counts[1] : 0;
  // edge e runs from faces[1][e][1] to faces[1][e][0]
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < ne; ++e) {
    adj[d.faces[1][e][1]].emplace_back(d.faces[1][e][0], e);
    adj[d.faces[1][e][0]].emplace_back(d.faces[1][e][1], e);
  }
  std::vector<char> seen(nv, 0), tree(ne, 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto [w, e] : adj[queue[i]])
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        queue.push_back(w);
      }
  std::vector<int> letter(ne, 0);
  for (std::size_t e = 0; e < ne; ++e)
    if (!tree[e] && seen[d.faces[1][e][0]]) letter[e] = static_cast<int>(++p.generators);
  if (d.counts.size() > 2)
    for (const auto& f : d.faces[2]) {
      // boundary path: d2 (v0->v1), d0 (v1->v2), then d1 backwards (v2->v0)
      std::vector<int> w;
      for (int l : {letter[f[2]], letter[f[0]], -letter[f[1]]})
        if (l) w.push_back(l);
      p.relators.push_back(std::move(w));
    }
  return p;
}

namespace {

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  // cyclic reduction
  std::size_t a = 0, b = out.size();
  while (b - a >= 2 && out[a] == -out[b - 1]) {
    ++a;
    --b;
  }
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(a), out.begin() + static_cast<std::ptrdiff_t>(b));
}

}  // namespace

Presentation simplify(Presentation p, std::size_t budget) {
  std::vector<char> alive(p.generators + 1, 1);
  auto& rels = p.relators;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& r : rels) free_reduce(r);
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const auto& r) { return r.empty(); }), rels.end());
    std::sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    for (std::size_t k = 0; k < rels.size() && !changed; ++k) {
      const auto& r = rels[k];
      std::map<int, int> count;
      for (int l : r) ++count[std::abs(l)];
      int gen = 0;
      for (auto [g, c] : count)
        if (c == 1) {
          gen = g;
          break;
        }
      if (!gen) continue;
      // r = u x^e v  =>  x^e = u^-1 v^-1  =>  x = (v u)^-e
      std::size_t pos = 0;
      while (std::abs(r[pos]) != gen) ++pos;
      const int e = r[pos] > 0 ? 1 : -1;
      std::vector<int> vu(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
      vu.insert(vu.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
      std::vector<int> img;  // image of x
      if (e == 1) {
        for (auto it = vu.rbegin(); it != vu.rend(); ++it) img.push_back(-*it);
      } else {
        img = vu;
      }
      std::vector<int> inv_img;
      for (auto it = img.rbegin(); it != img.rend(); ++it) inv_img.push_back(-*it);
      std::vector<std::vector<int>> next;
      std::size_t total = 0;
      for (std::size_t j = 0; j < rels.size(); ++j) {
        if (j == k) continue;
        std::vector<int> w;
        for (int l : rels[j]) {
          if (l == gen)
            w.insert(w.end(), img.begin(), img.end());
          else if (l == -gen)
            w.insert(w.end(), inv_img.begin(), inv_img.end());
          else
            w.push_back(l);
        }
        total += w.size();
        next.push_back(std::move(w));
      }
      if (total > budget) continue;
      rels = std::move(next);
      alive[static_cast<std::size_t>(gen)] = 0;
      changed = true;
    }
  }
  // renumber surviving generators
  std::vector<int> to(alive.size(), 0);
  int n = 0;
  for (std::size_t g = 1; g < alive.size(); ++g)
    if (alive[g]) to[g] = ++n;
  for (auto& r : rels)
    for (auto& l : r) l = l > 0 ? to[static_cast<std::size_t>(l)] : -to[static_cast<std::size_t>(-l)];
  p.generators = static_cast<std::size_t>(n);
  return p;
}

AbGroup abelianize(const Presentation& p) {
  RelationReducer r(p.generators);
  for (const auto& w : p.relators) {
    RelationReducer::Row row;
    for (int l : w) row.emplace_back(static_cast<std::uint32_t>(std::abs(l) - 1), l > 0 ? 1 : -1);
    r.add(std::move(row));
  }
  return r.finish().group;
}

// -------------------------------------------------------------------- Webb

bool closed_under_radical_overgroups(const Collection& c) {
  const auto& L = c.lattice();
  for (std::size_t m = 0; m < L.size(); ++m) {
    if (!c.has_member(m)) continue;
    for (auto q : L.member(m).above)
      if (L.class_info(L.member(q).cls).radical && !c.has_member(q)) return false;
  }
  return true;
}

WebbReport webb_check(const ChainClasses& chains) {
  WebbReport w;
  w.closure_ok = closed_under_radical_overgroups(chains.collection());
  if (!w.closure_ok) throw MathError("collection is not closed under radical p-overgroups");
  const DeltaComplex d = orbit_space(chains);
  w.reduced_homology = reduced_homology(d);
  w.acyclic = std::all_of(w.reduced_homology.begin(), w.reduced_homology.end(),
                          [](const AbGroup& a) { return a.is_trivial(); });
  w.presentation = simplify(edge_path_presentation(d));
  w.edge_path_h1_trivial = abelianize(w.presentation).is_trivial();
  w.simply_connected_proven = w.presentation.is_trivial();
  return w;
}

}  // namespace endotriv
