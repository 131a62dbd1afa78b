#include "endotriv/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "endotriv/kernels.hpp"

namespace endotriv {

namespace {

// Epoch-stamped membership scratch, one per thread.
struct Scratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  void begin(std::size_t n) {
    if (stamp.size() < n) stamp.assign(n, 0);
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
  bool test_and_set(Index x) {
    if (stamp[x] == epoch) return false;
    stamp[x] = epoch;
    return true;
  }
};

thread_local Scratch scratch;

std::vector<Index> closure(const ElementTable& t, const std::vector<Index>& gens) {
  std::vector<Index> out{ElementTable::identity()};
  scratch.begin(t.size());
  scratch.test_and_set(ElementTable::identity());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Index g : gens) {
      Index y = t.mul(out[k], g);
      if (scratch.test_and_set(y)) out.push_back(y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool sorted_contains(const std::vector<Index>& v, Index x) { return std::binary_search(v.begin(), v.end(), x); }

}  // namespace

// ------------------------------------------------------------- Subgroup

void Subgroup::finalize() {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ elems_.size();
  for (Index x : elems_) {
    h ^= x;
    h *= 0x100000001b3ULL;
    h ^= h >> 31;
  }
  key_ = h;
}

Subgroup Subgroup::generate(TablePtr table, std::vector<Index> gens) {
  Subgroup s;
  std::erase(gens, ElementTable::identity());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  s.elems_ = closure(*table, gens);
  s.gens_ = std::move(gens);
  s.table_ = std::move(table);
  s.finalize();
  return s;
}

Subgroup Subgroup::whole(TablePtr table) {
  Subgroup s;
  s.elems_.resize(table->size());
  std::iota(s.elems_.begin(), s.elems_.end(), Index{0});
  for (const auto& g : table->group().generators())
    if (!g.is_identity()) s.gens_.push_back(table->index_of(g));
  std::sort(s.gens_.begin(), s.gens_.end());
  s.gens_.erase(std::unique(s.gens_.begin(), s.gens_.end()), s.gens_.end());
  s.table_ = std::move(table);
  s.finalize();
  return s;
}

Subgroup Subgroup::trivial(TablePtr table) { return generate(std::move(table), {}); }

Subgroup Subgroup::from_elements(TablePtr table, std::vector<Index> elements) {
  Subgroup s;
  s.table_ = table;
  std::sort(elements.begin(), elements.end());
  // Greedy generators: elements of largest order first.
  std::vector<Index> order(elements.begin(), elements.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return table->element_order(a) > table->element_order(b); });
  std::vector<Index> current{ElementTable::identity()};
  for (Index x : order) {
    if (current.size() == elements.size()) break;
    if (sorted_contains(current, x)) continue;
    s.gens_.push_back(x);
    current = closure(*table, s.gens_);
  }
  if (current.size() != elements.size()) throw MathError("element set is not a subgroup");
  std::sort(s.gens_.begin(), s.gens_.end());
  s.elems_ = std::move(elements);
  s.finalize();
  return s;
}

std::vector<Perm> Subgroup::generator_perms() const {
  std::vector<Perm> out;
  for (Index g : gens_) out.push_back(table_->perm(g));
  return out;
}

bool Subgroup::contains(Index x) const { return sorted_contains(elems_, x); }

bool Subgroup::contains(const Subgroup& h) const {
  if (h.order() > order() || order() % h.order() != 0) return false;
  return std::all_of(h.gens_.begin(), h.gens_.end(), [&](Index g) { return contains(g); });
}

// ----------------------------------------------------------- operations

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

Subgroup adjoin(const Subgroup& a, const std::vector<Index>& extra) {
  std::vector<Index> gens = a.generators();
  bool grew = false;
  for (Index x : extra)
    if (!a.contains(x)) {
      gens.push_back(x);
      grew = true;
    }
  if (!grew) return a;
  return Subgroup::generate(a.table_ptr(), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) { return adjoin(a, b.generators()); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  std::vector<Index> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup::from_elements(a.table_ptr(), std::move(out));
}

Subgroup conjugate(const Subgroup& h, Index g) {
  const auto& t = h.table();
  std::vector<Index> gens;
  for (Index x : h.generators()) gens.push_back(t.conj(x, g));
  return Subgroup::generate(h.table_ptr(), std::move(gens));
}

Subgroup normalizer_in(const Subgroup& k, const Subgroup& h) {
  const auto& t = k.table();
  const auto& ke = k.elements();
  const auto& hg = h.generators();
  auto sel = kernels::select(ke.size(), [&](Index i) {
    for (Index x : hg)
      if (!h.contains(t.conj(x, ke[i]))) return false;
    return true;
  });
  if (sel.size() == ke.size()) return k;
  std::vector<Index> elems;
  elems.reserve(sel.size());
  for (Index i : sel) elems.push_back(ke[i]);
  return Subgroup::from_elements(k.table_ptr(), std::move(elems));
}

Subgroup centralizer_in(const Subgroup& k, const Subgroup& h) {
  const auto& t = k.table();
  const auto& ke = k.elements();
  const auto& hg = h.generators();
  auto sel = kernels::select(ke.size(), [&](Index i) {
    for (Index x : hg)
      if (t.conj(x, ke[i]) != x) return false;
    return true;
  });
  if (sel.size() == ke.size()) return k;
  std::vector<Index> elems;
  elems.reserve(sel.size());
  for (Index i : sel) elems.push_back(ke[i]);
  return Subgroup::from_elements(k.table_ptr(), std::move(elems));
}

Subgroup chain_normalizer(const Subgroup& k, const std::vector<Subgroup>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!(chain[i].contains(chain[i - 1]) && chain[i].order() > chain[i - 1].order()))
      throw InputError("chain is not strictly increasing");
  if (chain.empty()) return k;
  const auto& t = k.table();
  const auto& ke = k.elements();
  auto sel = kernels::select(ke.size(), [&](Index i) {
    for (const auto& h : chain)
      for (Index x : h.generators())
        if (!h.contains(t.conj(x, ke[i]))) return false;
    return true;
  });
  std::vector<Index> elems;
  for (Index i : sel) elems.push_back(ke[i]);
  return Subgroup::from_elements(k.table_ptr(), std::move(elems));
}

Subgroup normal_closure(const Subgroup& k, const std::vector<Index>& seed) {
  const auto& t = k.table();
  Subgroup h = Subgroup::generate(k.table_ptr(), seed);
  for (;;) {
    Index missing = kNoIndex;
    for (Index x : h.generators()) {
      for (Index g : k.generators()) {
        Index c = t.conj(x, g);
        if (!h.contains(c)) {
          missing = c;
          break;
        }
      }
      if (missing != kNoIndex) break;
    }
    if (missing == kNoIndex) return h;
    h = adjoin(h, {missing});
  }
}

Subgroup derived_subgroup(const Subgroup& k) {
  const auto& t = k.table();
  std::vector<Index> comms;
  const auto& g = k.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Index a = g[i], b = g[j];
      Index c = t.mul(t.mul(t.inverse(a), t.inverse(b)), t.mul(a, b));
      if (c != ElementTable::identity()) comms.push_back(c);
    }
  return normal_closure(k, comms);
}

Subgroup center(const Subgroup& k) { return centralizer_in(k, k); }

Subgroup sylow_subgroup(const Subgroup& k, std::uint64_t p) {
  const std::uint64_t target = p_part(k.order(), p);
  if (target == 1) throw MathError("p does not divide |G|");
  const auto& t = k.table();
  const auto& ke = k.elements();
  Subgroup P = Subgroup::trivial(k.table_ptr());
  while (P.order() < target) {
    Index pos = kernels::find_first(ke.size(), [&](Index i) {
      Index x = ke[i];
      if (P.contains(x)) return false;
      if (!P.contains(t.pow(x, static_cast<long long>(p)))) return false;
      for (Index g : P.generators())
        if (!P.contains(t.conj(g, x))) return false;
      return true;
    });
    if (pos == kNoIndex) throw MathError("Sylow search failed");
    P = adjoin(P, {ke[pos]});
  }
  return P;
}

Subgroup p_core(const Subgroup& k, std::uint64_t p) {
  if (p_part(k.order(), p) == 1) return Subgroup::trivial(k.table_ptr());
  Subgroup c = sylow_subgroup(k, p);
  for (bool changed = true; changed;) {
    changed = false;
    for (Index g : k.generators()) {
      Subgroup d = intersect(c, conjugate(c, g));
      if (d.order() < c.order()) {
        c = d;
        changed = true;
      }
    }
  }
  return c;
}

Subgroup a_pprime(const Subgroup& k, std::uint64_t p) {
  const auto& t = k.table();
  Subgroup h = derived_subgroup(k);
  for (Index x : k.elements()) {
    std::uint32_t o = t.element_order(x);
    if (o == 1 || p_part(o, p) != o) continue;
    if (!h.contains(x)) h = adjoin(h, {x});
  }
  return h;
}

Subgroup omega1(const Subgroup& a, std::uint64_t p) {
  const auto& t = a.table();
  std::vector<Index> elems;
  for (Index x : a.elements())
    if (t.element_order(x) == 1 || t.element_order(x) == p) elems.push_back(x);
  return Subgroup::from_elements(a.table_ptr(), std::move(elems));
}

bool is_abelian(const Subgroup& h) {
  const auto& t = h.table();
  const auto& g = h.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (t.mul(g[i], g[j]) != t.mul(g[j], g[i])) return false;
  return true;
}

bool is_p_group(const Subgroup& h, std::uint64_t p) { return p_part(h.order(), p) == h.order(); }

bool is_elementary_abelian(const Subgroup& h, std::uint64_t p) {
  if (h.is_trivial() || !is_p_group(h, p) || !is_abelian(h)) return false;
  for (Index g : h.generators())
    if (h.table().element_order(g) != p) return false;
  return true;
}

bool is_normal_in(const Subgroup& n, const Subgroup& k) {
  if (!k.contains(n)) return false;
  for (Index x : n.generators())
    for (Index g : k.generators())
      if (!n.contains(n.table().conj(x, g))) return false;
  return true;
}

// ------------------------------------------------------ abelian quotient

AbelianQuotient::AbelianQuotient(const Subgroup& k, const Subgroup& n) : k_(k), n_(n) {
  const auto& t = k.table();
  const auto& ke = k.elements();
  auto pos_of = [&](Index x) -> std::size_t {
    auto it = std::lower_bound(ke.begin(), ke.end(), x);
    if (it == ke.end() || *it != x) throw MathError("element outside the quotient's group");
    return static_cast<std::size_t>(it - ke.begin());
  };
  coset_of_.assign(ke.size(), UINT32_MAX);
  std::vector<Index> reps;
  for (std::size_t i = 0; i < ke.size(); ++i) {
    if (coset_of_[i] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(ke[i]);
    for (Index y : n.elements()) coset_of_[pos_of(t.mul(ke[i], y))] = c;
  }
  const std::size_t m = reps.size();
  const auto& gens = k.generators();
  const std::size_t ng = gens.size();

  // Spanning tree of the Cayley graph of K/N; non-tree edges are relations.
  IntMatrix path(m);
  std::vector<char> seen(m, 0);
  std::vector<std::uint32_t> queue{coset_of_[pos_of(ElementTable::identity())]};
  path[queue[0]] = IntVec(ng, 0);
  seen[queue[0]] = 1;
  std::set<IntVec> rels;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t c = queue[qi];
    for (std::size_t j = 0; j < ng; ++j) {
      std::uint32_t c2 = coset_of_[pos_of(t.mul(reps[c], gens[j]))];
      IntVec v = path[c];
      v[j] += 1;
      if (!seen[c2]) {
        seen[c2] = 1;
        path[c2] = v;
        queue.push_back(c2);
      } else {
        for (std::size_t r = 0; r < ng; ++r) v[r] -= path[c2][r];
        if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) rels.insert(v);
      }
    }
  }
  if (queue.size() != m) throw MathError("quotient is not generated by the group's generators");
  Presented pr = present(ng, IntMatrix(rels.begin(), rels.end()));
  group_ = pr.group;
  if (!group_.is_finite()) throw MathError("abelian quotient computation produced an infinite group");
  coset_coords_.assign(m, group_.zero());
  for (std::size_t c = 0; c < m; ++c) {
    IntVec acc = group_.zero();
    for (std::size_t j = 0; j < ng; ++j)
      for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += path[c][j] * pr.gen_images[j][r];
    coset_coords_[c] = group_.reduce(acc);
  }
  witness_.assign(group_.rank(), kNoIndex);
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    IntVec e = group_.zero();
    e[i] = 1;
    e = group_.reduce(e);
    for (std::size_t c = 0; c < m; ++c)
      if (coset_coords_[c] == e) {
        witness_[i] = reps[c];
        break;
      }
    if (witness_[i] == kNoIndex) throw MathError("missing basis witness in abelian quotient");
  }
}

IntVec AbelianQuotient::classify(Index x) const {
  const auto& ke = k_.elements();
  auto it = std::lower_bound(ke.begin(), ke.end(), x);
  if (it == ke.end() || *it != x) throw MathError("element outside the quotient's group");
  return coset_coords_[coset_of_[static_cast<std::size_t>(it - ke.begin())]];
}

AbelianQuotient abelianization_pprime(const Subgroup& k, std::uint64_t p) { return AbelianQuotient(k, a_pprime(k, p)); }

AbelianQuotient abelianization(const Subgroup& k) { return AbelianQuotient(k, derived_subgroup(k)); }

AbGroupMap induced_map(const AbelianQuotient& from, const AbelianQuotient& to, Index t) {
  AbGroupMap m{from.group(), to.group(), {}};
  const auto& tab = from.whole().table();
  for (std::size_t i = 0; i < from.group().rank(); ++i) m.matrix.push_back(to.classify(tab.conj(from.witness(i), t)));
  return m;
}

}  // namespace endotriv
