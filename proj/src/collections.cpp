#include "endotriv/collections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "endotriv/kernels.hpp"

namespace endotriv {

// ------------------------------------------------------------ predicates

bool is_radical(const Subgroup& g, const Subgroup& p_sub, std::uint64_t p) {
  return p_core(normalizer_in(g, p_sub), p) == p_sub;
}

bool is_pcentric(const Subgroup& g, const Subgroup& p_sub, std::uint64_t p) {
  Subgroup c = centralizer_in(g, p_sub);
  return p_part(c.order(), p) == intersect(c, p_sub).order();
}

bool is_centric(const Subgroup& g, const Subgroup& p_sub) {
  Subgroup c = centralizer_in(g, p_sub);
  return c.order() == intersect(c, p_sub).order();
}

bool is_benson(const Subgroup& g, const Subgroup& v, std::uint64_t p) {
  if (!is_elementary_abelian(v, p)) return false;
  Subgroup c = centralizer_in(g, v);
  return omega1(center(c), p) == v;
}

// --------------------------------------------------------------- lattice

namespace {

using Bits = std::vector<std::uint64_t>;

Bits member_bits(const Subgroup& h, const std::vector<Index>& s_elems) {
  Bits b((s_elems.size() + 63) / 64, 0);
  for (Index x : h.elements()) {
    auto pos = static_cast<std::size_t>(std::lower_bound(s_elems.begin(), s_elems.end(), x) - s_elems.begin());
    b[pos / 64] |= std::uint64_t{1} << (pos % 64);
  }
  return b;
}

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Conjugacy invariant of a subgroup of a permutation group: order plus the
// sorted multiset of element cycle types, hashed.
std::uint64_t cycle_signature(const Subgroup& h) {
  const auto& t = h.table();
  std::vector<std::uint64_t> types;
  for (Index x : h.elements()) {
    auto ct = t.perm(x).cycle_type();
    std::uint64_t v = 1469598103934665603ULL;
    for (auto c : ct) v = (v ^ c) * 1099511628211ULL;
    types.push_back(v);
  }
  std::sort(types.begin(), types.end());
  std::uint64_t v = h.order();
  for (auto x : types) v = (v ^ x) * 0x9E3779B97F4A7C15ULL + (v >> 17);
  return v;
}

}  // namespace

SubgroupLattice::SubgroupLattice(TablePtr table, std::uint64_t p, std::size_t budget)
    : table_(std::move(table)), p_(p) {
  g_ = Subgroup::whole(table_);
  s_ = sylow_subgroup(g_, p);
  build_members(budget);
  fuse_classes();
}

std::size_t SubgroupLattice::find(const Subgroup& h) const {
  auto [lo, hi] = by_key_.equal_range(h.key());
  for (auto it = lo; it != hi; ++it)
    if (members_[it->second].group == h) return it->second;
  return npos;
}

void SubgroupLattice::build_members(std::size_t budget) {
  const auto& t = *table_;
  auto add = [&](Subgroup h) -> std::size_t {
    std::size_t f = find(h);
    if (f != npos) return f;
    if (members_.size() >= budget) throw CapExceeded("subgroup lattice exceeds budget of " + std::to_string(budget));
    members_.push_back(LatticeMember{std::move(h), 0, ElementTable::identity(), {}});
    by_key_.emplace(members_.back().group.key(), members_.size() - 1);
    return members_.size() - 1;
  };
  std::vector<std::size_t> level;
  for (Index x : s_.elements())
    if (t.element_order(x) == p_) {
      std::size_t before = members_.size();
      std::size_t id = add(Subgroup::generate(table_, {x}));
      if (id == before) level.push_back(id);
    }
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t id : level) {
      Subgroup h = members_[id].group;
      Subgroup n = normalizer_in(s_, h);
      std::vector<Subgroup> made;
      for (Index x : n.elements()) {
        if (h.contains(x) || !h.contains(t.pow(x, static_cast<long long>(p_)))) continue;
        if (std::any_of(made.begin(), made.end(), [&](const Subgroup& k) { return k.contains(x); })) continue;
        Subgroup k = adjoin(h, {x});
        std::size_t before = members_.size();
        std::size_t kid = add(k);
        if (kid == before) next.push_back(kid);
        made.push_back(std::move(k));
      }
    }
    level = std::move(next);
  }
  if (members_.empty() || members_.back().group.order() != s_.order())
    throw MathError("subgroup lattice does not end at the Sylow subgroup");

  std::vector<Bits> bits;
  for (const auto& m : members_) bits.push_back(member_bits(m.group, s_.elements()));
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const auto oi = members_[i].group.order(), oj = members_[j].group.order();
      if (oj > oi && oj % oi == 0 && bits_subset(bits[i], bits[j]))
        members_[i].above.push_back(static_cast<std::uint32_t>(j));
    }
}

void SubgroupLattice::fuse_classes() {
  const auto& t = *table_;
  const std::size_t n = members_.size();
  // S-conjugacy orbits first.
  std::vector<std::size_t> root(n, npos);
  std::vector<Index> to_root(n, ElementTable::identity());
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (root[i] != npos) continue;
    roots.push_back(i);
    root[i] = i;
    std::vector<std::size_t> queue{i};
    std::vector<Index> word{ElementTable::identity()};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (Index s : s_.generators()) {
        std::size_t j = find(conjugate(members_[queue[q]].group, s));
        if (j == npos) throw MathError("S-conjugate escaped the lattice");
        if (root[j] != npos) continue;
        root[j] = i;
        Index w = t.mul(word[q], s);
        to_root[j] = t.inverse(w);
        queue.push_back(j);
        word.push_back(w);
      }
  }
  // G-fusion of the S-class roots inside buckets of equal signature.
  std::map<std::uint64_t, std::vector<std::size_t>> buckets;  // signature -> class ids
  std::vector<std::size_t> root_class(n, npos);
  std::vector<Index> root_to_rep(n, ElementTable::identity());
  const auto& ge = g_.elements();
  for (std::size_t r : roots) {
    const Subgroup& h = members_[r].group;
    auto& bucket = buckets[cycle_signature(h)];
    for (std::size_t c : bucket) {
      const Subgroup& rep = members_[classes_[c].rep].group;
      Index pos = kernels::find_first(ge.size(), [&](Index i) {
        for (Index x : h.generators())
          if (!rep.contains(t.conj(x, ge[i]))) return false;
        return true;
      });
      if (pos != kNoIndex) {
        root_class[r] = c;
        root_to_rep[r] = ge[pos];
        break;
      }
    }
    if (root_class[r] == npos) {
      root_class[r] = classes_.size();
      bucket.push_back(classes_.size());
      ClassInfo info;
      info.rep = r;
      classes_.push_back(std::move(info));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    members_[i].cls = root_class[root[i]];
    members_[i].to_rep = t.mul(to_root[i], root_to_rep[root[i]]);
  }
  for (auto& info : classes_) {
    const Subgroup& rep = members_[info.rep].group;
    info.normalizer = normalizer_in(g_, rep);
    info.centralizer = centralizer_in(g_, rep);
    info.elementary_abelian = is_elementary_abelian(rep, p_);
    info.radical = p_core(info.normalizer, p_) == rep;
    const std::size_t z = intersect(info.centralizer, rep).order();
    info.pcentric = p_part(info.centralizer.order(), p_) == z;
    info.centric = info.centralizer.order() == z;
    info.benson = info.elementary_abelian && omega1(center(info.centralizer), p_) == rep;
  }
}

std::vector<std::size_t> SubgroupLattice::members_of_class(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].cls == c) out.push_back(i);
  return out;
}

bool SubgroupLattice::strictly_below(std::size_t i, std::size_t j) const {
  const auto& a = members_[i].above;
  return std::binary_search(a.begin(), a.end(), static_cast<std::uint32_t>(j));
}

Subgroup SubgroupLattice::normalizer(std::size_t member) const {
  const auto& m = members_[member];
  if (m.to_rep == ElementTable::identity()) return classes_[m.cls].normalizer;
  return conjugate(classes_[m.cls].normalizer, table_->inverse(m.to_rep));
}

std::size_t SubgroupLattice::longest_radical_chain() const {
  std::vector<std::size_t> best(members_.size(), 0);
  std::size_t overall = 0;
  for (std::size_t i = members_.size(); i-- > 0;) {
    if (!classes_[members_[i].cls].radical) continue;
    std::size_t b = 1;
    for (auto j : members_[i].above)
      if (classes_[members_[j].cls].radical) b = std::max(b, best[j] + 1);
    best[i] = b;
    overall = std::max(overall, b);
  }
  return overall;
}

// ------------------------------------------------------------ collections

std::string to_string(CollectionKind k) {
  switch (k) {
    case CollectionKind::all: return "all";
    case CollectionKind::elementary_abelian: return "elementary_abelian";
    case CollectionKind::radical: return "radical";
    case CollectionKind::pcentric: return "pcentric";
    case CollectionKind::centric: return "centric";
    case CollectionKind::benson: return "benson";
    case CollectionKind::custom: return "custom";
  }
  return "custom";
}

Collection::Collection(LatticePtr lattice, CollectionKind kind)
    : lattice_(std::move(lattice)), kind_(kind), name_(to_string(kind)) {
  in_.assign(lattice_->class_count(), 0);
  for (std::size_t c = 0; c < lattice_->class_count(); ++c) {
    const auto& info = lattice_->class_info(c);
    bool keep = false;
    switch (kind) {
      case CollectionKind::all: keep = true; break;
      case CollectionKind::elementary_abelian: keep = info.elementary_abelian; break;
      case CollectionKind::radical: keep = info.radical; break;
      case CollectionKind::pcentric: keep = info.pcentric; break;
      case CollectionKind::centric: keep = info.centric; break;
      case CollectionKind::benson: keep = info.benson; break;
      case CollectionKind::custom: keep = false; break;
    }
    if (keep) {
      in_[c] = 1;
      classes_.push_back(c);
    }
  }
}

Collection Collection::custom(LatticePtr lattice, std::vector<std::size_t> classes, std::string name) {
  Collection c;
  c.lattice_ = std::move(lattice);
  c.kind_ = CollectionKind::custom;
  c.name_ = std::move(name);
  c.in_.assign(c.lattice_->class_count(), 0);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (auto k : classes) c.in_.at(k) = 1;
  c.classes_ = std::move(classes);
  return c;
}

std::vector<Subgroup> Collection::reps() const {
  std::vector<Subgroup> out;
  for (auto c : classes_) out.push_back(lattice_->rep(c));
  return out;
}

Collection all_p_subgroups(LatticePtr lattice) { return Collection(std::move(lattice), CollectionKind::all); }

Collection filter(const Collection& c, CollectionKind kind) {
  Collection f(c.lattice_ptr(), kind);
  std::vector<std::size_t> keep;
  for (auto k : f.classes())
    if (c.has_class(k)) keep.push_back(k);
  if (keep.size() == f.classes().size()) return f;
  return Collection::custom(c.lattice_ptr(), keep, c.name() + "/" + to_string(kind));
}

// ---------------------------------------------------------- chain classes

ChainClasses::ChainClasses(const Collection& c, std::size_t budget) : c_(c) {
  const auto& L = c.lattice();
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  std::function<void()> extend = [&]() {
    chains.push_back(cur);
    if (chains.size() > budget) throw CapExceeded("chain enumeration exceeds budget of " + std::to_string(budget));
    for (auto j : L.member(cur.back()).above)
      if (c.has_member(j)) {
        cur.push_back(j);
        extend();
        cur.pop_back();
      }
  };
  for (std::size_t i = 0; i < L.size(); ++i)
    if (c.has_member(i)) {
      cur = {i};
      extend();
    }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& ch : chains) classify(ch, true);
}

ChainClasses::Normalized ChainClasses::normalize(const std::vector<std::size_t>& chain) const {
  const auto& L = c_.lattice();
  Normalized n;
  n.t0 = L.member(chain[0]).to_rep;
  for (auto m : chain) n.chain.push_back(conjugate(L.member(m).group, n.t0));
  return n;
}

Index ChainClasses::match(const Normalized& a, const Normalized& b, std::size_t cls0) const {
  const auto& L = c_.lattice();
  const auto& t = L.table_ptr();
  const auto& ne = L.class_info(cls0).normalizer.elements();
  Index pos = kernels::find_first(ne.size(), [&](Index i) {
    for (std::size_t j = 1; j < a.chain.size(); ++j)
      for (Index x : a.chain[j].generators())
        if (!b.chain[j].contains(t->conj(x, ne[i]))) return false;
    return true;
  });
  return pos == kNoIndex ? kNoIndex : ne[pos];
}

std::pair<std::size_t, Index> ChainClasses::classify(const std::vector<std::size_t>& chain, bool create) {
  const auto& L = c_.lattice();
  const auto& t = *L.table_ptr();
  std::vector<std::size_t> sig;
  for (auto m : chain) sig.push_back(L.member(m).cls);
  Normalized n = normalize(chain);
  auto& bucket = buckets_[sig];
  for (auto k : bucket) {
    Index g = match(n, normalized_[k], sig[0]);
    if (g != kNoIndex) return {k, t.mul(t.mul(n.t0, g), t.inverse(normalized_[k].t0))};
  }
  if (!create) throw MathError("chain does not belong to the collection");
  ChainClass cc;
  cc.members = chain;
  std::vector<Subgroup> subs;
  for (auto m : chain) subs.push_back(L.member(m).group);
  cc.stabilizer = chain_normalizer(L.normalizer(chain[0]), subs);
  bucket.push_back(classes_.size());
  classes_.push_back(std::move(cc));
  normalized_.push_back(std::move(n));
  return {classes_.size() - 1, ElementTable::identity()};
}

std::pair<std::size_t, Index> ChainClasses::identify(const std::vector<std::size_t>& chain) const {
  auto it = cache_.find(chain);
  if (it != cache_.end()) return it->second;
  auto r = const_cast<ChainClasses*>(this)->classify(chain, false);
  cache_.emplace(chain, r);
  return r;
}

std::size_t ChainClasses::max_length() const {
  std::size_t m = 0;
  for (const auto& c : classes_) m = std::max(m, c.length());
  return m;
}

std::vector<std::size_t> ChainClasses::of_length(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].length() == n) out.push_back(i);
  return out;
}

std::vector<Subgroup> ChainClasses::subgroups(std::size_t cls) const {
  std::vector<Subgroup> out;
  for (auto m : classes_[cls].members) out.push_back(c_.lattice().member(m).group);
  return out;
}

// -------------------------------------------------------------- complexes

DeltaComplex SimComplex::to_delta() const {
  DeltaComplex d;
  for (const auto& s : simplices) d.counts.push_back(s.size());
  d.faces.resize(simplices.size());
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::size_t n = 0; n < simplices.size(); ++n)
    for (std::size_t i = 0; i < simplices[n].size(); ++i) index.emplace(simplices[n][i], static_cast<std::uint32_t>(i));
  for (std::size_t n = 1; n < simplices.size(); ++n)
    for (const auto& s : simplices[n]) {
      std::vector<std::uint32_t> f;
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::uint32_t> face;
        for (std::size_t j = 0; j <= n; ++j)
          if (j != i) face.push_back(s[j]);
        auto it = index.find(face);
        if (it == index.end()) throw MathError("simplicial complex is missing a face");
        f.push_back(it->second);
      }
      d.faces[n].push_back(std::move(f));
    }
  return d;
}

std::uint32_t OrderComplex::vertex_of(const Subgroup& h) const {
  auto [lo, hi] = vertex_by_key.equal_range(h.key());
  for (auto it = lo; it != hi; ++it)
    if (vertices[it->second] == h) return it->second;
  throw MathError("subgroup is not a vertex of the order complex");
}

std::uint32_t OrderComplex::act_vertex(Index g, std::uint32_t v) const { return vertex_of(conjugate(vertices[v], g)); }

std::uint32_t OrderComplex::act(Index g, std::size_t dim, std::uint32_t simplex) const {
  std::vector<std::uint32_t> img;
  for (auto v : complex.simplices[dim][simplex]) img.push_back(act_vertex(g, v));
  std::sort(img.begin(), img.end());
  return simplex_index.at(img);
}

OrderComplex order_complex(const ChainClasses& chains, std::size_t budget) {
  const auto& C = chains.collection();
  const auto& L = C.lattice();
  const auto& t = *L.table_ptr();
  const auto& ge = L.ambient().elements();
  const std::uint64_t G = L.ambient().order();

  std::uint64_t total = 0;
  for (const auto& cc : chains.classes()) total += G / cc.stabilizer.order();
  if (total > budget) throw CapExceeded("order complex has " + std::to_string(total) + " simplices, above budget");

  OrderComplex x;
  struct V {
    Subgroup h;
    std::size_t cls;
    Index to_rep;
  };
  std::vector<V> verts;
  for (auto c : C.classes()) {
    const auto& info = L.class_info(c);
    std::vector<char> done(t.size(), 0);
    for (Index g : ge) {
      if (done[g]) continue;
      for (Index n : info.normalizer.elements()) done[t.mul(n, g)] = 1;
      verts.push_back({conjugate(L.rep(c), g), c, t.inverse(g)});
    }
  }
  std::stable_sort(verts.begin(), verts.end(), [](const V& a, const V& b) { return a.h.order() < b.h.order(); });
  for (auto& v : verts) {
    x.vertex_by_key.emplace(v.h.key(), static_cast<std::uint32_t>(x.vertices.size()));
    x.vertices.push_back(std::move(v.h));
    x.vertex_class.push_back(v.cls);
    x.vertex_to_rep.push_back(v.to_rep);
  }
  x.complex.vertex_count = x.vertices.size();
  const std::size_t dims = chains.max_length() + 1;
  x.complex.simplices.resize(dims);
  x.simplex_chain_class.resize(dims);
  for (std::size_t k = 0; k < chains.classes().size(); ++k) {
    const auto& cc = chains.classes()[k];
    auto subs = chains.subgroups(k);
    std::vector<char> done(t.size(), 0);
    std::size_t made = 0;
    for (Index g : ge) {
      if (done[g]) continue;
      for (Index n : cc.stabilizer.elements()) done[t.mul(n, g)] = 1;
      std::vector<std::uint32_t> tuple;
      for (const auto& s : subs) tuple.push_back(x.vertex_of(conjugate(s, g)));
      std::sort(tuple.begin(), tuple.end());
      auto& list = x.complex.simplices[cc.length()];
      if (x.simplex_index.emplace(tuple, static_cast<std::uint32_t>(list.size())).second) {
        list.push_back(std::move(tuple));
        x.simplex_chain_class[cc.length()].push_back(k);
        ++made;
      }
    }
    if (made != G / cc.stabilizer.order()) throw MathError("chain orbit size disagrees with its stabilizer");
  }
  return x;
}

DeltaComplex orbit_space(const ChainClasses& chains) {
  DeltaComplex d;
  const std::size_t dims = chains.classes().empty() ? 0 : chains.max_length() + 1;
  d.counts.assign(dims, 0);
  d.faces.resize(dims);
  std::vector<std::uint32_t> pos(chains.classes().size());
  for (std::size_t k = 0; k < chains.classes().size(); ++k)
    pos[k] = static_cast<std::uint32_t>(d.counts[chains.classes()[k].length()]++);
  for (std::size_t n = 1; n < dims; ++n)
    for (auto k : chains.of_length(n)) {
      const auto& m = chains.classes()[k].members;
      std::vector<std::uint32_t> f;
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> face;
        for (std::size_t j = 0; j <= n; ++j)
          if (j != i) face.push_back(m[j]);
        f.push_back(pos[chains.identify(face).first]);
      }
      d.faces[n].push_back(std::move(f));
    }
  return d;
}

std::vector<std::size_t> orbit_counts(const OrderComplex& x, const std::vector<Index>& gens) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < x.complex.simplices.size(); ++n) {
    const std::size_t m = x.complex.simplices[n].size();
    std::vector<std::uint32_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (Index g : gens)
      for (std::uint32_t s = 0; s < m; ++s) {
        auto a = root(s), b = root(x.act(g, n, s));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::size_t c = 0;
    for (std::uint32_t s = 0; s < m; ++s) c += root(s) == s ? 1 : 0;
    out.push_back(c);
  }
  return out;
}

Subgroup g_zero(const SubgroupLattice& lattice) {
  const auto& t = *lattice.table_ptr();
  Subgroup h = lattice.class_info(lattice.sylow_class()).normalizer;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& m = lattice.member(i);
    Index inv = t.inverse(m.to_rep);
    std::vector<Index> extra;
    for (Index g : lattice.class_info(m.cls).normalizer.generators()) {
      Index c = t.conj(g, inv);
      if (!h.contains(c)) extra.push_back(c);
    }
    if (!extra.empty()) h = adjoin(h, extra);
  }
  return h;
}

}  // namespace endotriv
