#include "endotriv/fincat.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

namespace endotriv {

std::string to_string(CategoryKind k) {
  switch (k) {
    case CategoryKind::transport: return "transport";
    case CategoryKind::orbit: return "orbit";
    case CategoryKind::fusion: return "fusion";
    case CategoryKind::fusion_orbit: return "fusion_orbit";
  }
  return "orbit";
}

std::size_t FinCategory::VecHash::operator()(const std::vector<Index>& v) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Index x : v) h = (h ^ x) * 1099511628211ULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

FinCategory::FinCategory(const Collection& c, CategoryKind kind) : c_(c), kind_(kind) {
  const auto& L = c.lattice();
  const auto& t = *L.table_ptr();
  objects_ = c.classes();
  std::stable_sort(objects_.begin(), objects_.end(),
                   [&](std::size_t a, std::size_t b) { return L.rep(a).order() < L.rep(b).order(); });
  const std::size_t n = objects_.size();
  of_class_.assign(L.class_count(), npos);
  for (std::size_t o = 0; o < n; ++o) of_class_[objects_[o]] = o;
  if (n == 0) throw MathError("category on an empty collection");
  base_ = of_class_[L.sylow_class()];
  if (base_ == npos) base_ = n - 1;

  std::vector<std::vector<std::size_t>> members(L.class_count());
  for (std::size_t m = 0; m < L.size(); ++m) members[L.member(m).cls].push_back(m);

  hom_.assign(n * n, {0, 0});
  std::vector<std::uint32_t> stamp(t.size(), 0);
  std::uint32_t epoch = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& pinfo = L.class_info(objects_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t first = static_cast<std::uint32_t>(morphisms_.size());
      const Subgroup& q = object(b);
      std::vector<Index> tys;
      if (q.order() >= object(a).order()) {
        const std::size_t qm = L.class_info(objects_[b]).rep;
        for (auto y : members[objects_[a]])
          if (y == qm || L.strictly_below(y, qm)) tys.push_back(t.inverse(L.member(y).to_rep));
      }
      std::vector<Index> tr;
      tr.reserve(tys.size() * pinfo.normalizer.order());
      for (Index ty : tys)
        for (Index x : pinfo.normalizer.elements()) tr.push_back(t.mul(x, ty));
      std::sort(tr.begin(), tr.end());
      ++epoch;
      const auto& cent = pinfo.centralizer.elements();
      for (Index g : tr) {
        if (stamp[g] == epoch) continue;
        Morphism m{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), g};
        switch (kind_) {
          case CategoryKind::transport: stamp[g] = epoch; break;
          case CategoryKind::orbit:
            for (Index y : q.elements()) stamp[t.mul(g, y)] = epoch;
            break;
          case CategoryKind::fusion:
            for (Index z : cent) stamp[t.mul(z, g)] = epoch;
            break;
          case CategoryKind::fusion_orbit:
            for (Index z : cent) {
              Index zg = t.mul(z, g);
              for (Index y : q.elements()) stamp[t.mul(zg, y)] = epoch;
            }
            break;
        }
        auto key = label(a, b, g);
        lookup_.emplace(std::move(key), static_cast<std::uint32_t>(morphisms_.size()));
        morphisms_.push_back(m);
      }
      hom_[a * n + b] = {first, static_cast<std::uint32_t>(morphisms_.size())};
      for (Index ty : tys) gens_.push_back(find(a, b, ty));
    }
  }
  identity_.resize(n);
  for (std::size_t o = 0; o < n; ++o) {
    identity_[o] = find(o, o, ElementTable::identity());
    for (Index x : L.class_info(objects_[o]).normalizer.generators()) gens_.push_back(find(o, o, x));
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

std::vector<Index> FinCategory::label(std::size_t src, std::size_t tgt, Index g) const {
  const auto& t = object(src).table();
  std::vector<Index> key{static_cast<Index>(src), static_cast<Index>(tgt)};
  switch (kind_) {
    case CategoryKind::transport: key.push_back(g); break;
    case CategoryKind::orbit: {
      Index best = kNoIndex;
      for (Index y : object(tgt).elements()) best = std::min(best, t.mul(g, y));
      key.push_back(best);
      break;
    }
    case CategoryKind::fusion:
      for (Index x : object(src).generators()) key.push_back(t.conj(x, g));
      break;
    case CategoryKind::fusion_orbit: {
      std::vector<Index> best, cur;
      for (Index y : object(tgt).elements()) {
        Index gy = t.mul(g, y);
        cur.clear();
        for (Index x : object(src).generators()) cur.push_back(t.conj(x, gy));
        if (best.empty() || cur < best) best = cur;
      }
      key.insert(key.end(), best.begin(), best.end());
      break;
    }
  }
  return key;
}

std::uint32_t FinCategory::find(std::size_t src, std::size_t tgt, Index g) const {
  auto it = lookup_.find(label(src, tgt, g));
  if (it == lookup_.end()) throw MathError("element does not transport the source into the target");
  return it->second;
}

std::uint32_t FinCategory::compose(std::uint32_t f, std::uint32_t h) const {
  const auto& a = morphisms_[f];
  const auto& b = morphisms_[h];
  if (a.tgt != b.src) throw MathError("morphisms are not composable");
  return find(a.src, b.tgt, object(a.src).table().mul(a.payload, b.payload));
}

std::vector<std::uint32_t> FinCategory::spanning_tree(std::uint64_t seed) const {
  const std::size_t n = objects_.size();
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(n);
  for (std::uint32_t m = 0; m < morphisms_.size(); ++m) {
    const auto& x = morphisms_[m];
    if (x.src == x.tgt) continue;
    adj[x.src].emplace_back(x.tgt, m);
    adj[x.tgt].emplace_back(x.src, m);
  }
  if (seed) {
    std::mt19937_64 rng(seed);
    for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> queue{base_};
  seen[base_] = 1;
  std::vector<std::uint32_t> tree;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto [o, m] : adj[queue[i]])
      if (!seen[o]) {
        seen[o] = 1;
        tree.push_back(m);
        queue.push_back(o);
      }
  if (queue.size() != n) throw MathError("category is not connected");
  return tree;
}

namespace {

std::vector<std::vector<std::uint32_t>> out_lists(const FinCategory& cat) {
  std::vector<std::vector<std::uint32_t>> out(cat.object_count());
  for (std::uint32_t m = 0; m < cat.morphism_count(); ++m) out[cat.morphism(m).src].push_back(m);
  return out;
}

H1Result finish(const FinCategory& cat, RelationReducer& r) {
  (void)cat;
  Presented p = r.finish();
  return H1Result{p.group, std::move(p.gen_images), std::move(p.basis_witness)};
}

void add_base(const FinCategory& cat, RelationReducer& r, const std::vector<std::uint32_t>& tree) {
  for (std::size_t o = 0; o < cat.object_count(); ++o) r.kill(cat.identity(o));
  for (auto m : tree) r.kill(m);
}

}  // namespace

H1Result h1(const FinCategory& cat, std::uint64_t tree_seed) {
  RelationReducer r(cat.morphism_count());
  add_base(cat, r, cat.spanning_tree(tree_seed));
  const auto out = out_lists(cat);
  const auto& gens = cat.generators();
  std::vector<std::vector<RelationReducer::Row>> rows(gens.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::uint32_t f = gens[i];
    for (std::uint32_t h : out[cat.morphism(f).tgt])
      rows[i].push_back({{cat.compose(f, h), 1}, {f, -1}, {h, -1}});
  }
  for (auto& block : rows)
    for (auto& row : block) {
      const std::uint32_t pref = row[0].first;
      r.add(std::move(row), pref);
    }
  H1Result res = finish(cat, r);
  res.tree_seed = tree_seed;
  return res;
}

H1Result h1_reference(const FinCategory& cat) {
  RelationReducer r(cat.morphism_count());
  add_base(cat, r, cat.spanning_tree(0));
  const auto out = out_lists(cat);
  for (std::uint32_t f = 0; f < cat.morphism_count(); ++f)
    for (std::uint32_t h : out[cat.morphism(f).tgt]) {
      const std::uint32_t fh = cat.compose(f, h);
      r.add({{fh, 1}, {f, -1}, {h, -1}}, fh);
    }
  return finish(cat, r);
}

H1Result h1_pprime(const H1Result& h, std::uint64_t p) {
  PPrimePart pp = pprime_part(h.group, p);
  H1Result out;
  out.group = pp.group;
  out.tree_seed = h.tree_seed;
  for (const auto& c : h.classes) out.classes.push_back(pp.projection.apply(c));
  for (std::size_t k = 0; k < pp.group.rank(); ++k)
    for (std::size_t i = 0; i < h.group.rank(); ++i)
      if (pp.projection.matrix[i][k] == 1) {
        out.basis_witness.push_back(h.basis_witness[i]);
        break;
      }
  return out;
}

IntVec class_of_element(const FinCategory& cat, const H1Result& h, std::size_t src_cls, std::size_t tgt_cls,
                        Index g) {
  const std::size_t a = cat.object_of_class(src_cls), b = cat.object_of_class(tgt_cls);
  if (a == FinCategory::npos || b == FinCategory::npos) throw MathError("class is not an object of the category");
  return h.class_of(cat.find(a, b, g));
}

IntVec normalized_class(const FinCategory& cat, const H1Result& h, std::size_t x_member, std::size_t y_member,
                        Index g) {
  const auto& L = cat.collection().lattice();
  const auto& t = *L.table_ptr();
  const std::size_t s = L.sylow_class();
  if (cat.object_of_class(s) == FinCategory::npos) throw MathError("normalized classes need the Sylow object");
  const auto& x = L.member(x_member);
  const auto& y = L.member(y_member);
  const Index xi = t.inverse(x.to_rep), yi = t.inverse(y.to_rep);
  IntVec a = class_of_element(cat, h, x.cls, y.cls, t.mul(t.mul(xi, g), y.to_rep));
  IntVec b = class_of_element(cat, h, y.cls, s, yi);
  IntVec c = class_of_element(cat, h, x.cls, s, xi);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i] - c[i];
  return h.group.reduce(std::move(a));
}

AbGroupMap map_out_of(const H1Result& h, const AbGroup& target, const std::function<IntVec(std::uint32_t)>& image) {
  AbGroupMap f = AbGroupMap::zero(h.group, target);
  for (std::size_t i = 0; i < h.basis_witness.size(); ++i) {
    IntVec acc = target.zero();
    for (std::uint32_t m = 0; m < h.basis_witness[i].size(); ++m) {
      const std::int64_t c = h.basis_witness[i][m];
      if (!c) continue;
      IntVec v = image(m);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += c * v[k];
      acc = target.reduce(std::move(acc));
    }
    f.matrix[i] = std::move(acc);
  }
  return f;
}

}  // namespace endotriv
