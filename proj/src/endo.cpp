#include "endotriv/endo.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include <omp.h>

namespace endotriv {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order of the subgroup of a finite group spanned by the given vectors.
std::uint64_t span_order(const AbGroup& target, const IntMatrix& rows) {
  AbGroupMap f{AbGroup({}, rows.size()), target, rows};
  return target.order() / cokernel(f).order();
}

AbGroupMap map_from_quotient(const AbelianQuotient& q, const AbGroup& target,
                             const std::function<IntVec(Index)>& value) {
  AbGroupMap f = AbGroupMap::zero(q.group(), target);
  for (std::size_t i = 0; i < q.group().rank(); ++i) f.matrix[i] = target.reduce(value(q.witness(i)));
  return f;
}

IntVec automorphism_class(const CategoryModel& m, Index x) {
  const std::size_t s = m.collection.lattice().sylow_class();
  return class_of_element(m.category, m.h1_pprime, s, s, x);
}

// Class in `to` of the morphism of `from` with the same endpoints and payload.
std::function<IntVec(std::uint32_t)> transfer(const FinCategory& from, const CategoryModel& to) {
  return [&from, &to](std::uint32_t m) {
    const auto& x = from.morphism(m);
    return class_of_element(to.category, to.h1_pprime, from.object_class(x.src), from.object_class(x.tgt), x.payload);
  };
}

bool same_map(const AbGroupMap& a, const AbGroupMap& b) {
  for (std::size_t i = 0; i < a.matrix.size(); ++i)
    if (a.target.reduce(a.matrix[i]) != b.target.reduce(b.matrix[i])) return false;
  return true;
}

}  // namespace

LatticePtr make_lattice(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (g.order() % p != 0) throw MathError("p does not divide |G|");
  return std::make_shared<const SubgroupLattice>(make_table(g), p);
}

CategoryModel category_model(const LatticePtr& lattice, CollectionKind collection, CategoryKind kind,
                             std::uint64_t seed) {
  Collection c(lattice, collection);
  FinCategory cat(c, kind);
  H1Result h = h1(cat, seed);
  H1Result hp = h1_pprime(h, lattice->prime());
  return CategoryModel{std::move(c), std::move(cat), std::move(h), std::move(hp)};
}

AbGroup t_via_orbit(const LatticePtr& lattice) {
  Collection c(lattice, CollectionKind::all);
  return h1(FinCategory(c, CategoryKind::orbit)).group;
}

AbGroupMap functor_map(const FinCategory& cat, const H1Result& h, const AbGroup& target,
                       const std::function<IntVec(std::uint32_t)>& value) {
  const std::size_t n = cat.object_count();
  std::vector<IntVec> lambda(n);
  lambda[cat.base_object()] = target.zero();
  for (std::uint32_t m : cat.spanning_tree(h.tree_seed)) {
    const auto& x = cat.morphism(m);
    IntVec v = value(m);
    IntVec out(v.size());
    if (!lambda[x.src].empty()) {
      for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] + lambda[x.src][k];
      lambda[x.tgt] = target.reduce(std::move(out));
    } else {
      for (std::size_t k = 0; k < v.size(); ++k) out[k] = lambda[x.tgt][k] - v[k];
      lambda[x.src] = target.reduce(std::move(out));
    }
  }
  return map_out_of(h, target, [&](std::uint32_t m) {
    const auto& x = cat.morphism(m);
    IntVec v = value(m);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += lambda[x.src][k] - lambda[x.tgt][k];
    return v;
  });
}

// ----------------------------------------------------------- Carlson-Thevenaz

const Subgroup& RhoSequence::at(std::size_t i, std::size_t member) const {
  if (i == 0) throw InputError("rho is indexed from 1");
  auto it = std::find(members.begin(), members.end(), member);
  if (it == members.end()) throw InputError("member is not part of this rho sequence");
  const auto& step = steps[std::min(i, steps.size()) - 1];
  return step[static_cast<std::size_t>(it - members.begin())];
}

RhoSequence rho_sequence(const SubgroupLattice& lattice, bool radical_only) {
  RhoSequence out;
  out.radical_only = radical_only;
  for (std::size_t m = 0; m < lattice.size(); ++m)
    if (!radical_only || lattice.class_info(lattice.member(m).cls).radical) out.members.push_back(m);
  const std::size_t n = out.members.size();
  const std::uint64_t p = lattice.prime();

  std::vector<Subgroup> norm(n);
  std::vector<Subgroup> first(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < n; ++k) {
    norm[k] = lattice.normalizer(out.members[k]);
    first[k] = a_pprime(norm[k], p);
  }
  out.steps.push_back(std::move(first));

  while (true) {
    const auto& prev = out.steps.back();
    std::vector<const Subgroup*> distinct;
    for (const auto& d : prev)
      if (std::none_of(distinct.begin(), distinct.end(), [&](const Subgroup* e) { return *e == d; }))
        distinct.push_back(&d);
    std::vector<Subgroup> next(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < n; ++k) {
      Subgroup cur = prev[k];
      for (const Subgroup* d : distinct)
        for (Index x : d->elements())
          if (!cur.contains(x) && norm[k].contains(x)) cur = adjoin(cur, {x});
      next[k] = std::move(cur);
    }
    if (next == prev) break;
    out.steps.push_back(std::move(next));
  }
  const Subgroup& fin = out.final_sylow();
  for (std::size_t i = 0; i < out.steps.size(); ++i)
    if (out.steps[i].back() == fin) {
      out.stabilization_step = i + 1;
      break;
    }
  return out;
}

Subgroup rho(const SubgroupLattice& lattice, std::size_t i, std::size_t member) {
  return rho_sequence(lattice).at(i, member);
}

CtResult t_via_ct(const LatticePtr& lattice, bool radical_only) {
  const RhoSequence seq = rho_sequence(*lattice, radical_only);
  CtResult out;
  out.r = seq.stabilization_step;
  out.bound = lattice->longest_radical_chain();
  if (out.r > out.bound)
    throw MathError("rho stabilized at step " + std::to_string(out.r) + ", above the bound " +
                    std::to_string(out.bound));
  out.rho_infinity = seq.final_sylow();
  out.group = AbelianQuotient(lattice->normalizer(lattice->sylow_member()), out.rho_infinity).group();
  return out;
}

// ----------------------------------------------------- normalizer decomposition

NormalizerColimit normalizer_colimit(const ChainClasses& chains) {
  const auto& cls = chains.classes();
  const std::uint64_t p = chains.collection().lattice().prime();
  std::vector<AbelianQuotient> q(cls.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < cls.size(); ++i) q[i] = abelianization_pprime(cls[i].stabilizer, p);

  NormalizerColimit out;
  for (const auto& a : q) out.diagram.objects.push_back(a.group());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto& chain = cls[i].members;
    if (chain.size() < 2) continue;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      std::vector<std::size_t> face = chain;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      auto [tau, t] = chains.identify(face);
      out.diagram.arrows.push_back({i, tau, induced_map(q[i], q[tau], t).matrix});
    }
  }
  out.colimit = colimit(out.diagram);
  return out;
}

AbGroup t_via_normalizer_colimit(const Collection& c) {
  return normalizer_colimit(ChainClasses(c)).colimit.group;
}

// ---------------------------------------------------- centralizer decomposition

CentralizerReport t_via_centralizer(const LatticePtr& lattice) {
  const auto& L = *lattice;
  const auto& t = *L.table_ptr();
  const std::uint64_t p = L.prime();
  CategoryModel orbit = category_model(lattice, CollectionKind::all, CategoryKind::orbit);
  CategoryModel fusion = category_model(lattice, CollectionKind::all, CategoryKind::fusion);
  Collection ea(lattice, CollectionKind::elementary_abelian);
  FinCategory fa(ea, CategoryKind::fusion);

  const std::size_t n = fa.object_count();
  std::vector<AbelianQuotient> cq(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t o = 0; o < n; ++o) cq[o] = abelianization_pprime(L.class_info(fa.object_class(o)).centralizer, p);

  CentralizerReport r;
  const AbGroup& target = orbit.h1_pprime.group;
  r.h1_orbit_pprime = target;
  r.h1_fusion = fusion.h1.group;
  r.h1_fusion_pprime = fusion.h1_pprime.group;

  Diagram d;
  for (const auto& c : cq) d.objects.push_back(c.group());
  // Restriction C_G(W) -> C_G(V) along V^g <= W is x -> g x g^-1.
  for (std::uint32_t m = 0; m < fa.morphism_count(); ++m) {
    const auto& x = fa.morphism(m);
    d.arrows.push_back({x.tgt, x.src, induced_map(cq[x.tgt], cq[x.src], t.inverse(x.payload)).matrix});
  }
  r.colim = colimit(d).group;

  std::vector<AbGroupMap> into(n);
  IntMatrix all_rows;
  for (std::size_t o = 0; o < n; ++o) {
    const std::size_t c = fa.object_class(o);
    into[o] = map_from_quotient(cq[o], target, [&](Index x) { return class_of_element(orbit.category, orbit.h1_pprime, c, c, x); });
    all_rows.insert(all_rows.end(), into[o].matrix.begin(), into[o].matrix.end());
  }
  r.relations_ok = true;
  for (std::size_t a = 0; a < d.arrows.size(); ++a)
    if (!same_map(d.arrow_map(a).then(into[d.arrows[a].to]), into[d.arrows[a].from])) r.relations_ok = false;

  AbGroupMap psi = functor_map(orbit.category, orbit.h1_pprime, fusion.h1_pprime.group, transfer(orbit.category, fusion));
  r.surjective = is_surjective(psi);
  r.composite_zero = std::all_of(all_rows.begin(), all_rows.end(), [&](const IntVec& v) {
    IntVec w = psi.apply(v);
    return std::all_of(w.begin(), w.end(), [](std::int64_t e) { return e == 0; });
  });
  r.image_order = span_order(target, all_rows);
  r.kernel_order = target.order() / image_order(psi);

  r.centralizers_pprime_trivial = true;
  for (std::size_t o = 0; o < n; ++o)
    if (fa.object(o).order() == p && !cq[o].group().is_trivial()) r.centralizers_pprime_trivial = false;
  r.predicts_zero = r.centralizers_pprime_trivial && r.h1_fusion_pprime.is_trivial();
  return r;
}

// -------------------------------------------------------------- radicals normal

RadicalsNormalResult radicals_normal_kernel(const LatticePtr& lattice, std::uint64_t q) {
  const auto& L = *lattice;
  const std::uint64_t p = L.prime();
  const Subgroup& S = L.sylow();
  const Subgroup N = L.normalizer(L.sylow_member());

  std::vector<std::size_t> radicals;
  for (std::size_t m = 0; m + 1 < L.size(); ++m)
    if (L.class_info(L.member(m).cls).radical) radicals.push_back(m);

  RadicalsNormalResult out;
  out.simple_hypothesis = std::all_of(radicals.begin(), radicals.end(),
                                      [&](std::size_t m) { return is_normal_in(L.member(m).group, S); });
  std::vector<Subgroup> norm;
  for (auto m : radicals) norm.push_back(L.normalizer(m));
  out.general_hypothesis = true;
  for (std::size_t i = 0; i < radicals.size() && out.general_hypothesis; ++i)
    for (std::size_t j = 0; j < radicals.size(); ++j) {
      if (i != j && !L.strictly_below(radicals[i], radicals[j])) continue;
      const Subgroup n2 = intersect(norm[i], norm[j]);
      const Subgroup n1 = intersect(n2, N);
      const Subgroup a = a_pprime(n2, p);
      if (n1.order() * a.order() / intersect(n1, a).order() != n2.order()) {
        out.general_hypothesis = false;
        break;
      }
    }
  if (!out.applicable()) return out;

  const AbelianQuotient an = abelianization_pprime(N, p);
  std::vector<char> seen(L.size(), 0);
  IntMatrix rows;
  for (std::size_t k = 0; k < radicals.size(); ++k) {
    if (seen[radicals[k]]) continue;
    ++out.radical_classes;
    for (Index x : N.elements()) {
      const std::size_t c = L.find(conjugate(L.member(radicals[k]).group, x));
      if (c != SubgroupLattice::npos) seen[c] = 1;
    }
    const Subgroup h = intersect(N, a_pprime(norm[k], p));
    for (Index g : h.generators()) rows.push_back(an.classify(g));
  }
  AbGroupMap f{AbGroup({}, rows.size()), an.group(), rows};
  out.kernel = hom_to_units(cokernel(f), q);
  return out;
}

// -------------------------------------------------------------- fusion bounds

bool FusionBounds::ok() const {
  return n_onto_orbit_centric && orbit_centric_onto_orbit && nsc_onto_fusion_centric && fusion_centric_onto_fusion &&
         orbit_onto_fusion && commutes && centric_iso.value_or(true);
}

FusionBounds fusion_bounds(const LatticePtr& lattice) {
  const auto& L = *lattice;
  const std::uint64_t p = L.prime();
  const Subgroup N = L.normalizer(L.sylow_member());
  CategoryModel oc = category_model(lattice, CollectionKind::pcentric, CategoryKind::orbit);
  CategoryModel fc = category_model(lattice, CollectionKind::pcentric, CategoryKind::fusion);
  CategoryModel os = category_model(lattice, CollectionKind::all, CategoryKind::orbit);
  CategoryModel fs = category_model(lattice, CollectionKind::all, CategoryKind::fusion);

  const AbelianQuotient ns = abelianization_pprime(N, p);
  const AbelianQuotient nsc(N, join(a_pprime(N, p), L.class_info(L.sylow_class()).centralizer));

  FusionBounds b;
  b.n_over_s = ns.group();
  b.n_over_sc = nsc.group();
  b.orbit_centric = oc.h1_pprime.group;
  b.fusion_centric = fc.h1_pprime.group;
  b.orbit_all = os.h1_pprime.group;
  b.fusion_all = fs.h1_pprime.group;
  b.fusion_centric_full = fc.h1.group;
  b.fusion_all_full = fs.h1.group;

  const AbGroupMap a = map_from_quotient(ns, b.orbit_centric, [&](Index x) { return automorphism_class(oc, x); });
  const AbGroupMap c = map_from_quotient(nsc, b.fusion_centric, [&](Index x) { return automorphism_class(fc, x); });
  const AbGroupMap o_c_s = functor_map(oc.category, oc.h1_pprime, b.orbit_all, transfer(oc.category, os));
  const AbGroupMap f_c_s = functor_map(fc.category, fc.h1_pprime, b.fusion_all, transfer(fc.category, fs));
  const AbGroupMap o_f_c = functor_map(oc.category, oc.h1_pprime, b.fusion_centric, transfer(oc.category, fc));
  const AbGroupMap o_f_s = functor_map(os.category, os.h1_pprime, b.fusion_all, transfer(os.category, fs));

  b.n_onto_orbit_centric = is_surjective(a);
  b.orbit_centric_onto_orbit = is_surjective(o_c_s);
  b.nsc_onto_fusion_centric = is_surjective(c);
  b.fusion_centric_onto_fusion = is_surjective(f_c_s);
  b.orbit_onto_fusion = is_surjective(o_f_s);
  b.commutes = same_map(o_c_s.then(o_f_s), o_f_c.then(f_c_s)) && same_map(a.then(o_f_c), induced_map(ns, nsc).then(c));

  b.centric_radicals_centric = true;
  for (std::size_t k = 0; k < L.class_count(); ++k) {
    const auto& ci = L.class_info(k);
    if (ci.radical && ci.pcentric && !ci.centric) b.centric_radicals_centric = false;
  }
  if (b.centric_radicals_centric) b.centric_iso = b.orbit_centric == b.fusion_centric;
  return b;
}

// -------------------------------------------------------------------- G_0

GZeroReport g_zero_report(const LatticePtr& lattice) {
  const auto& L = *lattice;
  const std::uint64_t p = L.prime();
  GZeroReport r;
  r.g0 = g_zero(L);
  r.proper = r.g0.order() < L.ambient().order();
  CategoryModel os = category_model(lattice, CollectionKind::all, CategoryKind::orbit);
  const AbelianQuotient ns = abelianization_pprime(L.normalizer(L.sylow_member()), p);
  const AbelianQuotient a0 = abelianization_pprime(r.g0, p);
  const AbelianQuotient ag = abelianization_pprime(L.ambient(), p);
  r.n_over_s = ns.group();
  r.orbit = os.h1_pprime.group;
  r.g0_pprime = a0.group();
  r.g_pprime = ag.group();
  r.n_onto_orbit = is_surjective(map_from_quotient(ns, r.orbit, [&](Index x) { return automorphism_class(os, x); }));
  r.orbit_onto_g0 = is_surjective(functor_map(os.category, os.h1_pprime, r.g0_pprime, [&](std::uint32_t m) {
    return a0.classify(os.category.morphism(m).payload);
  }));
  r.g0_onto_g = is_surjective(induced_map(a0, ag));
  return r;
}

// ----------------------------------------------------------- complement / K_0

VanishingK0 vanishing_k0(const LatticePtr& lattice, std::size_t max_attempts) {
  const auto& L = *lattice;
  const auto& t = *L.table_ptr();
  const std::uint64_t p = L.prime();
  const Subgroup& S = L.sylow();
  const Subgroup N = L.normalizer(L.sylow_member());
  const std::uint64_t index = N.order() / S.order();

  std::vector<Index> pprime;
  for (Index x : N.elements())
    if (t.element_order(x) % p != 0) pprime.push_back(x);
  std::uint64_t seed = 0x6a09e667f3bcc909ULL ^ L.ambient().order();
  for (Index x : N.elements()) seed = splitmix(seed ^ x);
  std::mt19937_64 rng(seed);

  VanishingK0 out;
  Subgroup k = Subgroup::trivial(L.table_ptr());
  while (k.order() != index && out.attempts < max_attempts) {
    ++out.attempts;
    std::shuffle(pprime.begin(), pprime.end(), rng);
    k = Subgroup::trivial(L.table_ptr());
    for (Index x : pprime) {
      if (k.order() == index) break;
      if (k.contains(x)) continue;
      Subgroup k2 = adjoin(k, {x});
      if (index % k2.order() == 0) k = std::move(k2);
    }
  }
  if (k.order() != index) return out;
  out.available = true;
  out.k = k;

  Subgroup k0 = Subgroup::trivial(L.table_ptr());
  for (Index x : S.elements()) {
    if (x == ElementTable::identity()) continue;
    for (Index y : k.elements())
      if (!k0.contains(y) && t.conj(x, y) == x) k0 = adjoin(k0, {y});
  }
  out.k0 = k0;
  std::vector<Index> seed_elems = k0.generators();
  const Subgroup dk = derived_subgroup(k);
  seed_elems.insert(seed_elems.end(), dk.generators().begin(), dk.generators().end());
  out.quotient = AbelianQuotient(k, normal_closure(k, seed_elems)).group();

  const Group ng = Group::from_generators(t.degree(), N.generator_perms());
  out.fusion_h1 = h1(FinCategory(Collection(make_lattice(ng, p), CollectionKind::all), CategoryKind::fusion)).group;
  out.agrees = out.fusion_h1 == out.quotient;

  for (Index s : k.elements())
    if (t.element_order(s) == k.order()) {
      for (std::size_t r = 1; r <= k.order(); ++r) {
        const Index sr = t.pow(s, static_cast<long long>(r));
        const bool fixes = std::any_of(S.elements().begin(), S.elements().end(), [&](Index x) {
          return x != ElementTable::identity() && t.conj(x, sr) == x;
        });
        if (fixes) {
          out.cyclic_fixed_power = r;
          break;
        }
      }
      break;
    }
  return out;
}

// ---------------------------------------------------------------- weak homs

std::vector<FiniteField::Elem> character_to_weak_hom(const FinCategory& orbit, const H1Result& h,
                                                     const Character& chi, const FiniteField& f) {
  if (orbit.kind() != CategoryKind::orbit) throw InputError("weak homomorphisms need the orbit category");
  const auto& L = orbit.collection().lattice();
  const auto& t = *L.table_ptr();
  const Subgroup& S = L.sylow();
  std::vector<FiniteField::Elem> table(t.size(), 1);
  std::string error;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t gi = 0; gi < t.size(); ++gi) {
    const Index g = static_cast<Index>(gi);
    std::vector<Index> p, pg;
    for (Index s : S.elements()) {
      const Index c = t.conj(s, g);
      if (S.contains(c)) {
        p.push_back(s);
        pg.push_back(c);
      }
    }
    if (p.size() <= 1) continue;
    std::sort(pg.begin(), pg.end());
    const std::size_t a = L.find(Subgroup::from_elements(L.table_ptr(), std::move(p)));
    const std::size_t b = L.find(Subgroup::from_elements(L.table_ptr(), std::move(pg)));
    try {
      table[gi] = f.unit(chi.exponent(normalized_class(orbit, h, a, b, g)));
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
    }
  }
  if (!error.empty()) throw MathError(error);
  return table;
}

namespace {

WeakHomCheck check_weak_hom_impl(const SubgroupLattice& L, const std::vector<FiniteField::Elem>& table,
                                 const FiniteField& f, std::size_t exhaustive_limit, std::uint64_t seed,
                                 std::size_t samples, bool parallel) {
  const auto& t = *L.table_ptr();
  const Subgroup& S = L.sylow();
  const std::size_t n = t.size();
  if (table.size() != n) throw InputError("table size differs from |G|");

  // Index the Sylow conjugates S^g.
  std::vector<std::uint32_t> syl(n);
  std::vector<std::vector<Index>> sylows;
  {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;
    for (Index g = 0; g < n; ++g) {
      std::vector<Index> e;
      e.reserve(S.order());
      for (Index s : S.elements()) e.push_back(t.conj(s, g));
      std::sort(e.begin(), e.end());
      std::uint64_t h = 0;
      for (Index x : e) h = splitmix(h ^ x);
      auto& bucket = by_hash[h];
      std::uint32_t id = ~0u;
      for (auto c : bucket)
        if (sylows[c] == e) id = c;
      if (id == ~0u) {
        id = static_cast<std::uint32_t>(sylows.size());
        bucket.push_back(id);
        sylows.push_back(std::move(e));
      }
      syl[g] = id;
    }
  }
  const std::size_t m = sylows.size();
  auto meets = [&](std::uint32_t a, std::uint32_t b) {
    std::size_t c = 0;
    for (Index x : S.elements())
      if (std::binary_search(sylows[a].begin(), sylows[a].end(), x) &&
          std::binary_search(sylows[b].begin(), sylows[b].end(), x))
        if (++c > 1) return true;
    return false;
  };
  std::vector<char> meet(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) meet[a * m + b] = meet[b * m + a] = meets(a, b) ? 1 : 0;

  WeakHomCheck r;
  for (Index s : S.elements())
    if (table[s] != 1) r.wh1 = false;
  for (Index g = 0; g < n; ++g)
    if (!meet[syl[g] * m + syl[g]] && table[g] != 1) r.wh2 = false;

  auto pair_ok = [&](Index g, Index h) {
    const Index gh = t.mul(g, h);
    if (!meet[syl[h] * m + syl[gh]]) return true;
    return f.mul(table[g], table[h]) == table[gh];
  };
  bool wh3 = true;
  std::uint64_t checked = 0;
  if (n <= exhaustive_limit) {
    r.exhaustive = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : wh3) reduction(+ : checked) if (parallel)
    for (std::size_t g = 0; g < n; ++g) {
      for (Index h = 0; h < n; ++h)
        if (!pair_ok(static_cast<Index>(g), h)) wh3 = false;
      checked += n;
    }
  } else {
#pragma omp parallel for schedule(static) reduction(&& : wh3) reduction(+ : checked) if (parallel)
    for (std::size_t i = 0; i < samples; ++i) {
      const std::uint64_t x = splitmix(seed ^ splitmix(i));
      const Index g = static_cast<Index>(x % n), h = static_cast<Index>((x >> 32) % n);
      if (!pair_ok(g, h)) wh3 = false;
      ++checked;
    }
  }
  r.wh3 = wh3;
  r.pairs_checked = checked;
  return r;
}

}  // namespace

WeakHomCheck check_weak_hom(const SubgroupLattice& lattice, const std::vector<FiniteField::Elem>& table,
                            const FiniteField& f, std::size_t exhaustive_limit, std::uint64_t seed,
                            std::size_t samples) {
  return check_weak_hom_impl(lattice, table, f, exhaustive_limit, seed, samples, true);
}

WeakHomCheck check_weak_hom_serial(const SubgroupLattice& lattice, const std::vector<FiniteField::Elem>& table,
                                   const FiniteField& f, std::size_t exhaustive_limit, std::uint64_t seed,
                                   std::size_t samples) {
  return check_weak_hom_impl(lattice, table, f, exhaustive_limit, seed, samples, false);
}

// ------------------------------------------------------------------- driver

TReport cross_check(const std::string& name, const Group& g, std::uint64_t p, std::uint64_t q) {
  const LatticePtr L = make_lattice(g, p);
  TReport r;
  r.group = name;
  r.order = g.order();
  r.p = p;

  r.orbit = t_via_orbit(L);
  r.ct = t_via_ct(L);
  r.ct_fast_agrees = t_via_ct(L, true).group == r.ct.group;
  {
    ChainClasses bp(Collection(L, CollectionKind::radical));
    ChainClasses ap(Collection(L, CollectionKind::elementary_abelian));
    r.chain_classes_bp = bp.classes().size();
    r.chain_classes_ap = ap.classes().size();
    r.normalizer_bp = normalizer_colimit(bp).colimit.group;
    r.normalizer_ap = normalizer_colimit(ap).colimit.group;
  }
  r.centralizer = t_via_centralizer(L);
  r.fusion = fusion_bounds(L);
  r.g0 = g_zero_report(L);

  r.t_abstract = r.orbit;
  if (q == 0) {
    q = auto_field(r.t_abstract, p);
  } else {
    std::uint64_t qp = 0;
    if (!prime_power(q, &qp) || qp != p) throw InputError("the field size must be a power of p");
  }
  r.q = q;
  r.t_characters = hom_to_units(r.t_abstract, q);
  r.radicals_normal = radicals_normal_kernel(L, q);

  r.consistent = r.orbit == r.ct.group && r.orbit == r.normalizer_bp && r.orbit == r.normalizer_ap;
  bool pprime = r.orbit.is_finite();
  for (auto d : r.orbit.torsion()) pprime = pprime && d % static_cast<std::int64_t>(p) != 0;
  r.diagnostics_ok = pprime && r.ct_fast_agrees && r.centralizer.exact() && r.fusion.ok() && r.g0.ok() &&
                     (!r.radicals_normal.kernel || *r.radicals_normal.kernel == r.t_characters);
  return r;
}

}  // namespace endotriv
