#include "endotriv/suite.hpp"

#include <chrono>
#include <sstream>

#include "endotriv/catalog.hpp"
#include "endotriv/endo.hpp"
#include "endotriv/steinberg.hpp"

namespace endotriv {

namespace {

using Clock = std::chrono::steady_clock;

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string pair_name(const std::pair<std::string, std::uint64_t>& c) {
  return c.first + "@" + std::to_string(c.second);
}

// Runs `check` on every catalog pair; the row fails on the first pair that
// returns false or throws, and the detail names it.
void over_catalog(SuiteRow& row, const std::function<bool(const LatticePtr&, std::string&)>& check) {
  const auto pairs = property_catalog();
  std::size_t passed = 0;
  std::string bad;
  for (const auto& c : pairs) {
    std::string note;
    bool ok = false;
    try {
      ok = check(make_lattice(load_group(c.first), c.second), note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    if (ok) {
      ++passed;
    } else if (bad.size() < 400) {
      bad += " " + pair_name(c) + (note.empty() ? "" : " [" + note + "]");
    }
  }
  row.pass = passed == pairs.size() && pairs.size() >= 12;
  row.detail = std::to_string(passed) + "/" + std::to_string(pairs.size()) + " pairs" +
               (bad.empty() ? "" : "; failing:" + bad);
}

AbGroup h1_of(const LatticePtr& l, CollectionKind c, CategoryKind k, bool pprime) {
  FinCategory cat(Collection(l, c), k);
  H1Result h = h1(cat);
  return pprime ? h1_pprime(h, l->prime()).group : h.group;
}

void row1(SuiteRow& row) {
  row.id = 1;
  row.title = "S7 at p=3: four methods give Z/2 + Z/2, characters over F_3 (Z/2)^2";
  row.limit = 60;
  const auto L = make_lattice(load_group("S7"), 3);
  const AbGroup want({2, 2});
  const AbGroup orbit = t_via_orbit(L);
  const CtResult ct = t_via_ct(L);
  const AbGroup bp = t_via_normalizer_colimit(Collection(L, CollectionKind::radical));
  const AbGroup ap = t_via_normalizer_colimit(Collection(L, CollectionKind::elementary_abelian));
  const AbGroup chars = hom_to_units(orbit, 3);
  row.pass = orbit == want && ct.group == want && bp == want && ap == want && chars == want;
  row.detail = "orbit " + orbit.str() + ", rho " + ct.group.str() + " (r=" + std::to_string(ct.r) + "), B_p " +
               bp.str() + ", A_p " + ap.str() + ", characters " + chars.str();
}

void row2(SuiteRow& row) {
  row.id = 2;
  row.title = "S7 at p=3, q=3: twisted homology (1,36) for the trivial character, (0,35) for the others";
  row.limit = 120;
  row.expected_red = true;
  const auto L = make_lattice(load_group("S7"), 3);
  CategoryModel orbit = category_model(L, CollectionKind::all, CategoryKind::orbit);
  ChainClasses chains(orbit.collection);
  const OrderComplex x = order_complex(chains);
  const FiniteField f(3);
  // Characters trivial on the kernel of H_1(O) -> H_1(G)_{p'} come from
  // one-dimensional representations of G.
  const AbelianQuotient ag = abelianization_pprime(L->ambient(), 3);
  const Kernel kg = kernel(functor_map(orbit.category, orbit.h1, ag.group(), [&](std::uint32_t m) {
    return ag.classify(orbit.category.morphism(m).payload);
  }));
  bool ok = true;
  std::ostringstream d;
  for (const auto& chi : all_characters(orbit.h1.group, 3)) {
    const auto dims = homology_dims(f, twisted_complex(x, orbit.category, orbit.h1, chi, f));
    const bool from_g = std::all_of(kg.inclusion.begin(), kg.inclusion.end(),
                                    [&](const IntVec& v) { return chi.exponent(v) == 0; });
    const std::vector<std::size_t> want = chi.is_trivial() ? std::vector<std::size_t>{1, 36} : std::vector<std::size_t>{0, 35};
    ok = ok && dims == want;
    d << "chi(";
    for (std::size_t i = 0; i < chi.exps.size(); ++i) d << (i ? "," : "") << chi.exps[i];
    d << ") " << dims_str(dims) << (from_g && !chi.is_trivial() ? " [factors through H1(G)]" : "") << "; ";
  }
  row.pass = ok;
  row.detail = d.str();
}

void row3(SuiteRow& row) {
  row.id = 3;
  row.title = "3^(1+2):8 at p=3: H1(F*) = Z/2, K/K0 = Z/2, fixed point at r = 2";
  const auto L = make_lattice(load_group("3^1+2:8"), 3);
  const AbGroup f = h1_of(L, CollectionKind::all, CategoryKind::fusion, false);
  const VanishingK0 v = vanishing_k0(L);
  const AbGroup z2({2});
  row.pass = f == z2 && v.available && v.quotient == z2 && v.agrees && v.cyclic_fixed_power == 2u;
  row.detail = "H1(F*) " + f.str() + ", |K| " + std::to_string(v.k.order()) + ", |K0| " + std::to_string(v.k0.order()) +
               ", K/K0 " + v.quotient.str() + ", r " +
               (v.cyclic_fixed_power ? std::to_string(*v.cyclic_fixed_power) : std::string("-"));
}

void row4(SuiteRow& row) {
  row.id = 4;
  row.title = "S_n at p=2, n = 4..8: T = 0";
  bool ok = true;
  for (std::size_t n = 4; n <= 8; ++n) {
    const AbGroup t = t_via_orbit(make_lattice(symmetric_group(n), 2));
    ok = ok && t.is_trivial();
    row.detail += "S" + std::to_string(n) + " " + t.str() + "; ";
  }
  row.pass = ok;
}

void row5(SuiteRow& row) {
  row.id = 5;
  row.title = "p-rank one: T equals H1(N_G(Omega_1 Z(S)))_{p'}";
  bool ok = true;
  for (const auto& c : std::vector<std::pair<std::string, std::uint64_t>>{{"S3", 3}, {"A4", 3}, {"F21", 7}, {"F20", 5}}) {
    const auto L = make_lattice(load_group(c.first), c.second);
    const Subgroup omega = omega1(center(L->sylow()), c.second);
    const AbGroup want = abelianization_pprime(normalizer_in(L->ambient(), omega), c.second).group();
    const AbGroup t = t_via_orbit(L);
    ok = ok && t == want;
    row.detail += pair_name(c) + " " + t.str() + " vs " + want.str() + "; ";
  }
  row.pass = ok;
}

void row6(SuiteRow& row) {
  row.id = 6;
  row.title = "rho stabilizes by 1 + dim B_p and N_G(S)/rho(S) = T on the catalog";
  over_catalog(row, [](const LatticePtr& l, std::string& note) {
    const CtResult full = t_via_ct(l);
    const CtResult fast = t_via_ct(l, true);
    note = "r=" + std::to_string(full.r) + "/" + std::to_string(full.bound);
    return full.r <= full.bound && full.group == t_via_orbit(l) && fast.group == full.group;
  });
}

void row7(SuiteRow& row) {
  row.id = 7;
  row.title = "collection invariance of H1 across S_p, B_p, A_p";
  over_catalog(row, [](const LatticePtr& l, std::string& note) {
    using CK = CollectionKind;
    const std::vector<CK> four{CK::all, CK::radical, CK::elementary_abelian, CK::benson};
    const AbGroup tr = h1_of(l, CK::all, CategoryKind::transport, false);
    const AbGroup orp = h1_of(l, CK::all, CategoryKind::orbit, true);
    for (CK c : four) {
      if (h1_of(l, c, CategoryKind::transport, false) != tr) return note = "transport " + to_string(c), false;
      if (h1_of(l, c, CategoryKind::orbit, true) != orp) return note = "orbit p' " + to_string(c), false;
    }
    if (h1_of(l, CK::radical, CategoryKind::orbit, false) != h1_of(l, CK::all, CategoryKind::orbit, false))
      return note = "orbit on B_p", false;
    const AbGroup fu = h1_of(l, CK::all, CategoryKind::fusion, false);
    for (CK c : {CK::elementary_abelian, CK::benson})
      if (h1_of(l, c, CategoryKind::fusion, false) != fu) return note = "fusion " + to_string(c), false;
    return true;
  });
}

void row8(SuiteRow& row) {
  row.id = 8;
  row.title = "orbit space |S_p(G)|/G is acyclic with trivial edge-path H1";
  over_catalog(row, [](const LatticePtr& l, std::string& note) {
    const WebbReport w = webb_check(ChainClasses(Collection(l, CollectionKind::all)));
    note = w.simply_connected_proven ? "proven" : "inconclusive";
    return w.ok();
  });
}

void row9(SuiteRow& row) {
  row.id = 9;
  row.title = "reduced Euler characteristic of |S_p(G)| is divisible by |S|";
  over_catalog(row, [](const LatticePtr& l, std::string& note) {
    ChainClasses chains(Collection(l, CollectionKind::all));
    note = std::to_string(reduced_euler(chains));
    return brown_congruence(chains);
  });
}

void row10(SuiteRow& row) {
  row.id = 10;
  row.title = "H1(O) is a p'-group between H1(N_G(S)/S)_{p'} and H1(G)_{p'}";
  over_catalog(row, [](const LatticePtr& l, std::string& note) {
    const AbGroup t = t_via_orbit(l);
    bool pprime = t.is_finite();
    for (auto d : t.torsion()) pprime = pprime && d % static_cast<std::int64_t>(l->prime()) != 0;
    const GZeroReport g = g_zero_report(l);
    note = g.n_over_s.str() + " >> " + g.orbit.str() + " >> " + g.g0_pprime.str() + " >> " + g.g_pprime.str();
    return pprime && g.ok() && g.orbit == t;
  });
}

void row11(SuiteRow& row) {
  row.id = 11;
  row.title = "weak homomorphisms: WH1-WH3 hold for every character, tables distinct";
  row.limit = 300;
  bool ok = true;
  for (const auto& c : std::vector<std::pair<std::string, std::uint64_t>>{{"S7", 3}, {"S4", 3}, {"A5", 2}, {"SL(2,3)", 2}}) {
    const auto L = make_lattice(load_group(c.first), c.second);
    CategoryModel orbit = category_model(L, CollectionKind::all, CategoryKind::orbit);
    const std::uint64_t q = auto_field(orbit.h1.group, c.second);
    const FiniteField f(q);
    std::vector<std::vector<FiniteField::Elem>> tables;
    bool all_ok = true, exhaustive = true;
    for (const auto& chi : all_characters(orbit.h1.group, q)) {
      tables.push_back(character_to_weak_hom(orbit.category, orbit.h1, chi, f));
      const WeakHomCheck w = check_weak_hom(*L, tables.back(), f);
      all_ok = all_ok && w.ok();
      exhaustive = exhaustive && w.exhaustive;
    }
    bool distinct = true;
    for (std::size_t i = 0; i < tables.size(); ++i)
      for (std::size_t j = i + 1; j < tables.size(); ++j) distinct = distinct && tables[i] != tables[j];
    ok = ok && all_ok && exhaustive && distinct;
    row.detail += pair_name(c) + " q=" + std::to_string(q) + " " + std::to_string(tables.size()) + " characters" +
                  (all_ok ? "" : " WH failure") + (distinct ? "" : " duplicate tables") + "; ";
  }
  row.pass = ok;
}

void row12(SuiteRow& row) {
  row.id = 12;
  row.title = "duality: characters of a colimit = limit of the dual diagram";
  std::mt19937_64 rng(20240611);
  const std::vector<std::uint64_t> fields{3, 4, 5, 7, 8, 9, 13, 16, 25, 27};
  std::size_t passed = 0, total = 0;
  auto check = [&](const Diagram& d, std::uint64_t q) {
    ++total;
    if (hom_to_units(colimit(d).group, q) == limit_kernel(dual_diagram(d, static_cast<std::int64_t>(q - 1)))) ++passed;
  };
  for (int i = 0; i < 100; ++i) check(random_diagram(rng), fields[rng() % fields.size()]);
  std::size_t diagrams = 0;
  for (const auto& c : std::vector<std::pair<std::string, std::uint64_t>>{{"S7", 3}, {"3^1+2:8", 3}, {"S6", 3}, {"S5", 2}}) {
    const auto L = make_lattice(load_group(c.first), c.second);
    for (CollectionKind k : {CollectionKind::radical, CollectionKind::elementary_abelian}) {
      const Diagram d = normalizer_colimit(ChainClasses(Collection(L, k))).diagram;
      for (std::uint64_t q : {3u, 4u, 7u, 9u}) check(d, q);
      ++diagrams;
    }
  }
  row.pass = passed == total;
  row.detail = std::to_string(passed) + "/" + std::to_string(total) + " checks (100 random, " + std::to_string(diagrams) +
               " normalizer diagrams at 4 fields)";
}

}  // namespace

Diagram random_diagram(std::mt19937_64& rng, std::size_t max_objects, std::size_t max_arrows) {
  static const std::vector<std::int64_t> orders{2, 3, 4, 5, 6, 8, 9, 12};
  Diagram d;
  const std::size_t n = 1 + rng() % max_objects;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::int64_t> cyc;
    const std::size_t k = rng() % 3;
    for (std::size_t i = 0; i < k; ++i) cyc.push_back(orders[rng() % orders.size()]);
    d.objects.push_back(AbGroup::from_cyclic_orders(cyc));
  }
  const std::size_t m = rng() % (max_arrows + 1);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t from = rng() % n, to = rng() % n;
    const AbGroup &s = d.objects[from], &t = d.objects[to];
    IntMatrix mat(s.rank(), IntVec(t.rank(), 0));
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = 0; j < t.rank(); ++j) {
        // Multiples of t_j / gcd(s_i, t_j) are the images of order dividing s_i.
        const std::int64_t step = t.modulus(j) / std::gcd(s.modulus(i), t.modulus(j));
        mat[i][j] = step * static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(t.modulus(j)));
      }
    for (auto& r : mat) r = t.reduce(r);
    d.arrows.push_back({from, to, mat});
  }
  return d;
}

std::vector<int> expected_red_rows() { return {2}; }

std::vector<SuiteRow> acceptance_suite(const std::function<void(const SuiteRow&)>& progress) {
  const std::vector<void (*)(SuiteRow&)> rows{row1, row2, row3, row4, row5, row6, row7, row8, row9, row10, row11, row12};
  std::vector<SuiteRow> out;
  for (auto fn : rows) {
    const auto t0 = Clock::now();
    SuiteRow r;
    try {
      fn(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.limit > 0 && r.seconds > r.limit) {
      r.pass = false;
      r.detail += " (over the time limit)";
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace endotriv
