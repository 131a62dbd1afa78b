#include <doctest.h>

#include "endotriv/catalog.hpp"
#include "endotriv/endo.hpp"
#include "endotriv/report.hpp"

using namespace endotriv;

TEST_SUITE("unit") {

TEST_CASE("lattice preconditions") {
  CHECK_THROWS_AS(make_lattice(load_group("S4"), 5), MathError);
  CHECK_THROWS_AS(make_lattice(load_group("S4"), 4), InputError);
  CHECK_THROWS_AS(make_lattice(load_group("S4"), 1), InputError);
}

TEST_CASE("small values of T") {
  CHECK(t_via_orbit(make_lattice(cyclic_group(3), 3)).is_trivial());
  CHECK(t_via_orbit(make_lattice(load_group("A4"), 3)).is_trivial());
  CHECK(t_via_orbit(make_lattice(load_group("S3"), 3)) == AbGroup({2}));
  CHECK(t_via_orbit(make_lattice(load_group("S7"), 3)) == AbGroup({2, 2}));
  CHECK(t_via_orbit(make_lattice(load_group("3^1+2:8"), 3)) == AbGroup({8}));
}

TEST_CASE("rho is increasing and stabilizes within the bound") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"S7", 3}, {"S5", 2}, {"GL(3,2)", 2}, {"S6", 3}}) {
    CAPTURE(name);
    const auto L = make_lattice(load_group(name), p);
    const RhoSequence seq = rho_sequence(*L);
    for (std::size_t i = 1; i < seq.steps.size(); ++i)
      for (std::size_t k = 0; k < seq.members.size(); ++k) CHECK(seq.steps[i][k].contains(seq.steps[i - 1][k]));
    const CtResult ct = t_via_ct(L);
    CHECK(ct.r <= ct.bound);
    CHECK(ct.bound == L->longest_radical_chain());
    CHECK(ct.group == t_via_orbit(L));
    CHECK(t_via_ct(L, true).group == ct.group);
    CHECK(rho(*L, 1, L->sylow_member()) == a_pprime(L->normalizer(L->sylow_member()), p));
  }
}

TEST_CASE("S7 at p=3: rho stabilizes at the first step") {
  const auto L = make_lattice(load_group("S7"), 3);
  const CtResult ct = t_via_ct(L);
  CHECK(ct.r == 1);
  CHECK(ct.bound == 2);
  CHECK(ct.rho_infinity.order() == 18);
}

TEST_CASE("normalizer colimits over B_p and A_p") {
  const auto L = make_lattice(load_group("S7"), 3);
  for (CollectionKind k : {CollectionKind::radical, CollectionKind::elementary_abelian, CollectionKind::all}) {
    const ChainClasses chains(Collection(L, k));
    const NormalizerColimit n = normalizer_colimit(chains);
    CHECK(n.diagram.objects.size() == chains.classes().size());
    CHECK(n.colimit.group == AbGroup({2, 2}));
    CHECK(limit_kernel(dual_diagram(n.diagram, 2)) == AbGroup({2, 2}));
  }
}

TEST_CASE("centralizer decomposition") {
  const auto L = make_lattice(load_group("S7"), 3);
  const CentralizerReport r = t_via_centralizer(L);
  CHECK(r.exact());
  CHECK(r.h1_orbit_pprime == AbGroup({2, 2}));
  CHECK_FALSE(r.predicts_zero);
  const CentralizerReport a = t_via_centralizer(make_lattice(load_group("A5"), 2));
  CHECK(a.exact());
}

TEST_CASE("p-rank one: T is H1 of the normalizer of Omega_1 Z(S)") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"S3", 3}, {"A4", 3}, {"F21", 7}, {"F20", 5}, {"A5", 5}}) {
    CAPTURE(name);
    const auto L = make_lattice(load_group(name), p);
    const Subgroup z = omega1(center(L->sylow()), p);
    CHECK(abelianization_pprime(normalizer_in(L->ambient(), z), p).group() == t_via_orbit(L));
  }
}

TEST_CASE("strongly p-embedded G_0 gives the same T") {
  struct Case {
    const char* g;
    std::uint64_t p;
    Group g0;
  };
  const std::vector<Case> cases{{"A4", 3, cyclic_group(3)},
                                {"GL(3,2)", 7, load_group("F21")},
                                {"A5", 5, dihedral_group(5)}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    const auto L = make_lattice(load_group(c.g), c.p);
    const GZeroReport r = g_zero_report(L);
    CHECK(r.proper);
    CHECK(r.g0.order() == c.g0.order());
    CHECK(t_via_orbit(L) == t_via_orbit(make_lattice(c.g0, c.p)));
  }
}

TEST_CASE("radicals-normal kernel") {
  RadicalsNormalResult none;
  CHECK_FALSE(none.applicable());
  none.general_hypothesis = true;
  CHECK(none.applicable());

  // S5 at 2: some radical is not normal in S, the general form still holds.
  const auto L = make_lattice(load_group("S5"), 2);
  const RadicalsNormalResult r = radicals_normal_kernel(L, 3);
  CHECK_FALSE(r.simple_hypothesis);
  CHECK(r.general_hypothesis);
  REQUIRE(r.kernel);
  CHECK(*r.kernel == hom_to_units(t_via_orbit(L), 3));

  const auto L7 = make_lattice(load_group("S7"), 3);
  const RadicalsNormalResult r7 = radicals_normal_kernel(L7, 3);
  CHECK(r7.simple_hypothesis);
  REQUIRE(r7.kernel);
  CHECK(*r7.kernel == AbGroup({2, 2}));
}

TEST_CASE("fusion bounds") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"S7", 3}, {"3^1+2:8", 3}, {"D8", 2}}) {
    CAPTURE(name);
    const FusionBounds b = fusion_bounds(make_lattice(load_group(name), p));
    CHECK(b.ok());
    CHECK(b.n_onto_orbit_centric);
    CHECK(b.orbit_onto_fusion);
  }
}

TEST_CASE("extraspecial 3^(1+2) extended by an element of order 8") {
  const Group g = load_group("3^1+2:8");
  CHECK(g.order() == 216);
  const Perm sigma = g.generators().back();
  CHECK(sigma.order() == 8);
  // odd powers of sigma fix only the identity of the normal subgroup
  for (int k = 1; k < 8; ++k) {
    const Perm s = sigma.pow(k);
    std::size_t fixed = 0;
    for (std::size_t x = 0; x < 27; ++x) fixed += s[x] == x ? 1 : 0;
    CHECK(fixed == (k % 2 ? 1u : 3u));
  }
  const auto L = make_lattice(g, 3);
  const CentralizerReport c = t_via_centralizer(L);
  CHECK(c.h1_fusion == AbGroup({2}));
  const VanishingK0 v = vanishing_k0(L);
  REQUIRE(v.available);
  CHECK(v.k.order() == 8);
  CHECK(v.quotient == AbGroup({2}));
  CHECK(v.agrees);
  REQUIRE(v.cyclic_fixed_power);
  CHECK(*v.cyclic_fixed_power == 2);
}

TEST_CASE("complement of S in N_G(S) for S7 at p=3") {
  const VanishingK0 v = vanishing_k0(make_lattice(load_group("S7"), 3));
  REQUIRE(v.available);
  CHECK(v.k.order() == 8);
  CHECK_FALSE(is_abelian(v.k));
  CHECK(v.k0 == v.k);
  CHECK(v.quotient.is_trivial());
  CHECK(v.agrees);
}

TEST_CASE("weak homomorphisms") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"S4", 3}, {"A5", 2}, {"SL(2,3)", 2}, {"S5", 5}}) {
    CAPTURE(name);
    const auto L = make_lattice(load_group(name), p);
    const CategoryModel m = category_model(L, CollectionKind::all, CategoryKind::orbit);
    const std::uint64_t q = auto_field(m.h1.group, p);
    const FiniteField f(q);
    std::vector<std::vector<FiniteField::Elem>> tables;
    for (const auto& chi : all_characters(m.h1.group, q)) {
      tables.push_back(character_to_weak_hom(m.category, m.h1, chi, f));
      const WeakHomCheck w = check_weak_hom(*L, tables.back(), f);
      CHECK(w.ok());
      CHECK(w.exhaustive);
      CHECK(w.pairs_checked == L->table().size() * L->table().size());
      const WeakHomCheck s = check_weak_hom_serial(*L, tables.back(), f);
      CHECK(s.ok());
      CHECK(s.pairs_checked == w.pairs_checked);
    }
    for (std::size_t a = 0; a < tables.size(); ++a)
      for (std::size_t b = a + 1; b < tables.size(); ++b) CHECK(tables[a] != tables[b]);
  }
}

TEST_CASE("corrupted weak homomorphism tables are rejected") {
  const auto L = make_lattice(load_group("S5"), 3);
  const CategoryModel m = category_model(L, CollectionKind::all, CategoryKind::orbit);
  const FiniteField f(3);
  const auto chars = all_characters(m.h1.group, 3);
  REQUIRE(chars.size() == 4);
  const auto good = character_to_weak_hom(m.category, m.h1, chars[1], f);
  {
    auto bad = good;
    bad[L->sylow().elements()[1]] = 2;
    CHECK_FALSE(check_weak_hom(*L, bad, f).wh1);
  }
  std::size_t rejected = 0, tried = 0;
  for (Index g = 0; g < L->table().size(); g += 7) {
    if (L->sylow().contains(g)) continue;
    auto bad = good;
    bad[g] = bad[g] == 1 ? 2 : 1;
    ++tried;
    rejected += check_weak_hom(*L, bad, f).ok() ? 0 : 1;
  }
  CHECK(rejected == tried);
  // sampled mode still runs WH1 and WH2 exhaustively
  const WeakHomCheck sampled = check_weak_hom(*L, good, f, 10, 3, 5000);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.ok());
}

TEST_CASE("cross check") {
  const TReport r = cross_check("S7", load_group("S7"), 3, 3);
  CHECK(r.consistent);
  CHECK(r.diagnostics_ok);
  CHECK(r.t_characters == AbGroup({2, 2}));
  CHECK(r.q == 3);
  CHECK_THROWS_AS(cross_check("S7", load_group("S7"), 3, 4), InputError);
  const TReport e = cross_check("3^1+2:8", load_group("3^1+2:8"), 3);
  CHECK(e.q == 9);
  CHECK(e.t_characters == AbGroup({8}));
  CHECK(cross_check("3^1+2:8", load_group("3^1+2:8"), 3, 3).t_characters == AbGroup({2}));
}

TEST_CASE("JSON reports are deterministic") {
  const std::string a = to_json(cross_check("S6", load_group("S6"), 3)).dump();
  const std::string b = to_json(cross_check("S6", load_group("S6"), 3)).dump();
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["consistent"] == true);
  CHECK(j["T_abstract"]["torsion"] == Json::array({2, 2}));
}

}  // TEST_SUITE
