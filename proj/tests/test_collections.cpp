#include <doctest.h>

#include <map>

#include "endotriv/catalog.hpp"
#include "endotriv/endo.hpp"
#include "endotriv/steinberg.hpp"
#include "oracles.hpp"

using namespace endotriv;

namespace {

oracle::PermSet as_set(const Subgroup& h) {
  oracle::PermSet out;
  for (Index x : h.elements()) out.insert(h.table().perm(x));
  return out;
}

// Every subgroup in the collection, as element sets, by conjugating the
// class representatives with every element of G.
std::vector<oracle::PermSet> expand(const Collection& c) {
  const auto& l = c.lattice();
  const auto& t = l.table();
  std::set<oracle::PermSet> all;
  for (std::size_t cls : c.classes())
    for (Index g = 0; g < t.size(); ++g) all.insert(as_set(conjugate(l.rep(cls), g)));
  return {all.begin(), all.end()};
}

bool subset(const oracle::PermSet& a, const oracle::PermSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Strict chains by number of members, counted by depth-first search.
std::vector<std::uint64_t> chain_counts(const std::vector<oracle::PermSet>& subs) {
  std::vector<std::uint64_t> counts;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t last, std::size_t len) {
    if (counts.size() <= len) counts.resize(len + 1, 0);
    ++counts[len];
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (subset(subs[last], subs[j])) go(j, len + 1);
  };
  for (std::size_t i = 0; i < subs.size(); ++i) go(i, 0);
  return counts;
}

}  // namespace

TEST_SUITE("unit") {

TEST_CASE("lattice of a Sylow subgroup against brute force") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"S4", 2}, {"S7", 3}, {"D8", 2}, {"3^1+2:8", 3}, {"SL(2,3)", 2}, {"S6", 2}}) {
    CAPTURE(name);
    const auto L = make_lattice(load_group(name), p);
    const auto& s = L->sylow();
    std::map<std::size_t, std::size_t> mine;
    for (std::size_t i = 0; i < L->size(); ++i) {
      ++mine[L->member(i).group.order()];
      CHECK(s.contains(L->member(i).group));
    }
    std::vector<std::size_t> got;
    for (auto& kv : mine) got.push_back(kv.second);
    CHECK(got == oracle::p_subgroup_counts(L->table().degree(), as_set(s)));
    CHECK(L->member(L->sylow_member()).group == s);
  }
}

TEST_CASE("class representatives are pairwise non-conjugate and cover the lattice") {
  const auto L = make_lattice(load_group("S6"), 2);
  const auto& t = L->table();
  for (std::size_t i = 0; i < L->size(); ++i) {
    const auto& m = L->member(i);
    CHECK(conjugate(m.group, m.to_rep) == L->rep(m.cls));
  }
  for (std::size_t a = 0; a < L->class_count(); ++a)
    for (std::size_t b = a + 1; b < L->class_count(); ++b) {
      if (L->rep(a).order() != L->rep(b).order()) continue;
      bool conj = false;
      for (Index g = 0; g < t.size() && !conj; ++g) conj = conjugate(L->rep(a), g) == L->rep(b);
      CHECK_FALSE(conj);
    }
}

TEST_CASE("S7 at p=3: 175 + 70 subgroups and 280 inclusions") {
  const auto L = make_lattice(load_group("S7"), 3);
  const Collection all(L, CollectionKind::all);
  const ChainClasses chains(all);
  const OrderComplex x = order_complex(chains);
  CHECK(x.vertices.size() == 245);
  std::size_t order3 = 0, order9 = 0;
  for (const auto& v : x.vertices) (v.order() == 3 ? order3 : order9)++;
  CHECK(order3 == 175);
  CHECK(order9 == 70);
  REQUIRE(x.complex.simplices.size() == 2);
  CHECK(x.complex.simplices[1].size() == 280);
  CHECK(complex_h1(x.complex.to_delta()) == AbGroup({}, 36));
}

TEST_CASE("chain classes count every chain once") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"S4", 2}, {"S5", 2}, {"S5", 3}, {"GL(3,2)", 2}, {"SL(2,3)", 2}, {"A6", 3}}) {
    CAPTURE(name);
    const auto L = make_lattice(load_group(name), p);
    for (CollectionKind k : {CollectionKind::all, CollectionKind::radical, CollectionKind::elementary_abelian}) {
      CAPTURE(to_string(k));
      const Collection c(L, k);
      const ChainClasses chains(c);
      const auto oracle_counts = chain_counts(expand(c));
      std::vector<std::uint64_t> by_orbit(chains.max_length() + 1, 0);
      for (const auto& cc : chains.classes()) {
        by_orbit[cc.length()] += L->table().size() / cc.stabilizer.order();
        CHECK(cc.stabilizer == chain_normalizer(L->ambient(), chains.subgroups(&cc - chains.classes().data())));
      }
      CHECK(by_orbit == oracle_counts);
      const OrderComplex x = order_complex(chains);
      for (std::size_t n = 0; n < x.complex.simplices.size(); ++n)
        CHECK(x.complex.simplices[n].size() == oracle_counts[n]);
    }
  }
}

TEST_CASE("orbit space counts equal orbit counts of the action") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"S4", 2}, {"S5", 3}, {"A5", 2}}) {
    const auto L = make_lattice(load_group(name), p);
    const ChainClasses chains(Collection(L, CollectionKind::all));
    const OrderComplex x = order_complex(chains);
    const DeltaComplex q = orbit_space(chains);
    const auto counts = orbit_counts(x, L->ambient().generators());
    CHECK(q.counts == counts);
  }
}

TEST_CASE("chains in an antichain collection") {
  // The order-3 classes of S7 at p=3 form an antichain: one chain per class.
  const auto L = make_lattice(load_group("S7"), 3);
  std::vector<std::size_t> small;
  for (std::size_t c = 0; c < L->class_count(); ++c)
    if (L->rep(c).order() == 3) small.push_back(c);
  const ChainClasses chains(Collection::custom(L, small, "order 3"));
  CHECK(chains.classes().size() == small.size());
  CHECK(chains.max_length() == 0);
}

TEST_CASE("collection predicates") {
  const auto L = make_lattice(load_group("S4"), 2);
  const Collection all(L, CollectionKind::all), rad(L, CollectionKind::radical), ea(L, CollectionKind::elementary_abelian);
  CHECK(rad.has_class(L->sylow_class()));
  for (std::size_t c : rad.classes()) CHECK(all.has_class(c));
  for (std::size_t c : ea.classes()) CHECK(is_elementary_abelian(L->rep(c), 2));
  // S4 at 2: radicals are V4 (normal) and the Sylow D8.
  CHECK(rad.classes().size() == 2);
  for (std::size_t c : rad.classes()) CHECK(is_radical(L->ambient(), L->rep(c), 2));
  CHECK(L->longest_radical_chain() == 2);
}

TEST_CASE("g_zero") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"S4", 2}, {"A4", 3}, {"A5", 2}, {"S5", 5}, {"GL(3,2)", 7}, {"S6", 3}}) {
    CAPTURE(name);
    const auto L = make_lattice(load_group(name), p);
    const Subgroup g0 = g_zero(*L);
    CHECK(g0.contains(L->sylow()));
    CHECK(g0.contains(normalizer_in(L->ambient(), L->sylow())));
    const auto L0 = make_lattice(Group::from_generators(L->table().degree(), g0.generator_perms()), p);
    CHECK(g_zero(*L0).order() == g0.order());
  }
  // A4 at p=3: every 3-subgroup is self-normalizing.
  const auto L = make_lattice(load_group("A4"), 3);
  CHECK(g_zero(*L).order() == 3);
}

}  // TEST_SUITE
