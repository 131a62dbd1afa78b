#include <doctest.h>

#include <cstdlib>

#include "endotriv/catalog.hpp"
#include "endotriv/subgroup.hpp"
#include "oracles.hpp"

using namespace endotriv;

namespace {

oracle::PermSet as_set(const Subgroup& h) {
  oracle::PermSet out;
  for (Index x : h.elements()) out.insert(h.table().perm(x));
  return out;
}

oracle::PermSet all_elements(const Group& g) { return oracle::closure(g.degree(), g.generators()); }

Subgroup from_perms(const TablePtr& t, const std::vector<Perm>& gens) {
  std::vector<Index> idx;
  for (const auto& g : gens) idx.push_back(t->index_of(g));
  return Subgroup::generate(t, idx);
}

}  // namespace

TEST_SUITE("unit") {

TEST_CASE("perm parsing and products") {
  const Perm a = Perm::parse("(1 2 3)", 3);
  CHECK(a.to_images() == "[1,2,0]");
  CHECK(Perm::parse("[1,2,0]") == a);
  const Perm b = Perm::parse("(1 2)", 3);
  // a then b
  const Perm ab = a * b;
  for (std::size_t i = 0; i < 3; ++i) CHECK(ab[i] == b[a[i]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(b.conjugate_by(a) == a.inverse() * b * a);
  CHECK(Perm::parse("(1 2)(3 4 5)", 6).cycle_type() == std::vector<std::size_t>{1, 2, 3});
  CHECK(Perm::parse(a.to_cycles(), 3) == a);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Perm::parse("[0,0,1]"), InputError);
  CHECK_THROWS_AS(Perm::parse("(1 2 2)", 3), InputError);
  CHECK_THROWS_AS(Perm::parse("(1 4)", 3), InputError);
  CHECK_THROWS_AS(Perm::parse("[1,0]", 3), InputError);
  CHECK_THROWS_AS(Perm::parse("(1 2", 3), InputError);
}

TEST_CASE("group orders agree with closure") {
  for (const char* name : {"S3", "S4", "A5", "D8", "SL(2,3)", "GL(3,2)", "F21", "F20", "S3wrC2", "3^1+2:8", "C6"}) {
    CAPTURE(name);
    const Group g = load_group(name);
    CHECK(g.order() == all_elements(g).size());
    std::uint64_t prod = 1;
    for (auto l : g.fundamental_orbit_lengths()) prod *= l;
    CHECK(prod == g.order());
    for (const auto& x : g.generators()) CHECK(g.contains(x));
  }
  CHECK(load_group("S7").order() == 5040);
  CHECK(load_group("M11").order() == 7920);
  CHECK_FALSE(load_group("A5").contains(Perm::parse("(1 2)", 5)));
}

TEST_CASE("element table") {
  const auto t = make_table(load_group("S4"));
  REQUIRE(t->size() == 24);
  CHECK(t->perm(ElementTable::identity()).is_identity());
  for (Index a = 0; a < t->size(); ++a) {
    CHECK(t->index_of(t->perm(a)) == a);
    CHECK(t->mul(a, t->inverse(a)) == ElementTable::identity());
    CHECK(t->element_order(a) == t->perm(a).order());
    for (Index b = 0; b < t->size(); ++b) {
      CHECK(t->perm(t->mul(a, b)) == t->perm(a) * t->perm(b));
      CHECK(t->perm(t->conj(a, b)) == t->perm(a).conjugate_by(t->perm(b)));
    }
  }
  for (Index a = 1; a < t->size(); ++a) CHECK(t->perm(a - 1) < t->perm(a));
}

TEST_CASE("element cap is enforced") {
  const std::size_t old = element_cap();
  set_element_cap(100);
  CHECK_THROWS_AS(make_table(load_group("S5")), CapExceeded);
  set_element_cap(old);
  CHECK(make_table(load_group("S5"))->size() == 120);
}

TEST_CASE("normalizers, centralizers, derived subgroups against brute force") {
  for (const char* name : {"S4", "SL(2,3)", "F20", "S3wrC2", "GL(3,2)"}) {
    CAPTURE(name);
    const Group g = load_group(name);
    const auto t = make_table(g);
    const Subgroup whole = Subgroup::whole(t);
    const oracle::PermSet all = as_set(whole);
    for (std::uint64_t p : {2u, 3u}) {
      if (g.order() % p) continue;
      const Subgroup s = sylow_subgroup(whole, p);
      CHECK(s.order() == p_part(g.order(), p));
      CHECK(as_set(normalizer_in(whole, s)) == oracle::normalizer(all, as_set(s)));
      CHECK(as_set(centralizer_in(whole, s)) == oracle::centralizer(all, as_set(s)));
      const Subgroup n = normalizer_in(whole, s);
      CHECK(n.contains(s));
      CHECK(is_normal_in(centralizer_in(whole, s), n));
    }
    CHECK(as_set(derived_subgroup(whole)) == oracle::derived(g.degree(), all));
    CHECK(abelianization(whole).group().order() * derived_subgroup(whole).order() == g.order());
  }
}

TEST_CASE("subgroup equality and conjugation") {
  const auto t = make_table(load_group("S4"));
  const Subgroup a = from_perms(t, {Perm::parse("(1 2 3)", 4)});
  const Subgroup b = from_perms(t, {Perm::parse("(1 3 2)", 4)});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  const Subgroup c = conjugate(a, t->index_of(Perm::parse("(3 4)", 4)));
  CHECK_FALSE(a == c);
  CHECK(c.contains(t->index_of(Perm::parse("(1 2 4)", 4))));
  CHECK(intersect(a, c).is_trivial());
  CHECK(join(a, c).order() == 12);
}

TEST_CASE("abelian p'-quotients") {
  // S3 wr C2 at p=3: quotient Z/2 + Z/2.
  {
    const auto t = make_table(load_group("S3wrC2"));
    const AbelianQuotient q = abelianization_pprime(Subgroup::whole(t), 3);
    CHECK(q.group() == AbGroup({2, 2}));
  }
  // Z/12 at p=3: Z/4.
  {
    const auto t = make_table(cyclic_group(12));
    CHECK(abelianization_pprime(Subgroup::whole(t), 3).group() == AbGroup({4}));
    CHECK(abelianization(Subgroup::whole(t)).group() == AbGroup({12}));
  }
  // perfect groups
  for (const char* name : {"A5", "GL(3,2)"}) {
    const auto t = make_table(load_group(name));
    for (std::uint64_t p : {2u, 3u}) CHECK(abelianization_pprime(Subgroup::whole(t), p).group().is_trivial());
  }
}

TEST_CASE("the p'-classifier is a homomorphism") {
  for (const char* name : {"S4", "F20", "SL(2,3)", "S3wrC2"}) {
    CAPTURE(name);
    const auto t = make_table(load_group(name));
    const Subgroup whole = Subgroup::whole(t);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      if (t->size() % p) continue;
      const AbelianQuotient q = abelianization_pprime(whole, p);
      for (Index x = 0; x < t->size(); ++x)
        for (Index y = 0; y < t->size(); ++y) {
          IntVec s = q.classify(x);
          const IntVec cy = q.classify(y);
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += cy[i];
          CHECK(q.group().reduce(s) == q.classify(t->mul(x, y)));
        }
      for (std::size_t i = 0; i < q.group().rank(); ++i) {
        IntVec e = q.group().zero();
        e[i] = 1;
        CHECK(q.classify(q.witness(i)) == e);
      }
    }
  }
}

TEST_CASE("A^{p'} is the smallest normal subgroup with abelian p'-quotient") {
  // Normal subgroups are enumerated as normal closures of sets of elements
  // drawn from a list of conjugacy-class representatives.
  for (const char* name : {"S4", "SL(2,3)", "F20", "D8"}) {
    CAPTURE(name);
    const auto t = make_table(load_group(name));
    const Subgroup whole = Subgroup::whole(t);
    std::vector<Index> reps;
    std::vector<char> seen(t->size(), 0);
    for (Index x = 0; x < t->size(); ++x) {
      if (seen[x]) continue;
      reps.push_back(x);
      for (Index g = 0; g < t->size(); ++g) seen[t->conj(x, g)] = 1;
    }
    REQUIRE(reps.size() <= 12);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      if (t->size() % p) continue;
      const Subgroup n0 = a_pprime(whole, p);
      CHECK(is_normal_in(n0, whole));
      const AbelianQuotient q(whole, n0);
      CHECK(q.group().order() % p != 0);
      for (std::size_t mask = 0; mask < (std::size_t{1} << reps.size()); ++mask) {
        std::vector<Index> seed;
        for (std::size_t i = 0; i < reps.size(); ++i)
          if (mask >> i & 1) seed.push_back(reps[i]);
        const Subgroup m = normal_closure(whole, seed);
        const bool abelian_quotient = derived_subgroup(whole).elements().size() <= m.order() &&
                                      m.contains(derived_subgroup(whole));
        if (!abelian_quotient || (t->size() / m.order()) % p == 0) continue;
        CHECK(m.contains(n0));
      }
    }
  }
}

TEST_CASE("Sylow subgroups and p-cores") {
  const auto t = make_table(load_group("S4"));
  const Subgroup whole = Subgroup::whole(t);
  CHECK(p_core(whole, 2).order() == 4);
  CHECK(p_core(whole, 3).order() == 1);
  CHECK(is_p_group(sylow_subgroup(whole, 2), 2));
  CHECK_THROWS_AS(sylow_subgroup(whole, 5), MathError);
  CHECK(omega1(center(sylow_subgroup(whole, 2)), 2).order() == 2);
}

}  // TEST_SUITE
