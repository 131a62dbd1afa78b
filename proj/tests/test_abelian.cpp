#include <doctest.h>

#include <algorithm>
#include <random>

#include "endotriv/abelian.hpp"
#include "endotriv/finite_field.hpp"
#include "endotriv/suite.hpp"
#include "oracles.hpp"

using namespace endotriv;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  IntMatrix m(rows, IntVec(cols));
  std::uniform_int_distribution<int> d(-range, range);
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

AbGroup oracle_group(const IntMatrix& m, std::size_t cols) {
  auto [f, free] = oracle::invariant_factors(m, cols);
  return AbGroup(f, free);
}

}  // namespace

TEST_SUITE("unit") {

TEST_CASE("AbGroup normal form") {
  CHECK(AbGroup::from_cyclic_orders({4, 6}) == AbGroup({2, 12}));
  CHECK(AbGroup::from_cyclic_orders({1, 3, 5}) == AbGroup({15}));
  CHECK(AbGroup::from_cyclic_orders({2, 0}) == AbGroup({2}, 1));
  CHECK(AbGroup({2, 2}).str() == "Z/2 + Z/2");
  CHECK(AbGroup().str() == "0");
  CHECK(AbGroup({2, 6}).order() == 12);
  CHECK(AbGroup({2, 6}).exponent() == 6);
  CHECK_THROWS(AbGroup({6, 2}));
}

TEST_CASE("presentations agree with determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, trial < 150 ? 3 : 9);
    CAPTURE(trial);
    CHECK(present(cols, m).group == oracle_group(m, cols));
  }
}

TEST_CASE("Smith form is U M V = D") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 4, 6);
    const SmithForm s = smith_normal_form(to_big(m));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        BigInt acc = 0;
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 4; ++b) acc += s.U[i][a] * BigInt(m[a][b]) * s.V[b][j];
        CHECK(acc == s.D[i][j]);
      }
    for (std::size_t i = 1; i < s.rank; ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
  }
}

TEST_CASE("invariant factors do not depend on row or column order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 5, 8);
    const AbGroup a = present(5, m).group;
    std::shuffle(m.begin(), m.end(), rng);
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix n(4, IntVec(5));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) n[i][j] = m[i][perm[j]];
    CHECK(present(5, n).group == a);
  }
}

TEST_CASE("presentation witnesses and generator images are consistent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 4, 5);
    const Presented pr = present(4, m);
    // every relation maps to zero
    for (const auto& rel : m) {
      IntVec s = pr.group.zero();
      for (std::size_t v = 0; v < 4; ++v)
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rel[v] * pr.gen_images[v][i];
      CHECK(pr.group.reduce(s) == pr.group.zero());
    }
    // witnesses map to basis vectors
    for (std::size_t g = 0; g < pr.group.rank(); ++g) {
      IntVec s = pr.group.zero();
      for (std::size_t v = 0; v < 4; ++v)
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += pr.basis_witness[g][v] * pr.gen_images[v][i];
      IntVec e = pr.group.zero();
      e[g] = 1;
      CHECK(pr.group.reduce(s) == e);
    }
  }
}

TEST_CASE("sparse reducer matches the dense presentation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const IntMatrix m = random_matrix(rng, 1 + rng() % 5, n, 3);
    RelationReducer red(n);
    for (const auto& row : m) {
      RelationReducer::Row r;
      for (std::size_t v = 0; v < n; ++v)
        if (row[v]) r.push_back({static_cast<std::uint32_t>(v), row[v]});
      red.add(r);
    }
    CHECK(red.finish().group == oracle_group(m, n));
  }
}

TEST_CASE("p'-parts, kernels and cokernels") {
  const PPrimePart pp = pprime_part(AbGroup({2, 12}), 2);
  CHECK(pp.group == AbGroup({3}));
  CHECK(is_surjective(pp.projection));
  CHECK(pprime_part(AbGroup({6, 18}), 3).group == AbGroup({2, 2}));
  CHECK_THROWS_AS(pprime_part(AbGroup({}, 1), 2), std::exception);

  // Z/4 -> Z/2 reduction
  AbGroupMap f{AbGroup({4}), AbGroup({2}), {{1}}};
  CHECK(kernel(f).group == AbGroup({2}));
  CHECK(cokernel(f).is_trivial());
  CHECK(image_order(f) == 2);
  // Z/2 -> Z/4 inclusion
  AbGroupMap g{AbGroup({2}), AbGroup({4}), {{2}}};
  CHECK(kernel(g).group.is_trivial());
  CHECK(cokernel(g) == AbGroup({2}));
  CHECK(f.then(g).matrix == IntMatrix{{2}});
  CHECK(g.then(f).is_zero());
}

TEST_CASE("prime powers") {
  std::uint64_t p = 0;
  unsigned m = 0;
  CHECK(prime_power(27, &p, &m));
  CHECK(p == 3);
  CHECK(m == 3);
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("characters into a field") {
  CHECK(hom_to_units(AbGroup({2, 2}), 3) == AbGroup({2, 2}));
  CHECK(hom_to_units(AbGroup({8}), 3) == AbGroup({2}));
  CHECK(hom_to_units(AbGroup({8}), 9) == AbGroup({8}));
  CHECK(hom_to_units(AbGroup({3}), 4) == AbGroup({3}));
  CHECK(auto_field(AbGroup({8}), 3) == 9);
  CHECK(auto_field(AbGroup({3}), 2) == 4);
  CHECK(auto_field(AbGroup(), 5) == 5);
  const auto chars = all_characters(AbGroup({2, 4}), 5);
  CHECK(chars.size() == 8);
  CHECK(chars.front().is_trivial());
  const DualGroup d = dual_group(AbGroup({2, 4}), 6);
  CHECK(d.group == AbGroup({2, 2}));
}

TEST_CASE("colimits") {
  // Z/4 -> Z/2 <- Z/6: colimit is the pushout.
  Diagram d;
  d.objects = {AbGroup({4}), AbGroup({2}), AbGroup({6})};
  d.arrows = {{0, 1, {{1}}}, {2, 1, {{1}}}};
  CHECK(colimit(d).group == AbGroup({2}));
  // A terminal object through which everything factors.
  Diagram t;
  t.objects = {AbGroup({3}), AbGroup({6}), AbGroup({2, 6})};
  t.arrows = {{0, 1, {{2}}}, {1, 2, {{0, 1}}}, {0, 2, {{0, 2}}}};
  CHECK(colimit(t).group == AbGroup({2, 6}));
  // Zero differences: the direct sum.
  Diagram z;
  z.objects = {AbGroup({2}), AbGroup({3})};
  CHECK(colimit(z).group == AbGroup({6}));
  // A single vertex: its characters.
  Diagram one;
  one.objects = {AbGroup({4})};
  CHECK(limit_kernel(dual_diagram(one, 4)) == AbGroup({4}));
}

TEST_CASE("duality on random diagrams") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Diagram d = random_diagram(rng);
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 16u}) {
      CAPTURE(i);
      CHECK(hom_to_units(colimit(d).group, q) == limit_kernel(dual_diagram(d, static_cast<std::int64_t>(q - 1))));
    }
  }
}

TEST_CASE("finite field arithmetic") {
  for (std::uint64_t q : {2u, 3u, 4u, 8u, 9u, 25u, 27u, 49u, 64u}) {
    CAPTURE(q);
    const FiniteField f(q);
    for (FiniteField::Elem a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (FiniteField::Elem b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (FiniteField::Elem c = 0; c < q; c += 3) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    CHECK(f.unit(static_cast<std::int64_t>(q - 1)) == 1);
    CHECK(f.unit(-1) == f.inv(f.unit(1)));
  }
  CHECK_THROWS_AS(FiniteField(6), InputError);
}

}  // TEST_SUITE
