// Each OpenMP kernel against its serial twin on the same input.

#include <random>

#include <benchmark/benchmark.h>

#include "endotriv/catalog.hpp"
#include "endotriv/endo.hpp"
#include "endotriv/kernels.hpp"
#include "endotriv/steinberg.hpp"

using namespace endotriv;

namespace {

const TablePtr& s7() {
  static const TablePtr t = make_table(load_group("S7"));
  return t;
}

const LatticePtr& lattice(const char* name, std::uint64_t p) {
  static std::map<std::pair<std::string, std::uint64_t>, LatticePtr> cache;
  auto& l = cache[{name, p}];
  if (!l) l = make_lattice(load_group(name), p);
  return l;
}

FqMatrix random_matrix(std::size_t n, std::uint64_t q) {
  std::mt19937_64 rng(42);
  FqMatrix m(n, n);
  for (auto& x : m.data) x = static_cast<FiniteField::Elem>(rng() % q);
  return m;
}

// Elements commuting with a fixed 7-cycle.
auto commutes_with_cycle() {
  const auto& t = *s7();
  const Index c = t.index_of(Perm::parse("(1 2 3 4 5 6 7)", 7));
  return [&t, c](Index x) { return t.mul(x, c) == t.mul(c, x); };
}

void BM_select(benchmark::State& st) {
  auto pred = commutes_with_cycle();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::select(s7()->size(), pred));
}
void BM_select_serial(benchmark::State& st) {
  auto pred = commutes_with_cycle();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::select_serial(s7()->size(), pred));
}

void BM_count(benchmark::State& st) {
  auto pred = commutes_with_cycle();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count(s7()->size(), pred));
}
void BM_count_serial(benchmark::State& st) {
  auto pred = commutes_with_cycle();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_serial(s7()->size(), pred));
}

// The last element is the only match, so the whole range is scanned.
void BM_find_first(benchmark::State& st) {
  const Index last = static_cast<Index>(s7()->size() - 1);
  auto pred = [last](Index x) { return x == last; };
  for (auto _ : st) benchmark::DoNotOptimize(kernels::find_first(s7()->size(), pred));
}
void BM_find_first_serial(benchmark::State& st) {
  const Index last = static_cast<Index>(s7()->size() - 1);
  auto pred = [last](Index x) { return x == last; };
  for (auto _ : st) benchmark::DoNotOptimize(kernels::find_first_serial(s7()->size(), pred));
}

void BM_rank(benchmark::State& st) {
  const FiniteField f(9);
  const FqMatrix m = random_matrix(static_cast<std::size_t>(st.range(0)), 9);
  for (auto _ : st) benchmark::DoNotOptimize(rank(f, m));
}
void BM_rank_serial(benchmark::State& st) {
  const FiniteField f(9);
  const FqMatrix m = random_matrix(static_cast<std::size_t>(st.range(0)), 9);
  for (auto _ : st) benchmark::DoNotOptimize(rank_serial(f, m));
}

void BM_h1(benchmark::State& st) {
  const FinCategory cat(Collection(lattice("S6", 2), CollectionKind::all), CategoryKind::orbit);
  for (auto _ : st) benchmark::DoNotOptimize(h1(cat));
}
void BM_h1_reference(benchmark::State& st) {
  const FinCategory cat(Collection(lattice("S6", 2), CollectionKind::all), CategoryKind::orbit);
  for (auto _ : st) benchmark::DoNotOptimize(h1_reference(cat));
}

struct WeakHomInput {
  LatticePtr l;
  FiniteField f{3};
  std::vector<FiniteField::Elem> table;
};
const WeakHomInput& weak_hom_input() {
  static const WeakHomInput in = [] {
    WeakHomInput w;
    w.l = lattice("S6", 3);
    const CategoryModel m = category_model(w.l, CollectionKind::all, CategoryKind::orbit);
    w.table = character_to_weak_hom(m.category, m.h1, all_characters(m.h1.group, 3)[1], w.f);
    return w;
  }();
  return in;
}

void BM_weak_hom(benchmark::State& st) {
  const auto& w = weak_hom_input();
  for (auto _ : st) benchmark::DoNotOptimize(check_weak_hom(*w.l, w.table, w.f));
}
void BM_weak_hom_serial(benchmark::State& st) {
  const auto& w = weak_hom_input();
  for (auto _ : st) benchmark::DoNotOptimize(check_weak_hom_serial(*w.l, w.table, w.f));
}

}  // namespace

BENCHMARK(BM_select)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_select_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_count)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_count_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_find_first)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_find_first_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_rank)->Arg(256)->Arg(768)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_serial)->Arg(256)->Arg(768)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_h1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_h1_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weak_hom)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weak_hom_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
