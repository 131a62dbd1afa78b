#include "endotriv/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>

namespace endotriv {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("ENDOTRIV_ELEMENT_CAP")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 1'000'000;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

Point first_moved(const Perm& x) {
  for (std::size_t i = 0; i < x.degree(); ++i)
    if (x[i] != i) return static_cast<Point>(i);
  return 0;
}

}  // namespace

std::size_t element_cap() { return cap_storage().load(); }
void set_element_cap(std::size_t cap) { cap_storage().store(cap); }

// ---------------------------------------------------------------- Group

Group Group::from_generators(std::size_t degree, std::vector<Perm> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree));
  Group G;
  G.degree_ = degree;
  G.gens_ = std::move(gens);
  G.schreier_sims();
  return G;
}

void Group::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.transversal.assign(degree_, Perm{});
  L.orbit.clear();
  L.transversal[L.base_point] = Perm(degree_);
  L.orbit.push_back(L.base_point);
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    Point beta = L.orbit[k];
    for (const auto& s : L.strong_gens) {
      Point gamma = s[beta];
      if (L.transversal[gamma].degree() == 0) {
        L.transversal[gamma] = L.transversal[beta] * s;
        L.orbit.push_back(gamma);
      }
    }
  }
}

bool Group::sift(const Perm& x, Perm& residue, std::size_t& drop_level) const {
  // Sifts starting at drop_level (input) and reports where it stopped.
  Perm h = x;
  for (std::size_t j = drop_level; j < levels_.size(); ++j) {
    const Level& L = levels_[j];
    Point beta = h[L.base_point];
    if (L.transversal[beta].degree() == 0) {
      residue = std::move(h);
      drop_level = j;
      return false;
    }
    h = h * L.transversal[beta].inverse();
  }
  if (h.is_identity()) return true;
  residue = std::move(h);
  drop_level = levels_.size();
  return false;
}

void Group::schreier_sims() {
  base_.clear();
  levels_.clear();
  std::vector<Perm> gens;
  for (const auto& g : gens_)
    if (!g.is_identity()) gens.push_back(g);
  if (gens.empty()) {
    order_ = 1;
    return;
  }
  for (const auto& g : gens) {
    bool fixes_all = std::all_of(base_.begin(), base_.end(), [&](Point b) { return g[b] == b; });
    if (fixes_all) base_.push_back(first_moved(g));
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].base_point = base_[i];
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[base_[j]] != base_[j]) fixes_prefix = false;
      if (fixes_prefix) levels_[i].strong_gens.push_back(g);
    }
    rebuild_orbit(i);
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto lev = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[lev].orbit.size() && !restarted; ++oi) {
      Point beta = levels_[lev].orbit[oi];
      for (std::size_t si = 0; si < levels_[lev].strong_gens.size() && !restarted; ++si) {
        const Perm s = levels_[lev].strong_gens[si];
        Perm h = levels_[lev].transversal[beta] * s * levels_[lev].transversal[s[beta]].inverse();
        Perm residue;
        std::size_t drop = lev + 1;
        if (sift(h, residue, drop)) continue;
        if (drop == levels_.size()) {
          Point np = first_moved(residue);
          base_.push_back(np);
          levels_.push_back(Level{np, {}, {}, {}});
        }
        for (std::size_t j = lev + 1; j <= drop; ++j) {
          levels_[j].strong_gens.push_back(residue);
          rebuild_orbit(j);
        }
        i = static_cast<long>(drop);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& L : levels_) {
    if (order_ > UINT64_MAX / L.orbit.size()) throw CapExceeded("group order overflows 64 bits");
    order_ *= L.orbit.size();
  }
}

bool Group::contains(const Perm& x) const {
  if (x.degree() != degree_) return false;
  Perm residue;
  std::size_t drop = 0;
  return sift(x, residue, drop);
}

std::vector<std::size_t> Group::fundamental_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& L : levels_) out.push_back(L.orbit.size());
  return out;
}

// ---------------------------------------------------------- ElementTable

ElementTable::ElementTable(const Group& g, std::size_t cap) : group_(g), degree_(g.degree()) {
  if (g.order() > cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds element cap " +
                      std::to_string(cap));
  count_ = static_cast<std::size_t>(g.order());
  std::size_t capacity = 16;
  while (capacity < 2 * count_) capacity <<= 1;
  mask_ = capacity - 1;

  // Breadth-first closure under the generators.
  data_.reserve(count_ * degree_);
  slots_.assign(capacity, kNoIndex);
  std::size_t n = 0;
  auto insert = [&](std::span<const Point> img) -> bool {
    std::uint64_t h = hash_points(img);
    for (std::uint64_t s = h & mask_;; s = (s + 1) & mask_) {
      Index idx = slots_[s];
      if (idx == kNoIndex) {
        if (n >= count_) throw CapExceeded("enumeration exceeded the BSGS order");
        data_.insert(data_.end(), img.begin(), img.end());
        slots_[s] = static_cast<Index>(n++);
        return true;
      }
      if (std::equal(img.begin(), img.end(), data_.begin() + static_cast<std::ptrdiff_t>(idx) * degree_))
        return false;
    }
  };
  Perm id(degree_);
  insert(id.images());
  std::vector<Point> buf(degree_);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& s : g.generators()) {
      const Point* x = data_.data() + k * degree_;
      for (std::size_t i = 0; i < degree_; ++i) buf[i] = s[x[i]];
      insert(buf);
    }
  }
  if (n != count_) throw MathError("element enumeration disagrees with the BSGS order");

  // Sort lexicographically and rebuild the index.
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::sort(perm.begin(), perm.end(), [&](Index a, Index b) {
    return std::lexicographical_compare(data_.begin() + static_cast<std::ptrdiff_t>(a) * degree_,
                                        data_.begin() + static_cast<std::ptrdiff_t>(a + 1) * degree_,
                                        data_.begin() + static_cast<std::ptrdiff_t>(b) * degree_,
                                        data_.begin() + static_cast<std::ptrdiff_t>(b + 1) * degree_);
  });
  std::vector<Point> sorted(n * degree_);
  for (std::size_t k = 0; k < n; ++k)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(perm[k]) * degree_, degree_,
                sorted.begin() + static_cast<std::ptrdiff_t>(k) * degree_);
  data_ = std::move(sorted);
  slots_.assign(capacity, kNoIndex);
  for (std::size_t k = 0; k < n; ++k) {
    auto img = element(static_cast<Index>(k));
    for (std::uint64_t s = hash_points(img) & mask_;; s = (s + 1) & mask_) {
      if (slots_[s] == kNoIndex) {
        slots_[s] = static_cast<Index>(k);
        break;
      }
    }
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto img = element(static_cast<Index>(k));
    for (std::size_t i = 0; i < degree_; ++i) buf[img[i]] = static_cast<Point>(i);
    inverse_[k] = index_of(buf);
    std::vector<char> seen(degree_, 0);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img[j]) {
        seen[j] = 1;
        ++len;
      }
      o = std::lcm(o, len);
    }
    orders_[k] = static_cast<std::uint32_t>(o);
  }
}

Perm ElementTable::perm(Index i) const {
  auto img = element(i);
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

Index ElementTable::lookup(std::span<const Point> images, std::uint64_t h) const {
  for (std::uint64_t s = h & mask_;; s = (s + 1) & mask_) {
    Index idx = slots_[s];
    if (idx == kNoIndex) return kNoIndex;
    if (std::equal(images.begin(), images.end(),
                   data_.begin() + static_cast<std::ptrdiff_t>(idx) * degree_))
      return idx;
  }
}

Index ElementTable::index_of(std::span<const Point> images) const {
  if (images.size() != degree_) return kNoIndex;
  return lookup(images, hash_points(images));
}

Index ElementTable::mul(Index a, Index b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* x = data_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* y = data_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
  return lookup(buf, hash_points(buf));
}

Index ElementTable::conj(Index x, Index g) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* xs = data_.data() + static_cast<std::size_t>(x) * degree_;
  const Point* gs = data_.data() + static_cast<std::size_t>(g) * degree_;
  for (std::size_t i = 0; i < degree_; ++i) buf[gs[i]] = gs[xs[i]];
  return lookup(buf, hash_points(buf));
}

Index ElementTable::pow(Index a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  e %= static_cast<long long>(element_order(a));
  Index acc = identity();
  for (long long k = 0; k < e; ++k) acc = mul(acc, a);
  return acc;
}

TablePtr make_table(const Group& g, std::size_t cap) { return std::make_shared<const ElementTable>(g, cap); }

}  // namespace endotriv
