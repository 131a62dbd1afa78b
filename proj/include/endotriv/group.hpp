#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "endotriv/perm.hpp"

namespace endotriv {

using Index = std::uint32_t;
inline constexpr Index kNoIndex = ~Index{0};

/// Raised when a computation would exceed a configured size budget.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a precondition on the mathematical input fails
/// (for example p not dividing |G|).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global element-enumeration cap. Defaults to 10^6 and can be overridden
/// with the ENDOTRIV_ELEMENT_CAP environment variable.
std::size_t element_cap();
void set_element_cap(std::size_t cap);

/// A permutation group given by generators, with a base and strong
/// generating set computed by the deterministic Schreier-Sims algorithm.
class Group {
 public:
  Group() = default;
  static Group from_generators(std::size_t degree, std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  /// Product of the fundamental orbit lengths.
  std::uint64_t order() const { return order_; }
  bool contains(const Perm& x) const;

  const std::vector<Point>& base() const { return base_; }
  std::vector<std::size_t> fundamental_orbit_lengths() const;

 private:
  struct Level {
    Point base_point;
    std::vector<Perm> strong_gens;
    // transversal[pt] maps base_point to pt; empty when pt is outside the orbit.
    std::vector<Perm> transversal;
    std::vector<Point> orbit;
  };

  void rebuild_orbit(std::size_t level);
  bool sift(const Perm& x, Perm& residue, std::size_t& drop_level) const;
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Every element of a finite permutation group, sorted lexicographically by
/// image list (so index 0 is the identity), with a hash index for lookup and
/// precomputed inverses and element orders.
class ElementTable {
 public:
  /// Throws CapExceeded when |G| is above `cap`.
  explicit ElementTable(const Group& g, std::size_t cap = element_cap());

  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }
  const Group& group() const { return group_; }

  std::span<const Point> element(Index i) const {
    return {data_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Perm perm(Index i) const;
  Index index_of(std::span<const Point> images) const;
  Index index_of(const Perm& p) const { return index_of(p.images()); }

  static constexpr Index identity() { return 0; }
  Index inverse(Index a) const { return inverse_[a]; }
  std::uint32_t element_order(Index a) const { return orders_[a]; }
  /// a then b.
  Index mul(Index a, Index b) const;
  /// g^-1 x g.
  Index conj(Index x, Index g) const;
  Index pow(Index a, long long e) const;

 private:
  Index lookup(std::span<const Point> images, std::uint64_t h) const;

  Group group_;
  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<Index> slots_;
  std::uint64_t mask_ = 0;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> orders_;
};

using TablePtr = std::shared_ptr<const ElementTable>;

TablePtr make_table(const Group& g, std::size_t cap = element_cap());

}  // namespace endotriv
