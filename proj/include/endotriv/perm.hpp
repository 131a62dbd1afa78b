#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace endotriv {

using Point = std::uint16_t;

/// Raised for malformed permutations and group input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., degree-1} stored as its image list.
///
/// Products compose left to right: `(x * y)[i] == y[x[i]]`, so `x * y`
/// means "apply x, then y". Conjugation follows the right-action
/// convention `x^g = g^-1 * x * g`.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws InputError unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Parses "[2,0,1]" (0-based images) or "(1 2 3)(4 5)" (1-based cycles).
  /// Cycle form needs `degree`; image form infers it and checks it when
  /// `degree` is nonzero.
  static Perm parse(std::string_view text, std::size_t degree = 0);
  static Perm from_cycles(std::string_view text, std::size_t degree);
  static Perm from_images(std::string_view text);
  /// Builds a permutation from 1-based cycles.
  static Perm from_cycle_list(const std::vector<std::vector<std::size_t>>& cycles,
                              std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm conjugate_by(const Perm& g) const;
  Perm pow(long long e) const;

  bool is_identity() const;
  std::size_t order() const;
  /// Sorted cycle lengths (including fixed points).
  std::vector<std::size_t> cycle_type() const;

  std::string to_cycles() const;
  std::string to_images() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

std::uint64_t hash_points(std::span<const Point> images);

}  // namespace endotriv
