#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace endotriv {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;
using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// U * M * V = D with D diagonal, diagonal entries nonnegative and
/// forming a divisibility chain; U and V unimodular. `V_inv` is V^-1.
struct SmithForm {
  BigMatrix D, U, V, V_inv;
  std::vector<BigInt> diagonal;  // the first `rank` entries are nonzero
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const BigMatrix& M);
BigMatrix to_big(const IntMatrix& M);

/// Integer row vectors x with x * M = 0, as the rows of a basis.
BigMatrix left_kernel(const BigMatrix& M, std::size_t rows);

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r with
/// d1 | d2 | ... | dk and every di >= 2. Generators are ordered torsion
/// first, then free.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::vector<std::int64_t> torsion, std::size_t free_rank = 0);
  /// Direct sum of cyclic groups of arbitrary orders, normalized.
  static AbGroup from_cyclic_orders(const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t rank() const { return torsion_.size() + free_rank_; }
  /// Order of generator i, 0 for a free generator.
  std::int64_t modulus(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : 0; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }
  /// Order of a finite group; throws on free rank.
  std::uint64_t order() const;
  std::int64_t exponent() const;
  IntVec reduce(IntVec x) const;
  IntVec zero() const { return IntVec(rank(), 0); }
  std::string str() const;

  bool operator==(const AbGroup&) const = default;

 private:
  std::vector<std::int64_t> torsion_;
  std::size_t free_rank_ = 0;
};

/// Homomorphism given on generators: row i is the image of source
/// generator i in target coordinates (row-vector convention).
struct AbGroupMap {
  AbGroup source, target;
  IntMatrix matrix;

  static AbGroupMap zero(const AbGroup& s, const AbGroup& t);
  IntVec apply(const IntVec& x) const;
  /// this, then `next`.
  AbGroupMap then(const AbGroupMap& next) const;
  bool is_zero() const;
};

/// Result of reducing a presentation <x_1..x_n | relations>.
struct Presented {
  AbGroup group;
  /// Coordinates of each presentation generator in `group`.
  IntMatrix gen_images;
  /// For each generator of `group`, an integer combination of
  /// presentation generators that maps to it.
  IntMatrix basis_witness;
};

Presented present(std::size_t ngens, const BigMatrix& relations);
Presented present(std::size_t ngens, const IntMatrix& relations);

struct PPrimePart {
  AbGroup group;
  AbGroupMap projection;
};

/// Quotient by the p-torsion. Throws MathError on free rank.
PPrimePart pprime_part(const AbGroup& a, std::uint64_t p);

/// Returns true with p, m when q = p^m, m >= 1.
bool prime_power(std::uint64_t q, std::uint64_t* p = nullptr, unsigned* m = nullptr);
bool is_prime(std::uint64_t n);

/// Hom(A, Z/n); generator j is the character sending source generator
/// `component[j]` to n / gcd(d, n) and the others to 0.
struct DualGroup {
  AbGroup group;
  std::vector<std::size_t> component;
  std::int64_t n = 1;
};
DualGroup dual_group(const AbGroup& a, std::int64_t n);
/// Hom(B, Z/n) -> Hom(A, Z/n), precomposition with f.
AbGroupMap dual_map(const AbGroupMap& f, std::int64_t n);

/// Hom(A, F_q^x) as an abstract group: sum of Z/gcd(di, q-1).
AbGroup hom_to_units(const AbGroup& a, std::uint64_t q);

struct Diagram {
  struct Arrow {
    std::size_t from = 0, to = 0;
    IntMatrix matrix;
  };
  std::vector<AbGroup> objects;
  std::vector<Arrow> arrows;

  AbGroupMap arrow_map(std::size_t a) const;
};

struct Colimit {
  AbGroup group;
  std::vector<AbGroupMap> injections;
};

/// Sum of the objects modulo x - f(x) for every arrow f.
Colimit colimit(const Diagram& d);
/// {(x_v) : f_a(x_from) = x_to for every arrow a}.
AbGroup limit_kernel(const Diagram& d);
/// Objects replaced by Hom(-, Z/n), arrows reversed and dualized.
Diagram dual_diagram(const Diagram& d, std::int64_t n);

struct Kernel {
  AbGroup group;
  /// Row i: generator i of the kernel in source coordinates.
  IntMatrix inclusion;
};
Kernel kernel(const AbGroupMap& f);
AbGroup cokernel(const AbGroupMap& f);
bool is_surjective(const AbGroupMap& f);
/// Order of the image of a map out of a finite group.
std::uint64_t image_order(const AbGroupMap& f);

/// Sparse presentation reducer. Variables with a unit coefficient in a
/// relation are eliminated as they arrive; what survives goes through a
/// dense Smith normal form.
class RelationReducer {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  static constexpr std::uint32_t kAny = std::numeric_limits<std::uint32_t>::max();

  explicit RelationReducer(std::size_t nvars);
  std::size_t variables() const { return defs_.size(); }
  /// Adds the relation sum(c * x_v) = 0, eliminating `preferred` if it
  /// ends up with a unit coefficient.
  void add(Row row, std::uint32_t preferred = kAny);
  void kill(std::uint32_t v) { add({{v, 1}}, v); }
  /// Presentation of Z^n / relations; gen_images has one row per variable.
  Presented finish();
  /// Variables never eliminated so far.
  std::vector<std::uint32_t> live() const;

 private:
  Row resolve_row(const Row& row);
  const Row& resolve(std::uint32_t v);

  std::vector<Row> defs_;
  std::vector<char> dead_;
  std::vector<Row> residual_;
};

}  // namespace endotriv
