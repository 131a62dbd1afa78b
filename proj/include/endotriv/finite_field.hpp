#pragma once

#include <cstdint>
#include <vector>

#include "endotriv/abelian.hpp"

namespace endotriv {

/// GF(q) with elements encoded as integers 0..q-1 (base-p digits are the
/// polynomial coefficients). Multiplication goes through log/exp tables
/// over a primitive element.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Throws InputError unless q is a prime power up to 2^16.
  explicit FiniteField(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  Elem inv(Elem a) const;
  /// omega^k for the chosen primitive element omega, any integer k.
  Elem unit(std::int64_t k) const;
  std::uint32_t log(Elem a) const { return log_[a]; }

 private:
  std::uint64_t q_, p_;
  unsigned m_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // only when q <= 1024
};

/// Character of a finite abelian group into F_q^x: generator i goes to
/// omega^exps[i].
struct Character {
  std::uint64_t q = 2;
  std::vector<std::int64_t> exps;

  bool is_trivial() const;
  /// Exponent of omega at x, in [0, q-1).
  std::int64_t exponent(const IntVec& x) const;
};

/// Every character of `a` into F_q^x, trivial first.
std::vector<Character> all_characters(const AbGroup& a, std::uint64_t q);

/// Smallest q = p^m with exponent(a) dividing q - 1.
std::uint64_t auto_field(const AbGroup& a, std::uint64_t p);

}  // namespace endotriv
