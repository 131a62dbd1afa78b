#pragma once

#include <cstdint>
#include <vector>

#include "endotriv/abelian.hpp"
#include "endotriv/group.hpp"

namespace endotriv {

/// A subgroup of an enumerated ambient group, stored as the sorted list
/// of its element indices together with a small generating set.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generate(TablePtr table, std::vector<Index> gens);
  static Subgroup whole(TablePtr table);
  static Subgroup trivial(TablePtr table);
  /// `elements` must already be a subgroup; generators are chosen greedily.
  static Subgroup from_elements(TablePtr table, std::vector<Index> elements);

  const TablePtr& table_ptr() const { return table_; }
  const ElementTable& table() const { return *table_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Index>& elements() const { return elems_; }
  const std::vector<Index>& generators() const { return gens_; }
  std::vector<Perm> generator_perms() const;
  std::uint64_t key() const { return key_; }

  bool contains(Index x) const;
  bool contains(const Subgroup& h) const;
  bool is_trivial() const { return elems_.size() <= 1; }

  bool operator==(const Subgroup& o) const { return key_ == o.key_ && elems_ == o.elems_; }

 private:
  void finalize();

  TablePtr table_;
  std::vector<Index> elems_;
  std::vector<Index> gens_;
  std::uint64_t key_ = 0;
};

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

Subgroup join(const Subgroup& a, const Subgroup& b);
/// <a, extra>
Subgroup adjoin(const Subgroup& a, const std::vector<Index>& extra);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// g^-1 H g
Subgroup conjugate(const Subgroup& h, Index g);
/// N_K(H) = {k in K : H^k = H}
Subgroup normalizer_in(const Subgroup& k, const Subgroup& h);
/// C_K(H)
Subgroup centralizer_in(const Subgroup& k, const Subgroup& h);
/// Intersection of the normalizers of the members of a strictly
/// increasing chain. Throws InputError on a non-strict chain.
Subgroup chain_normalizer(const Subgroup& k, const std::vector<Subgroup>& chain);
/// Smallest normal subgroup of K containing `seed`.
Subgroup normal_closure(const Subgroup& k, const std::vector<Index>& seed);
Subgroup derived_subgroup(const Subgroup& k);
Subgroup center(const Subgroup& k);
/// A Sylow p-subgroup of K, grown one p-step at a time inside normalizers.
/// Throws MathError when p does not divide |K|.
Subgroup sylow_subgroup(const Subgroup& k, std::uint64_t p);
/// O_p(K): the intersection of the Sylow p-subgroups.
Subgroup p_core(const Subgroup& k, std::uint64_t p);
/// A^{p'}(K) = O^{p'}(K)[K,K].
Subgroup a_pprime(const Subgroup& k, std::uint64_t p);
/// Elements of order dividing p in an abelian group, generated.
Subgroup omega1(const Subgroup& a, std::uint64_t p);

bool is_abelian(const Subgroup& h);
bool is_p_group(const Subgroup& h, std::uint64_t p);
bool is_elementary_abelian(const Subgroup& h, std::uint64_t p);
bool is_normal_in(const Subgroup& n, const Subgroup& k);

/// K/N for N normal in K with abelian quotient: invariant factors and a
/// classifier assigning each element of K its coordinates.
class AbelianQuotient {
 public:
  AbelianQuotient() = default;
  AbelianQuotient(const Subgroup& k, const Subgroup& n);

  const AbGroup& group() const { return group_; }
  const Subgroup& whole() const { return k_; }
  const Subgroup& kernel() const { return n_; }
  /// Coordinates of x, which must lie in K.
  IntVec classify(Index x) const;
  /// An element of K mapping to basis vector i.
  Index witness(std::size_t i) const { return witness_[i]; }

 private:
  Subgroup k_, n_;
  AbGroup group_;
  std::vector<std::uint32_t> coset_of_;  // by position in k_.elements()
  IntMatrix coset_coords_;
  std::vector<Index> witness_;
};

/// H_1(K)_{p'} = K / A^{p'}(K).
AbelianQuotient abelianization_pprime(const Subgroup& k, std::uint64_t p);
/// H_1(K) = K / [K,K].
AbelianQuotient abelianization(const Subgroup& k);

/// Map between abelian quotients induced by x -> x^t (t = identity for
/// inclusions); the source's witnesses are pushed through the target
/// classifier.
AbGroupMap induced_map(const AbelianQuotient& from, const AbelianQuotient& to, Index t = ElementTable::identity());

}  // namespace endotriv
