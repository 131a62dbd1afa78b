#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "endotriv/subgroup.hpp"

namespace endotriv {

bool is_radical(const Subgroup& g, const Subgroup& p_sub, std::uint64_t p);
/// Z(P) is a Sylow p-subgroup of C_G(P).
bool is_pcentric(const Subgroup& g, const Subgroup& p_sub, std::uint64_t p);
/// Z(P) = C_G(P).
bool is_centric(const Subgroup& g, const Subgroup& p_sub);
/// V elementary abelian with V = Omega_1(Z(C_G(V))).
bool is_benson(const Subgroup& g, const Subgroup& v, std::uint64_t p);

struct LatticeMember {
  Subgroup group;
  std::size_t cls = 0;
  /// group^to_rep is the class representative.
  Index to_rep = ElementTable::identity();
  /// Members strictly containing this one.
  std::vector<std::uint32_t> above;
};

struct ClassInfo {
  std::size_t rep = 0;  // member index
  Subgroup normalizer;
  Subgroup centralizer;
  bool elementary_abelian = false;
  bool radical = false;
  bool pcentric = false;
  bool centric = false;
  bool benson = false;
};

/// Every nontrivial subgroup of a fixed Sylow p-subgroup S, fused into
/// G-conjugacy classes. Members are ordered by increasing order.
class SubgroupLattice {
 public:
  SubgroupLattice(TablePtr table, std::uint64_t p, std::size_t budget = 200000);

  const TablePtr& table_ptr() const { return table_; }
  const ElementTable& table() const { return *table_; }
  const Subgroup& ambient() const { return g_; }
  const Subgroup& sylow() const { return s_; }
  std::uint64_t prime() const { return p_; }

  std::size_t size() const { return members_.size(); }
  const LatticeMember& member(std::size_t i) const { return members_[i]; }
  std::size_t class_count() const { return classes_.size(); }
  const ClassInfo& class_info(std::size_t c) const { return classes_[c]; }
  const Subgroup& rep(std::size_t c) const { return members_[classes_[c].rep].group; }
  std::vector<std::size_t> members_of_class(std::size_t c) const;
  std::size_t sylow_member() const { return members_.size() - 1; }
  std::size_t sylow_class() const { return members_.back().cls; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(const Subgroup& h) const;
  bool strictly_below(std::size_t i, std::size_t j) const;
  Subgroup normalizer(std::size_t member) const;

  /// Number of groups in the longest chain of radical members.
  std::size_t longest_radical_chain() const;

 private:
  void build_members(std::size_t budget);
  void fuse_classes();

  TablePtr table_;
  std::uint64_t p_;
  Subgroup g_, s_;
  std::vector<LatticeMember> members_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_key_;
  std::vector<ClassInfo> classes_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

enum class CollectionKind { all, elementary_abelian, radical, pcentric, centric, benson, custom };
std::string to_string(CollectionKind k);

/// A conjugation-closed family of nontrivial p-subgroups, recorded by
/// G-classes of the lattice.
class Collection {
 public:
  Collection(LatticePtr lattice, CollectionKind kind);
  static Collection custom(LatticePtr lattice, std::vector<std::size_t> classes, std::string name);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  CollectionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<std::size_t>& classes() const { return classes_; }
  bool has_class(std::size_t c) const { return in_[c] != 0; }
  bool has_member(std::size_t m) const { return in_[lattice_->member(m).cls] != 0; }
  std::vector<Subgroup> reps() const;

 private:
  Collection() = default;
  LatticePtr lattice_;
  CollectionKind kind_ = CollectionKind::custom;
  std::string name_;
  std::vector<std::size_t> classes_;
  std::vector<char> in_;
};

Collection all_p_subgroups(LatticePtr lattice);
Collection filter(const Collection& c, CollectionKind kind);

struct ChainClass {
  /// Representative chain of lattice members, strictly increasing.
  std::vector<std::size_t> members;
  /// N_G(P_0 < ... < P_n) of the representative.
  Subgroup stabilizer;
  std::size_t length() const { return members.size() - 1; }
};

/// G-conjugacy classes of strict chains in a collection.
class ChainClasses {
 public:
  explicit ChainClasses(const Collection& c, std::size_t budget = 500000);

  const Collection& collection() const { return c_; }
  const std::vector<ChainClass>& classes() const { return classes_; }
  std::size_t max_length() const;
  std::vector<std::size_t> of_length(std::size_t n) const;
  /// Class of a chain of lattice members and t with chain^t equal to the
  /// representative chain.
  std::pair<std::size_t, Index> identify(const std::vector<std::size_t>& chain) const;
  std::vector<Subgroup> subgroups(std::size_t cls) const;

 private:
  struct Normalized {
    std::vector<Subgroup> chain;  // starts at the class representative of P_0
    Index t0;                     // conjugator applied
  };
  Normalized normalize(const std::vector<std::size_t>& chain) const;
  Index match(const Normalized& a, const Normalized& b, std::size_t cls0) const;
  std::pair<std::size_t, Index> classify(const std::vector<std::size_t>& chain, bool create);

  Collection c_;
  std::vector<ChainClass> classes_;
  std::vector<Normalized> normalized_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets_;
  mutable std::map<std::vector<std::size_t>, std::pair<std::size_t, Index>> cache_;
};

/// Delta-complex: faces[n][i] lists the indices of d_0, ..., d_n of the
/// i-th n-cell (n >= 1) among the (n-1)-cells.
struct DeltaComplex {
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;
  std::size_t dimension() const { return counts.empty() ? 0 : counts.size() - 1; }
};

/// Ordered simplicial complex: simplices[n] holds increasing vertex tuples.
struct SimComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices;
  DeltaComplex to_delta() const;
};

/// The order complex of a collection with its G-action, every subgroup in
/// the collection expanded from the class representatives.
struct OrderComplex {
  SimComplex complex;
  std::vector<Subgroup> vertices;
  std::vector<std::size_t> vertex_class;
  /// vertices[v]^vertex_to_rep[v] is the class representative.
  std::vector<Index> vertex_to_rep;
  std::vector<std::vector<std::size_t>> simplex_chain_class;
  std::map<std::vector<std::uint32_t>, std::uint32_t> simplex_index;
  std::unordered_multimap<std::uint64_t, std::uint32_t> vertex_by_key;

  std::uint32_t vertex_of(const Subgroup& h) const;
  /// Image of vertex v under g.
  std::uint32_t act_vertex(Index g, std::uint32_t v) const;
  std::uint32_t act(Index g, std::size_t dim, std::uint32_t simplex) const;
};

OrderComplex order_complex(const ChainClasses& chains, std::size_t budget = 2000000);
/// |C|/G built directly from chain classes.
DeltaComplex orbit_space(const ChainClasses& chains);
/// Orbit counts per dimension of an expanded complex under a set of
/// group elements, by union-find.
std::vector<std::size_t> orbit_counts(const OrderComplex& x, const std::vector<Index>& gens);

/// Generated by N_G(Q) over all members Q of the lattice.
Subgroup g_zero(const SubgroupLattice& lattice);

}  // namespace endotriv
