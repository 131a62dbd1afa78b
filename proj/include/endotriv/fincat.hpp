#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "endotriv/collections.hpp"

namespace endotriv {

enum class CategoryKind { transport, orbit, fusion, fusion_orbit };
std::string to_string(CategoryKind k);

/// Payload g: source^g <= target. Payloads are the smallest element of
/// their equivalence class.
struct Morphism {
  std::uint32_t src = 0, tgt = 0;
  Index payload = 0;
};

/// Skeletal finite category on the class representatives of a collection.
/// Hom(P, Q) is the transporter {g : P^g <= Q} modulo
///   transport     nothing
///   orbit         g ~ gq,   q in Q
///   fusion        g ~ cg,   c in C_G(P)
///   fusion_orbit  g ~ cgq
class FinCategory {
 public:
  FinCategory(const Collection& c, CategoryKind kind);

  CategoryKind kind() const { return kind_; }
  const Collection& collection() const { return c_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t object_class(std::size_t o) const { return objects_[o]; }
  const Subgroup& object(std::size_t o) const { return c_.lattice().rep(objects_[o]); }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t object_of_class(std::size_t cls) const { return cls < of_class_.size() ? of_class_[cls] : npos; }
  /// The Sylow object when present, else the last object of largest order.
  std::size_t base_object() const { return base_; }

  std::size_t morphism_count() const { return morphisms_.size(); }
  const Morphism& morphism(std::uint32_t m) const { return morphisms_[m]; }
  /// Morphism ids [first, second) from src to tgt.
  std::pair<std::uint32_t, std::uint32_t> hom(std::size_t src, std::size_t tgt) const {
    return hom_[src * objects_.size() + tgt];
  }
  std::uint32_t identity(std::size_t o) const { return identity_[o]; }
  /// Morphism with payload equivalent to g. Throws MathError when
  /// src^g is not contained in tgt.
  std::uint32_t find(std::size_t src, std::size_t tgt, Index g) const;
  /// f, then h.
  std::uint32_t compose(std::uint32_t f, std::uint32_t h) const;
  /// Morphisms every other one factors through: normalizer generators
  /// on each object and one transporter coset representative per
  /// subgroup of the target conjugate to the source.
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  /// BFS spanning tree of the underlying graph rooted at base_object().
  /// A nonzero seed shuffles the exploration order.
  std::vector<std::uint32_t> spanning_tree(std::uint64_t seed = 0) const;

 private:
  std::vector<Index> label(std::size_t src, std::size_t tgt, Index g) const;

  struct VecHash {
    std::size_t operator()(const std::vector<Index>& v) const;
  };

  Collection c_;
  CategoryKind kind_;
  std::vector<std::size_t> objects_;
  std::vector<std::size_t> of_class_;
  std::size_t base_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hom_;
  std::vector<std::uint32_t> identity_;
  std::vector<std::uint32_t> gens_;
  std::unordered_map<std::vector<Index>, std::uint32_t, VecHash> lookup_;
};

struct H1Result {
  AbGroup group;
  /// Coordinates of every morphism.
  IntMatrix classes;
  /// Row i: integer combination of morphisms mapping to generator i.
  IntMatrix basis_witness;
  /// Seed of the spanning tree whose edges were set to zero.
  std::uint64_t tree_seed = 0;

  const IntVec& class_of(std::uint32_t m) const { return classes[m]; }
};

/// H_1 of the nerve: morphisms modulo identities, a spanning tree and
/// [f;h] = [f] + [h] for f among the generators. Relation assembly runs
/// in parallel.
H1Result h1(const FinCategory& cat, std::uint64_t tree_seed = 0);
/// Same group from every composable pair, assembled serially.
H1Result h1_reference(const FinCategory& cat);
H1Result h1_pprime(const H1Result& h, std::uint64_t p);

/// Class of the morphism src_cls -> tgt_cls with payload g.
IntVec class_of_element(const FinCategory& cat, const H1Result& h, std::size_t src_cls, std::size_t tgt_cls, Index g);

/// Class of X -> Y with payload g for lattice members X, Y in the
/// collection, normalized so that inclusions into the base object vanish.
IntVec normalized_class(const FinCategory& cat, const H1Result& h, std::size_t x_member, std::size_t y_member, Index g);

/// Homomorphism out of H_1 determined by its values on morphisms,
/// evaluated on the basis witnesses.
AbGroupMap map_out_of(const H1Result& h, const AbGroup& target, const std::function<IntVec(std::uint32_t)>& image);

}  // namespace endotriv
