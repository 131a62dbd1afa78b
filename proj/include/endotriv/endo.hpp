#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endotriv/collections.hpp"
#include "endotriv/fincat.hpp"
#include "endotriv/finite_field.hpp"

namespace endotriv {

/// Lattice of p-subgroups of a Sylow subgroup; throws MathError when p does
/// not divide |G|.
LatticePtr make_lattice(const Group& g, std::uint64_t p);

/// A category on a collection together with its H_1.
struct CategoryModel {
  Collection collection;
  FinCategory category;
  H1Result h1;
  H1Result h1_pprime;
};
CategoryModel category_model(const LatticePtr& lattice, CollectionKind collection, CategoryKind kind,
                             std::uint64_t seed = 0);

/// H_1 of the orbit category on all nontrivial p-subgroups. Its character
/// group in k^x is T_k(G,S).
AbGroup t_via_orbit(const LatticePtr& lattice);

/// Map out of H_1 of a category induced by an additive function on
/// morphisms (a functor into an abelian group). Values are gauged along
/// the spanning tree first, so the result is independent of the tree.
AbGroupMap functor_map(const FinCategory& cat, const H1Result& h, const AbGroup& target,
                       const std::function<IntVec(std::uint32_t)>& value);

// ----------------------------------------------------------- Carlson-Thevenaz

/// rho^i(Q) for every member Q of the lattice (or only the radical ones),
/// iterated until the whole family is stable.
struct RhoSequence {
  bool radical_only = false;
  /// Lattice members the columns refer to; the Sylow member is last.
  std::vector<std::size_t> members;
  /// steps[i-1][k] = rho^i(members[k]).
  std::vector<std::vector<Subgroup>> steps;
  /// First r with rho^r(S) equal to its final value.
  std::size_t stabilization_step = 1;

  const Subgroup& at(std::size_t i, std::size_t member) const;
  const Subgroup& final_sylow() const { return steps.back().back(); }
};
RhoSequence rho_sequence(const SubgroupLattice& lattice, bool radical_only = false);
/// rho^i(Q) for the lattice member Q, i >= 1.
Subgroup rho(const SubgroupLattice& lattice, std::size_t i, std::size_t member);

struct CtResult {
  AbGroup group;
  std::size_t r = 1;
  /// 1 + length of the longest chain of radical subgroups.
  std::size_t bound = 1;
  Subgroup rho_infinity;
};
/// N_G(S)/rho^r(S). Throws MathError when r exceeds the bound.
CtResult t_via_ct(const LatticePtr& lattice, bool radical_only = false);

// ----------------------------------------------------- normalizer decomposition

struct NormalizerColimit {
  /// One object per chain class: H_1(N_G(sigma))_{p'}; one arrow per face.
  Diagram diagram;
  Colimit colimit;
};
NormalizerColimit normalizer_colimit(const ChainClasses& chains);
AbGroup t_via_normalizer_colimit(const Collection& c);

// ---------------------------------------------------- centralizer decomposition

struct CentralizerReport {
  /// Colimit of H_1(C_G(V))_{p'} over the fusion category on elementary
  /// abelian subgroups.
  AbGroup colim;
  AbGroup h1_fusion;
  AbGroup h1_fusion_pprime;
  AbGroup h1_orbit_pprime;
  /// Restriction arrows act compatibly with the map into H_1 of the
  /// orbit category.
  bool relations_ok = false;
  /// H_1(O) -> H_1(F)_{p'} is onto.
  bool surjective = false;
  /// The colimit maps to zero in H_1(F)_{p'}.
  bool composite_zero = false;
  std::uint64_t image_order = 0, kernel_order = 0;
  bool exact() const { return relations_ok && surjective && composite_zero && image_order == kernel_order; }
  /// H_1(C_G(x))_{p'} = 0 for every x of order p.
  bool centralizers_pprime_trivial = false;
  /// The above together with H_1(F)_{p'} = 0, which forces T = 0.
  bool predicts_zero = false;
};
CentralizerReport t_via_centralizer(const LatticePtr& lattice);

// -------------------------------------------------------------- radicals normal

struct RadicalsNormalResult {
  /// Every radical P < S is normal in S.
  bool simple_hypothesis = false;
  /// N_G(P<=Q<=S) A^{p'}(N_G(P<=Q)) = N_G(P<=Q) for radicals P <= Q < S.
  bool general_hypothesis = false;
  bool applicable() const { return simple_hypothesis || general_hypothesis; }
  std::size_t radical_classes = 0;
  /// Kernel of H^1(N_G(S);k^x) -> sum of H^1(N_G(S) cap A^{p'}(N_G(P));k^x),
  /// over N_G(S)-classes of radicals P < S. Set only when applicable.
  std::optional<AbGroup> kernel;
};
RadicalsNormalResult radicals_normal_kernel(const LatticePtr& lattice, std::uint64_t q);

// -------------------------------------------------------------- fusion bounds

struct FusionBounds {
  AbGroup n_over_s;   // H_1(N_G(S))_{p'}
  AbGroup n_over_sc;  // H_1(N_G(S)/C_G(S))_{p'}
  AbGroup orbit_centric, fusion_centric, orbit_all, fusion_all;  // H_1, p' parts
  AbGroup fusion_centric_full, fusion_all_full;
  bool n_onto_orbit_centric = false;
  bool orbit_centric_onto_orbit = false;
  bool nsc_onto_fusion_centric = false;
  bool fusion_centric_onto_fusion = false;
  bool orbit_onto_fusion = false;
  bool commutes = false;
  /// Every p-centric radical subgroup is centric.
  bool centric_radicals_centric = false;
  /// Checked only when centric_radicals_centric holds.
  std::optional<bool> centric_iso;
  bool ok() const;
};
FusionBounds fusion_bounds(const LatticePtr& lattice);

// -------------------------------------------------------------------- G_0

struct GZeroReport {
  Subgroup g0;
  bool proper = false;
  AbGroup n_over_s, orbit, g0_pprime, g_pprime;
  bool n_onto_orbit = false, orbit_onto_g0 = false, g0_onto_g = false;
  bool ok() const { return n_onto_orbit && orbit_onto_g0 && g0_onto_g; }
};
GZeroReport g_zero_report(const LatticePtr& lattice);

// ----------------------------------------------------------- complement / K_0

struct VanishingK0 {
  bool available = false;
  std::size_t attempts = 0;
  Subgroup k, k0;
  /// (K/K_0)^ab.
  AbGroup quotient;
  /// H_1 of the fusion category of N_G(S) on all its p-subgroups.
  AbGroup fusion_h1;
  bool agrees = false;
  /// For cyclic K = <sigma>: the smallest r >= 1 with sigma^r fixing a
  /// nontrivial element of S.
  std::optional<std::size_t> cyclic_fixed_power;
};
/// Randomized complement search inside N_G(S), seeded from the group.
VanishingK0 vanishing_k0(const LatticePtr& lattice, std::size_t max_attempts = 64);

// ---------------------------------------------------------------- weak homs

/// phi(g) for every element index g: the character value on the orbit
/// category morphism (S cap gSg^-1) -> (S^g cap S) given by g, and 1 when
/// that subgroup is trivial. Needs the orbit category on all p-subgroups.
std::vector<FiniteField::Elem> character_to_weak_hom(const FinCategory& orbit, const H1Result& h,
                                                     const Character& chi, const FiniteField& f);

struct WeakHomCheck {
  bool wh1 = true, wh2 = true, wh3 = true;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  bool ok() const { return wh1 && wh2 && wh3; }
};
/// Exhaustive over all pairs when |G| <= exhaustive_limit, otherwise
/// `samples` random pairs from `seed`.
WeakHomCheck check_weak_hom(const SubgroupLattice& lattice, const std::vector<FiniteField::Elem>& table,
                            const FiniteField& f, std::size_t exhaustive_limit = 10000, std::uint64_t seed = 1,
                            std::size_t samples = 2000000);
WeakHomCheck check_weak_hom_serial(const SubgroupLattice& lattice, const std::vector<FiniteField::Elem>& table,
                                   const FiniteField& f, std::size_t exhaustive_limit = 10000,
                                   std::uint64_t seed = 1, std::size_t samples = 2000000);

// ------------------------------------------------------------------- driver

struct TReport {
  std::string group;
  std::uint64_t order = 0, p = 0, q = 0;
  AbGroup orbit;
  CtResult ct;
  bool ct_fast_agrees = false;
  AbGroup normalizer_bp, normalizer_ap;
  std::size_t chain_classes_bp = 0, chain_classes_ap = 0;
  CentralizerReport centralizer;
  FusionBounds fusion;
  RadicalsNormalResult radicals_normal;
  GZeroReport g0;
  bool consistent = false;
  /// Every auxiliary check (exactness, surjections, radicals-normal
  /// kernel) passed.
  bool diagnostics_ok = false;
  AbGroup t_abstract, t_characters;
};

/// Runs every method and the auxiliary checks. q = 0 picks the smallest
/// power of p whose unit group sees the whole of T.
TReport cross_check(const std::string& name, const Group& g, std::uint64_t p, std::uint64_t q = 0);

}  // namespace endotriv
