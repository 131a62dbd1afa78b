#pragma once

#include <cstdint>
#include <vector>

#include "endotriv/collections.hpp"
#include "endotriv/fincat.hpp"
#include "endotriv/finite_field.hpp"

namespace endotriv {

struct FqMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<FiniteField::Elem> data;

  FqMatrix() = default;
  FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  FiniteField::Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  FiniteField::Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank by Gaussian elimination; the row updates below each pivot run in
/// parallel for large matrices.
std::size_t rank(const FiniteField& f, FqMatrix m);
std::size_t rank_serial(const FiniteField& f, FqMatrix m);
FqMatrix multiply(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);

/// boundary[n] maps C_n to C_{n-1} (a dims[n-1] x dims[n] matrix);
/// boundary[0] is empty.
struct FqComplex {
  std::vector<std::size_t> dims;
  std::vector<FqMatrix> boundary;
};

bool squares_to_zero(const FiniteField& f, const FqComplex& c);
std::vector<std::size_t> homology_dims(const FiniteField& f, const FqComplex& c);
std::int64_t euler_characteristic(const std::vector<std::size_t>& dims);

/// Chain complex of the order complex with coefficients twisted by a
/// character of H_1 of the orbit category. The d_0 face of a simplex
/// starting at P_0 < P_1 carries the character value on the class of
/// P_0 -> P_1; units are gauged so that a BFS spanning forest of the
/// 1-skeleton carries 1. A nonzero seed randomizes the conjugators to the
/// class representatives and the forest.
FqComplex twisted_complex(const OrderComplex& x, const FinCategory& orbit, const H1Result& h, const Character& chi,
                          const FiniteField& f, std::uint64_t seed = 0);

/// Sum over chain classes of (-1)^n |G|/|N_G(sigma)|, minus one.
std::int64_t reduced_euler(const ChainClasses& chains);
bool brown_congruence(const ChainClasses& chains);

/// Integral homology H_0, ..., H_dim of a Delta-complex.
std::vector<AbGroup> integral_homology(const DeltaComplex& d);
std::vector<AbGroup> reduced_homology(const DeltaComplex& d);
AbGroup complex_h1(const DeltaComplex& d);

/// Group presentation; letters are +-(i+1) for generator i.
struct Presentation {
  std::size_t generators = 0;
  std::vector<std::vector<int>> relators;
  bool is_trivial() const { return generators == 0; }
};

/// Edge-path presentation of pi_1 at vertex 0: generators are the edges
/// off a BFS spanning tree, relations come from the 2-cells.
Presentation edge_path_presentation(const DeltaComplex& d);
/// Tietze moves: drop trivial relators, eliminate generators occurring
/// once in a relator. Stops when nothing applies or the total relator
/// length would exceed `budget`.
Presentation simplify(Presentation p, std::size_t budget = 200000);
AbGroup abelianize(const Presentation& p);

/// Every radical p-overgroup of a member lies in the collection.
bool closed_under_radical_overgroups(const Collection& c);

struct WebbReport {
  bool closure_ok = false;
  std::vector<AbGroup> reduced_homology;
  bool acyclic = false;
  Presentation presentation;
  bool edge_path_h1_trivial = false;
  /// The simplified presentation has no generators left.
  bool simply_connected_proven = false;
  bool ok() const { return closure_ok && acyclic && edge_path_h1_trivial; }
};

/// Homology of the orbit space |C|/G. Throws MathError when the
/// collection is not closed under radical overgroups.
WebbReport webb_check(const ChainClasses& chains);

}  // namespace endotriv
