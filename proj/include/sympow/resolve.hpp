#pragma once

#include <array>
#include <string>
#include <vector>

#include "sympow/syzygy.hpp"

namespace sympow {

/// Row-major matrix of polynomials.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Graded free resolution 0 -> F_2 -> F_1 -> F_0 of a power I^k, recorded as
/// the twists a of the summands R(a) (so R(-8)^3 is {-8, -8, -8}).
struct ResolutionShape {
  std::vector<std::vector<int>> twists;
  std::vector<int> ranks;

  static ResolutionShape from_twists(std::vector<std::vector<int>> twists);
  bool operator==(const ResolutionShape& o) const { return twists == o.twists; }
  std::string to_string() const;
};

/// Shape of the minimal resolution of I^k (k = 1, 2, 3) for a height-two
/// ideal with Hilbert-Burch column degrees d0 <= d1.
ResolutionShape predicted_shape(int d, int d0, int d1, int k);

/// Degree of R/I^k read off the twists (alternating second derivative of
/// the Hilbert series numerator at 1).
long long multiplicity_from_shape(const ResolutionShape& shape);

/// Exponent vectors of the degree-k monomials in T1, T2, T3, lex order:
/// T1^3, T1^2 T2, T1^2 T3, T1 T2^2, ... for k = 3.
std::vector<std::array<int, 3>> t_monomials(int k);
/// The products f^a g^b h^c over `t_monomials(k)`.
std::vector<Polynomial> power_generators(const std::array<Polynomial, 3>& gens, int k);

/// (P1, P2, P3, -Q1, -Q2, -Q3) as a 6x1 matrix.
PolyMatrix build_X(const HilbertBurchData& hb);
/// The 12x3 matrix whose columns are
///   (P1, P2, P3, 0, 0, 0, -Q1, -Q2, -Q3, 0, 0, 0),
///   (0, P1, 0, P2, P3, 0, 0, -Q1, 0, -Q2, -Q3, 0),
///   (0, 0, P1, 0, P2, P3, 0, 0, -Q1, 0, -Q2, -Q3).
PolyMatrix build_Y(const HilbertBurchData& hb);

/// Relations among the generators of I^k (k = 2, 3) coming from the two
/// Hilbert-Burch syzygies: with G = sum Q_i T_i and F = sum P_i T_i, the
/// vectors G*mu for the degree-(k-1) T-monomials mu in lex order, then F*mu,
/// written in the basis `power_generators(hb.minors, k)`. These are the
/// domain basis that X (k = 2) and Y (k = 3) refer to.
std::vector<ModuleVector> hilbert_burch_relations(const HilbertBurchData& hb, int k);

/// Columns of a matrix as vectors of a free module with the given twists.
std::vector<ModuleVector> matrix_columns(const PolyMatrix& m, const RingHandle& ring,
                                         const std::vector<int>& twists);

struct PowerResolution {
  int power = 0;
  HilbertBurchData hb;
  /// Generators of I^k (products of the minors of hb, T-monomial lex order).
  std::vector<Polynomial> generators;
  /// Minimal relations among `generators`.
  std::vector<ModuleVector> first;
  /// Minimal relations among `first`.
  std::vector<ModuleVector> second;
  ResolutionShape shape;
  ResolutionShape predicted;
};

/// Computes the minimal resolution of I^k (k = 1, 2, 3) by iterated
/// syzygies, checks that consecutive maps compose to zero and that the
/// shape is the predicted one. Throws ShapeMismatch otherwise.
PowerResolution resolve_power(const Ideal& ideal, int k);
PowerResolution resolve_power(const HilbertBurchData& hb, int k);

struct LastMapComparison {
  /// The Hilbert-Burch relations generate the same module as the computed
  /// first syzygies of I^3.
  bool relations_generate = false;
  /// Every column of Y is a relation among the Hilbert-Burch relations.
  bool columns_are_relations = false;
  /// The columns of Y generate all relations among the Hilbert-Burch relations.
  bool columns_generate = false;
  /// Image(Y^T) equals the image of the transpose of the computed last map,
  /// once the computed map is written in the basis given by Y's columns.
  bool transpose_images_equal = false;
  /// The same comparison without aligning the bases of the last module;
  /// informational, since it depends on the generators the engine picks.
  bool unaligned_images_equal = false;

  bool equivalent() const {
    return relations_generate && columns_are_relations && columns_generate && transpose_images_equal;
  }
};

/// Compares the explicit matrix Y with the last map of the computed
/// resolution of I^3.
LastMapComparison compare_last_map(const HilbertBurchData& hb);
bool check_last_map_equivalence(const Ideal& ideal);

}  // namespace sympow
