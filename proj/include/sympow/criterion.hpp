#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympow/resolve.hpp"

namespace sympow {

enum class Method { criterion, prop6, oracle };
std::string to_string(Method m);

struct Verdict {
  bool contained = false;
  Method method = Method::criterion;
  int m = 3;
  int r = 2;
  /// criterion, contained: w with Y^T w = (f, g, h).
  std::vector<Polynomial> certificate;
  /// oracle, not contained: a generator of I^(m) outside I^r.
  std::optional<Polynomial> witness;
  std::optional<std::string> characteristic_note;
};

/// Decides I^(3) in I^2 by testing whether the vector of minors (f, g, h)
/// lies in the image of Y^T. Refuses characteristic 3.
Verdict thm_main_check(const HilbertBurchData& hb);
Verdict thm_main_check(const Ideal& ideal);

/// Basis of R_d that begins with a list of named forms and is completed by
/// an independent subset (chosen greedily in list order) of a spanning
/// list. Gives the coordinate of a form on each named element.
class CoordinateSystem {
 public:
  CoordinateSystem(const RingHandle& ring, int degree, std::vector<Polynomial> named,
                   std::span<const Polynomial> completion);

  std::size_t named_count() const { return functionals_.size(); }
  std::size_t completion_count() const { return completion_count_; }
  FieldElement coefficient(const Polynomial& form, std::size_t named_index) const;

 private:
  std::vector<Monomial> monomials_;
  std::vector<std::vector<FieldElement>> functionals_;
  std::size_t completion_count_ = 0;
};

/// Dimension counts behind the canonical splitting of R_d.
struct SplittingProperties {
  int p_dim_d1 = 0;        // dim of the degree-d1 part of (P1, P2, P3)
  int q_rank_mod_p = 0;    // rank of Q1, Q2, Q3 modulo it
  int r_dim_d1 = 0;        // dim R_{d1}
  int products_rank = 0;   // rank of the nine P_i Q_j
  int p2_dim_d = 0;        // dim of the degree-d part of (P1, P2, P3)^2
  int sum_dim_d = 0;       // dim of the span of both
  int r_dim_d = 0;         // dim R_d
  bool a() const { return q_rank_mod_p == 3 && p_dim_d1 + 3 == r_dim_d1; }
  bool b() const { return products_rank == 9; }
  bool c() const { return b() && products_rank + p2_dim_d == r_dim_d && sum_dim_d == r_dim_d; }
};
SplittingProperties splitting_properties(const HilbertBurchData& hb);

struct Prop6Report {
  /// The six P_i Q_j with i != j are linearly independent.
  bool condition1 = false;
  /// All nine P_i Q_j are linearly independent.
  bool all_products_independent = false;
  /// The alternating coefficient functional vanishes on the whole w-space;
  /// empty when no splitting of R_d could be formed.
  std::optional<bool> condition2;
  /// True when R_d = span{P_i Q_j} + (P^2)_d was used, false for the
  /// monomial completion.
  bool canonical_decomposition = false;
  SplittingProperties properties;
  int span_dim = 0;
  int complement_dim = 0;

  bool implies_not_contained() const { return condition1 && condition2.value_or(false); }
};

/// Sufficient test for non-containment from the coefficients of the
/// products P_i Q_j. Requires characteristic other than 2 and 3.
Prop6Report prop6_check(const HilbertBurchData& hb);

/// Order of the six products used by the coefficient functional:
/// P2Q3, P3Q2, P3Q1, P1Q3, P1Q2, P2Q1 as (i, j) pairs, 0-based.
inline constexpr std::array<std::array<int, 2>, 6> kOffDiagonalProducts{
    {{1, 2}, {2, 1}, {2, 0}, {0, 2}, {0, 1}, {1, 0}}};

struct CoefficientTable {
  /// Column labels such as "x^3*Q1"; multipliers run over the cubic
  /// monomials in lex order, Q index fastest.
  std::vector<std::string> labels;
  /// columns[k][i]: coefficient of the i-th product of kOffDiagonalProducts.
  std::vector<std::array<FieldElement, 6>> columns;
};

/// Coefficients of mu * Q_j (mu cubic) on the six products under the
/// splitting R_8 = span{P_i Q_j} + (P^2)_8. `variant` selects the spanning
/// list used for (P^2)_8 (0: natural order, 1: reversed), which must not
/// change the result.
CoefficientTable klein_coefficient_table(const HilbertBurchData& hb, int variant = 0);

/// The unit u with raw = u * reference entrywise, if one exists.
std::optional<FieldElement> common_unit(const CoefficientTable& raw,
                                        std::span<const std::array<FieldElement, 6>> reference);

/// Computes I^(m) as the saturation of I^m by (x, y, z) and tests every
/// minimal generator against I^r. The witness is a non-member of lowest
/// degree, then with the smallest leading monomial.
Verdict oracle_check(const Ideal& ideal, int m, int r);

struct WitnessResult {
  bool in_symbolic = false;
  bool in_ordinary = false;
};
WitnessResult witness_check(const Polynomial& form, const Ideal& ideal, int m, int r);

/// The vector w solving Y^T w = (f, g, h) in characteristic 2 or 3.
std::vector<Polynomial> char_remark_solution(unsigned p, const HilbertBurchData& hb);
/// Checks Y^T w = (f, g, h) with the characteristic-p solution, for six
/// independent indeterminates P1..Q3 over `field` (default GF(p)).
bool char_remark_identity(unsigned p);
bool char_remark_identity(unsigned p, FieldHandle field);

}  // namespace sympow
