#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/ring.hpp"

namespace sympow {

struct Term {
  Monomial mon;
  FieldElement coef;
};

/// Sparse polynomial. Terms are stored strictly decreasing under the ring's
/// monomial order and never carry a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(RingHandle ring);

  static Polynomial constant(RingHandle ring, const FieldElement& c);
  static Polynomial constant(RingHandle ring, std::int64_t c);
  static Polynomial variable(RingHandle ring, int index);
  static Polynomial variable(RingHandle ring, std::string_view name);
  static Polynomial monomial(RingHandle ring, Monomial m, const FieldElement& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingHandle ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingHandle& ring_handle() const { return ring_; }
  FieldHandle field() const { return ring_->field(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading data; the polynomial must be nonzero.
  const Term& leading_term() const;
  Monomial lead_monomial() const { return leading_term().mon; }
  const FieldElement& lead_coef() const { return leading_term().coef; }

  /// Maximum total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(Monomial m, const FieldElement& c) const;
  Polynomial pow(int e) const;
  Polynomial monic() const;

  FieldElement coeff(Monomial m) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Moves the polynomial into `target`, sending variable i to variable
  /// `var_map[i]` (-1 means the variable must not occur).
  Polynomial remap(const RingHandle& target, std::span<const int> var_map) const;
  /// Re-sorts into a ring that differs only by order or weights.
  Polynomial in_ring(const RingHandle& target) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text, parseable by `parse_polynomial`.
  std::string to_string() const;

 private:
  Polynomial(RingHandle ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void check_ring(const Polynomial& o) const;

  RingHandle ring_;
  std::vector<Term> terms_;
};

/// x_i -> signs[i] * x_{perm[i]}.
Polynomial apply_symmetry(const Polynomial& f, std::span<const int> perm,
                          std::span<const int> signs = {});

struct DivisionResult {
  Polynomial normal_form;
  std::vector<Polynomial> quotients;
};

/// Multivariate division: repeatedly takes the largest term that some
/// leading monomial divides and reduces it by the first such divisor in
/// list order. f = sum quotients[i] * divisors[i] + normal_form.
DivisionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors);

/// a / b when b divides a exactly.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monomials of total degree d in all ring variables, decreasing.
std::vector<Monomial> graded_basis(const Ring& ring, int d);

FieldElement coeff(const Polynomial& f, Monomial m);

/// Parses text such as `4*x^4 + (3*c+9)*x^2*y^2 - 15*z^4`.
Polynomial parse_polynomial(std::string_view text, const RingHandle& ring);

/// Product of a list (1 for the empty list).
Polynomial product(const RingHandle& ring, std::span<const Polynomial> factors);

}  // namespace sympow
