#pragma once

#include <memory>
#include <span>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

/// Ideal given by generators, with a lazily computed Groebner basis under
/// the ring's order. Copies share the cache; the cache is filled at most
/// once per degree and is safe to use from several threads.
class Ideal {
 public:
  Ideal(RingHandle ring, std::vector<Polynomial> generators);
  static Ideal unit(RingHandle ring);
  static Ideal zero(RingHandle ring);
  /// (x_1, ..., x_n).
  static Ideal irrelevant(RingHandle ring);

  const RingHandle& ring_handle() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;

  /// Reduced Groebner basis: monic, sorted by increasing leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_unit() const;

  /// The same ideal in a ring that differs only by order or weights.
  Ideal in_ring(const RingHandle& target) const;

 private:
  struct Cache;

  RingHandle ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of the generators under `order`.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, MonomialOrder order);

bool ideal_member(const Polynomial& f, const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// All e-fold products of generators (deduplicated, zero-free).
Ideal ideal_power(const Ideal& ideal, int e);

/// I intersect J via elimination of t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(std::span<const Ideal> ideals);
/// (I : f) = (I intersect (f)) / f; a variable f of a homogeneous ideal
/// takes a direct route through a grevlex basis with f as last variable.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// (I : f^infinity). Variables, monomials and linear forms of a homogeneous
/// ideal are handled through grevlex bases with the form as last variable;
/// anything else iterates `colon` until the ideal stops growing.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// (I : J^infinity), the intersection over the generators g of J of
/// (I : g^infinity). When I is homogeneous and J is primary to the
/// irrelevant ideal, a linear form l with I + (l) zero-dimensional is used
/// instead: then (I : J^infinity) = (I : l^infinity).
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// Generators of I intersected with the subring without the listed
/// variables. The variables must form a prefix of the ring variables and the
/// ring order must eliminate them (lex or block(k) with k >= count).
Ideal eliminate(const Ideal& ideal, std::span<const int> variables);

/// Minimal homogeneous generators, chosen greedily by increasing (weighted)
/// degree.
std::vector<Polynomial> minimal_generators(const Ideal& ideal);

/// True when the ideal contains a power of every variable.
bool is_zero_dimensional(const Ideal& ideal);

/// Sends variable i to images[i].
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);
Ideal substitute(const Ideal& ideal, std::span<const Polynomial> images);

struct HilbertSeries {
  /// Coefficients of the numerator K(t) in HS(t) = K(t) / (1 - t)^n.
  std::vector<long long> numerator;
  int dimension = 0;
  /// Degree (multiplicity) of R/I.
  long long degree = 0;
};

/// Hilbert series of R/I for a homogeneous ideal (standard grading).
HilbertSeries hilbert_series(const Ideal& ideal);
/// Number of standard monomials of degree d, i.e. dim_k (R/I)_d.
long long hilbert_function(const Ideal& ideal, int d);
/// Degree of R/I; requires dim R/I = 1.
long long multiplicity(const Ideal& ideal);

struct ReesIdeal {
  /// Ring (x, y, z, T1, T2, T3); T_i has weight d + 1 so that the presentation
  /// T_i - s*f_i is homogeneous with s of weight 1.
  RingHandle ring;
  Ideal ideal;
  /// Minimal generators of the defining ideal.
  std::vector<Polynomial> minimal_generators;
};

/// Kernel of R[T1, T2, T3] -> R[s], T_i -> s * f_i.
ReesIdeal rees_ideal(const Polynomial& f, const Polynomial& g, const Polynomial& h);
/// True iff every minimal generator has degree one in the T variables.
bool is_linear_type(const ReesIdeal& rees);

}  // namespace sympow
