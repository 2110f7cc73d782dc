#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {

/// Element of the graded free module R(-a_1) + ... + R(-a_k): a component of
/// degree e in slot i contributes module degree e + a_i.
class ModuleVector {
 public:
  ModuleVector(RingHandle ring, std::vector<Polynomial> components, std::vector<int> twists = {});
  static ModuleVector zero(RingHandle ring, std::vector<int> twists);

  const RingHandle& ring_handle() const { return ring_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const std::vector<int>& twists() const { return twists_; }

  bool is_zero() const;
  bool is_homogeneous() const;
  /// Module degree of a nonzero homogeneous vector.
  int degree() const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator*(const Polynomial& f) const;
  ModuleVector scale(const FieldElement& c) const;
  bool operator==(const ModuleVector& o) const;
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_compatible(const ModuleVector& o) const;

  RingHandle ring_;
  std::vector<Polynomial> comps_;
  std::vector<int> twists_;
};

/// sum_i v_i * gens_i.
Polynomial contract(const ModuleVector& v, std::span<const Polynomial> gens);
/// sum_i coeffs_i * gens_i.
ModuleVector combine(std::span<const Polynomial> coeffs, std::span<const ModuleVector> gens);

/// Generating set of the first syzygies of polynomials: vectors v with
/// sum v_i gens_i = 0, twisted by the generator degrees.
std::vector<ModuleVector> syzygies(std::span<const Polynomial> gens);
/// Syzygies among module vectors (all of the same rank and twists).
std::vector<ModuleVector> syzygies(std::span<const ModuleVector> gens);

/// Minimal generating subset: by increasing degree, drop every vector that
/// lies in the span of the vectors kept so far.
std::vector<ModuleVector> minimalize(std::span<const ModuleVector> vectors);

struct Membership {
  bool member = false;
  /// When member: v = sum coordinates_i * gens_i (verified by expansion).
  std::vector<Polynomial> coordinates;
};

/// Submodule of a free module with a reusable Groebner basis. The basis
/// carries one tag component per generator so that membership can return
/// coordinates.
class Submodule {
 public:
  Submodule(RingHandle ring, std::vector<int> twists, std::vector<ModuleVector> gens);

  const std::vector<ModuleVector>& generators() const { return gens_; }
  const std::vector<int>& twists() const { return twists_; }

  Membership member(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return member(v).member; }

 private:
  struct Cache;
  RingHandle ring_;
  std::vector<int> twists_;
  std::vector<ModuleVector> gens_;
  std::shared_ptr<Cache> cache_;
};

Membership module_member(const ModuleVector& v, std::span<const ModuleVector> gens);

/// Presentation data of a three-generated height-two ideal:
///   f = P2 Q3 - P3 Q2,  g = P3 Q1 - P1 Q3,  h = P1 Q2 - P2 Q1.
struct HilbertBurchData {
  std::array<Polynomial, 3> p;  // column of degree d0
  std::array<Polynomial, 3> q;  // column of degree d1
  int d0 = 0;
  int d1 = 0;
  int d = 0;
  std::array<Polynomial, 3> minors;
  /// Input generators in terms of the minors: gens_i = sum_j M[i][j] minors_j.
  std::vector<std::vector<FieldElement>> change_of_basis;

  /// Builds the data from explicit columns (minors formed, degrees read
  /// off, column identities checked). Throws HypothesisError on degenerate input.
  static HilbertBurchData from_columns(std::array<Polynomial, 3> p, std::array<Polynomial, 3> q);
  const RingHandle& ring_handle() const { return p[0].ring_handle(); }
  const Ring& ring() const { return p[0].ring(); }
};

/// Computes the Hilbert-Burch columns of a three-generated ideal of one
/// degree: minimal syzygies sorted by degree (ties: smaller tuple of leading
/// monomials first), minors formed, and the input generators re-expressed
/// in the minors.
HilbertBurchData hilbert_burch(const Ideal& ideal);

}  // namespace sympow
