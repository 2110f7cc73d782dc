#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sympow/error.hpp"

namespace sympow {

/// Declaration of a coefficient field: Q, GF(p), or the quadratic extension
/// of either by a root c of t^2 + t + 2.
struct FieldSpec {
  enum class Kind { rationals, prime, quadratic_extension };

  Kind kind = Kind::rationals;
  /// Characteristic; 0 for Q and for Q[c].
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) { return {Kind::prime, p}; }
  static FieldSpec quadratic_extension(std::uint32_t p) {
    return {Kind::quadratic_extension, p};
  }

  /// Parses `Q`, `Q[c]`, `GF(p)` or `GF(p)[c]`. `GF(p)[c]` resolves to the
  /// prime field when t^2+t+2 already has a root mod p.
  static FieldSpec parse(std::string_view text);

  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

class Field;
class FieldElement;

/// Fields are interned and never destroyed, so a handle is a plain pointer
/// that stays valid for the lifetime of the process.
using FieldHandle = const Field*;

struct RationalPair {
  mpq_class a;
  mpq_class b;
};

/// Exact scalar. For finite fields the value is a + b*c with residues in
/// [0, p); for Q and Q[c] the coordinates are reduced rationals.
class FieldElement {
 public:
  FieldElement() = default;

  FieldHandle field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Coordinates a + b*c as rationals (residues are lifted to [0, p)).
  mpq_class coordinate(int i) const;
  /// Residue coordinate; finite fields only.
  std::uint64_t residue(int i) const { return i == 0 ? a_ : b_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Canonical text: `7`, `-3/4`, `3*c+9`, `c`.
  std::string to_string() const;

 private:
  friend class Field;

  FieldHandle field_ = nullptr;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 0;
  std::shared_ptr<const RationalPair> q_;  // null means zero
};

class Field {
 public:
  /// Returns the interned field for `spec`. Throws FieldError on a non-prime
  /// modulus or when an extension is requested over a field where
  /// t^2 + t + 2 has a root.
  static FieldHandle make(const FieldSpec& spec);
  static FieldHandle parse(std::string_view text) {
    return make(FieldSpec::parse(text));
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  bool is_extension() const {
    return spec_.kind == FieldSpec::Kind::quadratic_extension;
  }
  bool is_finite() const { return spec_.p != 0; }
  /// Number of elements; 0 when infinite.
  std::uint64_t size() const;
  std::string name() const { return spec_.to_string(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_rational(const mpq_class& v) const;
  /// a + b*c; requires an extension field unless b == 0.
  FieldElement make_element(const mpq_class& a, const mpq_class& b) const;

  /// The element named `c` in polynomial text: the adjoined generator for
  /// extensions, the smallest root of t^2+t+2 for prime fields that have one.
  std::optional<FieldElement> c() const;

  /// Every element (finite fields only), in a fixed order.
  std::vector<FieldElement> elements() const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement inv(const FieldElement& x) const;
  bool equal(const FieldElement& x, const FieldElement& y) const;

  /// Brings an element into canonical form (idempotent).
  FieldElement canonicalize(const FieldElement& x) const;

 private:
  explicit Field(const FieldSpec& spec) : spec_(spec) {}
  FieldElement residue_element(std::uint64_t a, std::uint64_t b) const;
  FieldElement rational_element(mpq_class a, mpq_class b) const;
  void check(const FieldElement& x) const;

  FieldSpec spec_;
};

/// All roots of t^2 + t + 2 in `field` (exhaustive scan for finite fields).
std::vector<FieldElement> roots_of_klein_quadratic(FieldHandle field);

bool is_prime(std::uint64_t n);

}  // namespace sympow
