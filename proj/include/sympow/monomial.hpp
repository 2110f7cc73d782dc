#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "sympow/error.hpp"

namespace sympow {

/// Exponent vector for at most seven variables, packed one byte per
/// variable; byte 7 holds the total degree. Exponents and the total degree
/// are capped at 127 so that divisibility and products are branch-free.
class Monomial {
 public:
  static constexpr int max_vars = 7;
  static constexpr int max_exponent = 127;

  constexpr Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static constexpr Monomial from_packed(std::uint64_t bits) { return Monomial(bits); }
  static Monomial variable(int i, int power = 1);

  int operator[](int i) const { return static_cast<int>((bits_ >> (8 * i)) & 0xFF); }
  int degree() const { return static_cast<int>(bits_ >> 56); }
  std::uint64_t packed() const { return bits_; }
  bool is_one() const { return bits_ == 0; }

  bool divides(Monomial other) const {
    return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
  }
  bool coprime(Monomial other) const;

  Monomial operator*(Monomial other) const {
    std::uint64_t s = bits_ + other.bits_;
    if (s & kHigh) throw AlgebraError("monomial exponent overflow");
    return Monomial(s);
  }
  /// Requires `other.divides(*this)`.
  Monomial operator/(Monomial other) const { return Monomial(bits_ - other.bits_); }

  Monomial lcm(Monomial other) const;
  Monomial gcd(Monomial other) const;

  bool operator==(const Monomial&) const = default;

  /// `x^2*y` style text using the given variable names; "1" for the unit.
  std::string to_string(std::span<const std::string> names) const;

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const {
    std::uint64_t x = m.packed() * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

/// Total, multiplicative, well-founded order on monomials.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Elimination order: the first `block_size` variables are compared first
  /// (grevlex within the block), then grevlex on the remaining variables.
  static MonomialOrder block(int block_size) { return MonomialOrder(Kind::block, block_size); }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(Monomial a, Monomial b) const;
  bool greater(Monomial a, Monomial b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;
  std::string to_string() const;

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  Kind kind_;
  int block_;
};

}  // namespace sympow
