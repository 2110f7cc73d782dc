#include "sympow/monomial.hpp"

namespace sympow {

namespace {

constexpr std::uint64_t kExpMask = 0x00FFFFFFFFFFFFFFull;

int byte_sum(std::uint64_t bits) {
  int s = 0;
  for (int i = 0; i < 7; ++i) s += static_cast<int>((bits >> (8 * i)) & 0xFF);
  return s;
}

// Reverse-lexicographic tie break on the bytes selected by `mask`: the last
// variable where the exponents differ decides, smaller exponent is larger.
int revlex(std::uint64_t a, std::uint64_t b, std::uint64_t mask) {
  std::uint64_t x = (a ^ b) & mask;
  if (x == 0) return 0;
  int idx = (63 - std::countl_zero(x)) / 8;
  int ea = static_cast<int>((a >> (8 * idx)) & 0xFF);
  int eb = static_cast<int>((b >> (8 * idx)) & 0xFF);
  return ea < eb ? 1 : -1;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(max_vars))
    throw AlgebraError("too many variables for a monomial");
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0 || e > max_exponent) throw AlgebraError("monomial exponent out of range");
    bits_ |= static_cast<std::uint64_t>(e) << (8 * i);
    deg += e;
  }
  if (deg > max_exponent) throw AlgebraError("monomial degree out of range");
  bits_ |= static_cast<std::uint64_t>(deg) << 56;
}

Monomial Monomial::variable(int i, int power) {
  std::array<int, max_vars> e{};
  e.at(static_cast<std::size_t>(i)) = power;
  return Monomial(std::span<const int>(e));
}

bool Monomial::coprime(Monomial other) const {
  for (int i = 0; i < max_vars; ++i)
    if ((*this)[i] != 0 && other[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(Monomial other) const {
  std::uint64_t bits = 0;
  int deg = 0;
  for (int i = 0; i < max_vars; ++i) {
    int e = std::max((*this)[i], other[i]);
    deg += e;
    bits |= static_cast<std::uint64_t>(e) << (8 * i);
  }
  if (deg > max_exponent) throw AlgebraError("monomial degree out of range");
  return Monomial(bits | static_cast<std::uint64_t>(deg) << 56);
}

Monomial Monomial::gcd(Monomial other) const {
  std::uint64_t bits = 0;
  int deg = 0;
  for (int i = 0; i < max_vars; ++i) {
    int e = std::min((*this)[i], other[i]);
    deg += e;
    bits |= static_cast<std::uint64_t>(e) << (8 * i);
  }
  return Monomial(bits | static_cast<std::uint64_t>(deg) << 56);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = (*this)[static_cast<int>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

int MonomialOrder::compare(Monomial a, Monomial b) const {
  std::uint64_t x = a.packed(), y = b.packed();
  if (x == y) return 0;
  switch (kind_) {
    case Kind::grevlex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      return revlex(x, y, kExpMask);
    }
    case Kind::lex: {
      std::uint64_t d = (x ^ y) & kExpMask;
      int idx = std::countr_zero(d) / 8;
      return a[idx] > b[idx] ? 1 : -1;
    }
    case Kind::block: {
      std::uint64_t head = block_ >= 7 ? kExpMask : ((1ull << (8 * block_)) - 1);
      std::uint64_t tail = kExpMask & ~head;
      int ha = byte_sum(x & head), hb = byte_sum(y & head);
      if (ha != hb) return ha < hb ? -1 : 1;
      if (int c = revlex(x, y, head)) return c;
      int ta = a.degree() - ha, tb = b.degree() - hb;
      if (ta != tb) return ta < tb ? -1 : 1;
      return revlex(x, y, tail);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace sympow
