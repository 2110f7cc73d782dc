#include "sympow/field.hpp"

#include <charconv>
#include <map>
#include <mutex>

namespace sympow {

namespace {

bool klein_quadratic_has_root_mod(std::uint64_t p) {
  for (std::uint64_t t = 0; t < p; ++t)
    if ((t * t + t + 2) % p == 0) return true;
  return false;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s = trim(text);
  bool want_c = false;
  if (s.size() >= 3 && s.compare(s.size() - 3, 3, "[c]") == 0) {
    want_c = true;
    s.resize(s.size() - 3);
  }
  if (s == "Q" || s == "QQ") {
    return want_c ? quadratic_extension(0) : rationals();
  }
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::uint64_t p = 0;
    auto body = std::string_view(s).substr(3, s.size() - 4);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw FieldError("bad field declaration: " + std::string(text));
    if (p > 0x7FFFFFFFull || !is_prime(p))
      throw FieldError("field characteristic is not prime: " + std::to_string(p));
    if (!want_c || klein_quadratic_has_root_mod(p))
      return prime(static_cast<std::uint32_t>(p));
    return quadratic_extension(static_cast<std::uint32_t>(p));
  }
  throw FieldError("bad field declaration: " + std::string(text));
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::prime:
      return "GF(" + std::to_string(p) + ")";
    case Kind::quadratic_extension:
      return p == 0 ? "Q[c]" : "GF(" + std::to_string(p) + ")[c]";
  }
  return "?";
}

// ---------------------------------------------------------------- Field

FieldHandle Field::make(const FieldSpec& spec) {
  if (spec.kind != FieldSpec::Kind::rationals && spec.p != 0) {
    if (!is_prime(spec.p))
      throw FieldError("field characteristic is not prime: " + std::to_string(spec.p));
  }
  if (spec.kind == FieldSpec::Kind::prime && spec.p == 0)
    throw FieldError("prime field needs a modulus");
  if (spec.kind == FieldSpec::Kind::quadratic_extension && spec.p != 0 &&
      klein_quadratic_has_root_mod(spec.p))
    throw FieldError("t^2+t+2 is reducible over GF(" + std::to_string(spec.p) +
                     "); use the prime field");

  static std::mutex mutex;
  static std::map<std::pair<int, std::uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(static_cast<int>(spec.kind), spec.p);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<Field>(new Field(spec))).first;
  return it->second.get();
}

std::uint64_t Field::size() const {
  if (!is_finite()) return 0;
  std::uint64_t p = spec_.p;
  return is_extension() ? p * p : p;
}

FieldElement Field::residue_element(std::uint64_t a, std::uint64_t b) const {
  FieldElement e;
  e.field_ = this;
  e.a_ = a;
  e.b_ = b;
  return e;
}

FieldElement Field::rational_element(mpq_class a, mpq_class b) const {
  FieldElement e;
  e.field_ = this;
  a.canonicalize();
  b.canonicalize();
  if (sgn(a) != 0 || sgn(b) != 0)
    e.q_ = std::make_shared<const RationalPair>(RationalPair{std::move(a), std::move(b)});
  return e;
}

FieldElement Field::zero() const {
  return is_finite() ? residue_element(0, 0) : rational_element(0, 0);
}

FieldElement Field::one() const {
  return is_finite() ? residue_element(1 % spec_.p, 0) : rational_element(1, 0);
}

FieldElement Field::from_int(std::int64_t v) const {
  if (!is_finite()) return rational_element(mpq_class(static_cast<long>(v)), 0);
  std::int64_t p = spec_.p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return residue_element(static_cast<std::uint64_t>(r), 0);
}

FieldElement Field::from_rational(const mpq_class& v) const {
  return make_element(v, 0);
}

FieldElement Field::make_element(const mpq_class& a, const mpq_class& b) const {
  if (sgn(b) != 0 && !is_extension())
    throw FieldError("element a+b*c requires an extension field, got " + name());
  if (!is_finite()) return rational_element(a, b);
  auto reduce = [&](const mpq_class& v) -> std::uint64_t {
    mpz_class p = spec_.p;
    mpz_class num = v.get_num() % p;
    mpz_class den = v.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw FieldError("denominator divisible by the characteristic");
    std::uint64_t n = num.get_ui(), d = den.get_ui();
    return n * mod_pow(d, spec_.p - 2, spec_.p) % spec_.p;
  };
  return residue_element(reduce(a), reduce(b));
}

std::optional<FieldElement> Field::c() const {
  if (is_extension()) {
    if (is_finite()) return residue_element(0, 1);
    return rational_element(0, 1);
  }
  if (!is_finite()) return std::nullopt;
  for (std::uint64_t t = 0; t < spec_.p; ++t)
    if ((t * t + t + 2) % spec_.p == 0) return residue_element(t, 0);
  return std::nullopt;
}

std::vector<FieldElement> Field::elements() const {
  if (!is_finite()) throw FieldError("cannot enumerate an infinite field");
  std::vector<FieldElement> out;
  std::uint64_t p = spec_.p;
  std::uint64_t bmax = is_extension() ? p : 1;
  out.reserve(p * bmax);
  for (std::uint64_t b = 0; b < bmax; ++b)
    for (std::uint64_t a = 0; a < p; ++a) out.push_back(residue_element(a, b));
  return out;
}

void Field::check(const FieldElement& x) const {
  if (x.field_ != this) {
    throw FieldError("mixed-field operands: expected " + name() + ", got " +
                     (x.field_ ? x.field_->name() : std::string("<none>")));
  }
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  if (is_finite()) {
    std::uint64_t p = spec_.p;
    std::uint64_t a = x.a_ + y.a_, b = x.b_ + y.b_;
    return residue_element(a >= p ? a - p : a, b >= p ? b - p : b);
  }
  if (!x.q_) return y;
  if (!y.q_) return x;
  return rational_element(x.q_->a + y.q_->a, x.q_->b + y.q_->b);
}

FieldElement Field::neg(const FieldElement& x) const {
  check(x);
  if (is_finite()) {
    std::uint64_t p = spec_.p;
    return residue_element(x.a_ ? p - x.a_ : 0, x.b_ ? p - x.b_ : 0);
  }
  if (!x.q_) return x;
  return rational_element(-x.q_->a, -x.q_->b);
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
  return add(x, neg(y));
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  // (a + b c)(a' + b' c) with c^2 = -c - 2:
  //   a a' - 2 b b' + (a b' + a' b - b b') c
  if (is_finite()) {
    std::uint64_t p = spec_.p;
    if (!is_extension()) return residue_element(x.a_ * y.a_ % p, 0);
    std::uint64_t aa = x.a_ * y.a_ % p, bb = x.b_ * y.b_ % p;
    std::uint64_t ab = (x.a_ * y.b_ + x.b_ * y.a_) % p;
    std::uint64_t a = (aa + 2 * (p - bb)) % p;
    std::uint64_t b = (ab + p - bb) % p;
    return residue_element(a, b);
  }
  if (!x.q_ || !y.q_) return zero();
  const auto& [a, b] = *x.q_;
  const auto& [a2, b2] = *y.q_;
  if (sgn(b) == 0 && sgn(b2) == 0) return rational_element(a * a2, 0);
  mpq_class bb = b * b2;
  return rational_element(a * a2 - 2 * bb, a * b2 + a2 * b - bb);
}

FieldElement Field::inv(const FieldElement& x) const {
  check(x);
  if (x.is_zero()) throw FieldError("division by zero");
  // (a + b c)^{-1} = ((a - b) - b c) / (a^2 - a b + 2 b^2)
  if (is_finite()) {
    std::uint64_t p = spec_.p;
    if (!is_extension()) return residue_element(mod_pow(x.a_, p - 2, p), 0);
    std::uint64_t a = x.a_, b = x.b_;
    std::uint64_t norm = (a * a % p + p - a * b % p + 2 * (b * b % p)) % p;
    std::uint64_t ni = mod_pow(norm, p - 2, p);
    return residue_element((a + p - b) % p * ni % p, (p - b) % p * ni % p);
  }
  const auto& [a, b] = *x.q_;
  if (sgn(b) == 0) return rational_element(1 / a, 0);
  mpq_class norm = a * a - a * b + 2 * b * b;
  return rational_element((a - b) / norm, -b / norm);
}

bool Field::equal(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  if (is_finite()) return x.a_ == y.a_ && x.b_ == y.b_;
  if (!x.q_ || !y.q_) return !x.q_ && !y.q_;
  return x.q_->a == y.q_->a && x.q_->b == y.q_->b;
}

FieldElement Field::canonicalize(const FieldElement& x) const {
  check(x);
  if (is_finite()) return residue_element(x.a_ % spec_.p, x.b_ % spec_.p);
  if (!x.q_) return x;
  return rational_element(x.q_->a, x.q_->b);
}

// ---------------------------------------------------------- FieldElement

bool FieldElement::is_zero() const {
  if (!field_) return true;
  return field_->is_finite() ? (a_ == 0 && b_ == 0) : !q_;
}

bool FieldElement::is_one() const {
  return field_ && *this == field_->one();
}

mpq_class FieldElement::coordinate(int i) const {
  if (!field_) return 0;
  if (field_->is_finite()) return mpq_class(static_cast<unsigned long>(i == 0 ? a_ : b_));
  if (!q_) return 0;
  return i == 0 ? q_->a : q_->b;
}

namespace {
FieldHandle common(const FieldElement& x, const FieldElement&) {
  if (!x.field()) throw FieldError("operation on an uninitialised field element");
  return x.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return common(*this, o)->add(*this, o);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return common(*this, o)->sub(*this, o);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return common(*this, o)->mul(*this, o);
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  FieldHandle f = common(*this, o);
  return f->mul(*this, f->inv(o));
}
FieldElement FieldElement::operator-() const {
  if (!field_) throw FieldError("operation on an uninitialised field element");
  return field_->neg(*this);
}
FieldElement FieldElement::inverse() const {
  if (!field_) throw FieldError("operation on an uninitialised field element");
  return field_->inv(*this);
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (!field_) throw FieldError("operation on an uninitialised field element");
  FieldElement base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  FieldElement r = field_->one();
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_ || !o.field_) return is_zero() && o.is_zero() && field_ == o.field_;
  return field_->equal(*this, o);
}

std::string FieldElement::to_string() const {
  if (!field_) return "0";
  auto coord = [&](int i) -> std::string {
    if (field_->is_finite()) return std::to_string(i == 0 ? a_ : b_);
    if (!q_) return "0";
    return (i == 0 ? q_->a : q_->b).get_str();
  };
  bool b_zero = field_->is_finite() ? b_ == 0 : (!q_ || sgn(q_->b) == 0);
  bool a_zero = field_->is_finite() ? a_ == 0 : (!q_ || sgn(q_->a) == 0);
  if (b_zero) return coord(0);
  std::string b = coord(1);
  std::string out = b == "1" ? "c" : (b == "-1" ? "-c" : b + "*c");
  if (a_zero) return out;
  std::string a = coord(0);
  if (a[0] == '-') return out + a;
  return out + "+" + a;
}

std::vector<FieldElement> roots_of_klein_quadratic(FieldHandle field) {
  std::vector<FieldElement> roots;
  FieldElement two = field->from_int(2);
  auto is_root = [&](const FieldElement& t) { return (t * t + t + two).is_zero(); };
  if (field->is_finite()) {
    for (const auto& t : field->elements())
      if (is_root(t)) roots.push_back(t);
    return roots;
  }
  if (field->is_extension()) {
    FieldElement c = *field->c();
    roots.push_back(c);
    roots.push_back(-field->one() - c);
  }
  return roots;
}

}  // namespace sympow
