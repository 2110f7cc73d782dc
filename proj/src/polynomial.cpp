#include "sympow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace sympow {

namespace {

void sort_terms(const Ring& ring, std::vector<Term>& terms) {
  const MonomialOrder& ord = ring.order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mon, b.mon); });
}

// Merge-based sum of two sorted term lists, b scaled by `sign` (+1 or -1).
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  const MonomialOrder& ord = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ord.compare(a[i].mon, b[j].mon);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mon, subtract ? -b[j].coef : b[j].coef});
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].mon, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingHandle ring) : ring_(std::move(ring)) {
  if (!ring_) throw AlgebraError("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingHandle ring, const FieldElement& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::constant(RingHandle ring, std::int64_t c) {
  FieldElement v = ring->field()->from_int(c);
  return constant(std::move(ring), v);
}

Polynomial Polynomial::variable(RingHandle ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw AlgebraError("variable index out of range");
  FieldElement one = ring->field()->one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::variable(RingHandle ring, std::string_view name) {
  int i = ring->variable_index(name);
  if (i < 0) throw AlgebraError("unknown variable " + std::string(name));
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingHandle ring, Monomial m, const FieldElement& c) {
  if (c.field() != ring->field()) throw FieldError("coefficient from a different field");
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({m, c});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingHandle ring, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.coef.field() != ring->field()) throw FieldError("coefficient from a different field");
  sort_terms(*ring, terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) {
    if (ring_->field() != o.ring_->field()) throw FieldError("operands over different fields");
    throw AlgebraError("operands from different rings");
  }
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw AlgebraError("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mon.is_one());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  return Polynomial(ring_, merge_terms(*ring_, terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  return Polynomial(ring_, merge_terms(*ring_, terms_, o.terms_, true));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coef = -x.coef;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mon, o.terms_[0].coef);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mon, terms_[0].coef);
  std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.mon * b.mon, a.coef * b.coef);
      if (!fresh) it->second += a.coef * b.coef;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, c});
  sort_terms(*ring_, out);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  if (c.field() != field()) throw FieldError("scalar from a different field");
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coef *= c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::mul_term(Monomial m, const FieldElement& c) const {
  if (c.field() != field()) throw FieldError("scalar from a different field");
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const Term& x : terms_) t.push_back({x.mon * m, x.coef * c});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw AlgebraError("negative polynomial power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(lead_coef().inverse());
}

FieldElement Polynomial::coeff(Monomial m) const {
  const MonomialOrder& ord = ring_->order();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, Monomial key) { return ord.greater(t.mon, key); });
  if (it != terms_.end() && it->mon == m) return it->coef;
  return field()->zero();
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(ring_->nvars()))
    throw AlgebraError("evaluation point has the wrong length");
  for (const FieldElement& v : point)
    if (v.field() != field()) throw FieldError("evaluation point from a different field");
  FieldElement sum = field()->zero();
  for (const Term& t : terms_) {
    FieldElement v = t.coef;
    for (int i = 0; i < ring_->nvars() && !v.is_zero(); ++i)
      if (t.mon[i] > 0) v *= point[static_cast<std::size_t>(i)].pow(t.mon[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::remap(const RingHandle& target, std::span<const int> var_map) const {
  if (target->field() != field()) throw FieldError("remap into a ring over a different field");
  if (var_map.size() != static_cast<std::size_t>(ring_->nvars()))
    throw AlgebraError("variable map has the wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::array<int, Monomial::max_vars> e{};
    for (int i = 0; i < ring_->nvars(); ++i) {
      int k = t.mon[i];
      if (k == 0) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0 || j >= target->nvars())
        throw AlgebraError("variable " + ring_->names()[static_cast<std::size_t>(i)] +
                           " has no image in the target ring");
      e[static_cast<std::size_t>(j)] += k;
    }
    out.push_back({Monomial(std::span<const int>(e.data(), static_cast<std::size_t>(target->nvars()))),
                   t.coef});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingHandle& target) const {
  if (target->field() != field() || target->names() != ring_->names())
    throw AlgebraError("target ring must share field and variables");
  std::vector<Term> t = terms_;
  sort_terms(*target, t);
  return Polynomial(target, std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (field() != o.field()) return false;
  // Term lists are sorted under possibly different orders when rings differ.
  if (ring_->order() == o.ring_->order()) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mon != o.terms_[i].mon || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
  }
  for (const Term& t : terms_)
    if (o.coeff(t.mon) != t.coef) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = t.coef.to_string();
    bool negative = c.front() == '-';
    std::string body = negative ? c.substr(1) : c;
    // A coefficient with an inner sign needs parentheses; a leading minus
    // is folded into the joining operator instead.
    bool compound = body.find_first_of("+-") != std::string::npos;
    if (compound) {
      negative = false;
      body = "(" + c + ")";
    }
    std::string mon = t.mon.to_string(ring_->names());
    std::string piece;
    if (t.mon.is_one())
      piece = body;
    else if (body == "1")
      piece = mon;
    else
      piece = body + "*" + mon;
    if (first)
      out = negative ? "-" + piece : piece;
    else
      out += (negative ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

Polynomial apply_symmetry(const Polynomial& f, std::span<const int> perm,
                          std::span<const int> signs) {
  const Ring& ring = f.ring();
  std::size_t n = static_cast<std::size_t>(ring.nvars());
  if (perm.size() != n) throw AlgebraError("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw AlgebraError("not a permutation of the variables");
    seen[static_cast<std::size_t>(p)] = true;
  }
  if (!signs.empty() && signs.size() != n) throw AlgebraError("sign vector has the wrong length");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    std::array<int, Monomial::max_vars> e{};
    bool flip = false;
    for (std::size_t i = 0; i < n; ++i) {
      int k = t.mon[static_cast<int>(i)];
      e[static_cast<std::size_t>(perm[i])] = k;
      if (!signs.empty() && signs[i] < 0 && (k & 1)) flip = !flip;
    }
    out.push_back({Monomial(std::span<const int>(e.data(), n)), flip ? -t.coef : t.coef});
  }
  return Polynomial::from_terms(f.ring_handle(), std::move(out));
}

DivisionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingHandle& ring = f.ring_handle();
  const MonomialOrder& ord = ring->order();
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw AlgebraError("division by the zero polynomial");
    if (!g.ring().same_as(*ring)) throw AlgebraError("divisor from a different ring");
  }
  auto cmp = [&](Monomial a, Monomial b) { return ord.greater(a, b); };
  std::map<Monomial, FieldElement, decltype(cmp)> work(cmp);
  for (const Term& t : f.terms()) work.emplace(t.mon, t.coef);

  std::vector<std::vector<Term>> quot(divisors.size());
  std::vector<Term> rest;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    FieldElement c = it->second;
    work.erase(it);
    std::size_t k = 0;
    while (k < divisors.size() && !divisors[k].lead_monomial().divides(m)) ++k;
    if (k == divisors.size()) {
      rest.push_back({m, c});
      continue;
    }
    const Polynomial& g = divisors[k];
    Monomial q = m / g.lead_monomial();
    FieldElement qc = c / g.lead_coef();
    quot[k].push_back({q, qc});
    for (std::size_t i = 1; i < g.terms().size(); ++i) {
      const Term& t = g.terms()[i];
      Monomial mm = t.mon * q;
      FieldElement delta = -(t.coef * qc);
      auto [pos, fresh] = work.try_emplace(mm, delta);
      if (!fresh) {
        pos->second += delta;
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
  }
  DivisionResult result{Polynomial::from_terms(ring, std::move(rest)), {}};
  result.quotients.reserve(divisors.size());
  for (auto& q : quot) result.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw AlgebraError("division by the zero polynomial");
  std::array<Polynomial, 1> d{b};
  DivisionResult r = reduce(a, d);
  if (!r.normal_form.is_zero()) return std::nullopt;
  return r.quotients[0];
}

std::vector<Monomial> graded_basis(const Ring& ring, int d) {
  if (d < 0) throw AlgebraError("negative degree");
  int n = ring.nvars();
  std::vector<Monomial> out;
  std::array<int, Monomial::max_vars> e{};
  // Enumerate exponent vectors with sum d by recursion on the position.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(std::span<const int>(e.data(), static_cast<std::size_t>(n)));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, d);
  const MonomialOrder& ord = ring.order();
  std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) { return ord.greater(a, b); });
  return out;
}

FieldElement coeff(const Polynomial& f, Monomial m) { return f.coeff(m); }

Polynomial product(const RingHandle& ring, std::span<const Polynomial> factors) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const Polynomial& f : factors) p *= f;
  return p;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingHandle& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scale(d.lead_coef().inverse());
      } else if (at_factor_start()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (ch == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, ring_->field()->from_rational(mpq_class(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->variable_index(name);
      if (idx >= 0) return Polynomial::variable(ring_, idx);
      if (name == "c") {
        auto c = ring_->field()->c();
        if (!c) fail("field " + ring_->field()->name() + " has no element c");
        return Polynomial::constant(ring_, *c);
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  const RingHandle& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingHandle& ring) {
  return Parser(text, ring).parse();
}

}  // namespace sympow
