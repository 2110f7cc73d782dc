#include "sympow/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "sympow/engine.hpp"

namespace sympow {

namespace {

int weighted_degree(const Polynomial& f) {
  int d = 0;
  for (const Term& t : f.terms()) d = std::max(d, f.ring().weighted_degree(t.mon));
  return d;
}

bool weighted_homogeneous(const Polynomial& f) {
  for (const Term& t : f.terms())
    if (f.ring().weighted_degree(t.mon) != f.ring().weighted_degree(f.terms().front().mon))
      return false;
  return true;
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_as(b.ring())) throw AlgebraError("ideals live in different rings");
}

}  // namespace

struct Ideal::Cache {
  std::mutex mu;
  std::unique_ptr<engine::GroebnerEngine> eng;
  std::optional<std::vector<Polynomial>> gb;
  bool homogeneous = true;

  engine::GroebnerEngine& ready(const Ideal& self, std::optional<int> degree) {
    if (!eng) {
      eng = std::make_unique<engine::GroebnerEngine>(engine::ModuleLayout(self.ring_handle()));
      for (const Polynomial& g : self.generators()) eng->add(engine::from_polynomial(g));
      homogeneous = eng->homogeneous();
    }
    eng->compute(homogeneous ? degree : std::nullopt);
    return *eng;
  }
};

Ideal::Ideal(RingHandle ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Polynomial& g : generators) {
    if (!g.ring().same_as(*ring_)) throw AlgebraError("generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingHandle ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingHandle ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::irrelevant(RingHandle ring) {
  std::vector<Polynomial> v;
  for (int i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(v));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), weighted_homogeneous);
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->gb) {
    engine::GroebnerEngine& e = cache_->ready(*this, std::nullopt);
    std::vector<Polynomial> out;
    for (const engine::Vec& v : e.reduced_basis()) out.push_back(engine::to_polynomial(ring_, v));
    cache_->gb = std::move(out);
  }
  return *cache_->gb;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!f.ring().same_as(*ring_)) throw AlgebraError("polynomial from a different ring");
  if (f.is_zero()) return f;
  std::lock_guard lock(cache_->mu);
  engine::GroebnerEngine& e = cache_->ready(*this, weighted_degree(f));
  return engine::to_polynomial(ring_, e.reduce(engine::from_polynomial(f)));
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

bool Ideal::is_unit() const { return contains(Polynomial::constant(ring_, 1)); }

Ideal Ideal::in_ring(const RingHandle& target) const {
  std::vector<Polynomial> g;
  for (const Polynomial& p : gens_) g.push_back(p.in_ring(target));
  return Ideal(target, std::move(g));
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, MonomialOrder order) {
  if (gens.empty()) return {};
  RingHandle ring = gens.front().ring().with_order(order);
  std::vector<Polynomial> g;
  for (const Polynomial& p : gens) g.push_back(p.in_ring(ring));
  return Ideal(ring, std::move(g)).groebner_basis();
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_handle(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> g;
  for (const Polynomial& p : a.generators())
    for (const Polynomial& q : b.generators()) {
      Polynomial r = p * q;
      if (std::find(g.begin(), g.end(), r) == g.end()) g.push_back(std::move(r));
    }
  return Ideal(a.ring_handle(), std::move(g));
}

Ideal ideal_power(const Ideal& ideal, int e) {
  if (e < 0) throw AlgebraError("negative ideal power");
  const RingHandle& ring = ideal.ring_handle();
  if (e == 0) return Ideal::unit(ring);
  const auto& gens = ideal.generators();
  const int k = static_cast<int>(gens.size());
  std::vector<Polynomial> out;
  std::vector<int> exps(static_cast<std::size_t>(k), 0);
  // Exponent vectors of total e in decreasing lexicographic order, so the
  // products of (g1, g2, g3) come out as g1^3, g1^2 g2, g1^2 g3, g1 g2^2, ...
  auto rec = [&](auto&& self, int pos, int left, Polynomial acc) -> void {
    if (pos == k - 1) {
      Polynomial r = acc * gens[static_cast<std::size_t>(pos)].pow(left);
      if (!r.is_zero() && std::find(out.begin(), out.end(), r) == out.end())
        out.push_back(std::move(r));
      return;
    }
    for (int a = left; a >= 0; --a)
      self(self, pos + 1, left - a, acc * gens[static_cast<std::size_t>(pos)].pow(a));
  };
  if (k > 0) rec(rec, 0, e, Polynomial::constant(ring, 1));
  return Ideal(ring, std::move(out));
}

namespace {

// Ring with one extra variable in front, eliminated by a block order.
RingHandle ring_with_front_variable(const Ring& ring, int weight) {
  std::string name = "t";
  for (int k = 0; ring.variable_index(name) >= 0; ++k) name = "t" + std::to_string(k);
  std::vector<std::string> names{name};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  std::vector<int> weights{weight};
  weights.insert(weights.end(), ring.weights().begin(), ring.weights().end());
  return Ring::make(ring.field(), std::move(names), MonomialOrder::block(1), std::move(weights));
}

std::vector<int> shift_map(int n, int by) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + by;
  return m;
}

// Monic generators sorted for reproducible output.
Ideal tidy(const RingHandle& ring, std::vector<Polynomial> gens) {
  for (Polynomial& g : gens) g = g.monic();
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingHandle& ring = a.ring_handle();
  if (a.generators().empty() || b.generators().empty()) return Ideal::zero(ring);
  RingHandle big = ring_with_front_variable(*ring, 0);
  const int n = ring->nvars();
  auto up = shift_map(n, 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) gens.push_back(t * f.remap(big, up));
  for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * g.remap(big, up));
  Ideal joint(big, std::move(gens));
  std::vector<int> down(static_cast<std::size_t>(n + 1));
  down[0] = -1;
  for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i + 1)] = i;
  std::vector<Polynomial> out;
  for (const Polynomial& g : joint.groebner_basis()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(),
                            [](const Term& term) { return term.mon[0] == 0; });
    if (free) out.push_back(g.remap(ring, down));
  }
  return tidy(ring, std::move(out));
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw AlgebraError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

namespace {

// Index of the variable when f is a monic single variable, else -1.
int as_variable(const Polynomial& f) {
  if (f.size() != 1 || !f.lead_coef().is_one() || f.lead_monomial().degree() != 1) return -1;
  for (int i = 0; i < f.ring().nvars(); ++i)
    if (f.lead_monomial()[i] == 1) return i;
  return -1;
}

// (I : x_k) or (I : x_k^infinity) for a homogeneous ideal: in grevlex with
// x_k last, dividing the reduced basis by x_k (once, or as often as
// possible) yields a basis of the colon.
Ideal variable_colon(const Ideal& ideal, int k, bool saturate_fully) {
  const RingHandle& ring = ideal.ring_handle();
  const int n = ring->nvars();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(n - 1)]);
  RingHandle grev = ring->order() == MonomialOrder::grevlex()
                        ? ring
                        : ring->with_order(MonomialOrder::grevlex());
  std::vector<Polynomial> moved;
  for (const Polynomial& g : ideal.generators())
    moved.push_back(apply_symmetry(g, perm).in_ring(grev));
  Ideal swapped(grev, std::move(moved));
  std::vector<Polynomial> out;
  Monomial last = Monomial::variable(n - 1);
  for (const Polynomial& g : swapped.groebner_basis()) {
    int e = g.terms().front().mon[n - 1];
    for (const Term& t : g.terms()) e = std::min(e, t.mon[n - 1]);
    if (!saturate_fully) e = std::min(e, 1);
    Polynomial h = g;
    for (int i = 0; i < e; ++i) {
      std::vector<Term> terms;
      for (const Term& t : h.terms()) terms.push_back({t.mon / last, t.coef});
      h = Polynomial::from_terms(grev, std::move(terms));
    }
    out.push_back(apply_symmetry(h, perm).in_ring(ring));
  }
  return tidy(ring, std::move(out));
}

bool is_linear_form(const Polynomial& f) {
  return !f.is_zero() && std::all_of(f.terms().begin(), f.terms().end(),
                                     [](const Term& t) { return t.mon.degree() == 1; });
}

bool is_monomial(const Polynomial& f) { return f.size() == 1; }

// (I : l^infinity) for a linear form l: move l to a coordinate, saturate by
// that variable, move back.
Ideal linear_saturation(const Ideal& ideal, const Polynomial& l) {
  const RingHandle& ring = ideal.ring_handle();
  const int n = ring->nvars();
  int k = -1;
  for (int i = n - 1; i >= 0 && k < 0; --i)
    if (!l.coeff(Monomial::variable(i)).is_zero()) k = i;
  FieldElement a = l.coeff(Monomial::variable(k));
  // forward: x_k -> (x_k - sum_{i != k} a_i x_i) / a_k sends l to x_k.
  std::vector<Polynomial> forward, back;
  Polynomial xk = Polynomial::variable(ring, k);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      forward.push_back((xk + xk.scale(a) - l).scale(a.inverse()));
      back.push_back(l);
    } else {
      forward.push_back(Polynomial::variable(ring, i));
      back.push_back(Polynomial::variable(ring, i));
    }
  }
  Ideal moved = substitute(ideal, forward);
  Ideal sat = variable_colon(moved, k, true);
  return tidy(ring, substitute(sat, back).generators());
}

}  // namespace

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw AlgebraError("colon by the zero polynomial");
  const RingHandle& ring = ideal.ring_handle();
  if (f.is_constant()) return ideal;
  int k = as_variable(f.monic());
  if (k >= 0 && ideal.is_homogeneous()) return variable_colon(ideal, k, false);
  Ideal meet = intersect(ideal, Ideal(ring, {f}));
  std::vector<Polynomial> out;
  for (const Polynomial& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q) throw AlgebraError("intersection with (f) produced a non-multiple of f");
    out.push_back(*q);
  }
  return tidy(ring, std::move(out));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw AlgebraError("saturation by the zero polynomial");
  const RingHandle& ring = ideal.ring_handle();
  if (f.is_constant()) return ideal;
  if (ideal.is_homogeneous()) {
    Polynomial m = f.monic();
    if (is_monomial(m)) {
      Ideal acc = ideal;
      for (int i = 0; i < ring->nvars(); ++i)
        if (m.lead_monomial()[i] > 0) acc = variable_colon(acc, i, true);
      return acc;
    }
    if (is_linear_form(m)) return linear_saturation(ideal, m);
  }
  Ideal acc = ideal;
  while (true) {
    Ideal next = colon(acc, f);
    if (acc.contains(next)) return acc;
    acc = next;
  }
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  const RingHandle& ring = ideal.ring_handle();
  if (by.generators().empty()) return ideal;
  if (by.is_unit()) return ideal;
  if (ideal.is_homogeneous() && by.is_homogeneous() && is_zero_dimensional(by) &&
      ring->order() == MonomialOrder::grevlex()) {
    if (is_zero_dimensional(ideal)) return Ideal::unit(ring);
    // Deterministic search for a linear form avoiding the projective zero set.
    const int n = ring->nvars();
    FieldHandle field = ring->field();
    std::vector<std::vector<std::int64_t>> candidates;
    for (int i = n - 1; i >= 0; --i) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
      c[static_cast<std::size_t>(i)] = 1;
      candidates.push_back(c);
    }
    for (std::int64_t s = 1; s <= 6 && candidates.size() < 64; ++s)
      for (std::int64_t b = 1; b <= 8 && candidates.size() < 64; ++b) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        std::int64_t v = 1;
        for (int i = 0; i < n; ++i) {
          c[static_cast<std::size_t>(i)] = v;
          v = v * b + s;
        }
        candidates.push_back(c);
      }
    for (const auto& c : candidates) {
      Polynomial l(ring);
      for (int i = 0; i < n; ++i)
        l += Polynomial::monomial(ring, Monomial::variable(i), field->from_int(c[static_cast<std::size_t>(i)]));
      if (l.is_zero()) continue;
      std::vector<Polynomial> g = ideal.generators();
      g.push_back(l);
      if (is_zero_dimensional(Ideal(ring, std::move(g)))) return saturate(ideal, l);
    }
  }
  std::vector<Ideal> parts;
  for (const Polynomial& g : by.generators()) parts.push_back(saturate(ideal, g));
  return intersect(parts);
}

Ideal eliminate(const Ideal& ideal, std::span<const int> variables) {
  const Ring& ring = ideal.ring();
  const int count = static_cast<int>(variables.size());
  for (int i = 0; i < count; ++i)
    if (variables[static_cast<std::size_t>(i)] != i)
      throw AlgebraError("eliminated variables must be a prefix of the ring variables");
  if (count == 0) return ideal;
  const MonomialOrder& ord = ring.order();
  bool ok = ord.kind() == MonomialOrder::Kind::lex ||
            (ord.kind() == MonomialOrder::Kind::block && ord.block_size() >= count);
  if (!ok) throw AlgebraError("ring order does not eliminate the requested variables");
  std::vector<Polynomial> out;
  for (const Polynomial& g : ideal.groebner_basis()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (int i = 0; i < count; ++i)
        if (t.mon[i] != 0) return false;
      return true;
    });
    if (free) out.push_back(g);
  }
  return Ideal(ideal.ring_handle(), std::move(out));
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw HypothesisError("minimal generators need a homogeneous ideal");
  std::vector<Polynomial> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return weighted_degree(a) < weighted_degree(b);
  });
  engine::GroebnerEngine eng{engine::ModuleLayout(ideal.ring_handle())};
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gens) {
    int d = weighted_degree(g);
    eng.compute(d);
    if (eng.reduce(engine::from_polynomial(g), false).empty()) continue;
    kept.push_back(g);
    eng.add(engine::from_polynomial(g));
  }
  return kept;
}

bool is_zero_dimensional(const Ideal& ideal) {
  const auto& gb = ideal.groebner_basis();
  for (int i = 0; i < ideal.ring().nvars(); ++i) {
    bool found = false;
    for (const Polynomial& g : gb) {
      Monomial m = g.lead_monomial();
      if (m[i] > 0 && m[i] == m.degree()) found = true;
    }
    if (!found) return false;
  }
  return true;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const RingHandle& ring = f.ring_handle();
  if (images.size() != static_cast<std::size_t>(ring->nvars()))
    throw AlgebraError("one image per variable required");
  RingHandle target = images.front().ring_handle();
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(Polynomial::constant(target, 1));
  Polynomial out(target);
  for (const Term& t : f.terms()) {
    Polynomial p = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = t.mon[static_cast<int>(i)];
      while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) p *= powers[i][static_cast<std::size_t>(e)];
    }
    out += p;
  }
  return out;
}

Ideal substitute(const Ideal& ideal, std::span<const Polynomial> images) {
  std::vector<Polynomial> g;
  for (const Polynomial& p : ideal.generators()) g.push_back(substitute(p, images));
  return Ideal(images.front().ring_handle(), std::move(g));
}

namespace {

using Series = std::vector<long long>;

void add_shifted(Series& a, const Series& b, int shift, long long sign) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += sign * b[i];
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](Monomial a, Monomial b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.packed() < b.packed();
  });
  std::vector<Monomial> out;
  for (Monomial m : ms) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](Monomial o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Numerator of the Hilbert series of k[x]/(ms), by the pivot recursion
// K(M + (m)) = K(M) - t^deg(m) K(M : m).
Series numerator(std::vector<Monomial> ms) {
  ms = minimalize_monomials(std::move(ms));
  bool coprime = true;
  for (std::size_t i = 0; i < ms.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < ms.size() && coprime; ++j)
      if (!ms[i].coprime(ms[j])) coprime = false;
  if (coprime) {
    Series s{1};
    for (Monomial m : ms) {
      Series next = s;
      add_shifted(next, s, m.degree(), -1);
      s = std::move(next);
    }
    return s;
  }
  Monomial pivot = ms.back();
  ms.pop_back();
  std::vector<Monomial> quotient;
  for (Monomial m : ms) quotient.push_back(m / m.gcd(pivot));
  Series s = numerator(ms);
  add_shifted(s, numerator(std::move(quotient)), pivot.degree(), -1);
  return s;
}

}  // namespace

HilbertSeries hilbert_series(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw HypothesisError("Hilbert series needs a homogeneous ideal");
  for (int w : ideal.ring().weights())
    if (w != 1) throw HypothesisError("Hilbert series implemented for the standard grading");
  std::vector<Monomial> leads;
  for (const Polynomial& g : ideal.groebner_basis()) leads.push_back(g.lead_monomial());
  HilbertSeries hs;
  hs.numerator = numerator(leads);
  while (!hs.numerator.empty() && hs.numerator.back() == 0) hs.numerator.pop_back();
  const int n = ideal.ring().nvars();
  if (hs.numerator.empty()) {
    hs.dimension = -1;
    hs.degree = 0;
    return hs;
  }
  Series k = hs.numerator;
  int divisions = 0;
  auto at_one = [](const Series& s) {
    long long v = 0;
    for (long long c : s) v += c;
    return v;
  };
  while (at_one(k) == 0) {
    // k(t) = (1 - t) q(t): q_i = sum_{j <= i} k_j.
    Series q(k.size() - 1);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      run += k[i];
      q[i] = run;
    }
    k = std::move(q);
    ++divisions;
  }
  hs.dimension = n - divisions;
  hs.degree = at_one(k);
  return hs;
}

long long hilbert_function(const Ideal& ideal, int d) {
  std::vector<Monomial> leads;
  for (const Polynomial& g : ideal.groebner_basis()) leads.push_back(g.lead_monomial());
  long long count = 0;
  for (Monomial m : graded_basis(ideal.ring(), d))
    if (std::none_of(leads.begin(), leads.end(), [&](Monomial l) { return l.divides(m); })) ++count;
  return count;
}

long long multiplicity(const Ideal& ideal) {
  HilbertSeries hs = hilbert_series(ideal);
  if (hs.dimension != 1)
    throw HypothesisError("multiplicity requires dim R/I = 1, found " + std::to_string(hs.dimension));
  return hs.degree;
}

ReesIdeal rees_ideal(const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  const Ring& base = f.ring();
  if (!g.ring().same_as(base) || !h.ring().same_as(base))
    throw AlgebraError("Rees ideal inputs from different rings");
  if (base.nvars() > 3) throw AlgebraError("Rees ideal supports at most three base variables");
  const std::array<const Polynomial*, 3> fs{&f, &g, &h};
  for (const Polynomial* p : fs)
    if (p->is_zero() || !p->is_homogeneous()) throw HypothesisError("Rees ideal needs nonzero forms");
  const int n = base.nvars();
  std::vector<std::string> names = base.names();
  std::vector<int> weights(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < 3; ++i) {
    names.push_back("T" + std::to_string(i + 1));
    weights.push_back(fs[static_cast<std::size_t>(i)]->degree() + 1);
  }
  RingHandle target = Ring::make(base.field(), names, MonomialOrder::grevlex(), weights);
  RingHandle big = ring_with_front_variable(*target, 1);
  auto up = shift_map(n, 1);
  Polynomial s = Polynomial::variable(big, 0);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 3; ++i)
    gens.push_back(Polynomial::variable(big, n + 1 + i) - s * fs[static_cast<std::size_t>(i)]->remap(big, up));
  Ideal joint(big, std::move(gens));
  std::vector<int> down(static_cast<std::size_t>(n + 4));
  down[0] = -1;
  for (int i = 0; i < n + 3; ++i) down[static_cast<std::size_t>(i + 1)] = i;
  std::vector<Polynomial> out;
  for (const Polynomial& p : joint.groebner_basis()) {
    bool free = std::all_of(p.terms().begin(), p.terms().end(),
                            [](const Term& t) { return t.mon[0] == 0; });
    if (free) out.push_back(p.remap(target, down));
  }
  Ideal L = tidy(target, std::move(out));
  std::vector<Polynomial> mins = minimal_generators(L);
  return ReesIdeal{target, L, std::move(mins)};
}

bool is_linear_type(const ReesIdeal& rees) {
  const int n = rees.ring->nvars() - 3;
  for (const Polynomial& p : rees.minimal_generators)
    for (const Term& t : p.terms()) {
      int tdeg = 0;
      for (int i = n; i < n + 3; ++i) tdeg += t.mon[i];
      if (tdeg != 1) return false;
    }
  return true;
}

}  // namespace sympow
