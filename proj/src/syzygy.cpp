#include "sympow/syzygy.hpp"

#include <algorithm>
#include <mutex>

#include "sympow/engine.hpp"
#include "sympow/linalg.hpp"

namespace sympow {

namespace {

engine::Vec to_vec(const ModuleVector& v, std::uint32_t offset = 0) {
  engine::Vec out;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const Term& t : v[i].terms())
      out.push_back({t.mon, static_cast<std::uint32_t>(i) + offset, t.coef});
  return out;
}

ModuleVector from_vec(const RingHandle& ring, const engine::Vec& v, std::uint32_t offset,
                      const std::vector<int>& twists) {
  std::vector<std::vector<Term>> parts(twists.size());
  for (const engine::VTerm& t : v) {
    if (t.comp < offset || t.comp >= offset + twists.size()) continue;
    parts[t.comp - offset].push_back({t.mon, t.coef});
  }
  std::vector<Polynomial> comps;
  for (auto& p : parts) comps.push_back(Polynomial::from_terms(ring, std::move(p)));
  return ModuleVector(ring, std::move(comps), twists);
}

int max_module_degree(const ModuleVector& v) {
  int d = 0;
  bool first = true;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v[i].is_zero()) continue;
    int e = v[i].degree() + v.twists()[i];
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

}  // namespace

ModuleVector::ModuleVector(RingHandle ring, std::vector<Polynomial> components,
                           std::vector<int> twists)
    : ring_(std::move(ring)), comps_(std::move(components)), twists_(std::move(twists)) {
  if (twists_.empty()) twists_.assign(comps_.size(), 0);
  if (twists_.size() != comps_.size()) throw AlgebraError("one twist per component required");
  for (const Polynomial& p : comps_)
    if (!p.ring().same_as(*ring_)) throw AlgebraError("module component from a different ring");
}

ModuleVector ModuleVector::zero(RingHandle ring, std::vector<int> twists) {
  std::vector<Polynomial> comps(twists.size(), Polynomial(ring));
  return ModuleVector(std::move(ring), std::move(comps), std::move(twists));
}

bool ModuleVector::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool ModuleVector::is_homogeneous() const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!comps_[i].is_homogeneous()) return false;
    int e = comps_[i].degree() + twists_[i];
    if (deg && *deg != e) return false;
    deg = e;
  }
  return true;
}

int ModuleVector::degree() const {
  if (is_zero()) throw AlgebraError("the zero vector has no degree");
  if (!is_homogeneous()) throw AlgebraError("vector is not homogeneous");
  return max_module_degree(*this);
}

void ModuleVector::check_compatible(const ModuleVector& o) const {
  if (twists_ != o.twists_) throw AlgebraError("module twists do not match");
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  check_compatible(o);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < comps_.size(); ++i) c.push_back(comps_[i] + o.comps_[i]);
  return ModuleVector(ring_, std::move(c), twists_);
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  check_compatible(o);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < comps_.size(); ++i) c.push_back(comps_[i] - o.comps_[i]);
  return ModuleVector(ring_, std::move(c), twists_);
}

ModuleVector ModuleVector::operator*(const Polynomial& f) const {
  std::vector<Polynomial> c;
  for (const Polynomial& p : comps_) c.push_back(p * f);
  return ModuleVector(ring_, std::move(c), twists_);
}

ModuleVector ModuleVector::scale(const FieldElement& s) const {
  std::vector<Polynomial> c;
  for (const Polynomial& p : comps_) c.push_back(p.scale(s));
  return ModuleVector(ring_, std::move(c), twists_);
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  return twists_ == o.twists_ && comps_ == o.comps_;
}

std::string ModuleVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ", ";
    s += comps_[i].to_string();
  }
  return s + ")";
}

Polynomial contract(const ModuleVector& v, std::span<const Polynomial> gens) {
  if (gens.size() != v.rank()) throw AlgebraError("vector and generator list differ in length");
  Polynomial s(v.ring_handle());
  for (std::size_t i = 0; i < gens.size(); ++i) s += v[i] * gens[i];
  return s;
}

ModuleVector combine(std::span<const Polynomial> coeffs, std::span<const ModuleVector> gens) {
  if (coeffs.size() != gens.size() || gens.empty())
    throw AlgebraError("coefficient and generator lists differ in length");
  ModuleVector s = ModuleVector::zero(gens.front().ring_handle(), gens.front().twists());
  for (std::size_t i = 0; i < gens.size(); ++i) s = s + gens[i] * coeffs[i];
  return s;
}

// ---------------------------------------------------------------------------

struct Submodule::Cache {
  std::mutex mu;
  std::unique_ptr<engine::GroebnerEngine> eng;
  std::vector<int> tag_twists;
};

Submodule::Submodule(RingHandle ring, std::vector<int> twists, std::vector<ModuleVector> gens)
    : ring_(std::move(ring)), twists_(std::move(twists)), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const ModuleVector& g : gens_)
    if (g.twists() != twists_) throw AlgebraError("generator twists do not match the module");
}

Membership Submodule::member(const ModuleVector& v) const {
  if (v.twists() != twists_) throw AlgebraError("vector twists do not match the module");
  const std::size_t k = twists_.size();
  const std::size_t n = gens_.size();
  Membership result;
  if (v.is_zero()) {
    result.member = true;
    result.coordinates.assign(n, Polynomial(ring_));
    return result;
  }
  engine::Vec r;
  {
    std::lock_guard lock(cache_->mu);
    if (!cache_->eng) {
      std::vector<int> shifts = twists_;
      std::vector<int> blocks(k, 0);
      for (const ModuleVector& g : gens_) {
        int d = g.is_zero() ? 0 : max_module_degree(g);
        shifts.push_back(d);
        cache_->tag_twists.push_back(d);
        blocks.push_back(1);
      }
      cache_->eng = std::make_unique<engine::GroebnerEngine>(
          engine::ModuleLayout(ring_, shifts, blocks, true));
      FieldElement one = ring_->field()->one();
      for (std::size_t i = 0; i < n; ++i) {
        engine::Vec x = to_vec(gens_[i]);
        x.push_back({Monomial(), static_cast<std::uint32_t>(k + i), one});
        cache_->eng->add(std::move(x));
      }
    }
    engine::GroebnerEngine& e = *cache_->eng;
    bool graded = e.homogeneous() && v.is_homogeneous();
    e.compute(graded ? std::optional<int>(max_module_degree(v)) : std::nullopt);
    r = e.reduce_above_block(to_vec(v), 1);
  }
  if (!r.empty() && r.front().comp < k) return result;
  result.member = true;
  ModuleVector tags = from_vec(ring_, r, static_cast<std::uint32_t>(k), cache_->tag_twists);
  for (std::size_t i = 0; i < n; ++i) result.coordinates.push_back(-tags[i]);
  if (n > 0 && combine(result.coordinates, gens_) != v)
    throw AlgebraError("module membership certificate failed to verify");
  if (n == 0) throw AlgebraError("nonzero vector reported in the zero module");
  return result;
}

Membership module_member(const ModuleVector& v, std::span<const ModuleVector> gens) {
  return Submodule(v.ring_handle(), v.twists(), std::vector<ModuleVector>(gens.begin(), gens.end()))
      .member(v);
}

std::vector<ModuleVector> syzygies(std::span<const ModuleVector> gens) {
  if (gens.empty()) return {};
  const RingHandle& ring = gens.front().ring_handle();
  const std::vector<int>& twists = gens.front().twists();
  const std::size_t k = twists.size();
  const std::size_t n = gens.size();
  std::vector<int> shifts = twists;
  std::vector<int> blocks(k, 0);
  std::vector<int> tag_twists;
  for (const ModuleVector& g : gens) {
    if (g.twists() != twists) throw AlgebraError("generators live in different modules");
    int d = g.is_zero() ? 0 : max_module_degree(g);
    shifts.push_back(d);
    tag_twists.push_back(d);
    blocks.push_back(1);
  }
  engine::GroebnerEngine eng(engine::ModuleLayout(ring, shifts, blocks, true));
  FieldElement one = ring->field()->one();
  for (std::size_t i = 0; i < n; ++i) {
    engine::Vec x = to_vec(gens[i]);
    x.push_back({Monomial(), static_cast<std::uint32_t>(k + i), one});
    eng.add(std::move(x));
  }
  eng.compute();
  std::vector<ModuleVector> out;
  for (const engine::Vec& b : eng.reduced_basis()) {
    if (b.front().comp < k) continue;
    out.push_back(from_vec(ring, b, static_cast<std::uint32_t>(k), tag_twists));
  }
  return out;
}

std::vector<ModuleVector> syzygies(std::span<const Polynomial> gens) {
  std::vector<ModuleVector> vs;
  for (const Polynomial& g : gens) vs.emplace_back(g.ring_handle(), std::vector<Polynomial>{g});
  return syzygies(std::span<const ModuleVector>(vs));
}

std::vector<ModuleVector> minimalize(std::span<const ModuleVector> vectors) {
  std::vector<ModuleVector> vs;
  for (const ModuleVector& v : vectors) {
    if (v.is_zero()) continue;
    if (!v.is_homogeneous()) throw HypothesisError("minimalize needs homogeneous vectors");
    vs.push_back(v);
  }
  if (vs.empty()) return {};
  std::stable_sort(vs.begin(), vs.end(),
                   [](const ModuleVector& a, const ModuleVector& b) { return a.degree() < b.degree(); });
  engine::GroebnerEngine eng(
      engine::ModuleLayout(vs.front().ring_handle(), vs.front().twists(), {}, true));
  std::vector<ModuleVector> kept;
  for (const ModuleVector& v : vs) {
    if (v.twists() != vs.front().twists()) throw AlgebraError("vectors live in different modules");
    eng.compute(v.degree());
    if (eng.reduce(to_vec(v), false).empty()) continue;
    kept.push_back(v);
    eng.add(to_vec(v));
  }
  return kept;
}

// ---------------------------------------------------------------------------

namespace {

int column_degree(const std::array<Polynomial, 3>& col) {
  int d = -1;
  for (const Polynomial& p : col) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw HypothesisError("Hilbert-Burch column is not homogeneous");
    if (d >= 0 && p.degree() != d) throw HypothesisError("Hilbert-Burch column has mixed degrees");
    d = p.degree();
  }
  if (d < 0) throw HypothesisError("Hilbert-Burch column is zero");
  return d;
}

// Lexicographic comparison of the leading monomials of the entries; a zero
// entry counts as smaller than any monomial.
bool leads_before(const ModuleVector& a, const ModuleVector& b) {
  const MonomialOrder& ord = a.ring_handle()->order();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    bool za = a[i].is_zero(), zb = b[i].is_zero();
    if (za != zb) return za;
    if (za) continue;
    int c = ord.compare(a[i].lead_monomial(), b[i].lead_monomial());
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

HilbertBurchData HilbertBurchData::from_columns(std::array<Polynomial, 3> p,
                                                std::array<Polynomial, 3> q) {
  for (int i = 0; i < 3; ++i)
    if (!p[static_cast<std::size_t>(i)].ring().same_as(p[0].ring()) ||
        !q[static_cast<std::size_t>(i)].ring().same_as(p[0].ring()))
      throw AlgebraError("Hilbert-Burch entries from different rings");
  int d0 = column_degree(p);
  int d1 = column_degree(q);
  if (d0 > d1) {
    // Keep d0 <= d1; swapping the columns negates every minor.
    std::swap(p, q);
    std::swap(d0, d1);
  }
  std::array<Polynomial, 3> minors{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                                   p[0] * q[1] - p[1] * q[0]};
  int d = -1;
  for (const Polynomial& m : minors)
    if (!m.is_zero()) d = m.degree();
  if (d < 0) throw HypothesisError("Hilbert-Burch columns are proportional: all minors vanish");
  if (d0 + d1 != d) throw HypothesisError("column degrees do not add up to the minor degree");
  HilbertBurchData hb{std::move(p), std::move(q), d0, d1, d, std::move(minors), {}};
  for (const auto* col : {&hb.p, &hb.q}) {
    Polynomial s = (*col)[0] * hb.minors[0] + (*col)[1] * hb.minors[1] + (*col)[2] * hb.minors[2];
    if (!s.is_zero()) throw HypothesisError("Hilbert-Burch column is not a syzygy of the minors");
  }
  return hb;
}

HilbertBurchData hilbert_burch(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw HypothesisError("Hilbert-Burch data needs a homogeneous ideal");
  std::vector<Polynomial> gens = minimal_generators(ideal);
  if (gens.size() != 3)
    throw HypothesisError("ideal has " + std::to_string(gens.size()) +
                          " minimal generators; exactly 3 are required");
  int d = gens[0].degree();
  for (const Polynomial& g : gens)
    if (g.degree() != d) throw HypothesisError("minimal generators have mixed degrees");

  std::vector<ModuleVector> syz = minimalize(syzygies(std::span<const Polynomial>(gens)));
  if (syz.size() != 2)
    throw HypothesisError("syzygy module has " + std::to_string(syz.size()) +
                          " minimal generators; the ideal is not a height-two ACM ideal");
  std::sort(syz.begin(), syz.end(), [](const ModuleVector& a, const ModuleVector& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return leads_before(a, b);
  });
  HilbertBurchData hb = HilbertBurchData::from_columns({syz[0][0], syz[0][1], syz[0][2]},
                                                       {syz[1][0], syz[1][1], syz[1][2]});
  if (hb.d != d) throw HypothesisError("minors have the wrong degree; the ideal is not ACM");

  auto basis = graded_basis(ideal.ring(), d);
  Matrix minors = coefficient_matrix(hb.minors, basis);
  if (rank(minors) != 3) throw HypothesisError("minors are linearly dependent");
  for (const Polynomial& g : gens) {
    std::array<Polynomial, 1> one{g};
    Matrix col = coefficient_matrix(one, basis);
    std::vector<FieldElement> rhs;
    for (std::size_t r = 0; r < col.rows(); ++r) rhs.push_back(col.at(r, 0));
    auto x = solve(minors, rhs);
    if (!x) throw HypothesisError("minors do not generate the ideal; the input is not ACM");
    hb.change_of_basis.push_back(*x);
  }
  return hb;
}

}  // namespace sympow
