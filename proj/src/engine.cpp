#include "sympow/engine.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace sympow::engine {

namespace {

struct Key {
  Monomial mon;
  std::uint32_t comp;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t x = (k.mon.packed() ^ (static_cast<std::uint64_t>(k.comp) << 59) ^ k.comp) *
                      0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace

ModuleLayout::ModuleLayout(RingHandle ring, std::vector<int> shifts, std::vector<int> blocks,
                           bool graded)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), blocks_(std::move(blocks)),
      graded_(graded) {
  if (shifts_.empty()) throw AlgebraError("module must have positive rank");
  if (blocks_.empty()) blocks_.assign(shifts_.size(), 0);
  if (blocks_.size() != shifts_.size()) throw AlgebraError("one block index per component");
}

int ModuleLayout::compare(Monomial a, std::uint32_t ca, Monomial b, std::uint32_t cb) const {
  if (ca != cb) {
    int ba = blocks_[ca], bb = blocks_[cb];
    if (ba != bb) return ba < bb ? 1 : -1;
  }
  if (graded_) {
    int da = a.degree() + shifts_[ca], db = b.degree() + shifts_[cb];
    if (da != db) return da < db ? -1 : 1;
  }
  if (int c = ring_->order().compare(a, b)) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

int ModuleLayout::max_degree(const Vec& v) const {
  int d = 0;
  bool first = true;
  for (const VTerm& t : v) {
    int e = degree(t.mon, t.comp);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

bool ModuleLayout::is_homogeneous(const Vec& v) const {
  for (const VTerm& t : v)
    if (degree(t.mon, t.comp) != degree(v.front().mon, v.front().comp)) return false;
  return true;
}

void ModuleLayout::sort(Vec& v) const {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
}

Vec from_polynomial(const Polynomial& f, std::uint32_t comp) {
  Vec v;
  v.reserve(f.size());
  for (const Term& t : f.terms()) v.push_back({t.mon, comp, t.coef});
  return v;
}

Polynomial to_polynomial(const RingHandle& ring, const Vec& v, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const VTerm& t : v)
    if (t.comp == comp) terms.push_back({t.mon, t.coef});
  return Polynomial::from_terms(ring, std::move(terms));
}

Vec mul_term(const Vec& v, Monomial m, const FieldElement& c) {
  Vec out;
  out.reserve(v.size());
  for (const VTerm& t : v) out.push_back({t.mon * m, t.comp, t.coef * c});
  return out;
}

Vec subtract(const ModuleLayout& layout, const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : layout.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mon, b[j].comp, -b[j].coef});
      ++j;
    } else {
      FieldElement s = a[i].coef - b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].mon, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

GroebnerEngine::GroebnerEngine(ModuleLayout layout) : layout_(std::move(layout)) {}

void GroebnerEngine::add(Vec v) {
  for (const VTerm& t : v) {
    if (t.comp >= static_cast<std::uint32_t>(layout_.rank()))
      throw AlgebraError("vector component outside the module");
    if (t.coef.field() != layout_.ring().field())
      throw FieldError("vector coefficient from a different field");
  }
  layout_.sort(v);
  if (v.empty()) return;
  if (!layout_.is_homogeneous(v)) homogeneous_ = false;
  int sugar = layout_.max_degree(v);
  inputs_.push_back(std::move(v));
  queue_.push_back({-1, static_cast<int>(inputs_.size() - 1), inputs_.back().front().mon,
                    inputs_.back().front().comp, sugar});
}

bool GroebnerEngine::precedes(const Work& a, const Work& b) const {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (int c = layout_.compare(a.lcm, a.comp, b.lcm, b.comp)) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

Vec GroebnerEngine::spair(int i, int j) const {
  const Vec& a = elements_[static_cast<std::size_t>(i)].vec;
  const Vec& b = elements_[static_cast<std::size_t>(j)].vec;
  Monomial l = a.front().mon.lcm(b.front().mon);
  FieldElement one = layout_.ring().field()->one();
  return subtract(layout_, mul_term(a, l / a.front().mon, one), mul_term(b, l / b.front().mon, one));
}

void GroebnerEngine::compute(std::optional<int> max_degree) {
  while (!queue_.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k)
      if (precedes(queue_[k], queue_[best])) best = k;
    if (max_degree && queue_[best].sugar > *max_degree) return;
    Work w = queue_[best];
    queue_[best] = queue_.back();
    queue_.pop_back();
    Vec s = w.i < 0 ? inputs_[static_cast<std::size_t>(w.j)] : spair(w.i, w.j);
    ++stats_.pairs_reduced;
    Vec r = reduce_impl(std::move(s), true, -1);
    if (r.empty()) {
      ++stats_.zero_reductions;
      continue;
    }
    if (!r.front().coef.is_one()) {
      FieldElement inv = r.front().coef.inverse();
      for (VTerm& t : r) t.coef *= inv;
    }
    insert(std::move(r), w.sugar);
  }
}

void GroebnerEngine::insert(Vec h, int sugar) {
  const int t = static_cast<int>(elements_.size());
  const Monomial lt = h.front().mon;
  const std::uint32_t ct = h.front().comp;
  const bool rank_one = layout_.rank() == 1;
  const Ring& ring = layout_.ring();
  elements_.push_back({std::move(h), sugar, true});

  struct Candidate {
    int i;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> cand;
  for (int i : live_) {
    const VTerm& lead = elements_[static_cast<std::size_t>(i)].vec.front();
    if (lead.comp != ct) continue;
    cand.push_back({i, lead.mon.lcm(lt), rank_one && lead.mon.coprime(lt)});
  }
  stats_.pairs_formed += cand.size();

  // Gebauer-Moeller: keep a new pair unless another new pair has an lcm
  // dividing its lcm; a surviving coprime pair then removes its whole lcm class.
  std::vector<Candidate> kept;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    const Candidate& c = cand[k];
    bool keep = c.coprime;
    if (!keep) {
      keep = true;
      for (std::size_t o = k + 1; o < cand.size() && keep; ++o)
        if (cand[o].lcm.divides(c.lcm)) keep = false;
      for (const Candidate& d : kept)
        if (d.lcm.divides(c.lcm)) {
          keep = false;
          break;
        }
    }
    if (keep) kept.push_back(c);
  }

  // Chain criterion on old pairs.
  std::erase_if(queue_, [&](const Work& w) {
    if (w.i < 0 || w.comp != ct || !lt.divides(w.lcm)) return false;
    Monomial li = elements_[static_cast<std::size_t>(w.i)].vec.front().mon.lcm(lt);
    Monomial lj = elements_[static_cast<std::size_t>(w.j)].vec.front().mon.lcm(lt);
    return li != w.lcm && lj != w.lcm;
  });

  for (const Candidate& c : kept) {
    if (c.coprime) continue;
    const Element& e = elements_[static_cast<std::size_t>(c.i)];
    int wl = ring.weighted_degree(c.lcm);
    int s = std::max(e.sugar + wl - ring.weighted_degree(e.vec.front().mon),
                     sugar + wl - ring.weighted_degree(lt));
    queue_.push_back({c.i, t, c.lcm, ct, s});
  }

  std::erase_if(live_, [&](int i) {
    Element& e = elements_[static_cast<std::size_t>(i)];
    if (e.vec.front().comp == ct && lt.divides(e.vec.front().mon)) {
      e.live = false;
      return true;
    }
    return false;
  });
  live_.push_back(t);
  stats_.basis_size = live_.size();
}

Vec GroebnerEngine::reduce(const Vec& v, bool full) const {
  Vec w = v;
  layout_.sort(w);
  return reduce_impl(std::move(w), full, -1);
}

Vec GroebnerEngine::reduce_above_block(const Vec& v, int stop_block) const {
  Vec w = v;
  layout_.sort(w);
  return reduce_impl(std::move(w), false, stop_block);
}

Vec GroebnerEngine::reduce_impl(Vec v, bool full, int stop_block) const {
  if (v.empty()) return v;
  // Sum of pending terms keyed by (monomial, component); the heap yields the
  // largest pending key. Every key enters the heap once, because a key is
  // only pushed when its accumulator entry is created and all keys produced
  // after popping a key are smaller than it.
  std::unordered_map<Key, FieldElement, KeyHash> acc;
  acc.reserve(v.size() * 4);
  auto less = [this](const Key& a, const Key& b) {
    return layout_.compare(a.mon, a.comp, b.mon, b.comp) < 0;
  };
  std::priority_queue<Key, std::vector<Key>, decltype(less)> heap(less);
  for (VTerm& t : v) {
    Key k{t.mon, t.comp};
    auto [it, fresh] = acc.try_emplace(k, t.coef);
    if (fresh)
      heap.push(k);
    else
      it->second += t.coef;
  }

  std::vector<std::pair<Monomial, std::uint32_t>> leads;
  leads.reserve(live_.size());
  for (int i : live_) {
    const VTerm& l = elements_[static_cast<std::size_t>(i)].vec.front();
    leads.emplace_back(l.mon, l.comp);
  }

  Vec rest;
  bool copying = false;
  while (!heap.empty()) {
    Key k = heap.top();
    heap.pop();
    auto it = acc.find(k);
    FieldElement c = it->second;
    acc.erase(it);
    if (c.is_zero()) continue;
    if (copying) {
      rest.push_back({k.mon, k.comp, c});
      continue;
    }
    if (stop_block >= 0 && layout_.block(k.comp) >= stop_block) {
      rest.push_back({k.mon, k.comp, c});
      copying = true;
      continue;
    }
    std::size_t d = 0;
    while (d < leads.size() && !(leads[d].second == k.comp && leads[d].first.divides(k.mon))) ++d;
    if (d == leads.size()) {
      rest.push_back({k.mon, k.comp, c});
      if (!full) copying = true;
      continue;
    }
    const Vec& g = elements_[static_cast<std::size_t>(live_[d])].vec;
    Monomial q = k.mon / g.front().mon;
    for (std::size_t n = 1; n < g.size(); ++n) {
      const VTerm& t = g[n];
      Key nk{t.mon * q, t.comp};
      FieldElement delta = -(t.coef * c);
      auto [pos, fresh] = acc.try_emplace(nk, delta);
      if (fresh)
        heap.push(nk);
      else
        pos->second += delta;
    }
  }
  return rest;
}

std::vector<Vec> GroebnerEngine::reduced_basis() const {
  std::vector<Vec> out;
  out.reserve(live_.size());
  for (int i : live_) {
    const Vec& g = elements_[static_cast<std::size_t>(i)].vec;
    Vec tail(g.begin() + 1, g.end());
    Vec r{g.front()};
    Vec red = reduce_impl(std::move(tail), true, -1);
    r.insert(r.end(), red.begin(), red.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [&](const Vec& a, const Vec& b) { return layout_.compare(a.front(), b.front()) < 0; });
  return out;
}

std::vector<VTerm> GroebnerEngine::leading_terms() const {
  std::vector<VTerm> out;
  for (int i : live_) out.push_back(elements_[static_cast<std::size_t>(i)].vec.front());
  return out;
}

}  // namespace sympow::engine
