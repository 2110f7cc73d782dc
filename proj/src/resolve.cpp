#include "sympow/resolve.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sympow/linalg.hpp"

namespace sympow {

namespace {

std::vector<int> repeat(int value, int count) { return std::vector<int>(static_cast<std::size_t>(count), value); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> module_twists(const std::vector<ModuleVector>& vs) {
  std::vector<int> out;
  for (const ModuleVector& v : vs) out.push_back(-v.degree());
  return out;
}

std::size_t t_index(const std::vector<std::array<int, 3>>& basis, const std::array<int, 3>& e) {
  auto it = std::find(basis.begin(), basis.end(), e);
  return static_cast<std::size_t>(it - basis.begin());
}

// Mutual membership of two generating sets in the same free module.
bool same_submodule(const RingHandle& ring, const std::vector<int>& twists,
                    const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b) {
  Submodule ma(ring, twists, a);
  Submodule mb(ring, twists, b);
  for (const ModuleVector& v : b)
    if (!ma.contains(v)) return false;
  for (const ModuleVector& v : a)
    if (!mb.contains(v)) return false;
  return true;
}

// Rows of a matrix as vectors of R^cols with zero twists.
std::vector<ModuleVector> matrix_rows(const PolyMatrix& m, const RingHandle& ring) {
  std::vector<ModuleVector> out;
  for (const auto& row : m) {
    ModuleVector v(ring, row, std::vector<int>(row.size(), 0));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

PolyMatrix columns_to_matrix(const std::vector<ModuleVector>& cols, std::size_t rows) {
  PolyMatrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Polynomial> row;
    for (const ModuleVector& c : cols) row.push_back(c[i]);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

ResolutionShape ResolutionShape::from_twists(std::vector<std::vector<int>> twists) {
  ResolutionShape s;
  for (auto& step : twists) {
    std::sort(step.begin(), step.end(), std::greater<>());
    s.ranks.push_back(static_cast<int>(step.size()));
  }
  s.twists = std::move(twists);
  return s;
}

std::string ResolutionShape::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (i) out << " <- ";
    const auto& step = twists[i];
    bool first = true;
    for (std::size_t j = 0; j < step.size();) {
      std::size_t k = j;
      while (k < step.size() && step[k] == step[j]) ++k;
      if (!first) out << " + ";
      out << "R(" << step[j] << ")";
      if (k - j > 1) out << "^" << (k - j);
      first = false;
      j = k;
    }
    if (step.empty()) out << "0";
  }
  return out.str();
}

ResolutionShape predicted_shape(int d, int d0, int d1, int k) {
  switch (k) {
    case 1:
      return ResolutionShape::from_twists({repeat(-d, 3), {-d - d0, -d - d1}});
    case 2:
      return ResolutionShape::from_twists(
          {repeat(-2 * d, 6), concat(repeat(-2 * d - d0, 3), repeat(-2 * d - d1, 3)), {-3 * d}});
    case 3:
      return ResolutionShape::from_twists({repeat(-3 * d, 10),
                                           concat(repeat(-3 * d - d0, 6), repeat(-3 * d - d1, 6)),
                                           repeat(-4 * d, 3)});
    default:
      throw AlgebraError("resolutions are predicted only for powers 1, 2 and 3");
  }
}

long long multiplicity_from_shape(const ResolutionShape& shape) {
  // K(t) = 1 - sum_{F0} t^a + sum_{F1} t^a - ...; for a one-dimensional
  // quotient K(t) = (1-t)^2 h(t) and the degree is h(1) = K''(1) / 2.
  long long second = 0;
  long long sign = -1;
  for (const auto& step : shape.twists) {
    for (int t : step) {
      long long a = -t;
      second += sign * a * (a - 1);
    }
    sign = -sign;
  }
  return second / 2;
}

std::vector<std::array<int, 3>> t_monomials(int k) {
  std::vector<std::array<int, 3>> out;
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

std::vector<Polynomial> power_generators(const std::array<Polynomial, 3>& gens, int k) {
  std::vector<Polynomial> out;
  for (const auto& e : t_monomials(k))
    out.push_back(gens[0].pow(e[0]) * gens[1].pow(e[1]) * gens[2].pow(e[2]));
  return out;
}

PolyMatrix build_X(const HilbertBurchData& hb) {
  return {{hb.p[0]}, {hb.p[1]}, {hb.p[2]}, {-hb.q[0]}, {-hb.q[1]}, {-hb.q[2]}};
}

PolyMatrix build_Y(const HilbertBurchData& hb) {
  const auto& P = hb.p;
  Polynomial zero(hb.ring_handle());
  std::array<Polynomial, 3> nq{-hb.q[0], -hb.q[1], -hb.q[2]};
  std::array<std::array<Polynomial, 12>, 3> cols{{
      {P[0], P[1], P[2], zero, zero, zero, nq[0], nq[1], nq[2], zero, zero, zero},
      {zero, P[0], zero, P[1], P[2], zero, zero, nq[0], zero, nq[1], nq[2], zero},
      {zero, zero, P[0], zero, P[1], P[2], zero, zero, nq[0], zero, nq[1], nq[2]},
  }};
  PolyMatrix y;
  for (std::size_t i = 0; i < 12; ++i) y.push_back({cols[0][i], cols[1][i], cols[2][i]});
  return y;
}

std::vector<ModuleVector> hilbert_burch_relations(const HilbertBurchData& hb, int k) {
  if (k < 2 || k > 3) throw AlgebraError("Hilbert-Burch relations are built for powers 2 and 3");
  const RingHandle& ring = hb.ring_handle();
  auto targets = t_monomials(k);
  std::vector<int> twists(targets.size(), k * hb.d);
  std::vector<ModuleVector> out;
  for (const auto* col : {&hb.q, &hb.p}) {
    for (const auto& mu : t_monomials(k - 1)) {
      std::vector<Polynomial> comps(targets.size(), Polynomial(ring));
      for (std::size_t i = 0; i < 3; ++i) {
        std::array<int, 3> e = mu;
        ++e[i];
        comps[t_index(targets, e)] += (*col)[i];
      }
      out.emplace_back(ring, std::move(comps), twists);
    }
  }
  return out;
}

std::vector<ModuleVector> matrix_columns(const PolyMatrix& m, const RingHandle& ring,
                                         const std::vector<int>& twists) {
  std::vector<ModuleVector> out;
  if (m.empty()) return out;
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    std::vector<Polynomial> comps;
    for (const auto& row : m) comps.push_back(row[j]);
    out.emplace_back(ring, std::move(comps), twists);
  }
  return out;
}

PowerResolution resolve_power(const HilbertBurchData& hb, int k) {
  ResolutionShape predicted = predicted_shape(hb.d, hb.d0, hb.d1, k);
  std::vector<Polynomial> gens = power_generators(hb.minors, k);

  std::vector<ModuleVector> first = minimalize(syzygies(std::span<const Polynomial>(gens)));
  for (const ModuleVector& v : first)
    if (!contract(v, gens).is_zero()) throw AlgebraError("first syzygy does not annihilate I^k");

  std::vector<ModuleVector> second;
  if (!first.empty()) second = minimalize(syzygies(std::span<const ModuleVector>(first)));
  for (const ModuleVector& v : second) {
    if (!combine(v.components(), first).is_zero())
      throw AlgebraError("second syzygy does not annihilate the first");
  }
  if (!second.empty()) {
    auto third = minimalize(syzygies(std::span<const ModuleVector>(second)));
    if (!third.empty())
      throw ShapeMismatch("resolution of I^" + std::to_string(k) + " has length greater than 2");
  }

  std::vector<std::vector<int>> twists{std::vector<int>(gens.size(), -k * hb.d), module_twists(first)};
  if (!second.empty()) twists.push_back(module_twists(second));
  ResolutionShape shape = ResolutionShape::from_twists(std::move(twists));
  if (!(shape == predicted))
    throw ShapeMismatch("resolution of I^" + std::to_string(k) + " is " + shape.to_string() +
                        ", expected " + predicted.to_string());
  return PowerResolution{k,     hb,    std::move(gens), std::move(first), std::move(second),
                         shape, predicted};
}

PowerResolution resolve_power(const Ideal& ideal, int k) {
  HilbertBurchData hb = hilbert_burch(ideal);
  // The minimal generators of I^k are the k-fold products; a dependency
  // among them means the ideal is outside the height-two ACM setting.
  auto gens = power_generators(hb.minors, k);
  Ideal power(ideal.ring_handle(), gens);
  if (minimal_generators(power).size() != gens.size())
    throw ShapeMismatch("the " + std::to_string(gens.size()) + " products generating I^" +
                        std::to_string(k) + " are not minimal");
  return resolve_power(hb, k);
}

LastMapComparison compare_last_map(const HilbertBurchData& hb) {
  const RingHandle& ring = hb.ring_handle();
  LastMapComparison out;
  PowerResolution res = resolve_power(hb, 3);

  std::vector<ModuleVector> relations = hilbert_burch_relations(hb, 3);
  std::vector<int> gen_twists(10, 3 * hb.d);
  out.relations_generate = same_submodule(ring, gen_twists, relations, res.first);

  std::vector<int> rel_twists;
  for (const ModuleVector& r : relations) rel_twists.push_back(r.degree());
  PolyMatrix y = build_Y(hb);
  std::vector<ModuleVector> y_cols = matrix_columns(y, ring, rel_twists);
  out.columns_are_relations = std::all_of(y_cols.begin(), y_cols.end(), [&](const ModuleVector& c) {
    return combine(c.components(), relations).is_zero();
  });

  // The last map of the resolution, written in the Hilbert-Burch basis.
  std::vector<ModuleVector> last = minimalize(syzygies(std::span<const ModuleVector>(relations)));
  out.columns_generate = last.size() == 3 && same_submodule(ring, rel_twists, y_cols, last);

  std::vector<ModuleVector> y_rows = matrix_rows(y, ring);
  std::vector<ModuleVector> last_rows = matrix_rows(columns_to_matrix(last, 12), ring);
  out.unaligned_images_equal = same_submodule(ring, {0, 0, 0}, y_rows, last_rows);
  if (!out.columns_generate) return out;

  // Both column sets are minimal generators of one free module generated in
  // a single degree, so last = Y * A for a constant invertible A. Rewrite the
  // computed map in the basis of Y's columns (last * A^{-1}) and compare the
  // images of the transposes.
  Submodule y_span(ring, rel_twists, y_cols);
  FieldHandle field = ring->field();
  Matrix a(field, 3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Membership mem = y_span.member(last[j]);
    for (std::size_t i = 0; i < 3; ++i) {
      const Polynomial& coord = mem.coordinates[i];
      if (!coord.is_zero() && !coord.is_constant()) return out;
      a.at(i, j) = coord.is_zero() ? field->zero() : coord.lead_coef();
    }
  }
  Matrix aug(field, 3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, 3 + i) = field->one();
  }
  RowEchelon inv = row_reduce(std::move(aug));
  if (inv.pivot_columns.size() != 3 || inv.pivot_columns[2] != 2) return out;
  PolyMatrix aligned;
  for (std::size_t r = 0; r < 12; ++r) {
    std::vector<Polynomial> row(3, Polynomial(ring));
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        row[j] += last[k][r].scale(inv.reduced.at(k, 3 + j));
    aligned.push_back(std::move(row));
  }
  out.transpose_images_equal = same_submodule(ring, {0, 0, 0}, y_rows, matrix_rows(aligned, ring));
  return out;
}

bool check_last_map_equivalence(const Ideal& ideal) {
  return compare_last_map(hilbert_burch(ideal)).equivalent();
}

}  // namespace sympow
