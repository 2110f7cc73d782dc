#include "sympow/criterion.hpp"

#include <algorithm>

#include "sympow/linalg.hpp"

namespace sympow {

namespace {

const char* kChar2Note =
    "characteristic 2: Y^T w = (f, g, h) always has the solution w = (0, Q3, Q2, 0, Q1, 0, ..., 0), "
    "so containment holds for every three-generated ideal of points";
const char* kChar3Note =
    "characteristic 3: the homological criterion does not apply; verdict from the oracle only";

// All m * g with m a monomial of degree `degree - deg g`.
std::vector<Polynomial> degree_part(std::span<const Polynomial> gens, int degree) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    if (g.is_zero() || g.degree() > degree) continue;
    for (Monomial m : graded_basis(g.ring(), degree - g.degree()))
      out.push_back(g.mul_term(m, g.field()->one()));
  }
  return out;
}

int span_rank(std::span<const Polynomial> polys, const Ring& ring, int degree) {
  if (polys.empty()) return 0;
  auto basis = graded_basis(ring, degree);
  return static_cast<int>(rank(coefficient_matrix(polys, basis)));
}

std::vector<Polynomial> all_products(const HilbertBurchData& hb) {
  std::vector<Polynomial> out;
  for (const auto& ij : kOffDiagonalProducts) out.push_back(hb.p[ij[0]] * hb.q[ij[1]]);
  for (std::size_t i = 0; i < 3; ++i) out.push_back(hb.p[i] * hb.q[i]);
  return out;
}

std::vector<Polynomial> square_products(const HilbertBurchData& hb) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) out.push_back(hb.p[i] * hb.p[j]);
  return out;
}

void require_not_char(const HilbertBurchData& hb, std::initializer_list<unsigned> banned,
                      const std::string& what) {
  unsigned ch = hb.ring().field()->characteristic();
  for (unsigned b : banned)
    if (ch == b)
      throw CharacteristicError(ch, what + " is not available in characteristic " + std::to_string(ch));
}

// (f, g, h) as a vector of R^3.
ModuleVector minors_vector(const HilbertBurchData& hb) {
  return ModuleVector(hb.ring_handle(), {hb.minors[0], hb.minors[1], hb.minors[2]}, {0, 0, 0});
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::criterion: return "criterion";
    case Method::prop6: return "prop6";
    case Method::oracle: return "oracle";
  }
  return "?";
}

Verdict thm_main_check(const HilbertBurchData& hb) {
  unsigned ch = hb.ring().field()->characteristic();
  if (ch == 3)
    throw CharacteristicError(3, "the homological containment criterion requires characteristic not equal to 3");
  const RingHandle& ring = hb.ring_handle();
  PolyMatrix y = build_Y(hb);
  std::vector<ModuleVector> rows;
  for (const auto& row : y) rows.emplace_back(ring, row, std::vector<int>{0, 0, 0});
  Submodule image(ring, {0, 0, 0}, std::move(rows));
  Membership mem = image.member(minors_vector(hb));

  Verdict v;
  v.method = Method::criterion;
  v.contained = mem.member;
  if (mem.member) v.certificate = std::move(mem.coordinates);
  if (ch == 2) v.characteristic_note = kChar2Note;
  return v;
}

Verdict thm_main_check(const Ideal& ideal) {
  if (ideal.ring().field()->characteristic() == 3)
    throw CharacteristicError(3, "the homological containment criterion requires characteristic not equal to 3");
  return thm_main_check(hilbert_burch(ideal));
}

CoordinateSystem::CoordinateSystem(const RingHandle& ring, int degree, std::vector<Polynomial> named,
                                   std::span<const Polynomial> completion)
    : monomials_(graded_basis(*ring, degree)) {
  const std::size_t n = monomials_.size();
  const std::size_t k = named.size();
  std::vector<Polynomial> all = named;
  all.insert(all.end(), completion.begin(), completion.end());
  if (all.empty()) throw HypothesisError("empty coordinate system");
  RowEchelon e = row_reduce(coefficient_matrix(all, monomials_));
  for (std::size_t i = 0; i < k; ++i)
    if (i >= e.pivot_columns.size() || e.pivot_columns[i] != i)
      throw HypothesisError("named forms are linearly dependent");
  if (e.pivot_columns.size() != n)
    throw HypothesisError("named forms and completion do not span the degree-" + std::to_string(degree) +
                          " forms");
  completion_count_ = n - k;

  std::vector<Polynomial> basis;
  for (std::size_t c : e.pivot_columns) basis.push_back(all[c]);
  Matrix m = coefficient_matrix(basis, monomials_);
  FieldHandle field = ring->field();
  Matrix aug(field, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = field->one();
  }
  RowEchelon inv = row_reduce(std::move(aug));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<FieldElement> row;
    for (std::size_t c = 0; c < n; ++c) row.push_back(inv.reduced.at(i, n + c));
    functionals_.push_back(std::move(row));
  }
}

FieldElement CoordinateSystem::coefficient(const Polynomial& form, std::size_t named_index) const {
  const auto& fn = functionals_.at(named_index);
  FieldElement out = form.field()->zero();
  for (const Term& t : form.terms())
    if (t.mon.degree() != monomials_.front().degree())
      throw AlgebraError("form has the wrong degree for this coordinate system");
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    FieldElement c = form.coeff(monomials_[i]);
    if (!c.is_zero()) out += fn[i] * c;
  }
  return out;
}

SplittingProperties splitting_properties(const HilbertBurchData& hb) {
  const Ring& ring = hb.ring();
  SplittingProperties s;
  std::vector<Polynomial> p_part = degree_part(hb.p, hb.d1);
  s.r_dim_d1 = static_cast<int>(graded_basis(ring, hb.d1).size());
  s.p_dim_d1 = span_rank(p_part, ring, hb.d1);
  std::vector<Polynomial> with_q = p_part;
  with_q.insert(with_q.end(), hb.q.begin(), hb.q.end());
  s.q_rank_mod_p = span_rank(with_q, ring, hb.d1) - s.p_dim_d1;

  std::vector<Polynomial> products = all_products(hb);
  s.products_rank = span_rank(products, ring, hb.d);
  std::vector<Polynomial> sq = square_products(hb);
  std::vector<Polynomial> p2_part = degree_part(sq, hb.d);
  s.r_dim_d = static_cast<int>(graded_basis(ring, hb.d).size());
  s.p2_dim_d = span_rank(p2_part, ring, hb.d);
  std::vector<Polynomial> both = products;
  both.insert(both.end(), p2_part.begin(), p2_part.end());
  s.sum_dim_d = span_rank(both, ring, hb.d);
  return s;
}

Prop6Report prop6_check(const HilbertBurchData& hb) {
  require_not_char(hb, {2, 3}, "the product-coefficient test");
  const RingHandle& ring = hb.ring_handle();
  Prop6Report rep;
  std::vector<Polynomial> products = all_products(hb);
  std::vector<Polynomial> six(products.begin(), products.begin() + 6);
  rep.condition1 = span_rank(six, *ring, hb.d) == 6;
  rep.properties = splitting_properties(hb);
  rep.all_products_independent = rep.properties.b();
  if (!rep.condition1) return rep;

  rep.canonical_decomposition = rep.properties.a() && rep.properties.b() && rep.properties.c();
  std::vector<Polynomial> named = rep.all_products_independent ? products : six;
  std::vector<Polynomial> completion;
  if (rep.canonical_decomposition) {
    completion = degree_part(square_products(hb), hb.d);
  } else {
    for (Monomial m : graded_basis(*ring, hb.d))
      completion.push_back(Polynomial::monomial(ring, m, ring->field()->one()));
  }
  CoordinateSystem coords(ring, hb.d, named, completion);
  rep.span_dim = static_cast<int>(coords.named_count());
  rep.complement_dim = static_cast<int>(coords.completion_count());

  // phi = S P + U Q with S = [[w1 w2 w3][w2 w4 w5][w3 w5 w6]] and U the
  // same pattern on w7..w12; probe every monomial basis vector of w.
  static constexpr int sym[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  const FieldElement one = ring->field()->one();
  bool vanishes = true;
  for (int slot = 0; slot < 12 && vanishes; ++slot) {
    int wdeg = slot < 6 ? hb.d1 : hb.d0;
    for (Monomial mu : graded_basis(*ring, wdeg)) {
      std::array<Polynomial, 3> phi{Polynomial(ring), Polynomial(ring), Polynomial(ring)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (sym[i][j] == slot) phi[i] += hb.p[j].mul_term(mu, one);
          if (sym[i][j] + 6 == slot) phi[i] += hb.q[j].mul_term(mu, one);
        }
      FieldElement value = coords.coefficient(phi[0], 0) - coords.coefficient(phi[0], 1) +
                           coords.coefficient(phi[1], 2) - coords.coefficient(phi[1], 3) +
                           coords.coefficient(phi[2], 4) - coords.coefficient(phi[2], 5);
      if (!value.is_zero()) {
        vanishes = false;
        break;
      }
    }
  }
  rep.condition2 = vanishes;
  return rep;
}

CoefficientTable klein_coefficient_table(const HilbertBurchData& hb, int variant) {
  require_not_char(hb, {2, 3, 7}, "the Klein coefficient table");
  SplittingProperties props = splitting_properties(hb);
  if (!(props.a() && props.b() && props.c()))
    throw HypothesisError("the products P_i Q_j and (P^2) do not split the degree-" +
                          std::to_string(hb.d) + " forms");
  const RingHandle& ring = hb.ring_handle();
  std::vector<Polynomial> completion = degree_part(square_products(hb), hb.d);
  if (variant == 1) std::reverse(completion.begin(), completion.end());
  CoordinateSystem coords(ring, hb.d, all_products(hb), completion);

  CoefficientTable table;
  const FieldElement one = ring->field()->one();
  for (const auto& e : t_monomials(hb.d0)) {
    Monomial mu(std::span<const int>(e.data(), 3));
    for (std::size_t j = 0; j < 3; ++j) {
      Polynomial form = hb.q[j].mul_term(mu, one);
      std::array<FieldElement, 6> col;
      for (std::size_t i = 0; i < 6; ++i) col[i] = coords.coefficient(form, i);
      table.columns.push_back(col);
      std::string m = mu.is_one() ? "" : mu.to_string(ring->names()) + "*";
      table.labels.push_back(m + "Q" + std::to_string(j + 1));
    }
  }
  return table;
}

std::optional<FieldElement> common_unit(const CoefficientTable& raw,
                                        std::span<const std::array<FieldElement, 6>> reference) {
  if (reference.size() != raw.columns.size()) return std::nullopt;
  std::optional<FieldElement> unit;
  for (std::size_t k = 0; k < reference.size(); ++k)
    for (std::size_t i = 0; i < 6; ++i) {
      const FieldElement& ref = reference[k][i];
      const FieldElement& got = raw.columns[k][i];
      if (ref.is_zero()) {
        if (!got.is_zero()) return std::nullopt;
        continue;
      }
      FieldElement u = got / ref;
      if (!unit) unit = u;
      else if (*unit != u) return std::nullopt;
    }
  if (unit && unit->is_zero()) return std::nullopt;
  return unit;
}

Verdict oracle_check(const Ideal& ideal, int m, int r) {
  if (m < r || r < 1) throw AlgebraError("the oracle needs m >= r >= 1");
  const RingHandle& ring = ideal.ring_handle();
  Ideal symbolic = saturate(ideal_power(ideal, m), Ideal::irrelevant(ring));
  Ideal ordinary = ideal_power(ideal, r);

  Verdict v;
  v.method = Method::oracle;
  v.m = m;
  v.r = r;
  v.contained = true;
  for (const Polynomial& g : minimal_generators(symbolic)) {
    if (ordinary.contains(g)) continue;
    v.contained = false;
    bool better = !v.witness || g.degree() < v.witness->degree() ||
                  (g.degree() == v.witness->degree() &&
                   ring->order().compare(g.lead_monomial(), v.witness->lead_monomial()) < 0);
    if (better) v.witness = g;
  }
  unsigned ch = ring->field()->characteristic();
  if (ch == 2) v.characteristic_note = kChar2Note;
  if (ch == 3) v.characteristic_note = kChar3Note;
  return v;
}

WitnessResult witness_check(const Polynomial& form, const Ideal& ideal, int m, int r) {
  if (!form.is_homogeneous()) throw AlgebraError("witness must be homogeneous");
  WitnessResult out;
  out.in_ordinary = ideal_power(ideal, r).contains(form);
  // Membership in I^m implies membership in its saturation.
  out.in_symbolic = (r == m && out.in_ordinary) ||
                    saturate(ideal_power(ideal, m), Ideal::irrelevant(ideal.ring_handle())).contains(form);
  return out;
}

std::vector<Polynomial> char_remark_solution(unsigned p, const HilbertBurchData& hb) {
  Polynomial zero(hb.ring_handle());
  const auto& P = hb.p;
  const auto& Q = hb.q;
  if (p == 2) return {zero, Q[2], Q[1], zero, Q[0], zero, zero, zero, zero, zero, zero, zero};
  if (p == 3) return {zero, Q[2], zero, zero, -Q[0], zero, zero, P[2], zero, zero, -P[0], zero};
  throw AlgebraError("explicit solutions exist only for characteristics 2 and 3");
}

bool char_remark_identity(unsigned p) { return char_remark_identity(p, Field::make(FieldSpec::prime(p))); }

bool char_remark_identity(unsigned p, FieldHandle field) {
  RingHandle ring = Ring::make(field, {"P1", "P2", "P3", "Q1", "Q2", "Q3"});
  auto v = [&](int i) { return Polynomial::variable(ring, i); };
  HilbertBurchData hb = HilbertBurchData::from_columns({v(0), v(1), v(2)}, {v(3), v(4), v(5)});
  std::vector<Polynomial> w = char_remark_solution(p, hb);
  PolyMatrix y = build_Y(hb);
  for (std::size_t j = 0; j < 3; ++j) {
    Polynomial sum(ring);
    for (std::size_t i = 0; i < 12; ++i) sum += y[i][j] * w[i];
    if (sum != hb.minors[j]) return false;
  }
  return true;
}

}  // namespace sympow
