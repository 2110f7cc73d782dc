#include <gtest/gtest.h>

#include <random>

#include "sympow/polynomial.hpp"

using namespace sympow;

namespace {

RingHandle ring_over(const char* field) { return Ring::standard(Field::parse(field)); }

Polynomial P(const RingHandle& r, const char* text) { return parse_polynomial(text, r); }

Polynomial random_form(const RingHandle& r, int degree, std::mt19937& rng, double density = 0.5) {
  std::vector<Term> terms;
  auto els = r->field()->is_finite() ? r->field()->elements() : std::vector<FieldElement>{};
  std::uniform_int_distribution<int> small(-5, 5);
  std::bernoulli_distribution keep(density);
  for (Monomial m : graded_basis(*r, degree)) {
    if (!keep(rng)) continue;
    FieldElement c = els.empty() ? r->field()->from_int(small(rng))
                                 : els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)];
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace

TEST(Poly, BasicArithmetic) {
  auto r = ring_over("Q");
  EXPECT_EQ(P(r, "(x+y)*(x-y)"), P(r, "x^2 - y^2"));
  EXPECT_TRUE((P(r, "x") * Polynomial(r)).is_zero());
  EXPECT_EQ(P(r, "x^2 - y^2").to_string(), "x^2 - y^2");
}

TEST(Poly, CubeRootsModSeven) {
  auto r = ring_over("GF(7)");
  EXPECT_EQ(P(r, "(x-y)*(x-2*y)*(x-4*y)"), P(r, "x^3 - y^3"));
}

TEST(Poly, Division) {
  auto r = ring_over("Q");
  std::vector<Polynomial> g{P(r, "x*y")};
  auto d = reduce(P(r, "x^2*y"), g);
  EXPECT_TRUE(d.normal_form.is_zero());
  EXPECT_EQ(d.quotients[0], P(r, "x"));
  std::vector<Polynomial> g2{P(r, "x")};
  auto d2 = reduce(P(r, "x^2 + y^2"), g2);
  EXPECT_EQ(d2.normal_form, P(r, "y^2"));
  EXPECT_EQ(d2.quotients[0], P(r, "x"));
}

TEST(Poly, FermatFormReducesAgainstFourthPowerOfMaximalIdeal) {
  auto r = ring_over("GF(7)");
  std::vector<Polynomial> m4;
  for (Monomial m : graded_basis(*r, 4)) m4.push_back(Polynomial::monomial(r, m, r->field()->one()));
  auto d = reduce(P(r, "x*(y^3 - z^3)"), m4);
  EXPECT_TRUE(d.normal_form.is_zero());
}

TEST(Poly, GradedBasis) {
  auto r = ring_over("Q");
  EXPECT_EQ(graded_basis(*r, 0).size(), 1u);
  EXPECT_EQ(graded_basis(*r, 5).size(), 21u);
  EXPECT_EQ(graded_basis(*r, 8).size(), 45u);
  for (int d = 0; d < 9; ++d) {
    auto b = graded_basis(*r, d);
    EXPECT_EQ(b.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (std::size_t i = 1; i < b.size(); ++i) EXPECT_TRUE(r->order().greater(b[i - 1], b[i]));
  }
}

TEST(Poly, CoefficientsOfKleinForms) {
  auto r = ring_over("GF(11)");
  auto c3 = P(r, "4*x^4+4*y^4+(3*c+9)*x^2*y^2+(5*c-1)*x^2*z^2+(5*c-1)*y^2*z^2+(15*c+25)*z^4");
  FieldElement c = *r->field()->c();
  int e[] = {2, 2, 0};
  EXPECT_EQ(coeff(c3, Monomial(e)), c * r->field()->from_int(3) + r->field()->from_int(9));
  int z2[] = {0, 0, 2};
  auto d3 = P(r, "(15*c+21)*x^2+(15*c+21)*y^2+(2*c-10)*z^2");
  EXPECT_EQ(coeff(d3, Monomial(z2)), c * r->field()->from_int(2) - r->field()->from_int(10));
  int absent[] = {1, 1, 2};
  EXPECT_TRUE(coeff(d3, Monomial(absent)).is_zero());
}

TEST(Poly, Evaluate) {
  auto r = ring_over("Q");
  auto one = r->field()->one();
  std::vector<FieldElement> pt{one, one, one};
  EXPECT_TRUE(P(r, "x*(y^3 - z^3)").evaluate(pt).is_zero());
  EXPECT_TRUE(P(r, "x*y - z^2").evaluate(pt).is_zero());
  std::vector<FieldElement> pt2{r->field()->from_int(2), one, r->field()->from_int(3)};
  EXPECT_EQ(P(r, "x^2*z + 1/2*y").evaluate(pt2), r->field()->from_rational(mpq_class(25, 2)));
}

TEST(Poly, Symmetry) {
  auto r = ring_over("Q");
  int swap_xz[] = {2, 1, 0};
  int id[] = {0, 1, 2};
  EXPECT_EQ(apply_symmetry(P(r, "x^2*y"), swap_xz), P(r, "z^2*y"));
  auto f = P(r, "x^3 + 2*x*y*z - y^2*z");
  EXPECT_EQ(apply_symmetry(f, id), f);
  int signs[] = {-1, 1, 1};
  EXPECT_EQ(apply_symmetry(f, id, signs), P(r, "-x^3 - 2*x*y*z - y^2*z"));
}

TEST(Poly, ParsePrintRoundTrip) {
  for (const char* field : {"Q", "GF(11)", "GF(5)[c]", "Q[c]"}) {
    auto r = ring_over(field);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
      auto f = random_form(r, i % 6, rng);
      if (r->field()->is_extension() && !r->field()->is_finite()) f = f.scale(*r->field()->c() + r->field()->from_rational(mpq_class(-1, 3)));
      EXPECT_EQ(parse_polynomial(f.to_string(), r), f) << f.to_string();
    }
  }
  auto q = ring_over("Q");
  EXPECT_EQ(P(q, "3/4*x - 2y").to_string(), "3/4*x - 2*y");
  EXPECT_THROW(P(q, "x + w"), ParseError);
  EXPECT_THROW(P(q, "c*x"), ParseError);
  EXPECT_THROW(P(q, "x / y"), ParseError);
}

TEST(Poly, RingAxiomsAndDegrees) {
  for (const char* field : {"Q", "GF(7)", "GF(5)[c]"}) {
    auto r = ring_over(field);
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
      auto a = random_form(r, 1 + i % 4, rng);
      auto b = random_form(r, 2, rng);
      auto c = random_form(r, 3, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero() && !b.is_zero()) {
        EXPECT_TRUE((a * b).is_homogeneous());
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
      }
    }
  }
}

TEST(Poly, DivisionIdentityRandom) {
  for (const char* field : {"Q", "GF(11)", "GF(5)[c]"}) {
    auto r = ring_over(field);
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
      auto f = random_form(r, 3 + i % 4, rng);
      std::vector<Polynomial> g;
      for (int k = 0; k < 1 + i % 3; ++k) {
        auto h = random_form(r, 1 + (i + k) % 3, rng, 0.6);
        if (!h.is_zero()) g.push_back(h);
      }
      if (g.empty()) continue;
      auto d = reduce(f, g);
      Polynomial sum = d.normal_form;
      for (std::size_t k = 0; k < g.size(); ++k) sum += d.quotients[k] * g[k];
      EXPECT_EQ(sum, f);
      for (const Term& t : d.normal_form.terms())
        for (const auto& h : g) EXPECT_FALSE(h.lead_monomial().divides(t.mon));
    }
  }
}

TEST(Poly, OrderCompatibility) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> ex(0, 5);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
    for (int i = 0; i < 200; ++i) {
      int a[4], b[4], w[4];
      for (int k = 0; k < 4; ++k) a[k] = ex(rng), b[k] = ex(rng), w[k] = ex(rng);
      Monomial u(a), v(b), s(w);
      EXPECT_EQ(ord.compare(u, v), -ord.compare(v, u));
      if (ord.compare(u, v) < 0) EXPECT_LT(ord.compare(u * s, v * s), 0);
      EXPECT_GE(ord.compare(u * s, u), 0);
    }
  }
}
