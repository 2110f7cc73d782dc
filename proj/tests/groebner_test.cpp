#include <gtest/gtest.h>

#include <random>

#include "sympow/ideal.hpp"

using namespace sympow;

namespace {

RingHandle ring_over(const char* field) { return Ring::standard(Field::parse(field)); }

Polynomial P(const RingHandle& r, const char* text) { return parse_polynomial(text, r); }

Ideal I(const RingHandle& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return Ideal(r, std::move(g));
}

Polynomial random_form(const RingHandle& r, int degree, std::mt19937& rng, double density = 0.6) {
  std::vector<Term> terms;
  std::uniform_int_distribution<int> small(-4, 4);
  std::bernoulli_distribution keep(density);
  for (Monomial m : graded_basis(*r, degree))
    if (keep(rng)) terms.push_back({m, r->field()->from_int(small(rng))});
  return Polynomial::from_terms(r, std::move(terms));
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(Groebner, StarIsAlreadyABasis) {
  auto r = ring_over("Q");
  auto gb = I(r, {"x*y", "x*z", "y*z"}).groebner_basis();
  EXPECT_EQ(strings(gb), (std::vector<std::string>{"y*z", "x*z", "x*y"}));
}

TEST(Groebner, Principal) {
  auto r = ring_over("GF(7)");
  auto gb = I(r, {"3*x"}).groebner_basis();
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P(r, "x"));
}

TEST(Groebner, TwistedCubicElimination) {
  auto r = Ring::make(Field::parse("Q"), {"x", "y", "z"}, MonomialOrder::lex());
  Ideal cubic = I(r, {"y - x^2", "z - x^3"});
  EXPECT_TRUE(cubic.contains(P(r, "z^2 - y^3")));
  int first[] = {0};
  Ideal e = eliminate(cubic, first);
  EXPECT_TRUE(e.contains(P(r, "z^2 - y^3")));
  for (const auto& g : e.generators())
    for (const auto& t : g.terms()) EXPECT_EQ(t.mon[0], 0);
  EXPECT_TRUE(eliminate(cubic, std::span<const int>{}).equals(cubic));
  auto r2 = Ring::make(Field::parse("Q"), {"s", "x"}, MonomialOrder::lex());
  Ideal e2 = eliminate(Ideal(r2, {P(r2, "s*x - 1")}), first);
  EXPECT_TRUE(e2.generators().empty());
  int second[] = {1};
  EXPECT_THROW(eliminate(cubic, second), AlgebraError);
}

TEST(Groebner, Membership) {
  auto r = ring_over("Q");
  EXPECT_TRUE(I(r, {"x"}).contains(P(r, "x^2")));
  EXPECT_TRUE(I(r, {"x^2 + y*z"}).contains(Polynomial(r)));
  EXPECT_FALSE(I(r, {"x^2", "y^2"}).contains(P(r, "x*y")));
}

TEST(Groebner, Intersection) {
  auto r = ring_over("Q");
  EXPECT_TRUE(intersect(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
  Ideal star = I(r, {"x*y", "x*z", "y*z"});
  EXPECT_TRUE(intersect(star, star).equals(star));
}

TEST(Groebner, SquaredPointsAgreeWithSaturation) {
  auto r = ring_over("Q");
  Ideal star = I(r, {"x*y", "x*z", "y*z"});
  std::vector<Ideal> squares{ideal_power(I(r, {"x", "y"}), 2), ideal_power(I(r, {"x", "z"}), 2),
                             ideal_power(I(r, {"y", "z"}), 2)};
  Ideal by_points = intersect(squares);
  Ideal by_saturation = saturate(ideal_power(star, 2), Ideal::irrelevant(r));
  EXPECT_TRUE(by_points.equals(by_saturation));
  EXPECT_TRUE(by_points.contains(P(r, "x*y*z")));
  EXPECT_FALSE(ideal_power(star, 2).contains(P(r, "x*y*z")));
}

TEST(Groebner, Colon) {
  auto r = ring_over("Q");
  EXPECT_TRUE(colon(I(r, {"x^2"}), P(r, "x")).equals(I(r, {"x"})));
  EXPECT_TRUE(colon(I(r, {"x*y", "x*z"}), P(r, "x")).equals(I(r, {"y", "z"})));
  Ideal star = I(r, {"x*y", "x*z", "y*z"});
  EXPECT_TRUE(colon(star, Polynomial::constant(r, 1)).equals(star));
  // The general route through intersection.
  EXPECT_TRUE(colon(I(r, {"x*y", "x*z"}), P(r, "x + y")).equals(I(r, {"x*y", "x*z"})));
  EXPECT_TRUE(colon(I(r, {"x^2 - y^2"}), P(r, "x + y")).equals(I(r, {"x - y"})));
  EXPECT_THROW(colon(star, Polynomial(r)), AlgebraError);
}

TEST(Groebner, Saturation) {
  auto r = ring_over("Q");
  Ideal m = Ideal::irrelevant(r);
  // (x^2, xy) = (x) cap (x^2, y): neither component is primary to the
  // irrelevant ideal, so saturating by (x, y, z) changes nothing, while
  // saturating by (x, y) removes the embedded component.
  Ideal a = I(r, {"x^2", "x*y"});
  EXPECT_TRUE(saturate(a, m).equals(a));
  EXPECT_TRUE(saturate(a, I(r, {"x", "y"})).equals(I(r, {"x"})));
  Ideal point = I(r, {"x", "y"});
  EXPECT_TRUE(saturate(point, m).equals(point));
  Ideal embedded = ideal_product(point, m);
  EXPECT_TRUE(saturate(embedded, m).equals(point));
  EXPECT_TRUE(saturate(I(r, {"x^2", "y^3", "z"}), m).is_unit());
  // The iterated-colon route agrees with the variable route.
  EXPECT_TRUE(saturate(embedded, P(r, "z")).equals(point));
  EXPECT_TRUE(saturate(embedded, P(r, "x + 2*y + 3*z")).equals(point));
}

TEST(Groebner, CanonicityUnderPermutationAndScaling) {
  for (const char* field : {"GF(11)", "Q"}) {
    auto r = ring_over(field);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Polynomial> gens;
      int count = 2 + trial % 3;
      for (int k = 0; k < count; ++k) {
        auto f = random_form(r, 2 + (trial + k) % 2, rng, 0.5);
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      auto base = Ideal(r, gens).groebner_basis();
      std::shuffle(gens.begin(), gens.end(), rng);
      for (std::size_t k = 0; k < gens.size(); ++k) gens[k] = gens[k].scale(r->field()->from_int(static_cast<std::int64_t>(k) + 2));
      auto again = Ideal(r, gens).groebner_basis();
      ASSERT_EQ(strings(base), strings(again));
      for (const auto& g : base) {
        EXPECT_TRUE(g.lead_coef().is_one());
        for (const auto& h : base)
          for (const auto& t : g.terms())
            if (&g != &h) EXPECT_FALSE(h.lead_monomial().divides(t.mon));
      }
    }
  }
}

TEST(Groebner, IntersectionMembershipConsistency) {
  auto r = ring_over("GF(7)");
  Ideal a = I(r, {"x^2 - y*z", "x*y"});
  Ideal b = I(r, {"y^2", "x*z - z^2"});
  Ideal ab = intersect(a, b);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Polynomial f = random_form(r, 3 + i % 3, rng, 0.3);
    if (i % 3 == 0) f = f * a.generators()[0] * b.generators()[1];
    if (i % 3 == 1) f = f * a.generators()[1];
    EXPECT_EQ(ab.contains(f), a.contains(f) && b.contains(f));
  }
}

TEST(Groebner, Multiplicity) {
  auto r = ring_over("GF(7)");
  EXPECT_EQ(multiplicity(I(r, {"x", "y"})), 1);
  Ideal fermat = I(r, {"x*(y^3 - z^3)", "y*(z^3 - x^3)", "z*(x^3 - y^3)"});
  EXPECT_EQ(multiplicity(fermat), 12);
  for (int d = 10; d < 14; ++d) EXPECT_EQ(hilbert_function(fermat, d), 12);
  EXPECT_THROW(multiplicity(Ideal::irrelevant(r)), HypothesisError);
  auto q = ring_over("Q");
  HilbertSeries hs = hilbert_series(Ideal::zero(q));
  EXPECT_EQ(hs.dimension, 3);
  EXPECT_EQ(hs.degree, 1);
  EXPECT_EQ(hilbert_series(I(q, {"x^2*y + z^3"})).degree, 3);
}

TEST(Groebner, MinimalGenerators) {
  auto r = ring_over("Q");
  Ideal a = I(r, {"x*y", "x^2*y", "x*z", "x*y + x*z", "y*z*x"});
  EXPECT_EQ(minimal_generators(a).size(), 2u);
}

TEST(Groebner, ReesIdeal) {
  auto r = ring_over("Q");
  auto koszul = rees_ideal(P(r, "x"), P(r, "y"), P(r, "z"));
  EXPECT_TRUE(is_linear_type(koszul));
  EXPECT_EQ(koszul.minimal_generators.size(), 3u);
  auto veronese = rees_ideal(P(r, "x^2"), P(r, "x*y"), P(r, "y^2"));
  EXPECT_FALSE(is_linear_type(veronese));
  EXPECT_TRUE(veronese.ideal.contains(parse_polynomial("T1*T3 - T2^2", veronese.ring)));
  auto star = rees_ideal(P(r, "x*y"), P(r, "x*z"), P(r, "y*z"));
  EXPECT_TRUE(is_linear_type(star));
  auto g7 = ring_over("GF(7)");
  auto fermat = rees_ideal(P(g7, "x*(y^3 - z^3)"), P(g7, "y*(z^3 - x^3)"), P(g7, "z*(x^3 - y^3)"));
  EXPECT_TRUE(is_linear_type(fermat));
}

TEST(Groebner, Substitute) {
  auto r = ring_over("Q");
  std::vector<Polynomial> img{P(r, "x + y"), P(r, "y"), P(r, "z")};
  EXPECT_EQ(substitute(P(r, "x^2 - z"), img), P(r, "x^2 + 2*x*y + y^2 - z"));
}
