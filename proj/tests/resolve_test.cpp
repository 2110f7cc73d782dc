#include <gtest/gtest.h>

#include "sympow/configs.hpp"
#include "sympow/resolve.hpp"

using namespace sympow;

namespace {

Polynomial P(const RingHandle& r, const char* text) { return parse_polynomial(text, r); }

HilbertBurchData fermat_hb(int n, const char* field) {
  RingHandle r = Ring::standard(Field::parse(field));
  auto cols = fermat_columns(n, r);
  return HilbertBurchData::from_columns(cols[0], cols[1]);
}

HilbertBurchData symbolic_hb(const char* field) {
  RingHandle r = Ring::make(Field::parse(field), {"P1", "P2", "P3", "Q1", "Q2", "Q3"});
  auto v = [&](int i) { return Polynomial::variable(r, i); };
  return HilbertBurchData::from_columns({v(0), v(1), v(2)}, {v(3), v(4), v(5)});
}

std::vector<int> flat(const std::vector<std::vector<int>>& steps, std::size_t i) { return steps.at(i); }

std::vector<int> rep(int v, int n) { return std::vector<int>(static_cast<std::size_t>(n), v); }

}  // namespace

TEST(Matrices, XForFermat) {
  HilbertBurchData hb = fermat_hb(3, "GF(7)");
  const RingHandle& r = hb.ring_handle();
  PolyMatrix x = build_X(hb);
  ASSERT_EQ(x.size(), 6u);
  const char* expected[] = {"x^2", "y^2", "z^2", "-y*z", "-x*z", "-x*y"};
  for (std::size_t i = 0; i < 6; ++i) {
    ASSERT_EQ(x[i].size(), 1u);
    EXPECT_EQ(x[i][0], P(r, expected[i]));
  }
}

TEST(Matrices, YPattern) {
  HilbertBurchData hb = symbolic_hb("Q");
  const RingHandle& r = hb.ring_handle();
  PolyMatrix y = build_Y(hb);
  ASSERT_EQ(y.size(), 12u);
  const char* cols[3][12] = {
      {"P1", "P2", "P3", "0", "0", "0", "-Q1", "-Q2", "-Q3", "0", "0", "0"},
      {"0", "P1", "0", "P2", "P3", "0", "0", "-Q1", "0", "-Q2", "-Q3", "0"},
      {"0", "0", "P1", "0", "P2", "P3", "0", "0", "-Q1", "0", "-Q2", "-Q3"},
  };
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(y[i][j], P(r, cols[j][i])) << i << "," << j;
}

TEST(Matrices, ZeroEntries) {
  RingHandle r = Ring::standard(Field::parse("Q"));
  Polynomial z(r);
  HilbertBurchData hb{{z, z, z}, {z, z, z}, 0, 0, 0, {z, z, z}, {}};
  for (const auto& row : build_Y(hb))
    for (const Polynomial& e : row) EXPECT_TRUE(e.is_zero());
}

TEST(Matrices, KleinDegrees) {
  KleinConfiguration k = klein(Field::parse("GF(11)"));
  HilbertBurchData hb = hilbert_burch(k.config.ideal);
  PolyMatrix x = build_X(hb);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(x[i][0].degree(), i < 3 ? 3 : 5);
}

TEST(Matrices, TMonomialOrder) {
  auto t = t_monomials(3);
  ASSERT_EQ(t.size(), 10u);
  std::vector<std::array<int, 3>> expected{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                           {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  EXPECT_EQ(t, expected);
  EXPECT_EQ(t_monomials(2).size(), 6u);
}

TEST(Matrices, RelationsAndYAreSyzygies) {
  for (const HilbertBurchData& hb : {symbolic_hb("Q"), fermat_hb(4, "GF(13)")}) {
    for (int k : {2, 3}) {
      auto gens = power_generators(hb.minors, k);
      auto rel = hilbert_burch_relations(hb, k);
      ASSERT_EQ(rel.size(), k == 2 ? 6u : 12u);
      for (const ModuleVector& v : rel) EXPECT_TRUE(contract(v, gens).is_zero());
      std::vector<int> twists;
      for (const ModuleVector& v : rel) twists.push_back(v.degree());
      PolyMatrix m = k == 2 ? build_X(hb) : build_Y(hb);
      for (const ModuleVector& col : matrix_columns(m, hb.ring_handle(), twists))
        EXPECT_TRUE(combine(col.components(), rel).is_zero());
    }
  }
}

TEST(Resolution, FermatThree) {
  PointConfiguration cfg = fermat(3, Field::parse("GF(7)"));
  PowerResolution r2 = resolve_power(cfg.ideal, 2);
  EXPECT_EQ(r2.shape.ranks, (std::vector<int>{6, 6, 1}));
  EXPECT_EQ(flat(r2.shape.twists, 0), rep(-8, 6));
  EXPECT_EQ(flat(r2.shape.twists, 1), rep(-10, 6));
  EXPECT_EQ(flat(r2.shape.twists, 2), rep(-12, 1));
  PowerResolution r3 = resolve_power(cfg.ideal, 3);
  EXPECT_EQ(r3.shape.ranks, (std::vector<int>{10, 12, 3}));
  EXPECT_EQ(flat(r3.shape.twists, 0), rep(-12, 10));
  EXPECT_EQ(flat(r3.shape.twists, 1), rep(-14, 12));
  EXPECT_EQ(flat(r3.shape.twists, 2), rep(-16, 3));
  EXPECT_EQ(r3.shape.ranks[0] - r3.shape.ranks[1] + r3.shape.ranks[2], 1);
  for (const ModuleVector& v : r3.second) EXPECT_TRUE(combine(v.components(), r3.first).is_zero());
}

TEST(Resolution, KleinCube) {
  KleinConfiguration k = klein(Field::parse("GF(11)"));
  PowerResolution r1 = resolve_power(k.config.ideal, 1);
  EXPECT_EQ(r1.shape.twists, (std::vector<std::vector<int>>{{-8, -8, -8}, {-11, -13}}));
  PowerResolution r3 = resolve_power(k.config.ideal, 3);
  std::vector<int> middle = rep(-27, 6);
  auto tail = rep(-29, 6);
  middle.insert(middle.end(), tail.begin(), tail.end());
  EXPECT_EQ(flat(r3.shape.twists, 0), rep(-24, 10));
  EXPECT_EQ(flat(r3.shape.twists, 1), middle);
  EXPECT_EQ(flat(r3.shape.twists, 2), rep(-32, 3));
}

TEST(Resolution, StarAndShapeText) {
  PointConfiguration s = star3(Field::parse("Q"));
  PowerResolution r = resolve_power(s.ideal, 3);
  EXPECT_EQ(r.shape.to_string(), "R(-6)^10 <- R(-7)^12 <- R(-8)^3");
  EXPECT_EQ(resolve_power(s.ideal, 2).shape.ranks, (std::vector<int>{6, 6, 1}));
}

TEST(Resolution, MultiplicityFromTwists) {
  PointConfiguration s = star3(Field::parse("Q"));
  PointConfiguration f3 = fermat(3, Field::parse("GF(7)"));
  PointConfiguration f4 = fermat(4, Field::parse("GF(13)"));
  KleinConfiguration k = klein(Field::parse("GF(11)"));
  for (const Ideal* ideal : {&s.ideal, &f3.ideal, &f4.ideal, &k.config.ideal}) {
    long long deg = multiplicity(*ideal);
    EXPECT_EQ(multiplicity_from_shape(resolve_power(*ideal, 1).shape), deg);
    for (int e : {2, 3}) {
      long long from_twists = multiplicity_from_shape(resolve_power(*ideal, e).shape);
      EXPECT_EQ(from_twists, multiplicity(ideal_power(*ideal, e)));
      EXPECT_EQ(from_twists, deg * e * (e + 1) / 2);
    }
  }
  EXPECT_EQ(multiplicity_from_shape(predicted_shape(8, 3, 5, 1)), 49);
}

TEST(Resolution, ShapeMismatch) {
  RingHandle r = Ring::standard(Field::parse("Q"));
  Ideal veronese(r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2")});
  EXPECT_NO_THROW(resolve_power(veronese, 1));
  EXPECT_THROW(resolve_power(veronese, 2), ShapeMismatch);
  Ideal four(r, {P(r, "x^2"), P(r, "y^2"), P(r, "z^2"), P(r, "x*y")});
  EXPECT_THROW(resolve_power(four, 3), HypothesisError);
}

TEST(LastMap, Builtins) {
  PointConfiguration s = star3(Field::parse("Q"));
  PointConfiguration f3 = fermat(3, Field::parse("GF(7)"));
  PointConfiguration f5 = fermat(5, Field::parse("GF(11)"));
  KleinConfiguration k = klein(Field::parse("GF(11)"));
  for (const Ideal* ideal : {&s.ideal, &f3.ideal, &f5.ideal, &k.config.ideal}) {
    LastMapComparison c = compare_last_map(hilbert_burch(*ideal));
    EXPECT_TRUE(c.relations_generate);
    EXPECT_TRUE(c.columns_are_relations);
    EXPECT_TRUE(c.columns_generate);
    EXPECT_TRUE(c.transpose_images_equal);
    EXPECT_TRUE(check_last_map_equivalence(*ideal));
  }
}
