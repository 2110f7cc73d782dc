#include <gtest/gtest.h>

#include <random>

#include "sympow/linalg.hpp"
#include "sympow/syzygy.hpp"

using namespace sympow;

namespace {

RingHandle ring_over(const char* field) { return Ring::standard(Field::parse(field)); }
Polynomial P(const RingHandle& r, const char* text) { return parse_polynomial(text, r); }

ModuleVector V(const RingHandle& r, std::initializer_list<const char*> comps, std::vector<int> twists = {}) {
  std::vector<Polynomial> c;
  for (const char* s : comps) c.push_back(P(r, s));
  return ModuleVector(r, std::move(c), std::move(twists));
}

}  // namespace

TEST(Syzygy, RegularSequence) {
  auto r = ring_over("Q");
  std::vector<Polynomial> g{P(r, "x"), P(r, "y")};
  auto syz = minimalize(syzygies(g));
  ASSERT_EQ(syz.size(), 1u);
  EXPECT_TRUE(contract(syz[0], g).is_zero());
  EXPECT_TRUE(syz[0] == V(r, {"-y", "x"}, {1, 1}) || syz[0] == V(r, {"y", "-x"}, {1, 1}));
}

TEST(Syzygy, MinimalizeDropsMultiples) {
  auto r = ring_over("Q");
  std::vector<ModuleVector> v{V(r, {"-x*y", "x^2"}), V(r, {"-y", "x"})};
  auto m = minimalize(v);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], V(r, {"-y", "x"}));
}

TEST(Syzygy, ModuleMembership) {
  auto r = ring_over("Q");
  std::vector<ModuleVector> e{V(r, {"1", "0"}), V(r, {"0", "1"})};
  auto res = module_member(V(r, {"x", "y"}), e);
  ASSERT_TRUE(res.member);
  EXPECT_EQ(res.coordinates[0], P(r, "x"));
  EXPECT_EQ(res.coordinates[1], P(r, "y"));
  auto zero = module_member(ModuleVector::zero(r, {0, 0}), e);
  EXPECT_TRUE(zero.member);
  std::vector<ModuleVector> diag{V(r, {"x", "y"})};
  EXPECT_FALSE(module_member(V(r, {"y", "x"}), diag).member);
  EXPECT_TRUE(module_member(V(r, {"x*z", "y*z"}), diag).member);
  EXPECT_THROW(module_member(V(r, {"x", "y"}, {1, 0}), e), AlgebraError);
}

TEST(Syzygy, StarHilbertBurch) {
  auto r = ring_over("Q");
  Ideal star(r, {P(r, "x*y"), P(r, "x*z"), P(r, "y*z")});
  HilbertBurchData hb = hilbert_burch(star);
  EXPECT_EQ(hb.d0, 1);
  EXPECT_EQ(hb.d1, 1);
  EXPECT_EQ(hb.d, 2);
  Ideal minors(r, {hb.minors[0], hb.minors[1], hb.minors[2]});
  EXPECT_TRUE(minors.equals(star));
}

TEST(Syzygy, FermatHilbertBurch) {
  auto r = ring_over("GF(7)");
  std::vector<Polynomial> g{P(r, "x*(y^3 - z^3)"), P(r, "y*(z^3 - x^3)"), P(r, "z*(x^3 - y^3)")};
  auto syz = minimalize(syzygies(g));
  ASSERT_EQ(syz.size(), 2u);
  for (const auto& s : syz) {
    EXPECT_EQ(s.degree(), 6);
    EXPECT_TRUE(contract(s, g).is_zero());
  }
  HilbertBurchData hb = hilbert_burch(Ideal(r, g));
  EXPECT_EQ(hb.d0, 2);
  EXPECT_EQ(hb.d1, 2);
  // The columns span the same space as (x^2, y^2, z^2) and (yz, xz, xy).
  std::vector<ModuleVector> cols{ModuleVector(r, {hb.p[0], hb.p[1], hb.p[2]}),
                                 ModuleVector(r, {hb.q[0], hb.q[1], hb.q[2]})};
  EXPECT_TRUE(module_member(V(r, {"x^2", "y^2", "z^2"}), cols).member);
  EXPECT_TRUE(module_member(V(r, {"y*z", "x*z", "x*y"}), cols).member);
  ASSERT_EQ(hb.change_of_basis.size(), 3u);
}

TEST(Syzygy, NotThreeGenerated) {
  auto r = ring_over("Q");
  EXPECT_THROW(hilbert_burch(Ideal(r, {P(r, "x"), P(r, "y")})), HypothesisError);
  EXPECT_THROW(hilbert_burch(Ideal(r, {P(r, "x^2"), P(r, "y^2"), P(r, "z")})), HypothesisError);
  EXPECT_THROW(HilbertBurchData::from_columns({P(r, "x"), P(r, "y"), P(r, "z")},
                                              {P(r, "x"), P(r, "y"), P(r, "z")}),
               HypothesisError);
}

TEST(Syzygy, AnnihilationRandom) {
  auto r = ring_over("GF(11)");
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(0, 10);
  std::bernoulli_distribution keep(0.4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) {
      std::vector<Term> terms;
      for (Monomial m : graded_basis(*r, 1 + (trial + k) % 3))
        if (keep(rng)) terms.push_back({m, r->field()->from_int(coef(rng))});
      g.push_back(Polynomial::from_terms(r, std::move(terms)));
    }
    for (const auto& s : syzygies(g)) EXPECT_TRUE(contract(s, g).is_zero());
  }
}

TEST(Linalg, SolveAndKernel) {
  FieldHandle f = Field::parse("GF(7)");
  Matrix a(f, 2, 3);
  a.at(0, 0) = f->from_int(1);
  a.at(0, 1) = f->from_int(2);
  a.at(1, 1) = f->from_int(1);
  a.at(1, 2) = f->from_int(3);
  EXPECT_EQ(rank(a), 2u);
  auto k = kernel(a);
  ASSERT_EQ(k.size(), 1u);
  std::vector<FieldElement> b{f->from_int(3), f->from_int(4)};
  auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.at(0, 0) * (*x)[0] + a.at(0, 1) * (*x)[1], b[0]);
}
