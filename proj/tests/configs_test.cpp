#include <gtest/gtest.h>

#include "sympow/configs.hpp"
#include "sympow/linalg.hpp"

using namespace sympow;

namespace {

Polynomial P(const RingHandle& r, const char* text) { return parse_polynomial(text, r); }

// Number of points of the whole plane where every generator vanishes.
std::size_t zero_set_size(const std::vector<Polynomial>& gens, FieldHandle field) {
  std::size_t n = 0;
  for (const Point& p : all_points(field)) {
    bool zero = true;
    for (const Polynomial& g : gens) zero = zero && g.evaluate(p).is_zero();
    if (zero) ++n;
  }
  return n;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scale(b.lead_coef()) == b.scale(a.lead_coef());
}

}  // namespace

TEST(Points, Canonical) {
  FieldHandle f = Field::parse("GF(7)");
  Point p = canonical_point({f->zero(), f->from_int(3), f->from_int(6)});
  EXPECT_TRUE(p[0].is_zero());
  EXPECT_TRUE(p[1].is_one());
  EXPECT_EQ(p[2], f->from_int(2));
  EXPECT_TRUE(same_point({f->from_int(2), f->from_int(4), f->zero()}, {f->one(), f->from_int(2), f->zero()}));
  EXPECT_THROW(canonical_point({f->zero(), f->zero(), f->zero()}), AlgebraError);
  EXPECT_EQ(all_points(f).size(), 57u);
}

TEST(Fermat, ThreeOverGF7) {
  PointConfiguration cfg = fermat(3, Field::parse("GF(7)"));
  EXPECT_EQ(cfg.points.size(), 12u);
  EXPECT_EQ(cfg.lines.size(), 12u);
  EXPECT_EQ(multiplicity(cfg.ideal), 12);
  // The points are exactly the rational zeros of the ideal.
  EXPECT_EQ(zero_set_size(cfg.generators(), cfg.field()), 12u);

  Incidence inc = incidence(cfg);
  for (int c : inc.counts) EXPECT_GE(c, 2);
  // A coordinate point lies on two coordinate lines and on three lines of
  // one pencil; the other points lie on one line of each pencil.
  EXPECT_EQ(inc.histogram.at(5), 3);
  EXPECT_EQ(inc.histogram.at(3), 9);
  EXPECT_EQ(inc.pair_count, 3 * 10 + 9 * 3);
  // x meets y - w z at (0 : w : 1), which is not a configuration point.
  EXPECT_EQ(inc.line_pairs, 66);

  Polynomial lines = product_of_lines(cfg);
  EXPECT_EQ(lines.degree(), 12);
  EXPECT_EQ(lines, P(cfg.ring, "x*y*z*(x^3-y^3)*(y^3-z^3)*(z^3-x^3)"));
}

TEST(Fermat, LargerDegrees) {
  PointConfiguration four = fermat(4, Field::parse("GF(13)"));
  EXPECT_EQ(four.points.size(), 19u);
  EXPECT_EQ(four.lines.size(), 15u);
  EXPECT_EQ(multiplicity(four.ideal), 19);
  PointConfiguration five = fermat(5, Field::parse("GF(11)"));
  EXPECT_EQ(five.points.size(), 28u);
  EXPECT_EQ(five.lines.size(), 18u);
  EXPECT_EQ(zero_set_size(five.generators(), five.field()), 28u);
}

TEST(Fermat, Errors) {
  EXPECT_THROW(fermat(3, Field::parse("GF(5)")), HypothesisError);
  EXPECT_THROW(fermat(3, Field::parse("GF(3)")), HypothesisError);
  EXPECT_THROW(fermat(3, Field::parse("Q")), HypothesisError);
  EXPECT_THROW(fermat(2, Field::parse("GF(7)")), HypothesisError);
}

TEST(Fermat, ColumnsGiveGenerators) {
  for (int n : {3, 4, 5}) {
    RingHandle r = Ring::standard(Field::parse("Q"));
    auto cols = fermat_columns(n, r);
    const auto& p = cols[0];
    const auto& q = cols[1];
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1), z = Polynomial::variable(r, 2);
    EXPECT_EQ(p[1] * q[2] - p[2] * q[1], x * (y.pow(n) - z.pow(n)));
    EXPECT_EQ(p[2] * q[0] - p[0] * q[2], y * (z.pow(n) - x.pow(n)));
    EXPECT_EQ(p[0] * q[1] - p[1] * q[0], z * (x.pow(n) - y.pow(n)));
  }
}

TEST(Klein, OverGF11) {
  KleinConfiguration k = klein(Field::parse("GF(11)"));
  const PointConfiguration& cfg = k.config;
  const KleinStructure& s = k.structure;
  RingHandle r = cfg.ring;
  EXPECT_EQ(s.c, cfg.field()->from_int(4));
  EXPECT_EQ(cfg.points.size(), 49u);
  EXPECT_EQ(cfg.lines.size(), 21u);
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(same_point(cfg.points[i], cfg.points[j]));
  EXPECT_EQ(zero_set_size(cfg.generators(), cfg.field()), 49u);
  EXPECT_EQ(multiplicity(cfg.ideal), 49);

  Incidence inc = incidence(cfg);
  EXPECT_EQ(inc.histogram.size(), 2u);
  EXPECT_EQ(inc.histogram.at(4), 21);
  EXPECT_EQ(inc.histogram.at(3), 28);
  for (std::size_t i = 0; i < 21; ++i) EXPECT_EQ(inc.counts[i], 4);
  EXPECT_EQ(inc.pair_count, 210);
  EXPECT_EQ(inc.line_pairs, 210);

  EXPECT_EQ(s.generators[0],
            P(r, "x*y*(x^2-y^2)*(4*x^4+4*y^4+(3*c+9)*x^2*y^2+(5*c-1)*x^2*z^2+(5*c-1)*y^2*z^2+(15*c+25)*z^4)"));
  EXPECT_EQ(s.quadrics[2], P(r, "(15*c+21)*x^2+(15*c+21)*y^2+(2*c-10)*z^2"));
  Polynomial x2 = P(r, "x^2"), y2 = P(r, "y^2"), z2 = P(r, "z^2");
  EXPECT_EQ(s.quartics[0] - s.quartics[1], (x2 - y2) * s.quadrics[2]);
  EXPECT_EQ(s.quartics[1] - s.quartics[2], (y2 - z2) * s.quadrics[0]);
  EXPECT_EQ(s.quartics[2] - s.quartics[0], (z2 - x2) * s.quadrics[1]);
  for (const auto* col : {&s.p, &s.q})
    EXPECT_TRUE(((*col)[0] * s.generators[0] + (*col)[1] * s.generators[1] + (*col)[2] * s.generators[2])
                    .is_zero());

  HilbertBurchData hb = hilbert_burch(cfg.ideal);
  EXPECT_EQ(hb.d0, 3);
  EXPECT_EQ(hb.d1, 5);
  auto syz = minimalize(syzygies(std::span<const Polynomial>(cfg.generators())));
  ASSERT_EQ(syz.size(), 2u);
  std::vector<int> degs{syz[0].degree() - 8, syz[1].degree() - 8};
  std::sort(degs.begin(), degs.end());
  EXPECT_EQ(degs, (std::vector<int>{3, 5}));
}

TEST(Klein, QuadraticExtensions) {
  KleinConfiguration k = klein(Field::parse("GF(5)[c]"));
  EXPECT_EQ(k.config.points.size(), 49u);
  EXPECT_EQ(zero_set_size(k.config.generators(), k.config.field()), 49u);
  KleinConfiguration q = klein(Field::parse("Q[c]"));
  EXPECT_EQ(q.config.points.size(), 49u);
  EXPECT_EQ(multiplicity(q.config.ideal), 49);
  EXPECT_EQ(incidence(q.config).pair_count, 210);
}

TEST(Klein, Errors) {
  EXPECT_THROW(klein(Field::parse("GF(7)")), CharacteristicError);
  EXPECT_THROW(klein(Field::parse("GF(2)")), CharacteristicError);
  EXPECT_THROW(klein(Field::parse("GF(5)")), FieldError);
}

TEST(Klein, CharacteristicSevenDegenerates) {
  FieldHandle f = Field::parse("GF(7)");
  auto gens = klein_raw_generators(f);
  RingHandle r = gens[0].ring_handle();
  EXPECT_TRUE(proportional(gens[0], P(r, "x*y*(x^6-y^6)")));
  EXPECT_TRUE(proportional(gens[1], P(r, "y*z*(y^6-z^6)")));
  EXPECT_TRUE(proportional(gens[2], P(r, "x*z*(x^6-z^6)")));
  std::vector<Polynomial> g(gens.begin(), gens.end());
  EXPECT_EQ(zero_set_size(g, f), 57u);
}

TEST(Star, Basics) {
  PointConfiguration s = star3(Field::parse("Q"));
  EXPECT_EQ(s.points.size(), 3u);
  EXPECT_EQ(multiplicity(s.ideal), 3);
  for (const Polynomial& g : s.generators()) EXPECT_EQ(g.degree(), 2);
  Incidence inc = incidence(s);
  EXPECT_EQ(inc.counts, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(inc.pair_count, inc.line_pairs);
  EXPECT_EQ(product_of_lines(s), P(s.ring, "x*y*z"));
}

TEST(Builtins, Lookup) {
  FieldHandle f = Field::parse("GF(7)");
  EXPECT_EQ(builtin("fermat:3", f).points.size(), 12u);
  EXPECT_EQ(builtin("star3", f).points.size(), 3u);
  EXPECT_EQ(builtin("klein", Field::parse("GF(11)")).points.size(), 49u);
  EXPECT_TRUE(is_builtin("fermat:4"));
  EXPECT_FALSE(is_builtin("ideal.txt"));
  EXPECT_THROW(builtin("fermat:x", f), ParseError);
  EXPECT_THROW(builtin("hesse", f), ParseError);
}
