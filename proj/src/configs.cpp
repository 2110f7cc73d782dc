#include "sympow/configs.hpp"

#include <algorithm>
#include <charconv>

#include "sympow/linalg.hpp"

namespace sympow {

namespace {

Polynomial linear_form(const RingHandle& ring, const Point& coefs) {
  Polynomial out(ring);
  for (int i = 0; i < 3; ++i)
    out += Polynomial::variable(ring, i).scale(coefs[static_cast<std::size_t>(i)]);
  return out;
}

// Appends p unless an equal point is already present.
bool add_point(std::vector<Point>& out, const Point& p) {
  Point canon = canonical_point(p);
  for (const Point& q : out)
    if (same_point(q, canon)) return false;
  out.push_back(canon);
  return true;
}

// Every coordinate permutation of `base`, in a fixed order.
std::vector<Point> permutations(const Point& base) {
  std::array<int, 3> idx{0, 1, 2};
  std::vector<Point> out;
  do {
    out.push_back({base[static_cast<std::size_t>(idx[0])], base[static_cast<std::size_t>(idx[1])],
                   base[static_cast<std::size_t>(idx[2])]});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

void check_vanishing(const std::vector<Polynomial>& gens, const std::vector<Point>& points,
                     const std::string& name) {
  for (const Polynomial& g : gens)
    for (const Point& p : points)
      if (!g.evaluate(p).is_zero())
        throw HypothesisError(name + ": generator " + g.to_string() + " does not vanish at a point");
}

void check_multiplicity(const PointConfiguration& config) {
  long long deg = multiplicity(config.ideal);
  if (deg != static_cast<long long>(config.points.size()))
    throw HypothesisError(config.name + ": ideal has degree " + std::to_string(deg) + " but " +
                          std::to_string(config.points.size()) + " points were generated");
}

std::vector<FieldElement> roots_of_unity(int n, FieldHandle field) {
  if (!field->is_finite())
    throw HypothesisError(field->name() + " has no primitive " + std::to_string(n) +
                          "-th root of unity");
  std::vector<FieldElement> roots;
  for (const FieldElement& e : field->elements())
    if (!e.is_zero() && e.pow(n).is_one()) roots.push_back(e);
  return roots;
}

Polynomial var(const RingHandle& r, int i) { return Polynomial::variable(r, i); }

// C1, C2, C3: C3 is the displayed quartic, C1 and C2 swap z with x and y.
std::array<Polynomial, 3> klein_quartics(const RingHandle& ring) {
  Polynomial c3 = parse_polynomial(
      "4*x^4 + 4*y^4 + (3*c+9)*x^2*y^2 + (5*c-1)*x^2*z^2 + (5*c-1)*y^2*z^2 + (15*c+25)*z^4", ring);
  const int swap_xz[] = {2, 1, 0};
  const int swap_yz[] = {0, 2, 1};
  return {apply_symmetry(c3, swap_xz), apply_symmetry(c3, swap_yz), c3};
}

}  // namespace

Point canonical_point(Point p) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (p[i].is_zero()) continue;
    FieldElement inv = p[i].inverse();
    for (FieldElement& e : p) e = e * inv;
    return p;
  }
  throw AlgebraError("the zero vector is not a projective point");
}

bool same_point(const Point& a, const Point& b) {
  Point ca = canonical_point(a);
  Point cb = canonical_point(b);
  return ca[0] == cb[0] && ca[1] == cb[1] && ca[2] == cb[2];
}

std::array<std::array<Polynomial, 3>, 2> fermat_columns(int n, const RingHandle& ring) {
  Polynomial x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);
  return {{{x.pow(n - 1), y.pow(n - 1), z.pow(n - 1)}, {y * z, x * z, x * y}}};
}

PointConfiguration fermat(int n, FieldHandle field) {
  if (n < 3) throw HypothesisError("Fermat configurations need n >= 3");
  if (field->characteristic() != 0 && n % static_cast<int>(field->characteristic()) == 0)
    throw HypothesisError("characteristic divides n = " + std::to_string(n));
  std::vector<FieldElement> roots = roots_of_unity(n, field);
  if (static_cast<int>(roots.size()) != n)
    throw HypothesisError(field->name() + " contains " + std::to_string(roots.size()) + " of the " +
                          std::to_string(n) + " roots of t^" + std::to_string(n) + " - 1");

  RingHandle ring = Ring::standard(field);
  Polynomial x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);
  std::vector<Polynomial> gens{x * (y.pow(n) - z.pow(n)), y * (z.pow(n) - x.pow(n)),
                               z * (x.pow(n) - y.pow(n))};

  FieldElement zero = field->zero(), one = field->one();
  std::vector<Point> points;
  add_point(points, {one, zero, zero});
  add_point(points, {zero, one, zero});
  add_point(points, {zero, zero, one});
  for (const FieldElement& a : roots)
    for (const FieldElement& b : roots) add_point(points, {one, a, b});

  std::vector<Polynomial> lines{x, y, z};
  for (int k = 0; k < 3; ++k)
    for (const FieldElement& w : roots) {
      Point c{zero, zero, zero};
      c[static_cast<std::size_t>(k)] = one;
      c[static_cast<std::size_t>((k + 1) % 3)] = -w;
      lines.push_back(linear_form(ring, c));
    }

  PointConfiguration config{"fermat:" + std::to_string(n), ring, std::move(points),
                            Ideal(ring, gens), std::move(lines)};
  if (config.points.size() != static_cast<std::size_t>(n * n + 3))
    throw HypothesisError("Fermat points are not distinct");
  check_vanishing(gens, config.points, config.name);
  check_multiplicity(config);
  return config;
}

std::array<Polynomial, 3> klein_raw_generators(FieldHandle field) {
  if (!field->c())
    throw FieldError("t^2 + t + 2 has no root in " + field->name() + "; use its [c] extension");
  RingHandle ring = Ring::standard(field);
  Polynomial x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);
  auto C = klein_quartics(ring);
  return {x * y * (x * x - y * y) * C[2], y * z * (y * y - z * z) * C[0], z * x * (z * z - x * x) * C[1]};
}

KleinConfiguration klein(FieldHandle field) {
  unsigned ch = field->characteristic();
  if (ch == 2 || ch == 7)
    throw CharacteristicError(ch, "the Klein generators need characteristic other than 2 and 7");
  std::array<Polynomial, 3> gens = klein_raw_generators(field);
  RingHandle ring = gens[0].ring_handle();
  Polynomial x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);

  std::array<Polynomial, 3> C = klein_quartics(ring);

  auto exact = [](const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw HypothesisError("Klein quartic differences are not divisible as expected");
    return *q;
  };
  Polynomial x2 = x * x, y2 = y * y, z2 = z * z;
  std::array<Polynomial, 3> D{exact(C[1] - C[2], y2 - z2), exact(C[2] - C[0], z2 - x2),
                              exact(C[0] - C[1], x2 - y2)};

  KleinStructure s{*field->c(),
                   C,
                   D,
                   {z * D[2], x * D[0], y * D[1]},
                   {z * C[1], x * C[1], y * ((y2 - z2) * D[1] + C[2])},
                   gens,
                   21};
  for (const auto* col : {&s.p, &s.q}) {
    Polynomial sum = (*col)[0] * gens[0] + (*col)[1] * gens[1] + (*col)[2] * gens[2];
    if (!sum.is_zero()) throw HypothesisError("Klein column is not a syzygy of the generators");
  }
  auto quad_basis = graded_basis(*ring, 2);
  if (rank(coefficient_matrix(D, quad_basis)) != 3)
    throw HypothesisError("Klein quadrics D1, D2, D3 are linearly dependent");
  if (!is_zero_dimensional(Ideal(ring, {s.p[0], s.p[1], s.p[2]})))
    throw HypothesisError("z*D3, x*D1, y*D2 is not a regular sequence");

  FieldElement zero = field->zero(), one = field->one(), m1 = -one;
  FieldElement c = s.c, cbar = -one - c, cbar2 = cbar * cbar;
  std::vector<Point> points;
  auto add_orbit = [&](const Point& base) {
    for (const Point& p : permutations(base)) add_point(points, p);
  };
  add_orbit({one, zero, zero});
  for (const FieldElement& a : {one, m1}) add_orbit({one, a, zero});
  for (const FieldElement& a : {one, m1})
    for (const FieldElement& b : {cbar, -cbar}) add_orbit({one, a, b});
  if (points.size() != 21) throw HypothesisError("Klein quadruple-point orbit does not have 21 points");
  for (const FieldElement& a : {one, m1}) add_orbit({c, a, zero});
  for (const FieldElement& a : {one, m1})
    for (const FieldElement& b : {one, m1}) add_orbit({one, a, b});
  for (const FieldElement& a : {one, m1})
    for (const FieldElement& b : {one, m1}) add_orbit({cbar2, a, b});
  if (points.size() != 49)
    throw HypothesisError("Klein points are not 49 distinct points (got " +
                          std::to_string(points.size()) + ")");

  std::vector<Point> line_coefs;
  auto add_lines = [&](const Point& base) {
    for (const Point& p : permutations(base)) add_point(line_coefs, p);
  };
  add_lines({one, zero, zero});
  for (const FieldElement& a : {one, m1}) add_lines({one, a, zero});
  for (const FieldElement& a : {one, m1})
    for (const FieldElement& b : {c, -c}) add_lines({one, a, b});
  if (line_coefs.size() != 21) throw HypothesisError("Klein lines are not 21 distinct lines");
  std::vector<Polynomial> lines;
  for (const Point& l : line_coefs) lines.push_back(linear_form(ring, l));

  PointConfiguration config{"klein", ring, std::move(points),
                            Ideal(ring, {gens[0], gens[1], gens[2]}), std::move(lines)};
  check_vanishing(config.generators(), config.points, config.name);
  check_multiplicity(config);
  return {std::move(config), std::move(s)};
}

PointConfiguration star3(FieldHandle field) {
  RingHandle ring = Ring::standard(field);
  Polynomial x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);
  FieldElement zero = field->zero(), one = field->one();
  PointConfiguration config{"star3", ring,
                            {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}},
                            Ideal(ring, {x * y, x * z, y * z}), {x, y, z}};
  check_vanishing(config.generators(), config.points, config.name);
  return config;
}

bool is_builtin(std::string_view name) {
  return name == "klein" || name == "star3" || name.starts_with("fermat:");
}

PointConfiguration builtin(std::string_view name, FieldHandle field) {
  if (name == "klein") return klein(field).config;
  if (name == "star3") return star3(field);
  if (name.starts_with("fermat:")) {
    std::string_view digits = name.substr(7);
    int n = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size())
      throw ParseError("bad Fermat degree in '" + std::string(name) + "'");
    return fermat(n, field);
  }
  throw ParseError("unknown configuration '" + std::string(name) +
                   "' (expected fermat:<n>, klein or star3)");
}

std::vector<Point> all_points(FieldHandle field) {
  if (!field->is_finite()) throw FieldError("the plane over an infinite field has no point list");
  std::vector<FieldElement> elems = field->elements();
  FieldElement zero = field->zero(), one = field->one();
  std::vector<Point> out;
  for (const FieldElement& a : elems)
    for (const FieldElement& b : elems) out.push_back({one, a, b});
  for (const FieldElement& a : elems) out.push_back({zero, one, a});
  out.push_back({zero, zero, one});
  return out;
}

Incidence incidence(const PointConfiguration& config) {
  Incidence out;
  for (const Point& p : config.points) {
    int count = 0;
    for (const Polynomial& l : config.lines)
      if (l.evaluate(p).is_zero()) ++count;
    out.counts.push_back(count);
    ++out.histogram[count];
    out.pair_count += static_cast<long long>(count) * (count - 1) / 2;
  }
  long long n = static_cast<long long>(config.lines.size());
  out.line_pairs = n * (n - 1) / 2;
  return out;
}

Polynomial product_of_lines(const PointConfiguration& config) {
  return product(config.ring, config.lines);
}

}  // namespace sympow
