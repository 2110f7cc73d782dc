#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/syzygy.hpp"

namespace sympow {

/// Projective point; canonical when the first nonzero coordinate is 1.
using Point = std::array<FieldElement, 3>;

Point canonical_point(Point p);
bool same_point(const Point& a, const Point& b);

/// A reduced set of points in the plane together with its defining ideal
/// and, when known, the arrangement of lines whose singular locus it is.
struct PointConfiguration {
  std::string name;
  RingHandle ring;
  std::vector<Point> points;
  Ideal ideal;
  std::vector<Polynomial> lines;

  FieldHandle field() const { return ring->field(); }
  const std::vector<Polynomial>& generators() const { return ideal.generators(); }
};

/// The quartics, quadrics and syzygy columns behind the 49-point ideal.
struct KleinStructure {
  FieldElement c;
  std::array<Polynomial, 3> quartics;   // C1, C2, C3
  std::array<Polynomial, 3> quadrics;   // D1, D2, D3
  std::array<Polynomial, 3> p;          // (z D3, x D1, y D2), degree 3
  std::array<Polynomial, 3> q;          // degree 5
  std::array<Polynomial, 3> generators;
  /// Number of configuration points listed in the quadruple-point orbit;
  /// these come first in the point list.
  std::size_t quadruple_points = 0;
};

struct KleinConfiguration {
  PointConfiguration config;
  KleinStructure structure;
};

/// (x(y^n - z^n), y(z^n - x^n), z(x^n - y^n)): n^2 + 3 points on 3n + 3 lines.
/// Requires n distinct n-th roots of unity in the field.
PointConfiguration fermat(int n, FieldHandle field);
/// The monomial syzygy columns (x^{n-1}, y^{n-1}, z^{n-1}) and (yz, xz, xy).
std::array<std::array<Polynomial, 3>, 2> fermat_columns(int n, const RingHandle& ring);

/// The 49 points of the Klein arrangement of 21 lines. The field must
/// contain a root c of t^2 + t + 2 and have characteristic other than 2, 7.
KleinConfiguration klein(FieldHandle field);
/// The three degree-8 forms built from a root c of t^2 + t + 2 with no
/// structural checks; in characteristic 7 they vanish on the whole plane.
std::array<Polynomial, 3> klein_raw_generators(FieldHandle field);

/// (xy, xz, yz): the three coordinate points.
PointConfiguration star3(FieldHandle field);

/// Resolves `fermat:<n>`, `klein` or `star3`.
PointConfiguration builtin(std::string_view name, FieldHandle field);
bool is_builtin(std::string_view name);

/// Every projective point of the plane over a finite field.
std::vector<Point> all_points(FieldHandle field);

struct Incidence {
  /// Lines through each configuration point, in point order.
  std::vector<int> counts;
  /// count -> number of points with that count.
  std::map<int, int> histogram;
  /// sum over points of C(count, 2).
  long long pair_count = 0;
  /// C(#lines, 2); equals pair_count when every pair of lines meets at a
  /// configuration point.
  long long line_pairs = 0;
};

Incidence incidence(const PointConfiguration& config);
Polynomial product_of_lines(const PointConfiguration& config);

}  // namespace sympow
