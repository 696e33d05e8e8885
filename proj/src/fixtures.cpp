#include "fracmeasure/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace fracmeasure::fixtures {

namespace {

Similarity line_map(double r, double t) { return Similarity::scaling(r, Vector::Constant(1, t)); }

Similarity plane_map(double r, const Matrix& o, double tx, double ty) {
  Vector t(2);
  t << tx, ty;
  return Similarity(r, o, t);
}

TransitionMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return TransitionMatrix(std::move(m));
}

CellSample ball_cell(int index, const Vector& center, double radius) {
  CellSample c;
  c.word = {index};
  c.center = center;
  c.radius = radius;
  c.diameter = 2 * radius;
  c.box.lo = center.array() - radius;
  c.box.hi = center.array() + radius;
  return c;
}

}  // namespace

std::vector<CellSample> circle(int points) {
  if (points < 3) throw std::domain_error("circle fixture needs at least 3 points");
  const double step = 2 * std::numbers::pi / points;
  // Points of the arc within step/2 of a center lie within this chord.
  const double radius = 2 * std::sin(step / 4);
  std::vector<CellSample> cells;
  cells.reserve(points);
  for (int k = 0; k < points; ++k) {
    Vector c(2);
    c << std::cos(k * step), std::sin(k * step);
    cells.push_back(ball_cell(k, c, radius));
  }
  return cells;
}

std::vector<CellSample> square_boundary(int per_edge) {
  if (per_edge < 1) throw std::domain_error("square fixture needs at least one piece per edge");
  const double h = 1.0 / per_edge;
  std::vector<CellSample> cells;
  cells.reserve(4 * per_edge);
  // Counter-clockwise from the origin.
  const double corners[5][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
  int index = 0;
  for (int e = 0; e < 4; ++e) {
    Vector a(2), b(2);
    a << corners[e][0], corners[e][1];
    b << corners[e + 1][0], corners[e + 1][1];
    for (int k = 0; k < per_edge; ++k) {
      const Vector p = a + (b - a) * (k * h);
      const Vector q = a + (b - a) * ((k + 1) * h);
      CellSample c;
      c.word = {index++};
      c.center = (p + q) / 2;
      c.radius = h / 2;
      c.diameter = h;
      c.box.lo = p.cwiseMin(q);
      c.box.hi = p.cwiseMax(q);
      cells.push_back(std::move(c));
    }
  }
  return cells;
}

SftSystem segments() {
  const Matrix id = Matrix::Identity(2, 2);
  Matrix flip = id;
  flip(0, 0) = -1;
  return SftSystem({plane_map(0.5, id, 0, 0), plane_map(0.5, flip, 0.5, 0.5), plane_map(0.5, id, 0.5, 0),
                    plane_map(0.5, flip, 1, 0.5)},
                   matrix({{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}}));
}

SftSystem nonirreducible() {
  return SftSystem({line_map(0.25, 0), line_map(0.25, 0.375), line_map(0.25, 0.75)},
                   matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
}

SftSystem interval() { return SftSystem({line_map(0.5, 0), line_map(0.5, 0.5)}, TransitionMatrix::full(2)); }

SftSystem cantor3() { return SftSystem({line_map(1.0 / 3, 0), line_map(1.0 / 3, 2.0 / 3)}, TransitionMatrix::full(2)); }

SftSystem golden_mean() {
  return SftSystem({line_map(1.0 / 3, 0), line_map(1.0 / 3, 2.0 / 3)}, matrix({{1, 1}, {1, 0}}));
}

SftSystem wsp_fail() {
  return SftSystem({line_map(0.5, 0), line_map(1.0 / 3, 0), line_map(0.5, 0.5)}, TransitionMatrix::full(3));
}

SftSystem cantor_dust() {
  const Matrix id = Matrix::Identity(2, 2);
  const double r = 1.0 / 3;
  return SftSystem({plane_map(r, id, 0, 0), plane_map(r, id, 2 * r, 0), plane_map(r, id, 0, 2 * r),
                    plane_map(r, id, 2 * r, 2 * r)},
                   TransitionMatrix::full(4));
}

}  // namespace fracmeasure::fixtures
