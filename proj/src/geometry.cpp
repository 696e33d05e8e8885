#include "fracmeasure/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fracmeasure {

namespace {

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew's monotone chain.
std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (p.size() < 3) return p;
  std::vector<Eigen::Vector2d> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

double quadratic_diameter(const std::vector<Vector>& points) {
  double best = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) best = std::max(best, (points[i] - points[j]).squaredNorm());
  return std::sqrt(best);
}

}  // namespace

double point_set_diameter(const std::vector<Vector>& points) {
  if (points.size() < 2) return 0.0;
  const auto n = points.front().size();
  if (n == 1) {
    const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                              [](const Vector& a, const Vector& b) { return a(0) < b(0); });
    return (*hi)(0) - (*lo)(0);
  }
  if (n == 2) {
    std::vector<Eigen::Vector2d> flat;
    flat.reserve(points.size());
    for (const auto& p : points) flat.emplace_back(p(0), p(1));
    const auto hull = convex_hull(std::move(flat));
    std::vector<Vector> hv;
    hv.reserve(hull.size());
    for (const auto& h : hull) hv.push_back(h);
    if (hv.size() < 2) return 0.0;
    return quadratic_diameter(hv);
  }
  return quadratic_diameter(points);
}

double unit_ball_volume(int n) {
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

}  // namespace fracmeasure
