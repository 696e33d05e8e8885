#ifndef FRACMEASURE_GEOMETRY_HPP
#define FRACMEASURE_GEOMETRY_HPP

#include <vector>

#include "fracmeasure/types.hpp"

namespace fracmeasure {

/// Largest pairwise distance. Linear in 1-D, convex hull in 2-D, quadratic
/// otherwise.
double point_set_diameter(const std::vector<Vector>& points);

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

}  // namespace fracmeasure

#endif  // FRACMEASURE_GEOMETRY_HPP
