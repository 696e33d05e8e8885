#ifndef FRACMEASURE_FIXTURES_HPP
#define FRACMEASURE_FIXTURES_HPP

#include <vector>

#include "fracmeasure/simgeom.hpp"

namespace fracmeasure::fixtures {

// Sets that are not similarity attractors, sampled parametrically. Cells
// are listed in order along the curve.

/// Unit circle centered at the origin, `points` equal arcs.
std::vector<CellSample> circle(int points = 8192);

/// Boundary of [0,1]^2, `per_edge` equal pieces per side.
std::vector<CellSample> square_boundary(int per_edge = 2048);

// Similarity systems.

/// Four half-size maps of the unit square driven by an aperiodic 4x4
/// matrix; the attractor is two vertical unit segments.
SftSystem segments();

/// Three disjoint subintervals of [0,1] with a reducible 3x3 matrix; the
/// attractor has four points.
SftSystem nonirreducible();

/// {x/2, x/2 + 1/2}: the unit interval.
SftSystem interval();

/// {x/3, x/3 + 2/3}.
SftSystem cantor3();

/// {x/3, x/3 + 2/3} restricted by the golden-mean matrix [[1,1],[1,0]].
SftSystem golden_mean();

/// {x/2, x/3, x/2 + 1/2}: attractor [0,1], overlaps accumulate.
SftSystem wsp_fail();

/// Four corner maps of ratio 1/3 in the plane.
SftSystem cantor_dust();

}  // namespace fracmeasure::fixtures

#endif  // FRACMEASURE_FIXTURES_HPP
