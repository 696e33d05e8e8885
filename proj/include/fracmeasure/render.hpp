#ifndef FRACMEASURE_RENDER_HPP
#define FRACMEASURE_RENDER_HPP

#include <string>
#include <vector>

#include "fracmeasure/simgeom.hpp"

namespace fracmeasure {

enum class ImageFormat { raster, svg };

/// Draws one filled box per cell over the frame [0,1]^2 (y up). Raster
/// output is binary PPM (P6), vector output is SVG. Output depends only on
/// the cells and the size. Throws UnsupportedError unless the cells are 2-D.
std::string render_cells(const std::vector<CellSample>& cells, ImageFormat format, int size = 512);

/// Number of black pixels in a P6 image produced by render_cells.
std::size_t count_filled_pixels(const std::string& ppm);

}  // namespace fracmeasure

#endif  // FRACMEASURE_RENDER_HPP
