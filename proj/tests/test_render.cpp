#include <doctest.h>

#include "support.hpp"

using namespace fracmeasure;

TEST_CASE("raster output is deterministic and well formed") {
  const auto cells = sample_cylinders(fixtures::segments(), {0, 1, 2, 3}, 8);
  const std::string a = render_cells(cells, ImageFormat::raster, 256);
  CHECK(a == render_cells(cells, ImageFormat::raster, 256));
  CHECK(a.rfind("P6\n256 256\n255\n", 0) == 0);
  CHECK(a.size() == std::string("P6\n256 256\n255\n").size() + 256 * 256 * 3);
  // Two unit segments, each one pixel column wide at this depth.
  CHECK(count_filled_pixels(a) == 2 * 256);
}

TEST_CASE("one pixel per cell for the Cantor dust") {
  // 81 pixels over [0,1]: depth-4 cells of side 3^-4 land on single pixels.
  const auto cells = sample_cylinders(fixtures::cantor_dust(), {0, 1, 2, 3}, 4);
  CHECK(count_filled_pixels(render_cells(cells, ImageFormat::raster, 81)) == cells.size());
}

TEST_CASE("vector output") {
  const auto cells = sample_cylinders(fixtures::cantor_dust(), {0, 1, 2, 3}, 2);
  const std::string svg = render_cells(cells, ImageFormat::svg, 100);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t rects = 0;
  for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
  CHECK(rects == cells.size() + 1);  // plus the background
  CHECK(svg == render_cells(cells, ImageFormat::svg, 100));
}

TEST_CASE("render needs planar cells") {
  const auto line = sample_cylinders(fixtures::cantor3(), {0, 1}, 3);
  CHECK_THROWS_WITH_AS(render_cells(line, ImageFormat::raster), doctest::Contains("n=2"), UnsupportedError);
}
