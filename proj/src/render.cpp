#include "fracmeasure/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fracmeasure {

namespace {

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string raster(const std::vector<CellSample>& cells, int size) {
  std::vector<unsigned char> pixels(static_cast<std::size_t>(size) * size * 3, 255);
  auto to_pixel = [&](double v) { return static_cast<int>(std::floor(v * size)); };
  for (const auto& c : cells) {
    const int x0 = std::clamp(to_pixel(c.box.lo(0)), 0, size - 1);
    const int x1 = std::clamp(std::max(x0, static_cast<int>(std::ceil(c.box.hi(0) * size)) - 1), 0, size - 1);
    const int y0 = std::clamp(to_pixel(c.box.lo(1)), 0, size - 1);
    const int y1 = std::clamp(std::max(y0, static_cast<int>(std::ceil(c.box.hi(1) * size)) - 1), 0, size - 1);
    for (int y = y0; y <= y1; ++y) {
      const int row = size - 1 - y;
      for (int x = x0; x <= x1; ++x) {
        auto* p = &pixels[(static_cast<std::size_t>(row) * size + x) * 3];
        p[0] = p[1] = p[2] = 0;
      }
    }
  }
  std::string out = "P6\n" + std::to_string(size) + " " + std::to_string(size) + "\n255\n";
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  return out;
}

std::string vector_image(const std::vector<CellSample>& cells, int size) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 1 1\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n"
      << "<g transform=\"matrix(1 0 0 -1 0 1)\" fill=\"black\">\n";
  // Degenerate boxes get a hairline so they stay visible.
  const double min_extent = 1.0 / size;
  for (const auto& c : cells) {
    const double w = std::max(c.box.hi(0) - c.box.lo(0), min_extent);
    const double h = std::max(c.box.hi(1) - c.box.lo(1), min_extent);
    out << "<rect x=\"" << fixed(c.box.lo(0)) << "\" y=\"" << fixed(c.box.lo(1)) << "\" width=\"" << fixed(w)
        << "\" height=\"" << fixed(h) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string render_cells(const std::vector<CellSample>& cells, ImageFormat format, int size) {
  if (!cells.empty() && cells.front().box.dim() != 2) {
    throw UnsupportedError("render requires n=2, got n=" + std::to_string(cells.front().box.dim()));
  }
  if (size < 1 || size > 8192) throw std::domain_error("image size must be in 1..8192");
  return format == ImageFormat::raster ? raster(cells, size) : vector_image(cells, size);
}

std::size_t count_filled_pixels(const std::string& ppm) {
  std::istringstream in(ppm);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P6") throw std::domain_error("not a P6 image");
  in.get();
  const auto offset = static_cast<std::size_t>(in.tellg());
  std::size_t count = 0;
  for (std::size_t p = offset; p + 2 < ppm.size(); p += 3) count += ppm[p] == 0;
  return count;
}

}  // namespace fracmeasure
