#include "fibchain/svg.hpp"

#include <cstdio>
#include <sstream>

namespace fib {

namespace {

constexpr const char* kColorL = "#4878cf";
constexpr const char* kColorS = "#d65f5f";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void rect(std::ostringstream& os, double x, double y, double w, double h, const char* fill) {
  os << "  <rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" fill=\"" << fill
     << "\" stroke=\"#222222\" stroke-width=\"0.5\"/>\n";
}

std::string document(double width, double height, const std::string& body) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n"
     << body << "</svg>\n";
  return os.str();
}

}  // namespace

std::string svg_tiling(const std::vector<Tile>& tiles) {
  constexpr double scale = 40.0, h = 24.0, pad = 10.0;
  double xmin = 0.0, xmax = 0.0;
  for (const Tile& t : tiles) {
    xmin = std::min(xmin, t.start);
    xmax = std::max(xmax, t.start + t.length);
  }
  std::ostringstream body;
  for (const Tile& t : tiles)
    rect(body, pad + (t.start - xmin) * scale, pad, t.length * scale, h,
         t.kind == 'L' ? kColorL : kColorS);
  // origin marker
  double ox = pad + (0.0 - xmin) * scale;
  body << "  <line x1=\"" << fmt(ox) << "\" y1=\"" << fmt(pad - 6.0) << "\" x2=\"" << fmt(ox)
       << "\" y2=\"" << fmt(pad + h + 6.0) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  return document(2 * pad + (xmax - xmin) * scale, 2 * pad + h + 6.0, body.str());
}

std::string svg_tower(int levels) {
  constexpr double scale = 480.0, row = 26.0, gap = 8.0, pad = 10.0;
  std::ostringstream body;
  for (int n = 0; n <= levels; ++n) {
    Partition w = build_partition(n);
    double y = pad + n * (row + gap);
    for (const Interval& iv : w.intervals)
      rect(body, pad + iv.lo.to_double() * scale, y, (iv.hi - iv.lo).to_double() * scale, row,
           iv.kind == 'L' ? kColorL : kColorS);
  }
  return document(2 * pad + scale, 2 * pad + (levels + 1) * (row + gap) - gap, body.str());
}

std::string svg_bratteli(int levels) {
  constexpr double colL = 60.0, colS = 180.0, rowstep = 70.0, pad = 40.0, radius = 16.0;
  std::ostringstream body;
  auto ypos = [&](int n) { return pad + n * rowstep; };
  for (int n = 0; n < levels; ++n) {
    // edges per the inclusion matrix [[1,1],[1,0]]
    body << "  <line x1=\"" << fmt(colL) << "\" y1=\"" << fmt(ypos(n)) << "\" x2=\"" << fmt(colL)
         << "\" y2=\"" << fmt(ypos(n + 1)) << "\" stroke=\"#555555\"/>\n";
    body << "  <line x1=\"" << fmt(colS) << "\" y1=\"" << fmt(ypos(n)) << "\" x2=\"" << fmt(colL)
         << "\" y2=\"" << fmt(ypos(n + 1)) << "\" stroke=\"#555555\"/>\n";
    body << "  <line x1=\"" << fmt(colL) << "\" y1=\"" << fmt(ypos(n)) << "\" x2=\"" << fmt(colS)
         << "\" y2=\"" << fmt(ypos(n + 1)) << "\" stroke=\"#555555\"/>\n";
  }
  for (int n = 0; n <= levels; ++n) {
    DimensionVector v = dimension_vector(n);
    body << "  <circle cx=\"" << fmt(colL) << "\" cy=\"" << fmt(ypos(n)) << "\" r=\""
         << fmt(radius) << "\" fill=\"" << kColorL << "\"/>\n";
    body << "  <circle cx=\"" << fmt(colS) << "\" cy=\"" << fmt(ypos(n)) << "\" r=\""
         << fmt(radius) << "\" fill=\"" << kColorS << "\"/>\n";
    body << "  <text x=\"" << fmt(colL) << "\" y=\"" << fmt(ypos(n) + 4.0)
         << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#ffffff\">" << v.k << "</text>\n";
    body << "  <text x=\"" << fmt(colS) << "\" y=\"" << fmt(ypos(n) + 4.0)
         << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#ffffff\">" << v.kp << "</text>\n";
  }
  return document(colS + pad + radius, 2 * pad + levels * rowstep, body.str());
}

}  // namespace fib
