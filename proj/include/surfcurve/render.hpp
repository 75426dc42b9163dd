#pragma once

// Schematic SVG pictures.  Nothing here is metric: faces of the map sit on a
// circle, map edges are drawn between the faces they separate, and a curve
// is the polyline through the midpoints of the edges it crosses.  The
// polygonal schema of a loop system is a regular polygon labelled with the
// word.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "surfcurve/curve.hpp"
#include "surfcurve/loops.hpp"

namespace surfcurve {

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace detail

inline std::string render_curve_svg(const SurfaceMap& m, const CurveDrawing* d) {
  const int size = 640;
  const double cx = size / 2.0, cy = size / 2.0, radius = size * 0.38;
  const double pi = std::acos(-1.0);
  int nf = m.num_faces();
  std::vector<std::array<double, 2>> at(nf);
  for (int f = 0; f < nf; ++f) {
    double a = 2 * pi * f / std::max(nf, 1) - pi / 2;
    at[f] = {cx + radius * std::cos(a), cy + radius * std::sin(a)};
  }
  // an edge between two faces bends outwards by an amount depending on its id
  // so that parallel edges stay apart
  auto mid = [&](int e) {
    auto [s1, s2] = m.edge_sides(e);
    auto p = at[m.side_face(s1)], q = at[m.side_face(s2)];
    double mx = (p[0] + q[0]) / 2, my = (p[1] + q[1]) / 2;
    double dx = mx - cx, dy = my - cy, len = std::hypot(dx, dy);
    double bend = 18.0 * (1 + e % 4);
    if (len < 1e-9) dx = 0, dy = -1, len = 1;
    if (p == q) bend += 40;
    return std::array<double, 2>{mx + bend * dx / len, my + bend * dy / len};
  };
  std::string s = detail::svg_open(size, size);
  for (int e = 0; e < m.num_edges(); ++e) {
    auto [s1, s2] = m.edge_sides(e);
    auto p = at[m.side_face(s1)], q = at[m.side_face(s2)];
    auto c = mid(e);
    bool twisted = m.side(s1).sign == m.side(s2).sign;
    s += "<path d=\"M" + detail::fmt(p[0]) + "," + detail::fmt(p[1]) + " Q" + detail::fmt(2 * c[0] - (p[0] + q[0]) / 2) +
         "," + detail::fmt(2 * c[1] - (p[1] + q[1]) / 2) + " " + detail::fmt(q[0]) + "," + detail::fmt(q[1]) +
         "\" fill=\"none\" stroke=\"#999\"" + (twisted ? " stroke-dasharray=\"4,3\"" : "") + "/>\n";
    s += "<text x=\"" + detail::fmt(c[0]) + "\" y=\"" + detail::fmt(c[1]) +
         "\" font-size=\"10\" fill=\"#555\">e" + std::to_string(e + 1) + "</text>\n";
  }
  for (int f = 0; f < nf; ++f)
    s += "<circle cx=\"" + detail::fmt(at[f][0]) + "\" cy=\"" + detail::fmt(at[f][1]) +
         "\" r=\"12\" fill=\"#eef\" stroke=\"#336\"/>\n<text x=\"" + detail::fmt(at[f][0] - 5) + "\" y=\"" +
         detail::fmt(at[f][1] + 4) + "\" font-size=\"11\">" + std::to_string(f + 1) + "</text>\n";
  if (d && !d->trivial) {
    auto seq = crossing_sequence(m, *d);
    std::string pts;
    for (const auto& c : seq) {
      auto p = mid(c.edge);
      // separate repeated crossings of one edge a little
      pts += detail::fmt(p[0] + 4 * c.index) + "," + detail::fmt(p[1] + 4 * c.index) + " ";
    }
    s += "<polygon points=\"" + pts + "\" fill=\"none\" stroke=\"#c22\" stroke-width=\"2\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

inline std::string render_schema_svg(const LoopSystem& ls) {
  const int size = 480;
  const double cx = size / 2.0, cy = size / 2.0, radius = size * 0.36;
  const double pi = std::acos(-1.0);
  int n = static_cast<int>(ls.word.size());
  std::string s = detail::svg_open(size, size);
  if (n == 0) {
    s += "<circle cx=\"240\" cy=\"240\" r=\"120\" fill=\"none\" stroke=\"#336\"/>\n</svg>\n";
    return s;
  }
  auto corner = [&](int i) {
    double a = 2 * pi * i / n - pi / 2;
    return std::array<double, 2>{cx + radius * std::cos(a), cy + radius * std::sin(a)};
  };
  for (int i = 0; i < n; ++i) {
    auto p = corner(i), q = corner(i + 1);
    const auto& letter = ls.word[i];
    if (letter.sign < 0) std::swap(p, q);
    s += "<line x1=\"" + detail::fmt(p[0]) + "\" y1=\"" + detail::fmt(p[1]) + "\" x2=\"" + detail::fmt(q[0]) +
         "\" y2=\"" + detail::fmt(q[1]) + "\" stroke=\"#336\" stroke-width=\"2\"/>\n";
    // arrow head at the far end
    double dx = q[0] - p[0], dy = q[1] - p[1], len = std::hypot(dx, dy);
    double ux = dx / len, uy = dy / len;
    double hx = p[0] + dx * 0.6, hy = p[1] + dy * 0.6;
    s += "<polygon points=\"" + detail::fmt(hx) + "," + detail::fmt(hy) + " " + detail::fmt(hx - 10 * ux - 5 * uy) +
         "," + detail::fmt(hy - 10 * uy + 5 * ux) + " " + detail::fmt(hx - 10 * ux + 5 * uy) + "," +
         detail::fmt(hy - 10 * uy - 5 * ux) + "\" fill=\"#336\"/>\n";
    double mx = (p[0] + q[0]) / 2, my = (p[1] + q[1]) / 2;
    double ox = mx - cx, oy = my - cy, ol = std::hypot(ox, oy);
    s += "<text x=\"" + detail::fmt(mx + 18 * ox / ol - 6) + "\" y=\"" + detail::fmt(my + 18 * oy / ol + 4) +
         "\" font-size=\"14\">" + ls.names[letter.id] + "</text>\n";
  }
  s += "<text x=\"10\" y=\"20\" font-size=\"13\">" + ls.word_text + "</text>\n</svg>\n";
  return s;
}

}  // namespace surfcurve
