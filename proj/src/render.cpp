#include "lineops/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lineops {

namespace {

constexpr double kTol = 1e-9;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// the two affine coordinates of the chart, in order
std::pair<int, int> affine_axes(int chart) {
  if (chart == 0) return {1, 2};
  if (chart == 1) return {0, 2};
  return {0, 1};
}

}  // namespace

RenderResult render_svg(const std::vector<RenderLayer>& layers, const RenderSpec& spec) {
  if (spec.chart < 0 || spec.chart > 2) throw Error(ErrorKind::OutOfRange, "chart must be 0, 1 or 2");
  if (spec.xmin >= spec.xmax || spec.ymin >= spec.ymax) throw Error(ErrorKind::OutOfRange, "empty window");
  if (spec.width <= 0 || spec.height <= 0) throw Error(ErrorKind::OutOfRange, "image size must be positive");
  const double x0 = spec.xmin.get_d(), x1 = spec.xmax.get_d(), y0 = spec.ymin.get_d(), y1 = spec.ymax.get_d();
  const double W = spec.width, H = spec.height;
  auto px = [&](double x) { return (x - x0) / (x1 - x0) * W; };
  auto py = [&](double y) { return H - (y - y0) / (y1 - y0) * H; };
  auto [iu, iv] = affine_axes(spec.chart);

  RenderResult res;
  std::string body;
  for (auto& layer : layers) {
    if (!layer.lines.empty() && layer.lines.field().is_finite())
      throw Error(ErrorKind::NoRealRoot, "cannot draw lines over " + layer.lines.field().to_string());
    body += "<g class=\"" + layer.style + "\">\n";
    for (auto& l : layer.lines) {
      double a = l[iu].real_embedding(spec.root_index), b = l[iv].real_embedding(spec.root_index),
             c = l[spec.chart].real_embedding(spec.root_index);
      if (std::abs(a) < kTol && std::abs(b) < kTol) {
        ++res.omitted;
        continue;
      }
      // a u + b v + c = 0 against the four window edges
      std::vector<std::pair<double, double>> hits;
      auto add = [&](double u, double v) {
        if (u < x0 - kTol || u > x1 + kTol || v < y0 - kTol || v > y1 + kTol) return;
        u = std::clamp(u, x0, x1);
        v = std::clamp(v, y0, y1);
        for (auto& h : hits)
          if (std::abs(h.first - u) < kTol && std::abs(h.second - v) < kTol) return;
        hits.emplace_back(u, v);
      };
      if (std::abs(b) >= kTol) {
        add(x0, -(a * x0 + c) / b);
        add(x1, -(a * x1 + c) / b);
      }
      if (std::abs(a) >= kTol) {
        add(-(b * y0 + c) / a, y0);
        add(-(b * y1 + c) / a, y1);
      }
      if (hits.size() < 2) {
        ++res.outside_window;
        continue;
      }
      std::sort(hits.begin(), hits.end());
      auto p = hits.front(), q = hits.back();
      body += "<line x1=\"" + num(px(p.first)) + "\" y1=\"" + num(py(p.second)) + "\" x2=\"" + num(px(q.first)) +
              "\" y2=\"" + num(py(q.second)) + "\"/>\n";
      ++res.segments;
    }
    body += "</g>\n";
  }

  if (spec.mark_points) {
    std::vector<ProjLine> all;
    for (auto& layer : layers) all.insert(all.end(), layer.lines.begin(), layer.lines.end());
    if (!all.empty()) {
      Arrangement U(all[0].field(), all);
      auto sel = MultiplicitySelector::at_least_n(2);
      std::vector<std::pair<std::pair<double, double>, std::size_t>> pts;
      for (auto& pi : incidence_index(U, &sel)) {
        if (pi.point[spec.chart].is_zero()) continue;
        double w = pi.point[spec.chart].real_embedding(spec.root_index);
        double u = pi.point[iu].real_embedding(spec.root_index) / w, v = pi.point[iv].real_embedding(spec.root_index) / w;
        if (u < x0 - kTol || u > x1 + kTol || v < y0 - kTol || v > y1 + kTol) continue;
        pts.push_back({{u, v}, pi.lines.size()});
      }
      std::sort(pts.begin(), pts.end());
      body += "<g class=\"points\">\n";
      for (auto& [uv, k] : pts) {
        double r = 1.5 + 1.0 * static_cast<double>(k);
        body += "<circle class=\"m" + std::to_string(k) + "\" cx=\"" + num(px(uv.first)) + "\" cy=\"" +
                num(py(uv.second)) + "\" r=\"" + num(r) + "\"/>\n";
      }
      body += "</g>\n";
      res.points = pts.size();
    }
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
         "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  svg += "<style>\n"
         "line { stroke: black; stroke-width: 1.2; }\n"
         ".step0 line { stroke: black; }\n"
         ".step1 line { stroke: #1f4fd1; }\n"
         ".step2 line { stroke: #d11f1f; }\n"
         ".points circle { fill: black; stroke: none; }\n"
         "</style>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" fill=\"white\"/>\n";
  svg += body;
  svg += "<!-- segments " + std::to_string(res.segments) + ", omitted at infinity " + std::to_string(res.omitted) +
         ", outside window " + std::to_string(res.outside_window) + " -->\n";
  svg += "</svg>\n";
  res.svg = std::move(svg);
  return res;
}

}  // namespace lineops
