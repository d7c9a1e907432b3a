#include "diskbez/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "diskbez/curve_io.hpp"

namespace diskbez {

namespace {

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // avoid "-0.000"
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();
  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

// Maps data coordinates into a panel with y pointing up.
struct Viewport {
  double left, top, width, height;
  Box box;
  double sx = 1.0, sy = 1.0;

  void fit(bool keep_aspect) {
    double w = box.x1 - box.x0;
    double h = box.y1 - box.y0;
    if (!(w > 0.0)) w = 1.0;
    if (!(h > 0.0)) h = 1.0;
    sx = width / w;
    sy = height / h;
    if (keep_aspect) sx = sy = std::min(sx, sy);
  }
  double px(double x) const { return left + (x - box.x0) * sx; }
  double py(double y) const { return top + height - (y - box.y0) * sy; }
};

struct Envelope {
  std::vector<Point2> center, upper, lower;
  std::vector<std::size_t> cusps;  // samples whose normal is undefined
  std::vector<double> radius;
};

Envelope envelope(const DiskRationalBezier& c, int samples) {
  const auto grid = uniform_grid(samples);
  const auto s = sample(c, grid);
  Envelope e;
  const std::size_t n = grid.size();
  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) scale = std::max({scale, std::abs(s.x[j]), std::abs(s.y[j])});
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t a = j == 0 ? 0 : j - 1;
    const std::size_t b = j + 1 == n ? n - 1 : j + 1;
    double tx = s.x[b] - s.x[a];
    double ty = s.y[b] - s.y[a];
    const double len = std::hypot(tx, ty);
    e.center.push_back({s.x[j], s.y[j]});
    e.radius.push_back(s.r[j]);
    if (len <= 1e-12 * (1.0 + scale)) {
      e.cusps.push_back(j);
      e.upper.push_back({s.x[j], s.y[j]});
      e.lower.push_back({s.x[j], s.y[j]});
      continue;
    }
    tx /= len;
    ty /= len;
    e.upper.push_back({s.x[j] - ty * s.r[j], s.y[j] + tx * s.r[j]});
    e.lower.push_back({s.x[j] + ty * s.r[j], s.y[j] - tx * s.r[j]});
  }
  return e;
}

std::string polyline(const std::vector<Point2>& pts, const Viewport& vp, const std::string& style) {
  std::string out = "<polyline fill=\"none\" " + style + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fixed(vp.px(pts[i].x)) + "," + fixed(vp.py(pts[i].y));
  }
  out += "\"/>\n";
  return out;
}

std::string draw_envelope(const Envelope& e, const Viewport& vp, const std::string& color) {
  std::string out;
  out += polyline(e.upper, vp, "stroke=\"" + color + "\" stroke-width=\"1.2\"");
  out += polyline(e.lower, vp, "stroke=\"" + color + "\" stroke-width=\"1.2\"");
  out += polyline(e.center, vp, "stroke=\"" + color + "\" stroke-width=\"0.6\" stroke-dasharray=\"4,3\"");
  for (std::size_t j : e.cusps) {
    out += "<circle fill=\"none\" stroke=\"" + color + "\" stroke-width=\"0.8\" cx=\"" +
           fixed(vp.px(e.center[j].x)) + "\" cy=\"" + fixed(vp.py(e.center[j].y)) + "\" r=\"" +
           fixed(e.radius[j] * vp.sx) + "\"/>\n";
  }
  return out;
}

std::string axes(const Viewport& vp, const std::string& title) {
  std::string out;
  out += "<rect fill=\"none\" stroke=\"#888\" stroke-width=\"0.5\" x=\"" + fixed(vp.left) + "\" y=\"" +
         fixed(vp.top) + "\" width=\"" + fixed(vp.width) + "\" height=\"" + fixed(vp.height) + "\"/>\n";
  out += "<text x=\"" + fixed(vp.left) + "\" y=\"" + fixed(vp.top - 8.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" + title + "</text>\n";
  return out;
}

}  // namespace

std::string render_svg(const DiskRationalBezier& original, const DiskRationalBezier& reduced,
                       int samples_M) {
  const Envelope eo = envelope(original, samples_M);
  const Envelope er = envelope(reduced, samples_M);
  const ErrorSeries es = error_series(original, reduced, samples_M);

  constexpr double kPanel = 360.0;
  constexpr double kMargin = 30.0;
  const double total_w = 3.0 * kPanel + 4.0 * kMargin;
  const double total_h = kPanel + 2.0 * kMargin;

  Viewport curves{kMargin, kMargin, kPanel, kPanel, {}};
  for (const Envelope* e : {&eo, &er}) {
    for (std::size_t j = 0; j < e->center.size(); ++j) {
      const double r = e->radius[j];
      curves.box.add(e->center[j].x - r, e->center[j].y - r);
      curves.box.add(e->center[j].x + r, e->center[j].y + r);
    }
  }
  curves.fit(true);

  Viewport cerr{2.0 * kMargin + kPanel, kMargin, kPanel, kPanel, {}};
  Viewport rerr{3.0 * kMargin + 2.0 * kPanel, kMargin, kPanel, kPanel, {}};
  cerr.box.add(0.0, 0.0);
  rerr.box.add(0.0, 0.0);
  std::vector<Point2> cpts, rpts;
  for (std::size_t j = 0; j < es.t.size(); ++j) {
    cpts.push_back({es.t[j], es.center_err[j]});
    rpts.push_back({es.t[j], es.radius_err[j]});
    cerr.box.add(es.t[j], es.center_err[j]);
    rerr.box.add(es.t[j], es.radius_err[j]);
  }
  cerr.fit(false);
  rerr.fit(false);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(total_w) +
         "\" height=\"" + fixed(total_h) + "\" viewBox=\"0 0 " + fixed(total_w) + " " + fixed(total_h) +
         "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += axes(curves, "degree " + std::to_string(original.degree()) + " (black) and degree " +
                          std::to_string(reduced.degree()) + " (blue)");
  out += draw_envelope(eo, curves, "black");
  out += draw_envelope(er, curves, "blue");
  out += axes(cerr, "center error, max " + fixed(*std::max_element(es.center_err.begin(), es.center_err.end())));
  out += polyline(cpts, cerr, "stroke=\"#c00\" stroke-width=\"1\"");
  out += axes(rerr, "radius error, max " + fixed(*std::max_element(es.radius_err.begin(), es.radius_err.end())));
  out += polyline(rpts, rerr, "stroke=\"#c00\" stroke-width=\"1\"");
  out += "</svg>\n";
  return out;
}

ReduceSummary summarize(const DiskRationalBezier& original, const ReductionResult& result,
                        const ReductionConfig& cfg) {
  ReduceSummary s;
  s.input_degree = original.degree();
  s.output_degree = result.reduced.degree();
  s.k = cfg.k;
  s.h = cfg.h;
  s.d_mode = cfg.d_mode;
  s.d = result.d;
  s.weight_objective = result.weight_qp.objective;
  s.radius_objective = result.radius_qp.objective;
  s.errors = measure(original, result.reduced, cfg.samples_M);
  return s;
}

namespace {

const char* mode_name(DistanceMode m) { return m == DistanceMode::MaxDistance ? "max" : "sum"; }

std::string fmt4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string format_report_text(const ReduceSummary& s, const DiskRationalBezier& reduced) {
  std::string out;
  out += "degree reduction " + std::to_string(s.input_degree) + " -> " + std::to_string(s.output_degree) +
         ", continuity C(" + std::to_string(s.k) + "," + std::to_string(s.h) + ")\n";
  out += "control disks:\n";
  for (std::size_t i = 0; i < reduced.disks().size(); ++i) {
    const auto& d = reduced.disks()[i];
    out += "  (" + fmt4(d.cx()) + ", " + fmt4(d.cy()) + ")_" + fmt4(d.r()) + "  w=" +
           fmt4(reduced.weights()[i]) + "\n";
  }
  out += "d (" + std::string(mode_name(s.d_mode)) + ") = " + fmt4(s.d) + "\n";
  out += "max center error = " + fmt4(s.errors.max_center_err) + " at t = " + fmt4(s.errors.argmax_center_t) + "\n";
  out += "max radius error = " + fmt4(s.errors.max_radius_err) + " at t = " + fmt4(s.errors.argmax_radius_t) + "\n";
  out += "samples = " + std::to_string(s.errors.samples_M) + "\n";
  return out;
}

std::string format_report_json(const ReduceSummary& s) {
  std::string out = "{\n";
  auto field = [&out](const char* key, const std::string& value, bool last = false) {
    out += "  \"" + std::string(key) + "\": " + value + (last ? "\n" : ",\n");
  };
  field("input_degree", std::to_string(s.input_degree));
  field("output_degree", std::to_string(s.output_degree));
  field("k", std::to_string(s.k));
  field("h", std::to_string(s.h));
  field("samples_M", std::to_string(s.errors.samples_M));
  field("d_mode", std::string("\"") + mode_name(s.d_mode) + "\"");
  field("d", format_real(s.d));
  field("max_center_err", format_real(s.errors.max_center_err));
  field("argmax_center_t", format_real(s.errors.argmax_center_t));
  field("max_radius_err", format_real(s.errors.max_radius_err));
  field("argmax_radius_t", format_real(s.errors.argmax_radius_t));
  field("weight_objective", format_real(s.weight_objective));
  field("radius_objective", format_real(s.radius_objective), true);
  out += "}\n";
  return out;
}

}  // namespace diskbez
