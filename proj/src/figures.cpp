#include "circlegap/figures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace circlegap {

namespace {

const char* kScatterColors[9] = {"",     "red",   "orange", "purple",    "green",
                                 "blue", "brown", "black",  "aquamarine"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

size_t gap_class(const GapReport& rep, const QuadSurd& gap) {
  for (size_t i = 0; i < rep.distinct_gaps.size(); ++i)
    if (rep.distinct_gaps[i] == gap) return i;
  throw std::logic_error("gap_class: gap not in report");
}

}  // namespace

std::vector<std::string> gap_palette(size_t distinct_count) {
  switch (distinct_count) {
    case 1:
      return {"black"};
    case 2:
      return {"black", "orange"};  // shorter black, longer orange
    case 3:
      return {"green", "blue", "red"};  // shortest green, middle blue, longest red
    default:
      throw std::invalid_argument("gap_palette: more than 3 distinct gaps");
  }
}

std::string circle_figure_svg(const GapReport& rep, int size_px) {
  const auto& pts = rep.points;
  const size_t n = pts.size();
  const auto palette = gap_palette(rep.distinct_gaps.size());
  const double cx = size_px / 2.0, cy = size_px / 2.0;
  const double R = size_px * 0.42;
  const double tau = 8.0 * std::atan(1.0);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size_px) +
         "\" height=\"" + std::to_string(size_px) + "\" viewBox=\"0 0 " +
         std::to_string(size_px) + " " + std::to_string(size_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto coord = [&](double frac) {
    double ang = tau * frac;
    return std::pair<double, double>(cx + R * std::cos(ang), cy - R * std::sin(ang));
  };

  for (size_t i = 0; i < n; ++i) {
    const QuadSurd& a = pts[i];
    bool wrap = i + 1 == n;
    QuadSurd gap = wrap ? QuadSurd(BigInt(1)) - pts.back() + pts.front() : pts[i + 1] - a;
    if (gap.is_zero()) continue;  // repeated points (rational theta)
    const std::string& color = palette[gap_class(rep, gap)];
    double fa = a.to_double();
    double fb = wrap ? pts.front().to_double() + 1.0 : pts[i + 1].to_double();
    auto [x1, y1] = coord(fa);
    auto [x2, y2] = coord(fb);
    int large = (fb - fa) > 0.5 ? 1 : 0;
    // sweep 0: counterclockwise in this y-up-flipped frame
    svg += "<path d=\"M " + fmt(x1) + " " + fmt(y1) + " A " + fmt(R) + " " + fmt(R) +
           " 0 " + std::to_string(large) + " 0 " + fmt(x2) + " " + fmt(y2) +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"6\"/>\n";
  }
  for (size_t i = 0; i < n; ++i) {
    auto [x, y] = coord(pts[i].to_double());
    svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
           "\" r=\"3\" fill=\"black\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string circle_figure_csv(const GapReport& rep, unsigned digits) {
  std::string out = "start,end,length,class,color\n";
  const auto& pts = rep.points;
  const auto palette = gap_palette(rep.distinct_gaps.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    bool wrap = i + 1 == pts.size();
    const QuadSurd& a = pts[i];
    QuadSurd b = wrap ? pts.front() + QuadSurd(BigInt(1)) : pts[i + 1];
    QuadSurd gap = b - a;
    if (gap.is_zero()) continue;
    size_t cls = gap_class(rep, gap);
    out += a.decimal(digits) + "," + b.decimal(digits) + "," + gap.decimal(digits) + "," +
           std::to_string(cls) + "," + palette[cls] + "\n";
  }
  return out;
}

std::vector<ScatterRow> scatter_rows(long long lo, long long hi, unsigned digits) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("scatter_rows: bad range");
  MinimizerOracle oracle(hi);
  std::vector<ScatterRow> rows;
  rows.reserve(static_cast<size_t>(hi - lo + 1));
  for (long long M = lo; M <= hi; ++M) {
    ScatterRow r;
    r.M = M;
    r.eta = oracle.argmin(M);
    r.min_dm = oracle.dm(r.eta, M).decimal(digits);
    r.color = kScatterColors[static_cast<size_t>(r.eta)];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string scatter_csv(const std::vector<ScatterRow>& rows) {
  std::string out = "M,min_dm,eta,color\n";
  for (const auto& r : rows)
    out += std::to_string(r.M) + "," + r.min_dm + ",eta" + std::to_string(r.eta) + "," +
           r.color + "\n";
  return out;
}

std::string scatter_svg(const std::vector<ScatterRow>& rows, int width_px, int height_px) {
  if (rows.empty()) throw std::invalid_argument("scatter_svg: no rows");
  const double margin = 40.0;
  const double w = width_px - 2 * margin, h = height_px - 2 * margin;
  const double x_lo = static_cast<double>(rows.front().M);
  const double x_hi = static_cast<double>(rows.back().M);
  const double rho = 1.0 + 2.0 / std::sqrt(5.0);
  double y_lo = rho;
  for (const auto& r : rows) y_lo = std::min(y_lo, std::stod(r.min_dm));
  y_lo = std::max(0.0, y_lo - 0.02);

  auto px = [&](double M) { return margin + (x_hi > x_lo ? (M - x_lo) / (x_hi - x_lo) * w : 0.0); };
  auto py = [&](double v) { return margin + (rho - v) / (rho - y_lo) * h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_px) +
         "\" height=\"" + std::to_string(height_px) + "\" viewBox=\"0 0 " +
         std::to_string(width_px) + " " + std::to_string(height_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // rho reference line
  svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(py(rho)) + "\" x2=\"" +
         fmt(margin + w) + "\" y2=\"" + fmt(py(rho)) +
         "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& r : rows) {
    svg += "<circle cx=\"" + fmt(px(static_cast<double>(r.M))) + "\" cy=\"" +
           fmt(py(std::stod(r.min_dm))) + "\" r=\"2\" fill=\"" + r.color + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace circlegap
