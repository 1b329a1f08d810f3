#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace ga3ph::cli {

namespace {

constexpr int kWidth = 900;
constexpr int kPanelHeight = 220;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 24;
constexpr int kGap = 40;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Panel {
  int y0;
  double tmin, tmax, vmin, vmax;

  double x(double t) const {
    return kMarginLeft +
           (t - tmin) / (tmax - tmin) * (kWidth - kMarginLeft - kMarginRight);
  }
  double y(double v) const {
    return y0 + kPanelHeight - (v - vmin) / (vmax - vmin) * kPanelHeight;
  }
};

void polyline(std::ostream& os, const Panel& p, const std::vector<double>& t,
              const std::vector<double>& v, const char* color) {
  os << "<polyline fill=\"none\" stroke=\"" << color
     << "\" stroke-width=\"1\" points=\"";
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) os << ' ';
    os << fmt(p.x(t[k])) << ',' << fmt(p.y(v[k]));
  }
  os << "\"/>\n";
}

void panel(std::ostream& os, const SimTrace& tr, const std::vector<double>& ref,
           const std::vector<double>& out, int y0, const char* title) {
  Panel p;
  p.y0 = y0;
  p.tmin = tr.t.front();
  p.tmax = tr.t.back();
  double lo = 0.0, hi = 0.0;
  for (size_t k = 0; k < tr.size(); ++k) {
    lo = std::min({lo, ref[k], out[k]});
    hi = std::max({hi, ref[k], out[k]});
  }
  if (hi <= lo) hi = lo + 1.0;
  const double pad = 0.05 * (hi - lo);
  p.vmin = lo - pad;
  p.vmax = hi + pad;

  os << "<rect x=\"" << kMarginLeft << "\" y=\"" << y0 << "\" width=\""
     << (kWidth - kMarginLeft - kMarginRight) << "\" height=\"" << kPanelHeight
     << "\" fill=\"none\" stroke=\"#888\"/>\n";
  os << "<text x=\"" << kMarginLeft << "\" y=\"" << y0 - 6
     << "\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
  if (p.vmin < 0.0 && p.vmax > 0.0) {
    os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fmt(p.y(0.0)) << "\" x2=\""
       << (kWidth - kMarginRight) << "\" y2=\"" << fmt(p.y(0.0))
       << "\" stroke=\"#ccc\"/>\n";
  }
  os << "<text x=\"4\" y=\"" << y0 + 12
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(p.vmax)
     << "</text>\n";
  os << "<text x=\"4\" y=\"" << y0 + kPanelHeight
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(p.vmin)
     << "</text>\n";
  polyline(os, p, tr.t, ref, "#4477cc");
  polyline(os, p, tr.t, out, "#cc3333");
}

}  // namespace

void write_svg(const SimTrace& trace, std::ostream& os) {
  const int total = kMarginTop + 2 * kPanelHeight + kGap + 30;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << total << "\" viewBox=\"0 0 " << kWidth << ' ' << total
     << "\">\n";
  if (trace.size() >= 2) {
    panel(os, trace, trace.ref_alpha, trace.y_alpha, kMarginTop,
          "alpha channel: reference (blue) vs output (red)");
    panel(os, trace, trace.ref_beta, trace.y_beta, kMarginTop + kPanelHeight + kGap,
          "beta channel: reference (blue) vs output (red)");
  }
  os << "</svg>\n";
}

}  // namespace ga3ph::cli
