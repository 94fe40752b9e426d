#include "beamtrain/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "beamtrain/config.hpp"
#include "beamtrain/errors.hpp"

namespace beamtrain {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string fixed(double value, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

// Plot area in SVG user units.
constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

struct Series {
  const char* label;
  const char* color;
  double SweepPoint::*field;
};

constexpr Series kSeries[] = {
    {"COM", "#1f77b4", &SweepPoint::mean_com},
    {"802.11ad max-energy", "#d62728", &SweepPoint::mean_baseline},
};

}  // namespace

std::string csv_text(const SweepResult& result) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& p : result.points) {
    out += format_double(p.snr_db) + ',' + format_double(p.mean_com) + ',' +
           format_double(p.std_com) + ',' + format_double(p.mean_baseline) + ',' +
           format_double(p.std_baseline) + ',' + format_double(p.mean_gain) + ',' +
           std::to_string(p.iterations) + ',' + std::to_string(result.seed) + '\n';
  }
  return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
  write_file(path, csv_text(result));
}

std::string plot_svg(const SweepResult& result) {
  if (result.points.empty()) throw ConfigError("plot: sweep result is empty");

  double x_lo = result.points.front().snr_db, x_hi = result.points.back().snr_db;
  if (x_hi == x_lo) { x_lo -= 1.0; x_hi += 1.0; }
  double y_lo = 0.0, y_hi = 0.0;
  for (const auto& p : result.points)
    y_hi = std::max({y_hi, p.mean_com, p.mean_baseline});
  y_hi = y_hi > 0.0 ? std::ceil(y_hi * 1.1) : 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-size=\"14\">Effective capacity vs SNR (seed " << result.seed
      << ")</text>\n";

  // Axes and grid.
  svg << "<g stroke=\"#000\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop + plot_h)
      << "\" x2=\"" << fixed(kLeft + plot_w) << "\" y2=\"" << fixed(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop) << "\" x2=\""
      << fixed(kLeft) << "\" y2=\"" << fixed(kTop + plot_h) << "\"/>\n"
      << "</g>\n";

  std::vector<double> x_ticks;
  if (result.points.size() <= 11) {
    for (const auto& p : result.points) x_ticks.push_back(p.snr_db);
  } else {
    for (int i = 0; i <= 5; ++i) x_ticks.push_back(x_lo + (x_hi - x_lo) * i / 5.0);
  }
  for (double x : x_ticks) {
    svg << "<line x1=\"" << fixed(px(x)) << "\" y1=\"" << fixed(kTop + plot_h)
        << "\" x2=\"" << fixed(px(x)) << "\" y2=\"" << fixed(kTop + plot_h + 5)
        << "\" stroke=\"#000\"/>\n"
        << "<text x=\"" << fixed(px(x)) << "\" y=\"" << fixed(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << fixed(x, 1) << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / 5.0;
    svg << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(py(y)) << "\" x2=\""
        << fixed(kLeft + plot_w) << "\" y2=\"" << fixed(py(y))
        << "\" stroke=\"#ddd\"/>\n"
        << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py(y) + 4)
        << "\" text-anchor=\"end\">" << fixed(y, 1) << "</text>\n";
  }
  svg << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(kHeight - 15)
      << "\" text-anchor=\"middle\">SNR (dB)</text>\n"
      << "<text x=\"18\" y=\"" << fixed(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fixed(kTop + plot_h / 2)
      << ")\">Capacity (bit/s/Hz)</text>\n";

  for (const auto& series : kSeries) {
    if (result.points.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << series.color
          << "\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < result.points.size(); ++i) {
        const auto& p = result.points[i];
        svg << (i ? " " : "") << fixed(px(p.snr_db)) << ',' << fixed(py(p.*series.field));
      }
      svg << "\"/>\n";
    }
    for (const auto& p : result.points)
      svg << "<circle cx=\"" << fixed(px(p.snr_db)) << "\" cy=\"" << fixed(py(p.*series.field))
          << "\" r=\"3\" fill=\"" << series.color << "\"/>\n";
  }

  // Legend.
  double legend_y = kTop + 12;
  for (const auto& series : kSeries) {
    svg << "<line x1=\"" << fixed(kLeft + 12) << "\" y1=\"" << fixed(legend_y) << "\" x2=\""
        << fixed(kLeft + 36) << "\" y2=\"" << fixed(legend_y) << "\" stroke=\""
        << series.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fixed(kLeft + 42) << "\" y=\"" << fixed(legend_y + 4) << "\">"
        << series.label << "</text>\n";
    legend_y += 18;
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const SweepResult& result, const std::string& path) {
  write_file(path, plot_svg(result));
}

}  // namespace beamtrain
