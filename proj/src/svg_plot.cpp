// Copyright 2026 The eur-ladder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eur/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace eur {

namespace {

struct CurveStyle {
  const char* key;
  const char* label;
  const char* color;
  const char* dash;  // empty for solid
};

constexpr CurveStyle kStyles[] = {
    {"ladder", "L", "#1f4fd1", "2,4"},
    {"maj", "L_Maj", "#f28e1c", ""},
    {"l1", "L_1", "#2a9d3a", "8,5"},
    {"dev", "L_deV", "#000000", "8,5"},
    {"mu", "L_MU", "#8c8c8c", "3,3"},
};

double pick(const BoundReport& r, const std::string& key, bool coherence) {
  if (key == "ladder") return coherence ? r.coherence.ladder : r.ladder.best_value;
  if (key == "maj") return coherence ? r.coherence.l_maj : r.l_maj;
  if (key == "l1") return coherence ? r.coherence.l_1 : r.l_1;
  if (key == "dev") return coherence ? r.coherence.l_dev : r.l_dev;
  return coherence ? std::max(0.0, r.l_mu - 2.0 * r.entropy) : r.l_mu;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round step (1, 2 or 5 times a power of ten) giving about `target` ticks.
double tick_step(double span, int target) {
  if (span <= 0.0) return 1.0;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0, 10.0})
    if (raw <= f * mag) return f * mag;
  return 10.0 * mag;
}

}  // namespace

std::string render_svg(const std::vector<BoundReport>& reports, const PlotOptions& opt) {
  const bool coherence = !reports.empty() && reports.front().entropy > 0.0;
  const double scale = opt.log_base == LogBase::Bits ? 1.0 / std::log(2.0) : 1.0;

  std::vector<const CurveStyle*> curves;
  for (const CurveStyle& s : kStyles)
    if (std::find(opt.bounds.begin(), opt.bounds.end(), s.key) != opt.bounds.end()) curves.push_back(&s);

  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (!reports.empty()) {
    x0 = reports.front().generator.param;
    x1 = reports.back().generator.param;
    y1 = 0.0;
    for (const auto& r : reports)
      for (const auto* c : curves) y1 = std::max(y1, pick(r, c->key, coherence) * scale);
  }
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  y1 *= 1.05;

  const double left = 70, right = 150, top = 40, bottom = 55;
  const double pw = opt.width - left - right;
  const double ph = opt.height - top - bottom;
  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!opt.title.empty())
    svg << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(opt.title) << "</text>\n";

  svg << "<g stroke=\"#333\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\""
      << top + ph << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
      << "\"/>\n</g>\n";

  const double xs = tick_step(x1 - x0, 6);
  for (double t = std::ceil(x0 / xs) * xs; t <= x1 + 1e-12; t += xs) {
    svg << "<line x1=\"" << sx(t) << "\" y1=\"" << top + ph << "\" x2=\"" << sx(t) << "\" y2=\""
        << top + ph + 5 << "\" stroke=\"#333\"/>"
        << "<text x=\"" << sx(t) << "\" y=\"" << top + ph + 19 << "\" text-anchor=\"middle\">"
        << num(t) << "</text>\n";
  }
  const double ys = tick_step(y1 - y0, 6);
  for (double t = std::ceil(y0 / ys) * ys; t <= y1 + 1e-12; t += ys) {
    svg << "<line x1=\"" << left - 5 << "\" y1=\"" << sy(t) << "\" x2=\"" << left << "\" y2=\""
        << sy(t) << "\" stroke=\"#333\"/>"
        << "<text x=\"" << left - 8 << "\" y=\"" << sy(t) + 4 << "\" text-anchor=\"end\">" << num(t)
        << "</text>\n";
  }

  const std::string unit = opt.log_base == LogBase::Bits ? "bits" : "nats";
  svg << "<text x=\"" << left + pw / 2 << "\" y=\"" << opt.height - 12
      << "\" text-anchor=\"middle\">" << escape(opt.x_label) << "</text>\n";
  svg << "<text transform=\"translate(18," << top + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">"
      << (coherence ? "coherence bound (" : "bound (") << unit << ")</text>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const CurveStyle& s = *curves[c];
    svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (*s.dash) svg << " stroke-dasharray=\"" << s.dash << "\"";
    svg << " points=\"";
    for (const auto& r : reports)
      svg << sx(r.generator.param) << ',' << sy(pick(r, s.key, coherence) * scale) << ' ';
    svg << "\"/>\n";

    const double ly = top + 12 + 20.0 * static_cast<double>(c);
    const double lx = left + pw + 15;
    svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 30 << "\" y2=\"" << ly
        << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (*s.dash) svg << " stroke-dasharray=\"" << s.dash << "\"";
    svg << "/><text x=\"" << lx + 36 << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace eur
