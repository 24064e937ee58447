//
// Copyright 2026 The locaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "locaudit/harness/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"
#include "locaudit/harness/record.h"

namespace locaudit {
namespace {

using nlohmann::json;

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;  // legend column
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf"};

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  std::string label;
  bool log = false;
  double lo = 0.0;
  double hi = 1.0;

  double T(double v) const { return log ? std::log10(v) : v; }
};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> pts;
  bool line = false;
};

struct Guide {
  bool horizontal = true;
  double value = 0.0;
  std::string label;
};

struct Chart {
  std::string title;
  Axis x;
  Axis y;
  std::vector<Series> series;
  std::vector<Guide> guides;

  // Fits both axes around data and guides; log axes drop values <= 0.
  void Fit() {
    auto fit = [](Axis& a, std::vector<double> vs) {
      if (a.log) {
        vs.erase(std::remove_if(vs.begin(), vs.end(),
                                [](double v) { return !(v > 0.0); }),
                 vs.end());
      }
      vs.erase(std::remove_if(vs.begin(), vs.end(),
                              [](double v) { return !std::isfinite(v); }),
               vs.end());
      if (vs.empty()) {
        a.lo = a.log ? 1.0 : 0.0;
        a.hi = a.log ? 10.0 : 1.0;
        return;
      }
      double lo = a.T(*std::min_element(vs.begin(), vs.end()));
      double hi = a.T(*std::max_element(vs.begin(), vs.end()));
      if (a.log) {
        lo = std::floor(lo);
        hi = std::ceil(hi);
        if (hi <= lo) hi = lo + 1.0;
      } else {
        const double pad = hi > lo ? 0.05 * (hi - lo) : 0.5;
        lo -= pad;
        hi += pad;
      }
      a.lo = lo;
      a.hi = hi;
    };
    std::vector<double> xs, ys;
    for (const Series& s : series) {
      for (const auto& [px, py] : s.pts) {
        xs.push_back(px);
        ys.push_back(py);
      }
    }
    for (const Guide& g : guides) (g.horizontal ? ys : xs).push_back(g.value);
    fit(x, xs);
    fit(y, ys);
  }
};

double Px(const Axis& a, double v) {
  return kLeft + (a.T(v) - a.lo) / (a.hi - a.lo) * (kWidth - kLeft - kRight);
}

double Py(const Axis& a, double v) {
  return kHeight - kBottom -
         (a.T(v) - a.lo) / (a.hi - a.lo) * (kHeight - kTop - kBottom);
}

std::vector<double> Ticks(const Axis& a) {
  std::vector<double> t;
  if (a.log) {
    const int step = std::max(1, static_cast<int>((a.hi - a.lo) / 8.0));
    for (double e = a.lo; e <= a.hi + 1e-9; e += step) t.push_back(e);
    return t;
  }
  const double raw = (a.hi - a.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  for (double v = std::ceil(a.lo / step) * step; v <= a.hi + 1e-12;
       v += step) {
    t.push_back(std::fabs(v) < 1e-12 * step ? 0.0 : v);
  }
  return t;
}

std::string Render(Chart c) {
  c.Fit();
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  std::string out = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
      "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\" font-family=\"sans-serif\" "
      "font-size=\"11\">\n",
      kWidth, kHeight, kWidth, kHeight);
  absl::StrAppend(&out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  absl::StrAppendFormat(&out,
                        "<text x=\"%.2f\" y=\"22\" font-size=\"14\" "
                        "text-anchor=\"middle\">%s</text>\n",
                        (x0 + x1) / 2.0, Escape(c.title));
  absl::StrAppendFormat(&out,
                        "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
                        "height=\"%.2f\" fill=\"none\" stroke=\"black\"/>\n",
                        x0, y1, x1 - x0, y0 - y1);
  // Ticks work in transformed units.
  Axis xt = c.x, yt = c.y;
  xt.log = yt.log = false;
  for (double t : Ticks(c.x)) {
    const double px = Px(xt, t);
    absl::StrAppendFormat(&out,
                          "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" "
                          "y2=\"%.2f\" stroke=\"black\"/>\n",
                          px, y0, px, y0 + 4.0);
    absl::StrAppendFormat(
        &out, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%s</text>\n",
        px, y0 + 16.0,
        c.x.log ? absl::StrFormat("1e%d", static_cast<int>(std::lround(t)))
                : absl::StrFormat("%.3g", t));
  }
  for (double t : Ticks(c.y)) {
    const double py = Py(yt, t);
    absl::StrAppendFormat(&out,
                          "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" "
                          "y2=\"%.2f\" stroke=\"black\"/>\n",
                          x0 - 4.0, py, x0, py);
    absl::StrAppendFormat(
        &out, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%s</text>\n",
        x0 - 6.0, py + 4.0,
        c.y.log ? absl::StrFormat("1e%d", static_cast<int>(std::lround(t)))
                : absl::StrFormat("%.3g", t));
  }
  absl::StrAppendFormat(
      &out, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%s</text>\n",
      (x0 + x1) / 2.0, kHeight - 12.0, Escape(c.x.label));
  absl::StrAppendFormat(&out,
                        "<text x=\"16\" y=\"%.2f\" text-anchor=\"middle\" "
                        "transform=\"rotate(-90 16 %.2f)\">%s</text>\n",
                        (y0 + y1) / 2.0, (y0 + y1) / 2.0, Escape(c.y.label));

  int vertical = 0;  // staggers labels of neighbouring vertical guides
  for (const Guide& g : c.guides) {
    if (c.x.log && !g.horizontal && !(g.value > 0.0)) continue;
    if (c.y.log && g.horizontal && !(g.value > 0.0)) continue;
    double ax, ay, bx, by;
    if (g.horizontal) {
      ax = x0;
      bx = x1;
      ay = by = Py(c.y, g.value);
    } else {
      ay = y0;
      by = y1;
      ax = bx = Px(c.x, g.value);
    }
    absl::StrAppendFormat(&out,
                          "<line class=\"guide\" x1=\"%.2f\" y1=\"%.2f\" "
                          "x2=\"%.2f\" y2=\"%.2f\" stroke=\"#555\" "
                          "stroke-dasharray=\"5,4\"/>\n",
                          ax, ay, bx, by);
    absl::StrAppendFormat(&out,
                          "<text x=\"%.2f\" y=\"%.2f\" fill=\"#555\" "
                          "text-anchor=\"%s\">%s</text>\n",
                          g.horizontal ? x1 - 60.0 : ax - 3.0,
                          g.horizontal ? ay - 4.0 : y1 + 12.0 * ++vertical,
                          g.horizontal ? "start" : "end", Escape(g.label));
  }

  for (size_t i = 0; i < c.series.size(); ++i) {
    const Series& s = c.series[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(*kPalette))];
    std::vector<std::pair<double, double>> pts;
    for (const auto& [vx, vy] : s.pts) {
      if ((c.x.log && !(vx > 0.0)) || (c.y.log && !(vy > 0.0))) continue;
      if (!std::isfinite(vx) || !std::isfinite(vy)) continue;
      pts.emplace_back(Px(c.x, vx), Py(c.y, vy));
    }
    if (s.line && pts.size() > 1) {
      std::string d;
      for (const auto& [px, py] : pts) {
        absl::StrAppendFormat(&d, "%s%.2f,%.2f", d.empty() ? "" : " ", px, py);
      }
      absl::StrAppendFormat(&out,
                            "<polyline points=\"%s\" fill=\"none\" "
                            "stroke=\"%s\" stroke-width=\"1.5\"/>\n",
                            d, color);
    }
    for (const auto& [px, py] : pts) {
      absl::StrAppendFormat(
          &out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n", px,
          py, color);
    }
    const double ly = y1 + 14.0 * (i + 1);
    absl::StrAppendFormat(
        &out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"%s\"/>\n",
        x1 + 14.0, ly - 4.0, color);
    absl::StrAppendFormat(&out, "<text x=\"%.2f\" y=\"%.2f\">%s</text>\n",
                          x1 + 22.0, ly, Escape(s.name));
  }
  out += "</svg>\n";
  return out;
}

double Num(const json& j, double fallback = 0.0) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size()) return v;
  }
  return fallback;
}

const json& Field(const json& j, const char* key) {
  static const json kNull;
  return j.is_object() && j.contains(key) ? j.at(key) : kNull;
}

Chart AuditChart(const json& rec, bool lower) {
  Chart c;
  c.title = lower ? "Auditor failure rate on the hard instance"
                  : "Auditor failure rate on the slab instance";
  c.x = {"sample size n", true};
  c.y = {"failure rate", false};
  const json& auditors = Field(Field(rec, "aggregate"), "auditors");
  if (auditors.is_array()) {
    for (const json& a : auditors) {
      Series s;
      s.name = Field(a, "auditor").is_string()
                   ? Field(a, "auditor").get<std::string>()
                   : "auditor";
      s.pts.emplace_back(Num(Field(a, "n")), Num(Field(a, "failure_rate")));
      c.series.push_back(std::move(s));
    }
  }
  if (lower) {
    c.guides.push_back({true, 1.0 / 3.0, "1/3"});
  } else {
    c.guides.push_back(
        {true, Num(Field(Field(rec, "config"), "delta"), 0.1), "delta"});
  }
  return c;
}

Chart SpheresChart(const json& rec) {
  Chart c;
  c.title = "Linear loss vs ball mass";
  c.x = {"ball mass", true};
  c.y = {"best linear loss", false};
  const json& rows = Field(rec, "per_trial");
  std::vector<int> dims;
  double min_mass = std::numeric_limits<double>::infinity();
  if (rows.is_array()) {
    for (const json& r : rows) {
      const double m = Num(Field(r, "mass"));
      if (m > 0.0) min_mass = std::min(min_mass, m);
    }
    for (const json& r : rows) {
      const int d = static_cast<int>(Num(Field(r, "d")));
      auto it = std::find(dims.begin(), dims.end(), d);
      size_t idx = it - dims.begin();
      if (it == dims.end()) {
        dims.push_back(d);
        c.series.push_back({absl::StrFormat("d = %d", d), {}, false});
      }
      double m = Num(Field(r, "mass"));
      // Massless balls sit one decade left of the lightest positive one.
      if (!(m > 0.0)) m = std::isfinite(min_mass) ? min_mass / 10.0 : 1e-300;
      c.series[idx].pts.emplace_back(m, Num(Field(r, "best_loss")));
    }
  }
  c.guides.push_back({true, 1.0 / 6.0, "1/6"});
  for (int d : dims) {
    c.guides.push_back({false, std::pow(3.0, 1.0 - d),
                        absl::StrFormat("3^(1-%d)", d)});
  }
  return c;
}

Chart SweepChart(const json& rec) {
  Chart c;
  c.title = "Required samples vs locality";
  c.x = {"locality lambda", true};
  c.y = {"required n", true};
  Series lower{"lower bound", {}, true};
  Series upper{"upper bound", {}, true};
  const json& rows = Field(rec, "per_trial");
  if (rows.is_array()) {
    for (const json& r : rows) {
      const double l = Num(Field(r, "lambda"));
      if (Field(r, "lower_bound_n").is_number()) {
        lower.pts.emplace_back(l, Num(Field(r, "lower_bound_n")));
      }
      if (Field(r, "upper_bound_n").is_number()) {
        upper.pts.emplace_back(l, Num(Field(r, "upper_bound_n")));
      }
    }
  }
  c.series = {std::move(lower), std::move(upper)};
  return c;
}

Chart SeparationChart(const json& rec) {
  Chart c;
  c.title = "Exact loss per f* draw";
  c.x = {"draw", false};
  c.y = {"L at gamma(1+eps1)", false};
  Series w1{"world P=1", {}, false};
  Series w0{"world P=0", {}, false};
  const json& rows = Field(rec, "per_trial");
  if (rows.is_array()) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const double v = Num(Field(rows[i], "loss_high_alpha"));
      (Num(Field(rows[i], "world")) == 1.0 ? w1 : w0)
          .pts.emplace_back(static_cast<double>(i), v);
    }
  }
  c.series = {std::move(w1), std::move(w0)};
  const double eps2 = Num(Field(Field(rec, "config"), "eps2"), 0.0);
  c.guides.push_back({true, 0.5, "1/2"});
  if (eps2 > 0.0) c.guides.push_back({true, 0.5 + 4.0 * eps2, "1/2+4eps2"});
  return c;
}

Chart MomentChart(const json& rec) {
  Chart c;
  c.title = "Power-sum residuals per triple";
  c.x = {"triple", false};
  c.y = {"relative residual", true};
  Series below{"max t < 2m", {}, false};
  Series at{"t = 2m", {}, false};
  const json& rows = Field(rec, "per_trial");
  if (rows.is_array()) {
    for (size_t i = 0; i < rows.size(); ++i) {
      // Exact zeros cannot sit on a log axis; floor them.
      below.pts.emplace_back(
          i, std::max(1e-40, Num(Field(rows[i], "max_residual_below_2m"))));
      at.pts.emplace_back(i,
                          std::max(1e-40, Num(Field(rows[i], "residual_at_2m"))));
    }
  }
  c.series = {std::move(below), std::move(at)};
  c.guides.push_back({true, 1e-9, "1e-9"});
  c.guides.push_back({true, 1e-3, "1e-3"});
  return c;
}

}  // namespace

std::string RenderPlot(const json& record) {
  const json& kind = Field(record, "kind");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "audit_upper") return Render(AuditChart(record, false));
  if (k == "audit_lower") return Render(AuditChart(record, true));
  if (k == "spheres_scan") return Render(SpheresChart(record));
  if (k == "locality_sweep") return Render(SweepChart(record));
  if (k == "world_separation") return Render(SeparationChart(record));
  if (k == "moment_check") return Render(MomentChart(record));
  Chart empty;
  empty.title = "Empty record";
  return Render(empty);
}

absl::Status PlotRecordFile(const std::string& record_path,
                            const std::string& out_path) {
  absl::StatusOr<std::string> text = ReadTextFile(record_path);
  if (!text.ok()) return text.status();
  json j = json::parse(*text, nullptr, false);
  if (j.is_discarded()) {
    return MakeError(ErrorKind::kRecordUnreadable,
                     "malformed JSON in " + record_path);
  }
  return WriteTextFile(out_path, RenderPlot(j));
}

}  // namespace locaudit
