// Copyright 2026 The Framescope Authors.
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

#include "framescope/charts.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace framescope {

namespace {

constexpr const char *kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                    "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                    "#9c755f", "#bab0ac"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string Escape(const std::string &s) {
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

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Value labels: four significant digits.
std::string Label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Header(double width, double height, const std::string &title,
                   const std::string &hash) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(width) +
      "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " + Num(width) + " " +
      Num(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<metadata>manifest_hash=" + Escape(hash) + "</metadata>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + Num(width) + "\" height=\"" +
         Num(height) + "\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"" + Num(width / 2) +
         "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         Escape(title) + "</text>\n";
  return out;
}

std::string Placeholder(const std::string &title, const std::string &hash) {
  std::string out = Header(400, 200, title, hash);
  out +=
      "<text class=\"no-data\" x=\"200.00\" y=\"110.00\" "
      "text-anchor=\"middle\" fill=\"#888888\">no data</text>\n</svg>\n";
  return out;
}

double NiceMax(double v) {
  if (v <= 0) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(v)));
  for (double step : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (v <= step * mag) return step * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string RenderSvg(const GroupedBarChart &chart, const std::string &hash) {
  for (const auto &[name, values] : chart.series) {
    if (values.size() != chart.categories.size()) {
      throw std::invalid_argument("series \"" + name + "\" has " +
                                  std::to_string(values.size()) +
                                  " values for " +
                                  std::to_string(chart.categories.size()) +
                                  " categories");
    }
  }
  if (chart.categories.empty() || chart.series.empty()) {
    return Placeholder(chart.title, hash);
  }
  double max_value = 0.0;
  for (const auto &s : chart.series) {
    for (double v : s.second) max_value = std::max(max_value, v);
  }
  const double top = NiceMax(max_value);
  const double bar_w = 18.0, gap = 24.0, left = 70.0, plot_h = 260.0;
  const double group_w = bar_w * chart.series.size() + gap;
  const double width =
      std::max(420.0, left + group_w * chart.categories.size() + 150.0);
  const double plot_top = 40.0, base = plot_top + plot_h;
  const double height = base + 150.0;

  std::string out = Header(width, height, chart.title, hash);
  // Axis and ticks.
  out += "<line x1=\"" + Num(left) + "\" y1=\"" + Num(plot_top) + "\" x2=\"" +
         Num(left) + "\" y2=\"" + Num(base) + "\" stroke=\"#333333\"/>\n";
  out += "<line x1=\"" + Num(left) + "\" y1=\"" + Num(base) + "\" x2=\"" +
         Num(left + group_w * chart.categories.size()) + "\" y2=\"" +
         Num(base) + "\" stroke=\"#333333\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = top * t / 4.0;
    const double y = base - plot_h * t / 4.0;
    out += "<text x=\"" + Num(left - 4) + "\" y=\"" + Num(y + 4) +
           "\" text-anchor=\"end\">" + Label(v) + "</text>\n";
  }
  out += "<text x=\"14.00\" y=\"" + Num(plot_top + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 14.00 " +
         Num(plot_top + plot_h / 2) + ")\">" + Escape(chart.value_label) +
         "</text>\n";
  for (size_t c = 0; c < chart.categories.size(); ++c) {
    const double gx = left + gap / 2 + group_w * c;
    for (size_t s = 0; s < chart.series.size(); ++s) {
      const double v = chart.series[s].second[c];
      const double h = plot_h * std::max(0.0, v) / top;
      const double x = gx + bar_w * s;
      out += "<rect class=\"bar\" x=\"" + Num(x) + "\" y=\"" + Num(base - h) +
             "\" width=\"" + Num(bar_w - 2) + "\" height=\"" + Num(h) +
             "\" fill=\"" + kPalette[s % kPaletteSize] + "\"><title>" +
             Escape(chart.series[s].first) + " / " +
             Escape(chart.categories[c]) + ": " + Label(v) +
             "</title></rect>\n";
      out += "<text x=\"" + Num(x + bar_w / 2 - 1) + "\" y=\"" +
             Num(base - h - 3) +
             "\" text-anchor=\"middle\" font-size=\"8\">" + Label(v) +
             "</text>\n";
    }
    const double lx = gx + bar_w * chart.series.size() / 2;
    out += "<text x=\"" + Num(lx) + "\" y=\"" + Num(base + 12) +
           "\" text-anchor=\"end\" transform=\"rotate(-40 " + Num(lx) + " " +
           Num(base + 12) + ")\">" + Escape(chart.categories[c]) +
           "</text>\n";
  }
  // Legend.
  const double lx = left + group_w * chart.categories.size() + 20;
  for (size_t s = 0; s < chart.series.size(); ++s) {
    const double y = plot_top + 16.0 * s;
    out += "<rect x=\"" + Num(lx) + "\" y=\"" + Num(y) +
           "\" width=\"10.00\" height=\"10.00\" fill=\"" +
           kPalette[s % kPaletteSize] + "\"/>\n";
    out += "<text x=\"" + Num(lx + 14) + "\" y=\"" + Num(y + 9) + "\">" +
           Escape(chart.series[s].first) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string RenderSvg(const HorizontalBarChart &chart,
                      const std::string &hash) {
  if (chart.bars.empty()) return Placeholder(chart.title, hash);
  double max_value = 0.0;
  size_t label_chars = 0;
  for (const auto &[label, v] : chart.bars) {
    max_value = std::max(max_value, v);
    label_chars = std::max(label_chars, label.size());
  }
  const double top = NiceMax(max_value);
  const double left = 20.0 + 6.5 * std::min<size_t>(label_chars, 40);
  const double plot_w = 360.0, bar_h = 16.0, step = 22.0, plot_top = 40.0;
  const double width = left + plot_w + 70.0;
  const double height = plot_top + step * chart.bars.size() + 40.0;

  std::string out = Header(width, height, chart.title, hash);
  for (size_t i = 0; i < chart.bars.size(); ++i) {
    const auto &[label, v] = chart.bars[i];
    const double y = plot_top + step * i;
    const double w = plot_w * std::max(0.0, v) / top;
    out += "<text x=\"" + Num(left - 6) + "\" y=\"" + Num(y + 12) +
           "\" text-anchor=\"end\">" + Escape(label) + "</text>\n";
    out += "<rect class=\"bar\" x=\"" + Num(left) + "\" y=\"" + Num(y) +
           "\" width=\"" + Num(w) + "\" height=\"" + Num(bar_h) +
           "\" fill=\"" + kPalette[0] + "\"><title>" + Escape(label) + ": " +
           Label(v) + "</title></rect>\n";
    out += "<text x=\"" + Num(left + w + 4) + "\" y=\"" + Num(y + 12) +
           "\">" + Label(v) + "</text>\n";
  }
  const double axis_y = plot_top + step * chart.bars.size() + 4;
  out += "<line x1=\"" + Num(left) + "\" y1=\"" + Num(axis_y) + "\" x2=\"" +
         Num(left + plot_w) + "\" y2=\"" + Num(axis_y) +
         "\" stroke=\"#333333\"/>\n";
  out += "<text x=\"" + Num(left + plot_w / 2) + "\" y=\"" +
         Num(axis_y + 20) + "\" text-anchor=\"middle\">" +
         Escape(chart.value_label) + "</text>\n";
  out += "</svg>\n";
  return out;
}

size_t CountBars(const std::string &svg) {
  size_t n = 0;
  for (size_t pos = svg.find("<rect class=\"bar\""); pos != std::string::npos;
       pos = svg.find("<rect class=\"bar\"", pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace framescope
