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

// Standalone SVG bar charts. Output depends only on the input values, so the
// same data always yields the same bytes.

#ifndef FRAMESCOPE_CHARTS_H_
#define FRAMESCOPE_CHARTS_H_

#include <string>
#include <utility>
#include <vector>

namespace framescope {

struct GroupedBarChart {
  std::string title;
  std::string value_label;
  // One group of bars per category along the x axis.
  std::vector<std::string> categories;
  // Series name and one value per category.
  std::vector<std::pair<std::string, std::vector<double>>> series;
};

struct HorizontalBarChart {
  std::string title;
  std::string value_label;
  // Drawn top to bottom in the given order.
  std::vector<std::pair<std::string, double>> bars;
};

// Both renderers emit a "no data" placeholder when there is nothing to draw
// and embed `manifest_hash` as SVG metadata. Throws std::invalid_argument if a
// series length differs from the category count.
std::string RenderSvg(const GroupedBarChart &chart,
                      const std::string &manifest_hash);
std::string RenderSvg(const HorizontalBarChart &chart,
                      const std::string &manifest_hash);

// Number of <rect class="bar"> elements; used to sanity-check output.
size_t CountBars(const std::string &svg);

}  // namespace framescope

#endif  // FRAMESCOPE_CHARTS_H_
