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

#include "framescope/date.h"

#include <cstdio>
#include <stdexcept>

namespace framescope {

namespace {

bool ParseDigits(std::string_view text, int *value) {
  int v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  *value = v;
  return !text.empty();
}

}  // namespace

std::optional<Date> ParseIsoDate(std::string_view text) {
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (text.size() > 10 && text[10] != 'T' && text[10] != ' ') {
    return std::nullopt;
  }
  int y, m, d;
  if (!ParseDigits(text.substr(0, 4), &y) ||
      !ParseDigits(text.substr(5, 2), &m) ||
      !ParseDigits(text.substr(8, 2), &d)) {
    return std::nullopt;
  }
  const Date date{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                  std::chrono::day{unsigned(d)}};
  if (!date.ok()) return std::nullopt;
  return date;
}

Date ParseIsoDateOrThrow(std::string_view text) {
  auto date = ParseIsoDate(text);
  if (!date) {
    throw std::invalid_argument("invalid ISO-8601 date: " + std::string(text));
  }
  return *date;
}

std::string FormatIsoDate(const Date &date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

Date IsoWeekStart(const Date &date) {
  const std::chrono::sys_days days{date};
  const std::chrono::weekday wd{days};
  // iso_encoding: Monday = 1 .. Sunday = 7.
  return Date{days - std::chrono::days{wd.iso_encoding() - 1}};
}

Date MonthStart(const Date &date) {
  return Date{date.year(), date.month(), std::chrono::day{1}};
}

}  // namespace framescope
