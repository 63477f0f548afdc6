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

#ifndef FRAMESCOPE_DATE_H_
#define FRAMESCOPE_DATE_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace framescope {

// Calendar date in UTC.
using Date = std::chrono::year_month_day;

// Accepts "YYYY-MM-DD", optionally followed by a 'T' or ' ' time part which
// is ignored. Returns nullopt for anything else or an invalid date.
std::optional<Date> ParseIsoDate(std::string_view text);

// Like ParseIsoDate but throws std::invalid_argument.
Date ParseIsoDateOrThrow(std::string_view text);

std::string FormatIsoDate(const Date &date);

// Monday of the ISO week containing `date`.
Date IsoWeekStart(const Date &date);
Date MonthStart(const Date &date);

}  // namespace framescope

#endif  // FRAMESCOPE_DATE_H_
