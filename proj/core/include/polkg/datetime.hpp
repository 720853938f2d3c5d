// Copyright 2026 The polkg Authors
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

#ifndef POLKG_DATETIME_HPP_
#define POLKG_DATETIME_HPP_

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace polkg {

// A wall-clock instant at whole-second precision with no timezone.
class DateTime {
 public:
  DateTime() = default;
  explicit DateTime(std::chrono::sys_seconds tp) : tp_(tp) {}

  // Accepts `YYYY-MM-DDThh:mm:ss` or `YYYY-MM-DD hh:mm:ss`.
  static std::optional<DateTime> Parse(std::string_view text);
  // Throws ValidationError when `text` does not parse.
  static DateTime ParseOrThrow(std::string_view text);

  // `YYYY-MM-DDThh:mm:ss`, the literal form stored in graphs.
  std::string ToIso() const;
  // `YYYY-MM-DD hh:mm:ss`, the form used in CSV files.
  std::string ToSpaced() const;

  std::chrono::sys_seconds time_point() const { return tp_; }
  DateTime operator+(std::chrono::seconds d) const { return DateTime(tp_ + d); }

  friend auto operator<=>(const DateTime&, const DateTime&) = default;

 private:
  std::chrono::sys_seconds tp_{};
};

}  // namespace polkg

#endif  // POLKG_DATETIME_HPP_
