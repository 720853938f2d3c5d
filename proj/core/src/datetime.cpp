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

#include "polkg/datetime.hpp"

#include <charconv>
#include <cstdio>

#include "polkg/error.hpp"

namespace polkg {
namespace {

bool ReadField(std::string_view text, std::size_t pos, std::size_t len,
               int& out) {
  const char* first = text.data() + pos;
  const char* last = first + len;
  for (const char* c = first; c != last; ++c) {
    if (*c < '0' || *c > '9') return false;
  }
  return std::from_chars(first, last, out).ec == std::errc();
}

}  // namespace

std::optional<DateTime> DateTime::Parse(std::string_view text) {
  // 0123456789012345678
  // YYYY-MM-DDThh:mm:ss
  if (text.size() != 19) return std::nullopt;
  if (text[4] != '-' || text[7] != '-' || text[13] != ':' || text[16] != ':')
    return std::nullopt;
  if (text[10] != 'T' && text[10] != ' ') return std::nullopt;
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!ReadField(text, 0, 4, y) || !ReadField(text, 5, 2, mo) ||
      !ReadField(text, 8, 2, d) || !ReadField(text, 11, 2, h) ||
      !ReadField(text, 14, 2, mi) || !ReadField(text, 17, 2, s)) {
    return std::nullopt;
  }
  using namespace std::chrono;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) return std::nullopt;
  return DateTime(sys_days{ymd} + hours{h} + minutes{mi} + seconds{s});
}

DateTime DateTime::ParseOrThrow(std::string_view text) {
  auto parsed = Parse(text);
  if (!parsed) {
    throw ValidationError("invalid dateTime `" + std::string(text) +
                          "` (expected YYYY-MM-DDThh:mm:ss)");
  }
  return *parsed;
}

namespace {

std::string Format(std::chrono::sys_seconds tp, char separator) {
  using namespace std::chrono;
  const sys_days day_point = floor<days>(tp);
  const year_month_day ymd{day_point};
  const hh_mm_ss hms{tp - day_point};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u%c%02d:%02d:%02d",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), separator,
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

}  // namespace

std::string DateTime::ToIso() const { return Format(tp_, 'T'); }
std::string DateTime::ToSpaced() const { return Format(tp_, ' '); }

}  // namespace polkg
