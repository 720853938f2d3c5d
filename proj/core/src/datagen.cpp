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

#include "polkg/datagen.hpp"

#include <algorithm>
#include <cmath>

#include "polkg/error.hpp"

namespace polkg::datagen {
namespace {

std::size_t LocationIndex(std::string_view label) {
  const auto it = std::find(kLocations.begin(), kLocations.end(), label);
  if (it == kLocations.end()) {
    throw ValidationError("unknown location `" + std::string(label) + "`");
  }
  return static_cast<std::size_t>(it - kLocations.begin());
}

void ValidateKernel(const Kernel& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    double sum = 0.0;
    for (double p : k[i]) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("kernel entries must lie in [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw ValidationError("kernel row " + std::to_string(i + 1) +
                            " does not sum to 1");
    }
  }
}

std::size_t Uniform3(double u) { return static_cast<std::size_t>(u * 3.0); }

}  // namespace

DateTime DefaultStart() {
  return DateTime::ParseOrThrow("2023-04-08T12:00:00");
}

std::size_t SampleIndex(std::span<const double> probabilities, double u) {
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < probabilities.size(); ++j) {
    cumulative += probabilities[j];
    if (probabilities[j] > 0.0) last_positive = j;
    if (u < cumulative) return j;
  }
  return last_positive;
}

std::vector<ObservationRow> Generate(const GenConfig& cfg) {
  if (cfg.days == 0) throw ValidationError("days must be positive");
  if (cfg.kernel) ValidateKernel(*cfg.kernel);

  UnitSampler sampler(cfg.seed);
  std::size_t state = cfg.initial_location
                          ? LocationIndex(*cfg.initial_location)
                          : Uniform3(sampler.Next());

  std::vector<ObservationRow> rows;
  rows.reserve(cfg.days);
  for (std::size_t d = 0; d < cfg.days; ++d) {
    if (d > 0) {
      const double u = sampler.Next();
      state = cfg.kernel ? SampleIndex((*cfg.kernel)[state], u) : Uniform3(u);
    }
    rows.push_back({cfg.start + std::chrono::hours(24 * d),
                    "Day" + std::to_string(d + 1),
                    std::string(kLocations[state])});
  }
  return rows;
}

std::string WriteCsv(std::span<const ObservationRow> rows) {
  std::string out = "Time,Day,Location\n";
  for (const ObservationRow& r : rows) {
    out += r.time.ToSpaced() + "," + r.day_label + "," + r.location + "\n";
  }
  return out;
}

std::vector<ObservationRow> ReadCsv(std::string_view text) {
  std::vector<ObservationRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != "Time,Day,Location") {
        throw ParseError(line_no, 0, "expected header `Time,Day,Location`");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> f;
    for (;;) {
      const auto comma = line.find(',');
      f.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (f.size() != 3) {
      throw ParseError(line_no, 0, "expected 3 fields, got " +
                                       std::to_string(f.size()));
    }
    auto time = DateTime::Parse(f[0]);
    if (!time) {
      throw ParseError(line_no, 1, "bad time `" + std::string(f[0]) + "`");
    }
    if (!rows.empty() && !(rows.back().time < *time)) {
      throw ParseError(line_no, 1, "times must strictly increase");
    }
    const std::string expected_day = "Day" + std::to_string(rows.size() + 1);
    if (f[1] != expected_day) {
      throw ParseError(line_no, 2, "day label `" + std::string(f[1]) +
                                       "`, expected `" + expected_day + "`");
    }
    if (std::find(kLocations.begin(), kLocations.end(), f[2]) ==
        kLocations.end()) {
      throw ParseError(line_no, 3,
                       "unknown location `" + std::string(f[2]) + "`");
    }
    rows.push_back({*time, std::string(f[1]), std::string(f[2])});
  }
  if (!header_seen) throw ParseError(1, 0, "missing header");
  return rows;
}

}  // namespace polkg::datagen
