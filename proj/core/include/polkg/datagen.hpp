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

#ifndef POLKG_DATAGEN_HPP_
#define POLKG_DATAGEN_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polkg/datetime.hpp"

namespace polkg::datagen {

inline constexpr std::array<std::string_view, 3> kLocations = {
    "location1", "location2", "location3"};

inline constexpr std::uint64_t kDefaultSeed = 20230408;

// 2023-04-08 12:00:00.
DateTime DefaultStart();

struct ObservationRow {
  DateTime time;
  std::string day_label;  // Day1 ... DayN
  std::string location;   // one of kLocations

  friend bool operator==(const ObservationRow&,
                         const ObservationRow&) = default;
};

using Kernel = std::array<std::array<double, 3>, 3>;

struct GenConfig {
  std::size_t days = 100;
  std::uint64_t seed = kDefaultSeed;
  DateTime start = DefaultStart();
  // Row-stochastic ground truth indexed like kLocations. Absent means each
  // day's location is uniform over the three locations.
  std::optional<Kernel> kernel;
  std::optional<std::string> initial_location;
};

// Unit-interval draws from std::mt19937_64 (standard-specified engine and
// seeding): u = (x >> 11) * 2^-53, which lies in [0, 1).
class UnitSampler {
 public:
  explicit UnitSampler(std::uint64_t seed) : engine_(seed) {}
  double Next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// Smallest j with u < p[0] + ... + p[j]; if rounding leaves u above the
// final cumulative sum, the last index with positive mass.
std::size_t SampleIndex(std::span<const double> probabilities, double u);

// One row per day starting at `cfg.start`, 24 hours apart. The initial
// location is `cfg.initial_location` or, if absent, floor(u * 3) of the
// first draw. Each later day consumes one draw: floor(u * 3) without a
// kernel, SampleIndex(kernel[current], u) with one. Throws ValidationError
// for days == 0, a malformed kernel, or an unknown initial location.
std::vector<ObservationRow> Generate(const GenConfig& cfg);

// Header `Time,Day,Location`; times as `YYYY-MM-DD hh:mm:ss`.
std::string WriteCsv(std::span<const ObservationRow> rows);
// Rejects a wrong header, times that do not strictly increase, day labels
// that are not `Day<row number>`, and unknown locations (ParseError).
std::vector<ObservationRow> ReadCsv(std::string_view text);

}  // namespace polkg::datagen

#endif  // POLKG_DATAGEN_HPP_
