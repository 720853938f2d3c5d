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

#include "polkg/matrix_io.hpp"

#include "json.hpp"

#include "polkg/error.hpp"

namespace polkg::markov {
namespace {

using nlohmann::ordered_json;

ordered_json Header(int order, const StateSpace& space) {
  ordered_json j;
  j["format"] = kMatrixFormatVersion;
  j["order"] = order;
  j["states"] = space.labels();
  return j;
}

ordered_json Rows(const std::vector<double>& values, std::size_t rows,
                  std::size_t width) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    out.push_back(std::vector<double>(
        values.begin() + static_cast<std::ptrdiff_t>(r * width),
        values.begin() + static_cast<std::ptrdiff_t>((r + 1) * width)));
  }
  return out;
}

ordered_json CountRows(const std::vector<std::uint64_t>& values,
                       std::size_t rows, std::size_t width) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    out.push_back(std::vector<std::uint64_t>(
        values.begin() + static_cast<std::ptrdiff_t>(r * width),
        values.begin() + static_cast<std::ptrdiff_t>((r + 1) * width)));
  }
  return out;
}

ordered_json Statuses(const std::vector<RowStatus>& status) {
  ordered_json out = ordered_json::array();
  for (RowStatus s : status) {
    out.push_back(s == RowStatus::kObserved ? "observed" : "unobserved");
  }
  return out;
}

[[noreturn]] void Bad(const std::string& reason) {
  throw ParseError(0, 0, "matrix file: " + reason);
}

template <typename T>
std::vector<T> Flatten(const ordered_json& rows, std::size_t expect_rows,
                       std::size_t width, const char* field) {
  if (!rows.is_array() || rows.size() != expect_rows) {
    Bad(std::string("`") + field + "` must have " +
        std::to_string(expect_rows) + " rows");
  }
  std::vector<T> out;
  out.reserve(expect_rows * width);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != width) {
      Bad(std::string("every `") + field + "` row must have " +
          std::to_string(width) + " entries");
    }
    for (const auto& v : row) {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) Bad(std::string("non-numeric `") + field + "` entry");
        out.push_back(v.template get<double>());
      } else {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.template get<std::int64_t>() >= 0)) {
          Bad(std::string("`") + field + "` entries must be non-negative integers");
        }
        out.push_back(v.template get<T>());
      }
    }
  }
  return out;
}

}  // namespace

std::string ToJson(const TransitionMatrix& m, const TransitionCounts* counts) {
  ordered_json j = Header(1, m.space());
  const std::size_t n = m.size();
  j["values"] = Rows(m.values(), n, n);
  j["row_status"] = Statuses(m.statuses());
  if (m.tolerance() != kRowSumTolerance) j["row_sum_tolerance"] = m.tolerance();
  if (counts != nullptr) j["counts"] = CountRows(counts->values(), n, n);
  return j.dump(2) + "\n";
}

std::string ToJson(const SecondOrderMatrix& m, const PairCounts* counts) {
  ordered_json j = Header(2, m.space());
  const std::size_t n = m.space().size();
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      pairs.push_back({m.space().label(i), m.space().label(k)});
    }
  }
  j["rows"] = std::move(pairs);
  j["values"] = Rows(m.values(), n * n, n);
  j["row_status"] = Statuses(m.statuses());
  if (m.tolerance() != kRowSumTolerance) j["row_sum_tolerance"] = m.tolerance();
  if (counts != nullptr) j["counts"] = CountRows(counts->values(), n * n, n);
  return j.dump(2) + "\n";
}

MatrixFile MatrixFromJson(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(0, 0, std::string("matrix file: ") + e.what());
  }
  if (!j.is_object()) Bad("top level must be an object");
  if (!j.contains("format") || j["format"] != kMatrixFormatVersion) {
    Bad("unsupported or missing `format` (expected 1)");
  }
  if (!j.contains("order") || !j["order"].is_number_integer()) {
    Bad("missing `order`");
  }
  const int order = j["order"].get<int>();
  if (order != 1 && order != 2) Bad("`order` must be 1 or 2");
  if (!j.contains("states") || !j["states"].is_array()) Bad("missing `states`");
  std::vector<std::string> labels;
  for (const auto& s : j["states"]) {
    if (!s.is_string()) Bad("`states` must be strings");
    labels.push_back(s.get<std::string>());
  }
  StateSpace space = StateSpace::InOrder(std::move(labels));
  const std::size_t n = space.size();
  const std::size_t rows = order == 1 ? n : n * n;

  if (!j.contains("values")) Bad("missing `values`");
  std::vector<double> values = Flatten<double>(j["values"], rows, n, "values");

  std::vector<RowStatus> status(rows, RowStatus::kObserved);
  if (j.contains("row_status")) {
    const auto& rs = j["row_status"];
    if (!rs.is_array() || rs.size() != rows) Bad("`row_status` has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) {
      if (rs[r] == "observed") status[r] = RowStatus::kObserved;
      else if (rs[r] == "unobserved") status[r] = RowStatus::kUnobserved;
      else Bad("`row_status` entries must be \"observed\" or \"unobserved\"");
    }
  }
  double tolerance = kRowSumTolerance;
  if (j.contains("row_sum_tolerance")) {
    if (!j["row_sum_tolerance"].is_number()) Bad("`row_sum_tolerance` must be a number");
    tolerance = j["row_sum_tolerance"].get<double>();
  }
  if (order == 2 && j.contains("rows")) {
    const auto& pairs = j["rows"];
    if (!pairs.is_array() || pairs.size() != rows) Bad("`rows` has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) {
      const ordered_json expect = {space.label(r / n), space.label(r % n)};
      if (pairs[r] != expect) {
        Bad("`rows` entry " + std::to_string(r + 1) +
            " does not match the state order");
      }
    }
  }

  MatrixFile file;
  file.order = order;
  if (order == 1) {
    file.first.emplace(space, std::move(values), std::move(status), tolerance);
    if (j.contains("counts")) {
      file.counts.emplace(space, Flatten<std::uint64_t>(j["counts"], n, n, "counts"));
    }
  } else {
    file.second.emplace(space, std::move(values), std::move(status), tolerance);
    if (j.contains("counts")) {
      file.pair_counts.emplace(
          space, Flatten<std::uint64_t>(j["counts"], rows, n, "counts"));
    }
  }
  return file;
}

}  // namespace polkg::markov
