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

#include "polkg/markov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "polkg/error.hpp"

namespace polkg::markov {
namespace {

void ValidateRows(std::size_t rows, std::size_t width,
                  const std::vector<double>& values,
                  const std::vector<RowStatus>& status, double tolerance,
                  const char* what) {
  if (values.size() != rows * width || status.size() != rows) {
    throw ValidationError(std::string(what) + " has the wrong shape");
  }
  if (!(tolerance >= 0.0)) {
    throw ValidationError(std::string(what) + " tolerance must be >= 0");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < width; ++c) {
      const double v = values[r * width + c];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError(std::string(what) + " entry outside [0, 1] in row " +
                              std::to_string(r + 1));
      }
      sum += v;
    }
    if (status[r] == RowStatus::kUnobserved) {
      if (sum != 0.0) {
        throw ValidationError(std::string(what) + " row " +
                              std::to_string(r + 1) +
                              " is flagged unobserved but not zero");
      }
    } else if (std::abs(sum - 1.0) > tolerance) {
      throw ValidationError(std::string(what) + " row " +
                            std::to_string(r + 1) + " sums to " +
                            std::to_string(sum) + ", not 1");
    }
  }
}

// Normalizes `rows` groups of `width` counts (plus alpha each).
void Normalize(const std::vector<std::uint64_t>& counts, std::size_t rows,
               std::size_t width, double alpha, std::vector<double>& values,
               std::vector<RowStatus>& status) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("smoothing alpha must be finite and >= 0");
  }
  values.assign(rows * width, 0.0);
  status.assign(rows, RowStatus::kUnobserved);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t raw = 0;
    for (std::size_t c = 0; c < width; ++c) raw += counts[r * width + c];
    const double total =
        static_cast<double>(raw) + alpha * static_cast<double>(width);
    if (total <= 0.0) continue;
    status[r] = RowStatus::kObserved;
    for (std::size_t c = 0; c < width; ++c) {
      values[r * width + c] =
          (static_cast<double>(counts[r * width + c]) + alpha) / total;
    }
  }
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  BuildIndex();
}

StateSpace::StateSpace(std::vector<std::string> labels, Unsorted)
    : labels_(std::move(labels)) {
  BuildIndex();
}

StateSpace StateSpace::InOrder(std::vector<std::string> labels) {
  return StateSpace(std::move(labels), Unsorted{});
}

void StateSpace::BuildIndex() {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ValidationError("empty state label");
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError("duplicate state label `" + labels_[i] + "`");
    }
  }
}

std::optional<std::size_t> StateSpace::Find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t StateSpace::Index(std::string_view label) const {
  auto i = Find(label);
  if (!i) throw ValidationError("unknown state `" + std::string(label) + "`");
  return *i;
}

TransitionCounts::TransitionCounts(StateSpace space)
    : space_(std::move(space)), counts_(space_.size() * space_.size(), 0) {}

TransitionCounts::TransitionCounts(StateSpace space,
                                   std::vector<std::uint64_t> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (counts_.size() != space_.size() * space_.size()) {
    throw ValidationError("transition counts have the wrong shape");
  }
}

std::uint64_t TransitionCounts::RowTotal(std::size_t from) const {
  const std::size_t n = space_.size();
  return std::accumulate(counts_.begin() + static_cast<std::ptrdiff_t>(from * n),
                         counts_.begin() + static_cast<std::ptrdiff_t>(from * n + n),
                         std::uint64_t{0});
}

std::uint64_t TransitionCounts::Total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

TransitionMatrix::TransitionMatrix(StateSpace space, std::vector<double> values,
                                   std::vector<RowStatus> status,
                                   double tolerance)
    : space_(std::move(space)),
      values_(std::move(values)),
      status_(std::move(status)),
      tolerance_(tolerance) {
  ValidateRows(space_.size(), space_.size(), values_, status_, tolerance_,
               "transition matrix");
}

TransitionMatrix TransitionMatrix::Identity(StateSpace space) {
  const std::size_t n = space.size();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  return TransitionMatrix(std::move(space), std::move(v),
                          std::vector<RowStatus>(n, RowStatus::kObserved));
}

bool TransitionMatrix::AllObserved() const {
  return std::all_of(status_.begin(), status_.end(),
                     [](RowStatus s) { return s == RowStatus::kObserved; });
}

Distribution::Distribution(StateSpace space, std::vector<double> mass,
                           double tolerance)
    : space_(std::move(space)), mass_(std::move(mass)) {
  ValidateRows(1, space_.size(), mass_, {RowStatus::kObserved}, tolerance,
               "distribution");
}

TransitionCounts CountTransitions(std::span<const std::string> sequence,
                                  const StateSpace& space) {
  TransitionCounts counts(space);
  std::vector<std::size_t> idx;
  idx.reserve(sequence.size());
  for (const std::string& s : sequence) idx.push_back(space.Index(s));
  for (std::size_t t = 0; t + 1 < idx.size(); ++t) ++counts.at(idx[t], idx[t + 1]);
  return counts;
}

TransitionMatrix EstimateFirstOrder(const TransitionCounts& counts,
                                    double alpha) {
  const std::size_t n = counts.space().size();
  std::vector<double> values;
  std::vector<RowStatus> status;
  Normalize(counts.values(), n, n, alpha, values, status);
  return TransitionMatrix(counts.space(), std::move(values), std::move(status));
}

TransitionMatrix Multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (!(a.space() == b.space())) {
    throw ValidationError("cannot multiply matrices over different states");
  }
  const std::size_t n = a.size();
  std::vector<double> out(n * n, 0.0);
  std::vector<RowStatus> status(n, RowStatus::kObserved);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.status(i) == RowStatus::kUnobserved) {
      status[i] = RowStatus::kUnobserved;
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b.at(k, j);
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += out[i * n + j];
    if (sum == 0.0) status[i] = RowStatus::kUnobserved;
  }
  // Rounding in the inputs accumulates additively through the product.
  return TransitionMatrix(a.space(), std::move(out), std::move(status),
                          a.tolerance() + b.tolerance());
}

TransitionMatrix MatrixPower(const TransitionMatrix& m, std::uint64_t steps) {
  if (!m.AllObserved()) {
    throw ValidationError(
        "matrix power is undefined when a row is unobserved");
  }
  TransitionMatrix result = TransitionMatrix::Identity(m.space());
  if (steps == 0) return result;
  TransitionMatrix base = m;
  bool first = true;
  while (steps > 0) {
    if (steps & 1U) {
      result = first ? base : Multiply(result, base);
      first = false;
    }
    steps >>= 1U;
    if (steps > 0) base = Multiply(base, base);
  }
  return result;
}

Distribution Predict(const TransitionMatrix& m, std::string_view current,
                     std::uint64_t steps) {
  if (steps == 0) throw ValidationError("prediction needs at least one step");
  const std::size_t i = m.space().Index(current);
  if (m.status(i) == RowStatus::kUnobserved) {
    throw ValidationError("state `" + std::string(current) +
                          "` was never observed leaving; no prediction");
  }
  const TransitionMatrix powered = steps == 1 ? m : MatrixPower(m, steps);
  const auto row = powered.row(i);
  return Distribution(m.space(), std::vector<double>(row.begin(), row.end()),
                      powered.tolerance());
}

PairCounts::PairCounts(StateSpace space)
    : space_(std::move(space)),
      counts_(space_.size() * space_.size() * space_.size(), 0) {}

PairCounts::PairCounts(StateSpace space, std::vector<std::uint64_t> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (counts_.size() != space_.size() * space_.size() * space_.size()) {
    throw ValidationError("pair counts have the wrong shape");
  }
}

std::uint64_t PairCounts::RowTotal(std::size_t prev, std::size_t cur) const {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < space_.size(); ++k) total += at(prev, cur, k);
  return total;
}

std::uint64_t PairCounts::Total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

TransitionCounts PairCounts::MarginalizePrevious() const {
  TransitionCounts out(space_);
  const std::size_t n = space_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.at(j, k) += at(i, j, k);
    }
  }
  return out;
}

SecondOrderMatrix::SecondOrderMatrix(StateSpace space,
                                     std::vector<double> values,
                                     std::vector<RowStatus> status,
                                     double tolerance)
    : space_(std::move(space)),
      values_(std::move(values)),
      status_(std::move(status)),
      tolerance_(tolerance) {
  ValidateRows(rows(), space_.size(), values_, status_, tolerance_,
               "second-order matrix");
}

PairCounts CountPairTransitions(std::span<const std::string> sequence,
                                const StateSpace& space) {
  PairCounts counts(space);
  std::vector<std::size_t> idx;
  idx.reserve(sequence.size());
  for (const std::string& s : sequence) idx.push_back(space.Index(s));
  for (std::size_t t = 0; t + 2 < idx.size(); ++t) {
    ++counts.at(idx[t], idx[t + 1], idx[t + 2]);
  }
  return counts;
}

SecondOrderMatrix EstimateSecondOrder(const PairCounts& counts, double alpha) {
  const std::size_t n = counts.space().size();
  std::vector<double> values;
  std::vector<RowStatus> status;
  Normalize(counts.values(), n * n, n, alpha, values, status);
  return SecondOrderMatrix(counts.space(), std::move(values), std::move(status));
}

Distribution PredictSecondOrder(const SecondOrderMatrix& m,
                                std::string_view previous,
                                std::string_view current) {
  const std::size_t i = m.space().Index(previous);
  const std::size_t j = m.space().Index(current);
  if (m.status(i, j) == RowStatus::kUnobserved) {
    throw ValidationError(
        "state pair (" + std::string(previous) + ", " + std::string(current) +
        ") never occurred in the data; sparse data leaves higher-order "
        "models without an estimate for it");
  }
  const auto row = m.row(i, j);
  return Distribution(m.space(), std::vector<double>(row.begin(), row.end()),
                      m.tolerance());
}

std::string FormatProbability(double p, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, p);
  return buf;
}

}  // namespace polkg::markov
