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

#ifndef POLKG_MARKOV_HPP_
#define POLKG_MARKOV_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polkg::markov {

// Row sums of estimated matrices and distributions are checked against 1
// within this tolerance unless a looser one is declared (e.g. for matrices
// transcribed from tables rounded to three decimals).
inline constexpr double kRowSumTolerance = 1e-9;

// Ordered, duplicate-free state labels.
class StateSpace {
 public:
  // Sorted lexicographically.
  explicit StateSpace(std::vector<std::string> labels);
  // Keeps the given order.
  static StateSpace InOrder(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> Find(std::string_view label) const;
  // Throws ValidationError naming an unknown label.
  std::size_t Index(std::string_view label) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  struct Unsorted {};
  StateSpace(std::vector<std::string> labels, Unsorted);
  void BuildIndex();

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class RowStatus { kObserved, kUnobserved };

// First-order counts: counts[i][j] = number of observed i -> j steps.
class TransitionCounts {
 public:
  TransitionCounts(StateSpace space, std::vector<std::uint64_t> counts);
  explicit TransitionCounts(StateSpace space);

  const StateSpace& space() const { return space_; }
  std::uint64_t at(std::size_t from, std::size_t to) const {
    return counts_[from * space_.size() + to];
  }
  std::uint64_t& at(std::size_t from, std::size_t to) {
    return counts_[from * space_.size() + to];
  }
  std::uint64_t RowTotal(std::size_t from) const;
  std::uint64_t Total() const;
  const std::vector<std::uint64_t>& values() const { return counts_; }

  friend bool operator==(const TransitionCounts&,
                         const TransitionCounts&) = default;

 private:
  StateSpace space_;
  std::vector<std::uint64_t> counts_;
};

// Row-stochastic matrix. Observed rows have entries in [0, 1] summing to 1
// within tolerance(); unobserved rows are all zero.
class TransitionMatrix {
 public:
  TransitionMatrix(StateSpace space, std::vector<double> values,
                   std::vector<RowStatus> status,
                   double tolerance = kRowSumTolerance);

  static TransitionMatrix Identity(StateSpace space);

  const StateSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  double at(std::size_t from, std::size_t to) const {
    return values_[from * size() + to];
  }
  std::span<const double> row(std::size_t from) const {
    return std::span<const double>(values_).subspan(from * size(), size());
  }
  RowStatus status(std::size_t from) const { return status_[from]; }
  bool AllObserved() const;
  double tolerance() const { return tolerance_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<RowStatus>& statuses() const { return status_; }

 private:
  StateSpace space_;
  std::vector<double> values_;
  std::vector<RowStatus> status_;
  double tolerance_;
};

// Probability mass over a state space; sums to 1 within tolerance().
class Distribution {
 public:
  Distribution(StateSpace space, std::vector<double> mass,
               double tolerance = kRowSumTolerance);

  const StateSpace& space() const { return space_; }
  const std::vector<double>& mass() const { return mass_; }
  double at(std::size_t i) const { return mass_.at(i); }
  double at(std::string_view label) const { return mass_[space_.Index(label)]; }

 private:
  StateSpace space_;
  std::vector<double> mass_;
};

TransitionCounts CountTransitions(std::span<const std::string> sequence,
                                  const StateSpace& space);

// p[i][j] = counts[i][j] / rowsum(i). Rows without observations are left
// zero and flagged unobserved. `alpha` > 0 adds that pseudo-count to every
// cell first (Laplace smoothing), which makes every row observed.
TransitionMatrix EstimateFirstOrder(const TransitionCounts& counts,
                                    double alpha = 0.0);

// Plain matrix product over a shared state space.
TransitionMatrix Multiply(const TransitionMatrix& a, const TransitionMatrix& b);

// m^t by binary exponentiation; t = 0 gives the identity. Throws
// ValidationError if any row of `m` is unobserved.
TransitionMatrix MatrixPower(const TransitionMatrix& m, std::uint64_t steps);

// Row `current` of m^steps (steps >= 1). For steps == 1 only that row has to
// be observed; larger powers need every row observed.
Distribution Predict(const TransitionMatrix& m, std::string_view current,
                     std::uint64_t steps = 1);

// Second-order counts indexed by (previous, current) -> next; the pair row
// of (i, j) is i * n + j.
class PairCounts {
 public:
  explicit PairCounts(StateSpace space);
  PairCounts(StateSpace space, std::vector<std::uint64_t> counts);

  const StateSpace& space() const { return space_; }
  std::size_t rows() const { return space_.size() * space_.size(); }
  std::uint64_t at(std::size_t prev, std::size_t cur, std::size_t next) const {
    return counts_[(prev * space_.size() + cur) * space_.size() + next];
  }
  std::uint64_t& at(std::size_t prev, std::size_t cur, std::size_t next) {
    return counts_[(prev * space_.size() + cur) * space_.size() + next];
  }
  std::uint64_t RowTotal(std::size_t prev, std::size_t cur) const;
  std::uint64_t Total() const;
  const std::vector<std::uint64_t>& values() const { return counts_; }

  // Sums over the previous-state axis: counts of cur -> next.
  TransitionCounts MarginalizePrevious() const;

 private:
  StateSpace space_;
  std::vector<std::uint64_t> counts_;
};

// n^2 x n matrix of P(next | previous, current).
class SecondOrderMatrix {
 public:
  SecondOrderMatrix(StateSpace space, std::vector<double> values,
                    std::vector<RowStatus> status,
                    double tolerance = kRowSumTolerance);

  const StateSpace& space() const { return space_; }
  std::size_t rows() const { return space_.size() * space_.size(); }
  double at(std::size_t prev, std::size_t cur, std::size_t next) const {
    return values_[(prev * space_.size() + cur) * space_.size() + next];
  }
  std::span<const double> row(std::size_t prev, std::size_t cur) const {
    const std::size_t n = space_.size();
    return std::span<const double>(values_).subspan((prev * n + cur) * n, n);
  }
  RowStatus status(std::size_t prev, std::size_t cur) const {
    return status_[prev * space_.size() + cur];
  }
  double tolerance() const { return tolerance_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<RowStatus>& statuses() const { return status_; }

 private:
  StateSpace space_;
  std::vector<double> values_;
  std::vector<RowStatus> status_;
  double tolerance_;
};

PairCounts CountPairTransitions(std::span<const std::string> sequence,
                                const StateSpace& space);

SecondOrderMatrix EstimateSecondOrder(const PairCounts& counts,
                                      double alpha = 0.0);

// The (previous, current) row. Throws ValidationError for an unobserved
// pair: the data never showed that pair followed by another state.
Distribution PredictSecondOrder(const SecondOrderMatrix& m,
                                std::string_view previous,
                                std::string_view current);

// Fixed-point rendering used for display, e.g. 0.28125 -> "0.281".
std::string FormatProbability(double p, int decimals = 3);

}  // namespace polkg::markov

#endif  // POLKG_MARKOV_HPP_
