// Copyright 2026 the irep authors.
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

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "irep/common.hpp"

namespace irep {

/// Pointwise nonlinearity applied to projection values before group
/// averaging.
///
/// threshold(b) is the Heaviside step eta_b(a) = H(b - a) with H(0) = 1, so
/// a group average of it is exactly the CDF value q((-inf, b]).  sigmoid is
/// its smooth surrogate 1 / (1 + exp(-s (b - a))).  abs_power(r) gives
/// absolute moments |a|^r.
struct Nonlinearity {
  enum class Kind { threshold, sigmoid, abs_power, identity };

  Kind kind = Kind::identity;
  double bias = 0.0;   // b, threshold/sigmoid
  double slope = 1.0;  // s, sigmoid
  int power = 1;       // r, abs_power

  static Nonlinearity threshold(double b) { return {Kind::threshold, b, 1.0, 1}; }
  static Nonlinearity sigmoid(double b, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("sigmoid: slope must be positive");
    return {Kind::sigmoid, b, s, 1};
  }
  static Nonlinearity abs_power(int r) {
    if (r < 1) throw std::invalid_argument("abs_power: exponent must be >= 1");
    return {Kind::abs_power, 0.0, 1.0, r};
  }
  static Nonlinearity identity() { return {Kind::identity, 0.0, 1.0, 1}; }

  double operator()(double a) const {
    switch (kind) {
      case Kind::threshold:
        return a <= bias ? 1.0 : 0.0;
      case Kind::sigmoid:
        return 1.0 / (1.0 + std::exp(-slope * (bias - a)));
      case Kind::abs_power: {
        double v = std::abs(a), out = 1.0;
        for (int i = 0; i < power; ++i) out *= v;
        return out;
      }
      case Kind::identity:
        return a;
    }
    return a;
  }
};

/// Strictly increasing threshold axis b_1 < ... < b_B for binned CDFs.
struct BinGrid {
  std::vector<double> thresholds;

  BinGrid() = default;
  explicit BinGrid(std::vector<double> t) : thresholds(std::move(t)) {
    if (thresholds.empty()) throw std::invalid_argument("BinGrid: empty grid");
    for (std::size_t j = 0; j + 1 < thresholds.size(); ++j)
      if (!(thresholds[j] < thresholds[j + 1]))
        throw std::invalid_argument("BinGrid: thresholds must be strictly increasing");
  }

  /// bins thresholds spread uniformly over [-range, range] (inclusive),
  /// symmetric about zero.  Pairs with unit-normalized signals/templates, for
  /// which |<I, gt>| <= 1 by Cauchy-Schwarz.
  static BinGrid uniform(int bins, double range = 1.0) {
    if (bins < 1) throw std::invalid_argument("BinGrid: bins must be >= 1");
    if (!(range > 0.0)) throw std::invalid_argument("BinGrid: range must be positive");
    std::vector<double> t(static_cast<std::size_t>(bins));
    if (bins == 1) {
      t[0] = 0.0;
    } else {
      for (int j = 0; j < bins; ++j)
        t[j] = -range + 2.0 * range * static_cast<double>(j) / (bins - 1);
    }
    return BinGrid(std::move(t));
  }

  int size() const { return static_cast<int>(thresholds.size()); }
};

/// Empirical CDF of a value multiset sampled on the grid:
/// entry j = (1/N) #{v <= b_j}.  `values` must be sorted ascending.
inline std::vector<double> cdf_vector_sorted(std::span<const double> values, const BinGrid& grid) {
  if (values.empty()) throw std::invalid_argument("cdf_vector: empty projection set");
  std::vector<double> out(static_cast<std::size_t>(grid.size()));
  const double n = static_cast<double>(values.size());
  for (int j = 0; j < grid.size(); ++j) {
    const auto it = std::upper_bound(values.begin(), values.end(), grid.thresholds[j]);
    out[j] = static_cast<double>(it - values.begin()) / n;
  }
  return out;
}

/// Truncated absolute moments m_r = (1/N) sum |v|^r, r = 1..order.
/// `values` must be sorted ascending (this fixes the summation order, making
/// the result a pure multiset statistic).
inline std::vector<double> moment_vector_sorted(std::span<const double> values, int order) {
  if (order < 1) throw std::invalid_argument("moment_vector: order must be >= 1");
  if (values.empty()) throw std::invalid_argument("moment_vector: empty projection set");
  std::vector<double> out(static_cast<std::size_t>(order), 0.0);
  for (double v : values) {
    double term = 1.0;
    const double a = std::abs(v);
    for (int r = 0; r < order; ++r) {
      term *= a;
      out[r] += term;
    }
  }
  const double n = static_cast<double>(values.size());
  for (double& m : out) m /= n;
  return out;
}

/// Smooth CDF surrogate: entry j = (1/N) sum sigmoid(b_j, slope)(v).
inline std::vector<double> sigmoid_cdf_vector_sorted(std::span<const double> values,
                                                     const BinGrid& grid, double slope) {
  if (values.empty()) throw std::invalid_argument("sigmoid_cdf_vector: empty projection set");
  std::vector<double> out(static_cast<std::size_t>(grid.size()));
  const double n = static_cast<double>(values.size());
  for (int j = 0; j < grid.size(); ++j) {
    const auto eta = Nonlinearity::sigmoid(grid.thresholds[j], slope);
    double s = 0.0;
    for (double v : values) s += eta(v);
    out[j] = s / n;
  }
  return out;
}

}  // namespace irep
