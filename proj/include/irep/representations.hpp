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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "irep/common.hpp"
#include "irep/groups.hpp"
#include "irep/pooling.hpp"

namespace irep {

/// k unit-norm templates together with their precomputed orbit expansions
/// ("movies"): expanded[i][g] = act(g, t_i), exactly.  Immutable after
/// construction and safe to share across threads.
struct TemplateBank {
  GroupAction action;
  std::vector<Signal> templates;              // k x d
  std::vector<std::vector<Signal>> expanded;  // k x N x d

  int size() const { return static_cast<int>(templates.size()); }
  int dim() const { return action.dim; }
};

inline TemplateBank make_template_bank(GroupAction action, std::vector<Signal> templates) {
  if (templates.empty()) throw std::invalid_argument("make_template_bank: need at least one template");
  TemplateBank bank;
  bank.expanded.reserve(templates.size());
  for (const Signal& t : templates) {
    if (static_cast<int>(t.size()) != action.dim)
      throw std::invalid_argument("make_template_bank: template dimension mismatch");
    if (std::abs(norm(t) - 1.0) > 1e-12)
      throw std::invalid_argument("make_template_bank: templates must be unit norm");
    bank.expanded.push_back(orbit(action, t));
  }
  bank.templates = std::move(templates);
  bank.action = std::move(action);
  return bank;
}

/// k i.i.d. uniform unit vectors on the sphere S^{d-1} (normalized Gaussian
/// draws), expanded over the group orbit.  Deterministic per seed.
inline TemplateBank sample_templates(const GroupAction& action, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample_templates: k must be >= 1");
  Rng rng(seed);
  std::vector<Signal> templates;
  templates.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) templates.push_back(random_unit_signal(action.dim, rng));
  return make_template_bank(action, std::move(templates));
}

/// The empirical projection law of I against template i: the sorted multiset
/// {<I, g t_i> : g in G}, N values with uniform weight 1/N.
struct OrbitProjection {
  int template_index = 0;
  std::vector<double> values;  // sorted ascending

  int size() const { return static_cast<int>(values.size()); }
};

/// Projection values indexed by group element (unsorted), for base-point
/// dependent consumers (POG windows).
inline std::vector<double> orbit_projection_values(const Signal& I, const TemplateBank& bank,
                                                   int i, DotMode mode = DotMode::canonical) {
  if (i < 0 || i >= bank.size()) throw std::out_of_range("orbit projection: bad template index");
  if (static_cast<int>(I.size()) != bank.dim())
    throw std::invalid_argument("orbit projection: dimension mismatch");
  const auto& movie = bank.expanded[static_cast<std::size_t>(i)];
  std::vector<double> v(movie.size());
  for (std::size_t g = 0; g < movie.size(); ++g) v[g] = dot(I, movie[g], mode);
  return v;
}

inline OrbitProjection project_orbit(const Signal& I, const TemplateBank& bank, int i,
                                     DotMode mode = DotMode::canonical) {
  OrbitProjection p;
  p.template_index = i;
  p.values = orbit_projection_values(I, bank, i, mode);
  std::sort(p.values.begin(), p.values.end());
  return p;
}

inline std::vector<double> cdf_vector(const OrbitProjection& p, const BinGrid& grid) {
  return cdf_vector_sorted(p.values, grid);
}

inline std::vector<double> moment_vector(const OrbitProjection& p, int order) {
  return moment_vector_sorted(p.values, order);
}

enum class PoolingKind { threshold, sigmoid, moments };

inline std::string pooling_kind_name(PoolingKind k) {
  switch (k) {
    case PoolingKind::threshold: return "threshold";
    case PoolingKind::sigmoid: return "sigmoid";
    case PoolingKind::moments: return "moments";
  }
  return "threshold";
}

struct PoolingConfig {
  PoolingKind kind = PoolingKind::threshold;
  BinGrid grid = BinGrid::uniform(32, 1.0);
  double slope = 100.0;   // sigmoid surrogate steepness
  int moment_order = 6;   // truncated moment count

  int width() const {
    return kind == PoolingKind::moments ? moment_order : grid.size();
  }
};

struct RepresentOptions {
  bool normalize = true;  // scale the signal to unit norm before projecting
  DotMode mode = DotMode::canonical;
};

/// Pooled invariant representation: one row per template.  Rows are binned
/// CDFs (threshold), smooth CDF surrogates (sigmoid) or truncated absolute
/// moments.  Fully determined by the orbit-projection multisets, hence
/// constant on group orbits.
struct RepMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major
  PoolingKind kind = PoolingKind::threshold;
  std::string group;
  std::vector<double> grid;  // thresholds (empty for moments)
  bool normalized = true;

  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

inline RepMatrix represent(const Signal& I, const TemplateBank& bank, const PoolingConfig& cfg,
                           const RepresentOptions& opt = {}) {
  const Signal* input = &I;
  Signal scaled;
  if (opt.normalize) {
    scaled = normalized(I);
    input = &scaled;
  }
  RepMatrix rep;
  rep.rows = bank.size();
  rep.cols = cfg.width();
  rep.kind = cfg.kind;
  rep.group = bank.action.descriptor;
  rep.normalized = opt.normalize;
  if (cfg.kind != PoolingKind::moments) rep.grid = cfg.grid.thresholds;
  rep.data.resize(static_cast<std::size_t>(rep.rows) * rep.cols);
  for (int i = 0; i < rep.rows; ++i) {
    const OrbitProjection proj = project_orbit(*input, bank, i, opt.mode);
    std::vector<double> row;
    switch (cfg.kind) {
      case PoolingKind::threshold: row = cdf_vector(proj, cfg.grid); break;
      case PoolingKind::sigmoid: row = sigmoid_cdf_vector_sorted(proj.values, cfg.grid, cfg.slope); break;
      case PoolingKind::moments: row = moment_vector(proj, cfg.moment_order); break;
    }
    std::copy(row.begin(), row.end(), rep.data.begin() + static_cast<std::size_t>(i) * rep.cols);
  }
  return rep;
}

/// Max-abs entrywise distance between two representations of the same shape.
inline double rep_distance(const RepMatrix& a, const RepMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.kind != b.kind)
    throw std::invalid_argument("rep_distance: shape or kind mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

/// Smallest Euclidean distance between the orbit of I and the point J.
inline double orbit_min_distance(const Signal& I, const Signal& J, const GroupAction& a) {
  if (I.size() != J.size() || static_cast<int>(I.size()) != a.dim)
    throw std::invalid_argument("orbit_min_distance: dimension mismatch");
  double best = std::numeric_limits<double>::infinity();
  Signal moved;
  for (int g = 0; g < a.order(); ++g) {
    act_into(a, g, I, moved);
    double q = 0.0;
    for (std::size_t m = 0; m < moved.size(); ++m) {
      const double e = moved[m] - J[m];
      q += e * e;
    }
    best = std::min(best, q);
  }
  return std::sqrt(best);
}

/// Brute-force selectivity oracle: true iff some group element maps I onto J
/// within tol.  Independent of every pooled-representation code path.
inline bool orbit_equivalent(const Signal& I, const Signal& J, const GroupAction& a, double tol) {
  return orbit_min_distance(I, J, a) <= tol;
}

}  // namespace irep
