// Copyright 2026 The mfsquad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mfsquad/drawing.hpp"

namespace mfsquad {

struct MfsResult {
  double value = 0.0;
  int vertex = -1;  // witness vertex
  int edge = -1;    // witness edge (non-incident to the vertex)
};

/// Minimum over all (vertex, non-incident edge) pairs of the vertex-to-edge
/// distance. O(V*E); doubles as the trusted oracle. Ties break to the lowest
/// (vertex, edge) index pair.
MfsResult min_feature_size_brute(const Drawing& d);

/// Accelerated path over an AABB tree; same value and witness as the brute
/// force under the documented tie-break.
MfsResult min_feature_size_fast(const Drawing& d);

/// Dispatches to the brute force for small drawings, the tree otherwise.
MfsResult min_feature_size(const Drawing& d);

/// Largest distance between any two points in the union of the edges; for
/// straight-line drawings this is attained at a vertex pair. Convex hull +
/// rotating calipers.
double diameter(const Drawing& d);

/// diameter / mfs (always >= 1).
double spread(const Drawing& d);

/// mfs(original) / mfs(refined).
double degradation(const Drawing& original, const Drawing& refined);

struct MetricsReport {
  double mfs = 0.0;
  int witness_vertex = -1;
  int witness_edge = -1;
  double diameter = 0.0;
  double spread = 0.0;
  std::optional<double> degradation_vs;
};

MetricsReport measure(const Drawing& d, const Drawing* reference = nullptr);

struct AngleViolation {
  int vertex = -1;
  int edge1 = -1, edge2 = -1;
  double angle = 0.0;
  double min_len = 0.0;
  double bound = 0.0;  // the mfs the product fell short of
};

/// For every vertex and pair of incident edges (ab, ac), flags
/// angle(bac) * min(|ab|, |ac|) < mfs - eps_abs. Empty for any valid
/// drawing; a non-empty list indicates an mfs or geometry bug.
/// `claimed_mfs` overrides the computed mfs (useful to audit a claim).
std::vector<AngleViolation> audit_angle_bound(const Drawing& d,
                                              std::optional<double> claimed_mfs = {},
                                              const Tolerance& tol = {});

/// Histogram of corner_count over bounded faces.
std::map<int, int> classify_faces(const Drawing& d, const Tolerance& tol = {});

}  // namespace mfsquad
