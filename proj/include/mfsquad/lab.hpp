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

#include <string>
#include <utility>
#include <vector>

#include "mfsquad/drawing.hpp"
#include "mfsquad/polygon.hpp"

namespace mfsquad {

/// Regular n-gon with the given side length, centered at the origin, first
/// vertex on the +x axis. Requires even n >= 6.
Polygon gen_regular_ngon(int n, double side = 1.0);

/// Comb polygon with n teeth-subdivision vertices on the top edge (spaced k
/// apart) and minimum feature size exactly k. Vertex count n + 6.
Polygon gen_comb(int n, int k);

/// Deterministic random simple polygon: seeded points, 2-opt uncrossing,
/// re-rolled until mfs/diameter >= floor. Throws GenerationBudgetExceeded
/// after 1000 re-rolls.
Polygon gen_random_simple(int n, unsigned long long seed, double floor = 0.01);

/// Triangulation by chords between original vertices only (n-3 diagonals).
struct ClassicTriangulation {
  std::vector<std::pair<int, int>> diagonals;
};

/// Drawing of the polygon boundary plus the triangulation's diagonals.
Drawing triangulation_drawing(const Polygon& p, const ClassicTriangulation& t);

/// Deterministic ear clipping (lowest-index valid ear first).
ClassicTriangulation ear_clip(const Polygon& p, const Tolerance& tol = {});

/// The classic triangulation maximizing the minimum feature size, via a
/// bottleneck dynamic program over sub-polygons. Uses the decomposition
/// mfs(T) = min(mfs(P), min over diagonals of clearance(d)), clearance(d)
/// being the minimum distance from a non-endpoint vertex to d. n <= 24.
struct BestClassicResult {
  ClassicTriangulation triangulation;
  double best_mfs = 0.0;
};
BestClassicResult best_classic_triangulation(const Polygon& p, const Tolerance& tol = {});

/// Clearance of a chord: min over vertices not an endpoint of dist(v, chord).
double diagonal_clearance(const Polygon& p, int i, int j);

/// One experiment row; CSV-serializable.
struct TableRow {
  std::string family;  // "regular", "comb", "random"
  int n = 0;
  int k = 0;  // comb parameter or random seed; 0 otherwise
  std::string method;  // "ear_clip", "best_classic", "pipeline"
  double mfs_in = 0.0;
  double mfs_out = 0.0;
  double degradation = 0.0;
  int steiner_count = 0;
  double wall_time = 0.0;  // seconds
  std::string error;       // non-empty on failure
};

struct FamilySpec {
  std::string family;
  int n = 0;
  int k = 0;  // comb k / random seed
};

std::vector<TableRow> degradation_table(const std::vector<FamilySpec>& specs,
                                        const std::vector<std::string>& methods);

std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace mfsquad
