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

#include "mfsquad/lab.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "mfsquad/mesher.hpp"
#include "mfsquad/metrics.hpp"

namespace mfsquad {

Polygon gen_regular_ngon(int n, double side) {
  if (n < 6 || n % 2 != 0)
    throw OddN("regular n-gon generator needs even n >= 6, got " + std::to_string(n));
  const double r = side / (2.0 * std::sin(std::numbers::pi / n));
  Polygon p;
  p.pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    p.pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return p;
}

Polygon gen_comb(int n, int k) {
  if (n < 1 || k < 1) throw TooLarge("comb parameters must be >= 1");
  const double kk = k;
  const double big = k + static_cast<double>(n) * k * k;
  Polygon p;
  // Counterclockwise: bottom, diagonal into the slit, slit top, right side,
  // then the subdivided top edge right to left.
  p.pts.push_back({0.0, 0.0});
  p.pts.push_back({big, 0.0});
  p.pts.push_back({kk, kk});
  p.pts.push_back({big, kk});
  p.pts.push_back({big, 2.0 * kk});
  for (int j = n; j >= 1; --j) p.pts.push_back({kk * j, 2.0 * kk});
  p.pts.push_back({0.0, 2.0 * kk});
  return p;
}

namespace {

double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Repeatedly undo edge crossings by reversing the chain between them.
bool two_opt_uncross(std::vector<Point>& pts, const Tolerance& tol) {
  const int n = static_cast<int>(pts.size());
  const int budget = 10 * n * n;
  for (int pass = 0; pass < budget; ++pass) {
    bool crossed = false;
    for (int i = 0; i < n && !crossed; ++i) {
      for (int j = i + 1; j < n && !crossed; ++j) {
        const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        if (adjacent) continue;
        const Segment a{pts[static_cast<size_t>(i)], pts[static_cast<size_t>((i + 1) % n)]};
        const Segment b{pts[static_cast<size_t>(j)], pts[static_cast<size_t>((j + 1) % n)]};
        if (segment_intersection(a, b, tol).kind != SegmentIntersection::Kind::None) {
          std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
          crossed = true;
        }
      }
    }
    if (!crossed) return true;
  }
  return false;
}

}  // namespace

Polygon gen_random_simple(int n, unsigned long long seed, double floor) {
  if (n < 3) throw TooLarge("random polygon needs n >= 3");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<unsigned long long>(n));
  const Tolerance tol;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts(static_cast<size_t>(n));
    for (Point& p : pts) p = {rng_unit(rng), rng_unit(rng)};
    if (!two_opt_uncross(pts, tol)) continue;
    Polygon poly;
    poly.pts = pts;
    if (!poly.is_ccw()) poly.reverse();
    try {
      poly = make_polygon(std::move(poly.pts), tol);
    } catch (const DegeneratePolygon&) {
      continue;
    }
    if (!polygon_is_simple(poly, tol)) continue;
    const Drawing d = polygon_drawing(poly);
    const double mfs = min_feature_size(d).value;
    const double diam = diameter(d);
    if (mfs / diam >= floor) return poly;
  }
  throw GenerationBudgetExceeded("no simple polygon with mfs/diameter >= " +
                                 std::to_string(floor) + " after 1000 attempts");
}

Drawing triangulation_drawing(const Polygon& p, const ClassicTriangulation& t) {
  Drawing d = polygon_drawing(p);
  // polygon_drawing finalizes; re-add diagonals and finalize again.
  for (const auto& [a, b] : t.diagonals) d.add_edge(a, b, EdgeRole::Chord);
  d.finalize();
  return d;
}

namespace {

bool point_in_triangle(Point p, Point a, Point b, Point c, const Tolerance& tol) {
  const int o1 = orient(a, b, p, tol);
  const int o2 = orient(b, c, p, tol);
  const int o3 = orient(c, a, p, tol);
  return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

}  // namespace

ClassicTriangulation ear_clip(const Polygon& p, const Tolerance& tol) {
  const int n = p.size();
  std::vector<int> chain(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) chain[static_cast<size_t>(i)] = i;

  ClassicTriangulation out;
  while (chain.size() > 3) {
    const int m = static_cast<int>(chain.size());
    int ear = -1;
    for (int c = 0; c < m; ++c) {
      const int prev = chain[static_cast<size_t>((c + m - 1) % m)];
      const int cur = chain[static_cast<size_t>(c)];
      const int next = chain[static_cast<size_t>((c + 1) % m)];
      const Point a = p.vertex(prev);
      const Point b = p.vertex(cur);
      const Point cpt = p.vertex(next);
      if (orient(a, b, cpt, tol) <= 0) continue;  // reflex or straight apex
      bool blocked = false;
      for (int other : chain) {
        if (other == prev || other == cur || other == next) continue;
        if (point_in_triangle(p.vertex(other), a, b, cpt, tol)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (ear < 0 || cur < chain[static_cast<size_t>(ear)]) ear = c;
    }
    if (ear < 0) throw InternalError("ear_clip: no valid ear (polygon not simple?)");
    const int m2 = static_cast<int>(chain.size());
    const int prev = chain[static_cast<size_t>((ear + m2 - 1) % m2)];
    const int next = chain[static_cast<size_t>((ear + 1) % m2)];
    out.diagonals.push_back({std::min(prev, next), std::max(prev, next)});
    chain.erase(chain.begin() + ear);
  }
  return out;
}

double diagonal_clearance(const Polygon& p, int i, int j) {
  const Segment s{p.vertex(i), p.vertex(j)};
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < p.size(); ++v) {
    if (v == i || v == j) continue;
    best = std::min(best, dist_point_segment(p.vertex(v), s));
  }
  return best;
}

namespace {

// Diagonal validity for possibly non-convex polygons: strictly interior.
bool diagonal_valid(const Polygon& p, int i, int j, const Tolerance& tol) {
  const int n = p.size();
  if (i == j) return false;
  const int d = std::abs(i - j);
  if (d == 1 || d == n - 1) return false;  // polygon edge, not a diagonal
  const Segment s{p.vertex(i), p.vertex(j)};
  for (int e = 0; e < n; ++e) {
    const int a = e;
    const int b = p.wrap(e + 1);
    if (a == i || a == j || b == i || b == j) {
      // Shares an endpoint with the diagonal; a collinear overlap still
      // disqualifies it.
      const auto r = segment_intersection(s, p.edge(e), tol);
      if (r.kind == SegmentIntersection::Kind::Overlap) return false;
      continue;
    }
    if (segment_intersection(s, p.edge(e), tol).kind != SegmentIntersection::Kind::None)
      return false;
  }
  // No vertex may sit in the open interior of the diagonal.
  for (int v = 0; v < n; ++v) {
    if (v == i || v == j) continue;
    if (orient(s.a, s.b, p.vertex(v), tol) == 0) {
      const double t = dot(p.vertex(v) - s.a, s.delta()) / norm2(s.delta());
      if (t > tol.eps_abs && t < 1.0 - tol.eps_abs) return false;
    }
  }
  return p.contains(s.at(0.5), tol);
}

}  // namespace

BestClassicResult best_classic_triangulation(const Polygon& p, const Tolerance& tol) {
  const int n = p.size();
  if (n > 24) throw TooLarge("best_classic_triangulation limited to n <= 24");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // clearv[i][j]: clearance of the chord (i, j); +inf for polygon edges,
  // -inf for invalid diagonals.
  std::vector<std::vector<double>> clearv(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(n), -kInf));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      double c;
      if (d == 1 || d == n - 1) {
        c = kInf;
      } else if (diagonal_valid(p, i, j, tol)) {
        c = diagonal_clearance(p, i, j);
      } else {
        c = -kInf;
      }
      clearv[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
      clearv[static_cast<size_t>(j)][static_cast<size_t>(i)] = c;
    }
  }

  // best[i][j]: max over triangulations of the chain i..j (closed by the
  // chord (i, j)) of the min clearance of the chosen diagonals.
  std::vector<std::vector<double>> best(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), kInf));
  std::vector<std::vector<int>> choice(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), -1));
  for (int span = 2; span < n; ++span) {
    for (int i = 0; i + span < n; ++i) {
      const int j = i + span;
      double b = -kInf;
      int pick = -1;
      for (int k = i + 1; k < j; ++k) {
        const double val = std::min(
            {best[static_cast<size_t>(i)][static_cast<size_t>(k)],
             best[static_cast<size_t>(k)][static_cast<size_t>(j)],
             clearv[static_cast<size_t>(i)][static_cast<size_t>(k)],
             clearv[static_cast<size_t>(k)][static_cast<size_t>(j)]});
        if (val > b) {
          b = val;
          pick = k;
        }
      }
      best[static_cast<size_t>(i)][static_cast<size_t>(j)] = b;
      choice[static_cast<size_t>(i)][static_cast<size_t>(j)] = pick;
    }
  }

  BestClassicResult result;
  const double chain_best = best[0][static_cast<size_t>(n - 1)];
  if (!(chain_best > -kInf))
    throw InternalError("best_classic_triangulation: no valid triangulation found");
  const double mfs_p = min_feature_size(polygon_drawing(p)).value;
  result.best_mfs = std::min(mfs_p, chain_best);

  // Reconstruct the diagonal set.
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    const int k = choice[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (k < 0) throw InternalError("best_classic_triangulation: broken choice table");
    if (k - i >= 2) result.triangulation.diagonals.push_back({i, k});
    if (j - k >= 2) result.triangulation.diagonals.push_back({k, j});
    stack.push_back({i, k});
    stack.push_back({k, j});
  }
  return result;
}

namespace {

Polygon spec_polygon(const FamilySpec& spec) {
  if (spec.family == "regular") return gen_regular_ngon(spec.n);
  if (spec.family == "comb") return gen_comb(spec.n, spec.k);
  if (spec.family == "random")
    return gen_random_simple(spec.n, static_cast<unsigned long long>(spec.k));
  throw TooLarge("unknown family: " + spec.family);
}

}  // namespace

std::vector<TableRow> degradation_table(const std::vector<FamilySpec>& specs,
                                        const std::vector<std::string>& methods) {
  std::vector<TableRow> rows;
  for (const FamilySpec& spec : specs) {
    for (const std::string& method : methods) {
      TableRow row;
      row.family = spec.family;
      row.n = spec.n;
      row.k = spec.k;
      row.method = method;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const Polygon p = spec_polygon(spec);
        const Drawing pd = polygon_drawing(p);
        row.mfs_in = min_feature_size(pd).value;
        if (method == "ear_clip") {
          const auto t = ear_clip(p);
          row.mfs_out = min_feature_size(triangulation_drawing(p, t)).value;
        } else if (method == "best_classic") {
          row.mfs_out = best_classic_triangulation(p).best_mfs;
        } else if (method == "pipeline") {
          const Mesh mesh = quadrangulate(p);
          row.mfs_out = min_feature_size(mesh.drawing).value;
          row.steiner_count = mesh.steiner_count();
        } else {
          throw TooLarge("unknown method: " + method);
        }
        row.degradation = row.mfs_in / row.mfs_out;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    return a.method < b.method;
  });
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "family,n,k,method,mfs_in,mfs_out,degradation,steiner_count,wall_time,error\n";
  char buf[512];
  for (const TableRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%s,%.12g,%.12g,%.12g,%d,%.6g,%s\n",
                  r.family.c_str(), r.n, r.k, r.method.c_str(), r.mfs_in, r.mfs_out,
                  r.degradation, r.steiner_count, r.wall_time, r.error.c_str());
    out += buf;
  }
  return out;
}

}  // namespace mfsquad
