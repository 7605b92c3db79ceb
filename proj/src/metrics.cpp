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

#include "mfsquad/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mfsquad/segment_tree.hpp"

namespace mfsquad {

namespace {

void require_measurable(const Drawing& d) {
  if (d.vertex_count() < 3)
    throw NoNonIncidentPair("drawing has fewer than 3 vertices");
  if (d.edge_count() < 1) throw NoNonIncidentPair("drawing has no edges");
}

}  // namespace

MfsResult min_feature_size_brute(const Drawing& d) {
  require_measurable(d);
  MfsResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int v = 0; v < d.vertex_count(); ++v) {
    const Point p = d.pos(v);
    for (int e = 0; e < d.edge_count(); ++e) {
      const Drawing::Edge& ed = d.edge(e);
      if (ed.a == v || ed.b == v) continue;
      const double dist = dist_point_segment(p, d.seg(e));
      if (dist < best.value) {
        best.value = dist;
        best.vertex = v;
        best.edge = e;
      }
    }
  }
  if (best.edge < 0) throw NoNonIncidentPair("no (vertex, non-incident edge) pair");
  return best;
}

MfsResult min_feature_size_fast(const Drawing& d) {
  require_measurable(d);
  std::vector<Segment> segs;
  segs.reserve(static_cast<size_t>(d.edge_count()));
  for (int e = 0; e < d.edge_count(); ++e) segs.push_back(d.seg(e));
  SegmentTree tree(std::move(segs));

  MfsResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> exclude;
  for (int v = 0; v < d.vertex_count(); ++v) {
    exclude.assign(d.incident(v).begin(), d.incident(v).end());
    std::sort(exclude.begin(), exclude.end());
    const auto near = tree.nearest(d.pos(v), exclude);
    if (near.id < 0) continue;
    if (near.d < best.value || (near.d == best.value && v < best.vertex)) {
      best.value = near.d;
      best.vertex = v;
      best.edge = near.id;
    }
  }
  if (best.edge < 0) throw NoNonIncidentPair("no (vertex, non-incident edge) pair");
  return best;
}

MfsResult min_feature_size(const Drawing& d) {
  const long long work =
      static_cast<long long>(d.vertex_count()) * static_cast<long long>(d.edge_count());
  return work <= 4'000'000 ? min_feature_size_brute(d) : min_feature_size_fast(d);
}

namespace {

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

double diameter(const Drawing& d) {
  if (d.vertex_count() < 2) throw NoNonIncidentPair("diameter needs >= 2 vertices");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(d.vertex_count()));
  for (int v = 0; v < d.vertex_count(); ++v) pts.push_back(d.pos(v));
  const auto hull = convex_hull(std::move(pts));
  const size_t m = hull.size();
  if (m == 1) return 0.0;
  if (m == 2) return dist(hull[0], hull[1]);
  // Rotating calipers.
  double best = 0.0;
  size_t j = 1;
  for (size_t i = 0; i < m; ++i) {
    const Point edge = hull[(i + 1) % m] - hull[i];
    while (cross(edge, hull[(j + 1) % m] - hull[j]) > 0) j = (j + 1) % m;
    best = std::max(best, dist(hull[i], hull[j]));
    best = std::max(best, dist(hull[(i + 1) % m], hull[j]));
  }
  return best;
}

double spread(const Drawing& d) { return diameter(d) / min_feature_size(d).value; }

double degradation(const Drawing& original, const Drawing& refined) {
  return min_feature_size(original).value / min_feature_size(refined).value;
}

MetricsReport measure(const Drawing& d, const Drawing* reference) {
  MetricsReport r;
  const auto m = min_feature_size(d);
  r.mfs = m.value;
  r.witness_vertex = m.vertex;
  r.witness_edge = m.edge;
  r.diameter = diameter(d);
  r.spread = r.diameter / r.mfs;
  if (reference) r.degradation_vs = min_feature_size(*reference).value / r.mfs;
  return r;
}

std::vector<AngleViolation> audit_angle_bound(const Drawing& d,
                                              std::optional<double> claimed_mfs,
                                              const Tolerance& tol) {
  const double mfs = claimed_mfs ? *claimed_mfs : min_feature_size(d).value;
  std::vector<AngleViolation> out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto& adj = d.incident(v);
    const Point a = d.pos(v);
    for (size_t i = 0; i < adj.size(); ++i) {
      for (size_t j = i + 1; j < adj.size(); ++j) {
        const int b_idx = d.other_end(adj[i], v);
        const int c_idx = d.other_end(adj[j], v);
        if (b_idx == c_idx) continue;
        const Point db = d.pos(b_idx) - a;
        const Point dc = d.pos(c_idx) - a;
        const double lb = norm(db);
        const double lc = norm(dc);
        const double ang = std::atan2(std::abs(cross(db, dc)), dot(db, dc));
        const double min_len = std::min(lb, lc);
        if (ang * min_len < mfs - tol.eps_abs) {
          out.push_back({v, adj[i], adj[j], ang, min_len, mfs});
        }
      }
    }
  }
  return out;
}

std::map<int, int> classify_faces(const Drawing& d, const Tolerance& tol) {
  std::map<int, int> hist;
  for (const Face& f : extract_faces(d, tol)) {
    if (f.is_outer) continue;
    hist[f.corner_count]++;
  }
  return hist;
}

}  // namespace mfsquad
