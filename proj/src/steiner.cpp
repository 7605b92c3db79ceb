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

#include "mfsquad/steiner.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

namespace mfsquad {

Polygon InnerPolygon::polygon() const {
  Polygon poly;
  poly.pts.reserve(v.size());
  for (const InnerVertex& iv : v) poly.pts.push_back(iv.p);
  return poly;
}

namespace {

// Assigns a slot to a bend when its circle intersects the bend region.
// Only the two bends flanking the slot's stretch can be hit.
int membership(Point center, double radius, int bend_a, int bend_b,
               const std::vector<Bend>& bends, const Tolerance& tol) {
  const double da = bends[static_cast<size_t>(bend_a)].region_distance(center);
  const double db = bends[static_cast<size_t>(bend_b)].region_distance(center);
  const bool hit_a = da <= radius + tol.eps_rel;
  const bool hit_b = db <= radius + tol.eps_rel;
  if (!hit_a && !hit_b) return -1;
  if (hit_a && hit_b) return da <= db ? bend_a : bend_b;
  return hit_a ? bend_a : bend_b;
}

std::vector<CircleSlot> fill_track(const Track& track, const std::vector<Bend>& bends,
                                   const Tolerance& tol, bool delete_non_bend) {
  const int n = static_cast<int>(bends.size());
  const double step_max = PipelineConstants::circle_diam + PipelineConstants::spacing_max;

  std::vector<double> anchor_s(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto [s0, s1] = track.bend_span[static_cast<size_t>(i)];
    anchor_s[static_cast<size_t>(i)] = 0.5 * (s0 + s1);
  }

  std::vector<CircleSlot> slots;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const double a = anchor_s[static_cast<size_t>(i)];
    double b = anchor_s[static_cast<size_t>(j)];
    if (j == 0) b += track.total_length;
    const double stretch = b - a;
    const int m = std::max(1, static_cast<int>(std::ceil(stretch / step_max - 1e-12)));
    const double spacing = stretch / m;
    for (int k = 0; k < m; ++k) {
      CircleSlot slot;
      slot.s = a + spacing * k;
      slot.center = track.point_at(slot.s);
      slot.anchor = k == 0;
      if (slot.anchor) {
        slot.bend = i;
      } else {
        slot.bend = membership(slot.center, PipelineConstants::circle_radius, i, j, bends, tol);
        if (delete_non_bend && slot.bend < 0) continue;
      }
      slots.push_back(slot);
    }
  }
  return slots;
}

}  // namespace

std::vector<CircleSlot> place_circles(const Track& track, const std::vector<Bend>& bends,
                                      const Tolerance& tol) {
  return fill_track(track, bends, tol, true);
}

std::vector<CircleSlot> place_circles_all(const Track& track,
                                          const std::vector<Bend>& bends,
                                          const Tolerance& tol) {
  return fill_track(track, bends, tol, false);
}

InnerPolygon snap_to_grid(const std::vector<CircleSlot>& slots, const Tolerance& tol) {
  constexpr double g = PipelineConstants::grid_step;
  InnerPolygon inner;
  inner.v.reserve(slots.size());

  for (size_t i = 0; i < slots.size(); ++i) {
    const Point c = slots[i].center;
    const long x0 = static_cast<long>(std::floor(c.x / g));
    const long y0 = static_cast<long>(std::floor(c.y / g));
    long best_ix = 0, best_iy = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (long dx = 0; dx <= 1; ++dx) {
      for (long dy = 0; dy <= 1; ++dy) {
        const long ix = x0 + dx;
        const long iy = y0 + dy;
        const Point p{ix * g, iy * g};
        const double d2 = dist2(p, c);
        const bool tie = std::abs(d2 - best_d2) <= tol.eps_rel * g * g;
        const bool better =
            d2 < best_d2 - tol.eps_rel * g * g ||
            (tie && (ix < best_ix || (ix == best_ix && iy < best_iy)));
        if (better) {
          best_d2 = d2;
          best_ix = ix;
          best_iy = iy;
        }
      }
    }
    const double d = std::sqrt(best_d2);
    if (d >= PipelineConstants::circle_radius - 1e-12) {
      throw GridPointOutsideCircle("snapped point " + std::to_string(d) +
                                   " from circle center " + std::to_string(i));
    }
    InnerVertex iv;
    iv.ix = best_ix;
    iv.iy = best_iy;
    iv.p = {best_ix * g, best_iy * g};
    iv.slot = static_cast<int>(i);
    iv.bend = slots[i].bend;
    inner.v.push_back(iv);
  }

  if (inner.size() < 3) throw SelfIntersectingInner("inner polygon has fewer than 3 vertices");

  // Distinct lattice points.
  std::unordered_set<long long> seen;
  seen.reserve(inner.v.size() * 2);
  for (const InnerVertex& iv : inner.v) {
    const long long key = iv.ix * 4000037LL + iv.iy;
    if (!seen.insert(key).second)
      throw SelfIntersectingInner("two circles snapped to the same grid point");
  }

  std::pair<int, int> bad;
  if (!polygon_is_simple(inner.polygon(), tol, &bad)) {
    throw SelfIntersectingInner("inner polygon self-intersects at edges " +
                                std::to_string(bad.first) + "/" +
                                std::to_string(bad.second));
  }
  return inner;
}

SeparationReport separation_certificate(const Polygon& p, const InnerPolygon& inner) {
  SeparationReport rep;
  rep.min_boundary = std::numeric_limits<double>::infinity();
  rep.min_pairwise = std::numeric_limits<double>::infinity();
  rep.min_cross_bend = std::numeric_limits<double>::infinity();

  for (int i = 0; i < inner.size(); ++i) {
    const double d = p.boundary_distance(inner.pos(i));
    if (d < rep.min_boundary) {
      rep.min_boundary = d;
      rep.boundary_vertex = i;
    }
  }
  for (int i = 0; i < inner.size(); ++i) {
    for (int j = i + 1; j < inner.size(); ++j) {
      const double d = dist(inner.pos(i), inner.pos(j));
      if (d < rep.min_pairwise) {
        rep.min_pairwise = d;
        rep.pair_a = i;
        rep.pair_b = j;
      }
      if (inner.v[static_cast<size_t>(i)].bend != inner.v[static_cast<size_t>(j)].bend &&
          d < rep.min_cross_bend) {
        rep.min_cross_bend = d;
        rep.cross_a = i;
        rep.cross_b = j;
      }
    }
  }
  return rep;
}

}  // namespace mfsquad
