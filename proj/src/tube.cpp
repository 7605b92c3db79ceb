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

//
// The construction lives in normalized units (mfs of the input polygon = 1).
// Inner wall at depth 2/5, outer wall 1/5 back out, so the tube has constant
// width 1/5 and every point of it is between 1/5 and 2/5 from the boundary.
// In this regime (offset depth < 1/2) the naive per-edge offset admits no
// topological events: non-adjacent edges of a unit-mfs polygon are at least 1
// apart, so their offsets at depth < 1/2 cannot meet. Collapses are still
// checked and raised as internal errors.
//

#include "mfsquad/tube.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mfsquad/drawing.hpp"
#include "mfsquad/metrics.hpp"

namespace mfsquad {

namespace {

constexpr double kPi = std::numbers::pi;

struct VertexGeom {
  Point p;
  Point dir_prev, dir_next;  // unit edge directions into and out of p
  Point m_prev, m_next;      // inward unit normals of those edges
  double turn = 0.0;         // signed exterior angle, in (-pi, pi]
  bool reflex = false;
};

std::vector<VertexGeom> vertex_geometry(const Polygon& p) {
  const int n = p.size();
  std::vector<VertexGeom> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    VertexGeom& g = out[static_cast<size_t>(i)];
    g.p = p.vertex(i);
    g.dir_prev = normalized(p.vertex(i) - p.vertex(i - 1));
    g.dir_next = normalized(p.vertex(i + 1) - p.vertex(i));
    g.m_prev = perp_left(g.dir_prev);
    g.m_next = perp_left(g.dir_next);
    g.turn = std::atan2(cross(g.dir_prev, g.dir_next), dot(g.dir_prev, g.dir_next));
    g.reflex = g.turn < 0.0;
  }
  return out;
}

Point miter_point(const VertexGeom& g, double t) {
  const Point s = g.m_prev + g.m_next;
  const double n2 = norm2(s);
  if (n2 < 1e-24) throw OffsetCollapse("miter at a needle vertex");
  return g.p + (2.0 * t / n2) * s;
}

Point unit(double ang) { return {std::cos(ang), std::sin(ang)}; }

// Sampled polyline of a closed loop, for self-intersection checks.
Polygon sample_loop(const OffsetLoop& loop) {
  Polygon poly;
  for (const OffsetPiece& piece : loop.pieces) {
    if (piece.kind == OffsetPiece::Kind::Segment) {
      poly.pts.push_back(piece.seg.a);
    } else {
      const double sw = piece.arc.sweep();
      const int k = std::max(2, static_cast<int>(std::ceil(sw / 0.2)));
      auto pts = arc_sample(piece.arc, k);
      pts.pop_back();  // endpoint belongs to the next piece
      poly.pts.insert(poly.pts.end(), pts.begin(), pts.end());
    }
  }
  return poly;
}

void check_loop_simple(const OffsetLoop& loop, const char* what) {
  const Polygon sampled = sample_loop(loop);
  if (sampled.size() < 3) throw OffsetCollapse(std::string(what) + ": loop degenerated");
  std::pair<int, int> bad;
  if (!polygon_is_simple(sampled, {}, &bad)) {
    throw OffsetCollapse(std::string(what) + ": loop self-intersects near piece " +
                         std::to_string(bad.first));
  }
}

// Outward radial direction (to the right of travel) at a piece endpoint.
Point radial_out(const OffsetPiece& piece, bool at_end) {
  Point tangent;
  if (piece.kind == OffsetPiece::Kind::Segment) {
    tangent = normalized(piece.seg.delta());
  } else {
    const double ang = at_end ? piece.arc.end_angle : piece.arc.start_angle;
    const Point radial = unit(ang);
    tangent = piece.arc.dir == ArcDir::CCW ? perp_left(radial) : -1.0 * perp_left(radial);
  }
  return -1.0 * perp_left(tangent);
}

}  // namespace

std::pair<Segment, Segment> Bend::doors() const {
  const Point u_in = unit(angle_in);
  const Point u_out = unit(angle_out);
  return {Segment{center + r_minor * u_in, center + r_greater * u_in},
          Segment{center + r_minor * u_out, center + r_greater * u_out}};
}

double Bend::region_distance(Point q) const {
  const Point rel = q - center;
  const double rad = norm(rel);
  const double ang = std::atan2(rel.y, rel.x);
  const double delta =
      normalize_angle(dir == ArcDir::CCW ? ang - angle_in : angle_in - ang);
  if (delta <= sweep_angle) {
    return std::max({r_minor - rad, rad - r_greater, 0.0});
  }
  const auto [door_in, door_out] = doors();
  return std::min(dist_point_segment(q, door_in), dist_point_segment(q, door_out));
}

std::pair<Polygon, double> normalize(const Polygon& p, const Tolerance& tol) {
  const Drawing d = polygon_drawing(p);
  const double mfs = min_feature_size(d).value;
  const double diam = diameter(d);
  if (!(mfs > tol.eps_abs * diam))
    throw DegeneratePolygon("minimum feature size is degenerate: " + std::to_string(mfs));
  Polygon out = p;
  for (Point& pt : out.pts) {
    pt.x /= mfs;
    pt.y /= mfs;
  }
  return {std::move(out), mfs};
}

OffsetLoop inward_offset(const Polygon& p, double t, const Tolerance& tol) {
  if (!(t > 0.0) || t >= 0.5) throw OffsetTooLarge("offset distance must be in (0, 1/2)");
  const auto geoms = vertex_geometry(p);
  const int n = p.size();

  OffsetLoop loop;
  loop.offset_distance = t;
  for (int i = 0; i < n; ++i) {
    const VertexGeom& gi = geoms[static_cast<size_t>(i)];
    const VertexGeom& gj = geoms[static_cast<size_t>(p.wrap(i + 1))];
    if (gi.reflex) {
      const double start = std::atan2(gi.m_prev.y, gi.m_prev.x);
      OffsetPiece arc;
      arc.kind = OffsetPiece::Kind::Arc;
      arc.arc = {gi.p, t, start, start + gi.turn, ArcDir::CW};
      arc.source = i;
      loop.pieces.push_back(arc);
    }
    const Point m = perp_left(gi.dir_next);
    const Point start = gi.reflex ? gi.p + t * m : miter_point(gi, t);
    const Point end = gj.reflex ? gj.p + t * m : miter_point(gj, t);
    const double proj = dot(end - start, gi.dir_next);
    const double edge_len = dist(gi.p, gj.p);
    if (proj < -tol.eps_abs * (1.0 + edge_len))
      throw OffsetCollapse("edge " + std::to_string(i) + " consumed by the offset");
    if (dist(start, end) <= tol.eps_abs) continue;
    OffsetPiece seg;
    seg.kind = OffsetPiece::Kind::Segment;
    seg.seg = {start, end};
    seg.source = i;
    loop.pieces.push_back(seg);
  }
  check_loop_simple(loop, "inward_offset");
  return loop;
}

OffsetLoop outward_offset(const OffsetLoop& loop, double t, const Tolerance& tol) {
  if (!(t > 0.0)) throw OffsetTooLarge("outward offset must be positive");
  OffsetLoop out;
  out.offset_distance = loop.offset_distance - t;

  const size_t m = loop.pieces.size();
  std::vector<OffsetPiece> shifted(m);
  for (size_t i = 0; i < m; ++i) {
    const OffsetPiece& piece = loop.pieces[i];
    OffsetPiece np = piece;
    if (piece.kind == OffsetPiece::Kind::Segment) {
      const Point mi = perp_left(normalized(piece.seg.delta()));
      np.seg = {piece.seg.a - t * mi, piece.seg.b - t * mi};
    } else {
      if (piece.arc.radius - t <= tol.eps_abs)
        throw OffsetCollapse("arc radius consumed by outward offset");
      np.arc.radius = piece.arc.radius - t;
    }
    shifted[i] = np;
  }

  for (size_t i = 0; i < m; ++i) {
    const size_t j = (i + 1) % m;
    out.pieces.push_back(shifted[i]);
    const Point ra = radial_out(loop.pieces[i], true);
    const Point rb = radial_out(loop.pieces[j], false);
    const double turn = std::atan2(cross(ra, rb), dot(ra, rb));
    if (turn > 1e-9) {
      // Convex loop corner: round with an arc about the old junction.
      const Point corner = loop.pieces[i].end();
      const double start = std::atan2(ra.y, ra.x);
      OffsetPiece arc;
      arc.kind = OffsetPiece::Kind::Arc;
      arc.arc = {corner, t, start, start + turn, ArcDir::CCW};
      arc.source = -1;
      out.pieces.push_back(arc);
    } else if (turn < -1e-9) {
      throw InternalError("outward_offset: reflex loop corner not supported");
    }
  }
  check_loop_simple(out, "outward_offset");
  return out;
}

TubeResult build_tube(const Polygon& p, const Tolerance& tol) {
  TubeResult tube;
  tube.polygon = p;
  tube.inner_wall = inward_offset(p, PipelineConstants::t_inner, tol);
  tube.outer_wall = outward_offset(tube.inner_wall, PipelineConstants::t_back, tol);

  const auto geoms = vertex_geometry(p);
  for (int i = 0; i < p.size(); ++i) {
    const VertexGeom& g = geoms[static_cast<size_t>(i)];
    Bend b;
    b.vertex_index = i;
    b.reflex = g.reflex;
    if (!g.reflex) {
      b.center = miter_point(g, PipelineConstants::t_inner);
      b.r_greater = PipelineConstants::t_back;
      b.r_minor = 0.0;
      b.angle_in = std::atan2(-g.m_prev.y, -g.m_prev.x);
      b.dir = ArcDir::CCW;
    } else {
      b.center = g.p;
      b.r_greater = PipelineConstants::t_inner;
      b.r_minor = PipelineConstants::t_back;
      b.angle_in = std::atan2(g.m_prev.y, g.m_prev.x);
      b.dir = ArcDir::CW;
    }
    b.angle_out = b.angle_in + g.turn;
    b.sweep_angle = std::abs(g.turn);
    if (b.sweep_angle > kPi + 1e-9)
      throw InternalError("bend sweep exceeds pi at vertex " + std::to_string(i));
    tube.bends.push_back(b);
  }
  return tube;
}

Track build_track(const TubeResult& tube, const Tolerance& tol) {
  Track track;
  const int n = static_cast<int>(tube.bends.size());
  track.bend_span.assign(static_cast<size_t>(n), {0.0, 0.0});

  auto track_radius = [](const Bend& b) { return b.r_greater - PipelineConstants::track_gap; };
  auto track_point = [&](const Bend& b, double ang) {
    return b.center + track_radius(b) * unit(ang);
  };

  double s = 0.0;
  auto push = [&](OffsetPiece geom, int bend) {
    TrackPiece tp;
    tp.geom = geom;
    tp.bend = bend;
    tp.s0 = s;
    s += geom.length();
    track.pieces.push_back(tp);
  };

  for (int i = 0; i < n; ++i) {
    const Bend& b = tube.bends[static_cast<size_t>(i)];
    const double s_begin = s;
    if (b.sweep_angle > 1e-12) {
      OffsetPiece arc;
      arc.kind = OffsetPiece::Kind::Arc;
      arc.arc = {b.center, track_radius(b), b.angle_in, b.angle_out, b.dir};
      arc.source = i;
      push(arc, i);
    }
    track.bend_span[static_cast<size_t>(i)] = {s_begin, s};

    const Bend& next = tube.bends[static_cast<size_t>((i + 1) % n)];
    const Point from = track_point(b, b.angle_out);
    const Point to = track_point(next, next.angle_in);
    if (dist(from, to) > tol.eps_abs) {
      OffsetPiece seg;
      seg.kind = OffsetPiece::Kind::Segment;
      seg.seg = {from, to};
      seg.source = -1;
      push(seg, -1);
    }
  }
  track.total_length = s;
  if (track.pieces.empty()) throw InternalError("empty track");

  OffsetLoop as_loop;
  for (const TrackPiece& tp : track.pieces) as_loop.pieces.push_back(tp.geom);
  try {
    check_loop_simple(as_loop, "build_track");
  } catch (const OffsetCollapse& e) {
    throw InternalError(e.what());
  }
  return track;
}

Point Track::point_at(double s) const {
  double u = std::fmod(s, total_length);
  if (u < 0.0) u += total_length;
  // Binary search the piece containing u.
  size_t lo = 0, hi = pieces.size();
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    if (pieces[mid].s0 <= u)
      lo = mid;
    else
      hi = mid;
  }
  const TrackPiece& tp = pieces[lo];
  const double local = u - tp.s0;
  if (tp.geom.kind == OffsetPiece::Kind::Segment) {
    const double len = tp.geom.seg.length();
    return tp.geom.seg.at(len > 0.0 ? local / len : 0.0);
  }
  return tp.geom.arc.point_at_angle(tp.geom.arc.angle_at(local));
}

double offset_distance_error(const OffsetLoop& loop, const Polygon& p, int samples) {
  double total = 0.0;
  for (const OffsetPiece& piece : loop.pieces) total += piece.length();
  double worst = 0.0;
  const double nominal = std::abs(loop.offset_distance);
  for (const OffsetPiece& piece : loop.pieces) {
    const int k = std::max(1, static_cast<int>(std::round(samples * piece.length() / total)));
    for (int i = 0; i <= k; ++i) {
      Point pt;
      if (piece.kind == OffsetPiece::Kind::Segment) {
        pt = piece.seg.at(static_cast<double>(i) / k);
      } else {
        const double sw = piece.arc.sweep();
        const double step = (piece.arc.dir == ArcDir::CCW ? sw : -sw) / k;
        pt = piece.arc.point_at_angle(piece.arc.start_angle + step * i);
      }
      worst = std::max(worst, std::abs(p.boundary_distance(pt) - nominal));
    }
  }
  return worst;
}

}  // namespace mfsquad
