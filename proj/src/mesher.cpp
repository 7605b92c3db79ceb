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

#include "mfsquad/mesher.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mfsquad/metrics.hpp"

namespace mfsquad {

namespace {

// Strictly-interior test for a horizontal direction at an inner-polygon
// vertex, exact in lattice integer arithmetic. The interior wedge runs CCW
// from the outgoing edge direction to the reversed incoming direction.
bool horizontal_ray_interior(long ax, long ay, long bx, long by, bool leftward) {
  // a = outgoing direction, b = reversed incoming direction, h = ray.
  const long hx = leftward ? -1 : 1;
  const auto cross2 = [](long ux, long uy, long vx, long vy) -> __int128 {
    return static_cast<__int128>(ux) * vy - static_cast<__int128>(uy) * vx;
  };
  const __int128 c_ab = cross2(ax, ay, bx, by);
  const __int128 c_ah = cross2(ax, ay, hx, 0);
  const __int128 c_hb = cross2(hx, 0, bx, by);
  if (c_ab > 0) return c_ah > 0 && c_hb > 0;
  if (c_ab < 0) return c_ah > 0 || c_hb > 0;
  // Collinear edge directions: wedge is exactly pi (pass-through vertex) or
  // degenerate (spike, excluded by simplicity).
  const __int128 d_ab = static_cast<__int128>(ax) * bx + static_cast<__int128>(ay) * by;
  if (d_ab < 0) return c_ah > 0;
  return false;
}

}  // namespace

TrapResult trapezoidate(const InnerPolygon& inner) {
  constexpr double g = PipelineConstants::grid_step;
  const int m = inner.size();
  TrapResult out;
  if (m < 3) return out;

  // Row occupancy: vertices per lattice row.
  std::unordered_map<long, std::vector<int>> row_vertices;
  row_vertices.reserve(static_cast<size_t>(m) * 2);
  for (int i = 0; i < m; ++i) row_vertices[inner.v[static_cast<size_t>(i)].iy].push_back(i);

  // Crossings of edges with occupied rows strictly inside their y-span.
  struct Crossing {
    double x;
    int edge;
  };
  std::unordered_map<long, std::vector<Crossing>> row_crossings;
  for (int e = 0; e < m; ++e) {
    const InnerVertex& a = inner.v[static_cast<size_t>(e)];
    const InnerVertex& b = inner.v[static_cast<size_t>(inner.wrap(e + 1))];
    const long lo = std::min(a.iy, b.iy);
    const long hi = std::max(a.iy, b.iy);
    for (long r = lo + 1; r < hi; ++r) {
      auto it = row_vertices.find(r);
      if (it == row_vertices.end()) continue;
      const double y = r * g;
      const double x = a.p.x + (y - a.p.y) * (b.p.x - a.p.x) / (b.p.y - a.p.y);
      row_crossings[r].push_back({x, e});
    }
  }
  for (auto& [row, list] : row_crossings) {
    std::sort(list.begin(), list.end(), [](const Crossing& a, const Crossing& b) {
      return a.x != b.x ? a.x < b.x : a.edge < b.edge;
    });
  }

  std::map<std::pair<int, long>, int> new_vertex_ids;  // (edge, row) -> id
  std::set<std::pair<int, int>> vertex_chords;         // dedup for vertex-vertex chords

  auto shoot = [&](int vi, bool leftward) {
    const InnerVertex& v = inner.v[static_cast<size_t>(vi)];
    const long row = v.iy;
    const double vx = v.p.x;

    // Nearest boundary contact strictly on the ray side: a same-row vertex or
    // an edge crossing, whichever is closer.
    double best_x = leftward ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
    int hit_vertex = -1;
    int hit_edge = -1;
    auto consider = [&](double x, int vert, int edge) {
      const bool closer = leftward ? (x < vx && x > best_x) : (x > vx && x < best_x);
      if (!closer) return;
      best_x = x;
      hit_vertex = vert;
      hit_edge = edge;
    };
    for (int u : row_vertices[row]) {
      if (u == vi) continue;
      consider(inner.v[static_cast<size_t>(u)].p.x, u, -1);
    }
    auto it = row_crossings.find(row);
    if (it != row_crossings.end()) {
      for (const Crossing& c : it->second) consider(c.x, -1, c.edge);
    }
    if (hit_vertex < 0 && hit_edge < 0)
      throw InternalError("trapezoidate: interior ray found no boundary");

    TrapChord chord;
    chord.row = row;
    chord.source_vertex = vi;
    chord.a = {false, vi};
    if (hit_vertex >= 0) {
      const auto key = std::minmax(vi, hit_vertex);
      if (!vertex_chords.insert({key.first, key.second}).second) return;
      chord.b = {false, hit_vertex};
    } else {
      const auto key = std::make_pair(hit_edge, row);
      auto found = new_vertex_ids.find(key);
      int id;
      if (found == new_vertex_ids.end()) {
        id = static_cast<int>(out.new_vertices.size());
        out.new_vertices.push_back({hit_edge, best_x, row});
        new_vertex_ids.emplace(key, id);
      } else {
        id = found->second;
      }
      chord.b = {true, id};
    }
    out.chords.push_back(chord);
  };

  for (int i = 0; i < m; ++i) {
    const InnerVertex& prev = inner.v[static_cast<size_t>(inner.wrap(i - 1))];
    const InnerVertex& cur = inner.v[static_cast<size_t>(i)];
    const InnerVertex& next = inner.v[static_cast<size_t>(inner.wrap(i + 1))];
    const long ax = next.ix - cur.ix, ay = next.iy - cur.iy;
    const long bx = prev.ix - cur.ix, by = prev.iy - cur.iy;
    if (horizontal_ray_interior(ax, ay, bx, by, true)) shoot(i, true);
    if (horizontal_ray_interior(ax, ay, bx, by, false)) shoot(i, false);
  }
  return out;
}

ChordSet bend_chords(const Polygon& p, const InnerPolygon& inner, const Tolerance& tol) {
  const int n = p.size();
  std::vector<std::vector<int>> groups(static_cast<size_t>(n));
  for (int i = 0; i < inner.size(); ++i) {
    const int b = inner.v[static_cast<size_t>(i)].bend;
    if (b < 0 || b >= n) throw InternalError("inner vertex without bend membership");
    groups[static_cast<size_t>(b)].push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    if (groups[static_cast<size_t>(i)].empty())
      throw InternalError("bend " + std::to_string(i) + " has no Steiner vertex");
  }

  ChordSet out;
  std::set<std::pair<int, int>> apex_seen;
  std::set<std::pair<int, int>> link_seen;
  for (int i = 0; i < n; ++i) {
    const Point apex = p.vertex(i);
    const auto& group = groups[static_cast<size_t>(i)];
    for (int target : group) {
      const Point tp = inner.pos(target);
      // Collect same-bend Steiner vertices lying on the open segment
      // (possible after snapping); the chord is split at each of them.
      std::vector<std::pair<double, int>> stops;
      const Point d = tp - apex;
      const double len2 = norm2(d);
      for (int other : group) {
        if (other == target) continue;
        const Point q = inner.pos(other);
        if (orient(apex, q, tp, tol) != 0) continue;
        const double t = dot(q - apex, d) / len2;
        if (t > tol.eps_abs && t < 1.0 - tol.eps_abs) stops.push_back({t, other});
      }
      std::sort(stops.begin(), stops.end());
      if (stops.empty()) {
        if (apex_seen.insert({i, target}).second) out.apex.push_back({i, target});
        continue;
      }
      const int first = stops.front().second;
      if (apex_seen.insert({i, first}).second) out.apex.push_back({i, first});
      int prev = first;
      for (size_t k = 1; k < stops.size(); ++k) {
        const auto key = std::minmax(prev, stops[k].second);
        if (link_seen.insert({key.first, key.second}).second)
          out.links.push_back({prev, stops[k].second});
        prev = stops[k].second;
      }
      const auto key = std::minmax(prev, target);
      if (link_seen.insert({key.first, key.second}).second)
        out.links.push_back({prev, target});
    }
  }
  return out;
}

namespace {

Mesh assemble(const Polygon& pn, const InnerPolygon& inner, const ChordSet& chords,
              const TrapResult& trap, const Tolerance& tol) {
  constexpr double g = PipelineConstants::grid_step;
  const int n = pn.size();
  const int m = inner.size();

  Drawing d;
  for (int i = 0; i < n; ++i) d.add_vertex(pn.vertex(i), VertexRole::Original);
  for (int i = 0; i < m; ++i) d.add_vertex(inner.pos(i), VertexRole::SteinerInner);
  std::vector<int> trap_ids(trap.new_vertices.size());
  for (size_t i = 0; i < trap.new_vertices.size(); ++i) {
    const TrapNewVertex& tv = trap.new_vertices[i];
    trap_ids[i] = d.add_vertex({tv.x, tv.row * g}, VertexRole::SteinerTrap);
  }

  auto inner_id = [&](int i) { return n + i; };
  auto endpoint_id = [&](const TrapEndpoint& ep) {
    return ep.is_new ? trap_ids[static_cast<size_t>(ep.idx)] : inner_id(ep.idx);
  };

  for (int i = 0; i < n; ++i) d.add_edge(i, pn.wrap(i + 1), EdgeRole::BoundaryP);

  // Inner edges, split at the trapezoidation's new vertices. Crossings on an
  // edge sit on distinct rows, so the row orders them exactly.
  std::vector<std::vector<std::pair<long, int>>> splits(static_cast<size_t>(m));
  for (size_t i = 0; i < trap.new_vertices.size(); ++i) {
    const TrapNewVertex& tv = trap.new_vertices[i];
    splits[static_cast<size_t>(tv.edge)].push_back({tv.row, trap_ids[i]});
  }
  for (int e = 0; e < m; ++e) {
    auto& list = splits[static_cast<size_t>(e)];
    const long ya = inner.v[static_cast<size_t>(e)].iy;
    const long yb = inner.v[static_cast<size_t>(inner.wrap(e + 1))].iy;
    std::sort(list.begin(), list.end());
    if (yb < ya) std::reverse(list.begin(), list.end());
    int prev = inner_id(e);
    for (const auto& [row, id] : list) {
      d.add_edge(prev, id, EdgeRole::InnerP);
      prev = id;
    }
    d.add_edge(prev, inner_id(inner.wrap(e + 1)), EdgeRole::InnerP);
  }

  for (const auto& [pi, aj] : chords.apex) d.add_edge(pi, inner_id(aj), EdgeRole::Chord);
  for (const auto& [a, b] : chords.links) d.add_edge(inner_id(a), inner_id(b), EdgeRole::Chord);
  for (const TrapChord& tc : trap.chords)
    d.add_edge(endpoint_id(tc.a), endpoint_id(tc.b), EdgeRole::Trapezoid);

  d.finalize();

  const ValidationReport rep = validate(d, tol);
  for (const auto& f : rep.findings) {
    if (f.kind != ValidationFinding::Kind::Crossing) continue;
    const EdgeRole ra = d.edge(f.a).role;
    const EdgeRole rb = d.edge(f.b).role;
    if (ra == EdgeRole::Chord || rb == EdgeRole::Chord)
      throw ChordCrossing("mesh assembly: " + f.detail);
    if (ra == EdgeRole::InnerP || rb == EdgeRole::InnerP)
      throw SelfIntersectingInner("mesh assembly: " + f.detail);
    throw InternalError("mesh assembly: " + f.detail);
  }
  if (!rep.empty()) throw InternalError("mesh assembly: " + rep.summary());

  Mesh mesh;
  mesh.drawing = std::move(d);
  mesh.faces = extract_faces(mesh.drawing, tol);
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const Face& face = mesh.faces[f];
    if (face.is_outer) continue;
    bool zone = false;
    for (int e : face.edges) {
      const EdgeRole r = mesh.drawing.edge(e).role;
      if (r == EdgeRole::BoundaryP || r == EdgeRole::Chord) {
        zone = true;
        break;
      }
    }
    (zone ? mesh.zone_faces : mesh.trap_faces).push_back(static_cast<int>(f));
  }
  mesh.input_size = n;
  mesh.steiner_inner = m;
  mesh.steiner_trap = static_cast<int>(trap.new_vertices.size());
  return mesh;
}

}  // namespace

PipelineTrace quadrangulate_traced(const Polygon& p, const Tolerance& tol) {
  PipelineTrace trace;
  trace.input = p;
  if (trace.input.size() < 3) throw DegeneratePolygon("polygon needs at least 3 vertices");
  if (!trace.input.is_ccw()) trace.input.reverse();
  std::pair<int, int> bad;
  if (!polygon_is_simple(trace.input, tol, &bad)) {
    throw NotSimple("polygon edges " + std::to_string(bad.first) + " and " +
                    std::to_string(bad.second) + " intersect");
  }

  std::tie(trace.normalized, trace.scale) = normalize(trace.input, tol);
  trace.tube = build_tube(trace.normalized, tol);
  trace.track = build_track(trace.tube, tol);
  trace.slots = place_circles(trace.track, trace.tube.bends, tol);
  trace.inner = snap_to_grid(trace.slots, tol);
  trace.chords = bend_chords(trace.normalized, trace.inner, tol);
  trace.trap = trapezoidate(trace.inner);
  trace.mesh = assemble(trace.normalized, trace.inner, trace.chords, trace.trap, tol);

  // Rescale to the original units; original vertices take their exact input
  // coordinates back.
  Mesh& mesh = trace.mesh;
  mesh.scale = trace.scale;
  for (int v = 0; v < mesh.drawing.vertex_count(); ++v)
    mesh.drawing.set_pos(v, trace.scale * mesh.drawing.pos(v));
  for (int i = 0; i < trace.input.size(); ++i) mesh.drawing.set_pos(i, trace.input.vertex(i));
  for (Face& f : mesh.faces) f.signed_area *= trace.scale * trace.scale;
  return trace;
}

Mesh quadrangulate(const Polygon& p, const Tolerance& tol) {
  return std::move(quadrangulate_traced(p, tol).mesh);
}

}  // namespace mfsquad
