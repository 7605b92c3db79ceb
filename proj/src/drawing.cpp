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

#include "mfsquad/drawing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "mfsquad/segment_tree.hpp"

namespace mfsquad {

int Drawing::add_vertex(Point p, VertexRole role) {
  if (!is_finite(p)) throw InternalError("add_vertex: non-finite point");
  vertices_.push_back({p, role});
  finalized_ = false;
  return static_cast<int>(vertices_.size()) - 1;
}

void Drawing::add_edge(int a, int b, EdgeRole role) {
  if (a == b) throw InternalError("add_edge: self loop");
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw InternalError("add_edge: vertex index out of range");
  edges_.push_back({a, b, role});
  finalized_ = false;
}

void Drawing::finalize() {
  // Merge duplicate edges, keeping the first occurrence's role.
  std::vector<Edge> merged;
  merged.reserve(edges_.size());
  std::unordered_map<long long, int> seen;
  seen.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    const long long lo = std::min(e.a, e.b);
    const long long hi = std::max(e.a, e.b);
    const long long key = lo * static_cast<long long>(vertex_count()) + hi;
    if (seen.emplace(key, 1).second) merged.push_back(e);
  }
  edges_ = std::move(merged);

  adjacency_.assign(vertices_.size(), {});
  for (size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[static_cast<size_t>(edges_[e].a)].push_back(static_cast<int>(e));
    adjacency_[static_cast<size_t>(edges_[e].b)].push_back(static_cast<int>(e));
  }
  for (int v = 0; v < vertex_count(); ++v) {
    auto& adj = adjacency_[static_cast<size_t>(v)];
    std::sort(adj.begin(), adj.end(), [&](int e1, int e2) {
      const Point d1 = pos(other_end(e1, v)) - pos(v);
      const Point d2 = pos(other_end(e2, v)) - pos(v);
      const double a1 = std::atan2(d1.y, d1.x);
      const double a2 = std::atan2(d2.y, d2.x);
      if (a1 != a2) return a1 < a2;
      return e1 < e2;
    });
  }
  finalized_ = true;
}

bool ValidationReport::has(ValidationFinding::Kind k) const {
  return std::any_of(findings.begin(), findings.end(),
                     [&](const ValidationFinding& f) { return f.kind == k; });
}

std::string ValidationReport::summary() const {
  if (findings.empty()) return "ok";
  std::string s;
  for (const auto& f : findings) {
    if (!s.empty()) s += "; ";
    s += f.detail;
  }
  return s;
}

Drawing build_drawing(const std::vector<Point>& pts,
                      const std::vector<std::pair<int, int>>& edges, bool validate_flag,
                      const Tolerance& tol) {
  Drawing d;
  for (const Point& p : pts) d.add_vertex(p);
  for (const auto& [a, b] : edges) d.add_edge(a, b);
  d.finalize();
  if (validate_flag) {
    const ValidationReport rep = validate(d, tol);
    for (const auto& f : rep.findings) {
      if (f.kind == ValidationFinding::Kind::Crossing) throw CrossingEdges(f.detail);
      if (f.kind == ValidationFinding::Kind::DuplicateVertex) throw DuplicateVertex(f.detail);
    }
  }
  return d;
}

Drawing polygon_drawing(const Polygon& p) {
  Drawing d;
  for (const Point& pt : p.pts) d.add_vertex(pt);
  for (int i = 0; i < p.size(); ++i) d.add_edge(i, p.wrap(i + 1), EdgeRole::BoundaryP);
  d.finalize();
  return d;
}

std::vector<Face> extract_faces(const Drawing& d, const Tolerance& tol) {
  if (!d.finalized()) throw InternalError("extract_faces: drawing not finalized");
  const int E = d.edge_count();
  // Directed edge id: 2*e for a->b, 2*e+1 for b->a.
  std::vector<char> visited(static_cast<size_t>(2 * E), 0);
  // Position of each directed edge in the CCW-sorted adjacency of its tail.
  std::vector<int> pos_in_adj(static_cast<size_t>(2 * E), -1);
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto& adj = d.incident(v);
    for (size_t k = 0; k < adj.size(); ++k) {
      const int e = adj[k];
      const int dir = d.edge(e).a == v ? 0 : 1;
      pos_in_adj[static_cast<size_t>(2 * e + dir)] = static_cast<int>(k);
    }
  }

  std::vector<Face> faces;
  for (int start = 0; start < 2 * E; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    Face face;
    int cur = start;
    do {
      visited[static_cast<size_t>(cur)] = 1;
      const int e = cur / 2;
      const int tail = (cur % 2 == 0) ? d.edge(e).a : d.edge(e).b;
      const int head = d.other_end(e, tail);
      face.vertices.push_back(tail);
      face.edges.push_back(e);
      // Arriving at head along e; leave along the edge clockwise-next from
      // the reverse direction (interior stays on the left).
      const int rev = 2 * e + (cur % 2 == 0 ? 1 : 0);
      const auto& adj = d.incident(head);
      const int k = pos_in_adj[static_cast<size_t>(rev)];
      const int next_k = (k - 1 + static_cast<int>(adj.size())) % static_cast<int>(adj.size());
      const int ne = adj[static_cast<size_t>(next_k)];
      const int ndir = d.edge(ne).a == head ? 0 : 1;
      cur = 2 * ne + ndir;
    } while (cur != start);

    const size_t m = face.vertices.size();
    double area = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const Point a = d.pos(face.vertices[i]);
      const Point b = d.pos(face.vertices[(i + 1) % m]);
      area += cross(a, b);
    }
    face.signed_area = 0.5 * area;
    face.is_outer = face.signed_area < 0.0;
    for (size_t i = 0; i < m; ++i) {
      const Point prev = d.pos(face.vertices[(i + m - 1) % m]);
      const Point v = d.pos(face.vertices[i]);
      const Point next = d.pos(face.vertices[(i + 1) % m]);
      if (orient(prev, v, next, tol) != 0) ++face.corner_count;
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

namespace {

// Union-find over vertex ids.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

constexpr size_t kMaxFindings = 64;

}  // namespace

ValidationReport validate(const Drawing& d, const Tolerance& tol) {
  ValidationReport rep;
  if (!d.finalized()) throw InternalError("validate: drawing not finalized");
  const int V = d.vertex_count();
  const int E = d.edge_count();

  // Duplicate vertices via grid hashing with cell size max(eps, tiny).
  {
    const double cell = std::max(tol.eps_abs, 1e-300);
    std::unordered_map<long long, std::vector<int>> grid;
    grid.reserve(static_cast<size_t>(V) * 2);
    auto key = [&](long long ix, long long iy) { return ix * 2654435761LL + iy; };
    for (int v = 0; v < V; ++v) {
      const Point p = d.pos(v);
      const long long ix = static_cast<long long>(std::floor(p.x / cell));
      const long long iy = static_cast<long long>(std::floor(p.y / cell));
      for (long long dx = -1; dx <= 1; ++dx) {
        for (long long dy = -1; dy <= 1; ++dy) {
          auto it = grid.find(key(ix + dx, iy + dy));
          if (it == grid.end()) continue;
          for (int u : it->second) {
            if (dist(d.pos(u), p) < tol.eps_abs && rep.findings.size() < kMaxFindings) {
              rep.findings.push_back({ValidationFinding::Kind::DuplicateVertex, u, v,
                                      "duplicate vertices " + std::to_string(u) + " and " +
                                          std::to_string(v)});
            }
          }
        }
      }
      grid[key(ix, iy)].push_back(v);
    }
  }

  // Dangling edges / isolated vertices.
  for (int v = 0; v < V; ++v) {
    const size_t deg = d.incident(v).size();
    if (deg < 2 && rep.findings.size() < kMaxFindings) {
      rep.findings.push_back({ValidationFinding::Kind::DanglingEdge, v, -1,
                              "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(deg)});
    }
  }

  // Pairwise crossings via the AABB tree. Edges sharing an endpoint index may
  // touch only there; everything else must be disjoint.
  {
    std::vector<Segment> segs;
    segs.reserve(static_cast<size_t>(E));
    for (int e = 0; e < E; ++e) segs.push_back(d.seg(e));
    SegmentTree tree(std::move(segs));
    std::vector<int> hits;
    for (int e = 0; e < E && rep.findings.size() < kMaxFindings; ++e) {
      const Segment se = d.seg(e);
      hits.clear();
      tree.query_box(std::min(se.a.x, se.b.x), std::min(se.a.y, se.b.y),
                     std::max(se.a.x, se.b.x), std::max(se.a.y, se.b.y), tol.eps_abs,
                     hits);
      for (int f : hits) {
        if (f <= e) continue;
        const Drawing::Edge& ee = d.edge(e);
        const Drawing::Edge& ef = d.edge(f);
        const bool share = ee.a == ef.a || ee.a == ef.b || ee.b == ef.a || ee.b == ef.b;
        const auto r = segment_intersection(se, d.seg(f), tol);
        bool bad = false;
        std::string why;
        if (share) {
          if (r.kind == SegmentIntersection::Kind::Overlap) {
            bad = true;
            why = "collinear overlap";
          }
        } else if (r.kind == SegmentIntersection::Kind::Overlap) {
          bad = true;
          why = "collinear overlap";
        } else if (r.kind == SegmentIntersection::Kind::Point) {
          bad = true;
          why = r.touching ? "endpoint touches edge interior" : "proper crossing";
        }
        if (bad && rep.findings.size() < kMaxFindings) {
          rep.findings.push_back({ValidationFinding::Kind::Crossing, e, f,
                                  "edges " + std::to_string(e) + " and " +
                                      std::to_string(f) + ": " + why});
        }
      }
    }
  }

  // Connectivity and per-component Euler check (skip if the geometry is
  // already known to be broken; face extraction assumes planarity).
  if (!rep.has(ValidationFinding::Kind::Crossing)) {
    Dsu dsu(V);
    for (int e = 0; e < E; ++e) dsu.unite(d.edge(e).a, d.edge(e).b);
    std::map<int, std::array<int, 3>> comp;  // root -> {V, E, F}
    for (int v = 0; v < V; ++v) comp[dsu.find(v)][0]++;
    for (int e = 0; e < E; ++e) comp[dsu.find(d.edge(e).a)][1]++;
    if (comp.size() > 1) {
      rep.findings.push_back({ValidationFinding::Kind::Disconnected, -1, -1,
                              "drawing has " + std::to_string(comp.size()) +
                                  " connected components"});
    }
    if (E > 0) {
      const auto faces = extract_faces(d, tol);
      for (const Face& f : faces) comp[dsu.find(f.vertices.front())][2]++;
      for (const auto& [root, vef] : comp) {
        if (vef[1] == 0) continue;  // isolated vertex, already reported
        if (vef[0] - vef[1] + vef[2] != 2) {
          rep.findings.push_back(
              {ValidationFinding::Kind::EulerMismatch, root, -1,
               "component at vertex " + std::to_string(root) + ": V-E+F = " +
                   std::to_string(vef[0] - vef[1] + vef[2]) + " != 2"});
        }
      }
    }
  }
  return rep;
}

}  // namespace mfsquad
