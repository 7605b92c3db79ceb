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

#include <cstdio>
#include <limits>
#include <string>

#include "mfsquad/io.hpp"
#include "mfsquad/tube.hpp"

namespace mfsquad {

namespace {

constexpr int kArcSamples = 64;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void line(std::string& out, Point a, Point b, const char* cls) {
  out += "  <line class=\"";
  out += cls;
  out += "\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
         "\" y2=\"" + num(b.y) + "\"/>\n";
}

void polyline(std::string& out, const std::vector<Point>& pts, const char* cls) {
  out += "  <polyline class=\"";
  out += cls;
  out += "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += num(pts[i].x) + "," + num(pts[i].y);
  }
  out += "\"/>\n";
}

void loop_overlay(std::string& out, const OffsetLoop& loop, double scale,
                  const char* cls) {
  for (const OffsetPiece& piece : loop.pieces) {
    if (piece.kind == OffsetPiece::Kind::Segment) {
      line(out, scale * piece.seg.a, scale * piece.seg.b, cls);
    } else {
      auto pts = arc_sample(piece.arc, kArcSamples);
      for (Point& p : pts) p = scale * p;
      polyline(out, pts, cls);
    }
  }
}

}  // namespace

void render_svg(const MeshFileData& data, const std::string& out_path,
                const RenderOptions& options) {
  const Drawing& d = data.drawing;
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const Point p = d.pos(v);
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
  const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= margin;
  ymin -= margin;
  xmax += margin;
  ymax += margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(xmin) + " " +
         num(ymin) + " " + num(xmax - xmin) + " " + num(ymax - ymin) + "\">\n";
  const double stroke = 0.002 * std::max(xmax - xmin, ymax - ymin);
  out += "<style>\n";
  out += "  line, polyline { fill: none; stroke-width: " + num(stroke) + "; }\n";
  out += "  .p-edge { stroke: #000000; }\n";
  out += "  .inner-edge { stroke: #1f77b4; }\n";
  out += "  .chord-edge { stroke: #2ca02c; }\n";
  out += "  .trap-edge { stroke: #d62728; }\n";
  out += "  .tube-greater { stroke: #9467bd; }\n";
  out += "  .tube-minor { stroke: #8c564b; }\n";
  out += "  .tube-door { stroke: #e377c2; }\n";
  out += "  .tube-wall { stroke: #c5b0d5; }\n";
  out += "  .track-line { stroke: #ff7f0e; }\n";
  out += "</style>\n";
  // Flip y so the drawing appears with +y up.
  out += "<g transform=\"translate(0," + num(ymin + ymax) + ") scale(1,-1)\">\n";

  for (int e = 0; e < d.edge_count(); ++e) {
    const Segment s = d.seg(e);
    const char* cls = "p-edge";
    switch (d.edge(e).role) {
      case EdgeRole::BoundaryP: cls = "p-edge"; break;
      case EdgeRole::InnerP: cls = "inner-edge"; break;
      case EdgeRole::Chord: cls = "chord-edge"; break;
      case EdgeRole::Trapezoid: cls = "trap-edge"; break;
      case EdgeRole::DoorFree: cls = "p-edge"; break;
    }
    line(out, s.a, s.b, cls);
  }

  if (options.show_tube || options.show_track) {
    // The tube is rebuilt in normalized units from the stored boundary and
    // drawn scaled back to the mesh units.
    const Polygon original = mesh_file_polygon(data);
    const auto [normalized, scale] = normalize(original);
    const TubeResult tube = build_tube(normalized);
    if (options.show_tube) {
      loop_overlay(out, tube.inner_wall, scale, "tube-wall");
      loop_overlay(out, tube.outer_wall, scale, "tube-wall");
      for (const Bend& b : tube.bends) {
        auto pts = arc_sample(b.greater_arc(), kArcSamples);
        for (Point& p : pts) p = scale * p;
        polyline(out, pts, "tube-greater");
        if (auto minor = b.minor_arc()) {
          auto mpts = arc_sample(*minor, kArcSamples);
          for (Point& p : mpts) p = scale * p;
          polyline(out, mpts, "tube-minor");
        }
        const auto [door_in, door_out] = b.doors();
        line(out, scale * door_in.a, scale * door_in.b, "tube-door");
        line(out, scale * door_out.a, scale * door_out.b, "tube-door");
      }
    }
    if (options.show_track) {
      const Track track = build_track(tube);
      OffsetLoop as_loop;
      for (const TrackPiece& tp : track.pieces) as_loop.pieces.push_back(tp.geom);
      loop_overlay(out, as_loop, scale, "track-line");
    }
  }

  out += "</g>\n</svg>\n";
  write_text_file(out_path, out);
}

}  // namespace mfsquad
