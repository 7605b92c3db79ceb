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

#include "mfsquad/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mfsquad/metrics.hpp"

namespace mfsquad {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("invalid JSON: " + path);
  return j;
}

const char* vertex_role_name(VertexRole r) {
  switch (r) {
    case VertexRole::Original: return "original";
    case VertexRole::SteinerInner: return "steiner_inner";
    case VertexRole::SteinerTrap: return "steiner_trap";
  }
  return "original";
}

VertexRole vertex_role_from(const std::string& s) {
  if (s == "steiner_inner") return VertexRole::SteinerInner;
  if (s == "steiner_trap") return VertexRole::SteinerTrap;
  if (s == "original") return VertexRole::Original;
  throw IoError("unknown vertex role: " + s);
}

const char* edge_role_name(EdgeRole r) {
  switch (r) {
    case EdgeRole::BoundaryP: return "boundary_P";
    case EdgeRole::InnerP: return "inner";
    case EdgeRole::Chord: return "chord";
    case EdgeRole::Trapezoid: return "trapezoid";
    case EdgeRole::DoorFree: return "door_free";
  }
  return "boundary_P";
}

EdgeRole edge_role_from(const std::string& s) {
  if (s == "boundary_P") return EdgeRole::BoundaryP;
  if (s == "inner") return EdgeRole::InnerP;
  if (s == "chord") return EdgeRole::Chord;
  if (s == "trapezoid") return EdgeRole::Trapezoid;
  if (s == "door_free") return EdgeRole::DoorFree;
  throw IoError("unknown edge role: " + s);
}

}  // namespace

PolygonFileData read_polygon_file(const std::string& path, const Tolerance& tol) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("vertices"))
    throw IoError("polygon file missing 'vertices': " + path);
  if (j.value("format_version", "1") != std::string(kFormatVersion))
    throw IoError("unsupported format_version in " + path);

  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw IoError("vertex entries must be [x, y] number pairs: " + path);
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }

  PolygonFileData data;
  data.name = j.value("name", "");
  data.polygon = make_polygon(std::move(pts), tol);
  if (!data.polygon.is_ccw()) {
    data.polygon.reverse();
    data.reversed_on_load = true;
  }
  std::pair<int, int> bad;
  if (!polygon_is_simple(data.polygon, tol, &bad)) {
    throw NotSimple("polygon is not simple: edges " + std::to_string(bad.first) +
                    " and " + std::to_string(bad.second) + " intersect");
  }
  for (int i = 0; i < data.polygon.size(); ++i) {
    if (orient(data.polygon.vertex(i - 1), data.polygon.vertex(i),
               data.polygon.vertex(i + 1), tol) == 0) {
      data.collinear_warning = true;
      break;
    }
  }
  return data;
}

void write_polygon_file(const std::string& path, const Polygon& polygon,
                        const std::string& name) {
  std::string out = "{\n  \"format_version\": \"1\",\n";
  if (!name.empty()) out += "  \"name\": \"" + name + "\",\n";
  out += "  \"vertices\": [\n";
  for (int i = 0; i < polygon.size(); ++i) {
    const Point p = polygon.vertex(i);
    out += "    [" + format_double(p.x) + ", " + format_double(p.y) + "]";
    out += i + 1 < polygon.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  write_text_file(path, out);
}

MeshFileData mesh_file_from(const Mesh& mesh, const std::string& name) {
  MeshFileData data;
  data.name = name;
  data.drawing = mesh.drawing;
  for (const Face& f : mesh.faces) {
    if (!f.is_outer) data.faces.push_back(f);
  }
  data.scale = mesh.scale;
  data.input_size = mesh.input_size;

  const Polygon p = mesh_file_polygon(data);
  data.metrics.mfs_in = min_feature_size(polygon_drawing(p)).value;
  data.metrics.mfs_out = min_feature_size(mesh.drawing).value;
  data.metrics.degradation = data.metrics.mfs_in / data.metrics.mfs_out;
  data.metrics.diameter = diameter(mesh.drawing);
  data.metrics.steiner_count = mesh.steiner_count();
  return data;
}

Polygon mesh_file_polygon(const MeshFileData& data) {
  Polygon p;
  for (int v = 0; v < data.drawing.vertex_count(); ++v) {
    if (data.drawing.vertex(v).role != VertexRole::Original) break;
    p.pts.push_back(data.drawing.pos(v));
  }
  if (p.size() < 3) throw IoError("mesh file has no original boundary polygon");
  return p;
}

void write_mesh_file(const std::string& path, const MeshFileData& data) {
  std::string out = "{\n  \"format_version\": \"1\",\n";
  if (!data.name.empty()) out += "  \"name\": \"" + data.name + "\",\n";

  out += "  \"vertices\": [\n";
  const Drawing& d = data.drawing;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const Point p = d.pos(v);
    out += "    [" + format_double(p.x) + ", " + format_double(p.y) + ", \"" +
           vertex_role_name(d.vertex(v).role) + "\"]";
    out += v + 1 < d.vertex_count() ? ",\n" : "\n";
  }
  out += "  ],\n  \"edges\": [\n";
  for (int e = 0; e < d.edge_count(); ++e) {
    out += "    [" + std::to_string(d.edge(e).a) + ", " + std::to_string(d.edge(e).b) +
           ", \"" + edge_role_name(d.edge(e).role) + "\"]";
    out += e + 1 < d.edge_count() ? ",\n" : "\n";
  }
  out += "  ],\n  \"faces\": [\n";
  for (size_t f = 0; f < data.faces.size(); ++f) {
    out += "    [[";
    const Face& face = data.faces[f];
    for (size_t i = 0; i < face.vertices.size(); ++i) {
      out += std::to_string(face.vertices[i]);
      if (i + 1 < face.vertices.size()) out += ", ";
    }
    out += "], " + std::to_string(face.corner_count) + "]";
    out += f + 1 < data.faces.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"metrics\": {\n";
  out += "    \"mfs_in\": " + format_double(data.metrics.mfs_in) + ",\n";
  out += "    \"mfs_out\": " + format_double(data.metrics.mfs_out) + ",\n";
  out += "    \"degradation\": " + format_double(data.metrics.degradation) + ",\n";
  out += "    \"diameter\": " + format_double(data.metrics.diameter) + ",\n";
  out += "    \"steiner_count\": " + std::to_string(data.metrics.steiner_count) + "\n";
  out += "  },\n  \"provenance\": {\n";
  out += "    \"constants\": {\n";
  out += "      \"t_inner\": " + format_double(PipelineConstants::t_inner) + ",\n";
  out += "      \"t_back\": " + format_double(PipelineConstants::t_back) + ",\n";
  out += "      \"track_gap\": " + format_double(PipelineConstants::track_gap) + ",\n";
  out += "      \"circle_diam\": " + format_double(PipelineConstants::circle_diam) + ",\n";
  out += "      \"grid_step\": " + format_double(PipelineConstants::grid_step) + ",\n";
  out += "      \"spacing_min\": " + format_double(PipelineConstants::spacing_min) + ",\n";
  out += "      \"spacing_max\": " + format_double(PipelineConstants::spacing_max) + "\n";
  out += "    },\n";
  out += "    \"scale\": " + format_double(data.scale) + ",\n";
  out += "    \"input_size\": " + std::to_string(data.input_size) + ",\n";
  out += "    \"tool_version\": \"" + std::string(kToolVersion) + "\"\n";
  out += "  }\n}\n";
  write_text_file(path, out);
}

MeshFileData read_mesh_file(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw IoError("mesh file missing vertices/edges: " + path);

  MeshFileData data;
  data.name = j.value("name", "");
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 3) throw IoError("bad vertex entry in " + path);
    data.drawing.add_vertex({v[0].get<double>(), v[1].get<double>()},
                            vertex_role_from(v[2].get<std::string>()));
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw IoError("bad edge entry in " + path);
    data.drawing.add_edge(e[0].get<int>(), e[1].get<int>(),
                          edge_role_from(e[2].get<std::string>()));
  }
  data.drawing.finalize();
  if (j.contains("faces")) {
    for (const auto& f : j["faces"]) {
      Face face;
      for (const auto& idx : f[0]) face.vertices.push_back(idx.get<int>());
      face.corner_count = f[1].get<int>();
      data.faces.push_back(std::move(face));
    }
  }
  if (j.contains("metrics")) {
    const auto& m = j["metrics"];
    data.metrics.mfs_in = m.value("mfs_in", 0.0);
    data.metrics.mfs_out = m.value("mfs_out", 0.0);
    data.metrics.degradation = m.value("degradation", 0.0);
    data.metrics.diameter = m.value("diameter", 0.0);
    data.metrics.steiner_count = m.value("steiner_count", 0);
  }
  if (j.contains("provenance")) {
    data.scale = j["provenance"].value("scale", 1.0);
    data.input_size = j["provenance"].value("input_size", 0);
  }
  return data;
}

}  // namespace mfsquad
