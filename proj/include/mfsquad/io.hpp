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

#include "mfsquad/mesher.hpp"

namespace mfsquad {

inline constexpr const char* kToolVersion = "mfsquad 1.0.0";
inline constexpr const char* kFormatVersion = "1";

struct PolygonFileData {
  std::string name;
  Polygon polygon;
  bool reversed_on_load = false;
  bool collinear_warning = false;
};

/// Reads and validates a polygon file. Clockwise input is re-oriented with a
/// warning flag; exactly collinear consecutive vertices are accepted (they
/// are meaningful subdivision vertices for the comb family) and flagged.
PolygonFileData read_polygon_file(const std::string& path, const Tolerance& tol = {});

/// Writes a polygon file. Numbers carry 17 significant digits so doubles
/// round-trip exactly.
void write_polygon_file(const std::string& path, const Polygon& polygon,
                        const std::string& name = "");

struct MeshFileData {
  std::string name;
  Drawing drawing;
  std::vector<Face> faces;  // bounded faces only
  struct Metrics {
    double mfs_in = 0.0;
    double mfs_out = 0.0;
    double degradation = 0.0;
    double diameter = 0.0;
    int steiner_count = 0;
  } metrics;
  double scale = 1.0;
  int input_size = 0;
};

/// Assembles the serializable view of a mesh, computing the metrics block.
MeshFileData mesh_file_from(const Mesh& mesh, const std::string& name = "");

void write_mesh_file(const std::string& path, const MeshFileData& data);
MeshFileData read_mesh_file(const std::string& path);

/// Original boundary polygon stored in a mesh file (vertices 0..n-1).
Polygon mesh_file_polygon(const MeshFileData& data);

struct RenderOptions {
  bool show_tube = false;
  bool show_track = false;
};

/// Deterministic SVG: polygon in black, inner edges, chords and trapezoid
/// edges in distinct stroke classes, optional tube/track overlays with arcs
/// rendered as 64-sample polylines.
void render_svg(const MeshFileData& data, const std::string& out_path,
                const RenderOptions& options = {});

/// Formats a double with 17 significant digits.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace mfsquad
