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

#include "mfsquad/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfsquad/io.hpp"
#include "mfsquad/lab.hpp"
#include "mfsquad/metrics.hpp"

namespace mfsquad {

namespace {

Tolerance cli_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("MFSQUAD_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) tol.eps_abs = v;
  }
  return tol;
}

int cmd_generate(const std::string& out_path, const std::vector<int>& regular,
                 const std::vector<int>& comb, const std::vector<int>& random,
                 double side, double floor) {
  Polygon p;
  std::string name;
  if (!regular.empty()) {
    p = gen_regular_ngon(regular[0], side);
    name = "regular_" + std::to_string(regular[0]);
  } else if (comb.size() == 2) {
    p = gen_comb(comb[0], comb[1]);
    name = "comb_" + std::to_string(comb[0]) + "_" + std::to_string(comb[1]);
  } else if (random.size() == 2) {
    p = gen_random_simple(random[0], static_cast<unsigned long long>(random[1]), floor);
    name = "random_" + std::to_string(random[0]) + "_" + std::to_string(random[1]);
  } else {
    std::fprintf(stderr, "generate: pick one of --regular, --comb, --random\n");
    return 1;
  }
  write_polygon_file(out_path, p, name);
  std::printf("wrote %s n=%d\n", out_path.c_str(), p.size());
  return 0;
}

int cmd_measure(const std::string& in_path, const Tolerance& tol) {
  const PolygonFileData data = read_polygon_file(in_path, tol);
  if (data.reversed_on_load)
    std::fprintf(stderr, "warning: input was clockwise, re-oriented\n");
  const Drawing d = polygon_drawing(data.polygon);
  const MetricsReport r = measure(d);
  std::printf("mfs=%.17g witness_vertex=%d witness_edge=%d diameter=%.17g spread=%.17g\n",
              r.mfs, r.witness_vertex, r.witness_edge, r.diameter, r.spread);
  return 0;
}

int cmd_quadrangulate(const std::string& in_path, const std::string& out_path,
                      const std::string& svg_path, const Tolerance& tol) {
  const PolygonFileData data = read_polygon_file(in_path, tol);
  if (data.reversed_on_load)
    std::fprintf(stderr, "warning: input was clockwise, re-oriented\n");
  if (data.collinear_warning)
    std::fprintf(stderr, "warning: input has exactly collinear consecutive vertices\n");

  const auto t0 = std::chrono::steady_clock::now();
  const Mesh mesh = quadrangulate(data.polygon, tol);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const MeshFileData out = mesh_file_from(mesh, data.name);
  write_mesh_file(out_path, out);
  if (!svg_path.empty()) render_svg(out, svg_path);
  std::printf("n=%d steiner=%d degradation=%.6g wall_time=%.3fs\n", mesh.input_size,
              mesh.steiner_count(), out.metrics.degradation, secs);
  return 0;
}

int cmd_bench(const std::string& out_csv, const std::vector<int>& regular,
              const std::vector<std::string>& comb, const std::vector<std::string>& random,
              std::vector<std::string> methods) {
  std::vector<FamilySpec> specs;
  for (int n : regular) specs.push_back({"regular", n, 0});
  auto parse_pair = [](const std::string& s, const char* what) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw IoError(std::string(what) + " spec must be n:k, got " + s);
    return std::pair<int, int>{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  };
  for (const auto& s : comb) {
    const auto [n, k] = parse_pair(s, "comb");
    specs.push_back({"comb", n, k});
  }
  for (const auto& s : random) {
    const auto [n, seed] = parse_pair(s, "random");
    specs.push_back({"random", n, seed});
  }
  if (methods.empty()) methods = {"ear_clip", "best_classic", "pipeline"};

  const auto rows = degradation_table(specs, methods);
  const std::string csv = table_to_csv(rows);
  if (out_csv.empty() || out_csv == "-") {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(out_csv, csv);
    std::printf("wrote %s (%zu rows)\n", out_csv.c_str(), rows.size());
  }
  return 0;
}

int cmd_render(const std::string& in_path, const std::string& out_path,
               bool show_tube, bool show_track) {
  const MeshFileData data = read_mesh_file(in_path);
  RenderOptions opt;
  opt.show_tube = show_tube;
  opt.show_track = show_track;
  render_svg(data, out_path, opt);
  std::printf("wrote %s\n", out_path.c_str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"mfsquad: feature-size-preserving polygon quadrangulation"};
  app.require_subcommand(1);
  const Tolerance tol = cli_tolerance();

  // generate
  auto* gen = app.add_subcommand("generate", "generate a polygon family instance");
  std::vector<int> gen_regular, gen_comb_args, gen_random;
  double gen_side = 1.0, gen_floor = 0.01;
  std::string gen_out;
  gen->add_option("--regular", gen_regular, "regular even n-gon (n)")->expected(1);
  gen->add_option("--comb", gen_comb_args, "comb polygon (n k)")->expected(2);
  gen->add_option("--random", gen_random, "random simple polygon (n seed)")->expected(2);
  gen->add_option("--side", gen_side, "regular n-gon side length");
  gen->add_option("--floor", gen_floor, "random polygon mfs/diameter floor");
  gen->add_option("-o,--out", gen_out, "output polygon JSON")->required();

  // measure
  auto* meas = app.add_subcommand("measure", "print mfs, diameter and spread");
  std::string meas_in;
  meas->add_option("input", meas_in, "polygon JSON")->required();

  // quadrangulate
  auto* quad = app.add_subcommand("quadrangulate", "run the full pipeline");
  std::string quad_in, quad_out, quad_svg;
  quad->add_option("input", quad_in, "polygon JSON")->required();
  quad->add_option("-o,--out", quad_out, "output mesh JSON")->required();
  quad->add_option("--svg", quad_svg, "also render an SVG");

  // bench
  auto* bench = app.add_subcommand("bench", "degradation table over families");
  std::vector<int> bench_regular;
  std::vector<std::string> bench_comb, bench_random, bench_methods;
  std::string bench_out;
  bench->add_option("--regular", bench_regular, "regular n-gon sizes");
  bench->add_option("--comb", bench_comb, "comb specs n:k");
  bench->add_option("--random", bench_random, "random specs n:seed");
  bench->add_option("--methods", bench_methods, "ear_clip best_classic pipeline");
  bench->add_option("-o,--out", bench_out, "output CSV ('-' for stdout)");

  // render
  auto* rend = app.add_subcommand("render", "render a mesh JSON to SVG");
  std::string rend_in, rend_out;
  bool rend_tube = false, rend_track = false;
  rend->add_option("input", rend_in, "mesh JSON")->required();
  rend->add_option("-o,--out", rend_out, "output SVG")->required();
  rend->add_flag("--show-tube", rend_tube, "overlay the tube construction");
  rend->add_flag("--show-track", rend_track, "overlay the track");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed())
      return cmd_generate(gen_out, gen_regular, gen_comb_args, gen_random, gen_side,
                          gen_floor);
    if (meas->parsed()) return cmd_measure(meas_in, tol);
    if (quad->parsed()) return cmd_quadrangulate(quad_in, quad_out, quad_svg, tol);
    if (bench->parsed())
      return cmd_bench(bench_out, bench_regular, bench_comb, bench_random, bench_methods);
    if (rend->parsed()) return cmd_render(rend_in, rend_out, rend_tube, rend_track);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}

}  // namespace mfsquad
