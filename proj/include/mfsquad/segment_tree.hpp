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

#include <span>
#include <vector>

#include "mfsquad/geom.hpp"

namespace mfsquad {

/// Static AABB tree over a fixed set of segments. Used for pairwise crossing
/// checks and nearest-segment queries on drawings too large for brute force.
class SegmentTree {
 public:
  SegmentTree() = default;
  explicit SegmentTree(std::vector<Segment> segs);

  size_t size() const { return segs_.size(); }
  const Segment& segment(int id) const { return segs_[static_cast<size_t>(id)]; }

  /// Ids of segments whose bounding box (inflated by pad) intersects the box.
  void query_box(double xmin, double ymin, double xmax, double ymax, double pad,
                 std::vector<int>& out) const;

  struct Nearest {
    double d = 0.0;
    int id = -1;
  };

  /// Closest segment to p, skipping ids in `exclude` (small sorted list).
  /// Ties on distance resolve to the lowest id.
  Nearest nearest(Point p, std::span<const int> exclude = {}) const;

 private:
  struct Node {
    double xmin, ymin, xmax, ymax;
    int left = -1, right = -1;  // children, or -1 for leaf
    int begin = 0, end = 0;     // range in order_ for leaves
  };

  int build(int begin, int end);
  double box_dist(const Node& n, Point p) const;

  std::vector<Segment> segs_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace mfsquad
