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

#include "mfsquad/segment_tree.hpp"

#include <limits>

namespace mfsquad {

namespace {
constexpr int kLeafSize = 8;
}

SegmentTree::SegmentTree(std::vector<Segment> segs) : segs_(std::move(segs)) {
  order_.resize(segs_.size());
  for (size_t i = 0; i < segs_.size(); ++i) order_[i] = static_cast<int>(i);
  if (!segs_.empty()) {
    nodes_.reserve(2 * segs_.size() / kLeafSize + 2);
    root_ = build(0, static_cast<int>(segs_.size()));
  }
}

int SegmentTree::build(int begin, int end) {
  Node n;
  n.xmin = n.ymin = std::numeric_limits<double>::infinity();
  n.xmax = n.ymax = -std::numeric_limits<double>::infinity();
  for (int i = begin; i < end; ++i) {
    const Segment& s = segs_[static_cast<size_t>(order_[static_cast<size_t>(i)])];
    n.xmin = std::min(n.xmin, std::min(s.a.x, s.b.x));
    n.ymin = std::min(n.ymin, std::min(s.a.y, s.b.y));
    n.xmax = std::max(n.xmax, std::max(s.a.x, s.b.x));
    n.ymax = std::max(n.ymax, std::max(s.a.y, s.b.y));
  }
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(n);
  if (end - begin <= kLeafSize) {
    nodes_[static_cast<size_t>(id)].begin = begin;
    nodes_[static_cast<size_t>(id)].end = end;
    return id;
  }
  const bool split_x = (n.xmax - n.xmin) >= (n.ymax - n.ymin);
  const int mid = begin + (end - begin) / 2;
  auto key = [&](int a) {
    const Segment& s = segs_[static_cast<size_t>(a)];
    return split_x ? s.a.x + s.b.x : s.a.y + s.b.y;
  };
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int a, int b) { return key(a) < key(b); });
  const int l = build(begin, mid);
  const int r = build(mid, end);
  nodes_[static_cast<size_t>(id)].left = l;
  nodes_[static_cast<size_t>(id)].right = r;
  return id;
}

void SegmentTree::query_box(double xmin, double ymin, double xmax, double ymax,
                            double pad, std::vector<int>& out) const {
  if (root_ < 0) return;
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const Node& n = nodes_[static_cast<size_t>(stack.back())];
    stack.pop_back();
    if (n.xmin > xmax || n.xmax < xmin || n.ymin > ymax || n.ymax < ymin) continue;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        const int id = order_[static_cast<size_t>(i)];
        const Segment& s = segs_[static_cast<size_t>(id)];
        if (std::min(s.a.x, s.b.x) > xmax || std::max(s.a.x, s.b.x) < xmin ||
            std::min(s.a.y, s.b.y) > ymax || std::max(s.a.y, s.b.y) < ymin)
          continue;
        out.push_back(id);
      }
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
}

double SegmentTree::box_dist(const Node& n, Point p) const {
  const double dx = std::max({n.xmin - p.x, 0.0, p.x - n.xmax});
  const double dy = std::max({n.ymin - p.y, 0.0, p.y - n.ymax});
  return std::sqrt(dx * dx + dy * dy);
}

SegmentTree::Nearest SegmentTree::nearest(Point p, std::span<const int> exclude) const {
  Nearest best;
  best.d = std::numeric_limits<double>::infinity();
  if (root_ < 0) return best;
  auto excluded = [&](int id) {
    return std::binary_search(exclude.begin(), exclude.end(), id);
  };
  // Depth-first with lower-bound pruning; visit the nearer child first.
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int ni = stack.back();
    stack.pop_back();
    const Node& n = nodes_[static_cast<size_t>(ni)];
    if (box_dist(n, p) > best.d) continue;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        const int id = order_[static_cast<size_t>(i)];
        if (excluded(id)) continue;
        const double d = dist_point_segment(p, segs_[static_cast<size_t>(id)]);
        if (d < best.d || (d == best.d && id < best.id)) {
          best.d = d;
          best.id = id;
        }
      }
    } else {
      const double dl = box_dist(nodes_[static_cast<size_t>(n.left)], p);
      const double dr = box_dist(nodes_[static_cast<size_t>(n.right)], p);
      // Push the farther child first so the nearer is explored first.
      if (dl <= dr) {
        if (dr <= best.d) stack.push_back(n.right);
        if (dl <= best.d) stack.push_back(n.left);
      } else {
        if (dl <= best.d) stack.push_back(n.left);
        if (dr <= best.d) stack.push_back(n.right);
      }
    }
  }
  return best;
}

}  // namespace mfsquad
