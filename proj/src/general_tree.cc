//
// Copyright 2026 The corrdp Authors.
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

#include "corrdp/general_tree.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/sampler.h"

namespace corrdp {

absl::StatusOr<GeneralTree> GeneralTree::Create(std::vector<Node> nodes) {
  if (nodes.empty()) return absl::InvalidArgumentError("tree has no nodes");
  const auto n = static_cast<std::int32_t>(nodes.size());
  std::vector<int> depth(nodes.size(), -1);
  GeneralTree tree;
  tree.bfs_.reserve(nodes.size());
  tree.bfs_.push_back(0);
  depth[0] = 0;
  for (std::size_t head = 0; head < tree.bfs_.size(); ++head) {
    const std::int32_t id = tree.bfs_[head];
    const Node& node = nodes[id];
    if (node.left == kNone && node.right != kNone) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", id, " has a right child but no left child"));
    }
    for (std::int32_t child : {node.left, node.right}) {
      if (child == kNone) continue;
      if (child < 0 || child >= n) {
        return absl::InvalidArgumentError(
            absl::StrCat("node ", id, " has out-of-range child ", child));
      }
      if (depth[child] != -1) {
        return absl::InvalidArgumentError(absl::StrCat(
            "node ", child, " is reached twice (cycle or shared child)"));
      }
      depth[child] = depth[id] + 1;
      tree.bfs_.push_back(child);
    }
  }
  if (tree.bfs_.size() != nodes.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(nodes.size() - tree.bfs_.size(),
                     " node(s) unreachable from the root"));
  }
  tree.max_depth_ = *std::max_element(depth.begin(), depth.end());

  // Left-to-right leaves via an explicit depth-first stack.
  std::vector<std::int32_t> stack = {0};
  while (!stack.empty()) {
    const std::int32_t id = stack.back();
    stack.pop_back();
    const Node& node = nodes[id];
    if (node.left == kNone) {
      tree.leaves_.push_back(id);
      continue;
    }
    if (node.right != kNone) stack.push_back(node.right);
    stack.push_back(node.left);
  }
  tree.nodes_ = std::move(nodes);
  return tree;
}

GeneralTree GeneralTree::Perfect(int depth) {
  const std::size_t count = (std::size_t{2} << depth) - 1;
  const std::size_t internal = (std::size_t{1} << depth) - 1;
  std::vector<Node> nodes(count);
  for (std::size_t m = 0; m < internal; ++m) {
    nodes[m] = {static_cast<std::int32_t>(2 * m + 1),
                static_cast<std::int32_t>(2 * m + 2)};
  }
  return *Create(std::move(nodes));
}

GeneralTree GeneralTree::Path(int length) {
  std::vector<Node> nodes(std::max(length, 1));
  for (std::size_t m = 0; m + 1 < nodes.size(); ++m) {
    nodes[m].left = static_cast<std::int32_t>(m + 1);
  }
  return *Create(std::move(nodes));
}

GeneralTree GeneralTree::Caterpillar(int depth) {
  // Spine nodes 0, 2, 4, ..., leaves hang off as odd ids.
  std::vector<Node> nodes(2 * depth + 1);
  for (int d = 0; d < depth; ++d) {
    nodes[2 * d] = {2 * d + 2, 2 * d + 1};
  }
  return *Create(std::move(nodes));
}

absl::StatusOr<std::vector<double>> GeneralTreeSample(const GeneralTree& tree,
                                                      double sigma,
                                                      SeededRng& rng) {
  if (absl::Status s = ValidateSigma(sigma); !s.ok()) return s;
  std::vector<double> values(tree.size());
  values[0] = sigma * rng.StandardNormal();
  for (std::int32_t id : tree.bfs_order()) {
    const GeneralTree::Node& node = tree.node(id);
    switch (tree.child_count(id)) {
      case 2: {
        const auto [left, right] =
            SplitNode(values[id], sigma * rng.StandardNormal());
        values[node.left] = left;
        values[node.right] = right;
        break;
      }
      case 1:
        values[node.left] = values[id];
        break;
      default:
        break;
    }
  }
  return values;
}

}  // namespace corrdp
