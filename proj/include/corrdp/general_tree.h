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

#ifndef CORRDP_GENERAL_TREE_H_
#define CORRDP_GENERAL_TREE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/random.h"

namespace corrdp {

// Rooted binary tree whose nodes have zero, one or two children. Node 0 is
// the root. A node with one child stores it as `left`. Leaves are numbered
// left to right as data slots.
class GeneralTree {
 public:
  static constexpr std::int32_t kNone = -1;

  struct Node {
    std::int32_t left = kNone;
    std::int32_t right = kNone;
  };

  // Validates that every node is reached exactly once from node 0, child
  // indices are in range, and a right child only exists alongside a left one.
  static absl::StatusOr<GeneralTree> Create(std::vector<Node> nodes);

  // Perfect tree of the given depth in level order (same numbering as
  // NoiseTree).
  static GeneralTree Perfect(int depth);
  // Chain of `length` nodes, each the single child of the previous.
  static GeneralTree Path(int length);
  // Spine of `depth` two-child nodes whose right child is always a leaf.
  static GeneralTree Caterpillar(int depth);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  int child_count(std::size_t i) const {
    return (nodes_[i].left != kNone) + (nodes_[i].right != kNone);
  }
  int max_depth() const { return max_depth_; }

  // Node ids in breadth-first order from the root, left child first.
  std::span<const std::int32_t> bfs_order() const { return bfs_; }
  // Leaf node ids in left-to-right order; position = data slot.
  std::span<const std::int32_t> leaves() const { return leaves_; }

 private:
  GeneralTree() = default;

  std::vector<Node> nodes_;
  std::vector<std::int32_t> bfs_;
  std::vector<std::int32_t> leaves_;
  int max_depth_ = 0;
};

// Cascade on an arbitrary binary tree. The root gets N(0, sigma^2); a node
// with two children splits exactly as in CascadeSample with one fresh draw; a
// node with one child passes its value down unchanged and consumes no
// randomness. Nodes are visited in breadth-first order, so a perfect tree
// consumes the stream exactly as CascadeSample does. Returns one value per
// node id.
absl::StatusOr<std::vector<double>> GeneralTreeSample(const GeneralTree& tree,
                                                      double sigma,
                                                      SeededRng& rng);

}  // namespace corrdp

#endif  // CORRDP_GENERAL_TREE_H_
