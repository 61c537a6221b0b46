// Copyright 2026 The lambdagen Authors
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

#ifndef LAMBDAGEN_TREES_H_
#define LAMBDAGEN_TREES_H_

// Binary trees (leaf | node) and Motzkin trees (leaf | unary | binary). Every
// node, leaves included, has size 1. Like Term, both are flat preorder
// arrays of node kinds.
//
// Text format: a leaf is ".", a unary node "(t)", a binary node "(l r)".

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lambdagen {

enum class BTreeKind : std::uint8_t { kLeaf, kNode };
enum class MTreeKind : std::uint8_t { kLeaf, kUnary, kBinary };

class BTree {
 public:
  BTree() : kinds_{BTreeKind::kLeaf} {}

  static BTree Leaf() { return BTree(); }
  static BTree Node(const BTree& left, const BTree& right);
  // Throws MalformedInputError unless `kinds` is exactly one tree.
  static BTree FromKinds(std::vector<BTreeKind> kinds);

  BTreeKind kind() const { return kinds_.front(); }
  BTree left() const;
  BTree right() const;
  std::span<const BTreeKind> kinds() const { return kinds_; }

  friend auto operator<=>(const BTree&, const BTree&) = default;

 private:
  explicit BTree(std::vector<BTreeKind> kinds) : kinds_(std::move(kinds)) {}

  std::vector<BTreeKind> kinds_;
};

class MTree {
 public:
  MTree() : kinds_{MTreeKind::kLeaf} {}

  static MTree Leaf() { return MTree(); }
  static MTree Unary(const MTree& child);
  static MTree Binary(const MTree& left, const MTree& right);
  static MTree FromKinds(std::vector<MTreeKind> kinds);

  MTreeKind kind() const { return kinds_.front(); }
  MTree child() const;  // unary
  MTree left() const;   // binary
  MTree right() const;  // binary
  std::span<const MTreeKind> kinds() const { return kinds_; }

  friend auto operator<=>(const MTree&, const MTree&) = default;

 private:
  explicit MTree(std::vector<MTreeKind> kinds) : kinds_(std::move(kinds)) {}

  std::vector<MTreeKind> kinds_;
};

inline std::uint64_t BTreeSize(const BTree& t) { return t.kinds().size(); }
inline std::uint64_t MTreeSize(const MTree& t) { return t.kinds().size(); }

std::string PrintBTree(const BTree& t);
std::string PrintMTree(const MTree& t);
BTree ParseBTree(std::string_view text);
MTree ParseMTree(std::string_view text);

}  // namespace lambdagen

#endif  // LAMBDAGEN_TREES_H_
