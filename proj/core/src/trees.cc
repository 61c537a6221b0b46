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

#include "lambdagen/trees.h"

#include <cstddef>

#include "lambdagen/errors.h"

namespace lambdagen {
namespace {

int Arity(BTreeKind k) { return k == BTreeKind::kLeaf ? 0 : 2; }

int Arity(MTreeKind k) {
  switch (k) {
    case MTreeKind::kLeaf:
      return 0;
    case MTreeKind::kUnary:
      return 1;
    case MTreeKind::kBinary:
      return 2;
  }
  return 0;
}

template <class Kind>
std::size_t SubtreeEnd(std::span<const Kind> kinds, std::size_t begin) {
  std::int64_t holes = 1;
  std::size_t i = begin;
  while (holes > 0) holes += Arity(kinds[i++]) - 1;
  return i;
}

template <class Kind>
void CheckPreorder(std::span<const Kind> kinds) {
  std::int64_t holes = 1;
  for (Kind k : kinds) {
    if (holes == 0) throw MalformedInputError("trailing nodes after tree");
    holes += Arity(k) - 1;
  }
  if (holes != 0) throw MalformedInputError("incomplete tree");
}

template <class Kind>
std::vector<Kind> Slice(std::span<const Kind> kinds, std::size_t begin,
                        std::size_t end) {
  return std::vector<Kind>(kinds.begin() + begin, kinds.begin() + end);
}

// Shared printer: arity 0 -> ".", otherwise parenthesised children.
template <class Kind>
std::string PrintPreorder(std::span<const Kind> kinds) {
  std::string out;
  std::vector<int> remaining;  // children left per open node
  for (Kind k : kinds) {
    const int arity = Arity(k);
    if (arity > 0) {
      out += '(';
      remaining.push_back(arity);
      continue;
    }
    out += '.';
    while (!remaining.empty()) {
      if (--remaining.back() > 0) {
        out += ' ';
        break;
      }
      out += ')';
      remaining.pop_back();
    }
  }
  return out;
}

// Parses the shared syntax; `make` maps a child count (0, 1, 2) to a kind or
// throws for counts the family does not allow.
template <class Kind, class Make>
std::vector<Kind> ParsePreorder(std::string_view text, Make make) {
  std::vector<Kind> kinds;
  // Position in `kinds` of every open '(' with its child count so far.
  struct Open {
    std::size_t slot;
    int children;
  };
  std::vector<Open> open;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r')) {
      ++pos;
    }
  };
  while (true) {
    skip_space();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    if (text[pos] == '(') {
      open.push_back({kinds.size(), 0});
      kinds.push_back(make(0, pos));  // placeholder, fixed at ')'
      ++pos;
      continue;
    }
    if (text[pos] != '.') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'",
                       pos);
    }
    kinds.push_back(make(0, pos));
    ++pos;
    // A subtree completed.
    while (true) {
      if (open.empty()) {
        skip_space();
        if (pos != text.size()) throw ParseError("trailing input", pos);
        return kinds;
      }
      ++open.back().children;
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        kinds[open.back().slot] = make(open.back().children, pos);
        open.pop_back();
        ++pos;
        continue;
      }
      if (open.back().children >= 2) throw ParseError("expected ')'", pos);
      break;
    }
  }
}

}  // namespace

BTree BTree::Node(const BTree& left, const BTree& right) {
  std::vector<BTreeKind> kinds;
  kinds.reserve(left.kinds_.size() + right.kinds_.size() + 1);
  kinds.push_back(BTreeKind::kNode);
  kinds.insert(kinds.end(), left.kinds_.begin(), left.kinds_.end());
  kinds.insert(kinds.end(), right.kinds_.begin(), right.kinds_.end());
  return BTree(std::move(kinds));
}

BTree BTree::FromKinds(std::vector<BTreeKind> kinds) {
  CheckPreorder<BTreeKind>(kinds);
  return BTree(std::move(kinds));
}

BTree BTree::left() const {
  return BTree(Slice<BTreeKind>(kinds_, 1, SubtreeEnd<BTreeKind>(kinds_, 1)));
}

BTree BTree::right() const {
  return BTree(Slice<BTreeKind>(kinds_, SubtreeEnd<BTreeKind>(kinds_, 1),
                                kinds_.size()));
}

MTree MTree::Unary(const MTree& child) {
  std::vector<MTreeKind> kinds;
  kinds.reserve(child.kinds_.size() + 1);
  kinds.push_back(MTreeKind::kUnary);
  kinds.insert(kinds.end(), child.kinds_.begin(), child.kinds_.end());
  return MTree(std::move(kinds));
}

MTree MTree::Binary(const MTree& left, const MTree& right) {
  std::vector<MTreeKind> kinds;
  kinds.reserve(left.kinds_.size() + right.kinds_.size() + 1);
  kinds.push_back(MTreeKind::kBinary);
  kinds.insert(kinds.end(), left.kinds_.begin(), left.kinds_.end());
  kinds.insert(kinds.end(), right.kinds_.begin(), right.kinds_.end());
  return MTree(std::move(kinds));
}

MTree MTree::FromKinds(std::vector<MTreeKind> kinds) {
  CheckPreorder<MTreeKind>(kinds);
  return MTree(std::move(kinds));
}

MTree MTree::child() const {
  return MTree(Slice<MTreeKind>(kinds_, 1, kinds_.size()));
}

MTree MTree::left() const {
  return MTree(Slice<MTreeKind>(kinds_, 1, SubtreeEnd<MTreeKind>(kinds_, 1)));
}

MTree MTree::right() const {
  return MTree(Slice<MTreeKind>(kinds_, SubtreeEnd<MTreeKind>(kinds_, 1),
                                kinds_.size()));
}

std::string PrintBTree(const BTree& t) {
  return PrintPreorder<BTreeKind>(t.kinds());
}

std::string PrintMTree(const MTree& t) {
  return PrintPreorder<MTreeKind>(t.kinds());
}

BTree ParseBTree(std::string_view text) {
  return BTree::FromKinds(ParsePreorder<BTreeKind>(
      text, [](int children, std::size_t pos) {
        if (children == 0) return BTreeKind::kLeaf;
        if (children == 2) return BTreeKind::kNode;
        throw ParseError("binary tree node needs two children", pos);
      }));
}

MTree ParseMTree(std::string_view text) {
  return MTree::FromKinds(ParsePreorder<MTreeKind>(
      text, [](int children, std::size_t) {
        if (children == 0) return MTreeKind::kLeaf;
        return children == 1 ? MTreeKind::kUnary : MTreeKind::kBinary;
      }));
}

}  // namespace lambdagen
