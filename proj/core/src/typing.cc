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

#include "lambdagen/typing.h"

#include <string>

#include "lambdagen/errors.h"
#include "lambdagen/unrank.h"

namespace lambdagen {
namespace {

constexpr std::size_t kMaxTypeNodes = std::size_t{1} << 24;

std::size_t TypeSubtreeEnd(std::span<const TypeNode> nodes, std::size_t i) {
  std::int64_t holes = 1;
  while (holes > 0) {
    holes += nodes[i].kind == TypeKind::kArrow ? 1 : -1;
    ++i;
  }
  return i;
}

std::string VarName(std::uint32_t id) {
  std::string name(1, static_cast<char>('a' + id % 26));
  if (id >= 26) name += std::to_string(id / 26);
  return name;
}

}  // namespace

SimpleType SimpleType::Var(std::uint32_t id) {
  return SimpleType({{TypeKind::kVar, id}});
}

SimpleType SimpleType::Arrow(const SimpleType& domain,
                             const SimpleType& codomain) {
  std::vector<TypeNode> nodes;
  nodes.reserve(domain.nodes_.size() + codomain.nodes_.size() + 1);
  nodes.push_back({TypeKind::kArrow, 0});
  nodes.insert(nodes.end(), domain.nodes_.begin(), domain.nodes_.end());
  nodes.insert(nodes.end(), codomain.nodes_.begin(), codomain.nodes_.end());
  return SimpleType(std::move(nodes));
}

SimpleType SimpleType::FromNodes(std::vector<TypeNode> nodes) {
  std::int64_t holes = 1;
  for (const TypeNode& node : nodes) {
    if (holes == 0) throw MalformedInputError("trailing type nodes");
    if (node.kind == TypeKind::kArrow && node.var != 0) {
      throw MalformedInputError("variable payload on an arrow");
    }
    holes += node.kind == TypeKind::kArrow ? 1 : -1;
  }
  if (holes != 0) throw MalformedInputError("incomplete type");
  return SimpleType(std::move(nodes));
}

SimpleType SimpleType::domain() const {
  const std::size_t end = TypeSubtreeEnd(nodes_, 1);
  return SimpleType({nodes_.begin() + 1, nodes_.begin() + end});
}

SimpleType SimpleType::codomain() const {
  const std::size_t begin = TypeSubtreeEnd(nodes_, 1);
  return SimpleType({nodes_.begin() + begin, nodes_.end()});
}

SimpleType SimpleType::Canonical() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> renaming;
  std::vector<TypeNode> nodes = nodes_;
  for (TypeNode& node : nodes) {
    if (node.kind != TypeKind::kVar) continue;
    std::uint32_t fresh = static_cast<std::uint32_t>(renaming.size());
    for (const auto& [from, to] : renaming) {
      if (from == node.var) {
        fresh = to;
        break;
      }
    }
    if (fresh == renaming.size()) renaming.emplace_back(node.var, fresh);
    node.var = fresh;
  }
  return SimpleType(std::move(nodes));
}

std::string PrintType(const SimpleType& type) {
  const std::span<const TypeNode> nodes = type.nodes();
  // Work items: a node position, or a literal when position is npos.
  struct Item {
    std::size_t pos;
    const char* text;
  };
  constexpr std::size_t kLiteral = static_cast<std::size_t>(-1);
  std::string out;
  std::vector<Item> stack{{0, nullptr}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    if (item.pos == kLiteral) {
      out += item.text;
      continue;
    }
    const TypeNode& node = nodes[item.pos];
    if (node.kind == TypeKind::kVar) {
      out += VarName(node.var);
      continue;
    }
    const std::size_t domain = item.pos + 1;
    const std::size_t codomain = TypeSubtreeEnd(nodes, domain);
    stack.push_back({codomain, nullptr});
    stack.push_back({kLiteral, " \xE2\x86\x92 "});  // " → "
    if (nodes[domain].kind == TypeKind::kArrow) {
      stack.push_back({kLiteral, ")"});
      stack.push_back({domain, nullptr});
      stack.push_back({kLiteral, "("});
    } else {
      stack.push_back({domain, nullptr});
    }
  }
  return out;
}

std::int32_t TypeInferencer::Fresh() {
  const auto id = static_cast<std::int32_t>(cells_.size());
  cells_.push_back({id});
  return id;
}

std::int32_t TypeInferencer::NewArrow(std::int32_t domain,
                                      std::int32_t codomain) {
  const std::int32_t id = Fresh();
  cells_[id].domain = domain;
  cells_[id].codomain = codomain;
  return id;
}

std::int32_t TypeInferencer::Find(std::int32_t c) {
  while (cells_[c].parent != c) {
    cells_[c].parent = cells_[cells_[c].parent].parent;
    c = cells_[c].parent;
  }
  return c;
}

void TypeInferencer::Unify(std::int32_t a, std::int32_t b) {
  pending_.clear();
  pending_.emplace_back(a, b);
  while (!pending_.empty()) {
    auto [x, y] = pending_.back();
    pending_.pop_back();
    x = Find(x);
    y = Find(y);
    if (x == y) continue;
    Cell& cx = cells_[x];
    Cell& cy = cells_[y];
    if (cx.domain >= 0 && cy.domain >= 0) {
      pending_.emplace_back(cx.domain, cy.domain);
      pending_.emplace_back(cx.codomain, cy.codomain);
    }
    // Union by rank; the surviving root keeps any arrow structure.
    if (cx.rank > cy.rank) std::swap(x, y);
    Cell& child = cells_[x];
    Cell& root = cells_[y];
    if (root.domain < 0) {
      root.domain = child.domain;
      root.codomain = child.codomain;
    }
    if (child.rank == root.rank) ++root.rank;
    child.parent = y;
  }
}

bool TypeInferencer::Acyclic() {
  // 0 = unvisited, 1 = on the DFS path, 2 = done.
  color_.assign(cells_.size(), 0);
  std::vector<std::pair<std::int32_t, int>> stack;
  for (std::int32_t start = 0; start < static_cast<std::int32_t>(cells_.size());
       ++start) {
    const std::int32_t root = Find(start);
    if (color_[root] != 0) continue;
    stack.emplace_back(root, 0);
    color_[root] = 1;
    while (!stack.empty()) {
      auto& [c, next_child] = stack.back();
      const Cell& cell = cells_[c];
      if (cell.domain < 0 || next_child == 2) {
        color_[c] = 2;
        stack.pop_back();
        continue;
      }
      const std::int32_t child =
          Find(next_child == 0 ? cell.domain : cell.codomain);
      ++next_child;
      if (color_[child] == 1) return false;
      if (color_[child] == 0) {
        color_[child] = 1;
        stack.emplace_back(child, 0);
      }
    }
  }
  return true;
}

bool TypeInferencer::Solve(TermView t) {
  const std::span<const TermNode> nodes = t.nodes();
  const std::size_t n = nodes.size();
  cells_.clear();
  binders_.clear();
  free_levels_.clear();
  // Cell p is the type of the subterm starting at node p.
  for (std::size_t p = 0; p < n; ++p) Fresh();

  ends_.resize(n);
  for (std::size_t p = n; p-- > 0;) {
    switch (nodes[p].kind) {
      case TermKind::kIndex:
        ends_[p] = p + 1;
        break;
      case TermKind::kAbs:
        ends_[p] = ends_[p + 1];
        break;
      case TermKind::kApp:
        ends_[p] = ends_[ends_[p + 1]];
        break;
    }
  }

  for (std::size_t p = 0; p < n; ++p) {
    while (!binders_.empty() && binders_.back().first <= p) binders_.pop_back();
    const std::size_t depth = binders_.size();
    const auto self = static_cast<std::int32_t>(p);
    switch (nodes[p].kind) {
      case TermKind::kIndex: {
        const std::uint64_t i = nodes[p].index;
        if (i <= depth) {
          Unify(self, binders_[depth - i].second);
        } else {
          const std::size_t level = i - depth - 1;
          while (free_levels_.size() <= level) free_levels_.push_back(Fresh());
          Unify(self, free_levels_[level]);
        }
        break;
      }
      case TermKind::kAbs: {
        const std::int32_t bound = Fresh();
        Unify(self, NewArrow(bound, self + 1));
        binders_.emplace_back(ends_[p], bound);
        break;
      }
      case TermKind::kApp: {
        const auto arg = static_cast<std::int32_t>(ends_[p + 1]);
        Unify(self + 1, NewArrow(arg, self));
        break;
      }
    }
  }
  return Acyclic();
}

bool TypeInferencer::IsTypable(TermView t) { return Solve(t); }

std::optional<SimpleType> TypeInferencer::Infer(TermView t) {
  if (!Solve(t)) return std::nullopt;
  std::vector<TypeNode> out;
  std::vector<std::int32_t> names(cells_.size(), -1);
  std::uint32_t next_name = 0;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const std::int32_t c = Find(stack.back());
    stack.pop_back();
    if (out.size() >= kMaxTypeNodes) {
      throw CapExceededError("principal type exceeds 2^24 nodes");
    }
    const Cell& cell = cells_[c];
    if (cell.domain >= 0) {
      out.push_back({TypeKind::kArrow, 0});
      stack.push_back(cell.codomain);
      stack.push_back(cell.domain);
    } else {
      if (names[c] < 0) names[c] = static_cast<std::int32_t>(next_name++);
      out.push_back({TypeKind::kVar, static_cast<std::uint32_t>(names[c])});
    }
  }
  return SimpleType::FromNodes(std::move(out));
}

std::optional<SimpleType> InferType(TermView t) {
  return TypeInferencer().Infer(t);
}

bool IsTypable(TermView t) { return TypeInferencer().IsTypable(t); }

BigNat CountTypable(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceededError("typable count of size " + std::to_string(n) +
                           " exceeds the cap " + std::to_string(cap));
  }
  TypeInferencer inferencer;
  std::uint64_t count = 0;
  ForEachPlain(n, [&](TermView t) {
    if (inferencer.IsTypable(t)) ++count;
  });
  return count;
}

}  // namespace lambdagen
