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

#include "lambdagen/terms.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "lambdagen/errors.h"

namespace lambdagen {
namespace {

constexpr std::string_view kLambda = "\xCE\xBB";  // U+03BB

// Net change in the number of open holes when a node of this kind is placed.
int HoleDelta(TermKind kind) {
  switch (kind) {
    case TermKind::kIndex:
      return -1;
    case TermKind::kAbs:
      return 0;
    case TermKind::kApp:
      return 1;
  }
  return 0;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

namespace internal {

std::size_t SubtermEnd(std::span<const TermNode> nodes, std::size_t begin) {
  std::int64_t holes = 1;
  std::size_t i = begin;
  while (holes > 0) {
    holes += HoleDelta(nodes[i].kind);
    ++i;
  }
  return i;
}

}  // namespace internal

TermView TermView::fun() const {
  const std::size_t end = internal::SubtermEnd(nodes_, 1);
  return TermView(nodes_.subspan(1, end - 1));
}

TermView TermView::arg() const {
  const std::size_t begin = internal::SubtermEnd(nodes_, 1);
  return TermView(nodes_.subspan(begin));
}

bool operator==(TermView a, TermView b) {
  return std::ranges::equal(a.nodes_, b.nodes_);
}

Term Term::Index(std::uint64_t i) {
  if (i == 0) throw DomainError("de Bruijn indices start at 1");
  return Term(std::vector<TermNode>{{TermKind::kIndex, i}});
}

Term Term::Abs(TermView body) {
  std::vector<TermNode> nodes;
  nodes.reserve(body.nodes().size() + 1);
  nodes.push_back({TermKind::kAbs, 0});
  nodes.insert(nodes.end(), body.nodes().begin(), body.nodes().end());
  return Term(std::move(nodes));
}

Term Term::App(TermView fun, TermView arg) {
  std::vector<TermNode> nodes;
  nodes.reserve(fun.nodes().size() + arg.nodes().size() + 1);
  nodes.push_back({TermKind::kApp, 0});
  nodes.insert(nodes.end(), fun.nodes().begin(), fun.nodes().end());
  nodes.insert(nodes.end(), arg.nodes().begin(), arg.nodes().end());
  return Term(std::move(nodes));
}

Term Term::FromNodes(std::vector<TermNode> nodes) {
  std::int64_t holes = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (holes == 0) throw MalformedInputError("trailing nodes after term");
    const TermNode& node = nodes[i];
    if (node.kind == TermKind::kIndex && node.index == 0) {
      throw MalformedInputError("index 0 in node array");
    }
    if (node.kind != TermKind::kIndex && node.index != 0) {
      throw MalformedInputError("index payload on a non-index node");
    }
    holes += HoleDelta(node.kind);
  }
  if (holes != 0) throw MalformedInputError("incomplete node array");
  return Term(std::move(nodes));
}

BitString BitString::FromText(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') {
      bits.push_back(false);
    } else if (text[i] == '1') {
      bits.push_back(true);
    } else {
      throw MalformedInputError("bit string contains '" +
                                std::string(1, text[i]) + "' at offset " +
                                std::to_string(i));
    }
  }
  return BitString(std::move(bits));
}

std::string BitString::ToText() const {
  std::string text;
  text.reserve(bits_.size());
  for (bool b : bits_) text.push_back(b ? '1' : '0');
  return text;
}

std::uint64_t TermSize(TermView t) {
  std::uint64_t size = 0;
  for (const TermNode& node : t.nodes()) {
    size += node.kind == TermKind::kIndex ? node.index + 1 : 2;
  }
  return size;
}

BitString EncodeTromp(TermView t) {
  std::vector<bool> bits;
  bits.reserve(TermSize(t));
  for (const TermNode& node : t.nodes()) {
    switch (node.kind) {
      case TermKind::kIndex:
        bits.insert(bits.end(), node.index, true);
        bits.push_back(false);
        break;
      case TermKind::kAbs:
        bits.push_back(false);
        bits.push_back(false);
        break;
      case TermKind::kApp:
        bits.push_back(false);
        bits.push_back(true);
        break;
    }
  }
  return BitString(std::move(bits));
}

Term DecodeTromp(const BitString& bits) {
  std::vector<TermNode> nodes;
  const std::size_t n = bits.size();
  std::size_t i = 0;
  std::int64_t holes = 1;
  while (holes > 0) {
    if (i >= n) throw MalformedInputError("truncated Tromp code");
    if (bits[i]) {
      std::size_t ones = 0;
      while (i < n && bits[i]) {
        ++ones;
        ++i;
      }
      if (i >= n) throw MalformedInputError("truncated Tromp code in index");
      ++i;  // terminating 0
      nodes.push_back({TermKind::kIndex, ones});
    } else {
      if (i + 1 >= n) throw MalformedInputError("truncated Tromp code");
      nodes.push_back({bits[i + 1] ? TermKind::kApp : TermKind::kAbs, 0});
      i += 2;
    }
    holes += HoleDelta(nodes.back().kind);
  }
  if (i != n) {
    throw MalformedInputError("trailing bits after offset " +
                              std::to_string(i));
  }
  return Term::FromNodes(std::move(nodes));
}

std::uint64_t FreeIndexExcess(TermView t) {
  // Binder depth of every pending hole.
  std::vector<std::uint64_t> depths{0};
  std::uint64_t excess = 0;
  for (const TermNode& node : t.nodes()) {
    const std::uint64_t depth = depths.back();
    depths.pop_back();
    switch (node.kind) {
      case TermKind::kIndex:
        if (node.index > depth) excess = std::max(excess, node.index - depth);
        break;
      case TermKind::kAbs:
        depths.push_back(depth + 1);
        break;
      case TermKind::kApp:
        depths.push_back(depth);
        depths.push_back(depth);
        break;
    }
  }
  return excess;
}

Term CloseTerm(TermView t) {
  const std::uint64_t k = FreeIndexExcess(t);
  std::vector<TermNode> nodes(k, TermNode{TermKind::kAbs, 0});
  nodes.insert(nodes.end(), t.nodes().begin(), t.nodes().end());
  return Term::FromNodes(std::move(nodes));
}

std::string PrintTerm(TermView t) {
  std::string out;
  // One entry per open application: true while its function is printing.
  std::vector<bool> open_apps;
  for (const TermNode& node : t.nodes()) {
    switch (node.kind) {
      case TermKind::kAbs:
        out += kLambda;
        continue;
      case TermKind::kApp:
        out += '(';
        open_apps.push_back(true);
        continue;
      case TermKind::kIndex:
        out += std::to_string(node.index);
        break;
    }
    // A subterm just completed; close every application it finishes.
    while (!open_apps.empty()) {
      if (open_apps.back()) {
        open_apps.back() = false;
        out += ' ';
        break;
      }
      out += ')';
      open_apps.pop_back();
    }
  }
  return out;
}

Term ParseTerm(std::string_view text) {
  std::vector<TermNode> nodes;
  std::vector<bool> open_apps;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
  };

  while (true) {
    skip_space();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    const char c = text[pos];
    if (c == '\\') {
      nodes.push_back({TermKind::kAbs, 0});
      ++pos;
      continue;
    }
    if (text.substr(pos, kLambda.size()) == kLambda) {
      nodes.push_back({TermKind::kAbs, 0});
      pos += kLambda.size();
      continue;
    }
    if (c == '(') {
      nodes.push_back({TermKind::kApp, 0});
      open_apps.push_back(true);
      ++pos;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    std::uint64_t index = 0;
    const auto [end, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), index);
    if (ec != std::errc()) throw ParseError("index out of range", pos);
    if (index == 0) throw ParseError("de Bruijn indices start at 1", pos);
    pos = static_cast<std::size_t>(end - text.data());
    nodes.push_back({TermKind::kIndex, index});

    while (true) {
      if (open_apps.empty()) {
        skip_space();
        if (pos != text.size()) throw ParseError("trailing input", pos);
        return Term::FromNodes(std::move(nodes));
      }
      if (open_apps.back()) {
        open_apps.back() = false;
        break;
      }
      skip_space();
      if (pos >= text.size() || text[pos] != ')') {
        throw ParseError("expected ')'", pos);
      }
      ++pos;
      open_apps.pop_back();
    }
  }
}

}  // namespace lambdagen
