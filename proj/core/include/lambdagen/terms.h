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

#ifndef LAMBDAGEN_TERMS_H_
#define LAMBDAGEN_TERMS_H_

// Lambda terms with de Bruijn indices starting at 1, measured in the Tromp
// binary size model: index i weighs i+1, abstraction and application weigh
// 2 plus their subterms, so a term's size is the length of its bit code.
//
// Terms are stored as a flat preorder array of nodes. The preorder is also
// the order of the binary code, which makes size, encoding and most scans a
// single loop without recursion, even for terms with 10^5 nested binders.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lambdagen {

enum class TermKind : std::uint8_t { kIndex, kAbs, kApp };

struct TermNode {
  TermKind kind = TermKind::kIndex;
  std::uint64_t index = 0;  // de Bruijn index, zero unless kind == kIndex

  friend auto operator<=>(const TermNode&, const TermNode&) = default;
};

// Non-owning view of one complete term inside a preorder node array.
class TermView {
 public:
  explicit TermView(std::span<const TermNode> nodes) : nodes_(nodes) {}

  TermKind kind() const { return nodes_.front().kind; }
  std::uint64_t index() const { return nodes_.front().index; }

  // Requires kind() == kAbs.
  TermView body() const { return TermView(nodes_.subspan(1)); }
  // Require kind() == kApp. arg() scans the function subterm.
  TermView fun() const;
  TermView arg() const;

  std::span<const TermNode> nodes() const { return nodes_; }

  friend bool operator==(TermView a, TermView b);

 private:
  std::span<const TermNode> nodes_;
};

class Term {
 public:
  // Index 1, the smallest term.
  Term() : nodes_{{TermKind::kIndex, 1}} {}

  // Throws DomainError if i == 0.
  static Term Index(std::uint64_t i);
  static Term Abs(TermView body);
  static Term App(TermView fun, TermView arg);

  // Adopts a preorder node array. Throws MalformedInputError unless it holds
  // exactly one term with every index >= 1.
  static Term FromNodes(std::vector<TermNode> nodes);

  TermView view() const { return TermView(nodes_); }
  operator TermView() const { return view(); }  // NOLINT

  TermKind kind() const { return nodes_.front().kind; }
  std::uint64_t index() const { return nodes_.front().index; }
  TermView body() const { return view().body(); }
  TermView fun() const { return view().fun(); }
  TermView arg() const { return view().arg(); }

  std::span<const TermNode> nodes() const { return nodes_; }

  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  explicit Term(std::vector<TermNode> nodes) : nodes_(std::move(nodes)) {}

  std::vector<TermNode> nodes_;
};

// Value-semantic sequence of bits. Externally written as one ASCII line of
// '0' and '1'.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

  // Throws MalformedInputError on any character other than '0' or '1'.
  static BitString FromText(std::string_view text);
  std::string ToText() const;

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void push_back(bool bit) { bits_.push_back(bit); }
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<bool> bits_;
};

std::uint64_t TermSize(TermView t);

// index i -> 1^i 0, abstraction -> 00 M, application -> 01 M N.
BitString EncodeTromp(TermView t);

// Throws MalformedInputError on truncated input or trailing bits.
Term DecodeTromp(const BitString& bits);

// Smallest m such that every index i under d binders satisfies i <= d + m.
// Zero iff the term is closed.
std::uint64_t FreeIndexExcess(TermView t);

// Wraps t in FreeIndexExcess(t) abstractions.
Term CloseTerm(TermView t);

// Canonical text: "λ" body, "(" fun " " arg ")", decimal indices.
std::string PrintTerm(TermView t);

// Accepts the canonical text plus "\" for λ and free whitespace between
// tokens. Throws ParseError with the byte offset of the problem.
Term ParseTerm(std::string_view text);

namespace internal {

// One past the last node of the subterm starting at `begin`.
std::size_t SubtermEnd(std::span<const TermNode> nodes, std::size_t begin);

}  // namespace internal

}  // namespace lambdagen

#endif  // LAMBDAGEN_TERMS_H_
