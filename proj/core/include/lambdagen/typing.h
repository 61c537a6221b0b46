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

#ifndef LAMBDAGEN_TYPING_H_
#define LAMBDAGEN_TYPING_H_

// Simple types for de Bruijn terms. A term is typable when some assignment
// of types to its free indices makes it simply typable; each free level gets
// its own type variable, shared by all of its occurrences.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lambdagen/boltzmann.h"
#include "lambdagen/counting.h"
#include "lambdagen/terms.h"

namespace lambdagen {

enum class TypeKind : std::uint8_t { kVar, kArrow };

struct TypeNode {
  TypeKind kind = TypeKind::kVar;
  std::uint32_t var = 0;  // zero unless kind == kVar

  friend auto operator<=>(const TypeNode&, const TypeNode&) = default;
};

// Preorder array, like Term.
class SimpleType {
 public:
  static SimpleType Var(std::uint32_t id);
  static SimpleType Arrow(const SimpleType& domain, const SimpleType& codomain);
  // Throws MalformedInputError unless `nodes` is exactly one type.
  static SimpleType FromNodes(std::vector<TypeNode> nodes);

  TypeKind kind() const { return nodes_.front().kind; }
  std::uint32_t var() const { return nodes_.front().var; }
  SimpleType domain() const;
  SimpleType codomain() const;
  std::span<const TypeNode> nodes() const { return nodes_; }

  // Variables renumbered 0, 1, ... by first appearance in preorder.
  SimpleType Canonical() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  explicit SimpleType(std::vector<TypeNode> nodes) : nodes_(std::move(nodes)) {}

  std::vector<TypeNode> nodes_;
};

// Variables a, b, ..., z, a1, b1, ...; arrows right-associative with
// parenthesised arrow domains, e.g. "a → (a → b) → b".
std::string PrintType(const SimpleType& type);

// Principal-type inference by first-order unification over a union-find
// graph; the occurs check runs once at the end as an acyclicity test.
// Keeps its buffers between calls, so reuse one instance in hot loops.
class TypeInferencer {
 public:
  // Canonical principal type, or nothing if the term is not typable.
  // Throws CapExceededError if the principal type has more than 2^24 nodes.
  std::optional<SimpleType> Infer(TermView t);
  bool IsTypable(TermView t);

 private:
  struct Cell {
    std::int32_t parent;
    std::int32_t domain = -1;  // arrow structure of the class, if any
    std::int32_t codomain = -1;
    std::uint32_t rank = 0;
  };

  // Builds and solves the constraints; false on a cycle.
  bool Solve(TermView t);
  std::int32_t Fresh();
  std::int32_t NewArrow(std::int32_t domain, std::int32_t codomain);
  std::int32_t Find(std::int32_t c);
  void Unify(std::int32_t a, std::int32_t b);
  bool Acyclic();

  std::vector<Cell> cells_;
  std::vector<std::pair<std::int32_t, std::int32_t>> pending_;
  std::vector<std::size_t> ends_;
  std::vector<std::pair<std::size_t, std::int32_t>> binders_;
  std::vector<std::int32_t> free_levels_;
  std::vector<std::uint8_t> color_;
};

std::optional<SimpleType> InferType(TermView t);
bool IsTypable(TermView t);

inline constexpr std::size_t kDefaultTypableCap = 30;

// Number of typable terms among all terms of size n, by exhaustive
// enumeration. Throws CapExceededError if n > cap.
BigNat CountTypable(std::size_t n, std::size_t cap = kDefaultTypableCap);

// Window-samples plain terms until one is typable. Throws
// AttemptsExhaustedError after w.max_attempts untypable samples.
template <UniformSource R>
Term SampleTypable(const WindowSpec& w, R& rng) {
  w.Validate();
  const LambdaSampler sampler;
  TypeInferencer inferencer;
  for (std::uint64_t attempt = 0; attempt < w.max_attempts; ++attempt) {
    Term t = SampleInWindow(sampler, w, rng);
    if (inferencer.IsTypable(t)) return t;
  }
  throw AttemptsExhaustedError(w.max_attempts);
}

}  // namespace lambdagen

#endif  // LAMBDAGEN_TYPING_H_
