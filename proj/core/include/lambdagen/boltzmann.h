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

#ifndef LAMBDAGEN_BOLTZMANN_H_
#define LAMBDAGEN_BOLTZMANN_H_

// Boltzmann samplers for lambda terms, Motzkin trees and binary trees.
//
// A sampler of parameter x draws an object g with probability
// x^|g| / C(x), so objects of equal size are equiprobable. At the critical
// value the expected size is infinite; the ceiled samplers bound the work
// by abandoning an attempt as soon as its size must exceed a ceiling, and
// SampleInWindow() retries until the size lands in [a, b].
//
// Generation is iterative and writes nodes in preorder: each draw fills
// the leftmost open hole, which repeats the draw order of the recursive
// definition without using the call stack.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdagen/analytic.h"
#include "lambdagen/errors.h"
#include "lambdagen/random.h"
#include "lambdagen/terms.h"
#include "lambdagen/trees.h"

namespace lambdagen {

enum class LambdaKind : std::uint8_t { kVariable, kAbstraction, kApplication };

// Hard size cap for the free (unceiled) samplers.
inline constexpr std::uint64_t kFreeSamplerCap = 100'000'000;

template <class S>
class GenOutcome {
 public:
  static GenOutcome Ok(S value, std::uint64_t size) {
    GenOutcome out;
    out.value_.emplace(std::move(value));
    out.size_ = size;
    return out;
  }
  static GenOutcome Exceeded() { return GenOutcome(); }

  bool ok() const { return value_.has_value(); }
  const S& value() const { return *value_; }
  S& value() { return *value_; }
  // Size of value(); zero when the ceiling was exceeded.
  std::uint64_t size() const { return size_; }

 private:
  GenOutcome() = default;

  std::optional<S> value_;
  std::uint64_t size_ = 0;
};

struct WindowSpec {
  std::uint64_t min_size = 1;
  std::uint64_t max_size = 1;
  std::uint64_t max_attempts = 1'000'000;

  // [ceil((1 - tolerance) n), ceil((1 + tolerance) n)].
  static WindowSpec Around(std::uint64_t target, double tolerance = 0.1,
                           std::uint64_t max_attempts = 1'000'000) {
    const double n = static_cast<double>(target);
    // Ceiling that ignores rounding noise such as 1.1 * 100 > 110.
    auto up = [](double v) {
      return static_cast<std::uint64_t>(std::ceil(v * (1.0 - 1e-12)));
    };
    WindowSpec w{up((1.0 - tolerance) * n), up((1.0 + tolerance) * n),
                 max_attempts};
    if (w.min_size < 1) w.min_size = 1;
    return w;
  }

  void Validate() const {
    if (min_size < 1 || min_size > max_size) {
      throw DomainError("window needs 1 <= min <= max");
    }
    if (max_attempts < 1) throw DomainError("window needs max_attempts >= 1");
  }
};

// Kind A with probability p_a. Consumes one uniform draw.
template <UniformSource R>
bool BernoulliSelect(double p_a, R& rng) {
  return rng.Uniform() < p_a;
}

// Geometric index law P(i) = (1 - x) x^(i-1), i >= 1.
template <UniformSource R>
std::uint64_t DrawIndex(double x, R& rng) {
  std::uint64_t i = 1;
  while (rng.Uniform() < x) ++i;
  return i;
}

// Three-way constructor choice for lambda terms at parameter x <= rho.
class LambdaSelector {
 public:
  explicit LambdaSelector(double x) : x_(x) {
    const BranchProbs p = ComputeBranchProbs(GFSpec::Lambda(), x);
    variable_ = p[0];
    abstraction_ = p[0] + p[1];
  }

  template <UniformSource R>
  LambdaKind operator()(R& rng) const {
    const double u = rng.Uniform();
    if (u < variable_) return LambdaKind::kVariable;
    if (u < abstraction_) return LambdaKind::kAbstraction;
    return LambdaKind::kApplication;
  }

  double x() const { return x_; }

 private:
  double x_;
  double variable_;
  double abstraction_;
};

template <UniformSource R>
LambdaKind SelectKindLambda(double x, R& rng) {
  return LambdaSelector(x)(rng);
}

class LambdaSampler {
 public:
  using Node = TermNode;
  using Result = Term;

  explicit LambdaSampler(double x = LambdaRho()) : selector_(x) {}

  double x() const { return selector_.x(); }

  // Writes one attempt into `nodes` (cleared first). Returns the size, or
  // nothing once the attempt can no longer fit under the ceiling.
  template <UniformSource R>
  std::optional<std::uint64_t> GenerateInto(std::uint64_t ceiling, R& rng,
                                            std::vector<TermNode>& nodes) const {
    nodes.clear();
    std::uint64_t size = 0;
    std::uint64_t holes = 1;
    while (holes > 0) {
      --holes;
      switch (selector_(rng)) {
        case LambdaKind::kVariable: {
          const std::uint64_t i = DrawIndex(selector_.x(), rng);
          nodes.push_back({TermKind::kIndex, i});
          size += i + 1;
          break;
        }
        case LambdaKind::kAbstraction:
          nodes.push_back({TermKind::kAbs, 0});
          size += 2;
          holes += 1;
          break;
        case LambdaKind::kApplication:
          nodes.push_back({TermKind::kApp, 0});
          size += 2;
          holes += 2;
          break;
      }
      // Every open hole still needs a term of size >= 2.
      if (size > ceiling || 2 * holes > ceiling - size) return std::nullopt;
    }
    return size;
  }

  template <UniformSource R>
  GenOutcome<Term> operator()(std::uint64_t ceiling, R& rng) const {
    std::vector<TermNode> nodes;
    const auto size = GenerateInto(ceiling, rng, nodes);
    if (!size) return GenOutcome<Term>::Exceeded();
    return GenOutcome<Term>::Ok(Term::FromNodes(std::move(nodes)), *size);
  }

  static Term Finish(std::vector<TermNode> nodes) {
    return Term::FromNodes(std::move(nodes));
  }

 private:
  LambdaSelector selector_;
};

namespace internal {

// Preorder tree sampler over kinds with arities 0, 1, 2 (Motzkin) or 0, 2
// (binary). thresholds[i] is the cumulative probability of kinds 0..i.
template <class Tree, class Kind, std::size_t N>
class TreeSampler {
 public:
  TreeSampler(double x, std::array<double, N> thresholds,
              std::array<Kind, N + 1> kinds, std::array<int, N + 1> arity)
      : x_(x), thresholds_(thresholds), kinds_(kinds), arity_(arity) {}

  double x() const { return x_; }

  using Node = Kind;
  using Result = Tree;

  // Preorder kinds into `out`; returns the size, or nullopt past the ceiling.
  template <UniformSource R>
  std::optional<std::uint64_t> GenerateInto(std::uint64_t ceiling, R& rng,
                                            std::vector<Kind>& out) const {
    out.clear();
    std::uint64_t holes = 1;
    while (holes > 0) {
      --holes;
      const double u = rng.Uniform();
      std::size_t pick = N;
      for (std::size_t i = 0; i < N; ++i) {
        if (u < thresholds_[i]) {
          pick = i;
          break;
        }
      }
      out.push_back(kinds_[pick]);
      holes += static_cast<std::uint64_t>(arity_[pick]);
      if (out.size() + holes > ceiling) return std::nullopt;
    }
    return out.size();
  }

  template <UniformSource R>
  GenOutcome<Tree> operator()(std::uint64_t ceiling, R& rng) const {
    std::vector<Kind> out;
    const auto size = GenerateInto(ceiling, rng, out);
    if (!size) return GenOutcome<Tree>::Exceeded();
    return GenOutcome<Tree>::Ok(Tree::FromKinds(std::move(out)), *size);
  }

  static Tree Finish(std::vector<Kind> kinds) {
    return Tree::FromKinds(std::move(kinds));
  }

 private:
  double x_;
  std::array<double, N> thresholds_;
  std::array<Kind, N + 1> kinds_;
  std::array<int, N + 1> arity_;
};

}  // namespace internal

// Leaf / unary / binary with probabilities x/M(x), x, x M(x); exactly 1/3
// each at the critical value 1/3.
class MotzkinSampler
    : public internal::TreeSampler<MTree, MTreeKind, 2> {
 public:
  explicit MotzkinSampler(double x = GFSpec::Motzkin().critical())
      : TreeSampler(x, Thresholds(x),
                    {MTreeKind::kLeaf, MTreeKind::kUnary, MTreeKind::kBinary},
                    {0, 1, 2}) {}

 private:
  static std::array<double, 2> Thresholds(double x) {
    const GFSpec spec = GFSpec::Motzkin();
    if (std::abs(x - spec.critical()) <= 1e-12) return {1.0 / 3, 2.0 / 3};
    const BranchProbs p = ComputeBranchProbs(spec, x);
    return {p[0], p[0] + p[1]};
  }
};

// Leaf / node with probabilities x/B(x), x B(x); 1/2 each at x = 1/2.
class BinarySampler : public internal::TreeSampler<BTree, BTreeKind, 1> {
 public:
  explicit BinarySampler(double x = GFSpec::Binary().critical())
      : TreeSampler(x, Thresholds(x), {BTreeKind::kLeaf, BTreeKind::kNode},
                    {0, 2}) {}

 private:
  static std::array<double, 1> Thresholds(double x) {
    const GFSpec spec = GFSpec::Binary();
    if (std::abs(x - spec.critical()) <= 1e-12) return {0.5};
    return {ComputeBranchProbs(spec, x)[0]};
  }
};

// Ceiled samplers at the critical values.
template <UniformSource R>
GenOutcome<Term> CeiledSampleLambda(std::uint64_t ceiling, R& rng) {
  if (ceiling < 2) throw DomainError("lambda ceiling must be >= 2");
  static const LambdaSampler sampler;
  return sampler(ceiling, rng);
}

template <UniformSource R>
GenOutcome<MTree> CeiledSampleMotzkin(std::uint64_t ceiling, R& rng) {
  if (ceiling < 1) throw DomainError("Motzkin ceiling must be >= 1");
  static const MotzkinSampler sampler;
  return sampler(ceiling, rng);
}

template <UniformSource R>
GenOutcome<BTree> CeiledSampleBinary(std::uint64_t ceiling, R& rng) {
  if (ceiling < 1) throw DomainError("binary ceiling must be >= 1");
  static const BinarySampler sampler;
  return sampler(ceiling, rng);
}

namespace internal {

inline void CheckFreeParameter(const GFSpec& spec, double x,
                               std::uint64_t cap) {
  if (!(x > 0.0) || !(x < spec.critical())) {
    throw DomainError("free samplers need 0 < x < rho; use a ceiled sampler "
                      "at the critical value");
  }
  if (cap > kFreeSamplerCap) {
    throw DomainError("free sampler cap is at most " +
                      std::to_string(kFreeSamplerCap));
  }
}

}  // namespace internal

// Free samplers: x strictly below the critical value, size hard-capped.
template <UniformSource R>
GenOutcome<Term> FreeSampleLambda(double x, R& rng,
                                  std::uint64_t cap = kFreeSamplerCap) {
  internal::CheckFreeParameter(GFSpec::Lambda(), x, cap);
  return LambdaSampler(x)(cap, rng);
}

template <UniformSource R>
GenOutcome<MTree> FreeSampleMotzkin(double x, R& rng,
                                    std::uint64_t cap = kFreeSamplerCap) {
  internal::CheckFreeParameter(GFSpec::Motzkin(), x, cap);
  return MotzkinSampler(x)(cap, rng);
}

template <UniformSource R>
GenOutcome<BTree> FreeSampleBinary(double x, R& rng,
                                   std::uint64_t cap = kFreeSamplerCap) {
  internal::CheckFreeParameter(GFSpec::Binary(), x, cap);
  return BinarySampler(x)(cap, rng);
}

// Runs `sampler(max_size, rng)` until an outcome has size >= min_size.
// Throws AttemptsExhaustedError after w.max_attempts rejections.
template <class Sampler, UniformSource R>
auto SampleInWindow(const Sampler& sampler, const WindowSpec& w, R& rng) {
  w.Validate();
  if constexpr (requires(std::vector<typename Sampler::Node>& buffer) {
                  sampler.GenerateInto(w.max_size, rng, buffer);
                }) {
    // One buffer for all attempts: rejected draws cost no allocation.
    std::vector<typename Sampler::Node> buffer;
    for (std::uint64_t attempt = 0; attempt < w.max_attempts; ++attempt) {
      const auto size = sampler.GenerateInto(w.max_size, rng, buffer);
      if (size && *size >= w.min_size) {
        return Sampler::Finish(std::move(buffer));
      }
    }
  } else {
    for (std::uint64_t attempt = 0; attempt < w.max_attempts; ++attempt) {
      auto outcome = sampler(w.max_size, rng);
      if (outcome.ok() && outcome.size() >= w.min_size) {
        return std::move(outcome.value());
      }
    }
  }
  throw AttemptsExhaustedError(w.max_attempts);
}

}  // namespace lambdagen

#endif  // LAMBDAGEN_BOLTZMANN_H_
