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

#ifndef LAMBDAGEN_RANDOM_H_
#define LAMBDAGEN_RANDOM_H_

#include <concepts>
#include <cstdint>
#include <random>

#include "lambdagen/counting.h"

namespace lambdagen {

// Anything that hands out uniform doubles in [0, 1). Samplers are templates
// over this so tests can script the stream.
template <class R>
concept UniformSource = requires(R& r) {
  { r.Uniform() } -> std::convertible_to<double>;
};

// Seedable deterministic generator. The same seed yields the same sequence
// of draws on every platform: doubles are built from the top 53 bits of
// mt19937_64 rather than through a standard distribution.
class RandomState {
 public:
  explicit RandomState(std::uint64_t seed) : engine_(seed) {}

  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t Bits() { return engine_(); }

  // Uniform integer in [0, bound) by rejection from the smallest enclosing
  // power of two, so there is no modulo bias. bound > 0.
  BigNat UniformBelow(const BigNat& bound);

  // Seed drawn from the system entropy source.
  static std::uint64_t EntropySeed();

 private:
  std::mt19937_64 engine_;
};

}  // namespace lambdagen

#endif  // LAMBDAGEN_RANDOM_H_
