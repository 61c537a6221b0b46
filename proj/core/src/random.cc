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

#include "lambdagen/random.h"

#include "lambdagen/errors.h"

namespace lambdagen {

BigNat RandomState::UniformBelow(const BigNat& bound) {
  if (bound <= 0) throw DomainError("UniformBelow needs a positive bound");
  if (bound == 1) return 0;
  const BigNat top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  while (true) {
    BigNat candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t word = engine_();
      if (i == 0 && spare > 0) word >>= spare;
      candidate <<= 64;
      candidate |= word;
    }
    if (candidate < bound) return candidate;
  }
}

std::uint64_t RandomState::EntropySeed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

}  // namespace lambdagen
