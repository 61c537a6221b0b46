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

#ifndef LAMBDAGEN_UNRANK_H_
#define LAMBDAGEN_UNRANK_H_

// Bijections between ranks 1..S(n) and terms of size n.
//
// Rank order within a size: abstractions first (in the order of their
// bodies), then applications grouped by the size j = 0, 1, ... of their
// function part, each group ordered by (function rank, argument rank)
// lexicographically, and finally the single index term n-1.

#include <cstddef>
#include <functional>
#include <vector>

#include "lambdagen/counting.h"
#include "lambdagen/random.h"
#include "lambdagen/terms.h"

namespace lambdagen {

inline constexpr std::size_t kDefaultEnumerationCap = 16;

// 1 <= k <= S(inf, n), else RangeError.
Term UnrankPlain(std::size_t n, const BigNat& k,
                 CountTable& counts = CountTable::Shared());

// Inverse of UnrankPlain at n = TermSize(t).
BigNat RankPlain(TermView t, CountTable& counts = CountTable::Shared());

// The k-th term of size n with at most m free indices, 1 <= k <= S(m, n).
// m = 0 ranks the closed terms.
Term UnrankBounded(std::size_t m, std::size_t n, const BigNat& k,
                   CountTable& counts = CountTable::Shared());

// Calls `visit` on every term of size n in rank order. The view is only
// valid during the call. No cap: the caller decides what is affordable.
void ForEachPlain(std::size_t n, const std::function<void(TermView)>& visit);

// All terms of size n in rank order. Throws CapExceededError if n > cap.
std::vector<Term> Enumerate(std::size_t n,
                            std::size_t cap = kDefaultEnumerationCap);

// Exactly uniform term of size n: a uniform rank, unranked. Throws
// DomainError if there is no term of size n.
Term RandomByRank(std::size_t n, RandomState& rng,
                  CountTable& counts = CountTable::Shared());

}  // namespace lambdagen

#endif  // LAMBDAGEN_UNRANK_H_
