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

#include "lambdagen/unrank.h"

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lambdagen/errors.h"

namespace lambdagen {
namespace {

// Locates rank r (1-based) among the applications of total size rest + 2,
// given the family count for each part size; returns the function size and
// the (function, argument) ranks.
struct AppSplit {
  std::size_t fun_size;
  BigNat fun_rank;
  BigNat arg_rank;
};

template <class Count>
AppSplit SplitApplication(std::size_t rest, BigNat r, Count count) {
  for (std::size_t j = 0; j <= rest; ++j) {
    const BigNat right = count(rest - j);
    const BigNat block = count(j) * right;
    if (block == 0) continue;
    if (r <= block) {
      BigNat quotient, remainder;
      boost::multiprecision::divide_qr(BigNat(r - 1), right, quotient,
                                       remainder);
      return {j, quotient + 1, remainder + 1};
    }
    r -= block;
  }
  // Unreachable when r is within range.
  throw RangeError("application rank out of range");
}

void UnrankPlainInto(CountTable& counts, std::size_t n, BigNat k,
                     std::vector<TermNode>& out) {
  while (true) {
    if (k == counts.Plain(n)) {
      out.push_back({TermKind::kIndex, n - 1});
      return;
    }
    const BigNat abstractions = counts.Plain(n - 2);
    if (k <= abstractions) {
      out.push_back({TermKind::kAbs, 0});
      n -= 2;
      continue;
    }
    const AppSplit split =
        SplitApplication(n - 2, k - abstractions,
                         [&](std::size_t s) { return counts.Plain(s); });
    out.push_back({TermKind::kApp, 0});
    UnrankPlainInto(counts, split.fun_size, split.fun_rank, out);
    n = n - 2 - split.fun_size;
    k = split.arg_rank;
  }
}

void UnrankBoundedInto(CountTable& counts, std::size_t m, std::size_t n,
                       BigNat k, std::vector<TermNode>& out) {
  while (true) {
    // The bound is vacuous from here on: same order as the plain ranking.
    if (m + 1 >= n) {
      UnrankPlainInto(counts, n, std::move(k), out);
      return;
    }
    const BigNat abstractions = counts.Bounded(m + 1, n - 2);
    if (k <= abstractions) {
      out.push_back({TermKind::kAbs, 0});
      ++m;
      n -= 2;
      continue;
    }
    const AppSplit split =
        SplitApplication(n - 2, k - abstractions,
                         [&](std::size_t s) { return counts.Bounded(m, s); });
    out.push_back({TermKind::kApp, 0});
    UnrankBoundedInto(counts, m, split.fun_size, split.fun_rank, out);
    n = n - 2 - split.fun_size;
    k = split.arg_rank;
  }
}

void CheckRank(const BigNat& k, const BigNat& count, std::size_t n) {
  if (k < 1 || k > count) {
    throw RangeError("rank " + k.str() + " outside [1, " + count.str() +
                     "] for size " + std::to_string(n));
  }
}

class PlainEnumerator {
 public:
  explicit PlainEnumerator(const std::function<void(TermView)>& visit)
      : visit_(visit) {}

  void Run(std::size_t n) {
    Generate(n, [this] { visit_(TermView(buffer_)); });
  }

 private:
  // Appends each size-n term to the buffer in rank order and calls `done`
  // while it is in place. Every size >= 2 has at least one term.
  void Generate(std::size_t n, const std::function<void()>& done) {
    if (n < 2) return;
    if (n >= 4) {
      buffer_.push_back({TermKind::kAbs, 0});
      Generate(n - 2, done);
      buffer_.pop_back();
    }
    const std::size_t rest = n - 2;
    for (std::size_t j = 2; j + 2 <= rest; ++j) {
      buffer_.push_back({TermKind::kApp, 0});
      Generate(j, [&] { Generate(rest - j, done); });
      buffer_.pop_back();
    }
    buffer_.push_back({TermKind::kIndex, n - 1});
    done();
    buffer_.pop_back();
  }

  const std::function<void(TermView)>& visit_;
  std::vector<TermNode> buffer_;
};

}  // namespace

Term UnrankPlain(std::size_t n, const BigNat& k, CountTable& counts) {
  CheckRank(k, counts.Plain(n), n);
  std::vector<TermNode> nodes;
  UnrankPlainInto(counts, n, k, nodes);
  return Term::FromNodes(std::move(nodes));
}

BigNat RankPlain(TermView t, CountTable& counts) {
  // Subterms follow their parent in preorder, so a reverse sweep sees both
  // operands of an application on top of the stacks (function on top).
  const std::span<const TermNode> nodes = t.nodes();
  std::vector<std::size_t> sizes;
  std::vector<BigNat> ranks;
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const TermNode& node = nodes[i];
    switch (node.kind) {
      case TermKind::kIndex:
        sizes.push_back(node.index + 1);
        ranks.push_back(counts.Plain(node.index + 1));
        break;
      case TermKind::kAbs:
        sizes.back() += 2;
        break;
      case TermKind::kApp: {
        const std::size_t fun_size = sizes.back();
        sizes.pop_back();
        const BigNat fun_rank = std::move(ranks.back());
        ranks.pop_back();
        const std::size_t arg_size = sizes.back();
        const std::size_t rest = fun_size + arg_size;
        BigNat rank = counts.Plain(rest);
        for (std::size_t j = 0; j < fun_size; ++j) {
          rank += counts.Plain(j) * counts.Plain(rest - j);
        }
        rank += (fun_rank - 1) * counts.Plain(arg_size);
        ranks.back() += rank;
        sizes.back() = rest + 2;
        break;
      }
    }
  }
  return std::move(ranks.back());
}

Term UnrankBounded(std::size_t m, std::size_t n, const BigNat& k,
                   CountTable& counts) {
  CheckRank(k, counts.Bounded(m, n), n);
  std::vector<TermNode> nodes;
  UnrankBoundedInto(counts, m, n, k, nodes);
  return Term::FromNodes(std::move(nodes));
}

void ForEachPlain(std::size_t n, const std::function<void(TermView)>& visit) {
  PlainEnumerator(visit).Run(n);
}

std::vector<Term> Enumerate(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceededError("enumeration of size " + std::to_string(n) +
                           " exceeds the cap " + std::to_string(cap));
  }
  std::vector<Term> terms;
  ForEachPlain(n, [&](TermView t) {
    terms.push_back(
        Term::FromNodes({t.nodes().begin(), t.nodes().end()}));
  });
  return terms;
}

Term RandomByRank(std::size_t n, RandomState& rng, CountTable& counts) {
  const BigNat total = counts.Plain(n);
  if (total == 0) {
    throw DomainError("no term of size " + std::to_string(n));
  }
  return UnrankPlain(n, rng.UniformBelow(total) + 1, counts);
}

}  // namespace lambdagen
