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

#ifndef LAMBDAGEN_COUNTING_H_
#define LAMBDAGEN_COUNTING_H_

// Exact counts of lambda terms and trees of a given size.
//
//   S(inf, n)  plain terms          S(inf,n+2) = 1 + S(inf,n) + sum_k S(inf,k) S(inf,n-k)
//   S(m, n)    at most m free       S(m,n+2)   = [m >= n+1] + S(m+1,n) + sum_k S(m,k) S(m,n-k)
//   M(n)       Motzkin trees        M(n) = [n=1] + M(n-1) + sum_k M(k) M(n-1-k)
//   B(n)       binary trees         B(n) = [n=1] + sum_k B(k) B(n-1-k)
//
// All four are zero at sizes 0 (and S at size 1).

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambdagen {

using BigNat = boost::multiprecision::cpp_int;

// Memoised count tables, grown on demand.
//
// Thread-safe: lookups of already computed entries take a shared lock and
// growth takes an exclusive one. Freeze() computes everything up to a bound
// in advance so later readers never contend on the writer lock.
class CountTable {
 public:
  CountTable() = default;
  CountTable(const CountTable&) = delete;
  CountTable& operator=(const CountTable&) = delete;

  BigNat Plain(std::size_t n);
  // Redirects to Plain(n) when m >= n - 1, where the bound is vacuous.
  BigNat Bounded(std::size_t m, std::size_t n);
  BigNat Closed(std::size_t n) { return Bounded(0, n); }
  BigNat Motzkin(std::size_t n);
  BigNat Binary(std::size_t n);

  // Populates every family up to size n, and S(m', n') for m' <= m.
  void Freeze(std::size_t n, std::size_t m = 0);

  // Process-wide table used by the free functions below.
  static CountTable& Shared();

 private:
  // Callers hold mutex_ exclusively.
  void GrowPlain(std::size_t n);
  void GrowMotzkin(std::size_t n);
  void GrowBinary(std::size_t n);
  void GrowBounded(std::size_t m, std::size_t n);
  const BigNat& BoundedLocked(std::size_t m, std::size_t n) const;

  mutable std::shared_mutex mutex_;
  std::vector<BigNat> plain_;
  std::vector<BigNat> motzkin_;
  std::vector<BigNat> binary_;
  // bounded_[m][n] = S(m, n); a row is only consulted for n >= m + 2.
  // A deque keeps rows in place while later rows are appended.
  std::deque<std::vector<BigNat>> bounded_;
};

BigNat CountPlain(std::size_t n);
BigNat CountBounded(std::size_t m, std::size_t n);
BigNat CountClosed(std::size_t n);
BigNat CountMotzkin(std::size_t n);
BigNat CountBinary(std::size_t n);

}  // namespace lambdagen

#endif  // LAMBDAGEN_COUNTING_H_
