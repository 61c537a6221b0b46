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

#include "lambdagen/counting.h"

#include <mutex>

namespace lambdagen {

CountTable& CountTable::Shared() {
  static CountTable table;
  return table;
}

BigNat CountTable::Plain(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < plain_.size()) return plain_[n];
  }
  std::unique_lock lock(mutex_);
  GrowPlain(n);
  return plain_[n];
}

BigNat CountTable::Bounded(std::size_t m, std::size_t n) {
  if (m + 1 >= n) return Plain(n);
  {
    std::shared_lock lock(mutex_);
    if (m < bounded_.size() && n < bounded_[m].size()) return bounded_[m][n];
  }
  std::unique_lock lock(mutex_);
  GrowBounded(m, n);
  return bounded_[m][n];
}

BigNat CountTable::Motzkin(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < motzkin_.size()) return motzkin_[n];
  }
  std::unique_lock lock(mutex_);
  GrowMotzkin(n);
  return motzkin_[n];
}

BigNat CountTable::Binary(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < binary_.size()) return binary_[n];
  }
  std::unique_lock lock(mutex_);
  GrowBinary(n);
  return binary_[n];
}

void CountTable::Freeze(std::size_t n, std::size_t m) {
  std::unique_lock lock(mutex_);
  GrowPlain(n);
  GrowMotzkin(n);
  GrowBinary(n);
  for (std::size_t row = 0; row <= m && row + 1 < n; ++row) {
    GrowBounded(row, n);
  }
}

void CountTable::GrowPlain(std::size_t n) {
  while (plain_.size() <= n) {
    const std::size_t size = plain_.size();
    if (size < 2) {
      plain_.emplace_back(0);
      continue;
    }
    const std::size_t rest = size - 2;
    BigNat count = 1 + plain_[rest];
    for (std::size_t k = 0; k <= rest; ++k) {
      count += plain_[k] * plain_[rest - k];
    }
    plain_.push_back(std::move(count));
  }
}

void CountTable::GrowMotzkin(std::size_t n) {
  while (motzkin_.size() <= n) {
    const std::size_t size = motzkin_.size();
    if (size == 0) {
      motzkin_.emplace_back(0);
      continue;
    }
    const std::size_t rest = size - 1;
    BigNat count = (size == 1 ? 1 : 0) + motzkin_[rest];
    for (std::size_t k = 0; k <= rest; ++k) {
      count += motzkin_[k] * motzkin_[rest - k];
    }
    motzkin_.push_back(std::move(count));
  }
}

void CountTable::GrowBinary(std::size_t n) {
  while (binary_.size() <= n) {
    const std::size_t size = binary_.size();
    if (size == 0) {
      binary_.emplace_back(0);
      continue;
    }
    const std::size_t rest = size - 1;
    BigNat count = size == 1 ? 1 : 0;
    for (std::size_t k = 0; k <= rest; ++k) {
      count += binary_[k] * binary_[rest - k];
    }
    binary_.push_back(std::move(count));
  }
}

const BigNat& CountTable::BoundedLocked(std::size_t m, std::size_t n) const {
  return m + 1 >= n ? plain_[n] : bounded_[m][n];
}

void CountTable::GrowBounded(std::size_t m, std::size_t n) {
  if (m + 1 >= n) {
    GrowPlain(n);
    return;
  }
  GrowPlain(n);
  while (bounded_.size() <= m) bounded_.emplace_back();
  std::vector<BigNat>& row = bounded_[m];
  if (row.size() > n) return;
  // The abstraction term needs row m+1 up to n-2.
  GrowBounded(m + 1, n - 2);
  // Entries with n' <= m+1 are never read from the row; pad them.
  if (row.size() < m + 2) row.resize(m + 2);
  while (row.size() <= n) {
    const std::size_t size = row.size();
    const std::size_t rest = size - 2;
    // size >= m + 2 here, so the index term [m >= size - 1] is zero.
    BigNat count = BoundedLocked(m + 1, rest);
    for (std::size_t k = 0; k <= rest; ++k) {
      count += BoundedLocked(m, k) * BoundedLocked(m, rest - k);
    }
    row.push_back(std::move(count));
  }
}

BigNat CountPlain(std::size_t n) { return CountTable::Shared().Plain(n); }

BigNat CountBounded(std::size_t m, std::size_t n) {
  return CountTable::Shared().Bounded(m, n);
}

BigNat CountClosed(std::size_t n) { return CountTable::Shared().Closed(n); }

BigNat CountMotzkin(std::size_t n) { return CountTable::Shared().Motzkin(n); }

BigNat CountBinary(std::size_t n) { return CountTable::Shared().Binary(n); }

}  // namespace lambdagen
