// Copyright 2026 The posetforge Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetforge/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace posetforge {
namespace {

using Matrix = std::vector<std::uint8_t>;  // row-major n x n, 1 = strictly less

std::uint64_t Encode(const Matrix& m, std::size_t n, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      code = (code << 1) | m[perm[i] * n + perm[j]];
    }
  }
  return code;
}

std::uint64_t CanonicalOf(const Matrix& m, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, Encode(m, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Poset Decode(std::uint64_t code, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t bit = n * n - 1 - (i * n + j);
      if ((code >> bit) & 1) rel[i].set(j);
    }
  }
  return Poset::FromStrictOrder(std::move(labels), std::move(rel));
}

}  // namespace

std::uint64_t CanonicalCode(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kMaxCanonicalElements) {
    throw Error(ErrorCode::kSizeLimitExceeded, "canonical codes are limited to 7 elements");
  }
  Matrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = p.less(i, j);
  }
  return CanonicalOf(m, n);
}

std::vector<Poset> PosetsUpToIsomorphism(std::size_t n) {
  if (n > kMaxCorpusElements) {
    throw Error(ErrorCode::kSizeLimitExceeded, "corpus is limited to 6 elements");
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::uint64_t> codes;
  Matrix m(n * n, 0);
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1) m[slots[s].first * n + slots[s].second] = 1;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = i + 1; j < n && transitive; ++j) {
        if (!m[i * n + j]) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (m[j * n + k] && !m[i * n + k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) codes.insert(CanonicalOf(m, n));
  }
  std::vector<Poset> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(Decode(code, n));
  return out;
}

std::vector<Poset> PosetCorpus(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto level = PosetsUpToIsomorphism(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace posetforge
