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

#include "posetforge/ferrers.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace posetforge {

bool IsFerrers(const FerrersDiagram& d) {
  if (d.a < 0 || d.b < 0 || d.heights.size() != static_cast<std::size_t>(d.a)) return false;
  for (std::size_t i = 0; i < d.heights.size(); ++i) {
    if (d.heights[i] < 0 || d.heights[i] > d.b) return false;
    if (i && d.heights[i - 1] < d.heights[i]) return false;
  }
  return true;
}

std::string PartitionLabel(const FerrersDiagram& d) {
  std::vector<int> parts;
  for (int h : d.heights) {
    if (h > 0) parts.push_back(h);
  }
  return TupleLabel(parts);
}

std::vector<int> ParsePartition(const std::string& text) {
  std::vector<int> parts;
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  if (body.empty()) return parts;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = std::min(body.find(',', start), body.size());
    int value = 0;
    const char* first = body.data() + start;
    const char* last = body.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0) {
      throw Error(ErrorCode::kBadParameters, "malformed partition '" + text + "'");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i - 1] < parts[i]) {
      throw Error(ErrorCode::kBadParameters, "partition '" + text + "' is not weakly decreasing");
    }
  }
  return parts;
}

FerrersDiagram DiagramInBox(int a, int b, const std::vector<int>& parts) {
  FerrersDiagram d;
  d.a = a;
  d.b = b;
  d.heights.assign(static_cast<std::size_t>(std::max(a, 0)), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) continue;
    if (i >= d.heights.size()) {
      throw Error(ErrorCode::kBadParameters, "partition does not fit the box");
    }
    d.heights[i] = parts[i];
  }
  if (!IsFerrers(d)) throw Error(ErrorCode::kBadParameters, "partition does not fit the box");
  return d;
}

FerrersDiagram DiagramFromPartition(const std::vector<int>& parts) {
  int a = 0;
  for (int p : parts) a += p > 0;
  const int b = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  return DiagramInBox(a, b, parts);
}

int DurfeeLength(const FerrersDiagram& d) {
  int k = 0;
  while (k < d.a && d.heights[k] >= k + 1) ++k;
  return k;
}

std::vector<FerrersDiagram> FerrersDiagrams(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::kBadParameters, "negative box");
  std::vector<FerrersDiagram> out;
  // Weakly decreasing height tuples = weak chains read backwards.
  for (const WeakChain& w : WeakChains(b, a)) {
    FerrersDiagram d{a, b, std::vector<int>(w.entries.rbegin(), w.entries.rend())};
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<FerrersDiagram> DiagramsWithDurfee(int a, int b, int k) {
  if (k < 0 || k > std::min(a, b)) {
    throw Error(ErrorCode::kBadParameters, "Durfee length " + std::to_string(k) +
                                               " does not fit a " + std::to_string(a) + "x" +
                                               std::to_string(b) + " box");
  }
  std::vector<FerrersDiagram> out;
  for (auto& d : FerrersDiagrams(a, b)) {
    if (DurfeeLength(d) == k) out.push_back(std::move(d));
  }
  return out;
}

Poset DkPoset(int a, int b, int k) {
  const auto diagrams = DiagramsWithDurfee(a, b, k);
  const std::size_t n = diagrams.size();
  std::vector<std::string> labels;
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index x = 0; x < n; ++x) {
    labels.push_back(PartitionLabel(diagrams[x]));
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      bool inside = true;
      for (int i = 0; i < a && inside; ++i) inside = diagrams[x].heights[i] <= diagrams[y].heights[i];
      if (inside) rel[x].set(y);
    }
  }
  return Poset::FromStrictOrder(std::move(labels), std::move(rel));
}

DurfeeParts DurfeeDecompose(const FerrersDiagram& d) {
  DurfeeParts parts;
  const int k = DurfeeLength(d);
  parts.k = k;
  parts.above = FerrersDiagram{k, d.b - k, std::vector<int>(k, 0)};
  parts.right = FerrersDiagram{d.a - k, k, std::vector<int>(d.a - k, 0)};
  for (int i = 0; i < k; ++i) parts.above.heights[i] = d.heights[i] - k;
  for (int i = k; i < d.a; ++i) parts.right.heights[i - k] = d.heights[i];
  return parts;
}

FerrersDiagram DurfeeCompose(int a, int b, const DurfeeParts& parts) {
  const int k = parts.k;
  if (k < 0 || k > std::min(a, b) || parts.above.a != k || parts.above.b != b - k ||
      parts.right.a != a - k || parts.right.b != k || !IsFerrers(parts.above) ||
      !IsFerrers(parts.right)) {
    throw Error(ErrorCode::kBadParameters, "Durfee parts do not match the box");
  }
  FerrersDiagram d{a, b, std::vector<int>(a, 0)};
  for (int i = 0; i < k; ++i) d.heights[i] = k + parts.above.heights[i];
  for (int i = k; i < a; ++i) d.heights[i] = parts.right.heights[i - k];
  return d;
}

Ideal DiagramToIdeal(const FerrersDiagram& d) {
  Bitset members(static_cast<std::size_t>(d.a) * d.b);
  for (int i = 1; i <= d.a; ++i) {
    for (int j = 1; j <= d.heights[i - 1]; ++j) members.set(GridIndex(d.b, i, j));
  }
  return Ideal{std::move(members)};
}

FerrersDiagram IdealToDiagram(int a, int b, const Ideal& ideal) {
  if (!IsIdeal(Grid(a, b), ideal.members)) {
    throw Error(ErrorCode::kNotAnIdeal, "set is not an ideal of the grid");
  }
  FerrersDiagram d{a, b, std::vector<int>(a, 0)};
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      if (ideal.members[GridIndex(b, i, j)]) d.heights[i - 1] = j;
    }
  }
  return d;
}

namespace {

struct Point {
  int x, y;
};

// Points sorted by x; antichain points of a grid-like order then have
// strictly decreasing y.
std::vector<Point> SortedPresentation(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return p.x < q.x; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x && pts[i - 1].y > pts[i].y)) {
      throw Error(ErrorCode::kNotAnAntichain, "points are not pairwise incomparable");
    }
  }
  return pts;
}

}  // namespace

std::pair<KSubset, KSubset> PhiGrid(int a, int b, const Antichain& antichain, std::size_t k) {
  if (antichain.size() != k) {
    throw Error(ErrorCode::kSizeMismatch, "antichain has " + std::to_string(antichain.size()) +
                                              " elements, expected " + std::to_string(k));
  }
  std::vector<Point> pts;
  for (Index v : antichain.members) {
    if (v >= static_cast<Index>(a) * b) throw Error(ErrorCode::kNotAnAntichain, "index outside grid");
    pts.push_back(Point{static_cast<int>(v / b) + 1, static_cast<int>(v % b) + 1});
  }
  pts = SortedPresentation(std::move(pts));
  KSubset xs{a, {}}, ys{b, {}};
  for (const Point& p : pts) xs.entries.push_back(p.x);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) ys.entries.push_back(it->y);
  return {xs, ys};
}

Antichain PhiGridInverse(int a, int b, const KSubset& xs, const KSubset& ys) {
  if (xs.k() != ys.k() || xs.n != a || ys.n != b || !IsKSubset(xs) || !IsKSubset(ys)) {
    throw Error(ErrorCode::kBadParameters, "not an element of C(a,k) x C(b,k)");
  }
  const std::size_t k = xs.k();
  Antichain out;
  for (std::size_t t = 0; t < k; ++t) {
    out.members.push_back(GridIndex(b, xs.entries[t], ys.entries[k - 1 - t]));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

KSubset PhiSpin(int n, const Antichain& antichain) {
  const auto pairs = KSubsets(n + 2, 2);
  std::vector<Point> pts;
  for (Index v : antichain.members) {
    if (v >= pairs.size()) throw Error(ErrorCode::kNotAnAntichain, "index outside C(n+2,2)");
    pts.push_back(Point{pairs[v].entries[0], pairs[v].entries[1]});
  }
  pts = SortedPresentation(std::move(pts));
  KSubset out{n + 2, {}};
  for (const Point& p : pts) out.entries.push_back(p.x);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) out.entries.push_back(it->y);
  if (!IsKSubset(out)) throw Error(ErrorCode::kNotAnAntichain, "image is not increasing");
  return out;
}

Antichain PhiSpinInverse(int n, const KSubset& s) {
  if (s.n != n + 2 || s.k() % 2 != 0 || !IsKSubset(s)) {
    throw Error(ErrorCode::kBadParameters, "not an element of C(n+2,2k)");
  }
  std::map<std::vector<int>, Index> position;
  const auto pairs = KSubsets(n + 2, 2);
  for (Index i = 0; i < pairs.size(); ++i) position.emplace(pairs[i].entries, i);
  const std::size_t k = s.k() / 2;
  Antichain out;
  for (std::size_t t = 0; t < k; ++t) {
    out.members.push_back(position.at({s.entries[t], s.entries[2 * k - 1 - t]}));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace posetforge
