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

#include "posetforge/theorem_suite.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <set>

#include "posetforge/antichain_order.hpp"
#include "posetforge/corpus.hpp"
#include "posetforge/ferrers.hpp"
#include "posetforge/io.hpp"
#include "posetforge/lattice.hpp"
#include "posetforge/root_poset.hpp"
#include "posetforge/sequence.hpp"

namespace posetforge {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Caps

namespace {

struct CapField {
  const char* key;
  int Caps::*field;
  int limit;
};

constexpr CapField kCapFields[] = {
    {"ab", &Caps::ab, 6},         {"n", &Caps::n, 10},          {"m", &Caps::m, 8},
    {"root_n", &Caps::root_n, 8}, {"corpus", &Caps::corpus, 6},
};

}  // namespace

Caps ApplyCapOverrides(Caps caps, const std::map<std::string, std::string>& overrides) {
  for (const auto& [key, value] : overrides) {
    const CapField* field = nullptr;
    for (const auto& f : kCapFields) {
      if (key == f.key) field = &f;
    }
    if (!field) throw Error(ErrorCode::kBadParameters, "unknown cap '" + key + "'");
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || v < 0) {
      throw Error(ErrorCode::kBadParameters, "cap '" + key + "' needs a non-negative integer");
    }
    if (v > field->limit) {
      throw Error(ErrorCode::kBadParameters, "cap '" + key + "' is limited to " +
                                                 std::to_string(field->limit));
    }
    caps.*(field->field) = v;
  }
  return caps;
}

std::map<std::string, std::string> ParseCapList(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(ErrorCode::kBadParameters, "expected key=value, got '" + item + "'");
      }
      out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    start = comma + 1;
  }
  return out;
}

Caps CapsFromEnvironment() {
  const char* env = std::getenv("POSETFORGE_CAPS");
  if (!env) return Caps{};
  return ApplyCapOverrides(Caps{}, ParseCapList(env));
}

// ---------------------------------------------------------------------------
// Helpers shared by the checks

namespace {

void Pass(CheckReport& r, std::string summary, std::string exhaustion = "") {
  r.pass = true;
  r.summary = std::move(summary);
  r.exhaustion = std::move(exhaustion);
}

void Fail(CheckReport& r, std::string summary, json counterexample = json::object()) {
  r.pass = false;
  r.summary = std::move(summary);
  r.certificate["counterexample"] = std::move(counterexample);
}

std::string Params(std::initializer_list<std::pair<const char*, int>> values) {
  std::string s;
  for (const auto& [k, v] : values) {
    if (!s.empty()) s += ",";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

std::map<std::vector<int>, Index> TupleIndex(const std::vector<KSubset>& items) {
  std::map<std::vector<int>, Index> out;
  for (Index i = 0; i < items.size(); ++i) out.emplace(items[i].entries, i);
  return out;
}

std::map<std::vector<int>, Index> TupleIndex(const std::vector<WeakChain>& items) {
  std::map<std::vector<int>, Index> out;
  for (Index i = 0; i < items.size(); ++i) out.emplace(items[i].entries, i);
  return out;
}

// Mapped covers of P are exactly the covers of Q.
bool CoversCorrespond(const Poset& p, const Poset& q, const std::vector<Index>& forward) {
  std::set<IndexPair> mapped;
  for (const auto& [x, y] : p.cover_pairs()) mapped.emplace(forward[x], forward[y]);
  std::set<IndexPair> target(q.cover_pairs().begin(), q.cover_pairs().end());
  return mapped == target;
}

json Iso(const Poset& p, const Poset& q, const std::vector<Index>& forward) {
  PosetIso iso;
  iso.forward = forward;
  return IsoToJson(p, q, iso);
}

std::size_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

std::vector<std::pair<std::string, Poset>> MinusculeAtCaps(const CheckContext& ctx) {
  std::vector<std::pair<std::string, Poset>> out;
  for (const auto& kind : MinusculeCorpus(ctx.caps.ab, ctx.caps.n, ctx.caps.m)) {
    out.emplace_back(KindName(kind), ctx.minuscule(kind));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sequence posets

void CheckRankAndCovers(const CheckContext& ctx, CheckReport& r) {
  const int max_n = ctx.caps.n + 2;
  std::size_t posets = 0, pairs = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = KSubsets(n, k);
      const Poset c = CPoset(n, k);
      ++posets;
      for (Index x = 0; x < c.size(); ++x) {
        for (Index y = 0; y < c.size(); ++y) {
          ++pairs;
          const auto& sx = subsets[x];
          const auto& sy = subsets[y];
          const bool leq = GaleLeq(sx, sy);
          if (leq != c.leq(x, y)) return Fail(r, "order differs from componentwise comparison");
          if (leq && Rho(sx) > Rho(sy)) return Fail(r, "rho is not monotone", {c.label(x), c.label(y)});
          const bool cover = c.covered_by(x, y);
          if (cover != (leq && Rho(sy) == Rho(sx) + 1)) {
            return Fail(r, "cover does not match rank jump", {Params({{"n", n}, {"k", k}}), c.label(x), c.label(y)});
          }
          if (cover) {
            std::vector<int> only_x, only_y;
            std::set_difference(sx.entries.begin(), sx.entries.end(), sy.entries.begin(),
                                sy.entries.end(), std::back_inserter(only_x));
            std::set_difference(sy.entries.begin(), sy.entries.end(), sx.entries.begin(),
                                sx.entries.end(), std::back_inserter(only_y));
            if (only_x.size() != 1 || only_y.size() != 1 || only_y[0] != only_x[0] + 1) {
              return Fail(r, "cover is not a single +1 step", {c.label(x), c.label(y)});
            }
          }
        }
      }
    }
  }
  Pass(r, "rho is a rank function and covers are single +1 steps on C(n,k)",
       "all C(n,k) with 0<=k<=n<=" + std::to_string(max_n) + ": " + std::to_string(posets) +
           " posets, " + std::to_string(pairs) + " ordered pairs");
}

void CheckWeakChains(const CheckContext& ctx, CheckReport& r) {
  std::size_t instances = 0;
  json isos = json::array();
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      const auto chains = WeakChains(a, b);
      const Poset s = SPoset(a, b);
      const auto c_index = TupleIndex(KSubsets(a + b, b));
      const Poset c = CPoset(a + b, b);
      for (const auto& [x, y] : s.cover_pairs()) {
        int diff = 0;
        bool step = true;
        for (std::size_t t = 0; t < chains[x].b(); ++t) {
          const int d = chains[y].entries[t] - chains[x].entries[t];
          if (d == 1) ++diff;
          else if (d != 0) step = false;
        }
        if (!step || diff != 1) return Fail(r, "S(a,b) cover is not a single +1 step", {s.label(x), s.label(y)});
      }
      std::vector<Index> forward;
      for (const auto& w : chains) {
        const KSubset h = HMap(w);
        auto it = c_index.find(h.entries);
        if (!IsKSubset(h) || it == c_index.end()) return Fail(r, "h leaves C(a+b,b)", {TupleLabel(w.entries)});
        forward.push_back(it->second);
      }
      if (!VerifyIsomorphism(s, c, forward)) {
        return Fail(r, "h is not an isomorphism", {Params({{"a", a}, {"b", b}})});
      }
      ++instances;
      if (a == 2 && b == 2) isos.push_back({{"a", a}, {"b", b}, {"h", Iso(s, c, forward)}});
    }
  }
  r.certificate["sample"] = std::move(isos);
  Pass(r, "covers of S(a,b) are single +1 steps and h: S(a,b) -> C(a+b,b) is an isomorphism",
       "a,b in 0.." + std::to_string(ctx.caps.ab) + ": " + std::to_string(instances) + " instances");
}

void CheckFMap(const CheckContext& ctx, CheckReport& r) {
  std::size_t instances = 0;
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      const IdealLattice j = IdealsLattice(Grid(a, b));
      const Poset s = SPoset(a, b);
      const auto s_index = TupleIndex(WeakChains(a, b));
      std::vector<Index> forward;
      for (const Ideal& ideal : j.ideals) forward.push_back(s_index.at(FMap(a, b, ideal).entries));
      if (!VerifyIsomorphism(j.poset, s, forward)) {
        return Fail(r, "f is not an isomorphism", {Params({{"a", a}, {"b", b}})});
      }
      ++instances;
    }
  }
  Pass(r, "f: J([a]x[b]) -> S(a,b) is an isomorphism",
       "a,b in 0.." + std::to_string(ctx.caps.ab) + ": " + std::to_string(instances) + " instances");
}

void CheckGridIdealsAsGale(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      const IdealLattice j = IdealsLattice(Grid(a, b));
      const Poset c = CPoset(a + b, b);
      const auto c_index = TupleIndex(KSubsets(a + b, b));
      std::vector<Index> forward;
      for (const Ideal& ideal : j.ideals) forward.push_back(c_index.at(HMap(FMap(a, b, ideal)).entries));
      if (!VerifyIsomorphism(j.poset, c, forward)) {
        return Fail(r, "h o f is not an isomorphism", {Params({{"a", a}, {"b", b}})});
      }
      if (!FindIsomorphism(j.poset, c)) {
        return Fail(r, "isomorphism search disagrees with h o f", {Params({{"a", a}, {"b", b}})});
      }
      certs.push_back({{"a", a}, {"b", b}, {"size", c.size()}, {"h_of_f", Iso(j.poset, c, forward)}});
    }
  }
  r.certificate["isomorphisms"] = std::move(certs);
  Pass(r, "J([a]x[b]) = S(a,b) = C(a+b,b) via the explicit composite h o f",
       "a,b in 0.." + std::to_string(ctx.caps.ab));
}

void CheckGaleSymmetry(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      const Poset p = CPoset(a + b, b), q = CPoset(a + b, a);
      auto iso = FindIsomorphism(p, q);
      if (!iso) return Fail(r, "C(a+b,b) and C(a+b,a) not isomorphic", {Params({{"a", a}, {"b", b}})});
      certs.push_back({{"a", a}, {"b", b}, {"iso", IsoToJson(p, q, *iso)}});
    }
  }
  r.certificate["isomorphisms"] = std::move(certs);
  Pass(r, "C(a+b,b) = C(a+b,a)", "a,b in 0.." + std::to_string(ctx.caps.ab));
}

void CheckSequenceDistributive(const CheckContext& ctx, CheckReport& r) {
  std::size_t count = 0;
  const int max_n = ctx.caps.n + 1;
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k, ++count) {
      if (!IsDistributive(CPoset(n, k))) return Fail(r, "C(n,k) not distributive", {Params({{"n", n}, {"k", k}})});
    }
  }
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b, ++count) {
      if (!IsDistributive(SPoset(a, b))) return Fail(r, "S(a,b) not distributive", {Params({{"a", a}, {"b", b}})});
    }
  }
  Pass(r, "C(n,k) and S(a,b) are distributive lattices",
       "n<=" + std::to_string(max_n) + ", a,b<=" + std::to_string(ctx.caps.ab) + ": " +
           std::to_string(count) + " posets with Birkhoff witnesses");
}

// ---------------------------------------------------------------------------
// Grids and Ferrers diagrams

void CheckGridAntichains(const CheckContext& ctx, CheckReport& r) {
  std::size_t antichains = 0;
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      const Poset g = Grid(a, b);
      for (Index u = 0; u < g.size(); ++u) {
        for (Index v = 0; v < g.size(); ++v) {
          const int i1 = static_cast<int>(u) / b + 1, j1 = static_cast<int>(u) % b + 1;
          const int i2 = static_cast<int>(v) / b + 1, j2 = static_cast<int>(v) % b + 1;
          const bool incomparable = !g.comparable(u, v);
          if (incomparable != ((i1 < i2 && j1 > j2) || (i1 > i2 && j1 < j2))) {
            return Fail(r, "grid incomparability characterisation fails", {g.label(u), g.label(v)});
          }
        }
      }
      for (const Antichain& ac : AllAntichains(g)) {
        ++antichains;
        const auto [xs, ys] = PhiGrid(a, b, ac, ac.size());
        if (!IsKSubset(xs) || !IsKSubset(ys) || PhiGridInverse(a, b, xs, ys) != ac) {
          return Fail(r, "antichain has no unique sorted presentation", {AntichainLabel(g, ac)});
        }
      }
    }
  }
  Pass(r, "grid antichains have a unique presentation with x increasing and y decreasing",
       "a,b in 0.." + std::to_string(ctx.caps.ab) + ": " + std::to_string(antichains) + " antichains");
}

void CheckDurfee(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  std::size_t diagrams = 0;
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      for (const auto& d : FerrersDiagrams(a, b)) {
        ++diagrams;
        if (DurfeeCompose(a, b, DurfeeDecompose(d)) != d) {
          return Fail(r, "Durfee decomposition does not round-trip", {PartitionLabel(d)});
        }
      }
      for (int k = 0; k <= std::min(a, b); ++k) {
        const Poset dk = DkPoset(a, b, k);
        // Explicit route: D -> (ideal above the square, ideal right of it).
        const IdealLattice upper = IdealsLattice(Grid(k, b - k));
        const IdealLattice right = IdealsLattice(Grid(a - k, k));
        const Poset parts = Product(upper.poset, right.poset);
        std::map<Bitset, Index> up_index, right_index;
        for (Index i = 0; i < upper.ideals.size(); ++i) up_index.emplace(upper.ideals[i].members, i);
        for (Index i = 0; i < right.ideals.size(); ++i) right_index.emplace(right.ideals[i].members, i);
        std::vector<Index> forward;
        for (const auto& d : DiagramsWithDurfee(a, b, k)) {
          const DurfeeParts dp = DurfeeDecompose(d);
          forward.push_back(up_index.at(DiagramToIdeal(dp.above).members) * right.ideals.size() +
                            right_index.at(DiagramToIdeal(dp.right).members));
        }
        if (!VerifyIsomorphism(dk, parts, forward)) {
          return Fail(r, "Durfee decomposition is not an isomorphism", {Params({{"a", a}, {"b", b}, {"k", k}})});
        }
        const Poset target = Product(CPoset(a, k), CPoset(b, k));
        auto iso = FindIsomorphism(dk, target);
        if (!iso) return Fail(r, "D_k not isomorphic to C(a,k) x C(b,k)", {Params({{"a", a}, {"b", b}, {"k", k}})});
        certs.push_back({{"a", a}, {"b", b}, {"k", k}, {"size", dk.size()}, {"iso", IsoToJson(dk, target, *iso)}});
      }
    }
  }
  r.certificate["isomorphisms"] = std::move(certs);
  Pass(r, "D_k([a]x[b]) = C(a,k) x C(b,k); Durfee decomposition is a bijection",
       "a,b in 0.." + std::to_string(ctx.caps.ab) + ", all k; " + std::to_string(diagrams) + " diagrams");
}

void CheckGridAntichainPoset(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      const Poset g = Grid(a, b);
      for (int k = 0; k <= std::min(a, b); ++k) {
        const AntichainFamily fam = AntichainFamilyOf(g, k);
        const auto xs_all = KSubsets(a, k), ys_all = KSubsets(b, k);
        const auto xs_index = TupleIndex(xs_all), ys_index = TupleIndex(ys_all);
        const Poset target = Product(CPoset(a, k), CPoset(b, k));
        std::vector<Index> forward;
        for (const Antichain& ac : fam.antichains) {
          const auto [xs, ys] = PhiGrid(a, b, ac, k);
          forward.push_back(xs_index.at(xs.entries) * ys_all.size() + ys_index.at(ys.entries));
        }
        const json where = Params({{"a", a}, {"b", b}, {"k", k}});
        if (!CoversCorrespond(fam.poset, target, forward)) return Fail(r, "phi does not match covers", where);
        if (!VerifyIsomorphism(fam.poset, target, forward)) return Fail(r, "phi is not an isomorphism", where);
        certs.push_back({{"a", a}, {"b", b}, {"k", k}, {"size", target.size()}, {"phi", Iso(fam.poset, target, forward)}});
      }
    }
  }
  r.certificate["isomorphisms"] = std::move(certs);
  Pass(r, "A_k([a]x[b]) = C(a,k) x C(b,k) via phi, covers preserved both ways",
       "a,b in 0.." + std::to_string(ctx.caps.ab) + ", all k");
}

void CheckGridAntichainsAsDurfee(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  for (int a = 0; a <= ctx.caps.ab; ++a) {
    for (int b = 0; b <= ctx.caps.ab; ++b) {
      for (int k = 0; k <= std::min(a, b); ++k) {
        const Poset ak = AntichainPosetK(Grid(a, b), k);
        const Poset dk = DkPoset(a, b, k);
        auto iso = FindIsomorphism(ak, dk);
        if (!iso) return Fail(r, "A_k(grid) not isomorphic to D_k", Params({{"a", a}, {"b", b}, {"k", k}}));
        certs.push_back({{"a", a}, {"b", b}, {"k", k}, {"iso", IsoToJson(ak, dk, *iso)}});
      }
    }
  }
  r.certificate["isomorphisms"] = std::move(certs);
  Pass(r, "A_k([a]x[b]) = D_k([a]x[b])", "a,b in 0.." + std::to_string(ctx.caps.ab) + ", all k");
}

// ---------------------------------------------------------------------------
// The swap order

struct SwapOrderTally {
  std::size_t posets = 0, families = 0, pairs = 0;
};

// Partial order, refinement by <=_J, dominating matchings, cover
// characterisation; returns an error description or "".
std::string SwapOrderProperties(const Poset& p, SwapOrderTally& tally) {
  ++tally.posets;
  const std::size_t w = Width(p);
  for (std::size_t k = 0; k <= w; ++k) {
    ++tally.families;
    const AntichainFamily fam = AntichainFamilyOf(p, k);  // throws on a cycle
    const AntichainFamily ref = AntichainFamilyReference(p, k);
    const auto& as = fam.antichains;
    const std::string where = " (k=" + std::to_string(k) + ")";
    for (Index i = 0; i < as.size(); ++i) {
      for (Index j = 0; j < as.size(); ++j) {
        ++tally.pairs;
        if (fam.poset.less(i, j) != ref.poset.less(i, j)) {
          return "cover-generated order differs from the all-steps order" + where;
        }
        if (i != j && fam.poset.less(i, j) && fam.poset.less(j, i)) return "not antisymmetric" + where;
        if (fam.poset.leq(i, j)) {
          if (!LeqJ(p, as[i], as[j])) return "<=_k does not imply <=_J" + where;
          if (!HasDominatingMatching(p, as[i], as[j])) return "no dominating matching" + where;
        }
        if (i != j && fam.poset.covered_by(i, j) != IsCoverK(p, as[i], as[j])) {
          return "covers differ from single cover swaps" + where;
        }
      }
    }
  }
  if (!AntichainsOfSize(p, w + 1).empty()) return "antichain larger than the width";
  return "";
}

void CheckSwapOrderBasics(const CheckContext& ctx, CheckReport& r) {
  SwapOrderTally tally;
  for (const Poset& p : PosetCorpus(static_cast<std::size_t>(ctx.caps.corpus))) {
    const std::string err = SwapOrderProperties(p, tally);
    if (!err.empty()) return Fail(r, err, PosetToJson(p));
  }
  const std::size_t corpus_posets = tally.posets;
  for (const auto& [name, p] : MinusculeAtCaps(ctx)) {
    const std::string err = SwapOrderProperties(p, tally);
    if (!err.empty()) return Fail(r, err + " on " + name, {name});
  }
  r.certificate["corpus_posets"] = corpus_posets;
  r.certificate["minuscule_posets"] = tally.posets - corpus_posets;
  Pass(r, "<=_k is a partial order refined by <=_J, with dominating matchings and cover swaps as covers",
       "all " + std::to_string(corpus_posets) + " posets with <=" + std::to_string(ctx.caps.corpus) +
           " elements up to isomorphism plus " + std::to_string(tally.posets - corpus_posets) +
           " minuscule posets; " + std::to_string(tally.families) + " antichain families, " +
           std::to_string(tally.pairs) + " pairs");
}

Poset FivePointPoset() {
  return BuildPoset({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
}

void CheckFivePointExample(const CheckContext&, CheckReport& r) {
  const Poset p = FivePointPoset();
  if (Width(p) != 2) return Fail(r, "width is not 2");
  const AntichainFamily fam = AntichainFamilyOf(p, 2);
  std::vector<std::string> labels = fam.poset.labels();
  if (labels != std::vector<std::string>{"{a,b}", "{d,e}"}) return Fail(r, "A_2 is not {{a,b},{d,e}}", labels);
  const Antichain& ab = fam.antichains[0];
  const Antichain& de = fam.antichains[1];
  if (fam.poset.comparable(0, 1)) return Fail(r, "{a,b} and {d,e} comparable under <=_2");
  if (IsCoverK(p, ab, de) || IsCoverK(p, de, ab)) return Fail(r, "unexpected cover");
  if (!LeqJ(p, ab, de) || LeqJ(p, de, ab)) return Fail(r, "<=_J should give {a,b} < {d,e}");
  if (!HasDominatingMatching(p, ab, de)) return Fail(r, "elements should be matchable a_i <= b_i");
  const RefinementReport cmp = CompareOrders(p, 2);
  if (!cmp.refinement_holds || cmp.coarsening_witnesses.size() != 1) {
    return Fail(r, "expected exactly one coarsening witness");
  }
  if (IsLattice(fam.poset) || IsDistributive(fam.poset)) return Fail(r, "A_2 should not be a lattice");
  if (fam.poset.minimum() || fam.poset.maximum()) return Fail(r, "A_2 should have no extremes");
  r.certificate["A_2"] = labels;
  r.certificate["coarsening_witness"] = {AntichainLabel(p, cmp.coarsening_witnesses[0].first),
                                         AntichainLabel(p, cmp.coarsening_witnesses[0].second)};
  Pass(r, "A_2 = {{a,b},{d,e}}, incomparable under <=_2, comparable under <=_J, not a lattice");
}

void CheckBooleanExample(const CheckContext&, CheckReport& r) {
  const Poset jp = IdealsPoset(AntichainPoset(3));
  if (jp.size() != 8) return Fail(r, "J(P) should have 8 elements");
  const Poset a2 = AntichainPosetK(jp, 2);
  if (a2.size() != 9) return Fail(r, "A_2(J(P)) should have 9 elements", a2.size());
  std::size_t maximal = 0, minimal = 0;
  for (Index x = 0; x < a2.size(); ++x) {
    maximal += a2.above(x).none();
    minimal += a2.below(x).none();
  }
  if (maximal != 3 || minimal != 3) return Fail(r, "expected three maximal and three minimal elements");
  if (IsLattice(a2) || IsDistributive(jp) == false) return Fail(r, "lattice verdicts wrong");
  r.certificate["A_2"] = PosetToJson(a2);
  Pass(r, "A_2(J(3-antichain)) has 9 elements, 3 maximal, 3 minimal, and is not a lattice");
}

// ---------------------------------------------------------------------------
// Minuscule families

void CheckSpin(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  for (int n = 1; n <= ctx.caps.n; ++n) {
    const Poset spin = ctx.minuscule(minuscule::SpinD{n});
    const Poset c2 = CPoset(n + 2, 2);
    for (int k = 0; 2 * k <= n + 2; ++k) {
      const json where = Params({{"n", n}, {"k", k}});
      const AntichainFamily fam = AntichainFamilyOf(c2, k);
      const Poset target = CPoset(n + 2, 2 * k);
      const auto index = TupleIndex(KSubsets(n + 2, 2 * k));
      std::vector<Index> forward;
      for (const Antichain& ac : fam.antichains) forward.push_back(index.at(PhiSpin(n, ac).entries));
      if (!CoversCorrespond(fam.poset, target, forward)) return Fail(r, "phi does not match covers", where);
      if (!VerifyIsomorphism(fam.poset, target, forward)) return Fail(r, "phi is not an isomorphism", where);
      const Poset ak = AntichainPosetK(spin, k);
      auto iso = FindIsomorphism(ak, target);
      if (!iso) return Fail(r, "A_k(J([n]x[2])) not isomorphic to C(n+2,2k)", where);
      certs.push_back({{"n", n}, {"k", k}, {"size", target.size()},
                       {"phi", Iso(fam.poset, target, forward)}, {"iso", IsoToJson(ak, target, *iso)}});
    }
  }
  r.certificate["isomorphisms"] = std::move(certs);
  Pass(r, "A_k(J([n]x[2])) = A_k(C(n+2,2)) = C(n+2,2k), phi preserving covers both ways",
       "n in 1.." + std::to_string(ctx.caps.n) + ", 0 <= 2k <= n+2");
}

void CheckNatural(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  for (int m = 0; m <= ctx.caps.m; ++m) {
    const json where = Params({{"m", m}});
    const Poset p = ctx.minuscule(minuscule::NaturalD{m});
    if (p.size() != static_cast<std::size_t>(2 * m + 4)) return Fail(r, "unexpected size of J^m([2]x[2])", where);
    if (Width(p) != 2) return Fail(r, "width is not 2", where);
    if (AntichainPosetK(p, 0).size() != 1) return Fail(r, "A_0 is not a singleton", where);
    if (AntichainPosetK(p, 2).size() != 1) return Fail(r, "A_2 is not a singleton", where);
    const Poset a1 = AntichainPosetK(p, 1);
    auto iso = FindIsomorphism(a1, p);
    if (!iso) return Fail(r, "A_1 not isomorphic to P", where);
    certs.push_back({{"m", m}, {"A_2", AntichainPosetK(p, 2).label(0)}});
  }
  r.certificate["singletons"] = std::move(certs);
  Pass(r, "A_0 and A_2 of J^m([2]x[2]) are singletons and A_1 = P",
       "m in 0.." + std::to_string(ctx.caps.m));
}

void CheckE6(const CheckContext& ctx, CheckReport& r) {
  const Poset p = ctx.minuscule(minuscule::E6{});
  if (p.size() != 16 || Width(p) != 2) return Fail(r, "J^2([2]x[3]) should have 16 elements and width 2");
  if (AntichainPosetK(p, 0).size() != 1) return Fail(r, "A_0 is not a singleton");
  if (!FindIsomorphism(AntichainPosetK(p, 1), p)) return Fail(r, "A_1 not isomorphic to P");
  const Poset a2 = AntichainPosetK(p, 2);
  const Poset natural3 = ctx.minuscule(minuscule::NaturalD{3});
  auto iso = FindIsomorphism(a2, natural3);
  if (a2.size() != 10 || !iso) return Fail(r, "A_2 not isomorphic to J^3([2]x[2])", a2.size());
  r.certificate["A_2_to_J3"] = IsoToJson(a2, natural3, *iso);
  Pass(r, "A_k(J^2([2]x[3])): singleton, P, J^3([2]x[2]) for k = 0, 1, 2");
}

void CheckE7(const CheckContext& ctx, CheckReport& r) {
  const Poset p = ctx.minuscule(minuscule::E7{});
  if (p.size() != 27 || Width(p) != 3) return Fail(r, "J^3([2]x[3]) should have 27 elements and width 3");
  if (AntichainPosetK(p, 0).size() != 1) return Fail(r, "A_0 is not a singleton");
  if (AntichainPosetK(p, 3).size() != 1) return Fail(r, "A_3 is not a singleton");
  for (int k : {1, 2}) {
    const Poset ak = AntichainPosetK(p, k);
    auto iso = FindIsomorphism(ak, p);
    if (!iso) return Fail(r, "A_" + std::to_string(k) + " not isomorphic to P");
    r.certificate["A_" + std::to_string(k)] = IsoToJson(ak, p, *iso);
  }
  r.certificate["A_3"] = AntichainPosetK(p, 3).label(0);
  Pass(r, "A_k(J^3([2]x[3])): singleton, P, P, singleton for k = 0..3");
}

void CheckMinusculeDistributive(const CheckContext& ctx, CheckReport& r) {
  json witnesses = json::array();
  std::size_t families = 0;
  for (const auto& [name, p] : MinusculeAtCaps(ctx)) {
    const std::size_t w = Width(p);
    for (std::size_t k = 0; k <= w; ++k, ++families) {
      const Poset ak = AntichainPosetK(p, k);
      const DistributivityReport rep = CheckDistributive(ak);
      if (!rep.is_distributive) {
        return Fail(r, "A_" + std::to_string(k) + "(" + name + ") is not a distributive lattice",
                    DistributivityToJson(ak, rep));
      }
      witnesses.push_back({{"poset", name}, {"k", k}, {"size", ak.size()}, {"witness", DistributivityToJson(ak, rep)}});
    }
  }
  r.certificate["birkhoff"] = std::move(witnesses);
  Pass(r, "every A_k(P) of a minuscule P is a distributive lattice under <=_k",
       std::to_string(families) + " families (grids a,b<=" + std::to_string(ctx.caps.ab) +
           ", spin n<=" + std::to_string(ctx.caps.n) + ", natural m<=" + std::to_string(ctx.caps.m) +
           ", e6, e7; all 0<=k<=width)");
}

void CheckMinusculeWidths(const CheckContext& ctx, CheckReport& r) {
  std::size_t count = 0;
  for (const auto& kind : MinusculeCorpus(ctx.caps.ab, ctx.caps.n, ctx.caps.m)) {
    const Poset p = ctx.minuscule(kind);
    const std::size_t w = Width(p);
    if (w != ExpectedWidth(kind) || AntichainsOfSize(p, w).empty() || !AntichainsOfSize(p, w + 1).empty()) {
      return Fail(r, "width of " + KindName(kind) + " is " + std::to_string(w) + ", expected " +
                         std::to_string(ExpectedWidth(kind)));
    }
    ++count;
  }
  Pass(r, "minuscule widths follow min(a,b), floor((n+2)/2), 2, 2, 3",
       std::to_string(count) + " minuscule posets");
}

void CheckE7Figure(const CheckContext& ctx, CheckReport& r) {
  const Poset p = ctx.minuscule(minuscule::E7{});
  const Poset a2 = AntichainPosetK(p, 2);
  if (p.size() != 27 || a2.size() != 27) {
    return Fail(r, "expected 27 elements on both sides", {p.size(), a2.size()});
  }
  auto iso = FindIsomorphism(p, a2);
  if (!iso) return Fail(r, "J^3([2]x[3]) and its A_2 are not isomorphic", PosetToJson(p));
  if (!VerifyIsomorphism(p, a2, iso->forward)) return Fail(r, "returned map is not an isomorphism");
  r.certificate["iso"] = IsoToJson(p, a2, *iso);
  Pass(r, "J^3([2]x[3]) = A_2(J^3([2]x[3])), 27 elements");
}

void CheckWeightPosets(const CheckContext& ctx, CheckReport& r) {
  // Rows: ideal-lattice size of P and the sizes of A_0(P), ..., A_w(P).
  json rows = json::array();
  auto row = [&](const std::string& type, const Poset& p, std::size_t expected_dim) -> bool {
    const std::size_t dim = IdealsPoset(p).size();
    std::vector<std::size_t> parts;
    std::size_t sum = 0;
    for (std::size_t k = 0; k <= Width(p); ++k) {
      parts.push_back(AntichainsOfSize(p, k).size());
      sum += parts.back();
    }
    rows.push_back({{"type", type}, {"weights", dim}, {"components", parts}});
    return dim == expected_dim && sum == dim;
  };
  for (int n = 1; n <= ctx.caps.n; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (!row("A" + std::to_string(n) + " p=" + std::to_string(k), Grid(k, n + 1 - k), Binomial(n + 1, k))) {
        return Fail(r, "type A row failed", rows.back());
      }
    }
  }
  for (int n = 4; n <= ctx.caps.m + 3; ++n) {
    if (!row("D" + std::to_string(n) + " p=1", ctx.minuscule(minuscule::NaturalD{n - 3}),
             static_cast<std::size_t>(2 * n))) {
      return Fail(r, "type D natural row failed", rows.back());
    }
  }
  for (int n = 4; n <= ctx.caps.n + 2; ++n) {
    if (!row("D" + std::to_string(n) + " p=n", ctx.minuscule(minuscule::SpinD{n - 2}),
             std::size_t{1} << (n - 1))) {
      return Fail(r, "type D spin row failed", rows.back());
    }
  }
  if (!row("E6 p=1", ctx.minuscule(minuscule::E6{}), 27)) return Fail(r, "E6 row failed", rows.back());
  if (!row("E7 p=6", ctx.minuscule(minuscule::E7{}), 56)) return Fail(r, "E7 row failed", rows.back());
  r.certificate["rows"] = std::move(rows);
  Pass(r, "|J(P)| and the A_k(P) sizes match the minuscule weight counts for each simply laced type");
}

// ---------------------------------------------------------------------------
// Type A root posets

std::vector<std::size_t> Catalan(int upto) {
  std::vector<std::size_t> c(upto + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= upto; ++m) {
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c;
}

void CheckStar(const CheckContext& ctx, CheckReport& r) {
  json certs = json::array();
  std::size_t antichains = 0;
  for (int n = 2; n <= ctx.caps.root_n; ++n) {
    const Poset phi = TypeARootPoset(n);
    std::map<Index, AntichainFamily> families;
    for (int k = 0; k <= n - 1; ++k) families.emplace(k, AntichainFamilyOf(phi, k));
    for (int k = 0; k <= n - 1; ++k) {
      const json where = Params({{"n", n}, {"k", k}});
      const AntichainFamily& src = families.at(k);
      const AntichainFamily& dst = families.at(n - 1 - k);
      AntichainIndex dst_index;
      for (Index i = 0; i < dst.antichains.size(); ++i) dst_index.emplace(dst.antichains[i].members, i);
      std::vector<Index> forward;
      for (const Antichain& ac : src.antichains) {
        ++antichains;
        const Antichain image = PanyushevStar(n, ac);
        if (PanyushevStar(n, image) != ac) return Fail(r, "* is not an involution", where);
        auto it = dst_index.find(image.members);
        if (it == dst_index.end()) return Fail(r, "* leaves A_{n-1-k}", where);
        forward.push_back(it->second);
      }
      if (!CoversCorrespond(src.poset, dst.poset, forward)) return Fail(r, "* does not preserve covers", where);
      if (!VerifyIsomorphism(src.poset, dst.poset, forward)) return Fail(r, "* is not an isomorphism", where);
      if (!FindIsomorphism(src.poset, dst.poset)) return Fail(r, "isomorphism search disagrees with *", where);
      if (n <= 4) certs.push_back({{"n", n}, {"k", k}, {"star", Iso(src.poset, dst.poset, forward)}});
    }
  }
  r.certificate["sample"] = std::move(certs);
  Pass(r, "* is an involution giving isomorphisms A_k = A_{n-1-k} of type A root posets",
       "n in 2.." + std::to_string(ctx.caps.root_n) + ": " + std::to_string(antichains) + " antichains");
}

void CheckNarayana(const CheckContext& ctx, CheckReport& r) {
  const auto catalan = Catalan(ctx.caps.root_n);
  json tables = json::object();
  for (int n = 2; n <= ctx.caps.root_n; ++n) {
    const auto table = NarayanaTable(n);
    std::size_t sum = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      sum += table[k];
      if (table[k] != table[table.size() - 1 - k]) return Fail(r, "table is not palindromic", table);
      // Closed form N(n, k+1) = C(n, k+1) C(n, k) / n.
      if (table[k] != Binomial(n, k + 1) * Binomial(n, k) / n) return Fail(r, "Narayana value mismatch", table);
    }
    if (sum != catalan[n]) return Fail(r, "row sum is not the Catalan number", table);
    tables[std::to_string(n)] = table;
  }
  r.certificate["tables"] = std::move(tables);
  Pass(r, "|A_k| of type A root posets is palindromic in k and sums to Catalan numbers",
       "n in 2.." + std::to_string(ctx.caps.root_n));
}

// ---------------------------------------------------------------------------
// Ideal order baseline

void CheckDilworth(const CheckContext& ctx, CheckReport& r) {
  std::size_t count = 0;
  for (const Poset& p : PosetCorpus(static_cast<std::size_t>(ctx.caps.corpus))) {
    const Poset aj = AntichainPosetJ(p, Width(p));
    if (!IsDistributive(aj)) return Fail(r, "maximum antichains under <=_J are not distributive", PosetToJson(p));
    ++count;
  }
  Pass(r, "maximum-size antichains form a distributive lattice under <=_J",
       std::to_string(count) + " posets with <=" + std::to_string(ctx.caps.corpus) +
           " elements up to isomorphism");
}

std::vector<CheckInfo> BuildRegistry() {
  return {
      {"lem1.2", "rank function and covers of C(n,k)", CheckRankAndCovers},
      {"lem1.4", "covers of S(a,b); h: S(a,b) -> C(a+b,b) is an isomorphism", CheckWeakChains},
      {"grid-antichains", "sorted presentation of grid antichains", CheckGridAntichains},
      {"prop1.6", "f: J([a]x[b]) -> S(a,b) is an isomorphism", CheckFMap},
      {"cor1.7", "J([a]x[b]) = S(a,b) = C(a+b,b) via h o f", CheckGridIdealsAsGale},
      {"rmk1.8", "C(a+b,b) = C(a+b,a)", CheckGaleSymmetry},
      {"cor1.9", "C(n,k) and S(a,b) are distributive", CheckSequenceDistributive},
      {"prop1.11", "D_k([a]x[b]) = C(a,k) x C(b,k)", CheckDurfee},
      {"prop2.2", "basic properties of <=_k over the corpus", CheckSwapOrderBasics},
      {"ex2.4i", "five-element example: A_2 incomparable under <=_2", CheckFivePointExample},
      {"ex2.4ii", "A_2(J(3-antichain)) has 9 elements and no extremes", CheckBooleanExample},
      {"thm5.1-i", "A_k([a]x[b]) = C(a,k) x C(b,k) via phi", CheckGridAntichainPoset},
      {"cor3.2", "A_k([a]x[b]) = D_k([a]x[b])", CheckGridAntichainsAsDurfee},
      {"thm5.1-ii", "A_k(J([n]x[2])) = C(n+2,2k)", CheckSpin},
      {"thm5.1-iii", "A_k(J^m([2]x[2]))", CheckNatural},
      {"thm5.1-iv", "A_k(J^2([2]x[3]))", CheckE6},
      {"thm5.1-v", "A_k(J^3([2]x[3]))", CheckE7},
      {"thm5.1-vi", "A_k(P) distributive for minuscule P", CheckMinusculeDistributive},
      {"minuscule-width", "widths of minuscule posets", CheckMinusculeWidths},
      {"fig2", "J^3([2]x[3]) = A_2(J^3([2]x[3]))", CheckE7Figure},
      {"table1", "weight counts of minuscule representations", CheckWeightPosets},
      {"sec7-star", "Panyushev involution on type A root posets", CheckStar},
      {"sec7-narayana", "Narayana symmetry and Catalan sums", CheckNarayana},
      {"dilworth", "A_width(P) under <=_J is distributive", CheckDilworth},
  };
}

json CapsToJson(const Caps& c) {
  return {{"ab", c.ab}, {"n", c.n}, {"m", c.m}, {"root_n", c.root_n}, {"corpus", c.corpus}};
}

CheckReport Execute(const CheckInfo& info, const CheckContext& ctx) {
  CheckReport r;
  r.check_id = info.id;
  r.parameters = CapsToJson(ctx.caps);
  const auto start = std::chrono::steady_clock::now();
  try {
    info.run(ctx, r);
    if (r.summary.empty()) Fail(r, "check produced no verdict");
  } catch (const std::exception& e) {
    Fail(r, std::string("exception: ") + e.what());
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<CheckInfo>& CheckRegistry() {
  static const std::vector<CheckInfo> registry = BuildRegistry();
  return registry;
}

CheckReport RunCheck(const std::string& check_id, const CheckContext& ctx,
                     const std::map<std::string, std::string>& params) {
  for (const CheckInfo& info : CheckRegistry()) {
    if (info.id != check_id) continue;
    CheckContext local = ctx;
    local.caps = ApplyCapOverrides(ctx.caps, params);
    return Execute(info, local);
  }
  throw Error(ErrorCode::kUnknownCheck, "no check named '" + check_id + "'");
}

std::vector<CheckReport> RunAll(const CheckContext& ctx) {
  const auto& registry = CheckRegistry();
  std::vector<CheckReport> reports(registry.size());
  const auto n = static_cast<std::int64_t>(registry.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) reports[i] = Execute(registry[i], ctx);
  return reports;
}

json ReportToJson(const CheckReport& report) {
  return {{"check_id", report.check_id},
          {"parameters", report.parameters},
          {"verdict", report.pass ? "pass" : "fail"},
          {"summary", report.summary},
          {"exhaustion", report.exhaustion},
          {"certificate", report.certificate},
          {"elapsed_seconds", report.elapsed_seconds}};
}

}  // namespace posetforge
