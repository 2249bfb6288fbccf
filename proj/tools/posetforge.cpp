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

// posetforge command-line tool. Posets travel as JSON on stdin/stdout so
// subcommands compose in pipelines, e.g.
//
//   posetforge minuscule grid 3 3 | posetforge ak 2 | posetforge check distributive
//
// Exit status: 0 success, 1 a verification or property check failed,
// 2 malformed input or usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetforge/antichain_order.hpp"
#include "posetforge/ferrers.hpp"
#include "posetforge/io.hpp"
#include "posetforge/lattice.hpp"
#include "posetforge/minuscule.hpp"
#include "posetforge/root_poset.hpp"
#include "posetforge/theorem_suite.hpp"

namespace pf = posetforge;
using nlohmann::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

pf::Poset ReadPoset(const std::string& path) {
  std::string text, source;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
    source = "<stdin>";
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    source = path;
  }
  return pf::ParsePosetJson(text, source);
}

void EmitPoset(const pf::Poset& p, bool dot, const std::string& name) {
  if (dot) {
    std::cout << pf::ToDot(p, name);
  } else {
    std::cout << pf::PosetToJson(p).dump(2) << "\n";
  }
}

std::vector<int> ParseInts(const std::vector<std::string>& words) {
  std::vector<int> out;
  for (const auto& w : words) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size() || w.empty()) throw UsageError("expected an integer, got '" + w + "'");
    out.push_back(v);
  }
  return out;
}

std::string Verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetforge: finite posets, antichain orders and minuscule posets"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool as_dot = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");
  app.add_flag("--dot", as_dot, "Emit posets as Graphviz DOT");

  std::string input;
  auto* build = app.add_subcommand("build", "Validate a poset and re-emit it in canonical form");
  build->add_option("file", input, "Poset JSON (default: stdin)");

  std::string kind;
  std::vector<std::string> kind_params;
  auto* minuscule = app.add_subcommand("minuscule", "Construct a minuscule poset");
  minuscule->add_option("kind", kind, "grid | spin | natural | e6 | e7")->required();
  minuscule->add_option("params", kind_params, "grid: a b; spin: n; natural: m");

  std::size_t k = 0;
  std::string order = "k";
  auto* ak = app.add_subcommand("ak", "Antichains of size k under <=_k or <=_J");
  ak->add_option("k", k, "Antichain size")->required();
  ak->add_option("--order", order, "k (swap order) or j (ideal containment)")
      ->check(CLI::IsMember({"k", "j"}));
  ak->add_option("file", input, "Poset JSON (default: stdin)");

  std::string property;
  auto* check = app.add_subcommand("check", "Lattice or distributive-lattice check");
  check->add_option("property", property, "lattice | distributive")
      ->required()
      ->check(CLI::IsMember({"lattice", "distributive"}));
  check->add_option("file", input, "Poset JSON (default: stdin)");

  std::string file_a, file_b;
  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two posets");
  iso->add_option("a", file_a, "First poset JSON")->required();
  iso->add_option("b", file_b, "Second poset JSON")->required();

  std::string partition;
  std::vector<int> box;
  auto* durfee = app.add_subcommand("durfee", "Durfee length and decomposition of a partition");
  durfee->add_option("partition", partition, "Comma-separated parts, e.g. 3,2,1")->required();
  durfee->add_option("--box", box, "Bounding box a b (default: tightest)")->expected(2);

  int narayana_n = 0;
  auto* narayana = app.add_subcommand("narayana", "Sizes of A_k for the type A_{n-1} root poset");
  narayana->add_option("n", narayana_n, "n >= 2")->required();

  int star_n = 0;
  std::string roots;
  auto* star = app.add_subcommand("star", "Panyushev involution on a root antichain");
  star->add_option("n", star_n, "n >= 2")->required();
  star->add_option("antichain", roots, "Roots such as [1,2],[2,3]; empty for the empty antichain")
      ->required();

  std::string check_id;
  std::vector<std::string> params;
  auto* verify = app.add_subcommand("verify", "Run a registered check, or all of them");
  verify->add_option("id", check_id, "Check id or 'all'")->required();
  verify->add_option("--param", params, "Cap override key=value (ab, n, m, root_n, corpus)");

  auto* list = app.add_subcommand("list-checks", "List registered checks");

  auto* export_dot = app.add_subcommand("export-dot", "Convert poset JSON to DOT");
  export_dot->add_option("file", input, "Poset JSON (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      EmitPoset(ReadPoset(input), as_dot, "poset");
      return 0;
    }
    if (*minuscule) {
      const auto k_ = pf::ParseKind(kind, ParseInts(kind_params));
      EmitPoset(pf::MinusculePoset(k_), as_dot, pf::KindName(k_));
      return 0;
    }
    if (*ak) {
      const pf::Poset p = ReadPoset(input);
      const auto ord = order == "j" ? pf::AntichainOrder::kIdeal : pf::AntichainOrder::kSwap;
      EmitPoset(pf::AntichainFamilyOf(p, k, ord).poset, as_dot, "A_" + std::to_string(k));
      return 0;
    }
    if (*check) {
      const pf::Poset p = ReadPoset(input);
      bool ok = false;
      json out;
      if (property == "lattice") {
        const auto table = pf::ComputeMeetJoinTable(p);
        ok = pf::IsLattice(p);
        out = pf::MeetJoinToJson(p, table);
        out["lattice"] = ok;
      } else {
        const auto report = pf::CheckDistributive(p);
        ok = report.is_distributive;
        out = pf::DistributivityToJson(p, report);
      }
      out["verdict"] = Verdict(ok);
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << Verdict(ok) << "\n";
        if (out.contains("counterexample")) std::cout << "counterexample " << out["counterexample"].dump() << "\n";
      }
      return ok ? 0 : kExitFailed;
    }
    if (*iso) {
      const pf::Poset a = ReadPoset(file_a), b = ReadPoset(file_b);
      auto found = pf::FindIsomorphism(a, b);
      json out = {{"isomorphic", found.has_value()}};
      if (found) out["map"] = pf::IsoToJson(a, b, *found);
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else if (found) {
        std::cout << "isomorphic\n";
        for (pf::Index x = 0; x < a.size(); ++x) std::cout << a.label(x) << " -> " << b.label(found->forward[x]) << "\n";
      } else {
        std::cout << "not isomorphic\n";
      }
      return found ? 0 : kExitFailed;
    }
    if (*durfee) {
      const auto parts = pf::ParsePartition(partition);
      const pf::FerrersDiagram d =
          box.empty() ? pf::DiagramFromPartition(parts) : pf::DiagramInBox(box[0], box[1], parts);
      const pf::DurfeeParts split = pf::DurfeeDecompose(d);
      json out = {{"diagram", pf::PartitionLabel(d)},
                  {"box", {d.a, d.b}},
                  {"durfee_length", split.k},
                  {"above", pf::PartitionLabel(split.above)},
                  {"right", pf::PartitionLabel(split.right)}};
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "durfee " << split.k << "\nabove " << pf::PartitionLabel(split.above)
                  << "\nright " << pf::PartitionLabel(split.right) << "\n";
      }
      return 0;
    }
    if (*narayana) {
      const auto table = pf::NarayanaTable(narayana_n);
      if (as_json) {
        std::cout << json(table).dump() << "\n";
      } else {
        for (std::size_t i = 0; i < table.size(); ++i) std::cout << (i ? " " : "") << table[i];
        std::cout << "\n";
      }
      return 0;
    }
    if (*star) {
      const auto image = pf::PanyushevStar(star_n, pf::ParseRoots(roots));
      std::vector<std::string> labels;
      for (const auto& r : image) labels.push_back(pf::RootLabel(r));
      if (as_json) {
        std::cout << json(labels).dump() << "\n";
      } else {
        for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
        std::cout << "\n";
      }
      return 0;
    }
    if (*verify) {
      pf::CheckContext ctx;
      ctx.caps = pf::CapsFromEnvironment();
      std::map<std::string, std::string> overrides;
      for (const auto& item : params) {
        for (const auto& [key, value] : pf::ParseCapList(item)) overrides[key] = value;
      }
      std::vector<pf::CheckReport> reports;
      if (check_id == "all") {
        ctx.caps = pf::ApplyCapOverrides(ctx.caps, overrides);
        reports = pf::RunAll(ctx);
      } else {
        reports.push_back(pf::RunCheck(check_id, ctx, overrides));
      }
      bool all_pass = true;
      json out = json::array();
      for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        out.push_back(pf::ReportToJson(r));
        if (!as_json) {
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id << " (" << std::fixed
                    << std::setprecision(2) << r.elapsed_seconds << "s) " << r.summary << "\n";
          if (!r.pass && r.certificate.contains("counterexample")) {
            std::cout << "  counterexample: " << r.certificate["counterexample"].dump() << "\n";
          }
        }
      }
      if (as_json) std::cout << (reports.size() == 1 ? out[0] : out).dump(2) << "\n";
      return all_pass ? 0 : kExitFailed;
    }
    if (*list) {
      for (const auto& info : pf::CheckRegistry()) std::cout << info.id << "\t" << info.description << "\n";
      return 0;
    }
    if (*export_dot) {
      EmitPoset(ReadPoset(input), true, "poset");
      return 0;
    }
  } catch (const pf::InputError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
