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

#include <cstdlib>

#include <gtest/gtest.h>

#include "posetforge/theorem_suite.hpp"

namespace posetforge {
namespace {

TEST(CheckRegistryTest, IdsAreUniqueAndRunnable) {
  std::set<std::string> ids;
  for (const auto& info : CheckRegistry()) EXPECT_TRUE(ids.insert(info.id).second) << info.id;
  for (const char* id : {"lem1.2", "lem1.4", "prop1.6", "cor1.7", "cor1.9", "prop1.11", "prop2.2", "ex2.4i",
                         "ex2.4ii", "thm5.1-i", "thm5.1-ii", "thm5.1-iii", "thm5.1-iv", "thm5.1-v",
                         "thm5.1-vi", "cor3.2", "fig2", "sec7-star", "sec7-narayana", "dilworth"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_THROW(RunCheck("no-such-check", CheckContext{}), Error);
}

TEST(RunAllTest, DefaultCapsPassInRegistryOrder) {
  const auto reports = RunAll(CheckContext{});
  ASSERT_EQ(reports.size(), CheckRegistry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].check_id, CheckRegistry()[i].id);
    EXPECT_TRUE(reports[i].pass) << reports[i].check_id << ": " << reports[i].summary;
    EXPECT_FALSE(reports[i].summary.empty());
  }
}

TEST(RunAllTest, DeterministicReports) {
  CheckContext ctx;
  ctx.caps = ApplyCapOverrides(ctx.caps, {{"ab", "3"}, {"n", "3"}, {"m", "2"}, {"root_n", "5"}, {"corpus", "4"}});
  const auto a = RunAll(ctx), b = RunAll(ctx);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].pass, b[i].pass);
    EXPECT_EQ(a[i].certificate, b[i].certificate) << a[i].check_id;
    EXPECT_EQ(a[i].exhaustion, b[i].exhaustion);
  }
}

TEST(RunAllTest, DegenerateCapsPass) {
  CheckContext ctx;
  ctx.caps = ApplyCapOverrides(ctx.caps, {{"ab", "1"}, {"n", "1"}, {"m", "1"}, {"root_n", "2"}, {"corpus", "1"}});
  for (const auto& r : RunAll(ctx)) EXPECT_TRUE(r.pass) << r.check_id << ": " << r.summary;
}

// A constructor that builds J^2 instead of J^3 for the 27-element family.
TEST(FaultInjectionTest, CorruptedConstructorFailsFigureCheck) {
  CheckContext ctx;
  ctx.minuscule = [](const MinusculeKind& kind) {
    if (std::holds_alternative<minuscule::E7>(kind)) return MinusculePoset(minuscule::E6{});
    return MinusculePoset(kind);
  };
  const CheckReport r = RunCheck("fig2", ctx);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.certificate.contains("counterexample"));
  EXPECT_FALSE(RunCheck("thm5.1-v", ctx).pass);
  EXPECT_TRUE(RunCheck("thm5.1-iv", ctx).pass);
}

TEST(FaultInjectionTest, ExceptionsBecomeFailures) {
  CheckContext ctx;
  ctx.minuscule = [](const MinusculeKind&) -> Poset { throw Error(ErrorCode::kBadParameters, "boom"); };
  const CheckReport r = RunCheck("fig2", ctx);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.summary.find("boom"), std::string::npos);
}

TEST(CapsTest, OverridesAndLimits) {
  EXPECT_EQ(ParseCapList("ab=2,n=3"), (std::map<std::string, std::string>{{"ab", "2"}, {"n", "3"}}));
  EXPECT_THROW(ParseCapList("ab"), Error);
  const Caps c = ApplyCapOverrides(Caps{}, {{"ab", "2"}});
  EXPECT_EQ(c.ab, 2);
  EXPECT_EQ(c.n, Caps{}.n);
  EXPECT_THROW(ApplyCapOverrides(Caps{}, {{"ab", "7"}}), Error);
  EXPECT_THROW(ApplyCapOverrides(Caps{}, {{"zz", "1"}}), Error);
  EXPECT_THROW(ApplyCapOverrides(Caps{}, {{"n", "x"}}), Error);
  EXPECT_THROW(RunCheck("cor1.7", CheckContext{}, {{"ab", "9"}}), Error);
  const CheckReport small = RunCheck("cor1.7", CheckContext{}, {{"ab", "2"}});
  EXPECT_TRUE(small.pass);
  EXPECT_EQ(small.parameters["ab"], 2);
}

TEST(CapsTest, Environment) {
  ::setenv("POSETFORGE_CAPS", "m=2,root_n=4", 1);
  const Caps c = CapsFromEnvironment();
  ::unsetenv("POSETFORGE_CAPS");
  EXPECT_EQ(c.m, 2);
  EXPECT_EQ(c.root_n, 4);
  EXPECT_EQ(CapsFromEnvironment(), Caps{});
}

TEST(ReportTest, JsonShape) {
  const auto j = ReportToJson(RunCheck("ex2.4i", CheckContext{}));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["check_id"], "ex2.4i");
  EXPECT_TRUE(j["certificate"].contains("A_2"));
  const auto iso = ReportToJson(RunCheck("fig2", CheckContext{}));
  EXPECT_EQ(iso["certificate"]["iso"].size(), 27u);
}

}  // namespace
}  // namespace posetforge
