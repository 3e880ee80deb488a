// Copyright 2026 The GCSB Authors
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

#include "gcsb/io.h"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gcsb/errors.h"
#include "gcsb/regions.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "network_oracles.h"
#include "oracles.h"

namespace gcsb {
namespace {

using Json = nlohmann::json;

constexpr const char* kTwoSinks = R"({
  "nodes": ["s", "a", "t1", "t2"],
  "arcs": [
    {"from": "s", "to": "a", "capacity": "2"},
    {"from": "a", "to": "t1", "capacity": "inf"},
    {"from": "a", "to": "t2", "capacity": "1/2"},
    {"from": "s", "to": "t2", "capacity": "3"}
  ],
  "source": "s",
  "sinks": ["t1", "t2"],
  "messages": ["x", "y"],
  "demands": {"t1": ["x"], "t2": ["x", "y"]}
})";

std::string Edit(const char* doc, const std::function<void(Json&)>& fn) {
  Json j = Json::parse(doc);
  fn(j);
  return j.dump();
}

TEST(IoTest, ParsesNetworkDocument) {
  const NetworkSpec spec = ParseNetworkDocument(kTwoSinks);
  ASSERT_EQ(spec.arcs.size(), 4U);
  EXPECT_EQ(*spec.arcs[0].capacity, 2);
  EXPECT_FALSE(spec.arcs[1].capacity.has_value());
  EXPECT_EQ(*spec.arcs[2].capacity, Ratio(1, 2));
  EXPECT_EQ(spec.demands[1], (std::vector<std::string>{"x", "y"}));
  const BroadcastNetwork net = LoadNetwork(kTwoSinks);
  EXPECT_EQ(net.cut_ground()->size(), 3);
}

TEST(IoTest, NetworkDocumentRoundTrip) {
  const BroadcastNetwork net = CompleteCombinationNetwork(
      3, {{IndexSet::Of({1}), 1}, {IndexSet::Of({1, 2}), Ratio(3, 2)}});
  const std::string text = NetworkDocumentJson(net.spec());
  const NetworkSpec back = ParseNetworkDocument(text);
  EXPECT_EQ(NetworkDocumentJson(back), text);
  EXPECT_EQ(back.nodes, net.spec().nodes);
  EXPECT_EQ(back.messages, net.spec().messages);
}

TEST(IoTest, RejectsSchemaViolations) {
  const std::vector<std::string> bad = {
      "{",
      "[]",
      Edit(kTwoSinks, [](Json& j) { j["extra"] = 1; }),
      Edit(kTwoSinks, [](Json& j) { j.erase("messages"); }),
      Edit(kTwoSinks, [](Json& j) { j["arcs"][0]["weight"] = "1"; }),
      Edit(kTwoSinks, [](Json& j) { j["arcs"][0]["capacity"] = 2; }),
      Edit(kTwoSinks, [](Json& j) { j["arcs"][0]["capacity"] = "two"; }),
      Edit(kTwoSinks, [](Json& j) { j["demands"]["t3"] = {"x"}; }),
      Edit(kTwoSinks, [](Json& j) { j["demands"].erase("t2"); }),
      Edit(kTwoSinks, [](Json& j) { j["sinks"] = "t1"; }),
  };
  for (const std::string& doc : bad) {
    EXPECT_THROW(LoadNetwork(doc), SchemaError) << doc;
  }
}

TEST(IoTest, NetworkValidationBecomesSchemaError) {
  const std::vector<std::string> bad = {
      Edit(kTwoSinks, [](Json& j) {
        j["arcs"].push_back({{"from", "t1"}, {"to", "s"}, {"capacity", "1"}});
      }),
      Edit(kTwoSinks, [](Json& j) { j["arcs"][0]["capacity"] = "-1"; }),
      Edit(kTwoSinks, [](Json& j) { j["demands"]["t1"] = Json::array(); }),
      Edit(kTwoSinks, [](Json& j) { j["demands"]["t1"] = {"z"}; }),
      Edit(kTwoSinks, [](Json& j) { j["arcs"][0]["to"] = "q"; }),
  };
  for (const std::string& doc : bad) {
    EXPECT_THROW(LoadNetwork(doc), SchemaError) << doc;
  }
}

TEST(IoTest, CutDocument) {
  const BroadcastNetwork net = LoadNetwork(kTwoSinks);
  const std::vector<Cut> cuts =
      ParseCutDocument(net, R"({"t1": ["s->a"], "t2": ["s->a", "s->t2"]})");
  ASSERT_EQ(cuts.size(), 2U);
  EXPECT_EQ(net.CapacityOf(cuts[1].arcs()), 5);
  const std::string text = CutDocumentJson(net, cuts);
  EXPECT_EQ(CutDocumentJson(net, ParseCutDocument(net, text)), text);

  EXPECT_THROW(ParseCutDocument(net, R"({"t1": ["s->a"]})"), SchemaError);
  EXPECT_THROW(ParseCutDocument(net, R"({"t1": ["a->t1"], "t2": ["s->t2"]})"),
               SchemaError);
  EXPECT_THROW(ParseCutDocument(net, R"({"t1": ["s->b"], "t2": ["s->t2"]})"),
               SchemaError);
  EXPECT_THROW(ParseCutDocument(net, R"({"t1": ["s->a"], "t2": ["s->t2"]})"),
               PreconditionError);
}

TEST(IoTest, SingleSinkReportHasOneBound) {
  const BroadcastNetwork net = CompleteCombinationNetwork(1, {{IndexSet::Of({1}), 4}});
  const std::vector<Cut> cuts = MinCuts(net);
  const auto rows = CanonicalRows(
      InstantiateAll(net, cuts, SelectBounds(net, cuts, kAllSymbolicRules, false)));
  const Json report = Json::parse(BoundsReportJson(rows));
  ASSERT_EQ(report.size(), 1U);
  EXPECT_EQ(report[0]["provenance"], "CSB({1})");
  EXPECT_EQ(report[0]["rate_coeffs"], (Json{{"W{1}", "1"}}));
  EXPECT_EQ(report[0]["capacity_coeffs"], (Json{{"s->v{1}", "1"}}));
  EXPECT_EQ(report[0]["rhs_value"], "4");
}

TEST(IoTest, CompleteThreeSinkReportHasFifteenRows) {
  std::map<IndexSet, Rational> caps;
  for (std::uint32_t u = 1; u < 8; ++u) caps[IndexSet::FromMask(u)] = 1;
  const BroadcastNetwork net = CompleteCombinationNetwork(3, caps);
  const std::vector<Cut> cuts = MinCuts(net);
  const auto rows = CanonicalRows(
      InstantiateAll(net, cuts, SelectBounds(net, cuts, kAllSymbolicRules, false)));
  const std::string text = BoundsReportJson(rows);
  EXPECT_EQ(Json::parse(text).size(), 15U);
  // Deterministic bytes.
  EXPECT_EQ(BoundsReportJson(CanonicalRows(InstantiateAll(
                net, cuts, SelectBounds(net, cuts, kAllSymbolicRules, false)))),
            text);
}

// Independent recomputation: each term adds its weight to every message in
// the level set of the demand family and every arc in the level set of the
// cut family, with level sets from the brute-force oracle.
TEST(IoTest, RandomDagCoefficientsMatchTermOracle) {
  std::mt19937_64 rng(404);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const BroadcastNetwork net(
        testing::RandomDagSpec(rng, 4 + static_cast<int>(rng() % 3), 3, 8));
    const std::vector<Cut> cuts = MinCuts(net);
    std::vector<testing::Set> a;
    std::vector<testing::Set> m;
    for (int k = 1; k <= net.num_sinks(); ++k) {
      a.push_back(testing::FromMask(cuts[k - 1].arcs().mask()));
      m.push_back(testing::FromMask(net.demand(k).mask()));
    }
    const auto [af, mf] = CutAndMessageFamilies(net, cuts);
    for (const BoundInequality& b :
         SelectBounds(net, cuts, kAllSymbolicRules, net.num_sinks() <= 4)) {
      const InstantiatedInequality got =
          Instantiate(b, af, mf, net.CapacityFunction());
      std::vector<Rational> rate(net.message_ground()->size());
      std::vector<Rational> cap(net.cut_ground()->size());
      Rational rhs = 0;
      for (const BoundTerm& t : b.terms()) {
        const std::vector<int> u = t.indices.members();
        for (int e : testing::LevelOracle(m, u, t.level)) rate[e] += t.weight;
        for (int e : testing::LevelOracle(a, u, t.level)) {
          cap[e] += t.weight;
          rhs += t.weight * *net.arcs()[net.ArcOfCutElement(e)].capacity;
        }
      }
      EXPECT_EQ(got.rate_coeffs, rate) << b.provenance();
      EXPECT_EQ(got.capacity_coeffs, cap) << b.provenance();
      EXPECT_EQ(*got.rhs_value, rhs) << b.provenance();
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(IoTest, RowFileKeysIgnoreScalingAndSides) {
  LinearSystem sys({"R0", "Rsp", "C1", "C2"});
  sys.AddNamedRow({{"R0", 3}, {"Rsp", 1}, {"C1", -6}, {"C2", -9}}, 0);
  const std::vector<KeyedRow> generated = SystemRows(sys, {"C1", "C2"});
  ASSERT_EQ(generated.size(), 1U);
  EXPECT_EQ(generated[0].text, "3 R0 + Rsp <= 6 C1 + 9 C2");
  const std::vector<KeyedRow> parsed = ParseRowFile(
      "# comment\n\n3 R0 + Rsp <= 6 C1 + 9 C2\n"
      "  6 R0 + 2*Rsp <= 12 C1 + 18 C2  \n"
      "3 R0 + Rsp - 6 C1 <= 9 C2\n"
      "3/2 R0 + 1/2 Rsp - 9/2 C2 <= 3 C1 + 0\n");
  ASSERT_EQ(parsed.size(), 4U);
  for (const KeyedRow& r : parsed) EXPECT_EQ(r.key, generated[0].key) << r.text;
  EXPECT_NE(ParseRowFile("3 R0 + Rsp <= 6 C1 + 8 C2")[0].key, generated[0].key);

  for (const char* bad : {"3 R0 + Rsp", "R0 <= C1 <= C2", "R0 + <= C1",
                          "R0 R1 <= C1", "<= C1"}) {
    EXPECT_THROW(ParseRowFile(bad), SchemaError) << bad;
  }
}

TEST(IoTest, DiffRowsIsMultisetDifference) {
  const auto a = ParseRowFile("R0 <= C1\nR0 <= C1\nRsp <= C2\n");
  const auto b = ParseRowFile("2 R0 <= 2 C1\nR0 + Rsp <= C3\n");
  const RowDiff d = DiffRows(a, b);
  EXPECT_EQ(d.missing, (std::vector<std::string>{"R0 <= C1", "Rsp <= C2"}));
  EXPECT_EQ(d.extra, (std::vector<std::string>{"R0 + Rsp <= C3"}));
  EXPECT_TRUE(DiffRows(a, a).empty());
}

}  // namespace
}  // namespace gcsb
