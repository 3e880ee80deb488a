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

// Every generated bound must hold at rates that a plain routing achieves.
// Each message is multicast along a union of source-to-sink paths; arc
// capacities are the routed load plus nonnegative slack.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gcsb/bounds.h"
#include "gcsb/network.h"
#include "gcsb/regions.h"
#include "gtest/gtest.h"
#include "network_oracles.h"

namespace gcsb {
namespace {

// Arc indices of a random path from the source to `sink`, walking back
// through random in-arcs. Nodes are in topological order.
std::vector<int> RandomPathTo(const NetworkSpec& spec, const std::string& sink,
                              std::mt19937_64& rng) {
  std::vector<int> path;
  std::string v = sink;
  while (v != spec.source) {
    std::vector<int> in;
    for (int a = 0; a < static_cast<int>(spec.arcs.size()); ++a) {
      if (spec.arcs[a].to == v) in.push_back(a);
    }
    const int a = in[rng() % in.size()];
    path.push_back(a);
    v = spec.arcs[a].from;
  }
  return path;
}

// Replaces finite capacities by routed load plus slack; returns the rates.
std::map<std::string, Rational> Route(NetworkSpec& spec, std::mt19937_64& rng) {
  std::map<std::string, Rational> rate;
  std::vector<Rational> load(spec.arcs.size());
  for (const std::string& m : spec.messages) {
    rate[m] = Ratio(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 3));
    std::set<int> used;
    for (std::size_t k = 0; k < spec.sinks.size(); ++k) {
      for (const std::string& d : spec.demands[k]) {
        if (d != m) continue;
        for (int a : RandomPathTo(spec, spec.sinks[k], rng)) used.insert(a);
      }
    }
    for (int a : used) load[a] += rate[m];
  }
  for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
    if (spec.arcs[a].capacity) {
      spec.arcs[a].capacity =
          load[a] + Ratio(static_cast<long>(rng() % 3), 2);
    }
  }
  return rate;
}

void ExpectBoundsHold(const BroadcastNetwork& net,
                      const std::vector<Cut>& cuts,
                      const std::map<std::string, Rational>& rate,
                      bool search, int& checked) {
  const auto rows = InstantiateAll(
      net, cuts, SelectBounds(net, cuts, kAllSymbolicRules, search));
  for (const InstantiatedInequality& row : rows) {
    Rational lhs = 0;
    for (int m = 0; m < net.message_ground()->size(); ++m) {
      lhs += row.rate_coeffs[m] * rate.at(net.message_ground()->Label(m));
    }
    EXPECT_LE(lhs, *row.rhs_value) << row.provenance;
    ++checked;
  }
}

TEST(SoundnessTest, RoutedRatesSatisfyEveryBoundOnRandomDags) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    NetworkSpec spec =
        testing::RandomDagSpec(rng, 4 + static_cast<int>(rng() % 4), 3, 10);
    const std::map<std::string, Rational> rate = Route(spec, rng);
    const BroadcastNetwork net(spec);
    ExpectBoundsHold(net, MinCuts(net), rate, true, checked);
  }
  EXPECT_GT(checked, 300);
}

TEST(SoundnessTest, RoutedRatesOnCompleteCombinationNetworks) {
  std::mt19937_64 rng(78);
  int checked = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      NetworkSpec spec = CompleteCombinationNetwork(k, {}).spec();
      const std::map<std::string, Rational> rate = Route(spec, rng);
      const BroadcastNetwork net(spec);
      ExpectBoundsHold(net, CombinationBasicCuts(net), rate, k <= 3, checked);
    }
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace gcsb
