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

// Test-only random DAGs and an exhaustive min-cut oracle that shares no code
// with the library's max-flow.

#ifndef GCSB_TESTS_NETWORK_ORACLES_H_
#define GCSB_TESTS_NETWORK_ORACLES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcsb/network.h"
#include "gcsb/rational.h"

namespace gcsb::testing {

// Nodes n0..n{nodes-1} in topological order with n0 the source. Every node
// gets a parent, so all nodes are reachable. Arcs out of the source are
// finite, so a finite cut always exists. At most `max_finite` finite arcs.
inline NetworkSpec RandomDagSpec(std::mt19937_64& rng, int nodes, int sinks,
                                 int max_finite) {
  NetworkSpec spec;
  for (int v = 0; v < nodes; ++v) spec.nodes.push_back("n" + std::to_string(v));
  spec.source = "n0";
  int finite = 0;
  auto add = [&](int u, int v) {
    Capacity cap;
    const bool want_finite = u == 0 || rng() % 3 != 0;
    if (want_finite) {
      if (finite == max_finite) return false;
      ++finite;
      cap = Ratio(static_cast<long>(rng() % 6), static_cast<long>(1 + rng() % 3));
    }
    spec.arcs.push_back({spec.nodes[u], spec.nodes[v], cap});
    return true;
  };
  for (int v = 1; v < nodes; ++v) {
    // Fall back to an unbounded arc from a non-source parent when the finite
    // budget is spent.
    int u = static_cast<int>(rng() % v);
    if (!add(u, v)) {
      if (v == 1) return RandomDagSpec(rng, nodes, sinks, max_finite);
      u = 1 + static_cast<int>(rng() % (v - 1));
      spec.arcs.push_back({spec.nodes[u], spec.nodes[v], std::nullopt});
    }
  }
  const int extra = static_cast<int>(rng() % (nodes + 2));
  for (int i = 0; i < extra; ++i) {
    const int v = 1 + static_cast<int>(rng() % (nodes - 1));
    const int u = static_cast<int>(rng() % v);
    add(u, v);
  }
  std::vector<int> pool;
  for (int v = 1; v < nodes; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  const int k = std::min<int>(sinks, static_cast<int>(pool.size()));
  spec.messages = {"m0", "m1", "m2"};
  for (int i = 0; i < k; ++i) {
    spec.sinks.push_back(spec.nodes[pool[i]]);
    std::vector<std::string> d;
    for (const std::string& m : spec.messages) {
      if (rng() % 2) d.push_back(m);
    }
    if (d.empty()) d.push_back(spec.messages[rng() % 3]);
    spec.demands.push_back(d);
  }
  return spec;
}

struct BruteCut {
  Rational capacity;
  std::uint64_t mask = 0;
};

// Minimum over all subsets of finite arcs (in spec order) that disconnect
// `sink` from the source.
inline std::optional<BruteCut> BruteForceMinCut(const NetworkSpec& spec,
                                                const std::string& sink) {
  std::vector<int> finite;
  for (int a = 0; a < static_cast<int>(spec.arcs.size()); ++a) {
    if (spec.arcs[a].capacity) finite.push_back(a);
  }
  std::optional<BruteCut> best;
  const std::uint64_t total = std::uint64_t{1} << finite.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::vector<bool> removed(spec.arcs.size(), false);
    Rational cap = 0;
    for (std::size_t i = 0; i < finite.size(); ++i) {
      if ((m >> i) & 1) {
        removed[finite[i]] = true;
        cap += *spec.arcs[finite[i]].capacity;
      }
    }
    // Fixed-point reachability by repeated relaxation.
    std::vector<std::string> reached = {spec.source};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
        if (removed[a]) continue;
        const auto& arc = spec.arcs[a];
        const bool has_from = std::find(reached.begin(), reached.end(),
                                        arc.from) != reached.end();
        const bool has_to =
            std::find(reached.begin(), reached.end(), arc.to) != reached.end();
        if (has_from && !has_to) {
          reached.push_back(arc.to);
          grew = true;
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), sink) != reached.end()) {
      continue;
    }
    if (!best || cap < best->capacity) best = BruteCut{cap, m};
  }
  return best;
}

}  // namespace gcsb::testing

#endif  // GCSB_TESTS_NETWORK_ORACLES_H_
