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

#include "gcsb/network.h"

#include <algorithm>
#include <deque>
#include <set>

#include "gcsb/errors.h"

namespace gcsb {

namespace {

std::vector<bool> Reachable(const BroadcastNetwork& net, int from,
                            std::uint64_t removed) {
  std::vector<std::vector<int>> out(net.num_nodes());
  for (int a = 0; a < static_cast<int>(net.arcs().size()); ++a) {
    const Arc& arc = net.arcs()[a];
    if (arc.cut_index >= 0 && ((removed >> arc.cut_index) & 1)) continue;
    out[arc.from].push_back(arc.to);
  }
  std::vector<bool> seen(net.num_nodes(), false);
  std::deque<int> queue = {from};
  seen[from] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

BroadcastNetwork::BroadcastNetwork(const NetworkSpec& spec) : spec_(spec) {
  nodes_ = spec.nodes;
  for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) {
    if (!node_index_.emplace(nodes_[v], v).second) {
      throw DomainError("duplicate node '" + nodes_[v] + "'");
    }
  }
  source_ = NodeIndex(spec.source);
  if (spec.sinks.empty() || spec.sinks.size() > IndexSet::kMaxIndex) {
    throw DomainError("network needs 1..16 sinks");
  }
  for (const std::string& t : spec.sinks) {
    const int v = NodeIndex(t);
    if (v == source_) throw DomainError("sink '" + t + "' is the source");
    sinks_.push_back(v);
  }

  std::map<std::pair<int, int>, int> copies;
  std::vector<std::string> cut_labels;
  for (const ArcSpec& a : spec.arcs) {
    Arc arc;
    arc.from = NodeIndex(a.from);
    arc.to = NodeIndex(a.to);
    if (arc.from == arc.to) {
      throw DomainError("self-loop at '" + a.from + "'");
    }
    arc.capacity = a.capacity;
    if (arc.capacity) {
      arc.capacity->canonicalize();
      if (*arc.capacity < 0) {
        throw DomainError("negative capacity on " + a.from + "->" + a.to);
      }
    }
    const int n = ++copies[{arc.from, arc.to}];
    arc.label = a.from + "->" + a.to;
    if (n > 1) arc.label += "#" + std::to_string(n);
    if (arc.capacity) {
      arc.cut_index = static_cast<int>(cut_labels.size());
      cut_labels.push_back(arc.label);
      cut_arcs_.push_back(static_cast<int>(arcs_.size()));
    }
    arcs_.push_back(std::move(arc));
  }
  if (cut_labels.empty()) throw DomainError("network has no finite arc");
  if (cut_labels.size() > GroundSet::kMaxSize) {
    throw DomainError("more than 64 finite arcs");
  }
  cut_ground_ = GroundSet::Create(cut_labels);

  // Kahn's algorithm.
  std::vector<int> indegree(nodes_.size(), 0);
  std::vector<std::vector<int>> out(nodes_.size());
  for (const Arc& a : arcs_) {
    ++indegree[a.to];
    out[a.from].push_back(a.to);
  }
  std::deque<int> ready;
  for (int v = 0; v < num_nodes(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++visited;
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (visited != num_nodes()) throw DomainError("network has a cycle");

  const std::vector<bool> reach = Reachable(*this, source_, 0);
  for (std::size_t k = 0; k < sinks_.size(); ++k) {
    if (!reach[sinks_[k]]) {
      throw DomainError("sink '" + spec.sinks[k] + "' unreachable from source");
    }
  }

  message_ground_ = GroundSet::Create(spec.messages);
  if (spec.demands.size() != sinks_.size()) {
    throw DomainError("need one demand set per sink");
  }
  for (std::size_t k = 0; k < sinks_.size(); ++k) {
    std::uint64_t mask = 0;
    for (const std::string& m : spec.demands[k]) {
      const auto i = message_ground_->IndexOf(m);
      if (!i) throw DomainError("unknown message '" + m + "'");
      mask |= std::uint64_t{1} << *i;
    }
    if (mask == 0) {
      throw DomainError("sink '" + spec.sinks[k] + "' demands nothing");
    }
    demands_.push_back(mask);
  }
}

int BroadcastNetwork::NodeIndex(const std::string& name) const {
  const auto it = node_index_.find(name);
  if (it == node_index_.end()) {
    throw DomainError("unknown node '" + name + "'");
  }
  return it->second;
}

int BroadcastNetwork::sink(int k) const {
  if (k < 1 || k > num_sinks()) {
    throw DomainError("sink index " + std::to_string(k) + " outside [1, " +
                      std::to_string(num_sinks()) + "]");
  }
  return sinks_[k - 1];
}

ElementSet BroadcastNetwork::demand(int k) const {
  sink(k);
  return ElementSet(message_ground_, demands_[k - 1]);
}

ModularFunction BroadcastNetwork::CapacityFunction() const {
  std::vector<Rational> w;
  for (int a : cut_arcs_) w.push_back(*arcs_[a].capacity);
  return ModularFunction(cut_ground_, std::move(w));
}

Rational BroadcastNetwork::CapacityOf(const ElementSet& arcs) const {
  if (arcs.ground() != cut_ground_) {
    throw GroundMismatchError("arc set is not over this network's arcs");
  }
  Rational total = 0;
  for (int e : arcs.members()) total += *arcs_[cut_arcs_[e]].capacity;
  return total;
}

bool IsCut(const BroadcastNetwork& net, const ElementSet& arcs, int k) {
  if (arcs.ground() != net.cut_ground()) {
    throw GroundMismatchError("arc set is not over this network's arcs");
  }
  const int t = net.sink(k);
  return !Reachable(net, net.source(), arcs.mask())[t];
}

Cut::Cut(const BroadcastNetwork& net, ElementSet arcs, int k)
    : arcs_(std::move(arcs)), sink_(k) {
  if (!IsCut(net, arcs_, k)) {
    throw PreconditionError(arcs_.ToString() + " does not separate sink " +
                            std::to_string(k) + " from the source");
  }
}

MinCutResult MinCut(const BroadcastNetwork& net, int k) {
  const int t = net.sink(k);
  const int s = net.source();
  if (IsCut(net, ElementSet::Full(net.cut_ground()), k) == false) {
    throw InfeasibleError("sink " + std::to_string(k) +
                          " is joined to the source by unbounded arcs only");
  }
  const std::vector<Arc>& arcs = net.arcs();
  const int m = static_cast<int>(arcs.size());
  std::vector<Rational> flow(m, 0);
  std::vector<std::vector<int>> incident(net.num_nodes());
  for (int a = 0; a < m; ++a) {
    incident[arcs[a].from].push_back(a);
    incident[arcs[a].to].push_back(a);
  }
  // Residual along arc a leaving v: forward if v is the tail, else backward.
  auto forward_open = [&](int a) {
    return !arcs[a].capacity || flow[a] < *arcs[a].capacity;
  };
  std::vector<int> via(net.num_nodes());
  std::vector<bool> seen;
  auto search = [&]() {
    seen.assign(net.num_nodes(), false);
    std::deque<int> queue = {s};
    seen[s] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int a : incident[v]) {
        const bool fwd = arcs[a].from == v;
        const int w = fwd ? arcs[a].to : arcs[a].from;
        if (seen[w]) continue;
        if (fwd ? forward_open(a) : flow[a] > 0) {
          seen[w] = true;
          via[w] = a;
          queue.push_back(w);
        }
      }
    }
    return static_cast<bool>(seen[t]);
  };
  Rational value = 0;
  while (search()) {
    std::optional<Rational> bottleneck;
    for (int v = t; v != s;) {
      const int a = via[v];
      const bool fwd = arcs[a].to == v;
      std::optional<Rational> room;
      if (!fwd) {
        room = flow[a];
      } else if (arcs[a].capacity) {
        room = *arcs[a].capacity - flow[a];
      }
      if (room && (!bottleneck || *room < *bottleneck)) bottleneck = room;
      v = fwd ? arcs[a].from : arcs[a].to;
    }
    // The unbounded-path pre-check guarantees a finite bottleneck.
    for (int v = t; v != s;) {
      const int a = via[v];
      const bool fwd = arcs[a].to == v;
      if (fwd) {
        flow[a] += *bottleneck;
      } else {
        flow[a] -= *bottleneck;
      }
      v = fwd ? arcs[a].from : arcs[a].to;
    }
    value += *bottleneck;
  }
  std::uint64_t mask = 0;
  for (const Arc& a : arcs) {
    if (seen[a.from] && !seen[a.to]) mask |= std::uint64_t{1} << a.cut_index;
  }
  Cut cut(net, ElementSet(net.cut_ground(), mask), k);
  Rational capacity = net.CapacityOf(cut.arcs());
  if (capacity != value) {
    throw Error("internal: max-flow " + ToString(value) +
                " differs from cut capacity " + ToString(capacity));
  }
  return {std::move(cut), std::move(capacity), std::move(value)};
}

std::vector<Cut> MinCuts(const BroadcastNetwork& net) {
  std::vector<Cut> out;
  for (int k = 1; k <= net.num_sinks(); ++k) out.push_back(MinCut(net, k).cut);
  return out;
}

std::string IntermediateNodeName(IndexSet u) { return "v" + u.ToString(); }

std::string SubsetMessageName(IndexSet u) { return "W" + u.ToString(); }

BroadcastNetwork CombinationNetwork(
    int k, const std::map<IndexSet, Rational>& caps,
    const std::map<int, std::vector<std::string>>& demands,
    const std::vector<std::string>& message_order) {
  if (k < 1 || k > 6) {
    throw DomainError("combination network needs 1 <= K <= 6");
  }
  NetworkSpec spec;
  spec.source = "s";
  spec.nodes.push_back("s");
  for (const auto& [u, c] : caps) {
    if (u.empty() || u.max() > k) {
      throw DomainError("capacity given for " + u.ToString() +
                        " which is not a nonempty subset of [K]");
    }
    if (c < 0) throw DomainError("negative capacity for " + u.ToString());
  }
  std::vector<IndexSet> subsets;
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    subsets.push_back(IndexSet::FromMask(m));
  }
  std::sort(subsets.begin(), subsets.end(), [](IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  for (IndexSet u : subsets) spec.nodes.push_back(IntermediateNodeName(u));
  for (int t = 1; t <= k; ++t) {
    spec.nodes.push_back("t" + std::to_string(t));
    spec.sinks.push_back("t" + std::to_string(t));
  }
  for (IndexSet u : subsets) {
    const auto it = caps.find(u);
    spec.arcs.push_back({"s", IntermediateNodeName(u),
                         it == caps.end() ? Rational(0) : it->second});
  }
  for (IndexSet u : subsets) {
    for (int t : u.members()) {
      spec.arcs.push_back(
          {IntermediateNodeName(u), "t" + std::to_string(t), std::nullopt});
    }
  }
  spec.messages = message_order;
  std::set<std::string> declared(message_order.begin(), message_order.end());
  for (int t = 1; t <= k; ++t) {
    const auto it = demands.find(t);
    if (it == demands.end()) {
      throw DomainError("no demand set for sink " + std::to_string(t));
    }
    spec.demands.push_back(it->second);
    for (const std::string& m : it->second) {
      if (declared.insert(m).second) spec.messages.push_back(m);
    }
  }
  for (const auto& [t, _] : demands) {
    if (t < 1 || t > k) {
      throw DomainError("demand given for sink " + std::to_string(t));
    }
  }
  return BroadcastNetwork(spec);
}

BroadcastNetwork CompleteCombinationNetwork(
    int k, const std::map<IndexSet, Rational>& caps) {
  if (k < 1 || k > 6) {
    throw DomainError("combination network needs 1 <= K <= 6");
  }
  std::vector<IndexSet> subsets;
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    subsets.push_back(IndexSet::FromMask(m));
  }
  std::sort(subsets.begin(), subsets.end(), [](IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  std::map<int, std::vector<std::string>> demands;
  std::vector<std::string> order;
  for (IndexSet u : subsets) {
    order.push_back(SubsetMessageName(u));
    for (int t : u.members()) demands[t].push_back(SubsetMessageName(u));
  }
  return CombinationNetwork(k, caps, demands, order);
}

BroadcastNetwork SymmetricCombinationNetwork(int k,
                                             const std::vector<Rational>& c) {
  if (k < 1 || k > 6) {
    throw DomainError("combination network needs 1 <= K <= 6");
  }
  if (static_cast<int>(c.size()) != k) {
    throw DomainError("expected " + std::to_string(k) +
                      " symmetric capacities, got " + std::to_string(c.size()));
  }
  std::map<IndexSet, Rational> caps;
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    const IndexSet u = IndexSet::FromMask(m);
    caps[u] = c[u.size() - 1];
  }
  std::map<int, std::vector<std::string>> demands;
  std::vector<std::string> order = {"W0"};
  for (int t = 1; t <= k; ++t) {
    demands[t] = {"W0", "W" + std::to_string(t)};
    order.push_back("W" + std::to_string(t));
  }
  return CombinationNetwork(k, caps, demands, order);
}

std::pair<SubsetFamily, SubsetFamily> CutAndMessageFamilies(
    const BroadcastNetwork& net, const std::vector<Cut>& cuts) {
  if (static_cast<int>(cuts.size()) != net.num_sinks()) {
    throw DomainError("need one cut per sink");
  }
  std::vector<std::uint64_t> a, i;
  for (int k = 1; k <= net.num_sinks(); ++k) {
    const Cut& cut = cuts[k - 1];
    if (cut.sink() != k) {
      throw DomainError("cut " + std::to_string(k) + " is for sink " +
                        std::to_string(cut.sink()));
    }
    if (!IsCut(net, cut.arcs(), k)) {
      throw PreconditionError("cut for sink " + std::to_string(k) +
                              " does not separate it");
    }
    a.push_back(cut.arcs().mask());
    i.push_back(net.demand(k).mask());
  }
  return {SubsetFamily(net.cut_ground(), a),
          SubsetFamily(net.message_ground(), i)};
}

}  // namespace gcsb
