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

// Broadcast networks: capacitated DAGs with one source, K sinks and a demand
// set per sink. Cuts, exact max-flow/min-cut and combination networks.

#ifndef GCSB_NETWORK_H_
#define GCSB_NETWORK_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcsb/rational.h"
#include "gcsb/setcalc.h"
#include "gcsb/setfn.h"

namespace gcsb {

// An empty capacity is unbounded: such an arc can never be cut.
using Capacity = std::optional<Rational>;

struct ArcSpec {
  std::string from;
  std::string to;
  Capacity capacity;
};

struct NetworkSpec {
  std::vector<std::string> nodes;
  std::vector<ArcSpec> arcs;
  std::string source;
  std::vector<std::string> sinks;
  std::vector<std::string> messages;
  // demands[k] lists the message labels wanted by sinks[k].
  std::vector<std::vector<std::string>> demands;
};

struct Arc {
  int from = 0;
  int to = 0;
  Capacity capacity;
  // "u->v", with "#n" appended to the n-th parallel copy (n >= 2).
  std::string label;
  // Position in the cut ground, or -1 for unbounded arcs.
  int cut_index = -1;
};

class BroadcastNetwork {
 public:
  // Validates: known endpoints, nonnegative finite capacities, acyclic,
  // every sink reachable from the source, nonempty demands over declared
  // messages, at most 64 finite arcs and messages, 1..16 sinks.
  explicit BroadcastNetwork(const NetworkSpec& spec);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const std::string& node(int v) const { return nodes_.at(v); }
  int NodeIndex(const std::string& name) const;
  const std::vector<Arc>& arcs() const { return arcs_; }
  int source() const { return source_; }
  int num_sinks() const { return static_cast<int>(sinks_.size()); }
  // 1-based, matching family indices.
  int sink(int k) const;

  // Finite arcs only; elements are labelled by arc label.
  const GroundRef& cut_ground() const { return cut_ground_; }
  const GroundRef& message_ground() const { return message_ground_; }
  ElementSet demand(int k) const;
  // Arc index (into arcs()) of each cut-ground element.
  int ArcOfCutElement(int e) const { return cut_arcs_.at(e); }

  // Modular capacity function over the cut ground.
  ModularFunction CapacityFunction() const;
  Rational CapacityOf(const ElementSet& arcs) const;

  const NetworkSpec& spec() const { return spec_; }

 private:
  NetworkSpec spec_;
  std::vector<std::string> nodes_;
  std::map<std::string, int> node_index_;
  std::vector<Arc> arcs_;
  int source_ = 0;
  std::vector<int> sinks_;
  GroundRef cut_ground_;
  GroundRef message_ground_;
  std::vector<int> cut_arcs_;
  std::vector<std::uint64_t> demands_;
};

// True iff removing `arcs` leaves no directed path from the source to sink k.
bool IsCut(const BroadcastNetwork& net, const ElementSet& arcs, int k);

class Cut {
 public:
  // Throws PreconditionError when `arcs` does not separate sink k.
  Cut(const BroadcastNetwork& net, ElementSet arcs, int k);

  const ElementSet& arcs() const { return arcs_; }
  int sink() const { return sink_; }

 private:
  ElementSet arcs_;
  int sink_;
};

struct MinCutResult {
  Cut cut;
  Rational capacity;
  Rational flow_value;
};

// Edmonds-Karp with exact residuals. The returned cut is the set of arcs
// leaving the nodes reachable in the final residual graph. Throws
// InfeasibleError when a path of unbounded arcs joins source and sink.
MinCutResult MinCut(const BroadcastNetwork& net, int k);

// One intermediate node v{U} per nonempty U of [K] with arc s->v{U} of
// capacity caps[U] (0 when absent) and unbounded arcs v{U}->t<k> for k in U.
// Sinks are t1..tK. demands maps sink k to message labels; messages are
// declared in `message_order` when given, else in first-seen order. K <= 6
// so the cut ground fits in 64 arcs.
BroadcastNetwork CombinationNetwork(
    int k, const std::map<IndexSet, Rational>& caps,
    const std::map<int, std::vector<std::string>>& demands,
    const std::vector<std::string>& message_order = {});

// Messages W{U} for every nonempty U, demanded by every sink in U.
BroadcastNetwork CompleteCombinationNetwork(
    int k, const std::map<IndexSet, Rational>& caps);

// C_U = c[|U| - 1]; common message W0 and private messages W1..WK.
BroadcastNetwork SymmetricCombinationNetwork(int k,
                                             const std::vector<Rational>& c);

// Node and message labels used by the constructors above.
std::string IntermediateNodeName(IndexSet u);
std::string SubsetMessageName(IndexSet u);

// (A_1..A_K) over the cut ground and (I_1..I_K) over the message ground.
std::pair<SubsetFamily, SubsetFamily> CutAndMessageFamilies(
    const BroadcastNetwork& net, const std::vector<Cut>& cuts);

// Min cut for every sink.
std::vector<Cut> MinCuts(const BroadcastNetwork& net);

}  // namespace gcsb

#endif  // GCSB_NETWORK_H_
