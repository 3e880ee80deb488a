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

// Rate-region systems built from instantiated bounds, and the
// combination-network systems used by region comparisons.

#ifndef GCSB_REGIONS_H_
#define GCSB_REGIONS_H_

#include <string>
#include <string_view>
#include <vector>

#include "gcsb/bounds.h"
#include "gcsb/network.h"
#include "gcsb/polytope.h"

namespace gcsb {

// Symbolic bounds selected by `rules`, plus the generalized-cut parameter
// search on the network's cut/message families when `search` is set.
std::vector<BoundInequality> SelectBounds(const BroadcastNetwork& net,
                                          const std::vector<Cut>& cuts,
                                          unsigned rules, bool search);

// Instantiated with the network's capacities; vacuous rows dropped.
std::vector<InstantiatedInequality> InstantiateAll(
    const BroadcastNetwork& net, const std::vector<Cut>& cuts,
    const std::vector<BoundInequality>& bounds);

// "W{1,2}" -> "R{1,2}", "W0" -> "R0", other labels "m" -> "R[m]".
std::string RateVariable(const std::string& message);
std::vector<std::string> RateVariables(const BroadcastNetwork& net);

// Rows sum_m rate * R_m - sum_a cap * C_a <= 0 with one capacity variable per
// cut-ground arc; arcs sharing a name share a variable. All variables are
// nonnegative: rates first, capacities in first-seen order.
LinearSystem SymbolicSystem(const std::vector<InstantiatedInequality>& rows,
                            const std::vector<std::string>& rate_names,
                            const std::vector<std::string>& capacity_names);

// Rows sum_m rate * R_m <= evaluated capacity.
LinearSystem NumericSystem(const std::vector<InstantiatedInequality>& rows,
                           const std::vector<std::string>& rate_names);

struct Axis {
  std::string name;
  std::vector<std::string> vars;
};

// Adds each axis as the sum of its variables and eliminates every other
// variable except those in `also_keep`. Axes must not share variables.
LinearSystem ProjectToAxes(const LinearSystem& sys,
                           const std::vector<Axis>& axes,
                           const std::vector<std::string>& also_keep = {});

// Comma-separated axes, each "NAME" for a single rate variable or
// "NAME=V1+V2+..." for a sum. A bare "Rsp" stands for every rate variable
// except R0. Throws DomainError on unknown or repeated variables.
std::vector<Axis> ParseAxes(std::string_view spec,
                            const std::vector<std::string>& rate_vars);

// Common rate and sum of private rates on a symmetric combination network.
std::vector<Axis> CommonPrivateAxes(int k);

// Capacity variable names for a combination network's source arcs:
// "C{1,2}" per subset, or "C2" per subset size when `by_size`.
std::vector<std::string> CombinationCapacityVariables(
    const BroadcastNetwork& net, bool by_size);

// A_k = source arcs into the intermediate nodes linked to sink k. These
// are minimum cuts whenever every capacity is positive, and stay the paper's
// cuts when some capacity is zero.
std::vector<Cut> CombinationBasicCuts(const BroadcastNetwork& net);

// Complete-message three-sink network, symbolic capacities C{U}, all
// symbolic rules, canonical rows.
LinearSystem CompleteThreeSinkSystem();

// Bounds from `rules` on the symmetric network in R0, R1..RK and symbolic
// capacities C1..CK.
LinearSystem SymmetricSymbolicSystem(int k, unsigned rules);

// The system above projected to R0, Rsp, C1..CK.
LinearSystem SymmetricSymbolicProjection(int k, unsigned rules);

// Single-sink-union bounds of the symmetric network in R0, R1..RK and
// symbolic C1..CK.
LinearSystem SymmetricCutsetSystem(int k);

// The system above with R1 = Rsp - R2 - ... - RK substituted and R2..RK
// eliminated: variables R0, Rsp, C1..CK.
LinearSystem SymmetricCutsetProjection(int k);

// Numeric region in (R0, Rsp) from the given bound rules.
LinearSystem SymmetricRegion(int k, const std::vector<Rational>& c,
                             unsigned rules);

// Head-weighted bounds over U = [K] only, numeric, in (R0, Rsp).
LinearSystem SymmetricHeadWeightedRegion(int k, const std::vector<Rational>& c);

}  // namespace gcsb

#endif  // GCSB_REGIONS_H_
