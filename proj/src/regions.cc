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

#include "gcsb/regions.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "gcsb/errors.h"

namespace gcsb {

std::vector<BoundInequality> SelectBounds(const BroadcastNetwork& net,
                                          const std::vector<Cut>& cuts,
                                          unsigned rules, bool search) {
  std::vector<BoundInequality> out = EnumerateBounds(net.num_sinks(), rules);
  if (search) {
    const auto [a, i] = CutAndMessageFamilies(net, cuts);
    for (BoundInequality& b : SearchGeneralizedCutBounds(a, i)) {
      bool seen = false;
      for (const BoundInequality& have : out) seen |= have.EquivalentTo(b);
      if (!seen) out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<InstantiatedInequality> InstantiateAll(
    const BroadcastNetwork& net, const std::vector<Cut>& cuts,
    const std::vector<BoundInequality>& bounds) {
  const auto [a, i] = CutAndMessageFamilies(net, cuts);
  const ModularFunction caps = net.CapacityFunction();
  std::vector<InstantiatedInequality> out;
  for (const BoundInequality& b : bounds) {
    InstantiatedInequality in = Instantiate(b, a, i, caps);
    if (!in.vacuous()) out.push_back(std::move(in));
  }
  return out;
}

std::string RateVariable(const std::string& message) {
  if (message.size() > 1 && message[0] == 'W') return "R" + message.substr(1);
  return "R[" + message + "]";
}

std::vector<std::string> RateVariables(const BroadcastNetwork& net) {
  std::vector<std::string> out;
  for (int m = 0; m < net.message_ground()->size(); ++m) {
    out.push_back(RateVariable(net.message_ground()->Label(m)));
  }
  return out;
}

LinearSystem SymbolicSystem(const std::vector<InstantiatedInequality>& rows,
                            const std::vector<std::string>& rate_names,
                            const std::vector<std::string>& capacity_names) {
  std::vector<std::string> vars = rate_names;
  for (const std::string& c : capacity_names) {
    if (std::find(vars.begin(), vars.end(), c) == vars.end()) vars.push_back(c);
  }
  LinearSystem sys(vars);
  for (const InstantiatedInequality& in : rows) {
    if (in.rate_coeffs.size() != rate_names.size() ||
        in.capacity_coeffs.size() != capacity_names.size()) {
      throw DomainError("variable names do not match the inequality");
    }
    std::map<std::string, Rational> coeffs;
    for (std::size_t m = 0; m < rate_names.size(); ++m) {
      coeffs[rate_names[m]] += in.rate_coeffs[m];
    }
    for (std::size_t a = 0; a < capacity_names.size(); ++a) {
      coeffs[capacity_names[a]] -= in.capacity_coeffs[a];
    }
    sys.AddNamedRow(coeffs, 0);
  }
  return sys;
}

LinearSystem NumericSystem(const std::vector<InstantiatedInequality>& rows,
                           const std::vector<std::string>& rate_names) {
  LinearSystem sys(rate_names);
  for (const InstantiatedInequality& in : rows) {
    if (!in.rhs_value) throw DomainError("inequality has no numeric capacity");
    sys.AddRow(in.rate_coeffs, *in.rhs_value);
  }
  return sys;
}

LinearSystem ProjectToAxes(const LinearSystem& sys,
                           const std::vector<Axis>& axes,
                           const std::vector<std::string>& also_keep) {
  // Unlike inside elimination, the starting system is reduced regardless of
  // its size: bound families repeat many rows up to implication.
  LinearSystem cur = RemoveRedundant(sys, RedundancyTier::kLinearProgram,
                                     std::numeric_limits<int>::max());
  std::set<std::string> used;
  std::vector<std::string> keep;
  for (const Axis& axis : axes) {
    if (axis.vars.empty()) {
      throw DomainError("axis '" + axis.name + "' has no variables");
    }
    for (const std::string& v : axis.vars) {
      cur.VarIndex(v);
      if (!used.insert(v).second) {
        throw DomainError("variable '" + v + "' is on two axes");
      }
    }
    keep.push_back(axis.name);
    if (axis.vars.size() == 1 && axis.vars[0] == axis.name) continue;
    cur.AddVariable(axis.name, true);
    // first := axis - rest
    std::map<std::string, Rational> expr = {{axis.name, 1}};
    for (std::size_t i = 1; i < axis.vars.size(); ++i) {
      expr[axis.vars[i]] -= 1;
    }
    cur = Substitute(cur, axis.vars[0], expr);
  }
  keep.insert(keep.end(), also_keep.begin(), also_keep.end());
  return RemoveRedundant(Project(cur, keep));
}

std::vector<Axis> ParseAxes(std::string_view spec,
                            const std::vector<std::string>& rate_vars) {
  // Separators inside braces belong to names such as "R{1,2}".
  auto split = [](std::string_view text, char sep) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char ch : text) {
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      if (ch == sep && depth == 0) {
        out.emplace_back();
      } else {
        out.back() += ch;
      }
    }
    return out;
  };
  auto known = [&](const std::string& v) {
    return std::find(rate_vars.begin(), rate_vars.end(), v) != rate_vars.end();
  };
  std::vector<Axis> axes;
  std::set<std::string> used;
  for (const std::string& item : split(spec, ',')) {
    Axis axis;
    const std::size_t eq = item.find('=');
    if (eq != std::string::npos) {
      axis.name = item.substr(0, eq);
      axis.vars = split(std::string_view(item).substr(eq + 1), '+');
    } else if (item == "Rsp" && !known(item)) {
      axis.name = item;
      for (const std::string& v : rate_vars) {
        if (v != "R0") axis.vars.push_back(v);
      }
    } else {
      axis.name = item;
      axis.vars = {item};
    }
    if (axis.name.empty() || axis.vars.empty()) {
      throw DomainError("bad axis '" + item + "'");
    }
    for (const std::string& v : axis.vars) {
      if (!known(v)) throw DomainError("unknown rate variable '" + v + "'");
      if (!used.insert(v).second) {
        throw DomainError("rate variable '" + v + "' on two axes");
      }
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

std::vector<Axis> CommonPrivateAxes(int k) {
  Axis sp{"Rsp", {}};
  for (int t = 1; t <= k; ++t) sp.vars.push_back("R" + std::to_string(t));
  return {{"R0", {"R0"}}, sp};
}

std::vector<std::string> CombinationCapacityVariables(
    const BroadcastNetwork& net, bool by_size) {
  std::vector<std::string> out;
  for (int e = 0; e < net.cut_ground()->size(); ++e) {
    const std::string label = net.cut_ground()->Label(e);
    const auto brace = label.find('{');
    if (label.rfind("s->v", 0) != 0 || brace == std::string::npos) {
      throw DomainError("arc '" + label + "' is not a combination-network arc");
    }
    const std::string subset = label.substr(brace);
    if (by_size) {
      const long commas = std::count(subset.begin(), subset.end(), ',');
      out.push_back("C" + std::to_string(commas + 1));
    } else {
      out.push_back("C" + subset);
    }
  }
  return out;
}

namespace {

std::map<IndexSet, Rational> UnitCaps(int k) {
  std::map<IndexSet, Rational> caps;
  for (std::uint32_t m = 1; m < (1u << k); ++m) caps[IndexSet::FromMask(m)] = 1;
  return caps;
}

}  // namespace

std::vector<Cut> CombinationBasicCuts(const BroadcastNetwork& net) {
  std::vector<Cut> out;
  for (int k = 1; k <= net.num_sinks(); ++k) {
    std::set<int> feeders;
    for (const Arc& a : net.arcs()) {
      if (a.to == net.sink(k)) feeders.insert(a.from);
    }
    std::uint64_t mask = 0;
    for (const Arc& a : net.arcs()) {
      if (a.from == net.source() && feeders.count(a.to) && a.cut_index >= 0) {
        mask |= std::uint64_t{1} << a.cut_index;
      }
    }
    out.emplace_back(net, ElementSet(net.cut_ground(), mask), k);
  }
  return out;
}

LinearSystem CompleteThreeSinkSystem() {
  const BroadcastNetwork net = CompleteCombinationNetwork(3, UnitCaps(3));
  const std::vector<Cut> cuts = CombinationBasicCuts(net);
  const auto rows = InstantiateAll(
      net, cuts, SelectBounds(net, cuts, kAllSymbolicRules, false));
  return SymbolicSystem(rows, RateVariables(net),
                        CombinationCapacityVariables(net, false))
      .Canonical();
}

LinearSystem SymmetricSymbolicSystem(int k, unsigned rules) {
  const BroadcastNetwork net =
      SymmetricCombinationNetwork(k, std::vector<Rational>(k, 1));
  const std::vector<Cut> cuts = CombinationBasicCuts(net);
  const auto rows =
      InstantiateAll(net, cuts, SelectBounds(net, cuts, rules, false));
  return SymbolicSystem(rows, RateVariables(net),
                        CombinationCapacityVariables(net, true))
      .Canonical();
}

LinearSystem SymmetricSymbolicProjection(int k, unsigned rules) {
  std::vector<std::string> caps;
  for (int i = 1; i <= k; ++i) caps.push_back("C" + std::to_string(i));
  return ProjectToAxes(SymmetricSymbolicSystem(k, rules), CommonPrivateAxes(k),
                       caps);
}

LinearSystem SymmetricCutsetSystem(int k) {
  return SymmetricSymbolicSystem(k, kUnionRule);
}

LinearSystem SymmetricCutsetProjection(int k) {
  return SymmetricSymbolicProjection(k, kUnionRule);
}

LinearSystem SymmetricRegion(int k, const std::vector<Rational>& c,
                             unsigned rules) {
  const BroadcastNetwork net = SymmetricCombinationNetwork(k, c);
  const std::vector<Cut> cuts = CombinationBasicCuts(net);
  const auto rows =
      InstantiateAll(net, cuts, SelectBounds(net, cuts, rules, false));
  return ProjectToAxes(NumericSystem(rows, RateVariables(net)),
                       CommonPrivateAxes(k));
}

LinearSystem SymmetricHeadWeightedRegion(int k,
                                         const std::vector<Rational>& c) {
  const BroadcastNetwork net = SymmetricCombinationNetwork(k, c);
  const std::vector<Cut> cuts = CombinationBasicCuts(net);
  std::vector<BoundInequality> bounds;
  for (int m = 1; m <= k; ++m) {
    bounds.push_back(HeadWeightedBound(IndexSet::Range(k), m));
  }
  return ProjectToAxes(
      NumericSystem(InstantiateAll(net, cuts, bounds), RateVariables(net)),
      CommonPrivateAxes(k));
}

}  // namespace gcsb
