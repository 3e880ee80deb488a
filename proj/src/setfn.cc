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

#include "gcsb/setfn.h"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace gcsb {

ModularFunction::ModularFunction(GroundRef ground, std::vector<Rational> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != ground_->size()) {
    throw DomainError("modular function needs one weight per element");
  }
  for (Rational& w : weights_) {
    w.canonicalize();
    if (w < 0) throw DomainError("modular weight " + ToString(w) + " < 0");
  }
}

Rational ModularFunction::Value(std::uint64_t mask) const {
  Rational sum = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    sum += weights_[std::countr_zero(m)];
  }
  return sum;
}

Rational ModularFunction::Eval(const ElementSet& a) const {
  if (a.ground() != ground_) {
    throw GroundMismatchError("set function evaluated off its ground set");
  }
  return Value(a.mask());
}

TableFunction::TableFunction(GroundRef ground, std::vector<double> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  if (ground_->size() > kMaxGround) {
    throw DomainError("table functions support at most 20 elements");
  }
  if (table_.size() != (std::size_t{1} << ground_->size())) {
    throw DomainError("table function needs 2^n entries");
  }
  if (table_[0] != 0.0) throw DomainError("table function has f(empty) != 0");
  for (double v : table_) {
    if (!(v >= 0.0)) throw DomainError("table function has a negative value");
  }
}

double TableFunction::Eval(const ElementSet& a) const {
  if (a.ground() != ground_) {
    throw GroundMismatchError("set function evaluated off its ground set");
  }
  return table_[a.mask()];
}

JointDistribution::JointDistribution(int variable_count, std::vector<double> pmf)
    : variable_count_(variable_count), pmf_(std::move(pmf)) {
  if (variable_count_ < 1 || variable_count_ > kMaxVariables) {
    throw DomainError("distribution needs 1..6 binary variables");
  }
  if (pmf_.size() != (std::size_t{1} << variable_count_)) {
    throw DomainError("pmf needs 2^m entries");
  }
  double total = 0.0;
  for (double p : pmf_) {
    if (!(p >= 0.0)) throw DomainError("pmf has a negative entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("pmf sums to " + std::to_string(total) + ", not 1");
  }
}

JointDistribution JointDistribution::Random(int variable_count,
                                            std::mt19937_64& rng) {
  const std::size_t n = std::size_t{1} << variable_count;
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> pmf(n);
  for (double& p : pmf) p = draw(rng);
  for (int pass = 0; pass < 2; ++pass) {
    const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    for (double& p : pmf) {
      p /= total;
      if (p < 1e-15) p = 0.0;
    }
  }
  return JointDistribution(variable_count, std::move(pmf));
}

JointDistribution JointDistribution::UniformIndependent(int variable_count) {
  const std::size_t n = std::size_t{1} << variable_count;
  return JointDistribution(variable_count,
                           std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

TableFunction EntropyFunction(const JointDistribution& dist) {
  const int m = dist.variable_count();
  const std::size_t n = std::size_t{1} << m;
  const std::vector<double>& pmf = dist.pmf();
  std::vector<double> table(n, 0.0);
  std::vector<double> marginal(n);
  for (std::size_t a = 1; a < n; ++a) {
    std::fill(marginal.begin(), marginal.end(), 0.0);
    for (std::size_t x = 0; x < n; ++x) marginal[x & a] += pmf[x];
    double h = 0.0;
    for (double p : marginal) {
      if (p > 0.0) h -= p * std::log2(p);
    }
    // Rounding can leave -0 or tiny negatives for deterministic variables.
    table[a] = h > 0.0 ? h : 0.0;
  }
  return TableFunction(GroundSet::Create(m), std::move(table));
}

namespace {

// Calls visit(S, a, b) for every S and a < b outside S until it returns
// false.
template <typename Visit>
bool ForEachExchange(int n, Visit visit) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    for (int a = 0; a < n; ++a) {
      if ((s >> a) & 1U) continue;
      for (int b = a + 1; b < n; ++b) {
        if ((s >> b) & 1U) continue;
        if (!visit(s, std::uint64_t{1} << a, std::uint64_t{1} << b)) {
          return false;
        }
      }
    }
  }
  return true;
}

template <typename F, typename T>
bool SubmodularImpl(const F& f, const T& tolerance) {
  return ForEachExchange(f.ground()->size(), [&](std::uint64_t s,
                                                 std::uint64_t a,
                                                 std::uint64_t b) {
    return f.Value(s | a) + f.Value(s | b) >=
           f.Value(s | a | b) + f.Value(s) - tolerance;
  });
}

template <typename F, typename T>
bool ModularImpl(const F& f, const T& tolerance) {
  return ForEachExchange(f.ground()->size(), [&](std::uint64_t s,
                                                 std::uint64_t a,
                                                 std::uint64_t b) {
    const typename F::value_type diff =
        f.Value(s | a) + f.Value(s | b) - f.Value(s | a | b) - f.Value(s);
    return diff <= tolerance && -diff <= tolerance;
  });
}

}  // namespace

bool IsSubmodular(const ModularFunction& f, const Rational& tolerance) {
  if (f.ground()->size() > TableFunction::kMaxGround) return tolerance >= 0;
  return SubmodularImpl(f, tolerance);
}

bool IsSubmodular(const TableFunction& f, double tolerance) {
  return SubmodularImpl(f, tolerance);
}

bool IsModular(const ModularFunction& f, const Rational& tolerance) {
  if (f.ground()->size() > TableFunction::kMaxGround) return tolerance >= 0;
  return ModularImpl(f, tolerance);
}

bool IsModular(const TableFunction& f, double tolerance) {
  return ModularImpl(f, tolerance);
}

bool LevelContained(const SubsetFamily& family, IndexSet u, int q, IndexSet t,
                    int r_q) {
  const ElementSet inner = IntersectLevel(family, u, q);
  const ElementSet outer = IntersectLevel(family, t, r_q);
  return inner.IsSubsetOf(outer);
}

namespace setfn_internal {

void CheckSameGround(const GroundRef& f_ground, const SubsetFamily& family) {
  if (f_ground != family.ground()) {
    throw GroundMismatchError("set function and family use different grounds");
  }
}

void CheckPrefixArgs(const SubsetFamily& family, int r_prime, int j) {
  if (!(0 <= r_prime && r_prime <= j && j <= family.size())) {
    throw DomainError("need 0 <= r' <= J <= K, got r' = " +
                      std::to_string(r_prime) + ", J = " + std::to_string(j) +
                      ", K = " + std::to_string(family.size()));
  }
}

}  // namespace setfn_internal

}  // namespace gcsb
