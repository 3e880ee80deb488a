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

#ifndef GCSB_BOUNDS_H_
#define GCSB_BOUNDS_H_

// Symbolic cut-set bounds over K sinks and their instantiation on concrete
// cut and message families.
//
// A bound is a weighted list of terms (r, U, w). Read against a message
// family I_1..I_K and a cut family A_1..A_K it states
//
//   sum_terms w * R(level_I(U, r))  <=  sum_terms w * C(level_A(U, r)),
//
// with R and C the modular rate and capacity functions. Both sides share the
// one term list, so the set operations on either side are always identical.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcsb/rational.h"
#include "gcsb/setcalc.h"
#include "gcsb/setfn.h"

namespace gcsb {

struct BoundTerm {
  int level = 1;
  IndexSet indices;
  Rational weight;
};

bool operator==(const BoundTerm& a, const BoundTerm& b);

class BoundInequality {
 public:
  // Sorts terms by (|U|, U lexicographic, r), merges equal (U, r) pairs and
  // validates 1 <= r <= |U| and positive weights.
  BoundInequality(std::vector<BoundTerm> terms, std::string provenance);

  const std::vector<BoundTerm>& terms() const { return terms_; }
  const std::string& provenance() const { return provenance_; }

  // Largest family index referenced by any term.
  int max_index() const;

  // Same terms scaled by the positive factor that makes the weights coprime
  // integers. Bounds are compared up to positive scaling via this form.
  BoundInequality Canonical() const;
  bool EquivalentTo(const BoundInequality& other) const;

  // "1*[r=1]{1,2,3} + 1*[r=2]{1,2}".
  std::string TermString() const;

 private:
  std::vector<BoundTerm> terms_;
  std::string provenance_;
};

// Coefficient sets Q live in IndexSet, whose members are plain integers.
using LevelSet = IndexSet;

// Weight of the level-r term over T contributed by q in the generalized
// bound:
//   0                                                            if r in Q
//   prod_{p<r}(p-1) prod_{r<p<=r_q} p / (r_q prod_{p<=r_q}(p-1))  otherwise
// with p ranging over Q. Requires q in Q, Q inside {2,..}, 1 <= r <= r_q.
Rational TransferWeight(LevelSet q_set, const std::map<int, int>& r_q, int q,
                        int r);

// Level weight of the single-U bound: 1 for empty Q, 0 for r in Q, and
// prod_{q<r}(q-1) prod_{q>r} q otherwise. Requires Q inside {2..size_u}.
Rational LevelWeight(LevelSet q_set, int size_u, int r);

// Checks, in exact arithmetic, that for r_q = q-1 the summed transfer
// weights collapse to the level weights: for every r < max(Q),
//   sum_{q in Q, q > r} TransferWeight(Q, q-1, q, r)
//     = LevelWeight(Q, r) / prod_{q in Q}(q-1) - 1     (r not in Q)
//     = 0                                               (r in Q).
bool AggregatedTransferIdentityHolds(LevelSet q_set, int size_u);

// R(union_{k in U} I_k) <= C(union_{k in U} A_k).
BoundInequality UnionCutBound(IndexSet u);

enum class TripleVariant { kA, kB, kC, kD };

// The four three-cut bounds over distinct i, j, k:
//   a: level1{i,j,k} + level2{i,j}
//   b: level1{i,j,k} + level2{i,j,k}
//   c: level1{i,j,k} + level1{i,j} + level3{i,j,k}
//   d: 2 level1{i,j,k} + level3{i,j,k}
BoundInequality TripleCutBound(int i, int j, int k, TripleVariant variant);

struct GeneralizedCutParams {
  IndexSet g;
  IndexSet u;
  IndexSet t;
  LevelSet q;
  // r_q for each q in Q.
  std::map<int, int> r_q;

  // G = U = T and r_q = q - 1: the parameterization whose coverage
  // conditions hold for every family.
  static GeneralizedCutParams SameSet(IndexSet u, LevelSet q);
  std::string ToString() const;
};

// Terms (1, G, 1) + sum_{r in {2..|U|} \ Q} (r, U, 1)
//       + sum_{q in Q} sum_{r <= r_q} (r, T, TransferWeight(Q, r_q, q, r)).
// Checks only parameter ranges, not coverage.
BoundInequality GeneralizedCutTerms(const GeneralizedCutParams& params);

struct CoverageReport {
  // level_A(G, 1) contains level_A(U, 1).
  bool union_cover = false;
  // For every q: level_A(U, q) inside level_A(T, r_q).
  bool cut_levels = false;
  // For every q: level_I(U, q) inside level_I(T, r_q).
  bool message_levels_over_t = false;
  // The same containment with U in place of T on the right.
  bool message_levels_over_u = false;
  // First failing containment, empty when all of the required ones hold.
  std::string failure;

  bool ok() const { return union_cover && cut_levels && message_levels_over_t; }
};

CoverageReport CheckCoverage(const GeneralizedCutParams& params,
                             const SubsetFamily& cuts,
                             const SubsetFamily& messages);

// GeneralizedCutTerms after validating the coverage conditions on both
// families. Throws PreconditionError naming the failing containment.
BoundInequality GeneralizedCutBound(const GeneralizedCutParams& params,
                                    const SubsetFamily& cuts,
                                    const SubsetFamily& messages);

// sum_r LevelWeight(Q, |U|, r) (r, U). Zero-weight levels are dropped.
BoundInequality LevelWeightedBound(IndexSet u, LevelSet q);

// m (1, U) + sum_{r=m+1}^{|U|} (r, U), 1 <= m <= |U|.
BoundInequality HeadWeightedBound(IndexSet u, int m);

enum BoundRule : unsigned {
  kUnionRule = 1u << 0,         // csb
  kTripleRule = 1u << 1,        // gcsb3
  kHeadWeightedRule = 1u << 2,  // cor3
  kLevelWeightedRule = 1u << 3, // cor2
  kAllSymbolicRules = 0xfu,
};

// Parses "csb,gcsb3,cor3,cor2" (thm2 is accepted and ignored here; it needs
// concrete families). Throws DomainError on unknown names.
unsigned ParseBoundRules(const std::string& list, bool* wants_search = nullptr);

// Every bound of the selected families over K sinks, deduplicated up to
// positive scaling, in generation order. Head- and level-weighted bounds
// with all weights equal and |U| >= 2 are skipped: they are the sum of the
// |U| single-sink union bounds.
std::vector<BoundInequality> EnumerateBounds(int k, unsigned rules);

// All generalized bounds whose coverage conditions hold on the given
// families, deduplicated up to scaling. Limited to K <= 4.
std::vector<BoundInequality> SearchGeneralizedCutBounds(
    const SubsetFamily& cuts, const SubsetFamily& messages);

// A bound read against concrete families. Coefficients are indexed by the
// elements of the message and arc ground sets.
struct InstantiatedInequality {
  GroundRef messages;
  GroundRef arcs;
  std::vector<Rational> rate_coeffs;
  std::vector<Rational> capacity_coeffs;
  // Capacity side evaluated on numeric capacities, when supplied.
  std::optional<Rational> rhs_value;
  std::string provenance;

  // No message appears on the rate side (e.g. all I_k empty).
  bool vacuous() const;
  // Rate and capacity coefficients scaled together to coprime integers.
  InstantiatedInequality Canonical() const;
  bool SameCoefficients(const InstantiatedInequality& other) const;
};

// Each term (r, U, w) adds w to the rate coefficient of every message in
// level_I(U, r) and to the capacity coefficient of every arc in
// level_A(U, r).
InstantiatedInequality Instantiate(const BoundInequality& bound,
                                   const SubsetFamily& cuts,
                                   const SubsetFamily& messages);
InstantiatedInequality Instantiate(const BoundInequality& bound,
                                   const SubsetFamily& cuts,
                                   const SubsetFamily& messages,
                                   const ModularFunction& capacities);

}  // namespace gcsb

#endif  // GCSB_BOUNDS_H_
