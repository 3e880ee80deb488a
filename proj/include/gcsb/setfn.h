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

#ifndef GCSB_SETFN_H_
#define GCSB_SETFN_H_

// Set functions over a GroundSet and evaluators for the submodular
// exchange inequalities built on the level operator of setcalc.h.
//
// Every gap evaluator returns LHS - RHS of its inequality as a raw signed
// value. The sign is nonnegative for submodular functions and exactly zero
// for modular ones; classification is left to callers.

#include <concepts>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "gcsb/errors.h"
#include "gcsb/rational.h"
#include "gcsb/setcalc.h"

namespace gcsb {

// f(A) = sum of nonnegative per-element weights. Exact.
class ModularFunction {
 public:
  using value_type = Rational;

  ModularFunction(GroundRef ground, std::vector<Rational> weights);

  const GroundRef& ground() const { return ground_; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational Value(std::uint64_t mask) const;
  Rational Eval(const ElementSet& a) const;

 private:
  GroundRef ground_;
  std::vector<Rational> weights_;
};

// f given by a table of 2^n binary64 values, f(empty) = 0, n <= 20.
class TableFunction {
 public:
  using value_type = double;
  static constexpr int kMaxGround = 20;

  TableFunction(GroundRef ground, std::vector<double> table);

  const GroundRef& ground() const { return ground_; }
  const std::vector<double>& table() const { return table_; }
  double Value(std::uint64_t mask) const { return table_[mask]; }
  double Eval(const ElementSet& a) const;

 private:
  GroundRef ground_;
  std::vector<double> table_;
};

using SetFunction = std::variant<ModularFunction, TableFunction>;

template <typename F>
concept SetFunctionLike = requires(const F& f, std::uint64_t mask) {
  typename F::value_type;
  { f.ground() } -> std::convertible_to<const GroundRef&>;
  { f.Value(mask) } -> std::convertible_to<typename F::value_type>;
};

// Joint pmf of m <= 6 binary random variables; outcome bit i is variable i.
class JointDistribution {
 public:
  static constexpr int kMaxVariables = 6;

  JointDistribution(int variable_count, std::vector<double> pmf);

  // Flat-Dirichlet pmf: i.i.d. exponential weights, normalised. Entries
  // below 1e-15 are clamped to zero and the rest renormalised.
  static JointDistribution Random(int variable_count, std::mt19937_64& rng);
  static JointDistribution UniformIndependent(int variable_count);

  int variable_count() const { return variable_count_; }
  const std::vector<double>& pmf() const { return pmf_; }

 private:
  int variable_count_;
  std::vector<double> pmf_;
};

// f(A) = joint Shannon entropy, in bits, of the variables indexed by A.
TableFunction EntropyFunction(const JointDistribution& dist);

// Local exchange test f(S+a) + f(S+b) >= f(S+a+b) + f(S) - tolerance over
// all S and a != b outside S; equivalent to the pairwise definition.
bool IsSubmodular(const ModularFunction& f, const Rational& tolerance = 0);
bool IsSubmodular(const TableFunction& f, double tolerance);
bool IsModular(const ModularFunction& f, const Rational& tolerance = 0);
bool IsModular(const TableFunction& f, double tolerance);

namespace setfn_internal {

void CheckSameGround(const GroundRef& f_ground, const SubsetFamily& family);
void CheckPrefixArgs(const SubsetFamily& family, int r_prime, int j);

}  // namespace setfn_internal

// sum_{k in U} f(S_k) - sum_{r=1}^{|U|} f(level(U, r)).
template <SetFunctionLike F>
typename F::value_type MultiwayGap(const F& f, const SubsetFamily& family,
                                   IndexSet u) {
  setfn_internal::CheckSameGround(f.ground(), family);
  if (u.empty()) throw DomainError("multiway gap needs a nonempty U");
  if (u.max() > family.size()) throw DomainError("U exceeds family size");
  const auto sets = family.masks();
  typename F::value_type gap = 0;
  for (int k : u.members()) gap += f.Value(sets[k - 1]);
  for (int r = 1; r <= u.size(); ++r) gap -= f.Value(LevelMask(sets, u.mask(), r));
  return gap;
}

// With base = S_0 (empty for the plain form), the gap
//   sum_{r<=r'} f(S_r+S_0) + sum_{r>r'} f(S_r + level([r],r'+1) + S_0)
// - sum_{r<=r'} f(level([J],r)+S_0) - sum_{r>r'} f(level([r],r'+1)+S_0)
// for 0 <= r' <= J <= K.
template <SetFunctionLike F>
typename F::value_type PrefixLevelGap(const F& f, const SubsetFamily& family,
                                      std::uint64_t base, int r_prime,
                                      int j) {
  setfn_internal::CheckSameGround(f.ground(), family);
  setfn_internal::CheckPrefixArgs(family, r_prime, j);
  const auto sets = family.masks();
  const std::uint32_t all = j == 0 ? 0 : (std::uint32_t{1} << j) - 1;
  typename F::value_type gap = 0;
  for (int r = 1; r <= r_prime; ++r) {
    gap += f.Value(sets[r - 1] | base);
    gap -= f.Value(LevelMask(sets, all, r) | base);
  }
  for (int r = r_prime + 1; r <= j; ++r) {
    const std::uint64_t shifted =
        LevelMask(sets, (std::uint32_t{1} << r) - 1, r_prime + 1);
    gap += f.Value(sets[r - 1] | shifted | base);
    gap -= f.Value(shifted | base);
  }
  return gap;
}

template <SetFunctionLike F>
typename F::value_type PrefixLevelGap(const F& f, const SubsetFamily& family,
                                      int r_prime, int j) {
  return PrefixLevelGap(f, family, 0, r_prime, j);
}

template <SetFunctionLike F>
typename F::value_type PrefixLevelGap(const F& f, const SubsetFamily& family,
                                      const ElementSet& base, int r_prime,
                                      int j) {
  if (base.ground() != family.ground()) {
    throw GroundMismatchError("base set over a different ground set");
  }
  return PrefixLevelGap(f, family, base.mask(), r_prime, j);
}

// True iff level(U, q) is contained in level(T, r_q); the containment
// precondition of ContainedLevelGap.
bool LevelContained(const SubsetFamily& family, IndexSet u, int q, IndexSet t,
                    int r_q);

// With T = {t_1 < ... < t_|T|} and L = level(U, q) contained in level(T, r_q):
//   sum_r f(S_{t_r}) + r_q f(L)
// - sum_{r<=r_q} [f(level(T,r)) + f(S_{t_r} & L)]
// - sum_{r>r_q} f(S_{t_r} & (L | level({t_1..t_r}, r_q+1))).
// Throws PreconditionError naming both sets when the containment fails.
template <SetFunctionLike F>
typename F::value_type ContainedLevelGap(const F& f, const SubsetFamily& family,
                                         IndexSet u, IndexSet t, int q,
                                         int r_q) {
  setfn_internal::CheckSameGround(f.ground(), family);
  if (!LevelContained(family, u, q, t, r_q)) {
    throw PreconditionError(
        "level(U=" + u.ToString() + ", " + std::to_string(q) + ") = " +
        IntersectLevel(family, u, q).ToString() + " is not contained in " +
        "level(T=" + t.ToString() + ", " + std::to_string(r_q) + ") = " +
        IntersectLevel(family, t, r_q).ToString());
  }
  const auto sets = family.masks();
  const std::vector<int> ts = t.members();
  const std::uint64_t inner = LevelMask(sets, u.mask(), q);
  typename F::value_type gap = 0;
  for (int tr : ts) gap += f.Value(sets[tr - 1]);
  gap += typename F::value_type(r_q) * f.Value(inner);
  std::uint32_t prefix = 0;
  for (int r = 1; r <= static_cast<int>(ts.size()); ++r) {
    const std::uint64_t s_tr = sets[ts[r - 1] - 1];
    prefix |= std::uint32_t{1} << (ts[r - 1] - 1);
    if (r <= r_q) {
      gap -= f.Value(LevelMask(sets, t.mask(), r));
      gap -= f.Value(s_tr & inner);
    } else {
      gap -= f.Value(s_tr & (inner | LevelMask(sets, prefix, r_q + 1)));
    }
  }
  return gap;
}

}  // namespace gcsb

#endif  // GCSB_SETFN_H_
