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

// Exact linear inequality systems over named variables: simplex, projection
// by Fourier-Motzkin elimination, 2-D vertices and containment.

#ifndef GCSB_POLYTOPE_H_
#define GCSB_POLYTOPE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcsb/rational.h"

namespace gcsb {

// coeffs . x <= rhs
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

bool operator==(const LinearRow& a, const LinearRow& b);

class LinearSystem {
 public:
  LinearSystem() = default;
  // All variables nonnegative.
  explicit LinearSystem(std::vector<std::string> vars);
  LinearSystem(std::vector<std::string> vars, std::vector<bool> nonnegative);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  int VarIndex(const std::string& name) const;
  bool HasVar(const std::string& name) const;
  bool nonnegative(int i) const { return nonnegative_.at(i); }
  const std::vector<bool>& nonnegative_flags() const { return nonnegative_; }
  void SetNonnegative(const std::string& name, bool value);
  void AddVariable(const std::string& name, bool nonnegative = true);

  // Rows with no nonzero coefficient are dropped when rhs >= 0 and mark the
  // system infeasible otherwise.
  void AddRow(std::vector<Rational> coeffs, Rational rhs);
  void AddNamedRow(const std::map<std::string, Rational>& coeffs,
                   Rational rhs);

  const std::vector<LinearRow>& rows() const { return rows_; }
  bool infeasible() const { return infeasible_; }

  // Integer coprime rows (rhs included), positive multiples merged keeping
  // the tightest, rows sorted by descending coefficient vector then rhs.
  LinearSystem Canonical() const;

  // "3 R0 + Rsp <= 12". Variables in `rhs_vars` are printed on the right
  // with their sign flipped.
  std::string RowString(const LinearRow& row,
                        const std::set<std::string>& rhs_vars = {}) const;
  std::string ToString(const std::set<std::string>& rhs_vars = {}) const;

  bool Satisfies(const std::vector<Rational>& point) const;

 private:
  std::vector<std::string> vars_;
  std::vector<bool> nonnegative_;
  std::vector<LinearRow> rows_;
  bool infeasible_ = false;
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> point;
};

// Maximizes objective . x over the system. Two-phase tableau simplex with
// Bland's rule, exact.
LpResult Maximize(const LinearSystem& sys,
                  const std::vector<Rational>& objective);
bool IsFeasible(const LinearSystem& sys);

enum class RedundancyTier {
  kSyntactic,     // duplicates and positive multiples
  kSingleRow,     // plus rows implied by one other row
  kLinearProgram, // plus rows implied by all others together
};

// The LP tier runs only when the system has at most `lp_row_limit` rows.
LinearSystem RemoveRedundant(const LinearSystem& sys,
                             RedundancyTier tier = RedundancyTier::kLinearProgram,
                             int lp_row_limit = 64);

// Eliminates one variable. A nonnegative variable's sign constraint takes
// part in the elimination. Result is redundancy-reduced.
LinearSystem FourierMotzkin(const LinearSystem& sys, const std::string& var);

// Eliminates every variable not in `keep`, in `order` when given, otherwise
// greedily by fewest positive-by-negative row pairings. The result's
// variables follow `keep`.
LinearSystem Project(const LinearSystem& sys,
                     const std::vector<std::string>& keep,
                     const std::vector<std::string>& order = {});

// var := sum expr[v] v + constant. When var was nonnegative, that sign
// constraint becomes an explicit row.
LinearSystem Substitute(const LinearSystem& sys, const std::string& var,
                        const std::map<std::string, Rational>& expr,
                        const Rational& constant = 0);

struct Point2 {
  Rational x;
  Rational y;
};

bool operator==(const Point2& a, const Point2& b);
bool operator<(const Point2& a, const Point2& b);
std::string ToString(const Point2& p);

// Vertices counterclockwise, starting from the lowest (then leftmost) one.
// Throws UnboundedError naming a recession direction, InfeasibleError for an
// empty region, DomainError unless there are exactly two variables.
std::vector<Point2> Vertices2d(const LinearSystem& sys);

// Every point of inner lies in outer. Variable lists must match.
bool Contains(const LinearSystem& outer, const LinearSystem& inner);
// A point of inner outside outer, when one exists. In two variables this is
// a vertex of inner.
std::optional<std::vector<Rational>> ContainmentWitness(
    const LinearSystem& outer, const LinearSystem& inner);
bool SameRegion(const LinearSystem& a, const LinearSystem& b);

// r = 1..K+1: (sum_{i>=r} binom(K-1,i-1) c_i, sum_{i<r} binom(K,i) c_i).
std::vector<Point2> CornerPointsSymmetric(int k, const std::vector<Rational>& c);

// "x,y" header then one "p/q,p/q" line per point.
std::string VerticesCsv(const std::vector<Point2>& points);

}  // namespace gcsb

#endif  // GCSB_POLYTOPE_H_
