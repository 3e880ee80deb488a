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

#include "gcsb/polytope.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "gcsb/errors.h"

namespace gcsb {

bool operator==(const LinearRow& a, const LinearRow& b) {
  return a.coeffs == b.coeffs && a.rhs == b.rhs;
}

LinearSystem::LinearSystem(std::vector<std::string> vars)
    : LinearSystem(vars, std::vector<bool>(vars.size(), true)) {}

LinearSystem::LinearSystem(std::vector<std::string> vars,
                           std::vector<bool> nonnegative)
    : vars_(std::move(vars)), nonnegative_(std::move(nonnegative)) {
  if (vars_.size() != nonnegative_.size()) {
    throw DomainError("one sign flag per variable expected");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) {
        throw DomainError("duplicate variable '" + vars_[i] + "'");
      }
    }
  }
}

int LinearSystem::VarIndex(const std::string& name) const {
  for (int i = 0; i < num_vars(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw DomainError("unknown variable '" + name + "'");
}

bool LinearSystem::HasVar(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

void LinearSystem::SetNonnegative(const std::string& name, bool value) {
  nonnegative_[VarIndex(name)] = value;
}

void LinearSystem::AddVariable(const std::string& name, bool nonnegative) {
  if (HasVar(name)) throw DomainError("duplicate variable '" + name + "'");
  vars_.push_back(name);
  nonnegative_.push_back(nonnegative);
  for (LinearRow& row : rows_) row.coeffs.emplace_back(0);
}

void LinearSystem::AddRow(std::vector<Rational> coeffs, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars()) {
    throw DomainError("row has " + std::to_string(coeffs.size()) +
                      " coefficients for " + std::to_string(num_vars()) +
                      " variables");
  }
  bool zero = true;
  for (Rational& c : coeffs) {
    c.canonicalize();
    zero &= c == 0;
  }
  rhs.canonicalize();
  if (zero) {
    if (rhs < 0) infeasible_ = true;
    return;
  }
  rows_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::AddNamedRow(const std::map<std::string, Rational>& coeffs,
                               Rational rhs) {
  std::vector<Rational> dense(num_vars(), 0);
  for (const auto& [name, c] : coeffs) dense[VarIndex(name)] += c;
  AddRow(std::move(dense), std::move(rhs));
}

LinearSystem LinearSystem::Canonical() const {
  LinearSystem out(vars_, nonnegative_);
  out.infeasible_ = infeasible_;
  if (infeasible_) return out;
  // Tightest rhs per coprime integer direction.
  std::map<std::vector<Rational>, Rational,
           std::greater<std::vector<Rational>>> tightest;
  for (const LinearRow& row : rows_) {
    std::vector<Rational> dir = row.coeffs;
    const Rational f = ScaleToCoprimeIntegers(dir);
    Rational rhs = row.rhs * f;
    auto it = tightest.find(dir);
    if (it == tightest.end()) {
      tightest.emplace(std::move(dir), std::move(rhs));
    } else if (rhs < it->second) {
      it->second = std::move(rhs);
    }
  }
  for (const auto& [dir, rhs] : tightest) {
    std::vector<Rational> all = dir;
    all.push_back(rhs);
    ScaleToCoprimeIntegers(all);
    Rational b = all.back();
    all.pop_back();
    out.rows_.push_back({std::move(all), std::move(b)});
  }
  return out;
}

namespace {

void AppendTerm(std::string& side, const Rational& c, const std::string& var) {
  if (side.empty()) {
    if (c < 0) side += "-";
  } else {
    side += c < 0 ? " - " : " + ";
  }
  const Rational mag = abs(c);
  if (mag != 1) side += ToString(mag) + " ";
  side += var;
}

}  // namespace

std::string LinearSystem::RowString(const LinearRow& row,
                                    const std::set<std::string>& rhs_vars) const {
  std::string lhs, rhs;
  for (int i = 0; i < num_vars(); ++i) {
    const Rational& c = row.coeffs[i];
    if (c == 0) continue;
    if (rhs_vars.count(vars_[i])) {
      AppendTerm(rhs, -c, vars_[i]);
    } else {
      AppendTerm(lhs, c, vars_[i]);
    }
  }
  if (row.rhs != 0 || rhs.empty()) {
    if (rhs.empty()) {
      rhs = gcsb::ToString(row.rhs);
    } else {
      rhs += (row.rhs < 0 ? " - " : " + ") +
             gcsb::ToString(Rational(abs(row.rhs)));
    }
  }
  if (lhs.empty()) lhs = "0";
  return lhs + " <= " + rhs;
}

std::string LinearSystem::ToString(const std::set<std::string>& rhs_vars) const {
  if (infeasible_) return "0 <= -1\n";
  std::string out;
  for (const LinearRow& row : rows_) out += RowString(row, rhs_vars) + "\n";
  return out;
}

bool LinearSystem::Satisfies(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars()) {
    throw DomainError("point dimension differs from the system's");
  }
  if (infeasible_) return false;
  for (int i = 0; i < num_vars(); ++i) {
    if (nonnegative_[i] && point[i] < 0) return false;
  }
  for (const LinearRow& row : rows_) {
    Rational lhs = 0;
    for (int i = 0; i < num_vars(); ++i) lhs += row.coeffs[i] * point[i];
    if (lhs > row.rhs) return false;
  }
  return true;
}

namespace {

// Dense tableau: rows of [columns..., rhs].
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis,
          int num_cols)
      : t_(std::move(rows)), basis_(std::move(basis)), cols_(num_cols) {}

  // Reduced costs for maximizing cost . columns.
  void SetObjective(const std::vector<Rational>& cost) {
    d_ = cost;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j) d_[j] -= cb * t_[i][j];
    }
  }

  // Bland's rule; columns with allowed[j] false never enter. Returns false
  // on unboundedness.
  bool Run(const std::vector<bool>& allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && d_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(int r, int e) {
    const Rational p = t_[r][e];
    for (Rational& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r || t_[i][e] == 0) continue;
      const Rational f = t_[i][e];
      for (int j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    if (d_[e] != 0) {
      const Rational f = d_[e];
      for (int j = 0; j < cols_; ++j) d_[j] -= f * t_[r][j];
    }
    basis_[r] = e;
  }

  void DropRow(int r) {
    t_.erase(t_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  int rows() const { return static_cast<int>(t_.size()); }
  int basis(int r) const { return basis_[r]; }
  const Rational& at(int r, int c) const { return t_[r][c]; }
  const Rational& rhs(int r) const { return t_[r][cols_]; }

  std::vector<Rational> Solution() const {
    std::vector<Rational> x(cols_, 0);
    for (std::size_t i = 0; i < t_.size(); ++i) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  int cols_;
  std::vector<Rational> d_;
};

}  // namespace

LpResult Maximize(const LinearSystem& sys,
                  const std::vector<Rational>& objective) {
  if (static_cast<int>(objective.size()) != sys.num_vars()) {
    throw DomainError("objective dimension differs from the system's");
  }
  LpResult result;
  if (sys.infeasible()) return result;
  // Free variables split into positive and negative parts.
  std::vector<int> pos(sys.num_vars()), neg(sys.num_vars(), -1);
  int ny = 0;
  for (int j = 0; j < sys.num_vars(); ++j) {
    pos[j] = ny++;
    if (!sys.nonnegative(j)) neg[j] = ny++;
  }
  const int m = static_cast<int>(sys.rows().size());
  int na = 0;
  for (const LinearRow& row : sys.rows()) na += row.rhs < 0;
  const int cols = ny + m + na;
  std::vector<std::vector<Rational>> rows;
  std::vector<int> basis;
  int art = ny + m;
  for (int i = 0; i < m; ++i) {
    const LinearRow& src = sys.rows()[i];
    std::vector<Rational> row(cols + 1, 0);
    const int sign = src.rhs < 0 ? -1 : 1;
    for (int j = 0; j < sys.num_vars(); ++j) {
      row[pos[j]] = sign * src.coeffs[j];
      if (neg[j] >= 0) row[neg[j]] = -sign * src.coeffs[j];
    }
    row[ny + i] = sign;
    row[cols] = sign * src.rhs;
    if (sign < 0) {
      row[art] = 1;
      basis.push_back(art++);
    } else {
      basis.push_back(ny + i);
    }
    rows.push_back(std::move(row));
  }
  Tableau tab(std::move(rows), std::move(basis), cols);
  std::vector<bool> allowed(cols, true);
  if (na > 0) {
    std::vector<Rational> phase1(cols, 0);
    for (int j = ny + m; j < cols; ++j) phase1[j] = -1;
    tab.SetObjective(phase1);
    tab.Run(allowed);
    for (int r = 0; r < tab.rows(); ++r) {
      if (tab.basis(r) >= ny + m && tab.rhs(r) > 0) return result;
    }
    // Pivot zero-level artificials out of the basis.
    for (int r = 0; r < tab.rows();) {
      if (tab.basis(r) < ny + m) {
        ++r;
        continue;
      }
      int enter = -1;
      for (int j = 0; j < ny + m; ++j) {
        if (tab.at(r, j) != 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) {
        tab.DropRow(r);
      } else {
        tab.Pivot(r, enter);
        ++r;
      }
    }
    for (int j = ny + m; j < cols; ++j) allowed[j] = false;
  }
  std::vector<Rational> cost(cols, 0);
  for (int j = 0; j < sys.num_vars(); ++j) {
    cost[pos[j]] = objective[j];
    if (neg[j] >= 0) cost[neg[j]] = -objective[j];
  }
  tab.SetObjective(cost);
  if (!tab.Run(allowed)) {
    result.status = LpResult::Status::kUnbounded;
    return result;
  }
  const std::vector<Rational> y = tab.Solution();
  result.status = LpResult::Status::kOptimal;
  result.point.assign(sys.num_vars(), 0);
  result.value = 0;
  for (int j = 0; j < sys.num_vars(); ++j) {
    result.point[j] = y[pos[j]];
    if (neg[j] >= 0) result.point[j] -= y[neg[j]];
    result.value += objective[j] * result.point[j];
  }
  return result;
}

bool IsFeasible(const LinearSystem& sys) {
  return Maximize(sys, std::vector<Rational>(sys.num_vars(), 0)).status !=
         LpResult::Status::kInfeasible;
}

namespace {

// Some lambda > 0 makes lambda * implier - implied nonnegative on
// nonnegative coordinates, zero on free ones, with lambda * b_j <= b_i.
bool RowImplies(const LinearRow& implier, const LinearRow& implied,
                const std::vector<bool>& nonnegative) {
  std::optional<Rational> lo, hi;
  auto raise = [&](const Rational& v) {
    if (!lo || v > *lo) lo = v;
  };
  auto lower = [&](const Rational& v) {
    if (!hi || v < *hi) hi = v;
  };
  for (std::size_t k = 0; k < implier.coeffs.size(); ++k) {
    const Rational& a = implier.coeffs[k];
    const Rational& b = implied.coeffs[k];
    if (a == 0) {
      if (nonnegative[k] ? b > 0 : b != 0) return false;
      continue;
    }
    const Rational ratio = b / a;
    if (!nonnegative[k]) {
      raise(ratio);
      lower(ratio);
    } else if (a > 0) {
      raise(ratio);
    } else {
      lower(ratio);
    }
  }
  if (implier.rhs == 0) {
    if (implied.rhs < 0) return false;
  } else if (implier.rhs > 0) {
    lower(implied.rhs / implier.rhs);
  } else {
    raise(implied.rhs / implier.rhs);
  }
  if (hi && *hi <= 0) return false;
  return !(lo && hi && *lo > *hi);
}

// Implied by the sign constraints alone.
bool TriviallyTrue(const LinearRow& row, const std::vector<bool>& nonnegative) {
  if (row.rhs < 0) return false;
  for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
    if (nonnegative[k] ? row.coeffs[k] > 0 : row.coeffs[k] != 0) return false;
  }
  return true;
}

LinearSystem WithRows(const LinearSystem& shape,
                      const std::vector<LinearRow>& rows) {
  LinearSystem out(shape.vars(), shape.nonnegative_flags());
  for (const LinearRow& r : rows) out.AddRow(r.coeffs, r.rhs);
  return out;
}

LinearSystem InfeasibleLike(const LinearSystem& shape) {
  LinearSystem out(shape.vars(), shape.nonnegative_flags());
  out.AddRow(std::vector<Rational>(shape.num_vars(), 0), -1);
  return out;
}

}  // namespace

LinearSystem RemoveRedundant(const LinearSystem& sys, RedundancyTier tier,
                             int lp_row_limit) {
  LinearSystem canon = sys.Canonical();
  if (canon.infeasible() || tier == RedundancyTier::kSyntactic) return canon;
  const std::vector<bool>& nn = canon.nonnegative_flags();
  std::vector<LinearRow> kept;
  std::vector<LinearRow> rows = canon.rows();
  std::vector<bool> gone(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (TriviallyTrue(rows[i], nn)) {
      gone[i] = true;
      continue;
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i && !gone[j] && RowImplies(rows[j], rows[i], nn)) {
        gone[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!gone[i]) kept.push_back(rows[i]);
  }
  if (tier == RedundancyTier::kSingleRow ||
      static_cast<int>(kept.size()) > lp_row_limit) {
    return WithRows(canon, kept).Canonical();
  }
  if (!IsFeasible(WithRows(canon, kept))) return InfeasibleLike(canon);
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<LinearRow> others = kept;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    const LpResult r = Maximize(WithRows(canon, others), kept[i].coeffs);
    if (r.status == LpResult::Status::kOptimal && r.value <= kept[i].rhs) {
      kept = std::move(others);
    } else {
      ++i;
    }
  }
  return WithRows(canon, kept).Canonical();
}

namespace {

LinearSystem WithSignRow(const LinearSystem& sys, int v) {
  if (!sys.nonnegative(v)) return sys;
  LinearSystem out = sys;
  out.SetNonnegative(sys.vars()[v], false);
  std::vector<Rational> row(sys.num_vars(), 0);
  row[v] = -1;
  out.AddRow(std::move(row), 0);
  return out;
}

LinearSystem DropVariable(const LinearSystem& sys, int v,
                          const std::vector<LinearRow>& rows) {
  std::vector<std::string> vars = sys.vars();
  std::vector<bool> nn = sys.nonnegative_flags();
  vars.erase(vars.begin() + v);
  nn.erase(nn.begin() + v);
  LinearSystem out(vars, nn);
  if (sys.infeasible()) out.AddRow(std::vector<Rational>(vars.size(), 0), -1);
  for (const LinearRow& r : rows) {
    std::vector<Rational> c = r.coeffs;
    c.erase(c.begin() + v);
    out.AddRow(std::move(c), r.rhs);
  }
  return out;
}

std::size_t PairCount(const LinearSystem& sys, int v) {
  // The sign row of a nonnegative variable counts as negative.
  std::size_t p = 0, n = sys.nonnegative(v) ? 1 : 0;
  for (const LinearRow& r : sys.rows()) {
    if (r.coeffs[v] > 0) ++p;
    if (r.coeffs[v] < 0) ++n;
  }
  return p * n;
}

}  // namespace

LinearSystem FourierMotzkin(const LinearSystem& sys, const std::string& var) {
  const int v = sys.VarIndex(var);
  const LinearSystem in = WithSignRow(sys, v);
  std::vector<LinearRow> out;
  std::vector<const LinearRow*> pos, neg;
  for (const LinearRow& r : in.rows()) {
    if (r.coeffs[v] > 0) {
      pos.push_back(&r);
    } else if (r.coeffs[v] < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  for (const LinearRow* p : pos) {
    for (const LinearRow* n : neg) {
      // (-n_v) * p + p_v * n cancels v.
      const Rational fp = -n->coeffs[v];
      const Rational fn = p->coeffs[v];
      LinearRow r;
      r.coeffs.resize(p->coeffs.size());
      for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
        r.coeffs[k] = fp * p->coeffs[k] + fn * n->coeffs[k];
      }
      r.rhs = fp * p->rhs + fn * n->rhs;
      out.push_back(std::move(r));
    }
  }
  return RemoveRedundant(DropVariable(in, v, out));
}

LinearSystem Project(const LinearSystem& sys,
                     const std::vector<std::string>& keep,
                     const std::vector<std::string>& order) {
  for (const std::string& k : keep) sys.VarIndex(k);
  LinearSystem cur = sys;
  auto kept = [&](const std::string& name) {
    return std::find(keep.begin(), keep.end(), name) != keep.end();
  };
  for (const std::string& name : order) {
    if (kept(name)) throw DomainError("cannot eliminate kept '" + name + "'");
    cur = FourierMotzkin(cur, name);
  }
  while (cur.num_vars() > static_cast<int>(keep.size())) {
    int best = -1;
    std::size_t best_pairs = 0;
    for (int v = 0; v < cur.num_vars(); ++v) {
      if (kept(cur.vars()[v])) continue;
      const std::size_t pairs = PairCount(cur, v);
      if (best < 0 || pairs < best_pairs) {
        best = v;
        best_pairs = pairs;
      }
    }
    cur = FourierMotzkin(cur, cur.vars()[best]);
  }
  // Reorder columns to follow `keep`.
  std::vector<bool> nn;
  for (const std::string& k : keep) nn.push_back(cur.nonnegative(cur.VarIndex(k)));
  LinearSystem out(keep, nn);
  if (cur.infeasible()) out.AddRow(std::vector<Rational>(keep.size(), 0), -1);
  for (const LinearRow& r : cur.rows()) {
    std::vector<Rational> c;
    for (const std::string& k : keep) c.push_back(r.coeffs[cur.VarIndex(k)]);
    out.AddRow(std::move(c), r.rhs);
  }
  return out.Canonical();
}

LinearSystem Substitute(const LinearSystem& sys, const std::string& var,
                        const std::map<std::string, Rational>& expr,
                        const Rational& constant) {
  const int v = sys.VarIndex(var);
  if (constant == 0 && expr.size() == 1 && expr.begin()->first == var &&
      expr.begin()->second == 1) {
    return sys;
  }
  std::vector<Rational> e(sys.num_vars(), 0);
  for (const auto& [name, c] : expr) {
    const int j = sys.VarIndex(name);
    if (j == v) {
      throw DomainError("substitution for '" + var + "' refers to itself");
    }
    e[j] += c;
  }
  std::vector<LinearRow> rows;
  for (const LinearRow& r : sys.rows()) {
    LinearRow out = r;
    const Rational a = r.coeffs[v];
    if (a != 0) {
      for (int j = 0; j < sys.num_vars(); ++j) out.coeffs[j] += a * e[j];
      out.rhs -= a * constant;
      out.coeffs[v] = 0;
    }
    rows.push_back(std::move(out));
  }
  if (sys.nonnegative(v)) {
    // -(e . x + constant) <= 0
    LinearRow sign;
    for (int j = 0; j < sys.num_vars(); ++j) sign.coeffs.push_back(-e[j]);
    sign.rhs = constant;
    rows.push_back(std::move(sign));
  }
  return DropVariable(sys, v, rows);
}

bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}

bool operator<(const Point2& a, const Point2& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

std::string ToString(const Point2& p) {
  return "(" + ToString(p.x) + ", " + ToString(p.y) + ")";
}

std::vector<Point2> Vertices2d(const LinearSystem& sys) {
  if (sys.num_vars() != 2) {
    throw DomainError("vertex enumeration needs exactly two variables, got " +
                      std::to_string(sys.num_vars()));
  }
  if (sys.infeasible()) throw InfeasibleError("empty region");
  // Lines a.x = b from rows and active sign constraints.
  std::vector<LinearRow> lines = sys.rows();
  for (int i = 0; i < 2; ++i) {
    if (sys.nonnegative(i)) {
      LinearRow r{{0, 0}, 0};
      r.coeffs[i] = -1;
      lines.push_back(std::move(r));
    }
  }
  // Recession cone: a.d <= 0 for every line. Its extreme rays lie along
  // line directions, so testing those is enough in the plane.
  auto in_cone = [&](const Rational& dx, const Rational& dy) {
    for (const LinearRow& r : lines) {
      if (r.coeffs[0] * dx + r.coeffs[1] * dy > 0) return false;
    }
    return true;
  };
  std::vector<std::pair<Rational, Rational>> dirs = {{1, 0}, {0, 1}, {-1, 0},
                                                     {0, -1}};
  for (const LinearRow& r : lines) {
    dirs.emplace_back(-r.coeffs[1], r.coeffs[0]);
    dirs.emplace_back(r.coeffs[1], -r.coeffs[0]);
  }
  const bool feasible = IsFeasible(sys);
  if (!feasible) throw InfeasibleError("empty region");
  for (const auto& [dx, dy] : dirs) {
    if ((dx != 0 || dy != 0) && in_cone(dx, dy)) {
      throw UnboundedError("region is unbounded along direction (" +
                           ToString(dx) + ", " + ToString(dy) + ")");
    }
  }
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const LinearRow& p = lines[i];
      const LinearRow& q = lines[j];
      const Rational det = p.coeffs[0] * q.coeffs[1] - p.coeffs[1] * q.coeffs[0];
      if (det == 0) continue;
      Point2 pt{(p.rhs * q.coeffs[1] - p.coeffs[1] * q.rhs) / det,
                (p.coeffs[0] * q.rhs - p.rhs * q.coeffs[0]) / det};
      if (!sys.Satisfies({pt.x, pt.y})) continue;
      if (std::find(pts.begin(), pts.end(), pt) == pts.end()) {
        pts.push_back(std::move(pt));
      }
    }
  }
  if (pts.empty()) {
    throw InfeasibleError("no vertex found for a bounded nonempty region");
  }
  const auto start = std::min_element(
      pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
      });
  std::iter_swap(pts.begin(), start);
  const Point2 s = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&](const Point2& a, const Point2& b) {
    const Rational cross =
        (a.x - s.x) * (b.y - s.y) - (a.y - s.y) * (b.x - s.x);
    return cross > 0;
  });
  return pts;
}

namespace {

void CheckSameVars(const LinearSystem& a, const LinearSystem& b) {
  if (a.vars() != b.vars()) {
    throw DomainError("systems have different variable lists");
  }
}

// Sign constraints of `outer` as explicit rows.
std::vector<LinearRow> OuterRows(const LinearSystem& outer,
                                 const LinearSystem& inner) {
  std::vector<LinearRow> rows = outer.rows();
  for (int i = 0; i < outer.num_vars(); ++i) {
    if (outer.nonnegative(i) && !inner.nonnegative(i)) {
      LinearRow r{std::vector<Rational>(outer.num_vars(), 0), 0};
      r.coeffs[i] = -1;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

std::optional<std::vector<Rational>> ContainmentWitness(
    const LinearSystem& outer, const LinearSystem& inner) {
  CheckSameVars(outer, inner);
  if (!IsFeasible(inner)) return std::nullopt;
  if (outer.infeasible()) return Maximize(inner, std::vector<Rational>(
                                                     inner.num_vars(), 0))
                              .point;
  if (inner.num_vars() == 2) {
    bool bounded = true;
    std::vector<Point2> verts;
    try {
      verts = Vertices2d(inner);
    } catch (const UnboundedError&) {
      bounded = false;
    }
    if (bounded) {
      for (const Point2& p : verts) {
        if (!outer.Satisfies({p.x, p.y})) return std::vector<Rational>{p.x, p.y};
      }
      return std::nullopt;
    }
  }
  for (const LinearRow& row : OuterRows(outer, inner)) {
    const LpResult r = Maximize(inner, row.coeffs);
    if (r.status == LpResult::Status::kUnbounded) {
      // Some feasible point then exceeds the bound by one.
      LinearSystem pushed = inner;
      std::vector<Rational> neg;
      for (const Rational& c : row.coeffs) neg.push_back(-c);
      pushed.AddRow(neg, -(row.rhs + 1));
      return Maximize(pushed, std::vector<Rational>(inner.num_vars(), 0)).point;
    }
    if (r.status == LpResult::Status::kOptimal && r.value > row.rhs) {
      return r.point;
    }
  }
  return std::nullopt;
}

bool Contains(const LinearSystem& outer, const LinearSystem& inner) {
  return !ContainmentWitness(outer, inner).has_value();
}

bool SameRegion(const LinearSystem& a, const LinearSystem& b) {
  return Contains(a, b) && Contains(b, a);
}

std::vector<Point2> CornerPointsSymmetric(int k,
                                          const std::vector<Rational>& c) {
  if (k < 1) throw DomainError("K must be positive");
  if (static_cast<int>(c.size()) != k) {
    throw DomainError("expected " + std::to_string(k) + " capacities");
  }
  for (const Rational& v : c) {
    if (v < 0) throw DomainError("negative capacity " + ToString(v));
  }
  std::vector<Point2> out;
  for (int r = 1; r <= k + 1; ++r) {
    Point2 p{0, 0};
    for (int i = r; i <= k; ++i) p.x += Rational(Binomial(k - 1, i - 1)) * c[i - 1];
    for (int i = 1; i < r; ++i) p.y += Rational(Binomial(k, i)) * c[i - 1];
    out.push_back(std::move(p));
  }
  return out;
}

std::string VerticesCsv(const std::vector<Point2>& points) {
  std::string out = "x,y\n";
  for (const Point2& p : points) {
    out += ToString(p.x) + "," + ToString(p.y) + "\n";
  }
  return out;
}

}  // namespace gcsb
