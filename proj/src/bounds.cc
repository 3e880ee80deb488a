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

#include "gcsb/bounds.h"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>

#include "gcsb/errors.h"

namespace gcsb {

bool operator==(const BoundTerm& a, const BoundTerm& b) {
  return a.level == b.level && a.indices == b.indices && a.weight == b.weight;
}

namespace {

// (|U|, U lexicographic, r).
bool TermBefore(const BoundTerm& a, const BoundTerm& b) {
  if (a.indices.size() != b.indices.size()) {
    return a.indices.size() < b.indices.size();
  }
  const auto am = a.indices.members();
  const auto bm = b.indices.members();
  if (am != bm) return am < bm;
  return a.level < b.level;
}

std::string MapString(const std::map<int, int>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [q, r] : m) {
    if (!first) out += ",";
    out += std::to_string(q) + ":" + std::to_string(r);
    first = false;
  }
  return out + "}";
}

}  // namespace

BoundInequality::BoundInequality(std::vector<BoundTerm> terms,
                                 std::string provenance)
    : provenance_(std::move(provenance)) {
  for (BoundTerm& t : terms) {
    t.weight.canonicalize();
    if (t.indices.empty()) throw DomainError("bound term with empty U");
    if (t.level < 1 || t.level > t.indices.size()) {
      throw DomainError("bound term level " + std::to_string(t.level) +
                        " outside [1, |U|] for U = " + t.indices.ToString());
    }
    if (t.weight <= 0) {
      throw DomainError("bound term weight " + ToString(t.weight) +
                        " is not positive");
    }
  }
  std::stable_sort(terms.begin(), terms.end(), TermBefore);
  for (BoundTerm& t : terms) {
    if (!terms_.empty() && terms_.back().indices == t.indices &&
        terms_.back().level == t.level) {
      terms_.back().weight += t.weight;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  if (terms_.empty()) throw DomainError("bound without terms");
}

int BoundInequality::max_index() const {
  int out = 0;
  for (const BoundTerm& t : terms_) out = std::max(out, t.indices.max());
  return out;
}

BoundInequality BoundInequality::Canonical() const {
  std::vector<Rational> weights;
  weights.reserve(terms_.size());
  for (const BoundTerm& t : terms_) weights.push_back(t.weight);
  ScaleToCoprimeIntegers(weights);
  std::vector<BoundTerm> scaled = terms_;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    scaled[i].weight = weights[i];
  }
  return BoundInequality(std::move(scaled), provenance_);
}

bool BoundInequality::EquivalentTo(const BoundInequality& other) const {
  return Canonical().terms() == other.Canonical().terms();
}

std::string BoundInequality::TermString() const {
  std::string out;
  for (const BoundTerm& t : terms_) {
    if (!out.empty()) out += " + ";
    out += ToString(t.weight) + "*[r=" + std::to_string(t.level) + "]" +
           t.indices.ToString();
  }
  return out;
}

Rational TransferWeight(LevelSet q_set, const std::map<int, int>& r_q, int q,
                        int r) {
  if (!q_set.contains(q)) {
    throw DomainError("q = " + std::to_string(q) + " not in Q = " +
                      q_set.ToString());
  }
  if (q_set.contains(1)) throw DomainError("Q must not contain 1");
  const auto it = r_q.find(q);
  if (it == r_q.end()) {
    throw DomainError("no r_q given for q = " + std::to_string(q));
  }
  const int rq = it->second;
  if (r < 1 || r > rq) {
    throw DomainError("r = " + std::to_string(r) + " outside [1, r_q = " +
                      std::to_string(rq) + "]");
  }
  if (q_set.contains(r)) return 0;
  Integer num = 1;
  Integer den = rq;
  for (int p : q_set.members()) {
    if (p < r) num *= p - 1;
    if (r < p && p <= rq) num *= p;
    if (p <= rq) den *= p - 1;
  }
  return Ratio(num, den);
}

Rational LevelWeight(LevelSet q_set, int size_u, int r) {
  if (r < 1 || r > size_u) {
    throw DomainError("r = " + std::to_string(r) + " outside [1, " +
                      std::to_string(size_u) + "]");
  }
  if (q_set.contains(1) || q_set.max() > size_u) {
    throw DomainError("Q = " + q_set.ToString() + " not inside {2.." +
                      std::to_string(size_u) + "}");
  }
  if (q_set.empty()) return 1;
  if (q_set.contains(r)) return 0;
  Integer out = 1;
  for (int q : q_set.members()) out *= q < r ? q - 1 : q;
  return Rational(out);
}

bool AggregatedTransferIdentityHolds(LevelSet q_set, int size_u) {
  if (q_set.empty()) throw DomainError("identity needs a nonempty Q");
  if (q_set.contains(1) || q_set.max() > size_u) {
    throw DomainError("Q = " + q_set.ToString() + " not inside {2.." +
                      std::to_string(size_u) + "}");
  }
  std::map<int, int> r_q;
  Integer scale = 1;
  for (int q : q_set.members()) {
    r_q[q] = q - 1;
    scale *= q - 1;
  }
  for (int r = 1; r < q_set.max(); ++r) {
    Rational sum = 0;
    for (int q : q_set.members()) {
      if (q > r) sum += TransferWeight(q_set, r_q, q, r);
    }
    const Rational expected =
        q_set.contains(r)
            ? Rational(0)
            : Rational(LevelWeight(q_set, size_u, r) / scale - 1);
    if (sum != expected) return false;
  }
  return true;
}

BoundInequality UnionCutBound(IndexSet u) {
  if (u.empty()) throw DomainError("union cut bound needs a nonempty U");
  return BoundInequality({{1, u, 1}}, "CSB(" + u.ToString() + ")");
}

BoundInequality TripleCutBound(int i, int j, int k, TripleVariant variant) {
  if (i == j || j == k || i == k) {
    throw DomainError("three-cut bound needs distinct indices");
  }
  const IndexSet ijk = IndexSet::Of({i, j, k});
  const IndexSet ij = IndexSet::Of({i, j});
  const std::string args = "(" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")";
  switch (variant) {
    case TripleVariant::kA:
      return BoundInequality({{1, ijk, 1}, {2, ij, 1}}, "GCSB3a" + args);
    case TripleVariant::kB:
      return BoundInequality({{1, ijk, 1}, {2, ijk, 1}}, "GCSB3b" + args);
    case TripleVariant::kC:
      return BoundInequality({{1, ijk, 1}, {1, ij, 1}, {3, ijk, 1}},
                             "GCSB3c" + args);
    case TripleVariant::kD:
      return BoundInequality({{1, ijk, 2}, {3, ijk, 1}}, "GCSB3d" + args);
  }
  throw DomainError("unknown three-cut variant");
}

GeneralizedCutParams GeneralizedCutParams::SameSet(IndexSet u, LevelSet q) {
  GeneralizedCutParams p{u, u, u, q, {}};
  for (int v : q.members()) p.r_q[v] = v - 1;
  return p;
}

std::string GeneralizedCutParams::ToString() const {
  return "G=" + g.ToString() + ",U=" + u.ToString() + ",T=" + t.ToString() +
         ",Q=" + q.ToString() + ",r=" + MapString(r_q);
}

namespace {

void CheckGeneralizedRanges(const GeneralizedCutParams& p) {
  if (p.g.empty() || p.u.empty() || p.t.empty()) {
    throw DomainError("G, U and T must be nonempty");
  }
  if (p.q.contains(1) || p.q.max() > p.u.size()) {
    throw DomainError("Q = " + p.q.ToString() + " not inside {2.." +
                      std::to_string(p.u.size()) + "}");
  }
  for (int q : p.q.members()) {
    const auto it = p.r_q.find(q);
    if (it == p.r_q.end()) {
      throw DomainError("no r_q given for q = " + std::to_string(q));
    }
    if (it->second < 1 || it->second > p.t.size()) {
      throw DomainError("r_" + std::to_string(q) + " = " +
                        std::to_string(it->second) + " outside [1, |T| = " +
                        std::to_string(p.t.size()) + "]");
    }
  }
  for (const auto& [q, r] : p.r_q) {
    if (!p.q.contains(q)) {
      throw DomainError("r_q given for q = " + std::to_string(q) +
                        " outside Q");
    }
  }
}

}  // namespace

BoundInequality GeneralizedCutTerms(const GeneralizedCutParams& p) {
  CheckGeneralizedRanges(p);
  std::vector<BoundTerm> terms = {{1, p.g, 1}};
  for (int r = 2; r <= p.u.size(); ++r) {
    if (!p.q.contains(r)) terms.push_back({r, p.u, 1});
  }
  for (int q : p.q.members()) {
    const int rq = p.r_q.at(q);
    for (int r = 1; r <= rq; ++r) {
      Rational w = TransferWeight(p.q, p.r_q, q, r);
      if (w > 0) terms.push_back({r, p.t, std::move(w)});
    }
  }
  return BoundInequality(std::move(terms), "GCSBK(" + p.ToString() + ")");
}

CoverageReport CheckCoverage(const GeneralizedCutParams& p,
                             const SubsetFamily& cuts,
                             const SubsetFamily& messages) {
  CheckGeneralizedRanges(p);
  if (cuts.size() != messages.size()) {
    throw DomainError("cut and message families differ in size");
  }
  CoverageReport report;
  const ElementSet g1 = IntersectLevel(cuts, p.g, 1);
  const ElementSet u1 = IntersectLevel(cuts, p.u, 1);
  report.union_cover = u1.IsSubsetOf(g1);
  if (!report.union_cover) {
    report.failure = "A-level(G=" + p.g.ToString() + ",1) = " + g1.ToString() +
                     " does not contain A-level(U=" + p.u.ToString() +
                     ",1) = " + u1.ToString();
  }
  report.cut_levels = true;
  report.message_levels_over_t = true;
  report.message_levels_over_u = true;
  for (int q : p.q.members()) {
    const int rq = p.r_q.at(q);
    const ElementSet au = IntersectLevel(cuts, p.u, q);
    const ElementSet at = IntersectLevel(cuts, p.t, rq);
    const ElementSet iu = IntersectLevel(messages, p.u, q);
    const ElementSet it = IntersectLevel(messages, p.t, rq);
    if (!au.IsSubsetOf(at)) {
      if (report.cut_levels && report.failure.empty()) {
        report.failure = "A-level(U," + std::to_string(q) + ") = " +
                         au.ToString() + " not inside A-level(T," +
                         std::to_string(rq) + ") = " + at.ToString();
      }
      report.cut_levels = false;
    }
    if (!iu.IsSubsetOf(it)) {
      if (report.message_levels_over_t && report.failure.empty()) {
        report.failure = "I-level(U," + std::to_string(q) + ") = " +
                         iu.ToString() + " not inside I-level(T," +
                         std::to_string(rq) + ") = " + it.ToString();
      }
      report.message_levels_over_t = false;
    }
    if (rq > p.u.size() ||
        !iu.IsSubsetOf(IntersectLevel(messages, p.u, rq))) {
      report.message_levels_over_u = false;
    }
  }
  return report;
}

BoundInequality GeneralizedCutBound(const GeneralizedCutParams& params,
                                    const SubsetFamily& cuts,
                                    const SubsetFamily& messages) {
  const CoverageReport report = CheckCoverage(params, cuts, messages);
  if (!report.ok()) {
    throw PreconditionError("coverage condition fails for " +
                            params.ToString() + ": " + report.failure);
  }
  return GeneralizedCutTerms(params);
}

BoundInequality LevelWeightedBound(IndexSet u, LevelSet q) {
  if (u.empty()) throw DomainError("level-weighted bound needs nonempty U");
  std::vector<BoundTerm> terms;
  for (int r = 1; r <= u.size(); ++r) {
    Rational w = LevelWeight(q, u.size(), r);
    if (w > 0) terms.push_back({r, u, std::move(w)});
  }
  return BoundInequality(std::move(terms),
                         "COR2(U=" + u.ToString() + ",Q=" + q.ToString() + ")");
}

BoundInequality HeadWeightedBound(IndexSet u, int m) {
  if (u.empty()) throw DomainError("head-weighted bound needs nonempty U");
  if (m < 1 || m > u.size()) {
    throw DomainError("m = " + std::to_string(m) + " outside [1, |U|]");
  }
  std::vector<BoundTerm> terms = {{1, u, m}};
  for (int r = m + 1; r <= u.size(); ++r) terms.push_back({r, u, 1});
  return BoundInequality(std::move(terms), "COR3(U=" + u.ToString() +
                                               ",m=" + std::to_string(m) + ")");
}

unsigned ParseBoundRules(const std::string& list, bool* wants_search) {
  unsigned rules = 0;
  if (wants_search) *wants_search = false;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name == "csb") {
      rules |= kUnionRule;
    } else if (name == "gcsb3") {
      rules |= kTripleRule;
    } else if (name == "cor3") {
      rules |= kHeadWeightedRule;
    } else if (name == "cor2") {
      rules |= kLevelWeightedRule;
    } else if (name == "thm2") {
      if (wants_search) *wants_search = true;
    } else if (name == "all") {
      rules |= kAllSymbolicRules;
      if (wants_search) *wants_search = true;
    } else if (!name.empty()) {
      throw DomainError("unknown bound rule '" + name + "'");
    }
  }
  return rules;
}

namespace {

// Nonempty subsets of [k] ordered by (size, lexicographic members).
std::vector<IndexSet> OrderedSubsets(int k) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    out.push_back(IndexSet::FromMask(m));
  }
  std::sort(out.begin(), out.end(), [](IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

class BoundCollector {
 public:
  void Add(BoundInequality b) {
    BoundInequality canon = b.Canonical();
    for (const auto& seen : canon_) {
      if (seen.terms() == canon.terms()) return;
    }
    canon_.push_back(std::move(canon));
    out_.push_back(std::move(b));
  }
  std::vector<BoundInequality> Take() { return std::move(out_); }

 private:
  std::vector<BoundInequality> canon_;
  std::vector<BoundInequality> out_;
};

bool AllWeightsEqual(const BoundInequality& b) {
  for (const BoundTerm& t : b.terms()) {
    if (t.weight != b.terms().front().weight) return false;
  }
  return true;
}

bool IsSummedSingleCuts(const BoundInequality& b) {
  // Every level of one U with a common weight: by modularity this is the sum
  // of the single-sink union bounds over U.
  const BoundTerm& first = b.terms().front();
  return first.indices.size() >= 2 &&
         static_cast<int>(b.terms().size()) == first.indices.size() &&
         AllWeightsEqual(b);
}

}  // namespace

std::vector<BoundInequality> EnumerateBounds(int k, unsigned rules) {
  if (k < 1 || k > IndexSet::kMaxIndex) {
    throw DomainError("K = " + std::to_string(k) + " outside [1, 16]");
  }
  const std::vector<IndexSet> subsets = OrderedSubsets(k);
  BoundCollector out;
  if (rules & kUnionRule) {
    for (IndexSet u : subsets) out.Add(UnionCutBound(u));
  }
  if (rules & kTripleRule) {
    constexpr TripleVariant kVariants[] = {TripleVariant::kA, TripleVariant::kB,
                                           TripleVariant::kC, TripleVariant::kD};
    for (TripleVariant v : kVariants) {
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          for (int l = 1; l <= k; ++l) {
            if (i == j || j == l || i == l) continue;
            out.Add(TripleCutBound(i, j, l, v));
          }
        }
      }
    }
  }
  if (rules & kHeadWeightedRule) {
    for (IndexSet u : subsets) {
      for (int m = 1; m <= u.size(); ++m) {
        BoundInequality b = HeadWeightedBound(u, m);
        if (!IsSummedSingleCuts(b)) out.Add(std::move(b));
      }
    }
  }
  if (rules & kLevelWeightedRule) {
    for (IndexSet u : subsets) {
      if (u.size() == 1) {
        out.Add(LevelWeightedBound(u, LevelSet()));
        continue;
      }
      // Q ranges over subsets of {2..|U|}.
      const std::uint32_t free_bits = (1u << u.size()) - 2;
      for (std::uint32_t qm = free_bits;; qm = (qm - 1) & free_bits) {
        BoundInequality b = LevelWeightedBound(u, LevelSet::FromMask(qm));
        if (!IsSummedSingleCuts(b)) out.Add(std::move(b));
        if (qm == 0) break;
      }
    }
  }
  return out.Take();
}

std::vector<BoundInequality> SearchGeneralizedCutBounds(
    const SubsetFamily& cuts, const SubsetFamily& messages) {
  const int k = cuts.size();
  if (k > 4) throw DomainError("parameter search is limited to K <= 4");
  if (messages.size() != k) {
    throw DomainError("cut and message families differ in size");
  }
  const std::vector<IndexSet> subsets = OrderedSubsets(k);
  BoundCollector out;
  for (IndexSet u : subsets) {
    for (IndexSet g : subsets) {
      if (!IntersectLevel(cuts, u, 1).IsSubsetOf(IntersectLevel(cuts, g, 1))) {
        continue;
      }
      for (IndexSet t : subsets) {
        const std::uint32_t free_bits =
            u.size() >= 2 ? ((1u << u.size()) - 2) : 0;
        for (std::uint32_t qm = free_bits;; qm = (qm - 1) & free_bits) {
          const LevelSet q = LevelSet::FromMask(qm);
          const std::vector<int> qs = q.members();
          // Odometer over r_q in [1, |T|] for each q.
          std::vector<int> rq(qs.size(), 1);
          while (true) {
            GeneralizedCutParams p{g, u, t, q, {}};
            for (std::size_t i = 0; i < qs.size(); ++i) p.r_q[qs[i]] = rq[i];
            if (CheckCoverage(p, cuts, messages).ok()) {
              out.Add(GeneralizedCutTerms(p));
            }
            std::size_t i = 0;
            while (i < rq.size() && rq[i] == t.size()) rq[i++] = 1;
            if (i == rq.size()) break;
            ++rq[i];
          }
          if (qm == 0) break;
        }
      }
    }
  }
  return out.Take();
}

bool InstantiatedInequality::vacuous() const {
  for (const Rational& c : rate_coeffs) {
    if (c != 0) return false;
  }
  return true;
}

InstantiatedInequality InstantiatedInequality::Canonical() const {
  InstantiatedInequality out = *this;
  std::vector<Rational> all = rate_coeffs;
  all.insert(all.end(), capacity_coeffs.begin(), capacity_coeffs.end());
  const Rational factor = ScaleToCoprimeIntegers(all);
  std::copy_n(all.begin(), rate_coeffs.size(), out.rate_coeffs.begin());
  std::copy(all.begin() + static_cast<std::ptrdiff_t>(rate_coeffs.size()),
            all.end(), out.capacity_coeffs.begin());
  if (out.rhs_value) *out.rhs_value *= factor;
  return out;
}

bool InstantiatedInequality::SameCoefficients(
    const InstantiatedInequality& other) const {
  const InstantiatedInequality a = Canonical();
  const InstantiatedInequality b = other.Canonical();
  return a.rate_coeffs == b.rate_coeffs &&
         a.capacity_coeffs == b.capacity_coeffs;
}

InstantiatedInequality Instantiate(const BoundInequality& bound,
                                   const SubsetFamily& cuts,
                                   const SubsetFamily& messages) {
  if (cuts.size() != messages.size()) {
    throw DomainError("cut and message families differ in size");
  }
  if (bound.max_index() > cuts.size()) {
    throw DomainError("bound references sink " +
                      std::to_string(bound.max_index()) + " but K = " +
                      std::to_string(cuts.size()));
  }
  InstantiatedInequality out;
  out.messages = messages.ground();
  out.arcs = cuts.ground();
  out.rate_coeffs.assign(out.messages->size(), 0);
  out.capacity_coeffs.assign(out.arcs->size(), 0);
  out.provenance = bound.provenance();
  for (const BoundTerm& t : bound.terms()) {
    for (int i : IntersectLevel(messages, t.indices, t.level).members()) {
      out.rate_coeffs[i] += t.weight;
    }
    for (int a : IntersectLevel(cuts, t.indices, t.level).members()) {
      out.capacity_coeffs[a] += t.weight;
    }
  }
  return out;
}

InstantiatedInequality Instantiate(const BoundInequality& bound,
                                   const SubsetFamily& cuts,
                                   const SubsetFamily& messages,
                                   const ModularFunction& capacities) {
  if (capacities.ground() != cuts.ground()) {
    throw GroundMismatchError("capacities and cuts use different arc grounds");
  }
  InstantiatedInequality out = Instantiate(bound, cuts, messages);
  Rational rhs = 0;
  for (std::size_t a = 0; a < out.capacity_coeffs.size(); ++a) {
    rhs += out.capacity_coeffs[a] * capacities.weights()[a];
  }
  out.rhs_value = rhs;
  return out;
}

}  // namespace gcsb
