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

#include "gcsb/reproduce.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "gcsb/polytope.h"
#include "gcsb/regions.h"

namespace gcsb {
namespace {

struct CaseInfo {
  ReferenceCase c;
  std::string_view name;
  std::string_view file;
};

constexpr std::array<CaseInfo, 3> kCases = {{
    {ReferenceCase::kCompleteThreeSink, "k3-complete", "k3_complete.txt"},
    {ReferenceCase::kSymmetricThreeSink, "k3-symmetric", "k3_symmetric.txt"},
    {ReferenceCase::kCutsetProjection, "fm-derivation", "fm_derivation.txt"},
}};

const CaseInfo& Info(ReferenceCase c) {
  for (const CaseInfo& i : kCases) {
    if (i.c == c) return i;
  }
  return kCases[0];
}

std::set<std::string> CapacityNames(const LinearSystem& sys) {
  std::set<std::string> out;
  for (const std::string& v : sys.vars()) {
    if (!v.empty() && v[0] == 'C') out.insert(v);
  }
  return out;
}

std::vector<Point2> WithoutOrigin(std::vector<Point2> points) {
  std::erase(points, Point2{0, 0});
  std::sort(points.begin(), points.end());
  return points;
}

// Returns a note when some capacity vector disagrees, else a summary.
std::pair<bool, std::string> CheckCorners(int trials) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(0, 12);
  std::uniform_int_distribution<int> den(1, 4);
  int matched = 0;
  for (int t = 0; t <= trials; ++t) {
    std::vector<Rational> c(3, 1);
    if (t > 0) {
      for (Rational& x : c) x = Ratio(num(rng), den(rng));
    }
    std::vector<Point2> closed = CornerPointsSymmetric(3, c);
    closed = WithoutOrigin(std::move(closed));
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    const std::vector<Point2> vertices = WithoutOrigin(
        Vertices2d(SymmetricRegion(3, c, kAllSymbolicRules)));
    if (closed != vertices) {
      std::string msg = "corner points differ at C = (";
      for (std::size_t i = 0; i < c.size(); ++i) {
        msg += (i ? ", " : "") + ToString(c[i]);
      }
      return {false, msg + ")"};
    }
    ++matched;
  }
  return {true, "corner points match vertices for " + std::to_string(matched) +
                    " capacity vectors"};
}

}  // namespace

std::optional<ReferenceCase> ParseReferenceCase(std::string_view name) {
  for (const CaseInfo& i : kCases) {
    if (i.name == name) return i.c;
  }
  return std::nullopt;
}

std::string_view ReferenceCaseName(ReferenceCase c) { return Info(c).name; }

std::string GoldenFileName(ReferenceCase c) {
  return std::string(Info(c).file);
}

CaseReport RunReferenceCase(ReferenceCase c, std::string_view golden_text,
                            int corner_trials) {
  LinearSystem sys;
  switch (c) {
    case ReferenceCase::kCompleteThreeSink:
      sys = CompleteThreeSinkSystem();
      break;
    case ReferenceCase::kSymmetricThreeSink:
      sys = SymmetricSymbolicProjection(3, kAllSymbolicRules);
      break;
    case ReferenceCase::kCutsetProjection:
      sys = SymmetricCutsetProjection(3);
      break;
  }
  CaseReport report;
  report.generated = SystemRows(sys, CapacityNames(sys));
  report.diff = DiffRows(ParseRowFile(golden_text), report.generated);
  report.ok = report.diff.empty();
  if (c == ReferenceCase::kSymmetricThreeSink) {
    auto [ok, note] = CheckCorners(corner_trials);
    report.ok = report.ok && ok;
    report.notes.push_back(std::move(note));
  }
  return report;
}

std::string FormatCaseReport(ReferenceCase c, const CaseReport& r) {
  std::ostringstream out;
  out << "case " << ReferenceCaseName(c) << ": " << r.generated.size()
      << " rows generated\n";
  for (const KeyedRow& row : r.generated) out << "  " << row.text << '\n';
  for (const std::string& m : r.diff.missing) out << "- " << m << '\n';
  for (const std::string& e : r.diff.extra) out << "+ " << e << '\n';
  for (const std::string& n : r.notes) out << n << '\n';
  out << (r.ok ? "match\n" : "MISMATCH\n");
  return out.str();
}

}  // namespace gcsb
