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

// Regeneration of the stored reference systems and their golden-file diff.

#ifndef GCSB_REPRODUCE_H_
#define GCSB_REPRODUCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcsb/io.h"

namespace gcsb {

enum class ReferenceCase {
  kCompleteThreeSink,   // "k3-complete"
  kSymmetricThreeSink,  // "k3-symmetric"
  kCutsetProjection,    // "fm-derivation"
};

std::optional<ReferenceCase> ParseReferenceCase(std::string_view name);
std::string_view ReferenceCaseName(ReferenceCase c);
// Golden file name inside the golden directory.
std::string GoldenFileName(ReferenceCase c);

struct CaseReport {
  std::vector<KeyedRow> generated;
  RowDiff diff;
  // Extra checks beyond the row diff, one line each.
  std::vector<std::string> notes;
  bool ok = false;
};

// Regenerates the case and diffs it against `golden_text`. The symmetric
// case also compares the closed-form corner points with the vertices of
// the numeric region at unit and at `corner_trials` seeded random
// capacity vectors.
CaseReport RunReferenceCase(ReferenceCase c, std::string_view golden_text,
                            int corner_trials = 20);

std::string FormatCaseReport(ReferenceCase c, const CaseReport& report);

}  // namespace gcsb

#endif  // GCSB_REPRODUCE_H_
