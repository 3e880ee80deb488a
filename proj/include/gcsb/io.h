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

// JSON documents: network input, cut files and bound reports. Rationals
// travel as strings ("3", "5/2") so nothing passes through binary64.

#ifndef GCSB_IO_H_
#define GCSB_IO_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gcsb/bounds.h"
#include "gcsb/network.h"
#include "gcsb/polytope.h"

namespace gcsb {

// {"nodes": [..], "arcs": [{"from","to","capacity"}], "source": "s",
//  "sinks": [..], "messages": [..], "demands": {sink: [message, ..]}}.
// Capacity is a rational string or "inf". Unknown keys, missing keys and
// wrong types raise SchemaError.
NetworkSpec ParseNetworkDocument(std::string_view text);

// Parses and validates; network validation failures also raise
// SchemaError.
BroadcastNetwork LoadNetwork(std::string_view text);

std::string NetworkDocumentJson(const NetworkSpec& spec);

// {sink: [arc label, ..]} with one entry per sink. Unknown sinks or
// labels, unbounded arcs and missing sinks raise SchemaError; a set that
// does not separate its sink raises PreconditionError.
std::vector<Cut> ParseCutDocument(const BroadcastNetwork& net,
                                  std::string_view text);

std::string CutDocumentJson(const BroadcastNetwork& net,
                            const std::vector<Cut>& cuts);

// Rows scaled to coprime integers; rows with coefficients equal to an
// earlier row are dropped. Order is otherwise preserved.
std::vector<InstantiatedInequality> CanonicalRows(
    const std::vector<InstantiatedInequality>& rows);

// JSON list of {"provenance", "rate_coeffs", "capacity_coeffs",
// "rhs_value"?}; zero coefficients omitted, keys in ground order.
std::string BoundsReportJson(const std::vector<InstantiatedInequality>& rows);

// One inequality as text plus a key that is equal for two rows iff they
// agree up to positive scaling and moving terms across "<=".
struct KeyedRow {
  std::string key;
  std::string text;
};

// Rows of `sys`, printed with `rhs_vars` on the right-hand side.
std::vector<KeyedRow> SystemRows(const LinearSystem& sys,
                                 const std::set<std::string>& rhs_vars);

// One row per line, e.g. "3 R0 + Rsp <= 3 C1 + 6 C2 + 3 C3". Blank lines
// and lines starting with '#' are skipped. SchemaError on a bad line.
std::vector<KeyedRow> ParseRowFile(std::string_view text);

struct RowDiff {
  std::vector<std::string> missing;  // expected, not produced
  std::vector<std::string> extra;    // produced, not expected
  bool empty() const { return missing.empty() && extra.empty(); }
};

RowDiff DiffRows(const std::vector<KeyedRow>& expected,
                 const std::vector<KeyedRow>& actual);

}  // namespace gcsb

#endif  // GCSB_IO_H_
