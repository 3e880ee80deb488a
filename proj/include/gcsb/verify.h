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

// Seeded randomized campaigns over the set-function inequalities and the
// combinatorial identities behind the bounds.

#ifndef GCSB_VERIFY_H_
#define GCSB_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gcsb/rational.h"

namespace gcsb {

enum class Campaign {
  kPrefixLevel,         // "1"
  kBasedPrefixLevel,    // "cor1"
  kContainedLevel,      // "2"
  kMultiway,            // "multiway"
  kAugmentedIdentity,   // "appendixA"
  kAggregatedTransfer,  // "appendixC"
};

std::optional<Campaign> ParseCampaign(std::string_view name);
std::string_view CampaignName(Campaign campaign);

enum class OracleKind { kEntropy, kModular };

struct CampaignOptions {
  Campaign campaign = Campaign::kPrefixLevel;
  OracleKind oracle = OracleKind::kEntropy;
  int trials = 1000;
  // Ground-set size; at most 6 for entropy oracles, 20 for modular ones
  // and 32 for the augmented identity.
  int ground = 5;
  // Trial t uses K = 1 + t mod max_sets (2 + t mod (max_sets-1) for the
  // augmented identity, which needs K >= 2).
  int max_sets = 4;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

// Throws DomainError when an option is out of range.
void ValidateCampaignOptions(const CampaignOptions& options);

struct CampaignSummary {
  Campaign campaign = Campaign::kPrefixLevel;
  OracleKind oracle = OracleKind::kEntropy;
  long trials = 0;
  long checks = 0;
  long violations = 0;
  // Gap extremes for the inequality campaigns; unset for identities.
  std::optional<double> min_gap;
  std::optional<double> max_gap;
  // Exact extremes for modular runs.
  std::optional<Rational> exact_min_gap;
  std::optional<Rational> exact_max_gap;
  std::string first_violation;
};

// Per-trial generator seed: splitmix64 of the master seed advanced by the
// trial counter. Results do not depend on the thread count.
std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t trial);

// Runs `options.trials` trials over all valid parameterizations. For the
// transfer-weight identity the sweep is deterministic: every nonempty
// Q within {2..8} and every size |U| from max(Q) to 8; trials is ignored.
CampaignSummary RunCampaign(const CampaignOptions& options);

// Every family of K sets over a ground of size n, for all n <= max_ground
// and 2 <= K <= max_sets, and all 0 < r' < J <= K. Families only matter
// through their first J sets, so each (r', J) enumerates J-set families.
CampaignSummary ExhaustiveAugmentedIdentity(int max_ground, int max_sets);

// Multi-line human-readable report ending in a newline.
std::string FormatSummary(const CampaignSummary& summary);

}  // namespace gcsb

#endif  // GCSB_VERIFY_H_
