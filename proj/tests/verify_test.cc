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

#include "gcsb/verify.h"

#include <cstdint>
#include <set>
#include <string>

#include "gcsb/errors.h"
#include "gtest/gtest.h"

namespace gcsb {
namespace {

constexpr Campaign kInequalities[] = {
    Campaign::kPrefixLevel, Campaign::kBasedPrefixLevel,
    Campaign::kContainedLevel, Campaign::kMultiway};

TEST(VerifyTest, NamesRoundTrip) {
  for (const char* name :
       {"1", "cor1", "2", "multiway", "appendixA", "appendixC"}) {
    const auto c = ParseCampaign(name);
    ASSERT_TRUE(c.has_value()) << name;
    EXPECT_EQ(CampaignName(*c), name);
  }
  EXPECT_FALSE(ParseCampaign("3").has_value());
  EXPECT_FALSE(ParseCampaign("").has_value());
}

TEST(VerifyTest, TrialSeedsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(TrialSeed(7, t));
  EXPECT_EQ(seen.size(), 1000U);
  EXPECT_EQ(TrialSeed(7, 3), TrialSeed(7, 3));
  EXPECT_NE(TrialSeed(7, 3), TrialSeed(8, 3));
}

TEST(VerifyTest, EntropyCampaignsHaveNoViolations) {
  for (Campaign c : kInequalities) {
    CampaignOptions o;
    o.campaign = c;
    o.trials = 120;
    o.ground = 4;
    const CampaignSummary s = RunCampaign(o);
    EXPECT_EQ(s.violations, 0) << FormatSummary(s);
    EXPECT_EQ(s.trials, 120);
    EXPECT_GT(s.checks, 120);
    ASSERT_TRUE(s.min_gap.has_value());
    EXPECT_GE(*s.min_gap, -1e-9);
    // Some instance is strict; entropy is rarely modular on a family.
    EXPECT_GT(*s.max_gap, 1e-6) << CampaignName(c);
  }
}

TEST(VerifyTest, ModularCampaignsAreExactlyTight) {
  for (Campaign c : kInequalities) {
    CampaignOptions o;
    o.campaign = c;
    o.oracle = OracleKind::kModular;
    o.trials = 60;
    o.ground = 7;
    const CampaignSummary s = RunCampaign(o);
    EXPECT_EQ(s.violations, 0) << FormatSummary(s);
    ASSERT_TRUE(s.exact_min_gap.has_value());
    EXPECT_EQ(*s.exact_min_gap, 0) << CampaignName(c);
    EXPECT_EQ(*s.exact_max_gap, 0) << CampaignName(c);
  }
}

TEST(VerifyTest, ThreadCountDoesNotChangeTheReport) {
  CampaignOptions o;
  o.campaign = Campaign::kContainedLevel;
  o.trials = 40;
  o.threads = 1;
  const std::string one = FormatSummary(RunCampaign(o));
  o.threads = 3;
  EXPECT_EQ(FormatSummary(RunCampaign(o)), one);
  o.seed = 2;
  EXPECT_NE(FormatSummary(RunCampaign(o)), one);
}

TEST(VerifyTest, ParameterCountsPerTrial) {
  // K cycles 1..4; 0 <= r' <= J <= K gives (K+1)(K+2)/2 pairs.
  CampaignOptions o;
  o.trials = 4;
  EXPECT_EQ(RunCampaign(o).checks, 3 + 6 + 10 + 15);
  o.campaign = Campaign::kMultiway;
  EXPECT_EQ(RunCampaign(o).checks, 1 + 3 + 7 + 15);
  // K cycles 2..4 for the identity; 0 < r' < J <= K.
  o.campaign = Campaign::kAugmentedIdentity;
  o.trials = 3;
  EXPECT_EQ(RunCampaign(o).checks, 1 + 3 + 6);
}

TEST(VerifyTest, AugmentedIdentityRandom) {
  CampaignOptions o;
  o.campaign = Campaign::kAugmentedIdentity;
  o.trials = 500;
  o.ground = 6;
  o.max_sets = 6;
  const CampaignSummary s = RunCampaign(o);
  EXPECT_EQ(s.violations, 0) << s.first_violation;
  EXPECT_FALSE(s.min_gap.has_value());
}

TEST(VerifyTest, AugmentedIdentityExhaustiveSmall) {
  const CampaignSummary s = ExhaustiveAugmentedIdentity(3, 3);
  EXPECT_EQ(s.violations, 0) << s.first_violation;
  // Families: sum over n=1..3 of 2^(2n) + 2^(3n); checks add 2 per triple.
  long families = 0;
  long checks = 0;
  for (int n = 1; n <= 3; ++n) {
    families += (1L << (2 * n)) + (1L << (3 * n));
    checks += (1L << (2 * n)) + 2 * (1L << (3 * n));
  }
  EXPECT_EQ(s.trials, families);
  EXPECT_EQ(s.checks, checks);
}

TEST(VerifyTest, TransferSweepCoversAllLevelSets) {
  CampaignOptions o;
  o.campaign = Campaign::kAggregatedTransfer;
  const CampaignSummary s = RunCampaign(o);
  EXPECT_EQ(s.violations, 0) << s.first_violation;
  // Q with max m has 2^(m-2) choices and 9 - m sizes.
  long expected = 0;
  for (int m = 2; m <= 8; ++m) expected += (1L << (m - 2)) * (9 - m);
  EXPECT_EQ(s.checks, expected);
}

TEST(VerifyTest, RejectsBadOptions) {
  CampaignOptions o;
  o.ground = 7;
  EXPECT_THROW(RunCampaign(o), DomainError);
  o.ground = 5;
  o.trials = 0;
  EXPECT_THROW(RunCampaign(o), DomainError);
  o.trials = 1;
  o.max_sets = 7;
  EXPECT_THROW(RunCampaign(o), DomainError);
  o.max_sets = 1;
  o.campaign = Campaign::kAugmentedIdentity;
  EXPECT_THROW(RunCampaign(o), DomainError);
  EXPECT_THROW(ExhaustiveAugmentedIdentity(9, 3), DomainError);
  // Identity checks have no joint distribution behind them.
  o.max_sets = 3;
  o.ground = 12;
  EXPECT_NO_THROW(RunCampaign(o));
  o.ground = 33;
  EXPECT_THROW(RunCampaign(o), DomainError);
}

}  // namespace
}  // namespace gcsb
