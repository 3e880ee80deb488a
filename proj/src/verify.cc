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

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "gcsb/bounds.h"
#include "gcsb/errors.h"
#include "gcsb/setcalc.h"
#include "gcsb/setfn.h"

namespace gcsb {
namespace {

constexpr std::array<std::pair<Campaign, std::string_view>, 6> kNames = {{
    {Campaign::kPrefixLevel, "1"},
    {Campaign::kBasedPrefixLevel, "cor1"},
    {Campaign::kContainedLevel, "2"},
    {Campaign::kMultiway, "multiway"},
    {Campaign::kAugmentedIdentity, "appendixA"},
    {Campaign::kAggregatedTransfer, "appendixC"},
}};

constexpr int kMaxCampaignSets = 6;
constexpr int kMaxModularGround = 20;
// Set families only; no set function is tabulated.
constexpr int kMaxIdentityGround = 32;
constexpr int kMaxTransferLevel = 8;

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Describe(const Rational& v) { return gcsb::ToString(v); }

struct TrialResult {
  long checks = 0;
  long violations = 0;
  std::optional<double> min_gap;
  std::optional<double> max_gap;
  std::optional<Rational> exact_min_gap;
  std::optional<Rational> exact_max_gap;
  std::string first_violation;

  void Fail(std::string what) {
    ++violations;
    if (first_violation.empty()) first_violation = std::move(what);
  }

  // `where` is only formatted on a violation.
  template <typename Where>
  void Record(double gap, double tolerance, const Where& where) {
    ++checks;
    min_gap = min_gap ? std::min(*min_gap, gap) : gap;
    max_gap = max_gap ? std::max(*max_gap, gap) : gap;
    if (gap < -tolerance) Fail(where() + ": gap " + FormatDouble(gap));
  }

  template <typename Where>
  void Record(const Rational& gap, double, const Where& where) {
    ++checks;
    if (!exact_min_gap || gap < *exact_min_gap) exact_min_gap = gap;
    if (!exact_max_gap || gap > *exact_max_gap) exact_max_gap = gap;
    if (gap < 0) Fail(where() + ": gap " + Describe(gap));
  }

  template <typename Where>
  void Check(bool holds, const Where& where) {
    ++checks;
    if (!holds) Fail(where());
  }
};

std::vector<std::uint64_t> RandomFamily(std::mt19937_64& rng, int k,
                                        int ground) {
  const std::uint64_t full = (std::uint64_t{1} << ground) - 1;
  std::vector<std::uint64_t> masks(k);
  for (auto& m : masks) m = rng() & full;
  return masks;
}

ModularFunction RandomModular(std::mt19937_64& rng, const GroundRef& ground,
                              int n) {
  std::uniform_int_distribution<int> num(0, 20);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> weights;
  weights.reserve(n);
  for (int i = 0; i < n; ++i) weights.push_back(Ratio(num(rng), den(rng)));
  return ModularFunction(ground, std::move(weights));
}

std::string TrialTag(long trial, int k) {
  return "trial " + std::to_string(trial) + " K=" + std::to_string(k);
}

template <typename F>
void RunGaps(Campaign campaign, const F& f, const SubsetFamily& family,
             std::mt19937_64& rng, long trial, double tol, TrialResult& out) {
  const int k = family.size();
  const std::string tag = TrialTag(trial, k);
  switch (campaign) {
    case Campaign::kPrefixLevel:
    case Campaign::kBasedPrefixLevel: {
      std::uint64_t base = 0;
      if (campaign == Campaign::kBasedPrefixLevel) {
        base = rng() & ((std::uint64_t{1} << family.ground()->size()) - 1);
      }
      for (int j = 0; j <= k; ++j) {
        for (int rp = 0; rp <= j; ++rp) {
          out.Record(PrefixLevelGap(f, family, base, rp, j), tol, [&] {
            return tag + " r'=" + std::to_string(rp) +
                   " J=" + std::to_string(j) + " S0=" + std::to_string(base);
          });
        }
      }
      break;
    }
    case Campaign::kMultiway:
      for (std::uint32_t u = 1; u < (std::uint32_t{1} << k); ++u) {
        const IndexSet us = IndexSet::FromMask(u);
        out.Record(MultiwayGap(f, family, us), tol,
                   [&] { return tag + " U=" + us.ToString(); });
      }
      break;
    case Campaign::kContainedLevel:
      for (std::uint32_t u = 1; u < (std::uint32_t{1} << k); ++u) {
        const IndexSet us = IndexSet::FromMask(u);
        for (std::uint32_t t = 1; t < (std::uint32_t{1} << k); ++t) {
          const IndexSet ts = IndexSet::FromMask(t);
          for (int q = 1; q <= us.size(); ++q) {
            for (int rq = 1; rq <= ts.size(); ++rq) {
              if (!LevelContained(family, us, q, ts, rq)) continue;
              out.Record(ContainedLevelGap(f, family, us, ts, q, rq), tol, [&] {
                return tag + " U=" + us.ToString() + " T=" + ts.ToString() +
                       " q=" + std::to_string(q) +
                       " r_q=" + std::to_string(rq);
              });
            }
          }
        }
      }
      break;
    default:
      break;
  }
}

TrialResult RunTrial(const CampaignOptions& o, long trial) {
  TrialResult out;
  std::mt19937_64 rng(TrialSeed(o.seed, static_cast<std::uint64_t>(trial)));
  if (o.campaign == Campaign::kAugmentedIdentity) {
    const int k = 2 + static_cast<int>(trial % (o.max_sets - 1));
    const std::vector<std::uint64_t> masks = RandomFamily(rng, k, o.ground);
    for (int j = 2; j <= k; ++j) {
      for (int rp = 1; rp < j; ++rp) {
        out.Check(AugmentedLevelIdentityHolds(masks, rp, j), [&] {
          return TrialTag(trial, k) + " r'=" + std::to_string(rp) +
                 " J=" + std::to_string(j) + ": identity fails";
        });
      }
    }
    return out;
  }
  const int k = 1 + static_cast<int>(trial % o.max_sets);
  if (o.oracle == OracleKind::kEntropy) {
    const TableFunction f =
        EntropyFunction(JointDistribution::Random(o.ground, rng));
    const SubsetFamily family(f.ground(), RandomFamily(rng, k, o.ground));
    RunGaps(o.campaign, f, family, rng, trial, o.tolerance, out);
  } else {
    const ModularFunction f =
        RandomModular(rng, GroundSet::Create(o.ground), o.ground);
    const SubsetFamily family(f.ground(), RandomFamily(rng, k, o.ground));
    RunGaps(o.campaign, f, family, rng, trial, o.tolerance, out);
  }
  return out;
}

void Merge(const TrialResult& r, CampaignSummary& s) {
  s.checks += r.checks;
  s.violations += r.violations;
  if (r.min_gap) s.min_gap = s.min_gap ? std::min(*s.min_gap, *r.min_gap) : *r.min_gap;
  if (r.max_gap) s.max_gap = s.max_gap ? std::max(*s.max_gap, *r.max_gap) : *r.max_gap;
  if (r.exact_min_gap &&
      (!s.exact_min_gap || *r.exact_min_gap < *s.exact_min_gap)) {
    s.exact_min_gap = r.exact_min_gap;
  }
  if (r.exact_max_gap &&
      (!s.exact_max_gap || *r.exact_max_gap > *s.exact_max_gap)) {
    s.exact_max_gap = r.exact_max_gap;
  }
  if (s.first_violation.empty()) s.first_violation = r.first_violation;
}

CampaignSummary TransferSweep(const CampaignOptions& o) {
  CampaignSummary s;
  s.campaign = o.campaign;
  s.oracle = o.oracle;
  TrialResult r;
  // Bit i of `bits` selects level i + 2.
  for (std::uint32_t bits = 1; bits < (1U << (kMaxTransferLevel - 1)); ++bits) {
    const LevelSet q = LevelSet::FromMask(bits << 1);
    for (int size_u = q.max(); size_u <= kMaxTransferLevel; ++size_u) {
      r.Check(AggregatedTransferIdentityHolds(q, size_u), [&] {
        return "Q=" + q.ToString() + " |U|=" + std::to_string(size_u) +
               ": identity fails";
      });
    }
  }
  ++s.trials;
  Merge(r, s);
  return s;
}

}  // namespace

std::optional<Campaign> ParseCampaign(std::string_view name) {
  for (const auto& [c, n] : kNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view CampaignName(Campaign campaign) {
  for (const auto& [c, n] : kNames) {
    if (c == campaign) return n;
  }
  return "?";
}

void ValidateCampaignOptions(const CampaignOptions& o) {
  if (o.trials < 1) throw DomainError("trials must be positive");
  int max_ground = o.oracle == OracleKind::kEntropy
                       ? JointDistribution::kMaxVariables
                       : kMaxModularGround;
  if (o.campaign == Campaign::kAugmentedIdentity) max_ground = kMaxIdentityGround;
  if (o.ground < 1 || o.ground > max_ground) {
    throw DomainError("ground size must lie in [1, " +
                      std::to_string(max_ground) + "]");
  }
  const int min_sets = o.campaign == Campaign::kAugmentedIdentity ? 2 : 1;
  if (o.max_sets < min_sets || o.max_sets > kMaxCampaignSets) {
    throw DomainError("set count must lie in [" + std::to_string(min_sets) +
                      ", " + std::to_string(kMaxCampaignSets) + "]");
  }
  if (!(o.tolerance >= 0)) throw DomainError("tolerance must be >= 0");
  if (o.threads < 0) throw DomainError("threads must be >= 0");
}

std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CampaignSummary RunCampaign(const CampaignOptions& options) {
  ValidateCampaignOptions(options);
  if (options.campaign == Campaign::kAggregatedTransfer) {
    return TransferSweep(options);
  }
  std::vector<TrialResult> results(options.trials);
  int workers = options.threads;
  if (workers == 0) {
    workers = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  }
  workers = std::min(workers, options.trials);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (long t = w; t < options.trials; t += workers) {
        results[t] = RunTrial(options, t);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CampaignSummary s;
  s.campaign = options.campaign;
  s.oracle = options.oracle;
  s.trials = options.trials;
  for (const TrialResult& r : results) Merge(r, s);
  return s;
}

CampaignSummary ExhaustiveAugmentedIdentity(int max_ground, int max_sets) {
  if (max_ground < 1 || max_ground > 8) {
    throw DomainError("exhaustive ground size must lie in [1, 8]");
  }
  if (max_sets < 2 || max_sets > 4) {
    throw DomainError("exhaustive set count must lie in [2, 4]");
  }
  CampaignSummary s;
  s.campaign = Campaign::kAugmentedIdentity;
  TrialResult r;
  std::array<std::uint64_t, 4> masks{};
  for (int n = 1; n <= max_ground; ++n) {
    for (int j = 2; j <= max_sets; ++j) {
      // All j-tuples of n-bit masks, packed as one counter of j*n bits.
      const std::uint64_t count = std::uint64_t{1} << (j * n);
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      const std::span<const std::uint64_t> view(masks.data(), j);
      for (std::uint64_t packed = 0; packed < count; ++packed) {
        for (int i = 0; i < j; ++i) masks[i] = (packed >> (i * n)) & full;
        for (int rp = 1; rp < j; ++rp) {
          r.Check(AugmentedLevelIdentityHolds(view, rp, j), [&] {
            std::ostringstream where;
            where << "n=" << n << " r'=" << rp << " J=" << j << " family";
            for (int i = 0; i < j; ++i) where << ' ' << masks[i];
            where << ": identity fails";
            return where.str();
          });
        }
        ++s.trials;
      }
    }
  }
  Merge(r, s);
  return s;
}

std::string FormatSummary(const CampaignSummary& s) {
  std::ostringstream out;
  out << "campaign: " << CampaignName(s.campaign);
  if (s.campaign != Campaign::kAugmentedIdentity &&
      s.campaign != Campaign::kAggregatedTransfer) {
    out << (s.oracle == OracleKind::kEntropy ? " (entropy)" : " (modular)");
  }
  out << "\ntrials: " << s.trials << "\nchecks: " << s.checks << '\n';
  if (s.exact_min_gap) {
    out << "min gap: " << Describe(*s.exact_min_gap) << " (exact)\n";
    out << "max gap: " << Describe(*s.exact_max_gap) << " (exact)\n";
  } else if (s.min_gap) {
    out << "min gap: " << FormatDouble(*s.min_gap) << '\n';
    out << "max gap: " << FormatDouble(*s.max_gap) << '\n';
  }
  out << "violations: " << s.violations << '\n';
  if (!s.first_violation.empty()) {
    out << "first violation: " << s.first_violation << '\n';
  }
  return out.str();
}

}  // namespace gcsb
