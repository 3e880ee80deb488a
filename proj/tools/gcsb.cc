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

// gcsb: bound generation, verification campaigns, region projection and
// reference-system reproduction.
//
// Exit codes: 0 ok, 1 violation or mismatch, 2 schema or parameter error,
// 3 cut verification failure, 4 unbounded region.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcsb/bounds.h"
#include "gcsb/errors.h"
#include "gcsb/io.h"
#include "gcsb/network.h"
#include "gcsb/polytope.h"
#include "gcsb/regions.h"
#include "gcsb/reproduce.h"
#include "gcsb/verify.h"

#ifndef GCSB_GOLDEN_DIR
#define GCSB_GOLDEN_DIR "data/golden"
#endif

namespace gcsb {
namespace {

enum ExitCode {
  kOk = 0,
  kViolation = 1,
  kBadInput = 2,
  kBadCut = 3,
  kUnbounded = 4,
};

// Raised for failures that map to a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kBadInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes through a temporary so a failure never leaves partial output.
void WriteFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw Exit{kBadInput, "cannot write " + path};
  }
  std::filesystem::rename(tmp, path);
}

unsigned Rules(const std::string& list, bool* search) {
  try {
    return ParseBoundRules(list, search);
  } catch (const Error& e) {
    throw Exit{kBadInput, e.what()};
  }
}

BroadcastNetwork ReadNetwork(const std::string& path) {
  try {
    return LoadNetwork(ReadFile(path));
  } catch (const SchemaError& e) {
    throw Exit{kBadInput, path + ": " + e.what()};
  }
}

std::vector<Cut> ReadCuts(const BroadcastNetwork& net,
                          const std::string& cuts) {
  try {
    if (cuts == "min") return MinCuts(net);
    return ParseCutDocument(net, ReadFile(cuts));
  } catch (const SchemaError& e) {
    throw Exit{kBadInput, cuts + ": " + e.what()};
  } catch (const PreconditionError& e) {
    throw Exit{kBadCut, e.what()};
  } catch (const InfeasibleError& e) {
    throw Exit{kBadCut, e.what()};
  }
}

std::vector<BoundInequality> Select(const BroadcastNetwork& net,
                                    const std::vector<Cut>& cuts,
                                    unsigned rules, bool search) {
  if (search && net.num_sinks() > 4) {
    throw Exit{kBadInput, "thm2 parameter search needs at most 4 sinks"};
  }
  return SelectBounds(net, cuts, rules, search);
}

// ---- bounds

struct BoundsArgs {
  std::string network;
  std::string rules = "csb,gcsb3,cor3,cor2";
  std::string cuts = "min";
  std::string format = "json";
  std::string output = "-";
};

int RunBounds(const BoundsArgs& a) {
  bool search = false;
  const unsigned rules = Rules(a.rules, &search);
  const BroadcastNetwork net = ReadNetwork(a.network);
  const std::vector<Cut> cuts = ReadCuts(net, a.cuts);
  const auto rows =
      CanonicalRows(InstantiateAll(net, cuts, Select(net, cuts, rules, search)));
  WriteFile(a.output, BoundsReportJson(rows));
  return kOk;
}

// ---- verify

struct VerifyArgs {
  std::string lemma;
  CampaignOptions options;
  bool modular = false;
  bool exhaustive = false;
};

int RunVerify(VerifyArgs a) {
  const std::optional<Campaign> c = ParseCampaign(a.lemma);
  if (!c) throw Exit{kBadInput, "unknown lemma '" + a.lemma + "'"};
  a.options.campaign = *c;
  a.options.oracle = a.modular ? OracleKind::kModular : OracleKind::kEntropy;
  CampaignSummary s;
  try {
    s = RunCampaign(a.options);
  } catch (const DomainError& e) {
    throw Exit{kBadInput, e.what()};
  }
  std::cout << FormatSummary(s);
  long violations = s.violations;
  if (a.exhaustive) {
    if (*c != Campaign::kAugmentedIdentity) {
      throw Exit{kBadInput, "--exhaustive applies to appendixA only"};
    }
    CampaignSummary e;
    try {
      e = ExhaustiveAugmentedIdentity(a.options.ground,
                                      std::min(a.options.max_sets, 4));
    } catch (const DomainError& err) {
      throw Exit{kBadInput, err.what()};
    }
    std::cout << "exhaustive families: " << e.trials << "\nexhaustive checks: "
              << e.checks << "\nexhaustive violations: " << e.violations
              << '\n';
    if (!e.first_violation.empty()) {
      std::cout << "first violation: " << e.first_violation << '\n';
    }
    violations += e.violations;
  }
  return violations == 0 ? kOk : kViolation;
}

// ---- region

struct RegionArgs {
  std::string network;
  std::vector<std::string> symmetric;
  std::string rules = "csb,gcsb3,cor3,cor2";
  std::string cuts = "min";
  std::string axes;
  std::string emit;
  std::string compare;
};

struct RegionInput {
  std::optional<BroadcastNetwork> net;
  std::vector<Cut> cuts;
  std::vector<Axis> axes;
  bool symmetric = false;
};

RegionInput PrepareRegion(const RegionArgs& a) {
  RegionInput in;
  if (a.symmetric.empty() == a.network.empty()) {
    throw Exit{kBadInput, "give either a network file or --symmetric"};
  }
  if (!a.symmetric.empty()) {
    std::vector<Rational> c;
    int k = 0;
    try {
      k = std::stoi(a.symmetric[0]);
      for (std::size_t i = 1; i < a.symmetric.size(); ++i) {
        c.push_back(ParseRational(a.symmetric[i]));
      }
      if (static_cast<int>(c.size()) != k) {
        throw DomainError("--symmetric K needs exactly K capacities");
      }
      in.net.emplace(SymmetricCombinationNetwork(k, c));
    } catch (const std::exception& e) {
      throw Exit{kBadInput, e.what()};
    }
    in.cuts = CombinationBasicCuts(*in.net);
    in.symmetric = true;
  } else {
    in.net.emplace(ReadNetwork(a.network));
    in.cuts = ReadCuts(*in.net, a.cuts);
  }
  const std::vector<std::string> vars = RateVariables(*in.net);
  std::string axes = a.axes;
  if (axes.empty()) {
    if (in.symmetric) {
      axes = "R0,Rsp";
    } else if (vars.size() == 2) {
      axes = vars[0] + "," + vars[1];
    } else {
      throw Exit{kBadInput, "--axes is required for more than two messages"};
    }
  }
  try {
    in.axes = ParseAxes(axes, vars);
  } catch (const DomainError& e) {
    throw Exit{kBadInput, e.what()};
  }
  if (in.axes.size() != 2) throw Exit{kBadInput, "--axes needs two axes"};
  return in;
}

LinearSystem BuildRegion(const RegionInput& in, unsigned rules, bool search) {
  const auto rows =
      InstantiateAll(*in.net, in.cuts, Select(*in.net, in.cuts, rules, search));
  return ProjectToAxes(NumericSystem(rows, RateVariables(*in.net)), in.axes);
}

std::vector<Point2> Vertices(const LinearSystem& region) {
  try {
    return Vertices2d(region);
  } catch (const UnboundedError& e) {
    throw Exit{kUnbounded, e.what()};
  }
}

std::string PointList(const std::vector<Point2>& points) {
  std::string out;
  for (const Point2& p : points) out += (out.empty() ? "" : " ") + ToString(p);
  return out;
}

void Verdict(const std::string& outer_name, const LinearSystem& outer,
             const std::string& inner_name, const LinearSystem& inner) {
  const auto w = ContainmentWitness(outer, inner);
  std::cout << outer_name << " contains " << inner_name << ": ";
  if (!w) {
    std::cout << "yes\n";
  } else {
    std::cout << "no, witness (" << ToString((*w)[0]) << ", "
              << ToString((*w)[1]) << ")\n";
  }
}

int RunRegion(const RegionArgs& a) {
  const RegionInput in = PrepareRegion(a);
  bool search = false;
  unsigned rules = Rules(a.rules, &search);
  std::optional<LinearSystem> cutset;
  std::optional<LinearSystem> full;
  if (!a.compare.empty()) {
    if (a.compare != "cutset" && a.compare != "gcsb") {
      throw Exit{kBadInput, "--compare must be cutset or gcsb"};
    }
    const bool full_search = !in.symmetric && in.net->num_sinks() <= 4;
    cutset = BuildRegion(in, kUnionRule, false);
    full = BuildRegion(in, kAllSymbolicRules, full_search);
  }
  const LinearSystem region =
      a.compare == "cutset" ? *cutset
      : a.compare == "gcsb" ? *full
                            : BuildRegion(in, rules, search);
  const std::vector<Point2> vertices = Vertices(region);
  if (full) {
    // Both regions must be bounded for a verdict to mean anything.
    Vertices(a.compare == "cutset" ? *full : *cutset);
  }
  std::cout << "axes: " << in.axes[0].name << ", " << in.axes[1].name << '\n';
  std::cout << "region" << (a.compare.empty() ? "" : " (" + a.compare + ")")
            << ": " << region.rows().size() << " rows\n";
  for (const LinearRow& row : region.rows()) {
    std::cout << "  " << region.RowString(row, {}) << '\n';
  }
  std::cout << "vertices: " << PointList(vertices) << '\n';
  if (full) {
    Verdict("cutset", *cutset, "gcsb", *full);
    Verdict("gcsb", *full, "cutset", *cutset);
  }
  if (!a.emit.empty()) WriteFile(a.emit, VerticesCsv(vertices));
  return kOk;
}

// ---- paper

struct PaperArgs {
  std::string name;
  std::string golden_dir = GCSB_GOLDEN_DIR;
};

int RunPaper(const PaperArgs& a) {
  const std::optional<ReferenceCase> c = ParseReferenceCase(a.name);
  if (!c) throw Exit{kBadInput, "unknown case '" + a.name + "'"};
  const std::string path =
      (std::filesystem::path(a.golden_dir) / GoldenFileName(*c)).string();
  CaseReport report;
  try {
    report = RunReferenceCase(*c, ReadFile(path));
  } catch (const SchemaError& e) {
    throw Exit{kBadInput, path + ": " + e.what()};
  }
  std::cout << FormatCaseReport(*c, report);
  return report.ok ? kOk : kViolation;
}

int Main(int argc, char** argv) {
  CLI::App app{"Generalized cut-set bounds for broadcast networks"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  CLI::App* b = app.add_subcommand("bounds", "Generate and instantiate bounds");
  b->add_option("network", bounds.network, "Network JSON file")->required();
  b->add_option("--rules", bounds.rules,
                "Comma list of csb,gcsb3,cor3,cor2,thm2 or all; thm2 adds\n"
                "the generalized-cut parameter search (at most 4 sinks)");
  b->add_option("--cuts", bounds.cuts, "min, or a cut JSON file");
  b->add_option("--out", bounds.format, "Report format")
      ->check(CLI::IsMember({"json"}));
  b->add_option("--output", bounds.output, "Report path, - for stdout");

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "Run a verification campaign");
  v->add_option("--lemma", verify.lemma,
                "1, cor1, 2, multiway, appendixA or appendixC")
      ->required();
  v->add_option("--trials", verify.options.trials, "Number of trials");
  v->add_option("--ground", verify.options.ground, "Ground-set size");
  v->add_option("--sets", verify.options.max_sets, "Largest family size K");
  v->add_option("--seed", verify.options.seed, "Master seed");
  v->add_option("--tolerance", verify.options.tolerance,
                "Absolute tolerance for entropy oracles");
  v->add_option("--threads", verify.options.threads, "Worker threads, 0 = all");
  v->add_flag("--modular", verify.modular, "Use exact modular functions");
  v->add_flag("--exhaustive", verify.exhaustive,
              "appendixA: also sweep every family up to --ground, --sets");

  RegionArgs region;
  CLI::App* r = app.add_subcommand("region", "Project a rate region to 2-D");
  r->add_option("network", region.network, "Network JSON file");
  r->add_option("--symmetric", region.symmetric,
                "K c1..cK: symmetric combination network")
      ->expected(2, 7);
  r->add_option("--rules", region.rules, "Bound rules, as for bounds");
  r->add_option("--cuts", region.cuts, "min, or a cut JSON file");
  r->add_option("--axes", region.axes, "e.g. R0,Rsp or X=R1+R2,R3");
  r->add_option("--emit", region.emit, "Vertices CSV path, - for stdout");
  r->add_option("--compare", region.compare, "cutset or gcsb");

  PaperArgs paper;
  CLI::App* p = app.add_subcommand("paper", "Reproduce a reference system");
  p->add_option("--case", paper.name, "k3-complete, k3-symmetric or fm-derivation")
      ->required();
  p->add_option("--golden-dir", paper.golden_dir, "Golden file directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*b) return RunBounds(bounds);
    if (*v) return RunVerify(verify);
    if (*r) return RunRegion(region);
    if (*p) return RunPaper(paper);
  } catch (const Exit& e) {
    std::cerr << "gcsb: " << e.message << '\n';
    return e.code;
  } catch (const UnboundedError& e) {
    std::cerr << "gcsb: " << e.what() << '\n';
    return kUnbounded;
  } catch (const std::exception& e) {
    std::cerr << "gcsb: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace
}  // namespace gcsb

int main(int argc, char** argv) { return gcsb::Main(argc, argv); }
