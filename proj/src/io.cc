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

#include "gcsb/io.h"

#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "gcsb/errors.h"
#include "json.hpp"

namespace gcsb {
namespace {

using Json = nlohmann::ordered_json;

Json Parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

void RequireKeys(const Json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw SchemaError("unknown key '" + key + "' in " + where);
    }
  }
  for (const std::string& key : allowed) {
    if (!obj.contains(key)) {
      throw SchemaError("missing key '" + key + "' in " + where);
    }
  }
}

std::string String(const Json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> Strings(const Json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : v) out.push_back(String(e, where + " entry"));
  return out;
}

Capacity ParseCapacity(const Json& v, const std::string& where) {
  const std::string text = String(v, where);
  if (text == "inf") return std::nullopt;
  try {
    return ParseRational(text);
  } catch (const Error& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

}  // namespace

NetworkSpec ParseNetworkDocument(std::string_view text) {
  const Json doc = Parse(text);
  RequireKeys(doc, {"nodes", "arcs", "source", "sinks", "messages", "demands"},
              "network");
  NetworkSpec spec;
  spec.nodes = Strings(doc["nodes"], "nodes");
  if (!doc["arcs"].is_array()) throw SchemaError("arcs must be an array");
  for (const Json& a : doc["arcs"]) {
    RequireKeys(a, {"from", "to", "capacity"}, "arc");
    spec.arcs.push_back({String(a["from"], "arc from"),
                         String(a["to"], "arc to"),
                         ParseCapacity(a["capacity"], "arc capacity")});
  }
  spec.source = String(doc["source"], "source");
  spec.sinks = Strings(doc["sinks"], "sinks");
  spec.messages = Strings(doc["messages"], "messages");
  const Json& demands = doc["demands"];
  if (!demands.is_object()) throw SchemaError("demands must be an object");
  for (const auto& [sink, list] : demands.items()) {
    bool known = false;
    for (const std::string& t : spec.sinks) known = known || t == sink;
    if (!known) throw SchemaError("demands name unknown sink '" + sink + "'");
  }
  for (const std::string& t : spec.sinks) {
    if (!demands.contains(t)) throw SchemaError("no demands for sink '" + t + "'");
    spec.demands.push_back(Strings(demands[t], "demands of " + t));
  }
  return spec;
}

BroadcastNetwork LoadNetwork(std::string_view text) {
  const NetworkSpec spec = ParseNetworkDocument(text);
  try {
    return BroadcastNetwork(spec);
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid network: ") + e.what());
  }
}

std::string NetworkDocumentJson(const NetworkSpec& spec) {
  Json doc;
  doc["nodes"] = spec.nodes;
  doc["arcs"] = Json::array();
  for (const ArcSpec& a : spec.arcs) {
    doc["arcs"].push_back(
        {{"from", a.from},
         {"to", a.to},
         {"capacity", a.capacity ? ToString(*a.capacity) : "inf"}});
  }
  doc["source"] = spec.source;
  doc["sinks"] = spec.sinks;
  doc["messages"] = spec.messages;
  doc["demands"] = Json::object();
  for (std::size_t k = 0; k < spec.sinks.size(); ++k) {
    doc["demands"][spec.sinks[k]] = spec.demands.at(k);
  }
  return doc.dump(2) + "\n";
}

std::vector<Cut> ParseCutDocument(const BroadcastNetwork& net,
                                  std::string_view text) {
  const Json doc = Parse(text);
  if (!doc.is_object()) throw SchemaError("cut file must be an object");
  const std::vector<std::string>& sinks = net.spec().sinks;
  std::set<std::string> allowed(sinks.begin(), sinks.end());
  RequireKeys(doc, allowed, "cut file");
  std::vector<Cut> cuts;
  for (int k = 1; k <= net.num_sinks(); ++k) {
    const std::string& t = sinks[k - 1];
    std::vector<int> members;
    for (const std::string& label : Strings(doc[t], "cut of " + t)) {
      const std::optional<int> e = net.cut_ground()->IndexOf(label);
      if (!e) {
        bool unbounded = false;
        for (const Arc& a : net.arcs()) unbounded = unbounded || a.label == label;
        throw SchemaError(unbounded ? "arc " + label + " is unbounded"
                                    : "unknown arc '" + label + "'");
      }
      members.push_back(*e);
    }
    cuts.emplace_back(net, ElementSet::Of(net.cut_ground(), members), k);
  }
  return cuts;
}

std::string CutDocumentJson(const BroadcastNetwork& net,
                            const std::vector<Cut>& cuts) {
  Json doc = Json::object();
  for (const Cut& c : cuts) {
    std::vector<std::string> labels;
    for (int e : c.arcs().members()) labels.push_back(net.cut_ground()->Label(e));
    doc[net.spec().sinks.at(c.sink() - 1)] = labels;
  }
  return doc.dump(2) + "\n";
}

std::vector<InstantiatedInequality> CanonicalRows(
    const std::vector<InstantiatedInequality>& rows) {
  std::vector<InstantiatedInequality> out;
  for (const InstantiatedInequality& row : rows) {
    InstantiatedInequality c = row.Canonical();
    bool seen = false;
    for (const InstantiatedInequality& o : out) {
      seen = seen || (o.rate_coeffs == c.rate_coeffs &&
                      o.capacity_coeffs == c.capacity_coeffs);
    }
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

std::string BoundsReportJson(const std::vector<InstantiatedInequality>& rows) {
  Json doc = Json::array();
  for (const InstantiatedInequality& row : rows) {
    Json item;
    item["provenance"] = row.provenance;
    Json rate = Json::object();
    for (std::size_t m = 0; m < row.rate_coeffs.size(); ++m) {
      if (row.rate_coeffs[m] != 0) {
        rate[row.messages->Label(static_cast<int>(m))] =
            ToString(row.rate_coeffs[m]);
      }
    }
    Json cap = Json::object();
    for (std::size_t a = 0; a < row.capacity_coeffs.size(); ++a) {
      if (row.capacity_coeffs[a] != 0) {
        cap[row.arcs->Label(static_cast<int>(a))] =
            ToString(row.capacity_coeffs[a]);
      }
    }
    item["rate_coeffs"] = std::move(rate);
    item["capacity_coeffs"] = std::move(cap);
    if (row.rhs_value) item["rhs_value"] = ToString(*row.rhs_value);
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string RowKey(const std::map<std::string, Rational>& lhs,
                   const Rational& rhs) {
  std::vector<Rational> values;
  for (const auto& [var, c] : lhs) values.push_back(c);
  values.push_back(rhs);
  ScaleToCoprimeIntegers(values);
  std::string key;
  std::size_t i = 0;
  for (const auto& [var, c] : lhs) key += var + ":" + ToString(values[i++]) + " ";
  return key + "<= " + ToString(values.back());
}

// Adds sign * (parsed side) into `lhs` / `rhs` of sum(lhs) <= rhs.
void ParseSide(std::string_view side, int sign, const std::string& line,
               std::map<std::string, Rational>& lhs, Rational& rhs) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < side.size() && std::isspace(static_cast<unsigned char>(side[i]))) ++i;
  };
  auto bad = [&] { return SchemaError("cannot parse row '" + line + "'"); };
  bool first = true;
  skip();
  if (i == side.size()) throw bad();
  while (i < side.size()) {
    int term_sign = 1;
    if (side[i] == '+' || side[i] == '-') {
      term_sign = side[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw bad();
    }
    first = false;
    const std::size_t num_start = i;
    while (i < side.size() &&
           (std::isdigit(static_cast<unsigned char>(side[i])) ||
            side[i] == '/' || side[i] == '.')) {
      ++i;
    }
    Rational coeff = 1;
    const bool has_number = i > num_start;
    if (has_number) {
      try {
        coeff = ParseRational(side.substr(num_start, i - num_start));
      } catch (const Error&) {
        throw bad();
      }
    }
    skip();
    if (i < side.size() && side[i] == '*') {
      ++i;
      skip();
    }
    const std::size_t var_start = i;
    if (i < side.size() && std::isalpha(static_cast<unsigned char>(side[i]))) {
      while (i < side.size() && side[i] != '+' && side[i] != '-' &&
             !std::isspace(static_cast<unsigned char>(side[i]))) {
        ++i;
      }
    }
    const Rational value = coeff * term_sign * sign;
    if (i > var_start) {
      lhs[std::string(side.substr(var_start, i - var_start))] += value;
    } else if (has_number) {
      rhs -= value;
    } else {
      throw bad();
    }
    skip();
  }
}

}  // namespace

std::vector<KeyedRow> SystemRows(const LinearSystem& sys,
                                 const std::set<std::string>& rhs_vars) {
  std::vector<KeyedRow> out;
  for (const LinearRow& row : sys.rows()) {
    std::map<std::string, Rational> lhs;
    for (int v = 0; v < sys.num_vars(); ++v) {
      if (row.coeffs[v] != 0) lhs[sys.vars()[v]] = row.coeffs[v];
    }
    out.push_back({RowKey(lhs, row.rhs), sys.RowString(row, rhs_vars)});
  }
  return out;
}

std::vector<KeyedRow> ParseRowFile(std::string_view text) {
  std::vector<KeyedRow> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    line = line.substr(start);
    const std::size_t le = line.find("<=");
    if (le == std::string::npos || line.find("<=", le + 2) != std::string::npos) {
      throw SchemaError("row without a single '<=': '" + line + "'");
    }
    std::map<std::string, Rational> lhs;
    Rational rhs = 0;
    ParseSide(std::string_view(line).substr(0, le), 1, line, lhs, rhs);
    ParseSide(std::string_view(line).substr(le + 2), -1, line, lhs, rhs);
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    out.push_back({RowKey(lhs, rhs), line});
  }
  return out;
}

RowDiff DiffRows(const std::vector<KeyedRow>& expected,
                 const std::vector<KeyedRow>& actual) {
  std::multiset<std::string> want;
  std::multiset<std::string> have;
  for (const KeyedRow& r : expected) want.insert(r.key);
  for (const KeyedRow& r : actual) have.insert(r.key);
  RowDiff diff;
  for (const KeyedRow& r : expected) {
    const auto it = have.find(r.key);
    if (it == have.end()) {
      diff.missing.push_back(r.text);
    } else {
      have.erase(it);
    }
  }
  for (const KeyedRow& r : actual) {
    const auto it = want.find(r.key);
    if (it == want.end()) {
      diff.extra.push_back(r.text);
    } else {
      want.erase(it);
    }
  }
  return diff;
}

}  // namespace gcsb
