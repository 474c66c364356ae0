// Copyright 2026 The entpoly Authors
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

#include "entpoly/table1.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "entpoly/campaign.hpp"
#include "entpoly/rng.hpp"
#include "entpoly/tolerances.hpp"

namespace entpoly {
namespace {

struct CampaignPlan {
  std::string system;
  Relation relation;
  std::vector<EntropySpec> specs;
  Injector injector = Injector::None;
};

struct CellPlan {
  std::string property;
  std::string entropy;
  std::string system;
  std::string condition;
  std::string expected;
  std::vector<CampaignPlan> campaigns;  // empty for cells that are not run
};

std::vector<EntropySpec> renyi_orders(std::initializer_list<double> ps) {
  std::vector<EntropySpec> out;
  for (double p : ps) out.push_back(EntropySpec::renyi(p));
  return out;
}

std::vector<EntropySpec> tsallis_orders(std::initializer_list<double> qs) {
  std::vector<EntropySpec> out;
  for (double q : qs) out.push_back(EntropySpec::tsallis(q));
  return out;
}

std::vector<CellPlan> plan() {
  const auto S = std::vector<EntropySpec>{EntropySpec::von_neumann()};
  const auto R = renyi_orders({1.5, 2.0, 3.0});
  const auto T = tsallis_orders({1.5, 2.0, 3.0});
  const auto sub = Relation::Subadditivity;
  const auto poly = Relation::Polygon;
  const auto inj = Injector::RenyiCounterexample;

  std::vector<CellPlan> cells;
  // Subadditivity.
  cells.push_back({"subadditivity", "S", "qubit", "", "holds", {{"qubits:2", sub, S}}});
  cells.push_back({"subadditivity", "S", "qudit", "", "holds", {{"qudits:3,3", sub, S}}});
  cells.push_back({"subadditivity", "S", "gaussian", "", "holds",
                   {{"gaussian:1,1", sub, S}, {"gaussian:2,1", sub, S}}});
  cells.push_back({"subadditivity", "S", "non-gaussian", "", "holds", {}});
  cells.push_back({"subadditivity", "R", "qubit", "", "violated", {{"qubits:2", sub, R, inj}}});
  cells.push_back({"subadditivity", "R", "qudit", "", "violated", {{"qudits:3,3", sub, R, inj}}});
  cells.push_back({"subadditivity", "R", "gaussian", "", "holds",
                   {{"gaussian:1,1", sub, R}, {"gaussian:2,1", sub, R}}});
  cells.push_back({"subadditivity", "R", "non-gaussian", "", "violated", {}});
  cells.push_back({"subadditivity", "T", "qubit", "", "holds", {{"qubits:2", sub, T}}});
  cells.push_back({"subadditivity", "T", "qudit", "", "holds", {{"qudits:3,3", sub, T}}});
  cells.push_back({"subadditivity", "T", "gaussian", "", "holds",
                   {{"gaussian:1,1", sub, T}, {"gaussian:2,1", sub, T}}});
  cells.push_back({"subadditivity", "T", "non-gaussian", "", "open", {}});
  // Polygon.
  cells.push_back({"polygon", "S", "qubit", "", "holds", {{"qubits:3", poly, S}, {"qubits:4", poly, S}}});
  cells.push_back({"polygon", "S", "qudit", "", "holds", {{"qudits:3,3,3", poly, S, inj}}});
  cells.push_back({"polygon", "S", "gaussian", "", "holds",
                   {{"gaussian:1,1,1", poly, S}, {"gaussian:2,1,1", poly, S}}});
  cells.push_back({"polygon", "S", "non-gaussian", "", "holds", {}});
  cells.push_back({"polygon", "R", "qubit", "p<=2", "holds",
                   {{"qubits:3", poly, renyi_orders({1.5, 2.0})}, {"qubits:4", poly, renyi_orders({1.5, 2.0})}}});
  cells.push_back({"polygon", "R", "qubit", "p>2", "violated",
                   {{"qubits:3", poly, renyi_orders({3.0}), Injector::WClass}}});
  cells.push_back({"polygon", "R", "qudit", "", "violated", {{"qudits:3,3,3", poly, R, inj}}});
  cells.push_back({"polygon", "R", "gaussian", "", "holds",
                   {{"gaussian:1,1,1", poly, R}, {"gaussian:2,1,1", poly, R}}});
  cells.push_back({"polygon", "R", "non-gaussian", "", "violated", {}});
  cells.push_back({"polygon", "T", "qubit", "", "holds", {{"qubits:3", poly, T}, {"qubits:4", poly, T}}});
  cells.push_back({"polygon", "T", "qudit", "", "holds", {{"qudits:3,3,3", poly, T, inj}}});
  cells.push_back({"polygon", "T", "gaussian", "", "holds",
                   {{"gaussian:1,1,1", poly, T}, {"gaussian:2,1,1", poly, T}}});
  cells.push_back({"polygon", "T", "non-gaussian", "", "open", {}});
  return cells;
}

std::string shortest(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

const char *symbol(const std::string &verdict) {
  if (verdict == "holds") return "✓";
  if (verdict == "violated") return "✗";
  return "?";
}

}  // namespace

bool Table1Report::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const Table1Cell &c) { return !c.run || c.matches; });
}

Table1Report reproduce_table1(std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  const double witness_tol = default_tolerances().witness;
  Table1Report report;
  report.samples = samples;
  report.seed = seed;
  std::uint64_t campaign_index = 0;
  for (const auto &cp : plan()) {
    Table1Cell cell;
    cell.property = cp.property;
    cell.entropy = cp.entropy;
    cell.system = cp.system;
    cell.condition = cp.condition;
    cell.expected = cp.expected;
    if (cp.campaigns.empty()) {
      cell.observed = cp.expected == "open" ? "open" : "cited";
      cell.matches = true;
      report.cells.push_back(std::move(cell));
      continue;
    }
    cell.run = true;
    std::uint64_t violations = 0;
    bool witnessed = false;
    for (const auto &plan_c : cp.campaigns) {
      CampaignConfig config;
      config.system = parse_system(plan_c.system);
      config.relation = plan_c.relation;
      config.specs = plan_c.specs;
      config.samples = samples;
      config.seed = derive_seed(seed, campaign_index++);
      config.workers = workers;
      config.injector = plan_c.injector;
      config.max_witnesses = 1;
      const CampaignReport r = run_campaign(config);
      for (const auto &o : r.outcomes) {
        violations += o.violations;
        if (o.violations > 0 && o.worst_slack < -witness_tol) witnessed = true;
        cell.campaigns.push_back(Table1Campaign{to_string(config.system), to_string(config.relation), o.spec,
                                                to_string(config.injector), o.checked, o.violations,
                                                o.worst_slack});
      }
    }
    if (cp.expected == "violated") {
      cell.observed = witnessed ? "violated" : "holds";
    } else {
      cell.observed = violations == 0 ? "holds" : "violated";
    }
    cell.matches = cell.observed == cell.expected;
    report.cells.push_back(std::move(cell));
  }
  return report;
}

nlohmann::json to_json(const Table1Report &report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto &c : report.cells) {
    nlohmann::json campaigns = nlohmann::json::array();
    for (const auto &k : c.campaigns) {
      campaigns.push_back({{"system", k.system},
                           {"relation", k.relation},
                           {"spec", k.spec},
                           {"injector", k.injector},
                           {"checked", k.checked},
                           {"violations", k.violations},
                           {"worst_slack", k.worst_slack}});
    }
    cells.push_back({{"property", c.property},
                     {"entropy", c.entropy},
                     {"system", c.system},
                     {"condition", c.condition},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"run", c.run},
                     {"matches", c.matches},
                     {"campaigns", std::move(campaigns)}});
  }
  return {{"samples", report.samples},
          {"seed", report.seed},
          {"all_match", report.all_match()},
          {"cells", std::move(cells)}};
}

std::string to_csv(const Table1Report &report) {
  std::ostringstream out;
  out << "property,entropy,system,condition,expected,observed,match,checked,violations,worst_slack\n";
  for (const auto &c : report.cells) {
    std::uint64_t checked = 0, violations = 0;
    double worst = INFINITY;
    for (const auto &k : c.campaigns) {
      checked += k.checked;
      violations += k.violations;
      worst = std::min(worst, k.worst_slack);
    }
    out << c.property << ',' << c.entropy << ',' << c.system << ',' << c.condition << ',' << c.expected
        << ',' << c.observed << ',' << (c.matches ? "yes" : "no") << ',' << checked << ',' << violations
        << ',' << (c.run ? shortest(worst) : "") << '\n';
  }
  return out.str();
}

std::string render_text(const Table1Report &report) {
  static const char *kSystems[] = {"qubit", "qudit", "gaussian", "non-gaussian"};
  std::map<std::string, std::vector<const Table1Cell *>> grid;
  std::vector<std::string> rows;
  for (const auto &c : report.cells) {
    const std::string key = c.property + " " + c.entropy;
    if (!grid.count(key)) rows.push_back(key);
    grid[key].push_back(&c);
  }
  std::ostringstream out;
  out << "samples=" << report.samples << " seed=" << report.seed << "\n";
  auto pad = [](std::string s, std::size_t w) {
    // Symbols are 3 bytes wide in UTF-8 but one column on screen.
    std::size_t cols = 0;
    for (unsigned char ch : s) cols += (ch & 0xC0) != 0x80;
    if (cols < w) s.append(w - cols, ' ');
    return s;
  };
  out << pad("", 18);
  for (const char *sys : kSystems) out << pad(sys, 26);
  out << "\n";
  for (const auto &key : rows) {
    out << pad(key, 18);
    for (const char *sys : kSystems) {
      std::string text;
      for (const auto *c : grid[key]) {
        if (c->system != sys) continue;
        if (!text.empty()) text += " ";
        text += symbol(c->expected);
        if (!c->condition.empty()) text += "(" + c->condition + ")";
        if (!c->run) {
          text += c->observed == "open" ? " open" : " cited";
        } else {
          text += c->matches ? " ok" : " MISMATCH";
        }
      }
      out << pad(text, 26);
    }
    out << "\n";
  }
  out << (report.all_match() ? "all implemented cells match\n" : "some cells do not match\n");
  return out.str();
}

}  // namespace entpoly
