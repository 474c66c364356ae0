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

#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <variant>

#include "entpoly/campaign.hpp"
#include "entpoly/discrete.hpp"
#include "entpoly/error.hpp"
#include "entpoly/gaussian.hpp"
#include "entpoly/io.hpp"
#include "entpoly/relations.hpp"
#include "entpoly/table1.hpp"

namespace entpoly::cli {
namespace {

using nlohmann::json;

struct Command {
  const char *name;
  const char *about;
};

constexpr Command kCommands[] = {
    {"entropy", "Entropies of a state (or of its --keep marginal)"},
    {"polygon", "Polygon relation on a pure state, or a campaign over --system"},
    {"subadd", "Subadditivity on a state, or a campaign over --system"},
    {"marginal", "Marginal-problem inequality on a pure state, a --x vector, or a campaign"},
    {"majorize", "Weak majorization of --x by --y, of a CM's local spectrum, or a campaign"},
    {"wstate", "Renyi polygon on W-class states"},
    {"equiv", "Subadditivity vs. polygon slack of the purification"},
    {"theorem2", "Step-by-step Gaussian polygon trace on a CM, or a campaign"},
    {"ghz-demo", "Entropies of the three-qubit GHZ state and its marginals"},
    {"campaign", "Seeded random-state campaign"},
    {"table1", "Reproduce the summary matrix of entropic properties"},
};

void add_common(CLI::App *sub, CliConfig &c) {
  sub->add_option("--spec", c.specs, "Entropy spec, e.g. S, R:p=2, T:q=1.5 (repeatable)");
  sub->add_option("--base", c.base, "Log base for S and R (number or e)");
  sub->add_option("--system", c.system, "qubits:N, qudits:d1,d2,... or gaussian:m1,m2,...[:z=..][:s=..]");
  sub->add_option("--samples", c.samples, "Random states per campaign");
  sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  sub->add_option("--tol", c.tol, "Violation tolerance")->capture_default_str();
  sub->add_option("--out", c.out, "Report path (default stdout)");
  sub->add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--workers", c.workers, "Campaign worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--state", c.state, "State JSON file");
  sub->add_option("--relation", c.relation, "Campaign relation");
  sub->add_option("--injector", c.injector, "none, w-class or renyi-counterexample")->capture_default_str();
  sub->add_option("--max-witnesses", c.max_witnesses, "Witnesses kept per spec")->capture_default_str();
  sub->add_option("--p", c.p, "Renyi order for wstate")->capture_default_str();
  sub->add_option("--n", c.n, "Qubit count for wstate")->capture_default_str();
  sub->add_option("--grid", c.grid, "a1^2 grid for wstate")->delimiter(',');
  sub->add_option("--partition", c.partition, "Modes per party, e.g. 2,1,1");
  sub->add_option("--x", c.x, "Value list")->delimiter(',');
  sub->add_option("--y", c.y, "Value list")->delimiter(',');
  sub->add_option("--keep", c.keep, "Party indices")->delimiter(',');
}

std::string spec_with_base(const std::string &text, const std::optional<std::string> &base) {
  if (!base || text.empty() || text[0] == 'T' || text.find("b=") != std::string::npos) return text;
  return text + ":b=" + *base;
}

std::vector<int> parse_partition(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception &) {
      throw UsageError("malformed --partition '" + text + "'");
    }
  }
  return out;
}

ModePartition partition_for(const CliConfig &c, const CovarianceMatrix &sigma) {
  if (c.partition.empty()) return ModePartition::single_modes(sigma.n_modes());
  ModePartition p(parse_partition(c.partition));
  if (p.total_modes() != sigma.n_modes()) {
    throw UsageError("--partition covers " + std::to_string(p.total_modes()) + " modes, state has " +
                     std::to_string(sigma.n_modes()));
  }
  return p;
}

struct Outcome {
  json report;
  std::string csv;  // set when the report has a CSV form
  std::string text;
  int status = kOk;
};

Outcome campaign_outcome(const CliConfig &c, Relation relation) {
  if (c.system.empty()) throw UsageError(c.command + ": give --state or --system");
  CampaignConfig config;
  try {
    config.system = parse_system(c.system);
    config.injector = parse_injector(c.injector);
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }
  config.relation = relation;
  if (relation_uses_entropy(relation)) config.specs = resolve_specs(c);
  config.samples = c.samples.value_or(1000);
  config.seed = c.seed;
  config.tolerance = c.tol;
  config.workers = c.workers;
  config.max_witnesses = c.max_witnesses;
  try {
    validate(config);
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }
  const CampaignReport r = run_campaign(config);
  return {to_json(r), to_csv(r), {}, r.holds() ? kOk : kViolation};
}

AnyState load_state(const CliConfig &c) { return state_from_json(read_json_file(c.state)); }

DensityMatrix as_density(const AnyState &s) {
  if (const auto *psi = std::get_if<StateVector>(&s)) return DensityMatrix::from_pure(*psi);
  if (const auto *rho = std::get_if<DensityMatrix>(&s)) return *rho;
  throw UsageError("expected a discrete state");
}

Outcome cmd_entropy(const CliConfig &c) {
  if (c.state.empty()) throw UsageError("entropy: --state is required");
  const AnyState s = load_state(c);
  json values = json::object();
  std::string kind;
  for (const auto &e : resolve_specs(c)) {
    double v = 0.0;
    if (const auto *sigma = std::get_if<CovarianceMatrix>(&s)) {
      kind = "gaussian";
      if (c.keep.empty()) {
        v = entropy_of_state(*sigma, e);
      } else {
        v = entropy_of_state(marginal_cm(*sigma, partition_for(c, *sigma), c.keep), e);
      }
    } else {
      kind = "discrete";
      const DensityMatrix rho = as_density(s);
      v = entropy_of_state(c.keep.empty() ? rho : partial_trace(rho, c.keep), e);
    }
    values[e.to_string()] = v;
  }
  return {json{{"command", "entropy"}, {"state_kind", kind}, {"keep", c.keep}, {"entropies", values}}, {}, {}, kOk};
}

Outcome cmd_polygon(const CliConfig &c) {
  if (c.state.empty()) return campaign_outcome(c, Relation::Polygon);
  const AnyState s = load_state(c);
  json results = json::object();
  bool holds = true;
  for (const auto &e : resolve_specs(c)) {
    OneToRestVector v = std::visit(
        [&](const auto &st) -> OneToRestVector {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, CovarianceMatrix>) {
            return one_to_rest(st, partition_for(c, st), e);
          } else {
            return one_to_rest(st, e);
          }
        },
        s);
    const PolygonReport r = polygon_check(v, c.tol);
    holds = holds && r.holds;
    results[e.to_string()] = json{{"values", to_json(v)}, {"polygon", to_json(r)}};
  }
  return {json{{"command", "polygon"}, {"holds", holds}, {"results", results}}, {}, {}, holds ? kOk : kViolation};
}

Outcome cmd_subadd(const CliConfig &c) {
  if (c.state.empty()) return campaign_outcome(c, Relation::Subadditivity);
  const AnyState s = load_state(c);
  json results = json::object();
  bool holds = true;
  for (const auto &e : resolve_specs(c)) {
    SubadditivityReport r;
    if (const auto *sigma = std::get_if<CovarianceMatrix>(&s)) {
      ModePartition p = c.partition.empty() ? ModePartition({1, sigma->n_modes() - 1}) : partition_for(c, *sigma);
      if (p.num_parties() != 2) throw UsageError("subadd: --partition must have two parties");
      r = subadditivity_check(*sigma, p, e, c.tol);
    } else {
      r = subadditivity_check(as_density(s), c.keep.empty() ? std::vector<std::size_t>{0} : c.keep, e, c.tol);
    }
    holds = holds && r.holds;
    results[e.to_string()] = to_json(r);
  }
  return {json{{"command", "subadd"}, {"holds", holds}, {"results", results}}, {}, {}, holds ? kOk : kViolation};
}

Outcome cmd_marginal(const CliConfig &c) {
  const bool gaussian = c.system.rfind("gaussian", 0) == 0;
  PolygonReport r;
  std::string kind;
  if (!c.state.empty()) {
    const AnyState s = load_state(c);
    if (const auto *sigma = std::get_if<CovarianceMatrix>(&s)) {
      if (!validate_cm(sigma->entries()).pure) throw UsageError("marginal: the CM must be pure");
      kind = "gaussian";
      r = gaussian_marginal_check(diagonal_pair_vector(*sigma), c.tol);
    } else if (const auto *psi = std::get_if<StateVector>(&s)) {
      kind = "qubit";
      r = qubit_marginal_check(smallest_marginal_eigenvalues(*psi), c.tol);
    } else {
      throw UsageError("marginal: expected a pure qubit state vector or a pure CM");
    }
  } else if (!c.x.empty()) {
    kind = gaussian ? "gaussian" : "qubit";
    r = gaussian ? gaussian_marginal_check(c.x, c.tol) : qubit_marginal_check(c.x, c.tol);
  } else {
    return campaign_outcome(c, gaussian ? Relation::GaussianMarginal : Relation::QubitMarginal);
  }
  return {json{{"command", "marginal"}, {"kind", kind}, {"holds", r.holds}, {"report", to_json(r)}},
          {}, {},
          r.holds ? kOk : kViolation};
}

Outcome cmd_majorize(const CliConfig &c) {
  std::vector<double> x = c.x, y = c.y;
  if (!c.state.empty()) {
    const AnyState s = load_state(c);
    const auto *sigma = std::get_if<CovarianceMatrix>(&s);
    if (sigma == nullptr) throw UsageError("majorize: expected a CM");
    x = diagonal_pair_vector(*sigma);
    y = symplectic_spectrum(*sigma).values;
  } else if (x.empty() && y.empty()) {
    return campaign_outcome(c, Relation::Majorization);
  }
  if (x.size() != y.size() || x.empty()) throw UsageError("majorize: --x and --y need equal, nonzero lengths");
  const double slack = weak_majorization_slack(x, y);
  const bool holds = slack >= -c.tol;
  return {json{{"command", "majorize"}, {"x", x}, {"y", y}, {"slack", slack}, {"holds", holds}},
          {}, {},
          holds ? kOk : kViolation};
}

Outcome cmd_wstate(const CliConfig &c) {
  const auto grid = c.grid.empty() ? default_wclass_grid() : c.grid;
  double base = 2.0;
  if (c.base) base = EntropySpec::parse("S:b=" + *c.base).log_base();
  if (!(c.p > 2.0)) throw UsageError("wstate: --p must exceed 2");
  if (c.n < 3) throw UsageError("wstate: --n must be at least 3");
  const WStateFindings f = wstate_violation(c.p, c.n, grid, base);
  json report = to_json(f);
  report["command"] = "wstate";
  return {report, {}, {}, f.witness ? kViolation : kOk};
}

Outcome cmd_equiv(const CliConfig &c) {
  if (c.state.empty()) throw UsageError("equiv: --state is required");
  const AnyState s = load_state(c);
  json results = json::object();
  bool equivalent = true;
  for (const auto &e : resolve_specs(c)) {
    EquivalenceReport r;
    if (const auto *sigma = std::get_if<CovarianceMatrix>(&s)) {
      ModePartition p = c.partition.empty() ? ModePartition({1, sigma->n_modes() - 1}) : partition_for(c, *sigma);
      r = purified_equivalence_demo(*sigma, p, e, c.tol);
    } else {
      r = purified_equivalence_demo(as_density(s), e, c.tol);
    }
    equivalent = equivalent && r.equivalent;
    results[e.to_string()] = to_json(r);
  }
  return {json{{"command", "equiv"}, {"equivalent", equivalent}, {"results", results}},
          {}, {},
          equivalent ? kOk : kViolation};
}

Outcome cmd_theorem2(const CliConfig &c) {
  if (c.state.empty()) return campaign_outcome(c, Relation::Theorem2);
  const AnyState s = load_state(c);
  const auto *sigma = std::get_if<CovarianceMatrix>(&s);
  if (sigma == nullptr) throw UsageError("theorem2: expected a CM");
  const ModePartition p = partition_for(c, *sigma);
  json results = json::object();
  bool holds = true;
  for (const auto &e : resolve_specs(c)) {
    const Theorem2Trace t = theorem2_proof_trace(*sigma, p, e, std::max(c.tol, 1e-8));
    holds = holds && t.holds;
    results[e.to_string()] = to_json(t);
  }
  return {json{{"command", "theorem2"}, {"holds", holds}, {"results", results}}, {}, {}, holds ? kOk : kViolation};
}

Outcome cmd_ghz(const CliConfig &c) {
  json results = json::object();
  for (const auto &e : resolve_specs(c)) results[e.to_string()] = to_json(ghz_monogamy_demo(e));
  return {json{{"command", "ghz-demo"}, {"results", results}}, {}, {}, kOk};
}

Outcome cmd_campaign(const CliConfig &c) {
  if (c.relation.empty()) throw UsageError("campaign: --relation is required");
  Relation relation;
  try {
    relation = parse_relation(c.relation);
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }
  return campaign_outcome(c, relation);
}

Outcome cmd_table1(const CliConfig &c) {
  const Table1Report r = reproduce_table1(c.samples.value_or(2000), c.seed, c.workers);
  return {to_json(r), to_csv(r), render_text(r), r.all_match() ? kOk : kViolation};
}

}  // namespace

CliConfig parse_args(int argc, const char *const *argv) {
  CliConfig c;
  CLI::App app{"Entropic polygon relations, subadditivity and marginal inequalities", "entpoly"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");
  for (const auto &cmd : kCommands) {
    CLI::App *sub = app.add_subcommand(cmd.name, cmd.about);
    add_common(sub, c);
    sub->callback([&c, name = std::string(cmd.name)] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    std::ostringstream o, er;
    app.exit(e, o, er);
    throw HelpRequested(o.str());
  } catch (const CLI::CallForAllHelp &e) {
    std::ostringstream o, er;
    app.exit(e, o, er);
    throw HelpRequested(o.str());
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }
  for (const auto &s : c.specs) {
    try {
      EntropySpec::parse(spec_with_base(s, c.base));
    } catch (const std::exception &e) {
      throw UsageError(std::string("--spec: ") + e.what());
    }
  }
  if (c.format == "text" && c.command != "table1") throw UsageError("--format text is only available for table1");
  return c;
}

std::vector<EntropySpec> resolve_specs(const CliConfig &config) {
  std::vector<EntropySpec> out;
  if (config.specs.empty()) {
    out.push_back(EntropySpec::parse(spec_with_base("S", config.base)));
    return out;
  }
  for (const auto &s : config.specs) out.push_back(EntropySpec::parse(spec_with_base(s, config.base)));
  return out;
}

int run(const CliConfig &config, std::ostream &out, std::ostream &err) {
  Outcome o;
  try {
    const std::string &cmd = config.command;
    if (cmd == "entropy") o = cmd_entropy(config);
    else if (cmd == "polygon") o = cmd_polygon(config);
    else if (cmd == "subadd") o = cmd_subadd(config);
    else if (cmd == "marginal") o = cmd_marginal(config);
    else if (cmd == "majorize") o = cmd_majorize(config);
    else if (cmd == "wstate") o = cmd_wstate(config);
    else if (cmd == "equiv") o = cmd_equiv(config);
    else if (cmd == "theorem2") o = cmd_theorem2(config);
    else if (cmd == "ghz-demo") o = cmd_ghz(config);
    else if (cmd == "campaign") o = cmd_campaign(config);
    else if (cmd == "table1") o = cmd_table1(config);
    else throw UsageError("unknown command '" + cmd + "'");

    std::string text;
    if (config.format == "csv") {
      if (o.csv.empty()) throw UsageError("--format csv is only available for campaigns and table1");
      text = o.csv;
    } else if (config.format == "text") {
      text = o.text;
    } else {
      text = dump_sorted(o.report);
    }
    if (config.out.empty()) {
      out << text;
    } else {
      write_text_file(config.out, text);
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return o.status;
}

int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CliConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested &h) {
    out << h.what();
    return kOk;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace entpoly::cli
