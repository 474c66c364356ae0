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

#include "entpoly/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "entpoly/discrete.hpp"
#include "entpoly/error.hpp"
#include "entpoly/gaussian.hpp"
#include "entpoly/io.hpp"
#include "entpoly/relations.hpp"
#include "entpoly/rng.hpp"

namespace entpoly {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_value(std::string_view text, std::string_view context) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("malformed number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<int> out;
  for (auto field : split(text, ',')) out.push_back(parse_value<int>(field, context));
  return out;
}

std::string shortest(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<int> qubit_dims(int n) { return std::vector<int>(static_cast<std::size_t>(n), 2); }

DimsLayout discrete_layout(const SystemSpec &system) {
  if (const auto *q = std::get_if<QubitSystem>(&system)) return DimsLayout(qubit_dims(q->n));
  return DimsLayout(std::get<QuditSystem>(system).dims);
}

// Per-sample outcome: one slack per spec slot, plus the serialized state when
// any slot is a violation.
struct SampleResult {
  std::vector<double> slacks;
  json state;
};

std::vector<double> single_party_spectrum(const StateVector &psi, std::size_t party) {
  return spectrum(partial_trace(psi, {party})).values;
}

SampleResult polygon_discrete(const StateVector &psi, const std::vector<EntropySpec> &specs) {
  std::vector<std::vector<double>> spectra;
  for (std::size_t i = 0; i < psi.layout().num_parties(); ++i) {
    spectra.push_back(single_party_spectrum(psi, i));
  }
  SampleResult out;
  for (const auto &e : specs) {
    std::vector<double> values;
    for (const auto &sp : spectra) values.push_back(entropy_discrete(sp, e));
    out.slacks.push_back(polygon_slacks(values, 0.0).min_slack);
  }
  return out;
}

SampleResult subadditivity_discrete(const DensityMatrix &rho, const std::vector<EntropySpec> &specs) {
  std::vector<std::size_t> rest;
  for (std::size_t p = 1; p < rho.layout().num_parties(); ++p) rest.push_back(p);
  const auto joint = spectrum(rho).values;
  const auto a = spectrum(partial_trace(rho, {0})).values;
  const auto b = spectrum(partial_trace(rho, rest)).values;
  SampleResult out;
  for (const auto &e : specs) {
    out.slacks.push_back(entropy_discrete(a, e) + entropy_discrete(b, e) - entropy_discrete(joint, e));
  }
  return out;
}

SampleResult polygon_gaussian(const CovarianceMatrix &sigma, const ModePartition &partition,
                              const std::vector<EntropySpec> &specs) {
  std::vector<SymplecticSpectrum> spectra;
  for (std::size_t i = 0; i < partition.num_parties(); ++i) {
    spectra.push_back(symplectic_spectrum(marginal_cm(sigma, partition, {i})));
  }
  SampleResult out;
  for (const auto &e : specs) {
    std::vector<double> values;
    for (const auto &sp : spectra) values.push_back(entropy_gaussian(sp, e));
    out.slacks.push_back(polygon_slacks(values, 0.0).min_slack);
  }
  return out;
}

SampleResult subadditivity_gaussian(const CovarianceMatrix &sigma, const ModePartition &partition,
                                    const std::vector<EntropySpec> &specs) {
  const auto joint = symplectic_spectrum(sigma);
  const auto a = symplectic_spectrum(marginal_cm(sigma, partition, {0}));
  const auto b = symplectic_spectrum(marginal_cm(sigma, partition, {1}));
  SampleResult out;
  for (const auto &e : specs) {
    out.slacks.push_back(entropy_gaussian(a, e) + entropy_gaussian(b, e) - entropy_gaussian(joint, e));
  }
  return out;
}

bool any_violation(const SampleResult &r, double tol) {
  return std::any_of(r.slacks.begin(), r.slacks.end(), [tol](double s) { return s < -tol; });
}

SampleResult evaluate_sample(const CampaignConfig &config, Rng &rng) {
  const auto &specs = config.specs;
  const double tol = config.tolerance;
  SampleResult out;
  if (const auto *g = std::get_if<GaussianSystem>(&config.system)) {
    const ModePartition partition(g->partition);
    const int n = partition.total_modes();
    const bool mixed = config.relation == Relation::Subadditivity ||
                       config.relation == Relation::Majorization;
    const CovarianceMatrix sigma =
        random_cm(n, mixed ? CmKind::Mixed : CmKind::Pure, rng, g->z_max, g->s_max);
    switch (config.relation) {
      case Relation::Polygon:
        out = polygon_gaussian(sigma, partition, specs);
        break;
      case Relation::Subadditivity:
        out = subadditivity_gaussian(sigma, partition, specs);
        break;
      case Relation::GaussianMarginal:
        out.slacks.push_back(gaussian_marginal_check(diagonal_pair_vector(sigma), 0.0).min_slack);
        break;
      case Relation::Majorization:
        out.slacks.push_back(
            weak_majorization_slack(diagonal_pair_vector(sigma), symplectic_spectrum(sigma).values));
        break;
      case Relation::Theorem2:
        for (const auto &e : specs) {
          out.slacks.push_back(theorem2_proof_trace(sigma, partition, e, tol).min_slack);
        }
        break;
      case Relation::QubitMarginal:
        throw InvalidArgument("qubit-marginal needs a qubit system");
    }
    if (any_violation(out, tol)) out.state = to_json(sigma);
    return out;
  }

  const DimsLayout layout = discrete_layout(config.system);
  switch (config.relation) {
    case Relation::Polygon: {
      const StateVector psi = haar_random_pure(layout, rng);
      out = polygon_discrete(psi, specs);
      if (any_violation(out, tol)) out.state = to_json(psi);
      break;
    }
    case Relation::Subadditivity: {
      const int dim = static_cast<int>(layout.total_dim());
      const int rank = 1 + static_cast<int>(uniform01(rng) * dim);
      const DensityMatrix rho = random_density(layout, std::min(rank, dim), rng);
      out = subadditivity_discrete(rho, specs);
      if (any_violation(out, tol)) out.state = to_json(rho);
      break;
    }
    case Relation::QubitMarginal: {
      const StateVector psi = haar_random_pure(layout, rng);
      out.slacks.push_back(qubit_marginal_check(smallest_marginal_eigenvalues(psi), 0.0).min_slack);
      if (any_violation(out, tol)) out.state = to_json(psi);
      break;
    }
    default:
      throw InvalidArgument(to_string(config.relation) + " needs a Gaussian system");
  }
  return out;
}

struct Injected {
  std::string origin;
  SampleResult result;
};

std::vector<Injected> injected_samples(const CampaignConfig &config) {
  std::vector<Injected> out;
  if (config.injector == Injector::WClass) {
    const int n = std::get<QubitSystem>(config.system).n;
    for (double a1sq : default_wclass_grid()) {
      std::vector<double> amps{std::sqrt(a1sq)};
      const double rest = (1.0 - a1sq) / (n - 1);
      for (int k = 1; k < n; ++k) amps.push_back(std::sqrt(rest));
      double norm2 = 0.0;
      for (double a : amps) norm2 += a * a;
      for (double &a : amps) a /= std::sqrt(norm2);
      const StateVector psi = w_class_state(amps);
      SampleResult r = polygon_discrete(psi, config.specs);
      r.state = to_json(psi);
      out.push_back({"w-class a1^2=" + shortest(a1sq), std::move(r)});
    }
  } else if (config.injector == Injector::RenyiCounterexample) {
    if (config.relation == Relation::Subadditivity) {
      const DensityMatrix rho = renyi_counterexample_state(discrete_layout(config.system));
      SampleResult r = subadditivity_discrete(rho, config.specs);
      r.state = to_json(rho);
      out.push_back({"diag(0.5,0.3,0.2,0)", std::move(r)});
    } else {
      const StateVector psi = purify(renyi_counterexample_state(DimsLayout({2, 2})));
      SampleResult r = polygon_discrete(psi, config.specs);
      r.state = to_json(psi);
      out.push_back({"purified diag(0.5,0.3,0.2,0)", std::move(r)});
    }
  }
  return out;
}

std::size_t slot_count(const CampaignConfig &config) {
  return relation_uses_entropy(config.relation) ? config.specs.size() : 1;
}

}  // namespace

SystemSpec parse_system(std::string_view text) {
  const auto fields = split(text, ':');
  if (fields.size() < 2) {
    throw InvalidArgument("system '" + std::string(text) +
                          "' must look like qubits:N, qudits:d1,d2,... or gaussian:m1,m2,...");
  }
  const auto kind = fields[0];
  if (kind == "qubits") {
    if (fields.size() != 2) throw InvalidArgument("qubits system takes a single count");
    return QubitSystem{parse_value<int>(fields[1], text)};
  }
  if (kind == "qudits") {
    if (fields.size() != 2) throw InvalidArgument("qudits system takes one dimension list");
    return QuditSystem{parse_int_list(fields[1], text)};
  }
  if (kind == "gaussian") {
    GaussianSystem g;
    g.partition = parse_int_list(fields[1], text);
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const auto f = fields[i];
      if (f.size() < 3 || f[1] != '=') throw InvalidArgument("malformed option '" + std::string(f) + "'");
      const double v = parse_value<double>(f.substr(2), text);
      if (f[0] == 'z') {
        g.z_max = v;
      } else if (f[0] == 's') {
        g.s_max = v;
      } else {
        throw InvalidArgument("unknown gaussian option '" + std::string(f) + "'");
      }
    }
    return g;
  }
  throw InvalidArgument("unknown system kind '" + std::string(kind) + "'");
}

std::string to_string(const SystemSpec &system) {
  auto join = [](const std::vector<int> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return std::visit(Overloaded{
                        [](const QubitSystem &q) { return "qubits:" + std::to_string(q.n); },
                        [&](const QuditSystem &q) { return "qudits:" + join(q.dims); },
                        [&](const GaussianSystem &g) {
                          return "gaussian:" + join(g.partition) + ":z=" + shortest(g.z_max) +
                                 ":s=" + shortest(g.s_max);
                        },
                    },
                    system);
}

Relation parse_relation(std::string_view text) {
  if (text == "polygon") return Relation::Polygon;
  if (text == "subadditivity" || text == "subadd") return Relation::Subadditivity;
  if (text == "qubit-marginal") return Relation::QubitMarginal;
  if (text == "gaussian-marginal") return Relation::GaussianMarginal;
  if (text == "majorization" || text == "majorize") return Relation::Majorization;
  if (text == "theorem2") return Relation::Theorem2;
  throw InvalidArgument("unknown relation '" + std::string(text) + "'");
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::Polygon: return "polygon";
    case Relation::Subadditivity: return "subadditivity";
    case Relation::QubitMarginal: return "qubit-marginal";
    case Relation::GaussianMarginal: return "gaussian-marginal";
    case Relation::Majorization: return "majorization";
    case Relation::Theorem2: return "theorem2";
  }
  return {};
}

bool relation_uses_entropy(Relation relation) {
  return relation == Relation::Polygon || relation == Relation::Subadditivity ||
         relation == Relation::Theorem2;
}

Injector parse_injector(std::string_view text) {
  if (text == "none") return Injector::None;
  if (text == "w-class") return Injector::WClass;
  if (text == "renyi-counterexample") return Injector::RenyiCounterexample;
  throw InvalidArgument("unknown injector '" + std::string(text) + "'");
}

std::string to_string(Injector injector) {
  switch (injector) {
    case Injector::None: return "none";
    case Injector::WClass: return "w-class";
    case Injector::RenyiCounterexample: return "renyi-counterexample";
  }
  return {};
}

std::uint64_t CampaignReport::total_violations() const {
  std::uint64_t total = 0;
  for (const auto &o : outcomes) total += o.violations;
  return total;
}

void validate(const CampaignConfig &config) {
  if (config.samples < 1) throw InvalidArgument("campaign: sample count must be at least 1");
  if (config.workers < 1) throw InvalidArgument("campaign: need at least one worker");
  if (!(config.tolerance >= 0.0)) throw InvalidArgument("campaign: tolerance must be nonnegative");
  if (relation_uses_entropy(config.relation) && config.specs.empty()) {
    throw InvalidArgument("campaign: " + to_string(config.relation) + " needs at least one entropy spec");
  }
  const Relation rel = config.relation;
  std::visit(Overloaded{
                 [&](const QubitSystem &q) {
                   if (q.n < 2) throw InvalidArgument("campaign: need at least 2 qubits");
                   if (rel == Relation::GaussianMarginal || rel == Relation::Majorization ||
                       rel == Relation::Theorem2) {
                     throw InvalidArgument("campaign: " + to_string(rel) + " needs a Gaussian system");
                   }
                 },
                 [&](const QuditSystem &q) {
                   if (q.dims.size() < 2) throw InvalidArgument("campaign: need at least 2 parties");
                   for (int d : q.dims) {
                     if (d < 2) throw InvalidArgument("campaign: local dimensions must be >= 2");
                   }
                   if (rel != Relation::Polygon && rel != Relation::Subadditivity) {
                     throw InvalidArgument("campaign: " + to_string(rel) + " is not defined on qudits");
                   }
                 },
                 [&](const GaussianSystem &g) {
                   const ModePartition partition(g.partition);
                   if (!(g.z_max > 0.0) || !(g.s_max >= 1.0)) {
                     throw InvalidArgument("campaign: need z_max > 0 and s_max >= 1");
                   }
                   if (rel == Relation::QubitMarginal) {
                     throw InvalidArgument("campaign: qubit-marginal needs a qubit system");
                   }
                   if (rel == Relation::Subadditivity && partition.num_parties() != 2) {
                     throw InvalidArgument("campaign: Gaussian subadditivity needs exactly 2 parties");
                   }
                   if ((rel == Relation::Polygon || rel == Relation::Theorem2 ||
                        rel == Relation::GaussianMarginal) &&
                       partition.num_parties() < 2) {
                     throw InvalidArgument("campaign: need at least 2 parties");
                   }
                   if (rel == Relation::GaussianMarginal) {
                     for (int m : g.partition) {
                       if (m != 1) throw InvalidArgument("campaign: gaussian-marginal needs single-mode parties");
                     }
                   }
                 },
             },
             config.system);
  if (config.injector == Injector::WClass) {
    const auto *q = std::get_if<QubitSystem>(&config.system);
    if (rel != Relation::Polygon || q == nullptr || q->n < 3) {
      throw InvalidArgument("campaign: the w-class injector needs a polygon campaign on >= 3 qubits");
    }
  }
  if (config.injector == Injector::RenyiCounterexample) {
    if (std::holds_alternative<GaussianSystem>(config.system) ||
        (rel != Relation::Polygon && rel != Relation::Subadditivity)) {
      throw InvalidArgument(
          "campaign: the renyi-counterexample injector needs a discrete polygon or subadditivity campaign");
    }
  }
}

CampaignReport run_campaign(const CampaignConfig &config) {
  validate(config);
  const std::size_t slots = slot_count(config);
  const std::uint64_t n = config.samples;

  std::vector<SampleResult> results(n);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(config.workers, std::max<std::uint64_t>(n, 1)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < n; i += workers) {
        Rng rng(derive_seed(config.seed, i));
        results[i] = evaluate_sample(config, rng);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto &err : errors) {
    if (err) std::rethrow_exception(err);
  }

  CampaignReport report;
  report.config = config;
  report.outcomes.resize(slots);
  for (std::size_t k = 0; k < slots; ++k) {
    report.outcomes[k].spec = relation_uses_entropy(config.relation) ? config.specs[k].to_string() : "none";
    report.outcomes[k].worst_slack = std::numeric_limits<double>::infinity();
  }
  auto absorb = [&](const SampleResult &r, std::int64_t sample, std::uint64_t seed,
                    const std::string &origin) {
    for (std::size_t k = 0; k < slots; ++k) {
      auto &o = report.outcomes[k];
      const double slack = r.slacks[k];
      ++o.checked;
      o.worst_slack = std::min(o.worst_slack, slack);
      if (slack < -config.tolerance) {
        ++o.violations;
        if (o.witnesses.size() < config.max_witnesses) {
          o.witnesses.push_back(Witness{sample, seed, origin, slack, r.state});
        }
      }
    }
  };
  for (const auto &inj : injected_samples(config)) absorb(inj.result, -1, config.seed, inj.origin);
  for (std::uint64_t i = 0; i < n; ++i) {
    absorb(results[i], static_cast<std::int64_t>(i), derive_seed(config.seed, i), "random");
  }
  return report;
}

json to_json(const CampaignConfig &config) {
  json specs = json::array();
  for (const auto &e : config.specs) specs.push_back(e.to_string());
  return json{{"system", to_string(config.system)},
              {"relation", to_string(config.relation)},
              {"specs", std::move(specs)},
              {"samples", config.samples},
              {"seed", config.seed},
              {"tolerance", config.tolerance},
              {"injector", to_string(config.injector)},
              {"max_witnesses", config.max_witnesses}};
}

json to_json(const CampaignReport &report) {
  json results = json::object();
  for (const auto &o : report.outcomes) {
    json witnesses = json::array();
    for (const auto &w : o.witnesses) {
      witnesses.push_back(json{{"sample", w.sample},
                               {"seed", w.seed},
                               {"origin", w.origin},
                               {"slack", w.slack},
                               {"state", w.state}});
    }
    results[o.spec] = json{{"checked", o.checked},
                           {"violations", o.violations},
                           {"worst_slack", std::isfinite(o.worst_slack) ? json(o.worst_slack) : json(nullptr)},
                           {"witnesses", std::move(witnesses)}};
  }
  return json{{"config", to_json(report.config)},
              {"results", std::move(results)},
              {"holds", report.holds()}};
}

std::string to_csv(const CampaignReport &report) {
  std::ostringstream out;
  out << "spec,checked,violations,worst_slack\n";
  for (const auto &o : report.outcomes) {
    out << o.spec << ',' << o.checked << ',' << o.violations << ',' << shortest(o.worst_slack) << '\n';
  }
  return out.str();
}

}  // namespace entpoly
