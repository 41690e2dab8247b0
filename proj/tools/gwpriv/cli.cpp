// Copyright 2026 The gwpriv Authors
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

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gwpriv/codec_sim.hpp"
#include "gwpriv/common_information.hpp"
#include "gwpriv/error.hpp"
#include "gwpriv/infotheory.hpp"
#include "gwpriv/io.hpp"
#include "gwpriv/region.hpp"
#include "json.hpp"

namespace gwpriv::cli {
namespace {

using Json = nlohmann::ordered_json;

// Usage problems found after CLI11 has accepted the arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::size_t VariableIndex(const JointPmf& pmf, const std::string& token) {
  const auto& names = pmf.names();
  const auto it = std::find(names.begin(), names.end(), token);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  std::size_t index = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), index);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size() ||
      index >= pmf.num_vars()) {
    throw UsageError("unknown variable \"" + token + "\"");
  }
  return index;
}

VarSet ParseVars(const JointPmf& pmf, const std::string& text) {
  VarSet out;
  for (const std::string& token : Split(text, ',')) {
    out.push_back(VariableIndex(pmf, token));
  }
  return out;
}

Json NamesOf(const JointPmf& pmf, const VarSet& vars) {
  Json out = Json::array();
  for (std::size_t v : vars) out.push_back(pmf.names()[v]);
  return out;
}

std::vector<double> ParseDoubles(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const std::string& token : Split(text, ',')) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw UsageError(std::string("bad number \"") + token + "\" in " + what);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> ParseSizes(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (const std::string& token : Split(text, ',')) {
    std::size_t v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw UsageError(std::string("bad integer \"") + token + "\" in " + what);
    }
    out.push_back(v);
  }
  return out;
}

std::uint64_t RequireSeed(const std::optional<std::uint64_t>& seed,
                          const char* what) {
  if (!seed) throw UsageError(std::string(what) + " requires --seed");
  return *seed;
}

Json WitnessSummary(const JointPmf& pmf, const AuxChannel& w) {
  const JointPmf joined = join_with_aux(pmf, w);
  const std::size_t num_sources = pmf.num_vars();
  Json out;
  out["w_cardinality"] = w.w_cardinality();
  out["entropy"] = entropy(joined, {num_sources});
  double slack = 0.0;
  for (std::size_t k = 0; k < num_sources; ++k) {
    slack = std::max(slack, markov_slack(joined, k));
  }
  out["max_markov_slack"] = slack;
  bool deterministic = true;
  Json labels = Json::array();
  for (std::size_t i = 0; i < w.num_rows() && deterministic; ++i) {
    const auto row = w.row(i);
    const auto top = std::max_element(row.begin(), row.end());
    deterministic = *top == 1.0;
    labels.push_back(static_cast<std::size_t>(top - row.begin()));
  }
  out["deterministic"] = deterministic;
  if (deterministic) out["labels"] = labels;
  return out;
}

Json TupleJson(const RateEquivocationTuple& t) {
  Json out;
  out["r0"] = t.r0;
  out["rk"] = t.rk;
  out["delta"] = t.delta;
  return out;
}

Json DiagnosticsJson(const CommonInfoResult& r) {
  const CommonInfoDiagnostics& d = r.diagnostics;
  Json out;
  out["converged"] = d.converged;
  out["residual"] = d.residual;
  out["iterations"] = d.iterations;
  if (r.method == CommonInfoMethod::kWynerAltMin) {
    out["rounds"] = d.rounds;
    out["final_lambda"] = d.final_lambda;
    out["restarts_run"] = d.restarts_run;
    out["restarts_converged"] = d.restarts_converged;
    out["best_restart"] = d.best_restart;
    out["model_value"] = d.model_value;
  }
  return out;
}

void MaybeSaveWitness(const std::string& path, const AuxChannel& w) {
  if (!path.empty()) save_aux(w, path);
}

void Emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// --- info ----------------------------------------------------------------

struct InfoOptions {
  std::string pmf;
  std::vector<std::string> entropies;
  std::vector<std::string> mis;
};

// "A" or "A|C" with comma-separated variable lists.
std::pair<VarSet, VarSet> ParseConditioned(const JointPmf& pmf,
                                           const std::string& text) {
  const auto parts = Split(text, '|');
  if (parts.empty() || parts.size() > 2) {
    throw UsageError("bad query \"" + text + "\"");
  }
  return {ParseVars(pmf, parts[0]),
          parts.size() == 2 ? ParseVars(pmf, parts[1]) : VarSet{}};
}

void RunInfo(const InfoOptions& opt, std::ostream& out) {
  const JointPmf pmf = load_pmf(opt.pmf);
  const std::size_t num_vars = pmf.num_vars();
  Json doc;
  doc["variables"] = pmf.names();
  doc["cardinalities"] = pmf.cardinalities();
  doc["support_size"] = pmf.support_size();
  doc["joint_entropy"] = entropy(pmf, all_vars(num_vars));
  Json marginals = Json::object();
  for (std::size_t v = 0; v < num_vars; ++v) {
    marginals[pmf.names()[v]] = entropy(pmf, {v});
  }
  doc["entropies"] = marginals;
  if (num_vars >= 2) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < num_vars; ++i) {
      for (std::size_t j = i + 1; j < num_vars; ++j) {
        Json p;
        p["pair"] = NamesOf(pmf, {i, j});
        p["bits"] = mutual_information(pmf, {i}, {j});
        pairs.push_back(p);
      }
    }
    doc["pairwise_mutual_information"] = pairs;
    doc["delta_max"] = delta_max(pmf);
  }
  Json queries = Json::array();
  for (const std::string& q : opt.entropies) {
    const auto [of, given] = ParseConditioned(pmf, q);
    Json item;
    item["query"] = "entropy";
    item["of"] = NamesOf(pmf, of);
    item["given"] = NamesOf(pmf, given);
    item["bits"] = conditional_entropy(pmf, of, given);
    queries.push_back(item);
  }
  for (const std::string& q : opt.mis) {
    const auto halves = Split(q, ':');
    if (halves.size() != 2) throw UsageError("bad query \"" + q + "\"");
    const VarSet a = ParseVars(pmf, halves[0]);
    const auto [b, given] = ParseConditioned(pmf, halves[1]);
    Json item;
    item["query"] = "mutual_information";
    item["a"] = NamesOf(pmf, a);
    item["b"] = NamesOf(pmf, b);
    item["given"] = NamesOf(pmf, given);
    item["bits"] = conditional_mutual_information(pmf, a, b, given);
    queries.push_back(item);
  }
  if (!queries.empty()) doc["queries"] = queries;
  Emit(out, doc);
}

// --- common-info ---------------------------------------------------------

struct WynerOptions {
  std::optional<std::uint64_t> seed;
  std::size_t restarts = WynerParams{}.restarts;
  std::size_t w_card = 0;
  std::size_t max_rounds = WynerParams{}.max_rounds;
};

WynerParams MakeWyner(const WynerOptions& opt, std::size_t threads,
                      const char* what) {
  WynerParams params;
  params.seed = RequireSeed(opt.seed, what);
  params.restarts = opt.restarts;
  params.w_cardinality = opt.w_card;
  params.max_rounds = opt.max_rounds;
  params.threads = threads;
  return params;
}

struct CommonInfoOptions {
  std::string pmf;
  std::string method = "gk";
  std::string witness_out;
  WynerOptions wyner;
};

void RunCommonInfo(const CommonInfoOptions& opt, std::size_t threads,
                   std::ostream& out) {
  const JointPmf pmf = load_pmf(opt.pmf);
  CommonInfoResult result =
      opt.method == "gk"
          ? gk_common_information(pmf)
          : wyner_estimate(pmf, MakeWyner(opt.wyner, threads, "--method wyner"));
  Json doc;
  doc["method"] = std::string(MethodName(result.method));
  doc["value"] = result.value;
  doc["witness"] = WitnessSummary(pmf, *result.witness);
  doc["diagnostics"] = DiagnosticsJson(result);
  if (opt.method == "wyner") {
    doc["seed"] = opt.wyner.seed.value();
    doc["restarts"] = opt.wyner.restarts;
  }
  MaybeSaveWitness(opt.witness_out, *result.witness);
  Emit(out, doc);
}

// --- region --------------------------------------------------------------

struct SearchOptions {
  std::optional<std::uint64_t> seed;
  std::size_t restarts = SearchParams{}.restarts;
  std::size_t iterations = SearchParams{}.iterations;
  std::size_t w_card = 0;
};

SearchParams MakeSearch(const SearchOptions& opt, std::size_t threads,
                        const char* what) {
  SearchParams params;
  params.seed = RequireSeed(opt.seed, what);
  params.restarts = opt.restarts;
  params.iterations = opt.iterations;
  params.w_cardinality = opt.w_card;
  params.threads = threads;
  return params;
}

struct RegionOptions {
  std::string pmf;
  std::string aux;
  // sweep
  std::string grid;
  std::optional<double> r0_max;
  std::size_t points = 11;
  std::string format = "csv";
  std::string witness_dir;
  // check
  std::optional<double> r0;
  std::string rk;
  std::optional<double> delta;
  std::string witness_out;
  SearchOptions search;
};

void RunCorner(const RegionOptions& opt, std::ostream& out) {
  if (opt.aux.empty()) throw UsageError("region corner requires --aux");
  const JointPmf pmf = load_pmf(opt.pmf);
  const AuxChannel w = load_aux(opt.aux);
  Json doc = TupleJson(corner_point(pmf, w));
  doc["delta_max"] = delta_max(pmf);
  Emit(out, doc);
}

std::vector<Bits> SweepGrid(const RegionOptions& opt) {
  if (!opt.grid.empty()) {
    if (opt.r0_max) throw UsageError("use either --grid or --r0-max");
    return ParseDoubles(opt.grid, "--grid");
  }
  if (!opt.r0_max) throw UsageError("region sweep requires --grid or --r0-max");
  if (opt.points < 2) throw UsageError("--points must be at least 2");
  std::vector<Bits> grid;
  for (std::size_t i = 0; i < opt.points; ++i) {
    grid.push_back(*opt.r0_max * static_cast<double>(i) /
                   static_cast<double>(opt.points - 1));
  }
  return grid;
}

void RunSweep(const RegionOptions& opt, std::size_t threads, std::ostream& out) {
  const JointPmf pmf = load_pmf(opt.pmf);
  const std::vector<Bits> grid = SweepGrid(opt);
  const SearchParams params = MakeSearch(opt.search, threads, "region sweep");
  const std::vector<SweepPoint> points = sweep_delta(pmf, grid, params);

  std::vector<std::string> files(points.size());
  if (!opt.witness_dir.empty()) {
    std::filesystem::create_directories(opt.witness_dir);
    for (std::size_t i = 0; i < points.size(); ++i) {
      files[i] = (std::filesystem::path(opt.witness_dir) /
                  ("witness_" + std::to_string(i) + ".json"))
                     .string();
      save_aux(points[i].result.witness, files[i]);
    }
  }
  auto private_sum = [](const DeltaSearchResult& r) {
    Bits total = 0.0;
    for (Bits v : r.corner.rk) total += v;
    return total;
  };
  if (opt.format == "csv") {
    out << "# gwpriv-sweep v1\n"
        << "r0_budget,delta,converged,witness_file,witness_common_rate,"
           "witness_private_sum\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      const DeltaSearchResult& r = points[i].result;
      out << FormatDouble(points[i].r0_budget) << ',' << FormatDouble(r.delta)
          << ',' << (r.converged ? "true" : "false") << ',' << files[i] << ','
          << FormatDouble(r.corner.r0) << ',' << FormatDouble(private_sum(r))
          << '\n';
    }
    return;
  }
  Json doc;
  doc["delta_max"] = delta_max(pmf);
  doc["seed"] = params.seed;
  Json rows = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const DeltaSearchResult& r = points[i].result;
    Json row;
    row["r0_budget"] = points[i].r0_budget;
    row["delta"] = r.delta;
    row["converged"] = r.converged;
    row["best_restart"] = r.best_restart;
    row["corner"] = TupleJson(r.corner);
    if (!files[i].empty()) row["witness_file"] = files[i];
    rows.push_back(row);
  }
  doc["points"] = rows;
  Emit(out, doc);
}

void RunCheck(const RegionOptions& opt, std::size_t threads, std::ostream& out) {
  if (!opt.r0 || opt.rk.empty() || !opt.delta) {
    throw UsageError("region check requires --r0, --rk and --delta");
  }
  const JointPmf pmf = load_pmf(opt.pmf);
  RateEquivocationTuple t;
  t.r0 = *opt.r0;
  t.rk = ParseDoubles(opt.rk, "--rk");
  t.delta = *opt.delta;

  Json doc;
  doc["tuple"] = TupleJson(t);
  if (!opt.aux.empty()) {
    const AuxChannel w = load_aux(opt.aux);
    const bool ok = is_achievable_with(pmf, w, t);
    doc["verdict"] = ok ? "achievable" : "not_certified_by_witness";
    doc["corner"] = TupleJson(corner_point(pmf, w));
  } else {
    const SearchParams params = MakeSearch(opt.search, threads, "region check");
    const AchievabilityVerdict verdict = is_achievable(pmf, t, params);
    doc["verdict"] = verdict.achievable ? "achievable" : "unknown";
    doc["seed"] = params.seed;
    if (verdict.witness) {
      doc["corner"] = TupleJson(corner_point(pmf, *verdict.witness));
      MaybeSaveWitness(opt.witness_out, *verdict.witness);
    }
  }
  Emit(out, doc);
}

// --- simulate ------------------------------------------------------------

struct SimulateOptions {
  std::string pmf;
  std::string aux;
  std::size_t n = CodeConfig{}.n;
  std::string n_grid;
  double slack = CodeConfig{}.slack;
  double typicality = CodeConfig{}.typicality_tolerance;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  bool exact = false;
  std::string format = "json";
};

Json ReportJson(const SimReport& r) {
  Json doc;
  Json cfg;
  cfg["n"] = r.config.n;
  cfg["slack"] = r.config.slack;
  cfg["typicality_tolerance"] = r.config.typicality_tolerance;
  cfg["seed"] = r.config.seed;
  doc["config"] = cfg;
  doc["trials"] = r.trials;
  doc["m0"] = r.m0;
  doc["mk"] = r.mk;
  doc["common_rate"] = r.common_rate;
  doc["private_rates"] = r.private_rates;
  doc["encoder_failures"] = r.encoder_failures;
  doc["encoder_failure_rate"] = r.encoder_failure_rate;
  doc["decoder_errors"] = r.decoder_errors;
  doc["error_rates"] = r.error_rates;
  Json targets;
  targets["common_rate"] = r.target_common;
  targets["private_rates"] = r.target_private;
  targets["equivocation"] = r.target_equivocation;
  doc["targets"] = targets;
  if (!r.equivocation.empty()) {
    doc["equivocation"] = r.equivocation;
    doc["equivocation_gap"] = r.equivocation_gap;
  }
  return doc;
}

void RunSimulate(const SimulateOptions& opt, std::size_t threads,
                 std::ostream& out) {
  const std::uint64_t seed = RequireSeed(opt.seed, "simulate");
  if (opt.format != "json" && opt.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  const JointPmf pmf = load_pmf(opt.pmf);
  const AuxChannel w = load_aux(opt.aux);
  const std::vector<std::size_t> grid =
      opt.n_grid.empty() ? std::vector<std::size_t>{opt.n}
                         : ParseSizes(opt.n_grid, "--n-grid");
  std::vector<SimReport> reports;
  for (std::size_t n : grid) {
    CodeConfig cfg;
    cfg.n = n;
    cfg.slack = opt.slack;
    cfg.typicality_tolerance = opt.typicality;
    cfg.seed = seed;
    reports.push_back(run_trials(pmf, w, cfg, opt.trials, opt.exact, threads));
  }

  if (opt.format == "json") {
    if (reports.size() == 1) {
      Emit(out, ReportJson(reports.front()));
    } else {
      Json doc = Json::array();
      for (const SimReport& r : reports) doc.push_back(ReportJson(r));
      Emit(out, doc);
    }
    return;
  }
  const auto& names = pmf.names();
  out << "# gwpriv-simulate v1\n"
      << "n,trials,m0,common_rate,encoder_failure_rate";
  for (const auto& name : names) out << ",error_rate_" << name;
  if (opt.exact) {
    for (const auto& name : names) out << ",equivocation_" << name;
    for (const auto& name : names) out << ",equivocation_gap_" << name;
  }
  out << '\n';
  for (const SimReport& r : reports) {
    out << r.config.n << ',' << r.trials << ',' << r.m0 << ','
        << FormatDouble(r.common_rate) << ','
        << FormatDouble(r.encoder_failure_rate);
    for (double v : r.error_rates) out << ',' << FormatDouble(v);
    for (double v : r.equivocation) out << ',' << FormatDouble(v);
    for (double v : r.equivocation_gap) out << ',' << FormatDouble(v);
    out << '\n';
  }
}

// --- verify --------------------------------------------------------------

struct VerifyOptions {
  std::string pmf;
  std::string props;
  bool chain = false;
  bool c2 = false;
  WynerOptions wyner;
};

Json ChainJson(const BoundsReport& report) {
  Json doc;
  doc["c_value"] = report.c_value;
  doc["min_pairwise_mi"] = report.min_pairwise_mi;
  doc["max_pairwise_mi"] = report.max_pairwise_mi;
  doc["b_estimate"] = report.b_estimate;
  doc["b_converged"] = report.b_converged;
  Json links = Json::array();
  for (const ChainLink& link : report.links) {
    Json l;
    l["name"] = link.name;
    l["lhs"] = link.lhs;
    l["rhs"] = link.rhs;
    l["tolerance"] = link.tolerance;
    l["evaluated"] = link.evaluated;
    l["holds"] = link.holds;
    links.push_back(l);
  }
  doc["links"] = links;
  doc["chain_holds"] = report.chain_holds;
  return doc;
}

void RunVerify(const VerifyOptions& opt, std::size_t threads, std::ostream& out) {
  const std::vector<std::size_t> props =
      opt.props.empty() ? std::vector<std::size_t>{}
                        : ParseSizes(opt.props, "--props");
  for (std::size_t p : props) {
    if (p < 1 || p > 4) throw UsageError("--props takes values in 1..4");
  }
  const bool needs_b =
      opt.chain || std::count(props.begin(), props.end(), 3) > 0 ||
      std::count(props.begin(), props.end(), 4) > 0;
  std::optional<WynerParams> wyner;
  if (needs_b) wyner = MakeWyner(opt.wyner, threads, "--chain and --props 3,4");

  const JointPmf pmf = load_pmf(opt.pmf);
  const CommonInfoResult c = gk_common_information(pmf);
  const PairwiseBounds bounds = pairwise_mi_bounds(pmf);
  Json doc;
  doc["c_value"] = c.value;
  doc["delta_max"] = delta_max(pmf);
  Json pairwise;
  pairwise["min"] = bounds.min_mi;
  pairwise["max"] = bounds.max_mi;
  pairwise["argmin"] = NamesOf(pmf, {bounds.argmin.first, bounds.argmin.second});
  pairwise["argmax"] = NamesOf(pmf, {bounds.argmax.first, bounds.argmax.second});
  doc["pairwise_mutual_information"] = pairwise;

  std::optional<CommonInfoResult> b;
  if (needs_b) {
    b = wyner_estimate(pmf, *wyner);
    doc["seed"] = wyner->seed;
  }
  Json results = Json::object();
  for (std::size_t p : props) {
    Json r;
    switch (p) {
      case 1: {
        if (pmf.num_vars() < 3) {
          r["status"] = "not applicable";
          break;
        }
        Json drops = Json::array();
        bool holds = true;
        for (std::size_t v = 0; v < pmf.num_vars(); ++v) {
          const MonotonicityReport m = verify_monotonicity(pmf, v);
          Json d;
          d["dropped"] = pmf.names()[v];
          d["c_full"] = m.c_full;
          d["c_dropped"] = m.c_dropped;
          d["holds"] = m.holds;
          drops.push_back(d);
          holds = holds && m.holds;
        }
        r["drops"] = drops;
        r["holds"] = holds;
        break;
      }
      case 2:
        r["lhs"] = c.value;
        r["rhs"] = bounds.min_mi;
        r["holds"] = c.value <= bounds.min_mi + 1e-6;
        break;
      case 3:
        r["lhs"] = bounds.max_mi;
        r["rhs"] = b->value;
        r["b_converged"] = b->diagnostics.converged;
        if (b->diagnostics.converged) {
          r["holds"] = bounds.max_mi <= b->value + 1e-6;
        } else {
          r["status"] = "not evaluated";
        }
        break;
      case 4: {
        const Prop4Report report = verify_prop4(pmf, *wyner);
        r["status"] = std::string(Prop4StatusName(report.status));
        r["c_value"] = report.c_value;
        r["min_pairwise_mi"] = report.min_pairwise_mi;
        r["max_pairwise_mi"] = report.max_pairwise_mi;
        if (report.b_estimate) r["b_estimate"] = *report.b_estimate;
        r["b_converged"] = report.b_converged;
        break;
      }
    }
    results[std::to_string(p)] = r;
  }
  if (!props.empty()) doc["props"] = results;
  if (opt.chain) doc["chain"] = ChainJson(verify_chain(pmf, *wyner));
  if (opt.c2) {
    const C2Report report = verify_c2(pmf);
    Json r;
    r["c_value"] = report.c_value;
    r["common_rate"] = report.common_rate;
    r["source_entropies"] = report.source_entropies;
    r["conditional_entropies"] = report.conditional_entropies;
    r["max_residual"] = report.max_residual;
    doc["c2"] = r;
  }
  Emit(out, doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Privacy-aware Gray-Wyner computations", "gwpriv"};
  app.require_subcommand(1);
  // Subcommands inherit this, so --threads may follow them.
  app.fallthrough();
  app.set_version_flag("--version", "gwpriv 0.1.0");
  std::size_t threads = 1;
  app.add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  InfoOptions info;
  auto* info_cmd = app.add_subcommand("info", "Entropies and informations");
  info_cmd->add_option("pmf", info.pmf, "Joint pmf document")->required();
  info_cmd->add_option("--entropy", info.entropies,
                       "Conditional entropy query A or A|C");
  info_cmd->add_option("--mi", info.mis,
                       "Mutual information query A:B or A:B|C");

  CommonInfoOptions ci;
  auto* ci_cmd = app.add_subcommand("common-info", "Common information C or B");
  ci_cmd->add_option("pmf", ci.pmf, "Joint pmf document")->required();
  ci_cmd->add_option("--method", ci.method, "gk or wyner")
      ->check(CLI::IsMember({"gk", "wyner"}));
  ci_cmd->add_option("--witness-out", ci.witness_out, "Write the witness W");
  auto add_wyner = [](CLI::App* cmd, WynerOptions& w) {
    cmd->add_option("--seed", w.seed, "Seed for randomized search");
    cmd->add_option("--restarts", w.restarts, "Random restarts");
    cmd->add_option("--w-card", w.w_card, "Search cardinality of W");
    cmd->add_option("--max-rounds", w.max_rounds, "Penalty rounds");
  };
  add_wyner(ci_cmd, ci.wyner);

  RegionOptions region;
  auto* region_cmd = app.add_subcommand("region", "Rate-equivocation region");
  region_cmd->require_subcommand(1);
  auto add_search = [](CLI::App* cmd, SearchOptions& s) {
    cmd->add_option("--seed", s.seed, "Seed for randomized search");
    cmd->add_option("--restarts", s.restarts, "Random restarts");
    cmd->add_option("--iterations", s.iterations, "Iterations per restart");
    cmd->add_option("--w-card", s.w_card, "Search cardinality of W");
  };
  auto* corner_cmd = region_cmd->add_subcommand("corner", "Corner point of W");
  corner_cmd->add_option("pmf", region.pmf, "Joint pmf document")->required();
  corner_cmd->add_option("--aux", region.aux, "Channel document")->required();
  auto* sweep_cmd = region_cmd->add_subcommand("sweep", "Max Δ over R0 budgets");
  sweep_cmd->add_option("pmf", region.pmf, "Joint pmf document")->required();
  sweep_cmd->add_option("--grid", region.grid, "Comma-separated R0 budgets");
  sweep_cmd->add_option("--r0-max", region.r0_max, "Largest budget of a grid");
  sweep_cmd->add_option("--points", region.points, "Grid points with --r0-max");
  sweep_cmd->add_option("--format", region.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--witness-dir", region.witness_dir,
                        "Write one witness per grid point");
  add_search(sweep_cmd, region.search);
  auto* check_cmd = region_cmd->add_subcommand("check", "Membership test");
  check_cmd->add_option("pmf", region.pmf, "Joint pmf document")->required();
  check_cmd->add_option("--r0", region.r0, "Common rate");
  check_cmd->add_option("--rk", region.rk, "Comma-separated private rates");
  check_cmd->add_option("--delta", region.delta, "Total equivocation");
  check_cmd->add_option("--aux", region.aux, "Test this W only");
  check_cmd->add_option("--witness-out", region.witness_out,
                        "Write the certifying W");
  add_search(check_cmd, region.search);

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Random-binning simulation");
  sim_cmd->add_option("pmf", sim.pmf, "Joint pmf document")->required();
  sim_cmd->add_option("--aux", sim.aux, "Channel document")->required();
  sim_cmd->add_option("--n", sim.n, "Blocklength");
  sim_cmd->add_option("--n-grid", sim.n_grid, "Comma-separated blocklengths");
  sim_cmd->add_option("--slack", sim.slack, "Rate slack in bits");
  sim_cmd->add_option("--typ", sim.typicality, "Typicality tolerance");
  sim_cmd->add_option("--trials", sim.trials, "Monte Carlo trials");
  sim_cmd->add_option("--seed", sim.seed, "Seed");
  sim_cmd->add_flag("--exact", sim.exact, "Add exact equivocation");
  sim_cmd->add_option("--format", sim.format, "json or csv");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check stated properties");
  verify_cmd->add_option("pmf", verify.pmf, "Joint pmf document")->required();
  verify_cmd->add_option("--props", verify.props, "Comma-separated 1..4");
  verify_cmd->add_flag("--chain", verify.chain, "Check the bound chain");
  verify_cmd->add_flag("--c2", verify.c2, "Check the rate-form identity");
  add_wyner(verify_cmd, verify.wyner);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*info_cmd) {
      RunInfo(info, out);
    } else if (*ci_cmd) {
      RunCommonInfo(ci, threads, out);
    } else if (*corner_cmd) {
      RunCorner(region, out);
    } else if (*sweep_cmd) {
      RunSweep(region, threads, out);
    } else if (*check_cmd) {
      RunCheck(region, threads, out);
    } else if (*sim_cmd) {
      RunSimulate(sim, threads, out);
    } else if (*verify_cmd) {
      RunVerify(verify, threads, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace gwpriv::cli
