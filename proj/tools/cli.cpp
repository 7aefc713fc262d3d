#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcycle/analytic.hpp"
#include "lcycle/exact.hpp"
#include "lcycle/predictor.hpp"
#include "lcycle/saddle.hpp"
#include "lcycle/sampler.hpp"
#include "lcycle/stats.hpp"

namespace lcycle::cli {

using nlohmann::json;

namespace {

std::string fraction(const Rational& q) {
  return bmp::numerator(q).str() + "/" + bmp::denominator(q).str();
}

json rational_json(const Rational& q) {
  return {{"exact", fraction(q)}, {"value", q.convert_to<double>()}};
}

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

unsigned workers_from_env() {
  const char* env = std::getenv("LCYCLE_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  unsigned long w = std::strtoul(env, &end, 10);
  if (*end != '\0' || w > 4096) throw UsageError("LCYCLE_WORKERS must be a nonnegative integer", "LCYCLE_WORKERS");
  return static_cast<unsigned>(w);
}

// Largest k for which X = k is possible on n vertices.
std::int64_t k_cap(std::int64_t n, const LengthSet& L) {
  auto lo = L.min_element();
  return lo ? n / *lo : 0;
}

std::int64_t default_rmax(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  while (r * r * r > n) --r;
  return r;
}

json regime_json(const Regime& reg) {
  return {{"regime", to_string(reg.tag)},
          {"c", reg.c},
          {"mu", reg.mu},
          {"alpha", reg.alpha ? json(*reg.alpha) : json(nullptr)}};
}

json prediction_json(const Prediction& p, std::int64_t kmax) {
  json j = regime_json(p.regime);
  j["zstar"] = p.zstar;
  j["lambda"] = p.lambda;
  j["p_no_cycle"] = p.p_no_cycle();
  j["gaussian"] = {{"mean", p.gaussian.mean}, {"sd", p.gaussian.sd}};
  json pmf = json::array();
  for (std::int64_t k = 0; k <= kmax; ++k) pmf.push_back({{"k", k}, {"p", p.poisson_pmf(k)}});
  j["poisson"] = pmf;
  return j;
}

json histogram_json(const Histogram& h) {
  json rows = json::array();
  for (const auto& [k, c] : h.counts) rows.push_back({{"k", k}, {"count", c}});
  return rows;
}

json base_json(const RunConfig& cfg) {
  return {{"subcommand", cfg.subcommand}, {"n", cfg.n}, {"m", cfg.m}, {"L", cfg.L.to_string()}};
}

ContourResult contour_for(const RunConfig& cfg, std::int64_t k, std::optional<std::int64_t>& rmax_used) {
  ContourSpec spec;
  spec.nodes = cfg.nodes;
  spec.bits = cfg.bits;
  spec.radius = cfg.radius;
  Regime reg = regime_of(cfg.n, cfg.m);
  if (reg.tag == RegimeTag::Critical) {
    rmax_used = cfg.rmax.value_or(default_rmax(cfg.n));
    return contour_prob_critical(cfg.n, cfg.m, cfg.L, k, *rmax_used, spec);
  }
  if (cfg.rmax) throw UsageError("--rmax applies only inside the critical window", "--rmax");
  rmax_used.reset();
  return contour_prob_subcritical(cfg.n, cfg.m, cfg.L, k, spec);
}

Output do_predict(const RunConfig& cfg) {
  Prediction p = predict(cfg.n, cfg.m, cfg.L);
  json j = base_json(cfg);
  j.update(prediction_json(p, cfg.kmax));
  return {j, {}};
}

Output do_simulate(const RunConfig& cfg) {
  RunReport rep = run_trials(cfg.n, cfg.m, cfg.L, cfg.trials, cfg.seed, cfg.workers);
  json j = base_json(cfg);
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["histogram"] = histogram_json(rep.x);
  j["excess_histogram"] = histogram_json(rep.excess);
  j["complex_fraction"] = rep.complex_fraction;
  j["mean"] = rep.mean;
  j["variance"] = rep.variance;
  const std::int64_t top = rep.x.counts.empty() ? 0 : rep.x.counts.rbegin()->first;
  j["prediction"] = rep.prediction ? prediction_json(*rep.prediction, top) : json(nullptr);
  j["tv"] = rep.tv ? json(*rep.tv) : json(nullptr);
  j["chi2"] = rep.chi2 ? json{{"stat", rep.chi2->stat}, {"dof", rep.chi2->dof}, {"pvalue", rep.chi2->pvalue}}
                       : json(nullptr);
  j["ks_normalized"] = rep.ks_normalized ? json(*rep.ks_normalized) : json(nullptr);

  std::ostringstream csv;
  csv << "k,count,empirical,predicted\n";
  for (std::int64_t k = 0; k <= top; ++k) {
    auto it = rep.x.counts.find(k);
    const std::int64_t count = it == rep.x.counts.end() ? 0 : it->second;
    csv << k << ',' << count << ',' << csv_number(rep.x.frequency(k)) << ','
        << (rep.prediction ? csv_number(rep.prediction->poisson_pmf(k)) : std::string()) << '\n';
  }

  if (!cfg.dump_edges.empty()) {
    std::ofstream f(cfg.dump_edges);
    if (!f) throw UsageError("cannot open " + cfg.dump_edges + " for writing", "--dump-edges");
    Rng rng = make_stream(cfg.seed, 0);
    write_edge_list(f, sample_gnm(cfg.n, cfg.m, rng), cfg.seed);
  }
  return {j, csv.str()};
}

Output do_exact(const RunConfig& cfg) {
  json j = base_json(cfg);
  json rows = json::array();
  if (cfg.brute_force) {
    BruteForceResult b = brute_force_dist(cfg.n, cfg.m, cfg.L);
    j["method"] = "brute_force";
    for (std::int64_t k = 0; k <= k_cap(cfg.n, cfg.L); ++k) {
      if (cfg.k && *cfg.k != k) continue;
      auto it = b.dist.find(k);
      json row = rational_json(it == b.dist.end() ? Rational(0) : it->second);
      row["k"] = k;
      rows.push_back(row);
    }
    j["p_complex"] = rational_json(b.p_complex);
  } else {
    j["method"] = "egf";
    if (cfg.k) {
      json row = rational_json(egf_prob(cfg.n, cfg.m, cfg.L, *cfg.k));
      row["k"] = *cfg.k;
      rows.push_back(row);
    } else {
      std::int64_t k = 0;
      for (const auto& q : egf_dist(cfg.n, cfg.m, cfg.L)) {
        json row = rational_json(q);
        row["k"] = k++;
        rows.push_back(row);
      }
    }
  }
  Rational total = 0;
  for (const auto& r : rows) total += Rational(r["exact"].get<std::string>());
  j["probabilities"] = rows;
  j["total"] = rational_json(total);
  return {j, {}};
}

Output do_saddle(const RunConfig& cfg) {
  std::optional<std::int64_t> rmax;
  const std::int64_t k = cfg.k.value_or(0);
  ContourResult c = contour_for(cfg, k, rmax);
  json j = base_json(cfg);
  j["k"] = k;
  j["regime"] = to_string(regime_of(cfg.n, cfg.m).tag);
  j["value"] = c.value;
  j["im_over_re"] = c.im_over_re;
  j["nodes"] = c.nodes;
  j["bits"] = c.bits;
  j["radius"] = c.radius;
  j["rmax"] = rmax ? json(*rmax) : json(nullptr);
  j["terms"] = c.terms;
  return {j, {}};
}

Output do_excess(const RunConfig& cfg) {
  double mu = 0;
  if (cfg.mu) {
    mu = *cfg.mu;
  } else {
    const auto n = static_cast<double>(cfg.n);
    const double root = std::cbrt(n);
    mu = static_cast<double>(2 * cfg.m - cfg.n) / (root * root);
  }
  const std::int64_t rmax = cfg.rmax.value_or(10);
  std::vector<double> p = excess_dist(mu, rmax);
  double total = 0;
  for (double v : p) total += v;
  json j = {{"subcommand", "excess"}, {"mu", mu}, {"rmax", rmax}, {"alpha", solve_alpha(mu)},
            {"p", p},  {"total", total}};
  return {j, {}};
}

Output do_compare(const RunConfig& cfg) {
  Prediction pred = predict(cfg.n, cfg.m, cfg.L);
  RunReport rep = run_trials(cfg.n, cfg.m, cfg.L, cfg.trials, cfg.seed, cfg.workers);
  const bool exact = cfg.n <= kBruteForceMaxN;
  std::optional<BruteForceResult> brute;
  if (exact) brute = brute_force_dist(cfg.n, cfg.m, cfg.L);

  json rows = json::array();
  std::ostringstream csv;
  csv << "k,empirical,poisson_prediction,exact_or_contour,abs_gap\n";
  const std::int64_t last = std::min(cfg.kmax, k_cap(cfg.n, cfg.L));
  std::optional<std::int64_t> rmax;
  for (std::int64_t k = 0; k <= last; ++k) {
    double reference = 0;
    if (brute) {
      auto it = brute->dist.find(k);
      reference = it == brute->dist.end() ? 0.0 : it->second.convert_to<double>();
    } else {
      reference = contour_for(cfg, k, rmax).value;
    }
    const double poisson = pred.poisson_pmf(k);
    const double empirical = rep.x.frequency(k);
    const double gap = std::abs(reference - poisson);
    rows.push_back({{"k", k},
                    {"empirical", empirical},
                    {"poisson_prediction", poisson},
                    {"exact_or_contour", reference},
                    {"abs_gap", gap}});
    csv << k << ',' << csv_number(empirical) << ',' << csv_number(poisson) << ',' << csv_number(reference) << ','
        << csv_number(gap) << '\n';
  }
  json j = base_json(cfg);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["method"] = exact ? "exact" : "contour";
  j["regime"] = to_string(pred.regime.tag);
  j["lambda"] = pred.lambda;
  j["rows"] = rows;
  return {j, csv.str()};
}

json error_json(const std::string& type, const std::string& message, const std::string& flag = {}) {
  json e = {{"type", type}, {"message", message}};
  if (!flag.empty()) e["flag"] = flag;
  return {{"error", e}};
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Isolated cycles with lengths in L in the random graph G(n, M)", "lcycle"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::optional<unsigned> workers;

  auto graph = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of vertices")->required()->check(CLI::Range(1LL, 4294967295LL));
    sub->add_option("--m", cfg.m, "number of edges")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--L", cfg.length_spec, "cycle lengths: 3,4,5 | all | ge:K | mod:a:m | even | odd | none | not:SPEC");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "number of samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--workers", workers, "worker threads (default $LCYCLE_WORKERS, else all cores)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto quadrature = [&](CLI::App* sub) {
    sub->add_option("--nodes", cfg.nodes, "quadrature nodes (power of two, >= 256)");
    sub->add_option("--bits", cfg.bits, "working precision: 53, 128, 200 or 256");
    sub->add_option("--rmax", cfg.rmax, "largest total excess summed in the critical window");
    sub->add_option("--radius", cfg.radius, "contour radius override");
  };

  auto* predict_cmd = app.add_subcommand("predict", "limit-law prediction");
  graph(predict_cmd);
  predict_cmd->add_option("--kmax", cfg.kmax, "largest k in the printed pmf")->check(CLI::NonNegativeNumber);

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run");
  graph(simulate_cmd);
  sampling(simulate_cmd);
  simulate_cmd->add_option("--csv", cfg.csv_path, "also write k,count,empirical,predicted rows to this file");
  simulate_cmd->add_option("--dump-edges", cfg.dump_edges, "write the first sample's edge list to this file");

  auto* exact_cmd = app.add_subcommand("exact", "exact rational probabilities");
  graph(exact_cmd);
  auto* k_opt = exact_cmd->add_option("--k", cfg.k, "single k")->check(CLI::NonNegativeNumber);
  exact_cmd->add_flag("--all-k", cfg.all_k, "every k (default)")->excludes(k_opt);
  exact_cmd->add_flag("--brute", cfg.brute_force, "enumerate edge sets instead of extracting coefficients");

  auto* saddle_cmd = app.add_subcommand("saddle", "contour-integral probability");
  graph(saddle_cmd);
  saddle_cmd->add_option("--k", cfg.k, "number of L-cycles")->check(CLI::NonNegativeNumber);
  quadrature(saddle_cmd);

  auto* excess_cmd = app.add_subcommand("excess", "limiting law of the total excess");
  auto* mu_opt = excess_cmd->add_option("--mu", cfg.mu, "critical-window parameter");
  auto* n_opt = excess_cmd->add_option("--n", cfg.n, "vertices (with --m, derives mu)")->excludes(mu_opt);
  excess_cmd->add_option("--m", cfg.m, "edges")->needs(n_opt);
  n_opt->needs("--m");
  excess_cmd->add_option("--rmax", cfg.rmax, "largest r")->check(CLI::NonNegativeNumber);

  auto* compare_cmd = app.add_subcommand("compare", "empirical vs Poisson vs exact/contour table");
  graph(compare_cmd);
  sampling(compare_cmd);
  compare_cmd->add_option("--kmax", cfg.kmax, "largest k")->check(CLI::NonNegativeNumber);
  quadrature(compare_cmd);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), "--help");
  } catch (const CLI::ParseError& e) {
    std::string flag;
    const std::string what = e.what();
    auto pos = what.find("--");
    if (pos != std::string::npos) {
      auto end = what.find_first_of(" ,:\n", pos);
      flag = what.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    }
    throw UsageError(what, flag);
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  cfg.workers = workers ? *workers : workers_from_env();
  try {
    cfg.L = LengthSet::parse(cfg.length_spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed L-spec: ") + e.what(), "--L");
  }
  if (cfg.subcommand == "excess") {
    if (cfg.mu && !std::isfinite(*cfg.mu)) throw UsageError("--mu must be finite", "--mu");
    if (!cfg.mu && cfg.n == 0) throw UsageError("excess needs --mu or --n/--m", "--mu");
    return cfg;
  }
  if (static_cast<std::uint64_t>(cfg.m) > pair_count(cfg.n)) {
    throw UsageError("--m exceeds C(n,2)", "--m");
  }
  if (cfg.subcommand == "predict" || cfg.subcommand == "simulate" || cfg.subcommand == "compare" ||
      cfg.subcommand == "saddle") {
    if (cfg.n < 3) throw UsageError("this subcommand needs n >= 3", "--n");
    regime_of(cfg.n, cfg.m);  // UnsupportedRegime above the critical window
  }
  if (cfg.subcommand == "saddle" || cfg.subcommand == "compare") {
    ContourSpec spec{cfg.radius, cfg.nodes, cfg.bits};
    try {
      spec.validate();
    } catch (const std::domain_error& e) {
      throw UsageError(e.what(), cfg.radius ? "--radius" : "--nodes/--bits");
    }
  }
  return cfg;
}

Output execute(const RunConfig& cfg) {
  if (cfg.subcommand == "predict") return do_predict(cfg);
  if (cfg.subcommand == "simulate") return do_simulate(cfg);
  if (cfg.subcommand == "exact") return do_exact(cfg);
  if (cfg.subcommand == "saddle") return do_saddle(cfg);
  if (cfg.subcommand == "excess") return do_excess(cfg);
  if (cfg.subcommand == "compare") return do_compare(cfg);
  throw UsageError("unknown subcommand " + cfg.subcommand);
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = parse_args(argv);
    Output o = execute(cfg);
    if (!cfg.csv_path.empty()) {
      std::ofstream f(cfg.csv_path, std::ios::binary);
      if (!f) throw UsageError("cannot open " + cfg.csv_path + " for writing", "--csv");
      f << o.csv;
    }
    if (cfg.format == Format::Csv && !o.csv.empty()) {
      out << o.csv;
    } else {
      out << o.json.dump(2) << '\n';
    }
    return 0;
  } catch (const UsageError& e) {
    if (e.flag() == "--help") {
      out << e.what();
      return 0;
    }
    err << error_json("usage_error", e.what(), e.flag()).dump() << '\n';
    return 2;
  } catch (const UnsupportedRegime& e) {
    err << error_json("unsupported_regime", e.what(), "--m").dump() << '\n';
    return 1;
  } catch (const NumericalFailure& e) {
    err << error_json("numerical_failure", e.what()).dump() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << error_json("domain_error", e.what()).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << error_json("error", e.what()).dump() << '\n';
    return 1;
  }
}

}  // namespace lcycle::cli
