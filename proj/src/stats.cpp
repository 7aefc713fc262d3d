#include "lcycle/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "lcycle/components.hpp"
#include "lcycle/sampler.hpp"

namespace lcycle {

void Histogram::add(std::int64_t k, std::int64_t times) {
  counts[k] += times;
  trials += times;
}

void Histogram::merge(const Histogram& other) {
  for (const auto& [k, c] : other.counts) counts[k] += c;
  trials += other.trials;
}

double Histogram::frequency(std::int64_t k) const {
  auto it = counts.find(k);
  return it == counts.end() || trials == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(trials);
}

double Histogram::mean() const {
  if (trials == 0) return 0.0;
  long double s = 0;
  for (const auto& [k, c] : counts) s += static_cast<long double>(k) * c;
  return static_cast<double>(s / trials);
}

double Histogram::variance() const {
  if (trials < 2) return 0.0;
  const long double mu = mean();
  long double s = 0;
  for (const auto& [k, c] : counts) s += (k - mu) * (k - mu) * c;
  return static_cast<double>(s / (trials - 1));
}

namespace {

struct Partial {
  Histogram x;
  Histogram excess;
  std::int64_t with_complex = 0;
};

void run_block(std::int64_t n, std::int64_t m, const LengthSet& L, std::uint64_t seed, std::int64_t begin,
               std::int64_t end, Partial& out) {
  GnmSampler sampler;
  ComponentCensus census;
  std::vector<Edge> edges;
  for (std::int64_t i = begin; i < end; ++i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    sampler.sample(n, m, rng, edges);
    census.run(n, edges);
    TrialStats s = census.stats(L);
    out.x.add(s.x_L);
    out.excess.add(s.total_excess);
    if (s.num_complex > 0) ++out.with_complex;
  }
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

template <class Weights>
double ks_impl(const Weights& weights, double total, double lambda) {
  if (!(lambda > 0)) throw std::domain_error("ks_normalized needs lambda > 0");
  if (!(total > 0)) throw std::domain_error("ks_normalized needs a nonempty sample");
  const double root = std::sqrt(lambda);
  double cdf = 0;
  double sup = 0;
  for (const auto& [k, w] : weights) {
    cdf += static_cast<double>(w) / total;
    sup = std::max(sup, std::abs(cdf - normal_cdf((static_cast<double>(k) - lambda) / root)));
  }
  return sup;
}

}  // namespace

RunReport run_trials(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t trials, std::uint64_t seed,
                     unsigned workers, const RegimeThresholds& thresholds) {
  if (trials < 1) throw std::domain_error("run_trials needs trials >= 1");
  if (m < 0 || static_cast<std::uint64_t>(m) > pair_count(n)) throw std::domain_error("needs 0 <= M <= C(n,2)");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, trials));

  RunReport rep;
  rep.n = n;
  rep.m = m;
  rep.length_set = L.to_string();
  rep.trials = trials;
  rep.seed = seed;
  try {
    rep.prediction = predict(n, m, L, thresholds);
  } catch (const std::domain_error&) {
    rep.prediction.reset();
  }

  std::vector<Partial> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto bounds = [&](unsigned w) { return trials * static_cast<std::int64_t>(w) / workers; };
  if (workers == 1) {
    run_block(n, m, L, seed, 0, trials, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run_block(n, m, L, seed, bounds(w), bounds(w + 1), parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::int64_t with_complex = 0;
  for (const auto& p : parts) {
    rep.x.merge(p.x);
    rep.excess.merge(p.excess);
    with_complex += p.with_complex;
  }
  rep.complex_fraction = static_cast<double>(with_complex) / static_cast<double>(trials);
  rep.mean = rep.x.mean();
  rep.variance = rep.x.variance();

  if (rep.prediction) {
    const Prediction pred = *rep.prediction;
    Pmf pmf = [pred](std::int64_t k) { return pred.poisson_pmf(k); };
    rep.tv = tv_distance(rep.x, pmf);
    try {
      rep.chi2 = chi_square(rep.x, pmf);
    } catch (const std::domain_error&) {
      rep.chi2.reset();
    }
    if (pred.lambda > 0) rep.ks_normalized = ks_normalized(rep.x, pred.lambda);
  }
  return rep;
}

double tv_distance(const Histogram& h, const Pmf& pmf) {
  if (h.trials == 0) throw std::domain_error("tv_distance needs a nonempty histogram");
  double sum = 0;
  double covered = 0;
  for (const auto& [k, c] : h.counts) {
    const double p = pmf(k);
    covered += p;
    sum += std::abs(static_cast<double>(c) / static_cast<double>(h.trials) - p);
  }
  return std::clamp(0.5 * sum + 0.5 * std::abs(1.0 - covered), 0.0, 1.0);
}

double ks_normalized(const Histogram& h, double lambda) {
  return ks_impl(h.counts, static_cast<double>(h.trials), lambda);
}

double ks_normalized(const std::map<std::int64_t, double>& weights, double lambda) {
  double total = 0;
  for (const auto& [k, w] : weights) total += w;
  return ks_impl(weights, total, lambda);
}

ChiSquare chi_square(const Histogram& h, const Pmf& pmf, double min_expected) {
  if (h.trials == 0) throw std::domain_error("chi_square needs a nonempty histogram");
  if (!(min_expected > 0)) throw std::domain_error("chi_square needs min_expected > 0");
  if (!h.counts.empty() && h.counts.begin()->first < 0) throw std::domain_error("chi_square needs k >= 0");
  const auto trials = static_cast<double>(h.trials);
  const std::int64_t last = h.counts.empty() ? 0 : h.counts.rbegin()->first;

  struct Bin {
    double observed = 0;
    double expected = 0;
  };
  std::vector<Bin> bins;
  Bin open;
  double covered = 0;
  for (std::int64_t k = 0; k <= last + 1; ++k) {
    double expected = 0;
    if (k <= last) {
      const double p = pmf(k);
      covered += p;
      expected = trials * p;
      auto it = h.counts.find(k);
      if (it != h.counts.end()) open.observed += static_cast<double>(it->second);
    } else {
      expected = trials * std::max(0.0, 1.0 - covered);  // tail k > last, never observed
    }
    open.expected += expected;
    if (open.expected >= min_expected) {
      bins.push_back(open);
      open = {};
    }
  }
  if (open.expected > 0 || open.observed > 0) {
    if (bins.empty()) {
      bins.push_back(open);
    } else {
      bins.back().observed += open.observed;
      bins.back().expected += open.expected;
    }
  }
  if (bins.size() < 2) throw std::domain_error("chi_square needs at least two bins after pooling");

  ChiSquare out;
  for (const auto& b : bins) {
    if (b.expected > 0) {
      out.stat += (b.observed - b.expected) * (b.observed - b.expected) / b.expected;
    } else if (b.observed > 0) {
      out.stat = std::numeric_limits<double>::infinity();
    }
  }
  out.dof = static_cast<std::int64_t>(bins.size()) - 1;
  out.pvalue = chi_square_pvalue(out.stat, out.dof);
  return out;
}

double chi_square_pvalue(double stat, std::int64_t dof) {
  if (dof < 1) throw std::domain_error("chi-square needs dof >= 1");
  if (std::isinf(stat)) return 0.0;
  return boost::math::gamma_q(static_cast<double>(dof) / 2.0, stat / 2.0);
}

}  // namespace lcycle
