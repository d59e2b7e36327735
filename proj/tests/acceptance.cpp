// Copyright 2026 The Meanpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, INFO lines for context.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "meanpart/diversity.hpp"
#include "meanpart/simulation.hpp"
#include "oracles.hpp"

using namespace meanpart;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void verdict(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& text) {
  std::printf("INFO %s\n", text.c_str());
  std::fflush(stdout);
}

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<int> balanced_labels(std::size_t m, std::size_t ell) {
  std::vector<int> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = static_cast<int>(j % ell);
  return out;
}

// Noisy copies of labels j % ell, each differing on one of 10 * ell points,
// which keeps them inside the open asymmetry ball of the clean labels.
std::vector<Partition> homogeneous_sample(oracle::Gen& g, std::size_t n, std::size_t ell) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(oracle::noisy_copy(g, ell, 10 * ell, 1));
  return out;
}

Partition clean_center(std::size_t ell) {
  return Partition(LabeledPartition::from_labels(balanced_labels(10 * ell, ell), ell));
}

void criterion_metric() {
  const auto start = Clock::now();
  oracle::Gen g(101);
  double worst = 0.0;
  std::size_t soft = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t ell = 1 + g() % 5, m = 1 + g() % 10;
    const bool hard = rep % 2 == 0;
    const auto a = hard ? oracle::random_hard(g, ell, m) : oracle::random_soft(g, ell, m);
    const auto b = hard ? oracle::random_hard(g, ell, m) : oracle::random_soft(g, ell, m);
    soft += !hard;
    worst = std::max(worst, std::abs(delta(Partition(a), Partition(b)).distance - oracle::delta(a, b)));
  }
  std::size_t axiom_failures = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t ell = 1 + g() % 5, m = 1 + g() % 10;
    const Partition a(oracle::random_any(g, ell, m));
    const Partition b(oracle::random_any(g, ell, m));
    const Partition c(oracle::random_any(g, ell, m));
    const double ab = delta(a, b).distance;
    const bool ok = std::abs(ab - delta(b, a).distance) <= 1e-12 && delta(a, a).distance == 0.0 &&
                    (ab > 0.0 || equal(a, b, 1e-9)) &&
                    ab <= delta(a, c).distance + delta(c, b).distance + 1e-9;
    axiom_failures += !ok;
  }
  const double secs = seconds_since(start);
  verdict(1, worst <= 1e-9 && axiom_failures == 0 && secs < 10.0, "metric oracle equivalence",
          "max |delta - brute| = " + num(worst) + " over 500 pairs (" + std::to_string(soft) +
              " soft), axiom violations " + std::to_string(axiom_failures) +
              "/500 triples, " + num(secs, 3) + " s");
}

void criterion_asymmetry() {
  oracle::Gen g(202);
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t ell = 2 + g() % 5, m = 1 + g() % 8;
    const auto z = oracle::random_any(g, ell, m);
    worst = std::max(worst, std::abs(degree_of_asymmetry(Partition(z)) - oracle::asymmetry(z)));
  }
  verdict(2, worst <= 1e-9, "asymmetry closed form",
          "max |sqrt2 * min row gap - brute| = " + num(worst) + " over 200 partitions, ell in [2, 6]");
}

void criterion_fixed_point() {
  oracle::Gen g(303);
  double worst_residual = 0.0, worst_rise = 0.0;
  std::size_t unconverged = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + g() % 8, ell = 2 + g() % 3, m = 3 + g() % 6;
    std::vector<Partition> parts;
    for (std::size_t i = 0; i < n; ++i) parts.emplace_back(oracle::random_any(g, ell, m));
    const Sample s(parts);
    HeuristicOptions h;
    h.seed = static_cast<std::uint64_t>(rep);
    const auto r = mean_multistart(s, h);
    unconverged += !r.converged;
    // Average of the sample placed in optimal position with the returned mean.
    const auto& rep_mean = r.mean.canonical();
    std::vector<LabeledPartition> placed;
    for (const auto& x : parts) placed.push_back(align(rep_mean, x.canonical()).aligned);
    worst_residual = std::max(worst_residual, max_abs_difference(average(placed), rep_mean));
    for (std::size_t i = 1; i < r.trace.size(); ++i)
      worst_rise = std::max(worst_rise, r.trace[i] - r.trace[i - 1]);
  }
  verdict(3, worst_residual <= 1e-9 && worst_rise <= 0.0, "mean partition fixed point",
          "max |M - avg of aligned reps| = " + num(worst_residual) + ", max F_n increase " +
              num(worst_rise) + ", unconverged runs " + std::to_string(unconverged) + "/100");
}

void criterion_alignment_equivalence() {
  oracle::Gen g(404);
  std::size_t beaten = 0, homogeneous = 0, mismatched = 0, multi_mean = 0;
  double worst_gap = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t ell = 2 + rep % 3;
    const std::size_t max_n = ell == 2 ? 12 : ell == 3 ? 6 : 3;
    const std::size_t n = 2 + g() % (max_n - 1);
    const std::size_t m = 4 + g() % 5;
    std::vector<Partition> parts;
    if (rep % 2 == 0) {
      parts = homogeneous_sample(g, n, ell);
    } else {
      for (std::size_t i = 0; i < n; ++i) parts.emplace_back(oracle::random_any(g, ell, m));
    }
    const Sample s(parts);
    if (alignment_enumeration_count(ell, n) > 10'000) continue;
    const auto exact = mean_exact(s, 10'000);
    const std::size_t mm = s.m();
    for (int probe = 0; probe < 1000; ++probe) {
      const Partition z(oracle::random_any(g, ell, mm));
      if (frechet(s, z) < exact.frechet_value - 1e-9) ++beaten;
    }
    std::vector<Partition> centers;
    if (rep % 2 == 0) centers.push_back(clean_center(ell));
    const auto cert = certify_homogeneous(parts, centers, {}, exact.mean);
    if (cert.homogeneous) {
      ++homogeneous;
      multi_mean += mean_set(s, 10'000).size() != 1;
      const auto heur = mean_multistart(s, {});
      const double gap = std::max(std::abs(heur.frechet_value - exact.frechet_value),
                                  delta(heur.mean, exact.mean).distance);
      worst_gap = std::max(worst_gap, gap);
      mismatched += gap > 1e-7;
    }
  }
  verdict(4, beaten == 0 && mismatched == 0 && homogeneous > 0, "alignment and Frechet minima agree",
          "probes beating the exact mean " + std::to_string(beaten) + "/50000; heuristic vs exact on " +
              std::to_string(homogeneous) + " certified samples: max gap " + num(worst_gap) +
              ", non-singleton mean sets among them " + std::to_string(multi_mean));
}

void criterion_binomial() {
  const double v = binomial_majority_prob(3, 0.6);
  bool monotone = true;
  double prev = 0.0, worst_half = 0.0;
  for (std::size_t n = 1; n <= 201; n += 2) {
    const double cur = binomial_majority_prob(n, 0.6);
    if (cur <= prev) monotone = false;
    prev = cur;
    worst_half = std::max(worst_half, std::abs(binomial_majority_prob(n, 0.5) - 0.5));
  }
  verdict(5, v == 0.648 && monotone && worst_half <= 1e-12, "binomial majority probability",
          "P(3, 0.6) = " + num(v, 17) + ", increasing over odd n <= 201: " +
              (monotone ? "yes" : "no") + ", max |P(n, 0.5) - 0.5| = " + num(worst_half));
}

// The main convergence experiment shared by the two limit criteria.
ExperimentReport convergence_run() {
  const auto truth = GroundTruth::from_labels(balanced_labels(64, 2), 2);
  const auto model = make_model(truth, {0.95}, SamplingMode::kBallRejection);
  ExperimentConfig cfg;
  cfg.n_grid = {1, 11, 51, 101};
  cfg.trials = 2000;
  cfg.seed = 20240601;
  return run_convergence_experiment(model, cfg);
}

void criterion_limit_one(const ExperimentReport& r, double secs) {
  const auto& last = r.grid.back();
  const double min_rate = *std::min_element(last.rate.begin(), last.rate.end());
  bool within = true;
  std::string detail;
  std::size_t point_outliers = 0, point_checks = 0;
  for (const auto& g : r.grid) {
    // Points in one trial share a sample, so the standard error comes from
    // per-trial averages, floored by the independent-points value.
    const double q = g.pooled_ref;
    const double floor_se = std::sqrt(q * (1.0 - q) / static_cast<double>(r.trials * r.m));
    const double se = std::max(g.pooled_stderr, floor_se);
    const double z = se > 0.0 ? std::abs(g.pooled_rate - q) / se : (g.pooled_rate == q ? 0.0 : 1e9);
    within = within && z <= 3.0;
    detail += " n=" + std::to_string(g.n) + ":" + num(g.pooled_rate, 5) + "/" + num(q, 5) +
              "(z=" + num(z, 2) + ")";
    for (std::size_t j = 0; j < g.rate.size(); ++j) {
      const double ref = g.binomial_ref[j];
      const double pse = std::sqrt(ref * (1.0 - ref) / static_cast<double>(r.trials));
      ++point_checks;
      if (std::abs(g.rate[j] - ref) > 3.0 * pse + 1e-12) ++point_outliers;
    }
  }
  info("per-point 3-sigma excursions " + std::to_string(point_outliers) + "/" +
       std::to_string(point_checks) + " (about " + num(0.0027 * static_cast<double>(point_checks), 2) +
       " expected by chance)");
  double p_hat = 0.0;
  for (double v : r.p_hat) p_hat += v;
  p_hat /= static_cast<double>(r.p_hat.size());
  info("mean p_hat " + num(p_hat, 6) + " vs nominal 0.95, acceptance " +
       num(static_cast<double>(r.partitions_drawn) / static_cast<double>(r.proposals), 4) +
       ", experiment " + num(secs, 3) + " s");
  verdict(6, min_rate >= 0.99 && within && secs < 300.0, "majority vote tends to 1",
          "min per-point rate at n=101 " + num(min_rate, 6) + "; pooled rate/reference:" + detail);
}

void criterion_limit_two(const ExperimentReport& r) {
  bool monotone = true;
  std::string detail;
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const auto& g = r.grid[i];
    detail += " n=" + std::to_string(g.n) + ":" + num(g.recovery_rate, 5);
    if (i == 0) continue;
    const auto& p = r.grid[i - 1];
    const double se = std::sqrt(p.recovery_stderr * p.recovery_stderr + g.recovery_stderr * g.recovery_stderr);
    if (g.recovery_rate < p.recovery_rate - 3.0 * se) monotone = false;
  }
  const double final_rate = r.grid.back().recovery_rate;

  // Fair coins at three points, exact votes elsewhere: every draw differs from
  // the truth on at most three points and stays inside the open ball.
  const std::size_t m = 64;
  std::vector<double> p(m, 1.0);
  p[0] = p[1] = p[2] = 0.5;
  const auto truth = GroundTruth::from_labels(balanced_labels(m, 2), 2);
  const auto coin = make_model(truth, p, SamplingMode::kBallRejection);
  ExperimentConfig cfg;
  cfg.n_grid = {1, 11, 51, 101};
  cfg.trials = 2000;
  cfg.seed = 424242;
  const auto half = run_convergence_experiment(coin, cfg);
  bool centered = true;
  double worst_z = 0.0;
  const double se = std::sqrt(0.25 / static_cast<double>(cfg.trials));
  for (const auto& g : half.grid)
    for (std::size_t j = 0; j < 3; ++j) {
      const double z = std::abs(g.rate[j] - 0.5) / se;
      worst_z = std::max(worst_z, z);
      centered = centered && z <= 3.0;
    }
  info("fair-coin run p_hat at the noisy points " + num(half.p_hat[0], 5) + ", " +
       num(half.p_hat[1], 5) + ", " + num(half.p_hat[2], 5) + "; proposals " +
       std::to_string(half.proposals) + " for " + std::to_string(half.partitions_drawn) + " draws");
  verdict(7, monotone && final_rate >= 0.99 && centered, "exact recovery tends to 1",
          "recovery" + detail + "; fair-coin points max |rate - 0.5| / se = " + num(worst_z, 3));
}

void demo_unconstrained_half() {
  const auto truth = GroundTruth::from_labels(balanced_labels(16, 2), 2);
  const auto model = make_model(truth, {0.5});
  ExperimentConfig cfg;
  cfg.n_grid = {1, 5, 11};
  cfg.trials = 200;
  cfg.seed = 7;
  const auto r = run_convergence_experiment(model, cfg);
  std::string rates;
  for (const auto& g : r.grid) rates += " n=" + std::to_string(g.n) + ":" + num(g.pooled_rate, 4);
  info("unconstrained p=0.5 (outside any asymmetry ball): p_hat " + num(r.p_hat[0], 4) +
       ", pooled majority rates" + rates);
}

void criterion_diversity() {
  oracle::Gen g(808);
  std::size_t violations = 0, certified = 0, squared_ok = 0, printed_ok = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t ell = 2 + g() % 2, n = 2 + g() % 4;
    std::vector<Partition> parts;
    if (rep % 2 == 0)
      parts = homogeneous_sample(g, n, ell);
    else
      for (std::size_t i = 0; i < n; ++i) parts.emplace_back(oracle::random_any(g, ell, 5));
    const Sample s(parts);
    const auto mean = mean_exact(s).mean;
    std::vector<Partition> centers;
    if (rep % 2 == 0) centers.push_back(clean_center(ell));
    const auto rep_report = diversity_report(s, mean, centers);
    if (rep_report.variation_f > rep_report.pairwise_g + 1e-9) ++violations;
    if (rep_report.homogeneous) {
      ++certified;
      const double alpha = degree_of_asymmetry(*rep_report.certifying_center);
      squared_ok += rep_report.pairwise_g <= alpha * alpha / 4.0 + 1e-9;
      printed_ok += rep_report.pairwise_g <= alpha / 4.0 + 1e-9;
    }
  }
  info("bound with alpha/4 in place of alpha^2/4 holds on " + std::to_string(printed_ok) + "/" +
       std::to_string(certified) + " certified samples");
  verdict(8, violations == 0 && certified > 0 && squared_ok == certified, "diversity inequality",
          "F(M) > G(S) on " + std::to_string(violations) + "/500 samples; G(S) <= alpha^2/4 on " +
              std::to_string(squared_ok) + "/" + std::to_string(certified) + " certified samples");
}

void criterion_loss() {
  oracle::Gen g(909);
  std::size_t sets = 0, inexact = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t ell = 2 + g() % 2, n = 2 + g() % 3;
    std::vector<Partition> parts;
    for (std::size_t i = 0; i < n; ++i) parts.emplace_back(oracle::random_any(g, ell, 4));
    const auto set = mean_set(Sample(parts));
    const auto truth = GroundTruth(oracle::random_hard(g, ell, 4));
    const auto r = loss_decomposition(set, truth);
    ++sets;
    inexact += r.worst != r.estimation + r.approximation;
  }
  std::size_t homogeneous = 0, nonzero = 0;
  for (int tries = 0; homogeneous < 100 && tries < 1000; ++tries) {
    const std::size_t ell = 2 + g() % 2;
    const auto parts = homogeneous_sample(g, 3 + g() % 4, ell);
    const Sample s(parts);
    const auto set = mean_set(s);
    if (!certify_homogeneous(parts, {clean_center(ell)}, {}, set.front()).homogeneous) continue;
    ++homogeneous;
    const auto truth = GroundTruth(oracle::random_hard(g, s.ell(), s.m()));
    const auto r = loss_decomposition(set, truth);
    nonzero += r.estimation != 0.0;
    inexact += r.worst != r.estimation + r.approximation;
  }
  const Sample amb({Partition(LabeledPartition::from_labels(std::vector<int>{0, 0, 1, 1}, 2)),
                    Partition(LabeledPartition::from_labels(std::vector<int>{0, 1, 0, 1}, 2))});
  const auto amb_set = mean_set(amb);
  const auto amb_truth = GroundTruth::from_labels(std::vector<int>{0, 0, 0, 1}, 2);
  const auto amb_loss = loss_decomposition(amb_set, amb_truth);
  verdict(9, inexact == 0 && homogeneous == 100 && nonzero == 0 && amb_loss.estimation > 0.0,
          "loss decomposition",
          "inexact sums " + std::to_string(inexact) + " over " + std::to_string(sets + homogeneous) +
              " mean sets; nonzero estimation on " + std::to_string(nonzero) + "/" +
              std::to_string(homogeneous) + " certified samples; ambiguous pair: " +
              std::to_string(amb_set.size()) + " means, worst " + num(amb_loss.worst) + ", best " +
              num(amb_loss.best) + ", estimation " + num(amb_loss.estimation));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_cli() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "meanpart_acceptance";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "sim.json")
        << R"({"ell": 2, "m": 32, "p": 0.9, "mode": "ball", "n_grid": [1, 5, 21], "trials": 100, "seed": 11})";
  }
  auto run = [&](const std::string& out) {
    const std::string cmd = std::string(MEANPART_CLI) + " simulate --config " +
                            (dir / "sim.json").string() + " --output " + (dir / out).string();
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const int a = run("a.json");
  const int b = run("b.json");
  const auto ra = slurp(dir / "a.json"), rb = slurp(dir / "b.json");
  const bool same = a == 0 && b == 0 && !ra.empty() && ra == rb &&
                    slurp(dir / "a.csv") == slurp(dir / "b.csv");
  verdict(10, same, "CLI reproducibility",
          "exit codes " + std::to_string(a) + "/" + std::to_string(b) + ", " +
              std::to_string(ra.size()) + "-byte reports " + (ra == rb ? "identical" : "differ"));
  fs::remove_all(dir);
}

}  // namespace

int main() {
  criterion_metric();
  criterion_asymmetry();
  criterion_fixed_point();
  criterion_alignment_equivalence();
  criterion_binomial();
  const auto start = Clock::now();
  const auto report = convergence_run();
  const double secs = seconds_since(start);
  criterion_limit_one(report, secs);
  criterion_limit_two(report);
  demo_unconstrained_half();
  criterion_diversity();
  criterion_loss();
  criterion_cli();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
