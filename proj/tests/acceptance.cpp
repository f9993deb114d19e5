// Acceptance suite: one PASS/FAIL line per criterion. Criterion 12 is
// experimental and reported without affecting the exit status.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles/gaussian_integral.hpp"
#include "szego/szego.hpp"

using namespace szego;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 = none
  bool experimental;
  std::function<Outcome()> body;
};

std::vector<cplx> random_disk_point(std::mt19937_64& gen, int N, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> a;
  for (int k = 0; k < N; ++k) a.push_back(std::polar(radius * std::sqrt(u(gen)), 2.0 * std::numbers::pi * u(gen)));
  return a;
}

Outcome variance_identity() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    if (gaussian_x_moment(MultiIndex::delta(n), MultiIndex::delta(n)) != variance_pmf(n)) {
      o.pass = false;
      o.detail += "mismatch at n=" + std::to_string(n) + "; ";
    }
  }
  o.pass = o.pass && variance_pmf(1) == MomentPolynomial::term(Rat(1), 1) &&
           variance_pmf(3) == MomentPolynomial({Rat(0), Rat(1, 3), Rat(1, 2), Rat(1, 6)});
  o.detail += "n=1..10 exact; n=3 -> " + variance_pmf(3).to_string();
  return o;
}

Outcome raw_equivalence() {
  Outcome o;
  int pairs = 0;
  for (int d = 0; d <= 5; ++d)
    for (int e = 0; e <= 5; ++e)
      for (const auto& p : partitions(d))
        for (const auto& q : partitions(e)) {
          ++pairs;
          if (gaussian_x_moment_raw(p, q) != gaussian_x_moment(p, q)) {
            o.pass = false;
            o.detail += p.to_string() + " vs " + q.to_string() + "; ";
          }
        }
  o.detail += std::to_string(pairs) + " (p, q) pairs with deg <= 5";
  return o;
}

Outcome worked_example() {
  Outcome o;
  const auto x22 = gaussian_x_moment(MultiIndex::parse("2:2"), MultiIndex::parse("2:2"));
  o.pass = x22 == MomentPolynomial({Rat(0), Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)});
  const auto p = MultiIndex::parse("1:1,2:1");
  const auto engine = gaussian_x_moment(p, p);
  const auto integral = oracle::gaussian_integral_moment(p, p);
  const auto stated = MomentPolynomial({Rat(0), Rat(0), Rat(1, 4), Rat(3, 4)});
  o.pass = o.pass && engine == integral;
  o.detail = "E|x_2^2|^2 = " + x22.to_string() + "; E|x_1 x_2|^2: engine " + engine.to_string() +
             ", integral oracle " + integral.to_string() + ", stated (3/4)b^-3 + (1/4)b^-2 is " +
             (stated == engine ? "reproduced" : "NOT reproduced (factor 2; not asserted)");
  return o;
}

Outcome recursion_and_pmf() {
  Outcome o;
  MomentPolynomial sum = MomentPolynomial::one();
  for (int n = 1; n <= 10; ++n) {
    const auto g = gaussian_x_moment(MultiIndex::delta(n), MultiIndex::delta(n));
    if (g != sum.shifted().scaled(Rat(1, n))) {
      o.pass = false;
      o.detail += "recursion fails at n=" + std::to_string(n) + "; ";
    }
    sum += g;
  }
  for (int n = 2; n <= 12; ++n) {
    const auto a = a_coefficients(n);
    Rat total(0), odd(0);
    for (std::size_t k = 0; k < a.size(); ++k) {
      total += a[k];
      if (k % 2 == 0) odd += a[k];
    }
    if (total != Rat(1) || odd != Rat(1, 2)) {
      o.pass = false;
      o.detail += "pmf sums fail at n=" + std::to_string(n) + "; ";
    }
  }
  int checked = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& p : partitions(d))
      for (const auto& q : partitions(d))
        for (const auto& c : gaussian_x_moment(p, q).coefficients()) {
          ++checked;
          if (c < Rat(0)) o.pass = false;
        }
  o.detail += "recursion n<=10, sum a_k = 1 and odd half = 1/2 for n=2..12, " + std::to_string(checked) +
              " coefficients a(p,q,k) >= 0";
  return o;
}

Outcome multiplicity_free() {
  Outcome o;
  int count = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& p : partitions(d)) {
      ++count;
      if (multiplicity_free_moment(p) != gaussian_x_moment(p, MultiIndex::delta(d))) {
        o.pass = false;
        o.detail += p.to_string() + "; ";
      }
    }
  o.detail += std::to_string(count) + " multi-indices with deg <= 5";
  return o;
}

Outcome cn_identity() {
  Outcome o;
  const int N = 10000;
  const std::vector<Rat> betas{Rat(1, 2), Rat(1), Rat(2)};
  std::vector<std::pair<MultiIndex, MultiIndex>> cases;
  for (int n = 1; n <= 4; ++n) cases.emplace_back(MultiIndex::delta(n), MultiIndex::delta(n));
  cases.emplace_back(MultiIndex::parse("1:1,2:1"), MultiIndex::parse("3:1"));
  cases.emplace_back(MultiIndex::parse("1:2"), MultiIndex::parse("2:1"));
  std::ostringstream worst;
  double worst_ratio = 0.0;
  for (const auto& [p, q] : cases) {
    const auto rep = verify_cn_identity(p, q, betas, N);
    for (const auto& c : rep.checks) {
      const double ratio = abs(c.difference).to_double() / c.alpha.tail_estimate.to_double();
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst.str("");
        worst << p << " vs " << q << " at beta " << c.beta;
      }
      if (!c.pass) {
        o.pass = false;
        o.detail += p.to_string() + " vs " + q.to_string() + " at beta " + c.beta.to_string() + " fails; ";
      }
    }
  }
  const auto d1 = MultiIndex::delta(1);
  for (const Rat& beta : betas) {
    const Rat telescoped = Rat(1) / beta - (Rat(1) / beta) / (Rat(N) * beta + Rat(1));
    if (alpha_x_moment(d1, d1, beta, N).value != telescoped) {
      o.pass = false;
      o.detail += "telescoped n=1 sum differs at beta " + beta.to_string() + "; ";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", worst_ratio);
  o.detail += std::to_string(cases.size()) + " cases x 3 betas at max_index 10^4; max |diff|/tail = " + buf + " (" +
              worst.str() + "); n=1 telescoped form exact";
  return o;
}

Outcome graph_tuple_equality() {
  Outcome o;
  // All m with support in [0, 6] and |m| <= 8 (|m| counts the pairs, at most 2 deg).
  std::vector<MultiplicityVector> ms;
  MultiplicityVector cur;
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v > 6) {
      ms.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      if (c) cur.add(v, c);
      self(self, v + 1, left - c);
      if (c) cur.add(v, -c);
    }
  };
  rec(rec, 0, 8);
  std::map<int, std::vector<std::pair<MultiIndex, MultiIndex>>> by_degree;
  for (int d = 1; d <= 4; ++d)
    for (const auto& p : partitions(d))
      for (const auto& q : partitions(d)) by_degree[d].emplace_back(p, q);
  std::uint64_t triples = 0, nonzero = 0, graphs_seen = 0;
  for (const auto& m : ms) {
    const auto graphs = enumerate_m_graphs(m);
    graphs_seen += graphs.size();
    for (const auto& [d, pairs] : by_degree) {
      std::vector<const MCondGraph*> candidates;
      for (const auto& g : graphs)
        if (g.positive_weight() == d && g.negative_weight() == d) candidates.push_back(&g);
      for (const auto& [p, q] : pairs) {
        ++triples;
        std::uint64_t via_graphs = 0;
        for (const auto* g : candidates) via_graphs += count_colorings(*g, p, q);
        const auto tuples = count_tuples(p, q, m, std::max(0, m.max_support()));
        if (tuples != via_graphs) {
          o.pass = false;
          if (o.detail.size() < 400) o.detail += p.to_string() + "|" + q.to_string() + "|" + m.to_string() + "; ";
        }
        nonzero += tuples > 0;
      }
    }
  }
  const auto fig = MultiplicityVector::parse("1:1,2:1,5:2,7:2");
  const auto fp = MultiIndex::parse("3:1,5:1"), fq = MultiIndex::parse("2:2,4:1");
  const auto fig_graphs = c_via_graphs(fp, fq, fig);
  const auto fig_tuples = count_tuples(fp, fq, fig, 7);
  o.pass = o.pass && fig_graphs == fig_tuples && fig_tuples > 0;
  o.detail += std::to_string(triples) + " (p,q,m) triples (" + std::to_string(nonzero) + " nonzero, " +
              std::to_string(graphs_seen) + " m-graphs); Figure 1 m with p=" + fp.to_string() + ", q=" +
              fq.to_string() + ": graphs " + std::to_string(fig_graphs) + " = tuples " + std::to_string(fig_tuples);
  return o;
}

Outcome volume_identity() {
  Outcome o;
  std::mt19937_64 gen(2024);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int N = 1 + t % 4;
    const auto r = jacobian_determinant(VerblunskySeq(random_disk_point(gen, N, 0.8)));
    worst = std::max(worst, r.relative_gap());
  }
  o.pass = worst <= 1e-6;
  std::uniform_int_distribution<int> num(-9, 9);
  int exact_points = 0;
  for (int t = 0; t < 12; ++t) {
    const int N = 1 + t % 3;
    std::vector<GaussRat> a;
    for (int k = 0; k < N; ++k) a.emplace_back(Rat(num(gen), 23), Rat(num(gen), 29));
    const auto ex = jacobian_determinant_exact(a);
    ++exact_points;
    if (abs(ex.det) != ex.volume_factor) o.pass = false;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  o.detail = std::string("20 random points N<=4: max relative gap ") + buf + "; " + std::to_string(exact_points) +
             " rational points N<=3 exact";
  return o;
}

Outcome szego_identity() {
  Outcome o;
  std::mt19937_64 gen(77);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const auto a = VerblunskySeq(random_disk_point(gen, 1 + t % 4, 0.5));
    worst = std::max(worst, szego_identity_gap(a, 200));
  }
  worst = std::max(worst, szego_identity_gap(VerblunskySeq{cplx(0.3), cplx(0.0, 0.4)}, 200));
  o.pass = worst <= 1e-8;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  o.detail = std::string("41 sequences N<=4, |alpha|<=0.5, order 200: max gap ") + buf;
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937_64 gen(99);
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const VerblunskySeq a(random_disk_point(gen, 1 + t % 6, 0.6));
    const auto back = verblunsky_from_moments(trig_moments(measure_density(a, 4096), static_cast<int>(a.size())));
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(back.values()[k] - a.values()[k]));
  }
  o.pass = worst <= 1e-9;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  o.detail = std::string("30 sequences N<=6, |alpha|<=0.6, grid 4096: max error ") + buf;
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const std::size_t S = 100000;
  int checks = 0;
  double worst = 0.0;
  std::string worst_name;
  auto check = [&](const std::string& name, const SampleStats& s, cplx target) {
    ++checks;
    const double z = s.z_score(target);
    if (z > worst) {
      worst = z;
      worst_name = name;
    }
    if (z > 4.0) {
      o.pass = false;
      o.detail += name + " z=" + std::to_string(z) + "; ";
    }
  };
  std::uint64_t seed = 1000;
  for (const Rat beta_r : {Rat(1, 2), Rat(1)}) {
    const double beta = beta_r.to_double();
    const std::string tag = " beta=" + beta_r.to_string();
    for (int n = 1; n <= 3; ++n) {
      const std::string nn = std::to_string(n);
      auto stats = [&](auto draw) { return SampleStats::of(parallel_draws(S, Seed{seed++}, 1, draw)); };
      check("E alpha_" + nn + tag, stats([&](Rng& r) { return sample_alpha(beta, n, r)(n); }), 0.0);
      check("E|alpha_" + nn + "|^2" + tag, stats([&](Rng& r) { return cplx(std::norm(sample_alpha(beta, n, r)(n))); }),
            1.0 / (n * beta + 1.0));
      check("E f_" + nn + tag, stats([&](Rng& r) { return sample_f(beta, n, r)[static_cast<std::size_t>(n)]; }), 0.0);
      check("E|f_" + nn + "|^2" + tag,
            stats([&](Rng& r) { return cplx(std::norm(sample_f(beta, n, r)[static_cast<std::size_t>(n)])); }),
            1.0 / (n * beta));
      const auto p = MultiIndex::delta(n);
      check("gaussian E|x_" + nn + "|^2" + tag, mc_x_moment(MonteCarloSide::gaussian, p, p, beta, 4 * n, S, Seed{seed++}),
            variance_pmf(n).eval(beta_r).to_double());
      const int N = 200;
      check("alpha E|x_" + nn + "|^2" + tag, mc_x_moment(MonteCarloSide::alpha, p, p, beta, N, S, Seed{seed++}),
            alpha_x_moment(p, p, beta_r, N).value.to_double());
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", worst);
  o.detail += std::to_string(checks) + " checks at 10^5 samples; max z = " + buf + " (" + worst_name + ")";
  return o;
}

Outcome pushforward() {
  Outcome o;
  const double beta = 1.0;
  const std::vector<std::pair<int, double>> schedule{{64, 0.98}, {128, 0.99}, {256, 0.995}, {512, 0.9975}};
  std::ostringstream detail;
  detail.precision(4);
  double last = 0.0;
  double last_err = 0.0;
  for (const auto& [modes, radius] : schedule) {
    const auto r = pushforward_experiment(beta, modes, radius, 2000, 1, Seed{314});
    last = r.abs2[0].mean.real();
    last_err = r.abs2[0].std_error;
    detail << "(" << modes << ", " << radius << "): " << last << " +- " << last_err << "; ";
  }
  o.pass = std::abs(last - 0.5) <= 0.05;
  detail << "target 1/2, band 10%";
  o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact variance identity", 10, false, variance_identity},
      {2, "raw/partition equivalence deg <= 5", 120, false, raw_equivalence},
      {3, "worked example E|x_2^2|^2 and x_1 x_2 check", 0, false, worked_example},
      {4, "recursion and pmf properties", 0, false, recursion_and_pmf},
      {5, "multiplicity-free moments", 0, false, multiplicity_free},
      {6, "Gaussian/alpha moment identity at max_index 10^4", 300, false, cn_identity},
      {7, "graph coloring count = tuple count", 0, false, graph_tuple_equality},
      {8, "volume identity", 0, false, volume_identity},
      {9, "Szego identity", 0, false, szego_identity},
      {10, "OPUC round trip", 0, false, round_trip},
      {11, "Monte Carlo consistency", 0, false, monte_carlo},
      {12, "pushforward E|alpha_1|^2 (experimental)", 0, true, pushforward},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.pass = false;
      o.detail += "; over time limit " + std::to_string(c.time_limit) + " s";
    }
    char head[160];
    std::snprintf(head, sizeof head, "%s criterion %2d: %s [%.2f s] ", o.pass ? "PASS" : "FAIL", c.id,
                  c.title.c_str(), secs);
    std::cout << head << (c.experimental && !o.pass ? "(experimental, not fatal) " : "") << "-- " << o.detail
              << std::endl;
    if (!c.experimental) all = all && o.pass;
  }
  std::cout << (all ? "acceptance: all required criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
