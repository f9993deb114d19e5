#ifndef SZEGO_CLI_HPP
#define SZEGO_CLI_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szego/alpha_moments.hpp"
#include "szego/complex_rational.hpp"
#include "szego/gaussian_moments.hpp"
#include "szego/graph_count.hpp"
#include "szego/monte_carlo.hpp"
#include "szego/opuc.hpp"
#include "szego/report.hpp"
#include "szego/volume.hpp"

namespace szego::cli {

/// Bad command-line input; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
T parse_index(const std::string& flag, const std::string& text) {
  try {
    return T::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline Rat parse_beta(const std::string& text) {
  Rat b;
  try {
    b = parse_decimal(text);
  } catch (const std::exception&) {
    throw UsageError("--beta: malformed value '" + text + "'");
  }
  if (b.sign() <= 0) {
    throw UsageError("--beta: must be positive, got '" + text + "'");
  }
  return b;
}

/// Gaussian-rational alpha values from a JSON file of [re, im] pairs, an
/// inline JSON array, or a comma-separated list of complex literals.
inline std::vector<GaussRat> parse_alpha(const std::string& text) {
  auto from_json = [](const Json& j) {
    if (!j.is_array()) throw UsageError("--alpha: expected a JSON array of [re, im] pairs");
    std::vector<GaussRat> out;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2) throw UsageError("--alpha: malformed entry " + e.dump());
      auto part = [](const Json& v) { return v.is_string() ? parse_decimal(v.get<std::string>()) : parse_decimal(v.dump()); };
      out.emplace_back(part(e[0]), part(e[1]));
    }
    return out;
  };
  try {
    if (!text.empty() && text.front() == '[') {
      return from_json(Json::parse(text));
    }
    if (std::filesystem::is_regular_file(text)) {
      std::ifstream in(text);
      return from_json(Json::parse(in));
    }
    std::vector<GaussRat> out;
    for (const auto& tok : split_list(text)) out.push_back(parse_complex(tok));
    return out;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
}

inline std::vector<cplx> to_complex(const std::vector<GaussRat>& a) {
  std::vector<cplx> out;
  for (const auto& z : a) out.push_back(z.to_complex());
  return out;
}

inline Json complex_list(const std::vector<cplx>& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(to_json(z));
  return j;
}

inline Json alpha_json(const std::vector<GaussRat>& a) {
  Json j = Json::array();
  for (const auto& z : a) j.push_back(Json::array({z.re.to_string(), z.im.to_string()}));
  return j;
}

inline constexpr double kVolumeTolerance = 1e-6;
inline constexpr double kSzegoTolerance = 1e-8;
inline constexpr double kRoundTripTolerance = 1e-9;
inline constexpr double kMcSigmas = 4.0;

/// Parses `args` (without the program name), runs one subcommand and writes
/// its JSON report to `out`. Returns 0 (PASS/EXPERIMENTAL), 1 (FAIL) or 2 (usage).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moment identities for Verblunsky coefficients and the Gaussian field", "szego"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (recorded in the report)")->check(CLI::PositiveNumber);

  std::string p_text, q_text, m_text, beta_text, alpha_text, side_text, csv_path;
  int max_index = 0, n = 0, order = 0, grid = 4096, modes = 0, max_alpha = 1, n_trunc = 0;
  bool exact = false, allow_large_beta = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double radius = 0.0;

  Report report;
  std::function<void()> action;

  auto pq = [&](CLI::App* sub) {
    sub->add_option("--p", p_text, "multi-index, e.g. 1:2,3:1")->required();
    sub->add_option("--q", q_text, "multi-index")->required();
  };

  auto* gm = app.add_subcommand("gaussian-moment", "E(x^p conj(x^q)) under the Gaussian law");
  pq(gm);
  gm->callback([&] {
    action = [&] {
      const auto p = parse_index<MultiIndex>("--p", p_text);
      const auto q = parse_index<MultiIndex>("--q", q_text);
      const auto poly = gaussian_x_moment(p, q);
      report.results["polynomial"] = to_json(poly);
      report.results["total_mass"] = to_json(poly.total_mass());
      if (p.degree() <= kRawDegreeGuard && q.degree() <= kRawDegreeGuard) {
        const bool same = gaussian_x_moment_raw(p, q) == poly;
        report.diagnostics["raw_sum_agrees"] = same;
        if (!same) report.status = Status::fail;
      }
    };
  });

  auto* am = app.add_subcommand("alpha-moment", "truncated E(x^p conj(x^q)) under the alpha law");
  pq(am);
  am->add_option("--beta", beta_text, "rational beta > 0")->required();
  am->add_option("--max-index", max_index)->required()->check(CLI::NonNegativeNumber);
  am->callback([&] {
    action = [&] {
      const auto p = parse_index<MultiIndex>("--p", p_text);
      const auto q = parse_index<MultiIndex>("--q", q_text);
      const Rat beta = parse_beta(beta_text);
      const auto r = alpha_x_moment(p, q, beta, max_index);
      report.results["value"] = to_json(r.value);
      const auto joint = alpha_joint_moment(p, q);
      report.results["alpha_joint_moment"] = to_json(joint);
      report.results["alpha_joint_moment_at_beta"] = to_json(joint.eval(beta));
      report.diagnostics["max_index"] = r.max_index;
      report.diagnostics["last_shell"] = to_json(r.last_shell);
      report.diagnostics["tail"] = to_json(r.tail_estimate);
    };
  });

  auto* id = app.add_subcommand("identity", "Gaussian side versus truncated alpha side at rational betas");
  pq(id);
  id->add_option("--beta", beta_text, "comma-separated rational betas")->required();
  id->add_option("--max-index", max_index)->required()->check(CLI::NonNegativeNumber);
  id->callback([&] {
    action = [&] {
      const auto p = parse_index<MultiIndex>("--p", p_text);
      const auto q = parse_index<MultiIndex>("--q", q_text);
      if (p.degree() != q.degree()) throw UsageError("identity: deg(p) must equal deg(q)");
      std::vector<Rat> betas;
      for (const auto& b : split_list(beta_text)) betas.push_back(parse_beta(b));
      const auto rep = verify_cn_identity(p, q, betas, max_index);
      report.results["gaussian_polynomial"] = to_json(rep.gaussian);
      Json checks = Json::array();
      Json tails = Json::array();
      for (const auto& c : rep.checks) {
        checks.push_back({{"beta", to_json(c.beta)},
                          {"gaussian", to_json(c.gaussian)},
                          {"alpha_partial_sum", to_json(c.alpha.value)},
                          {"difference", to_json(c.difference)},
                          {"status", c.pass ? "PASS" : "FAIL"}});
        tails.push_back(to_json(c.alpha.tail_estimate));
      }
      report.results["checks"] = checks;
      report.diagnostics["max_index"] = max_index;
      report.diagnostics["tail"] = tails.size() == 1 ? tails[0] : tails;
      report.diagnostics["safety_factor"] = kTailSafetyFactor;
      report.status = rep.pass ? Status::pass : Status::fail;
    };
  });

  auto* ni = app.add_subcommand("nice-identity", "truncated gap-sequence sum against variance_pmf(n)");
  ni->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  ni->add_option("--beta", beta_text)->required();
  ni->add_option("--max-index", max_index)->required()->check(CLI::NonNegativeNumber);
  ni->callback([&] {
    action = [&] {
      const Rat beta = parse_beta(beta_text);
      const auto r = nice_identity_check(n, beta, max_index);
      const Rat diff = r.rhs - r.lhs;
      report.results["lhs"] = to_json(r.lhs);
      report.results["rhs"] = to_json(r.rhs);
      report.results["difference"] = to_json(diff);
      report.diagnostics["max_index"] = max_index;
      report.diagnostics["last_shell"] = to_json(r.last_shell);
      report.diagnostics["tail"] = to_json(r.tail);
      report.status = abs(diff) <= Rat(kTailSafetyFactor) * r.tail ? Status::pass : Status::fail;
    };
  });

  auto* va = app.add_subcommand("variance", "E|x_n|^2 as a polynomial in 1/beta");
  va->add_option("--n", n)->required()->check(CLI::Range(1, 20));
  va->callback([&] {
    action = [&] {
      const auto poly = variance_pmf(n);
      report.results["polynomial"] = to_json(poly);
      const auto a = a_coefficients(n);
      bool same = true;
      for (int k = 1; k <= n; ++k) same = same && a[static_cast<std::size_t>(k - 1)] == poly.coefficient(static_cast<std::size_t>(k));
      report.diagnostics["a_coefficients_agree"] = same;
      if (!same) report.status = Status::fail;
    };
  });

  auto* co = app.add_subcommand("count", "C(p, q, m) by tuple enumeration and by graph colorings");
  pq(co);
  co->add_option("--m", m_text, "multiplicity vector, e.g. 0:1,2:1")->required();
  co->callback([&] {
    action = [&] {
      const auto p = parse_index<MultiIndex>("--p", p_text);
      const auto q = parse_index<MultiIndex>("--q", q_text);
      const auto m = parse_index<MultiplicityVector>("--m", m_text);
      const int N = std::max(0, m.max_support());
      const auto tuples = count_tuples(p, q, m, N);
      const auto graphs = enumerate_m_graphs(m);
      std::uint64_t colored = 0;
      Json per_graph = Json::array();
      for (const auto& g : graphs) {
        const auto c = p.degree() == q.degree() ? count_colorings(g, p, q) : 0;
        colored += c;
        if (c > 0) {
          Json edges = Json::array();
          for (const auto& [s, t] : g.edges) edges.push_back(Json::array({s, t}));
          per_graph.push_back({{"edges", edges}, {"colorings", c}});
        }
      }
      report.results["tuples"] = tuples;
      report.results["graphs"] = colored;
      report.diagnostics["m_condition_graphs"] = graphs.size();
      report.diagnostics["colored_graphs"] = per_graph;
      report.status = tuples == colored ? Status::pass : Status::fail;
    };
  });

  auto* ja = app.add_subcommand("jacobian", "|det| of alpha -> x against prod (1 - |alpha_n|^2)^(n-1)");
  ja->add_option("--alpha", alpha_text, "JSON file, JSON array, or list like 0.1+0.2i,0.3")->required();
  ja->add_flag("--exact", exact, "exact determinant at the given rational point");
  ja->callback([&] {
    action = [&] {
      const auto a = parse_alpha(alpha_text);
      report.params["alpha"] = alpha_json(a);
      if (exact) {
        const auto r = jacobian_determinant_exact(a);
        report.results["det"] = to_json(r.det);
        report.results["volume_factor"] = to_json(r.volume_factor);
        report.status = abs(r.det) == r.volume_factor ? Status::pass : Status::fail;
      } else {
        const auto r = jacobian_determinant(VerblunskySeq(to_complex(a)));
        report.results["det_abs"] = r.det_abs;
        report.results["volume_factor"] = r.volume_factor;
        report.diagnostics["relative_gap"] = r.relative_gap();
        report.diagnostics["ill_conditioned"] = r.ill_conditioned;
        report.diagnostics["tolerance"] = kVolumeTolerance;
        report.status = r.relative_gap() <= kVolumeTolerance ? Status::pass : Status::fail;
      }
    };
  });

  auto* sc = app.add_subcommand("szego-check", "exp(-sum m |f_m|^2) against prod (1 - |alpha_n|^2)^n");
  sc->add_option("--alpha", alpha_text)->required();
  sc->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);
  sc->callback([&] {
    action = [&] {
      const auto a = parse_alpha(alpha_text);
      report.params["alpha"] = alpha_json(a);
      const double gap = szego_identity_gap(VerblunskySeq(to_complex(a)), order);
      report.results["gap"] = gap;
      report.diagnostics["tolerance"] = kSzegoTolerance;
      report.status = gap <= kSzegoTolerance ? Status::pass : Status::fail;
    };
  });

  auto* rt = app.add_subcommand("roundtrip", "alpha -> density -> moments -> alpha");
  rt->add_option("--alpha", alpha_text)->required();
  rt->add_option("--grid", grid)->check(CLI::Range(16, 1 << 24));
  rt->callback([&] {
    action = [&] {
      const auto a = parse_alpha(alpha_text);
      report.params["alpha"] = alpha_json(a);
      const VerblunskySeq seq(to_complex(a));
      const auto back =
          verblunsky_from_moments(trig_moments(measure_density(seq, grid), static_cast<int>(seq.size())));
      double err_max = 0.0;
      for (std::size_t k = 0; k < seq.size(); ++k) err_max = std::max(err_max, std::abs(back.values()[k] - seq.values()[k]));
      report.results["recovered"] = complex_list(back.values());
      report.results["max_error"] = err_max;
      report.diagnostics["tolerance"] = kRoundTripTolerance;
      report.status = err_max <= kRoundTripTolerance ? Status::pass : Status::fail;
    };
  });

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of E(x^p conj(x^q))");
  mc->add_option("--side", side_text, "gaussian or alpha")->required()->check(CLI::IsMember({"gaussian", "alpha"}));
  pq(mc);
  mc->add_option("--beta", beta_text)->required();
  mc->add_option("--samples", samples)->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  mc->add_option("--seed", seed)->required();
  mc->add_option("--n-trunc", n_trunc, "alpha truncation (default max(200, 4 deg p))");
  mc->add_option("--csv", csv_path, "write raw samples to this file");
  mc->callback([&] {
    action = [&] {
      const auto p = parse_index<MultiIndex>("--p", p_text);
      const auto q = parse_index<MultiIndex>("--q", q_text);
      const Rat beta = parse_beta(beta_text);
      if (p.degree() != q.degree() || p.degree() > 4) throw UsageError("mc: need deg(p) = deg(q) <= 4");
      const int N = n_trunc > 0 ? n_trunc : std::max(200, 4 * p.degree());
      const auto side = side_text == "gaussian" ? MonteCarloSide::gaussian : MonteCarloSide::alpha;
      std::ofstream csv;
      McOptions opt{threads, nullptr};
      if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw UsageError("--csv: cannot open '" + csv_path + "'");
        opt.csv = &csv;
      }
      const auto stats = mc_x_moment(side, p, q, beta.to_double(), N, samples, Seed{seed}, opt);
      // Exact expectation of the estimated quantity.
      const Rat exact_value = side == MonteCarloSide::gaussian ? gaussian_x_moment(p, q).eval(beta)
                                                               : alpha_x_moment(p, q, beta, N).value;
      const double z = stats.z_score(cplx(exact_value.to_double()));
      report.results["mean"] = to_json(stats.mean);
      report.results["stderr"] = stats.std_error;
      report.results["count"] = stats.count;
      report.results["exact"] = to_json(exact_value);
      report.results["limit"] = to_json(gaussian_x_moment(p, q).eval(beta));
      report.diagnostics["n_trunc"] = N;
      report.diagnostics["z_score"] = z;
      report.diagnostics["rng"] = kRngAlgorithm;
      if (!csv_path.empty()) report.diagnostics["csv_columns"] = "sample,re,im";
      report.status = z <= kMcSigmas ? Status::pass : Status::fail;
    };
  });

  auto* pf = app.add_subcommand("pushforward", "E|alpha_n|^2 of the normalized exp(2 Re f_+) density");
  pf->add_option("--beta", beta_text)->required();
  pf->add_option("--modes", modes)->required()->check(CLI::PositiveNumber);
  pf->add_option("--radius", radius)->required();
  pf->add_option("--samples", samples)->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  pf->add_option("--seed", seed)->required();
  pf->add_option("--max-alpha", max_alpha)->check(CLI::Range(1, 64));
  pf->add_option("--grid", grid)->check(CLI::Range(16, 1 << 24));
  pf->add_flag("--allow-large-beta", allow_large_beta, "run even if beta^2 >= 2");
  pf->callback([&] {
    action = [&] {
      const Rat beta = parse_beta(beta_text);
      PushforwardOptions opt;
      opt.grid = grid;
      opt.threads = threads;
      opt.allow_large_beta = allow_large_beta;
      PushforwardResult r;
      try {
        r = pushforward_experiment(beta.to_double(), modes, radius, samples, max_alpha, Seed{seed}, opt);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Json rows = Json::array();
      for (std::size_t k = 0; k < r.abs2.size(); ++k) {
        const double mean = r.abs2[k].mean.real();
        rows.push_back({{"n", k + 1},
                        {"mean_abs2", mean},
                        {"stderr", r.abs2[k].std_error},
                        {"target", r.target[k]},
                        {"relative_error", std::abs(mean - r.target[k]) / r.target[k]}});
      }
      report.results["abs2"] = rows;
      report.diagnostics["within_10_percent"] =
          std::abs(r.abs2[0].mean.real() - r.target[0]) <= 0.1 * r.target[0];
      report.diagnostics["warnings"] = r.warnings;
      report.diagnostics["rng"] = kRngAlgorithm;
      report.status = Status::experimental;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  report.command = sub->get_name();
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_single_name() == "help" || o->count() == 0) continue;
    if (o->get_expected_min() == 0) {
      report.params[o->get_single_name()] = true;
      continue;
    }
    const auto values = o->results();
    report.params[o->get_single_name()] = values.size() == 1 ? Json(values[0]) : Json(values);
  }
  report.params["threads"] = threads;
  try {
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    report.status = Status::fail;
    report.diagnostics["error"] = e.what();
  }
  out << report.to_json().dump(2) << "\n";
  return report.exit_code();
}

}  // namespace szego::cli

#endif  // SZEGO_CLI_HPP
