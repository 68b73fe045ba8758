// Command-line front end: file I/O for information systems and the
// core/canonical/fusion/oracle operations as subcommands.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "islog/canonical.hpp"
#include "islog/errors.hpp"
#include "islog/fusion.hpp"
#include "islog/info_system.hpp"
#include "islog/is_io.hpp"
#include "islog/oracle.hpp"
#include "islog/rng.hpp"
#include "islog/score.hpp"
#include "islog/tolerances.hpp"

namespace {

using namespace islog;

struct ExitWith {
  int code;
};

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::NegativeEntry:
    case Errc::SumNotOne:
    case Errc::ZeroPriorRow:
    case Errc::EmptyAxis:
    case Errc::ParseError:
      return 2;
    case Errc::PriorMismatch:
      return 3;
    case Errc::NotBinary:
    case Errc::LabelMismatch:
    case Errc::DimensionMismatch:
    case Errc::ObservationSpaceMismatch:
      return 4;
    default:
      return 1;
  }
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out;
}

std::string render_distribution(const Distribution& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += "\t";
    out += io::format_sig(d[i]);
  }
  return out;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) std::cout << content;
  else io::write_file(out_path, content);
}

ScoreRule make_rule(const std::string& name, const std::string& payoff_path) {
  if (name == "log") return ScoreRule::logarithmic();
  if (name == "quad") return ScoreRule::quadratic();
  if (payoff_path.empty())
    fail(Errc::MissingPayoff, "decision score requires --payoff");
  return ScoreRule::decision(io::read_payoff_file(payoff_path));
}

std::vector<ScoreRule> make_rules(const std::vector<std::string>& names,
                                  const std::string& payoff_path) {
  std::vector<std::string> use = names;
  if (use.empty()) use = {"log", "quad"};
  std::vector<ScoreRule> out;
  out.reserve(use.size());
  for (const auto& n : use) out.push_back(make_rule(n, payoff_path));
  return out;
}

void require_equal_priors(const InfoSystem& a, const InfoSystem& b) {
  if (!priors_match(a, b, kProbTol)) fail(Errc::PriorMismatch, "priors differ beyond tolerance");
}

void require_binary(const InfoSystem& s, const std::string& which) {
  if (!s.binary()) fail(Errc::NotBinary, which + " is not a binary-hypothesis system");
}

// --- subcommand bodies -----------------------------------------------------

void cmd_validate(const std::string& path) {
  const InfoSystem s = io::read_is_file(path);
  std::cout << "hypotheses: " << s.n_hypotheses() << " (" << join_labels(s.hypothesis_labels())
            << ")\n";
  std::cout << "observations: " << s.n_observations() << " ("
            << join_labels(s.observation_labels()) << ")\n";
  std::cout << "prior: " << render_distribution(s.prior()) << "\n";
  std::cout << "marginal: " << render_distribution(s.marginal()) << "\n";
  std::cout << "valid\n";
}

void cmd_canon(const std::string& path, const std::string& out_path,
               const std::string& svg_path) {
  const InfoSystem s = io::read_is_file(path);
  const CanonicalCurve c = canonicalize(s);
  if (out_path.empty()) {
    std::cout << io::render_curve_csv(c);
    std::cerr << "vertices: " << c.vertices().size() << "\n";
  } else {
    io::write_file(out_path, io::render_curve_csv(c));
    std::cout << "vertices: " << c.vertices().size() << "\n";
  }
  if (!svg_path.empty()) io::write_file(svg_path, io::render_curve_svg(c));
}

void cmd_lattice(bool is_join, const std::string& path_a, const std::string& path_b,
                 const std::string& out_path, const std::string& prior_from) {
  const InfoSystem a = io::read_is_file(path_a);
  const InfoSystem b = io::read_is_file(path_b);
  require_binary(a, "A");
  require_binary(b, "B");
  require_equal_priors(a, b);
  const CanonicalCurve ca = canonicalize(a);
  const CanonicalCurve cb = canonicalize(b);
  const CanonicalCurve c = is_join ? join(ca, cb) : meet(ca, cb);
  const InfoSystem& prior_source = (prior_from == "B") ? b : a;
  const InfoSystem out =
      reconstruct(c, prior_source.prior(), prior_source.hypothesis_labels());
  emit(io::render_is_file(out), out_path);
}

void cmd_dominates(const std::string& path_a, const std::string& path_b) {
  const InfoSystem a = io::read_is_file(path_a);
  const InfoSystem b = io::read_is_file(path_b);
  require_binary(a, "A");
  require_binary(b, "B");
  require_equal_priors(a, b);
  const CanonicalCurve ca = canonicalize(a);
  const CanonicalCurve cb = canonicalize(b);
  if (curve_equal(ca, cb)) std::cout << "P=Q\n";
  else if (dominates(ca, cb)) std::cout << "P>=Q\n";
  else if (dominates(cb, ca)) std::cout << "Q>=P\n";
  else std::cout << "incomparable\n";
}

void cmd_value(const std::string& path, const std::vector<std::string>& score_names,
               const std::string& payoff_path) {
  const InfoSystem s = io::read_is_file(path);
  const auto rules = make_rules(score_names, payoff_path);
  const Distribution prior = s.prior();
  std::cout << "score\tH\tG_prior\tgain\n";
  for (const auto& rule : rules) {
    const double h = h_value(rule, s);
    const double g = g_value(rule, prior);
    std::cout << rule.name() << "\t" << io::format_sig(h) << "\t" << io::format_sig(g) << "\t"
              << io::format_sig(h - g) << "\n";
  }
}

void cmd_fuse(const std::string& path_a, const std::string& path_b,
              const std::string& out_path) {
  const InfoSystem a = io::read_is_file(path_a);
  const InfoSystem b = io::read_is_file(path_b);
  emit(io::render_is_file(fuse(a, b)), out_path);
}

void cmd_verify(const std::string& path_a, const std::string& path_b, std::size_t samples,
                std::uint64_t seed, const std::vector<std::string>& score_names,
                const std::string& payoff_path, const std::string& csv_path) {
  const InfoSystem a = io::read_is_file(path_a);
  const InfoSystem b = io::read_is_file(path_b);
  const auto rules = make_rules(score_names, payoff_path);
  const ValueReport report = verify_guarantee(a, b, rules, samples, seed);
  std::cout << io::render_value_report_text(report);
  if (!csv_path.empty()) io::write_file(csv_path, io::render_value_report_csv(report));
  if (!report.all_hold()) throw ExitWith{5};
}

// Seeded random instances for the verification reports.

Distribution random_distribution(Rng& rng, std::size_t d) {
  std::vector<double> p(d);
  double s = 0.0;
  for (double& v : p) {
    v = rng.expo();
    s += v;
  }
  for (double& v : p) v /= s;
  return Distribution(std::move(p));
}

InfoSystem random_binary_system(Rng& rng, std::size_t n_obs, const Distribution& prior) {
  Matrix joint(2, n_obs);
  for (std::size_t e = 0; e < 2; ++e) {
    std::vector<double> row(n_obs);
    double s = 0.0;
    for (double& v : row) {
      v = rng.expo();
      s += v;
    }
    for (std::size_t i = 0; i < n_obs; ++i) joint(e, i) = prior[e] * row[i] / s;
  }
  return InfoSystem({"e", "not-e"}, [&] {
    std::vector<std::string> obs;
    for (std::size_t i = 0; i < n_obs; ++i) obs.push_back("o" + std::to_string(i + 1));
    return obs;
  }(), std::move(joint));
}

void cmd_check_corollary(const std::string& score_name, const std::string& payoff_path,
                         std::size_t dim, std::size_t vertices, std::size_t resolution,
                         std::size_t samples, std::uint64_t seed, const std::string& csv_path) {
  const ScoreRule rule = make_rule(score_name, payoff_path);
  Rng rng(Rng::derive(seed, 1));
  std::vector<Distribution> k_vertices;
  for (std::size_t v = 0; v < vertices; ++v) k_vertices.push_back(random_distribution(rng, dim));
  const auto rep = oracle::corollary_check(rule, k_vertices, resolution, samples, seed);
  std::cout << "score: " << rule.name() << "\n";
  std::cout << "polytope: " << vertices << " vertices in dimension " << dim << "\n";
  std::cout << "G(Q) at grid minimizer: " << io::format_sig(rep.minimizer.value) << "\n";
  if (rep.refined) std::cout << "G(Q) after polish: " << io::format_sig(rep.g_q) << "\n";
  std::cout << "min slack G(P,Q) - G(Q): " << io::format_sig(rep.min_slack) << " over "
            << rep.n_samples << " samples\n";
  std::cout << (rep.holds ? "holds\n" : "VIOLATED\n");
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "score,dim,vertices,resolution,samples,g_q,min_slack,holds\n";
    csv << rule.name() << "," << dim << "," << vertices << "," << resolution << "," << samples
        << "," << io::format_sig(rep.minimizer.value) << "," << io::format_sig(rep.min_slack)
        << "," << (rep.holds ? "yes" : "no") << "\n";
    io::write_file(csv_path, csv.str());
  }
  if (!rep.holds) throw ExitWith{1};
}

void cmd_check_theorem1(const std::string& score_name, const std::string& payoff_path,
                        std::size_t dim, std::size_t steps, std::uint64_t seed,
                        const std::string& csv_path) {
  const ScoreRule rule = make_rule(score_name, payoff_path);
  Rng rng(Rng::derive(seed, 2));
  const Distribution p = random_distribution(rng, dim);
  const Distribution q = random_distribution(rng, dim);
  const auto rep = oracle::theorem1_check(rule, p, q, steps);
  std::cout << "score: " << rule.name() << "\n";
  std::cout << "P: " << render_distribution(p) << "\n";
  std::cout << "Q: " << render_distribution(q) << "\n";
  std::cout << "max decomposition error: " << io::format_sig(rep.max_decomposition_error)
            << (rep.decomposition_ok ? " (ok)" : " (VIOLATED)") << "\n";
  std::cout << "premise G(R) >= G(Q) on grid: " << (rep.premise_holds ? "yes" : "no") << "\n";
  if (rep.premise_holds)
    std::cout << "min conclusion slack G(P,R) - G(Q): " << io::format_sig(rep.min_conclusion_slack)
              << "\n";
  std::cout << "G(P,R) at smallest positive a: " << io::format_sig(rep.value_at_smallest_a)
            << "\n";
  std::cout << "G(P,Q): " << io::format_sig(rep.value_at_zero) << "\n";
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "score,dim,steps,max_decomposition_error,decomposition_ok,premise_holds,"
           "min_conclusion_slack,value_at_smallest_a,value_at_zero\n";
    csv << rule.name() << "," << dim << "," << steps << ","
        << io::format_sig(rep.max_decomposition_error) << ","
        << (rep.decomposition_ok ? "yes" : "no") << "," << (rep.premise_holds ? "yes" : "no")
        << "," << io::format_sig(rep.min_conclusion_slack) << ","
        << io::format_sig(rep.value_at_smallest_a) << "," << io::format_sig(rep.value_at_zero)
        << "\n";
    io::write_file(csv_path, csv.str());
  }
  if (!rep.decomposition_ok) throw ExitWith{1};
}

void cmd_check_lub(std::size_t obs_p, std::size_t obs_q, std::size_t dominators,
                   std::uint64_t seed, const std::string& csv_path) {
  Rng rng(Rng::derive(seed, 3));
  const double w = rng.uniform(0.1, 0.9);
  const Distribution prior({w, 1.0 - w});
  const InfoSystem p = random_binary_system(rng, obs_p, prior);
  const InfoSystem q = random_binary_system(rng, obs_q, prior);
  const auto rep = oracle::lub_minimality_check(p, q, dominators, seed);
  std::cout << "random pair: " << obs_p << "x" << obs_q << " observations, prior ("
            << io::format_sig(prior[0]) << ", " << io::format_sig(prior[1]) << ")\n";
  std::cout << "dominators checked: " << rep.n_dominators << "\n";
  std::cout << "violations: " << rep.violations << "\n";
  std::cout << (rep.holds ? "holds\n" : "VIOLATED\n");
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "obs_p,obs_q,dominators,violations,holds\n";
    csv << obs_p << "," << obs_q << "," << rep.n_dominators << "," << rep.violations << ","
        << (rep.holds ? "yes" : "no") << "\n";
    io::write_file(csv_path, csv.str());
  }
  if (!rep.holds) throw ExitWith{1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"islog - the inductive logic of information systems"};
  app.require_subcommand(1);

  std::string path_a, path_b, out_path, svg_path, csv_path, payoff_path, prior_from = "A";
  std::vector<std::string> score_names;
  std::size_t samples = 50, dim = 3, vertices = 3, resolution = 200, steps = 101;
  std::size_t obs_p = 4, obs_q = 4, dominators = 100;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check an IS file and print its summary");
  validate->add_option("file", path_a, "IS file")->required();

  auto* canon = app.add_subcommand("canon", "canonical curve of a binary IS as CSV");
  canon->add_option("file", path_a, "IS file")->required();
  canon->add_option("--out", out_path, "write CSV here instead of stdout");
  canon->add_option("--svg", svg_path, "also write an SVG rendering");

  auto* joinc = app.add_subcommand("join", "least upper bound of two binary IS");
  joinc->add_option("fileA", path_a)->required();
  joinc->add_option("fileB", path_b)->required();
  joinc->add_option("--out", out_path, "write the IS file here instead of stdout");
  joinc->add_option("--prior-from", prior_from, "A or B: whose prior and labels to carry")
      ->check(CLI::IsMember({"A", "B"}));

  auto* meetc = app.add_subcommand("meet", "greatest lower bound of two binary IS");
  meetc->add_option("fileA", path_a)->required();
  meetc->add_option("fileB", path_b)->required();
  meetc->add_option("--out", out_path, "write the IS file here instead of stdout");
  meetc->add_option("--prior-from", prior_from, "A or B: whose prior and labels to carry")
      ->check(CLI::IsMember({"A", "B"}));

  auto* dom = app.add_subcommand("dominates", "dominance verdict for two binary IS");
  dom->add_option("fileA", path_a)->required();
  dom->add_option("fileB", path_b)->required();

  auto* value = app.add_subcommand("value", "expected value H and information gain");
  value->add_option("file", path_a, "IS file")->required();
  value->add_option("--score", score_names, "log, quad or decision (repeatable)")
      ->check(CLI::IsMember({"log", "quad", "decision"}));
  value->add_option("--payoff", payoff_path, "payoff matrix file for the decision score");

  auto* fusec = app.add_subcommand("fuse", "minimal composition of two binary IS");
  fusec->add_option("fileA", path_a)->required();
  fusec->add_option("fileB", path_b)->required();
  fusec->add_option("--out", out_path, "write the IS file here instead of stdout");

  auto* verify = app.add_subcommand("verify", "value-guarantee report over sampled couplings");
  verify->add_option("fileA", path_a)->required();
  verify->add_option("fileB", path_b)->required();
  verify->add_option("--samples", samples, "number of couplings");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--score", score_names, "log, quad or decision (repeatable)")
      ->check(CLI::IsMember({"log", "quad", "decision"}));
  verify->add_option("--payoff", payoff_path, "payoff matrix file for the decision score");
  verify->add_option("--csv", csv_path, "also write the report as CSV");

  auto* check = app.add_subcommand("check", "numerical verification reports");
  check->require_subcommand(1);
  auto* corollary = check->add_subcommand("corollary", "G(P,Q) >= G(Q) over a random polytope");
  corollary->add_option("--score", path_b, "log, quad or decision")
      ->check(CLI::IsMember({"log", "quad", "decision"}))
      ->default_str("quad");
  corollary->add_option("--payoff", payoff_path, "payoff matrix file for the decision score");
  corollary->add_option("--dim", dim, "hypothesis count");
  corollary->add_option("--vertices", vertices, "polytope vertex count");
  corollary->add_option("--resolution", resolution, "grid steps per weight");
  corollary->add_option("--samples", samples, "sampled P in K");
  corollary->add_option("--seed", seed, "RNG seed");
  corollary->add_option("--csv", csv_path, "also write the report as CSV");

  auto* theorem1 = check->add_subcommand("theorem1", "mixture decomposition identity");
  theorem1->add_option("--score", path_b, "log, quad or decision")
      ->check(CLI::IsMember({"log", "quad", "decision"}))
      ->default_str("log");
  theorem1->add_option("--payoff", payoff_path, "payoff matrix file for the decision score");
  theorem1->add_option("--dim", dim, "hypothesis count");
  theorem1->add_option("--steps", steps, "a-grid size");
  theorem1->add_option("--seed", seed, "RNG seed");
  theorem1->add_option("--csv", csv_path, "also write the report as CSV");

  auto* lub = check->add_subcommand("lub", "join minimality against random dominators");
  lub->add_option("--obs-p", obs_p, "observations of the first random system");
  lub->add_option("--obs-q", obs_q, "observations of the second random system");
  lub->add_option("--dominators", dominators, "random common dominators to test");
  lub->add_option("--seed", seed, "RNG seed");
  lub->add_option("--csv", csv_path, "also write the report as CSV");

  try {
    app.parse(argc, argv);

    if (*validate) cmd_validate(path_a);
    else if (*canon) cmd_canon(path_a, out_path, svg_path);
    else if (*joinc) cmd_lattice(true, path_a, path_b, out_path, prior_from);
    else if (*meetc) cmd_lattice(false, path_a, path_b, out_path, prior_from);
    else if (*dom) cmd_dominates(path_a, path_b);
    else if (*value) cmd_value(path_a, score_names, payoff_path);
    else if (*fusec) cmd_fuse(path_a, path_b, out_path);
    else if (*verify) cmd_verify(path_a, path_b, samples, seed, score_names, payoff_path, csv_path);
    else if (*corollary)
      cmd_check_corollary(path_b.empty() ? "quad" : path_b, payoff_path, dim, vertices,
                          resolution, samples, seed, csv_path);
    else if (*theorem1)
      cmd_check_theorem1(path_b.empty() ? "log" : path_b, payoff_path, dim, steps, seed, csv_path);
    else if (*lub) cmd_check_lub(obs_p, obs_q, dominators, seed, csv_path);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const islog::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
