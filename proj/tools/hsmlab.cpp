// Command-line laboratory for the hierarchical spin models: exact
// ferromagnet recursion, closed-form bounds and critical temperatures,
// disorder-averaged glass estimates, RSB upper bounds, and the inequality
// verification harness. All randomness flows from --seed; outputs are
// byte-stable across runs and worker counts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsm/dhm_bounds.hpp"
#include "hsm/dhm_solver.hpp"
#include "hsm/hea_model.hpp"
#include "hsm/numeric.hpp"
#include "hsm/params.hpp"
#include "hsm/rng.hpp"
#include "hsm/rsb_bound.hpp"
#include "hsm/verify.hpp"

namespace {

using hsm::format_sig17;

using KeyValues = std::vector<std::pair<std::string, std::string>>;

void print_resolved(const std::string& command, const KeyValues& kv) {
  std::cerr << "# " << command << " resolved configuration\n";
  for (const auto& [k, v] : kv) std::cerr << k << "=" << v << "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += format_sig17(xs[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

hsm::Depth parse_depth(const std::string& text) {
  if (text == "inf" || text == "infinite" || text == "infinity")
    return hsm::Depth::infinite();
  return hsm::Depth::finite(std::stoi(text));
}

hsm::FieldSpec make_field(double h, double h_std) {
  hsm::FieldSpec field;
  field.mean = h;
  if (h_std > 0.0) {
    field.kind = hsm::FieldKind::gaussian;
    field.std = h_std;
  }
  return field;
}

hsm::QuadratureSpec make_quadrature(int nodes, int validation_nodes) {
  hsm::QuadratureSpec quad;
  quad.nodes = nodes;
  quad.validation_nodes =
      validation_nodes > 0 ? validation_nodes : std::max(96, nodes + nodes / 2);
  return quad;
}

// ---------------------------------------------------------------------------
// dhm-exact
// ---------------------------------------------------------------------------

struct DhmExactOptions {
  std::vector<double> betas{1.0};
  std::vector<double> sigmas{0.9};
  std::vector<double> hs{0.0};
  std::vector<int> depths{10};
  double j = 1.0;
  int depth_cap = hsm::kDhmDepthCap;
  std::string out = "dhm_exact.csv";
};

void run_dhm_exact(const DhmExactOptions& o) {
  print_resolved("dhm-exact", {{"beta", join_doubles(o.betas)},
                               {"sigma", join_doubles(o.sigmas)},
                               {"h", join_doubles(o.hs)},
                               {"depth", join_ints(o.depths)},
                               {"j", format_sig17(o.j)},
                               {"depth-cap", std::to_string(o.depth_cap)},
                               {"out", o.out}});
  std::string csv = "beta,sigma,h,depth,f_exact\n";
  for (double beta : o.betas)
    for (double sigma : o.sigmas)
      for (double h : o.hs)
        for (int depth : o.depths) {
          hsm::ModelParams p;
          p.beta = beta;
          p.sigma = sigma;
          p.j_coupling = o.j;
          p.field = make_field(h, 0.0);
          p.depth = depth;
          const double f = hsm::dhm_free_energy(p, o.depth_cap);
          csv += format_sig17(beta) + ',' + format_sig17(sigma) + ',' + format_sig17(h) +
                 ',' + std::to_string(depth) + ',' + format_sig17(f) + '\n';
        }
  write_file(o.out, csv);
  std::cout << "wrote " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// dhm-bounds
// ---------------------------------------------------------------------------

struct DhmBoundsOptions {
  double beta = 1.0;
  double sigma = 0.9;
  double h = 0.0;
  double j = 1.0;
  std::string depth = "inf";
  std::string out = "dhm_bounds.csv";
};

void run_dhm_bounds(const DhmBoundsOptions& o) {
  print_resolved("dhm-bounds", {{"beta", format_sig17(o.beta)},
                                {"sigma", format_sig17(o.sigma)},
                                {"h", format_sig17(o.h)},
                                {"j", format_sig17(o.j)},
                                {"depth", o.depth},
                                {"out", o.out}});
  hsm::ModelParams p;
  p.beta = o.beta;
  p.sigma = o.sigma;
  p.j_coupling = o.j;
  p.field = make_field(o.h, 0.0);
  const hsm::Depth depth = parse_depth(o.depth);
  if (!depth.is_infinite()) p.depth = depth.levels();

  std::string csv = "beta,sigma,h,depth,kind,m_star,value\n";
  for (hsm::BoundKind kind : {hsm::BoundKind::mf, hsm::BoundKind::nmf}) {
    const hsm::BoundResult r = hsm::maximize_bound(kind, p, depth);
    csv += format_sig17(o.beta) + ',' + format_sig17(o.sigma) + ',' + format_sig17(o.h) +
           ',' + depth.to_string() + ',' + hsm::to_string(kind) + ',' +
           format_sig17(r.m_star) + ',' + format_sig17(r.value) + '\n';
  }
  write_file(o.out, csv);
  std::cout << "wrote " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// dhm-critical
// ---------------------------------------------------------------------------

struct DhmCriticalOptions {
  std::vector<double> sigmas;  // empty: use the grid
  int grid = 101;
  double j = 1.0;
  std::string out = "dhm_critical.csv";
};

void run_dhm_critical(const DhmCriticalOptions& o) {
  print_resolved("dhm-critical",
                 {{"sigma", o.sigmas.empty() ? std::string("(grid)") : join_doubles(o.sigmas)},
                  {"grid", std::to_string(o.grid)},
                  {"j", format_sig17(o.j)},
                  {"out", o.out}});
  std::vector<double> sigmas = o.sigmas;
  if (sigmas.empty()) {
    if (o.grid < 1) throw std::invalid_argument("dhm-critical: grid must be positive");
    for (int i = 1; i <= o.grid; ++i) sigmas.push_back(0.5 + 0.5 * i / o.grid);
  }
  std::string csv = "sigma,beta_c_mf,beta_c_nmf\n";
  for (double sigma : sigmas) {
    csv += format_sig17(sigma) + ',' +
           format_sig17(hsm::beta_critical(hsm::BoundKind::mf, sigma, o.j)) + ',' +
           format_sig17(hsm::beta_critical(hsm::BoundKind::nmf, sigma, o.j)) + '\n';
  }
  write_file(o.out, csv);
  std::cout << "wrote " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// figure1
// ---------------------------------------------------------------------------

struct Figure1Options {
  std::string out = "figure1";
};

void run_figure1(const Figure1Options& o) {
  print_resolved("figure1", {{"out", o.out}});
  hsm::ModelParams p;
  p.beta = 1.0;
  p.sigma = 0.9;
  p.j_coupling = 1.0;
  p.field = {};

  // both bounds vs trial magnetization at infinite depth
  std::string main_csv = "m,phi_mf,phi_nmf\n";
  for (int i = 0; i <= 400; ++i) {
    const double m = -1.0 + 2.0 * i / 400.0;
    main_csv += format_sig17(m) + ',' +
                format_sig17(hsm::phi_mf(m, p, hsm::Depth::infinite())) + ',' +
                format_sig17(hsm::phi_nmf(m, p, hsm::Depth::infinite())) + '\n';
  }
  const std::string main_path = o.out + "_main.csv";
  write_file(main_path, main_csv);

  // critical inverse temperatures over sigma in (0.5, 1]
  std::string inset_csv = "sigma,beta_c_mf,beta_c_nmf\n";
  for (int i = 1; i <= 101; ++i) {
    const double sigma = 0.5 + 0.5 * i / 101.0;
    inset_csv += format_sig17(sigma) + ',' +
                 format_sig17(hsm::beta_critical(hsm::BoundKind::mf, sigma)) + ',' +
                 format_sig17(hsm::beta_critical(hsm::BoundKind::nmf, sigma)) + '\n';
  }
  const std::string inset_path = o.out + "_inset.csv";
  write_file(inset_path, inset_csv);
  std::cout << "wrote " << main_path << " and " << inset_path << "\n";
}

// ---------------------------------------------------------------------------
// hea
// ---------------------------------------------------------------------------

struct HeaOptions {
  double beta = 1.0;
  double sigma = 0.8;
  double h = 0.0;
  double h_std = 0.0;
  int max_depth = 3;
  int samples = 1000;
  std::uint64_t seed = 1;
  int workers = 1;
  int levels = 1;
  int nodes = 64;
  int validation_nodes = 0;
  std::string out = "hea";
};

void run_hea(const HeaOptions& o) {
  print_resolved("hea", {{"beta", format_sig17(o.beta)},
                         {"sigma", format_sig17(o.sigma)},
                         {"h", format_sig17(o.h)},
                         {"h-std", format_sig17(o.h_std)},
                         {"depth", std::to_string(o.max_depth)},
                         {"samples", std::to_string(o.samples)},
                         {"seed", std::to_string(o.seed)},
                         {"workers", std::to_string(o.workers)},
                         {"levels", std::to_string(o.levels)},
                         {"nodes", std::to_string(o.nodes)},
                         {"out", o.out}});
  hsm::ModelParams p;
  p.beta = o.beta;
  p.sigma = o.sigma;
  p.j_coupling = 1.0;
  p.field = make_field(o.h, o.h_std);
  const hsm::QuadratureSpec quad = make_quadrature(o.nodes, o.validation_nodes);

  std::string csv = "depth,beta,sigma,h,n_samples,f_mean,f_stderr,f_sd,rsb_bound\n";
  for (int d = 1; d <= o.max_depth; ++d) {
    hsm::ModelParams pd = p;
    pd.depth = d;
    const std::vector<double> samples = hsm::quenched_samples(
        pd, o.samples, hsm::hash_combine(o.seed, static_cast<std::uint64_t>(d)), o.workers);
    const hsm::QuenchedEstimate est = hsm::estimate_from_samples(samples);
    const double sd = hsm::sample_sd(samples);
    const double rsb = hsm::optimize_parisi(pd, o.levels, quad).value;
    csv += std::to_string(d) + ',' + format_sig17(o.beta) + ',' + format_sig17(o.sigma) +
           ',' + format_sig17(o.h) + ',' + std::to_string(o.samples) + ',' +
           format_sig17(est.mean) + ',' + format_sig17(est.std_error) + ',' +
           format_sig17(sd) + ',' + format_sig17(rsb) + '\n';
  }
  const std::string csv_path = o.out + ".csv";
  write_file(csv_path, csv);

  const hsm::CheckReport report =
      hsm::check_hea(p, o.max_depth, o.samples, o.seed, o.levels, o.workers, 0.0, quad);
  const std::string json_path = o.out + "_report.json";
  write_file(json_path, report.to_json().dump(2) + "\n");
  std::cout << "wrote " << csv_path << " and " << json_path << "\n";
}

// ---------------------------------------------------------------------------
// rsb
// ---------------------------------------------------------------------------

struct RsbOptions {
  double beta = 1.0;
  double sigma = 0.8;
  double h = 0.0;
  double h_std = 0.0;
  int depth = 3;
  int levels = 1;
  int nodes = 64;
  int validation_nodes = 0;
  std::string out = "rsb.csv";
};

void run_rsb(const RsbOptions& o) {
  print_resolved("rsb", {{"beta", format_sig17(o.beta)},
                         {"sigma", format_sig17(o.sigma)},
                         {"h", format_sig17(o.h)},
                         {"h-std", format_sig17(o.h_std)},
                         {"depth", std::to_string(o.depth)},
                         {"levels", std::to_string(o.levels)},
                         {"nodes", std::to_string(o.nodes)},
                         {"out", o.out}});
  hsm::ModelParams p;
  p.beta = o.beta;
  p.sigma = o.sigma;
  p.j_coupling = 1.0;
  p.field = make_field(o.h, o.h_std);
  p.depth = o.depth;
  const hsm::QuadratureSpec quad = make_quadrature(o.nodes, o.validation_nodes);
  const hsm::OptimizedBound opt = hsm::optimize_parisi(p, o.levels, quad);

  // fixed 9-column schema covering K = 1 and K = 2 ladders
  const double q1 = opt.ladder.q[1];
  const double m1 = opt.ladder.m[1];
  const double m2 = opt.ladder.m[2];
  std::string csv = "beta,sigma,h,depth,levels,bound,q1,m1,m2\n";
  csv += format_sig17(o.beta) + ',' + format_sig17(o.sigma) + ',' + format_sig17(o.h) +
         ',' + std::to_string(o.depth) + ',' + std::to_string(o.levels) + ',' +
         format_sig17(opt.value) + ',' + format_sig17(q1) + ',' + format_sig17(m1) + ',' +
         format_sig17(m2) + '\n';
  write_file(o.out, csv);
  std::cout << "wrote " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  double beta = 1.0;
  double sigma = 0.8;
  double h = 0.0;
  double h_std = 0.0;
  double j = 1.0;
  int dhm_depth = 10;
  int m_grid = 41;
  int max_depth = 3;
  int samples = 500;
  std::uint64_t seed = 1;
  int levels = 1;
  int nodes = 64;
  int validation_nodes = 0;
  int workers = 1;
  double corrupt_bounds = 0.0;
  std::string out = "verify_report.json";
};

int run_verify(const VerifyOptions& o) {
  print_resolved("verify", {{"beta", format_sig17(o.beta)},
                            {"sigma", format_sig17(o.sigma)},
                            {"h", format_sig17(o.h)},
                            {"h-std", format_sig17(o.h_std)},
                            {"j", format_sig17(o.j)},
                            {"depth", std::to_string(o.dhm_depth)},
                            {"grid", std::to_string(o.m_grid)},
                            {"max-depth", std::to_string(o.max_depth)},
                            {"samples", std::to_string(o.samples)},
                            {"seed", std::to_string(o.seed)},
                            {"levels", std::to_string(o.levels)},
                            {"nodes", std::to_string(o.nodes)},
                            {"workers", std::to_string(o.workers)},
                            {"corrupt-bounds", format_sig17(o.corrupt_bounds)},
                            {"out", o.out}});
  hsm::ModelParams dhm_params;
  dhm_params.beta = o.beta;
  dhm_params.sigma = o.sigma;
  dhm_params.j_coupling = o.j;
  dhm_params.field = make_field(o.h, 0.0);  // exact recursion needs a point field
  const hsm::CheckReport dhm =
      hsm::check_dhm(dhm_params, o.dhm_depth, o.m_grid, o.corrupt_bounds);

  hsm::ModelParams hea_params;
  hea_params.beta = o.beta;
  hea_params.sigma = o.sigma;
  hea_params.j_coupling = 1.0;
  hea_params.field = make_field(o.h, o.h_std);
  const hsm::QuadratureSpec quad = make_quadrature(o.nodes, o.validation_nodes);
  const hsm::CheckReport hea = hsm::check_hea(
      hea_params, o.max_depth, o.samples, o.seed, o.levels, o.workers, o.corrupt_bounds, quad);

  nlohmann::json merged;
  merged["metadata"] = {{"dhm", dhm.metadata}, {"hea", hea.metadata}};
  merged["checks"] = nlohmann::json::array();
  bool ok = true;
  for (const hsm::CheckReport* rep : {&dhm, &hea}) {
    for (const hsm::Check& c : rep->checks) {
      merged["checks"].push_back({{"name", c.name},
                                  {"lhs", c.lhs},
                                  {"rhs", c.rhs},
                                  {"relation", hsm::to_string(c.relation)},
                                  {"slack", c.slack},
                                  {"status", hsm::to_string(c.status)}});
      std::cout << hsm::to_string(c.status) << "  " << c.name
                << "  slack=" << format_sig17(c.slack) << "\n";
      if (c.status == hsm::CheckStatus::fail) ok = false;
    }
  }
  write_file(o.out, merged.dump(2) + "\n");
  std::cout << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsmlab: free-energy bounds for hierarchical spin models"};
  app.require_subcommand(1);
  int exit_code = 0;

  DhmExactOptions dhm_exact_opts;
  auto* dhm_exact = app.add_subcommand("dhm-exact", "exact ferromagnet free energy");
  dhm_exact->set_config("--config");
  dhm_exact->add_option("--beta", dhm_exact_opts.betas, "inverse temperatures")->delimiter(',');
  dhm_exact->add_option("--sigma", dhm_exact_opts.sigmas, "decay exponents")->delimiter(',');
  dhm_exact->add_option("--h", dhm_exact_opts.hs, "external fields")->delimiter(',');
  dhm_exact->add_option("--depth", dhm_exact_opts.depths, "hierarchy depths")->delimiter(',');
  dhm_exact->add_option("--j", dhm_exact_opts.j, "coupling J");
  dhm_exact->add_option("--depth-cap", dhm_exact_opts.depth_cap, "recursion depth cap");
  dhm_exact->add_option("--out", dhm_exact_opts.out, "output CSV path");
  dhm_exact->callback([&] { run_dhm_exact(dhm_exact_opts); });

  DhmBoundsOptions dhm_bounds_opts;
  auto* dhm_bounds = app.add_subcommand("dhm-bounds", "maximized closed-form bounds");
  dhm_bounds->set_config("--config");
  dhm_bounds->add_option("--beta", dhm_bounds_opts.beta, "inverse temperature");
  dhm_bounds->add_option("--sigma", dhm_bounds_opts.sigma, "decay exponent");
  dhm_bounds->add_option("--h", dhm_bounds_opts.h, "external field");
  dhm_bounds->add_option("--j", dhm_bounds_opts.j, "coupling J");
  dhm_bounds->add_option("--depth", dhm_bounds_opts.depth, "depth (integer or inf)");
  dhm_bounds->add_option("--out", dhm_bounds_opts.out, "output CSV path");
  dhm_bounds->callback([&] { run_dhm_bounds(dhm_bounds_opts); });

  DhmCriticalOptions dhm_critical_opts;
  auto* dhm_critical = app.add_subcommand("dhm-critical", "critical inverse temperatures");
  dhm_critical->set_config("--config");
  dhm_critical->add_option("--sigma", dhm_critical_opts.sigmas, "explicit sigma values")
      ->delimiter(',');
  dhm_critical->add_option("--grid", dhm_critical_opts.grid, "points on (0.5, 1]");
  dhm_critical->add_option("--j", dhm_critical_opts.j, "coupling J");
  dhm_critical->add_option("--out", dhm_critical_opts.out, "output CSV path");
  dhm_critical->callback([&] { run_dhm_critical(dhm_critical_opts); });

  Figure1Options figure1_opts;
  auto* figure1 = app.add_subcommand("figure1", "bound-comparison figure CSVs");
  figure1->set_config("--config");
  figure1->add_option("--out", figure1_opts.out, "output path prefix");
  figure1->callback([&] { run_figure1(figure1_opts); });

  HeaOptions hea_opts;
  auto* hea = app.add_subcommand("hea", "quenched glass estimates and report");
  hea->set_config("--config");
  hea->add_option("--beta", hea_opts.beta, "inverse temperature");
  hea->add_option("--sigma", hea_opts.sigma, "decay exponent");
  hea->add_option("--h", hea_opts.h, "field mean");
  hea->add_option("--h-std", hea_opts.h_std, "field std (0 = deterministic field)");
  hea->add_option("--depth", hea_opts.max_depth, "largest depth");
  hea->add_option("--samples", hea_opts.samples, "disorder samples per depth");
  hea->add_option("--seed", hea_opts.seed, "master seed");
  hea->add_option("--workers", hea_opts.workers, "parallel sampling workers");
  hea->add_option("--levels", hea_opts.levels, "RSB levels K");
  hea->add_option("--nodes", hea_opts.nodes, "quadrature nodes");
  hea->add_option("--validation-nodes", hea_opts.validation_nodes,
                  "self-check nodes (0 = auto)");
  hea->add_option("--out", hea_opts.out, "output path prefix");
  hea->callback([&] { run_hea(hea_opts); });

  RsbOptions rsb_opts;
  auto* rsb = app.add_subcommand("rsb", "optimized RSB upper bound");
  rsb->set_config("--config");
  rsb->add_option("--beta", rsb_opts.beta, "inverse temperature");
  rsb->add_option("--sigma", rsb_opts.sigma, "decay exponent");
  rsb->add_option("--h", rsb_opts.h, "field mean");
  rsb->add_option("--h-std", rsb_opts.h_std, "field std (0 = deterministic field)");
  rsb->add_option("--depth", rsb_opts.depth, "model depth");
  rsb->add_option("--levels", rsb_opts.levels, "RSB levels K");
  rsb->add_option("--nodes", rsb_opts.nodes, "quadrature nodes");
  rsb->add_option("--validation-nodes", rsb_opts.validation_nodes,
                  "self-check nodes (0 = auto)");
  rsb->add_option("--out", rsb_opts.out, "output CSV path");
  rsb->callback([&] { run_rsb(rsb_opts); });

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run every inequality check");
  verify->set_config("--config");
  verify->add_option("--beta", verify_opts.beta, "inverse temperature");
  verify->add_option("--sigma", verify_opts.sigma, "decay exponent");
  verify->add_option("--h", verify_opts.h, "field mean");
  verify->add_option("--h-std", verify_opts.h_std, "glass field std");
  verify->add_option("--j", verify_opts.j, "ferromagnet coupling J");
  verify->add_option("--depth", verify_opts.dhm_depth, "ferromagnet depth");
  verify->add_option("--grid", verify_opts.m_grid, "trial magnetization grid size");
  verify->add_option("--max-depth", verify_opts.max_depth, "largest glass depth");
  verify->add_option("--samples", verify_opts.samples, "disorder samples per depth");
  verify->add_option("--seed", verify_opts.seed, "master seed");
  verify->add_option("--levels", verify_opts.levels, "RSB levels K");
  verify->add_option("--nodes", verify_opts.nodes, "quadrature nodes");
  verify->add_option("--validation-nodes", verify_opts.validation_nodes,
                     "self-check nodes (0 = auto)");
  verify->add_option("--workers", verify_opts.workers, "parallel sampling workers");
  verify->add_option("--corrupt-bounds", verify_opts.corrupt_bounds,
                     "test hook: shift bounds to force failures");
  verify->add_option("--out", verify_opts.out, "output JSON path");
  verify->callback([&] { exit_code = run_verify(verify_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
