// Command-line front end for the chromatic-number verification laboratory.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chromatic/coloring.hpp"
#include "chromatic/entropy_energy.hpp"
#include "chromatic/experiments.hpp"
#include "chromatic/graphs.hpp"
#include "chromatic/io.hpp"
#include "chromatic/moments.hpp"
#include "chromatic/thresholds.hpp"
#include "chromatic/verify.hpp"

namespace {

using nlohmann::json;

std::string output_path(const std::string& name) {
  if (const char* dir = std::getenv("CHROMATIC_OUT_DIR")) {
    return std::string(dir) + "/" + name;
  }
  return name;
}

json threshold_record(double d) {
  const auto band = chromatic::predicted_band(d);
  const auto profile = chromatic::threshold_profile(band.lo);
  json rec{{"d", d},
           {"k_d", band.lo},
           {"band", {band.lo, band.hi}},
           {"exact_flag", band.exact},
           {"u_k", profile.u_k},
           {"c_k", profile.c_k}};
  if (band.exact) rec["exact_chi"] = band.exact_chi;
  return rec;
}

chromatic::Multigraph read_graph(const std::string& path) {
  if (path.empty() || path == "-") {
    return chromatic::read_edge_list(std::cin);
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return chromatic::read_edge_list(in);
}

int cmd_verify(const std::string& target, int k, double c, int trials,
               std::uint64_t seed) {
  const auto h = chromatic::HFunction::neg_x_log_x();
  json rep;
  bool pass = true;
  if (target == "theorem7") {
    const double cc = c >= 0 ? c : (k - 1.0) * std::log(k - 1.0);
    const auto r = chromatic::verify_theorem7(k, cc, trials, seed);
    rep = {{"target", target},     {"k", k},
           {"c", cc},              {"trials", trials},
           {"g_uniform", r.g_uniform}, {"max_found", r.max_found},
           {"margin", r.margin},   {"pass", r.pass}};
    pass = r.pass;
  } else if (target == "expo") {
    const double cc = c >= 0 ? c : (k - 1.0) * std::log(k - 1.0) / 2.0;
    const auto r = chromatic::verify_expo_gap_random(k, cc, trials, seed);
    rep = {{"target", target},
           {"k", k},
           {"c", cc},
           {"draws", trials},
           {"violations", r.violations},
           {"worst_slack", r.worst_slack},
           {"pass", r.violations == 0}};
    pass = r.violations == 0;
  } else if (target == "prop9") {
    json grid = json::array();
    for (int i = 0; i < 20; ++i) {
      const double r = 1.0 / k + (1.0 - 1.0 / k) * i / 19.0;
      const auto p = chromatic::verify_prop9(r, k, seed + i);
      grid.push_back({{"r", p.r}, {"deviation", p.deviation}, {"pass", p.pass}});
      pass = pass && p.pass;
    }
    rep = {{"target", target}, {"k", k}, {"grid", grid}, {"pass", pass}};
  } else if (target == "lemma10") {
    const auto r = chromatic::verify_f_third_derivative(k, h);
    rep = {{"target", target},
           {"k", k},
           {"grid", r.grid},
           {"all_negative", r.all_negative},
           {"worst_upper", r.worst_upper},
           {"worst_r", r.worst_r},
           {"pass", r.all_negative}};
    pass = r.all_negative;
  } else if (target == "lemma11") {
    const double gamma = c >= 0 ? c : 1.5;
    const auto r = chromatic::verify_lemma11(k, gamma, trials, seed);
    rep = {{"target", target},       {"k", k},
           {"gamma", gamma},         {"trials", trials},
           {"violations", r.violations}, {"worst_slack", r.worst_slack},
           {"self_slack", r.self_slack}, {"pass", r.pass}};
    pass = r.pass;
  } else if (target == "lemma12") {
    const double gamma = c >= 0 ? c : 1.0;
    const auto r = chromatic::verify_lemma12(k, gamma);
    rep = {{"target", target}, {"k", k},
           {"gamma", gamma},   {"a", r.best_a},
           {"b", r.best_b},    {"l", r.best_l},
           {"value", r.value}, {"deviation", r.deviation},
           {"pass", r.pass}};
    pass = r.pass;
  } else if (target == "eta-zeta") {
    const double y = (k - 2.0) * (k - 2.0) / (k * (k - 1.0));
    const double eta_end = chromatic::eta(1.0 - 1.0 / k, k);
    const double eta_mid = chromatic::eta(y, k);
    const double zeta_mid = chromatic::zeta(y, k);
    const double eta_end_expected = k / (k - 1.0) * std::log(k);
    const double eta_mid_expected = (k - 1.0) / (k - 2.0) * std::log(k - 1.0);
    pass = std::abs(zeta_mid) < 1e-12 &&
           std::abs(eta_end - eta_end_expected) < 1e-12 &&
           std::abs(eta_mid - eta_mid_expected) < 1e-12;
    rep = {{"target", target},
           {"k", k},
           {"eta_at_right_endpoint", eta_end},
           {"eta_at_interior_zero", eta_mid},
           {"zeta_at_interior_zero", zeta_mid},
           {"pass", pass}};
  } else if (target == "neveruse") {
    const auto r = chromatic::verify_neveruse(k);
    rep = {{"target", target},
           {"k", k},
           {"scaled_min", r.scaled},
           {"closed_form", r.closed_form},
           {"c_threshold", r.c_threshold},
           {"pass", r.pass}};
    pass = r.pass;
  } else if (target == "counterexample") {
    const auto r = chromatic::counterexample_check(k);
    rep = {{"target", target},       {"k", k},
           {"c", r.c},               {"g_uniform", r.g_uniform},
           {"g_matrix", r.g_matrix}, {"gap", r.gap},
           {"transition_c", r.transition_c}, {"violation", r.violation}};
    pass = r.violation;
  } else if (target == "remark-optimality") {
    const auto r = chromatic::remark_optimality_scan(k);
    rep = {{"target", target},
           {"k", k},
           {"first_violating_c", r.first_violating_c},
           {"band", {r.band_lo, r.band_hi}},
           {"pass", r.in_band}};
    pass = r.in_band;
  } else {
    std::cerr << "unknown verify target: " << target << "\n";
    return 2;
  }
  std::cout << rep.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification laboratory for chromatic-number thresholds of "
               "sparse random graphs"};
  app.require_subcommand(1);

  // thresholds ------------------------------------------------------------
  double th_d = -1.0;
  int th_k = 0;
  auto* th = app.add_subcommand(
      "thresholds",
      "Threshold quantities: k_d, the two-value band, u_k, c_k. Endpoint "
      "convention: d exactly equal to 2k log k belongs to the next k.");
  th->add_option("--d", th_d, "expected degree for G(n, d/n)");
  th->add_option("--k", th_k, "color count for the u_k/c_k profile");

  // sample ----------------------------------------------------------------
  std::string s_model = "gnm";
  int s_n = 10, s_m = 10;
  double s_p = -1.0;
  std::uint64_t s_seed = 1;
  bool s_simplify = false;
  std::string s_out;
  auto* sm = app.add_subcommand(
      "sample", "Sample G(n,m) or G(n,p); emits the edge-list interchange "
                "format (first line \"n m\", one \"u v\" per line)");
  sm->add_option("--model", s_model, "gnm or gnp")->check(CLI::IsMember({"gnm", "gnp"}));
  sm->add_option("--n", s_n, "vertex count")->required();
  sm->add_option("--m", s_m, "edge count (gnm)");
  sm->add_option("--p", s_p, "edge probability (gnp)");
  sm->add_option("--seed", s_seed, "RNG seed");
  sm->add_flag("--simplify", s_simplify, "remove loops and duplicates");
  sm->add_option("--out", s_out, "output file (default stdout)");

  // chi ---------------------------------------------------------------
  std::string chi_in;
  int chi_k = 0;
  bool chi_count = false, chi_balanced = false;
  auto* ch = app.add_subcommand(
      "chi", "Exact chromatic number / k-colorability / coloring counts of "
             "an edge-list graph (reads stdin when --in is omitted)");
  ch->add_option("--in", chi_in, "edge-list file ('-' for stdin)");
  ch->add_option("--k", chi_k, "decide k-colorability (or count with k colors)");
  ch->add_flag("--count", chi_count, "count proper colorings (exact)");
  ch->add_flag("--balanced", chi_balanced, "restrict counts to balanced partitions");

  // moments ------------------------------------------------------------
  int mo_n = 4, mo_k = 2, mo_m = -1;
  double mo_c = -1.0;
  auto* mo = app.add_subcommand(
      "moments", "Exact E[Z], E[Z^2] and the second-moment ratio "
                 "(m = floor(c*n) when --c is given)");
  mo->add_option("--n", mo_n)->required();
  mo->add_option("--k", mo_k)->required();
  mo->add_option("--m", mo_m, "edge count");
  mo->add_option("--c", mo_c, "edges per vertex; m = floor(c*n)");

  // verify ---------------------------------------------------------------
  std::string v_target;
  int v_k = 3, v_trials = 10000;
  double v_c = -1.0;
  std::uint64_t v_seed = 1;
  auto* ve = app.add_subcommand("verify", "Numeric verification targets");
  ve->add_option("--target", v_target,
                 "theorem7|expo|prop9|lemma10|lemma11|lemma12|eta-zeta|"
                 "neveruse|counterexample|remark-optimality")
      ->required();
  ve->add_option("--k", v_k);
  ve->add_option("--c", v_c, "c (or gamma for the lemmas)");
  ve->add_option("--trials", v_trials);
  ve->add_option("--seed", v_seed);

  // experiment ---------------------------------------------------------
  auto* ex = app.add_subcommand("experiment", "Monte Carlo experiment harness");
  ex->require_subcommand(1);

  chromatic::ChiExperimentParams cp;
  std::string ex_format = "csv", ex_out;
  double ex_threshold = -1.0;
  auto* exc = ex->add_subcommand("chi", "Chromatic-number band experiment");
  exc->add_option("--n", cp.n);
  exc->add_option("--d", cp.d);
  exc->add_option("--trials", cp.trials);
  exc->add_option("--seed", cp.seed);
  exc->add_option("--model", cp.model)->check(CLI::IsMember({"gnp", "gnm"}));
  exc->add_option("--budget", cp.solver_budget_seconds,
                  "per-instance solver budget, seconds");
  exc->add_option("--format", ex_format)->check(CLI::IsMember({"csv", "json"}));
  exc->add_option("--out", ex_out, "output file (CHROMATIC_OUT_DIR applies)");
  exc->add_option("--threshold", ex_threshold,
                  "required band fraction; exit 1 when below");

  int exm_k = 2;
  std::vector<int> exm_ns{4, 8, 12};
  std::vector<double> exm_cs{0.0, 0.5, 1.0};
  std::string exm_out;
  auto* exm = ex->add_subcommand("moments", "Second-moment ratio sweep");
  exm->add_option("--k", exm_k);
  exm->add_option("--n-list", exm_ns, "n values (divisible by k)");
  exm->add_option("--c-grid", exm_cs, "c values");
  exm->add_option("--out", exm_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (th->parsed()) {
      json out;
      if (th_d > 0.0) {
        out = threshold_record(th_d);
      } else if (th_k >= 2) {
        const auto p = chromatic::threshold_profile(th_k);
        out = {{"k", p.k},
               {"u_k", p.u_k},
               {"c_k", p.c_k},
               {"band_degree_units", {p.band_lo, p.band_hi}}};
      } else {
        std::cerr << "thresholds: need --d <real> or --k <int >= 2>\n";
        return 2;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (sm->parsed()) {
      std::ostringstream buf;
      if (s_model == "gnp") {
        if (s_p < 0.0) {
          std::cerr << "sample: gnp requires --p\n";
          return 2;
        }
        chromatic::write_edge_list(chromatic::sample_gnp(s_n, s_p, s_seed), buf);
      } else {
        auto g = chromatic::sample_gnm(s_n, s_m, s_seed);
        if (s_simplify) {
          chromatic::write_edge_list(chromatic::simplify(g).first, buf);
        } else {
          chromatic::write_edge_list(g, buf);
        }
      }
      if (s_out.empty()) {
        std::cout << buf.str();
      } else {
        std::ofstream out(output_path(s_out));
        if (!out) throw std::runtime_error("cannot open " + s_out);
        out << buf.str();
      }
      return 0;
    }

    if (ch->parsed()) {
      const auto mg = read_graph(chi_in);
      json out;
      if (chi_count || chi_balanced) {
        if (chi_k < 1) {
          std::cerr << "chi: counting requires --k\n";
          return 2;
        }
        const mpz_class count =
            chi_balanced ? chromatic::count_balanced_colorings(mg, chi_k)
                         : chromatic::count_colorings(mg, chi_k);
        out = {{"n", mg.n}, {"m", mg.m()}, {"k", chi_k},
               {"balanced", chi_balanced}, {"count", count.get_str()}};
      } else {
        const auto [g, q] = chromatic::simplify(mg);
        if (chi_k >= 1) {
          out = {{"n", g.n}, {"m", g.m()}, {"blemishes", q}, {"k", chi_k},
                 {"colorable", chromatic::is_k_colorable(g, chi_k)}};
        } else {
          out = {{"n", g.n}, {"m", g.m()}, {"blemishes", q},
                 {"chi", chromatic::chromatic_number(g)}};
        }
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (mo->parsed()) {
      const int m = mo_m >= 0 ? mo_m
                              : static_cast<int>(std::floor(mo_c * mo_n));
      if (mo_m < 0 && mo_c < 0) {
        std::cerr << "moments: need --m or --c\n";
        return 2;
      }
      const auto ez = chromatic::expected_Z(mo_n, mo_k, m);
      const auto ez2 = chromatic::expected_Z2(mo_n, mo_k, m);
      mpq_class ratio = ez2.value / (ez.value * ez.value);
      ratio.canonicalize();
      json out{
          {"n", mo_n},
          {"k", mo_k},
          {"m", m},
          {"EZ", {{"num", ez.value.get_num().get_str()},
                  {"den", ez.value.get_den().get_str()},
                  {"approx", ez.value.get_d()}}},
          {"EZ2", {{"num", ez2.value.get_num().get_str()},
                   {"den", ez2.value.get_den().get_str()},
                   {"approx", ez2.value.get_d()}}},
          {"ratio", {{"num", ratio.get_num().get_str()},
                     {"den", ratio.get_den().get_str()},
                     {"approx", ratio.get_d()}}}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (ve->parsed()) {
      return cmd_verify(v_target, v_k, v_c, v_trials, v_seed);
    }

    if (exc->parsed()) {
      const auto summary = chromatic::run_chi_experiment(cp);
      if (!ex_out.empty()) {
        chromatic::emit(summary.records, ex_format, output_path(ex_out));
      } else if (ex_format == "csv") {
        chromatic::emit_csv(summary.records, std::cout);
      } else {
        chromatic::emit_json(summary.records, std::cout);
      }
      std::cerr << "completed=" << summary.completed
                << " censored=" << summary.censored
                << " band_fraction=" << summary.band_fraction
                << " exact_fraction=" << summary.exact_fraction << "\n";
      if (ex_threshold >= 0.0 && summary.band_fraction < ex_threshold) {
        return 1;
      }
      return 0;
    }

    if (exm->parsed()) {
      const auto sweep = chromatic::run_moment_sweep(exm_k, exm_ns, exm_cs);
      json rows = json::array();
      for (const auto& r : sweep.rows) {
        rows.push_back({{"k", r.k}, {"n", r.n}, {"m", r.m}, {"c", r.c},
                        {"ratio", r.ratio}, {"ratio_exact", r.ratio_exact},
                        {"paley_zygmund", r.paley_zygmund}});
      }
      json out{{"rows", rows}, {"explosion_found", sweep.explosion_found}};
      if (sweep.explosion_found) out["explosion_c"] = sweep.explosion_c;
      if (exm_out.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::ofstream f(output_path(exm_out));
        if (!f) throw std::runtime_error("cannot open " + exm_out);
        f << out.dump(2) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
