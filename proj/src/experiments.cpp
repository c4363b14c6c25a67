#include "chromatic/experiments.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "chromatic/coloring.hpp"
#include "chromatic/graphs.hpp"
#include "chromatic/rng.hpp"
#include "chromatic/thresholds.hpp"

namespace chromatic {

void check_experiment_guard(int n, double d) {
  // Default guard: n <= 400 for d <= 10; tighter for denser graphs.
  if (n < 1 || d <= 0.0) {
    throw std::invalid_argument("experiment: need n >= 1 and d > 0");
  }
  if (n > 400 || d > 10.0) {
    throw std::invalid_argument(
        "experiment guard exceeded: the exact solver is sized for n <= 400 "
        "and d <= 10; try smaller n or d");
  }
}

ChiExperimentSummary run_chi_experiment(const ChiExperimentParams& params) {
  check_experiment_guard(params.n, params.d);
  const Band band = predicted_band(params.d);

  ChiExperimentSummary summary;
  summary.exact_flag = band.exact;
  summary.exact_chi = band.exact_chi;

  const Rng base(params.seed);
  int in_band_count = 0, exact_count = 0;
  for (int t = 0; t < params.trials; ++t) {
    const std::uint64_t trial_seed =
        base.split(static_cast<std::uint64_t>(t)).next_u64();

    ExperimentRecord rec;
    rec.model = params.model;
    rec.n = params.n;
    rec.d = params.d;
    rec.seed = params.seed;
    rec.trial = t;

    SimpleGraph g;
    if (params.model == "gnm") {
      rec.c = params.d / 2.0;
      rec.m = static_cast<int>(std::floor(rec.c * params.n));
      g = simplify(sample_gnm(params.n, rec.m, trial_seed)).first;
    } else {
      g = sample_gnp(params.n, params.d / params.n, trial_seed);
    }

    const auto t0 = std::chrono::steady_clock::now();
    const auto chi = chromatic_number(g, params.solver_budget_seconds);
    rec.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (chi.has_value()) {
      rec.chi = *chi;
      rec.in_band = (*chi == band.lo || *chi == band.hi);
      ++summary.completed;
      if (rec.in_band) ++in_band_count;
      if (band.exact && *chi == band.exact_chi) ++exact_count;
    } else {
      rec.censored = true;
      ++summary.censored;
    }
    summary.records.push_back(std::move(rec));
  }
  const int total = params.trials;
  summary.band_fraction = total > 0 ? static_cast<double>(in_band_count) / total : 0.0;
  summary.exact_fraction = total > 0 ? static_cast<double>(exact_count) / total : 0.0;
  return summary;
}

MomentSweep run_moment_sweep(int k, const std::vector<int>& ns,
                             const std::vector<double>& cs, double guard) {
  MomentSweep sweep;
  for (double c : cs) {
    std::vector<double> sequence;
    for (int n : ns) {
      const MomentRatio r = second_moment_ratio(n, k, c, guard);
      MomentSweepRow row;
      row.k = k;
      row.n = n;
      row.m = r.m;
      row.c = c;
      row.ratio = r.ratio.get_d();
      row.ratio_exact = r.ratio.get_num().get_str() + "/" +
                        r.ratio.get_den().get_str();
      row.paley_zygmund = r.paley_zygmund.get_d();
      sequence.push_back(row.ratio);
      sweep.rows.push_back(std::move(row));
    }
    // A bounded ratio sequence can still creep upward while converging, so
    // monotonicity alone is not evidence of blow-up. Flag c as exploding
    // only when the tail grows geometrically: the last consecutive step
    // gains more than e^{0.05} per unit of n.
    bool exploding = sequence.size() >= 2;
    for (std::size_t i = 1; i < sequence.size(); ++i) {
      const double dn = ns[i] - ns[i - 1];
      if (!(sequence[i] > sequence[i - 1] * std::exp(0.05 * dn))) {
        exploding = false;
        break;
      }
    }
    if (exploding && !sweep.explosion_found) {
      sweep.explosion_found = true;
      sweep.explosion_c = c;
    }
  }
  return sweep;
}

namespace {

const char* kCsvHeader =
    "model,n,d,m,c,seed,trial,chi,censored,in_band,runtime_seconds";

nlohmann::json to_json(const ExperimentRecord& r) {
  return nlohmann::json{
      {"model", r.model},       {"n", r.n},
      {"d", r.d},               {"m", r.m},
      {"c", r.c},               {"seed", r.seed},
      {"trial", r.trial},       {"chi", r.chi},
      {"censored", r.censored}, {"in_band", r.in_band},
      {"runtime_seconds", r.runtime_seconds}};
}

ExperimentRecord from_json(const nlohmann::json& j) {
  ExperimentRecord r;
  r.model = j.at("model").get<std::string>();
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<double>();
  r.m = j.at("m").get<int>();
  r.c = j.at("c").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trial = j.at("trial").get<int>();
  r.chi = j.at("chi").get<int>();
  r.censored = j.at("censored").get<bool>();
  r.in_band = j.at("in_band").get<bool>();
  r.runtime_seconds = j.at("runtime_seconds").get<double>();
  return r;
}

}  // namespace

void emit_csv(const std::vector<ExperimentRecord>& records,
              std::ostream& out) {
  out << std::setprecision(17);
  out << kCsvHeader << "\n";
  for (const auto& r : records) {
    out << r.model << ',' << r.n << ',' << r.d << ',' << r.m << ',' << r.c
        << ',' << r.seed << ',' << r.trial << ',' << r.chi << ','
        << (r.censored ? 1 : 0) << ',' << (r.in_band ? 1 : 0) << ','
        << r.runtime_seconds << "\n";
  }
}

void emit_json(const std::vector<ExperimentRecord>& records,
               std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << "\n";
}

void emit(const std::vector<ExperimentRecord>& records,
          const std::string& format, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("emit: cannot open output file: " + path);
  }
  if (format == "csv") {
    emit_csv(records, out);
  } else if (format == "json") {
    emit_json(records, out);
  } else {
    throw std::invalid_argument("emit: unknown format: " + format);
  }
  if (!out.good()) {
    throw std::runtime_error("emit: write failed for: " + path);
  }
}

std::vector<ExperimentRecord> parse_json_records(std::istream& in) {
  nlohmann::json arr = nlohmann::json::parse(in);
  std::vector<ExperimentRecord> records;
  for (const auto& j : arr) records.push_back(from_json(j));
  return records;
}

}  // namespace chromatic
