#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chromatic/moments.hpp"

namespace chromatic {

struct ExperimentRecord {
  std::string model;   // "gnp" or "gnm"
  int n = 0;
  double d = 0.0;      // expected degree (gnp) or 2c translation (gnm)
  int m = 0;           // edges drawn (gnm only)
  double c = 0.0;      // edges per vertex (gnm only)
  std::uint64_t seed = 0;
  int trial = 0;
  int chi = -1;        // -1 when censored by the solver budget
  bool censored = false;
  bool in_band = false;
  double runtime_seconds = 0.0;
};

struct ChiExperimentParams {
  int n = 200;
  double d = 4.0;
  int trials = 100;
  std::uint64_t seed = 1;
  double solver_budget_seconds = 60.0;
  std::string model = "gnp";  // "gnp" samples G(n, d/n); "gnm" m = floor(d/2 n)
};

struct ChiExperimentSummary {
  std::vector<ExperimentRecord> records;
  int completed = 0;
  int censored = 0;
  double band_fraction = 0.0;        // completed trials with chi in band
  double exact_fraction = 0.0;       // trials matching the exact flag, if set
  bool exact_flag = false;
  int exact_chi = 0;
};

// Guard: refuse instances the exact solver is not sized for.
void check_experiment_guard(int n, double d);

ChiExperimentSummary run_chi_experiment(const ChiExperimentParams& params);

struct MomentSweepRow {
  int k = 0, n = 0, m = 0;
  double c = 0.0;
  double ratio = 0.0;          // E[Z^2]/(E[Z])^2 as double
  std::string ratio_exact;     // num/den string
  double paley_zygmund = 0.0;
};

struct MomentSweep {
  std::vector<MomentSweepRow> rows;
  // Smallest c in the grid whose ratio sequence grows geometrically in n
  // (more than e^{0.05} per unit of n at every step); slow monotone creep
  // toward a bounded limit does not count.
  double explosion_c = 0.0;
  bool explosion_found = false;
};

MomentSweep run_moment_sweep(int k, const std::vector<int>& ns,
                             const std::vector<double>& cs,
                             double guard = kContingencyGuard);

void emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);
void emit_json(const std::vector<ExperimentRecord>& records,
               std::ostream& out);
void emit(const std::vector<ExperimentRecord>& records,
          const std::string& format, const std::string& path);

std::vector<ExperimentRecord> parse_json_records(std::istream& in);

}  // namespace chromatic
