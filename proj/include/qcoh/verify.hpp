#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/generator.hpp"

namespace qcoh {

std::vector<std::string> default_generator_specs();

struct TrialConfig {
  std::vector<int> dims{2, 3, 4, 5};
  int trials_per_case = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> f_list = default_generator_specs();
  double tol_violation = 1e-9;

  // Throws InvalidConfig (or UnknownGenerator / ParamOutOfRange for f_list).
  void validate() const;
};

// pass <=> worst_violation <= tol_violation. A violation is the amount by
// which a checked inequality or identity misses its target; 0 when it holds.
struct VerificationReport {
  std::string suite;
  bool pass = true;
  long trials = 0;
  double worst_violation = 0.0;
  std::uint64_t worst_case_seed = 0;
  std::vector<std::string> notes;
};

// Separation between the two tensor-extension coherences used to show that
// f-coherence is not monotone under SIO:
//   lhs = C~_f(rho (x) I/d),  rhs = C~_f(rho (x) |0><0|).
struct SioVariantGap {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  // same pair evaluated from rho's eigenvalues / diagonal alone
  double lhs_identity = 0.0;
  double rhs_identity = 0.0;
};

struct SioCounterexample {
  std::string f_name;
  int d = 2;
  SioVariantGap plain;
  SioVariantGap hat;
  double gap = 0.0;  // max of the two variant gaps
  // max disagreement between the direct and the eigenvalue-identity routes
  double route_disagreement = 0.0;
};

// rho defaults to the maximally coherent state of dimension d.
SioCounterexample sio_counterexample_report(const GeneratorFunction& f, int d,
                                            const std::optional<DensityMatrix>& rho = {});

VerificationReport suite_entropy_bounds(const TrialConfig& cfg);
VerificationReport suite_gio_monotonicity(const TrialConfig& cfg);
VerificationReport suite_strong_monotonicity(const TrialConfig& cfg);
VerificationReport suite_divergence_oracle(const TrialConfig& cfg);
VerificationReport suite_faithfulness_and_bounds(const TrialConfig& cfg);
// neg_log must show no gap while every other f in cfg shows a clear one.
VerificationReport suite_sio_separation(const TrialConfig& cfg);

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const TrialConfig& cfg);
std::vector<VerificationReport> run_all(const TrialConfig& cfg);

}  // namespace qcoh
