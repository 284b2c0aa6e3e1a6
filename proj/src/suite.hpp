#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace narayana {

// Sweep bounds for the verification battery. Defaults reproduce the full
// battery; quick() shrinks every axis for a fast smoke pass.
struct SuiteBounds {
  long f_rec_max_n = 30;      // criterion 1
  long rect_rec_max_t = 10;   // criterion 2
  long rect_rec_max_n = 30;
  long grid_max_n = 15;       // criterion 4 real-rootedness + chain
  long lw_max_n = 10;         // criterion 4 certificate stage
  long rect_max = 20;         // criterion 5, both indices
  long ov_max_t = 6;          // criterion 6
  long ov_max_n = 15;
  long ov_chain_max_n = 10;
  long un_max_t = 6;          // criterion 7
  long un_max_n = 15;
  long ident_max_n = 30;      // criterion 8
  long bm_dual_max_n = 30;    // criterion 9
  long bm_fold_max_n = 20;
  int brandon_samples = 200;  // criterion 10
  long q_probe_max_n = 10;    // criterion 11
  long q_dec_max_n = 8;
  int sturm_samples = 500;    // criterion 12
  std::uint64_t seed = 20260825ULL;
  long jobs = 0;

  static SuiteBounds quick(long cap);
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool conjecture_probe = false;  // failure is a finding, not a build failure
  std::string detail;
};

// Runs the twelve-part battery; results come back in criterion order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteBounds& bounds);

}  // namespace narayana
