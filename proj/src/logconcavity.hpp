#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "poly.hpp"
#include "rational.hpp"

namespace narayana {

// Log-concavity is defined for nonnegative coefficient sequences only.
struct negative_coefficient_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Coefficient k of the output is a_k^2 - a_{k+1}a_{k-1}, with a_{-1} and
// a_{deg+1} taken as 0.
Poly l_operator(const Poly& p);

bool is_log_concave(const Poly& p);

enum class LogConcavityCertificate { RealRootedNonneg, BoundedCheckOnly };

struct LogConcavityReport {
  int max_verified_fold = 0;
  // (fold, coefficient index) of the first negative entry, when one appears.
  std::optional<std::pair<int, int>> first_failure;
  LogConcavityCertificate certificate = LogConcavityCertificate::BoundedCheckOnly;

  bool all_folds_passed() const { return !first_failure.has_value(); }
};

// Iterates the operator up to k folds, stopping at the first negative entry.
LogConcavityReport k_fold_log_concave(const Poly& p, int k);

// Real-rooted nonnegative input certifies every fold at once; otherwise a
// bounded probe of fold_bound iterations runs.
LogConcavityReport certify_infinite_logconcavity(const Poly& p, int fold_bound = 5);

// Coefficient of x^k in the quartic-integral polynomial; 0 outside 0..n.
Rational boros_moll_coeff(long n, long k);

// Built by expanding the shifted-power form, deliberately a different code
// path from boros_moll_coeff so the two act as mutual oracles.
Poly boros_moll_poly(long n);

// Componentwise square-minus-neighbor-product of the coefficients above.
Poly q_poly(long n);

struct QDecompositionReport {
  long n = 0;
  bool proportional = false;   // double sum is a scalar multiple of q_poly(n)
  Rational ratio;              // double_sum / q_poly when proportional
  bool ratio_is_pow_16n = false;  // ratio == 2^{4n}
};

// Compares the rectangular-family double-sum expansion against q_poly(n).
// The two agree up to a scalar, which is reported, never silently absorbed.
QDecompositionReport q_decomposition_check(long n);

}  // namespace narayana
