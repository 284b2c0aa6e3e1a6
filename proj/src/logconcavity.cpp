#include "logconcavity.hpp"

#include "families.hpp"
#include "sturm.hpp"

namespace narayana {

namespace {
void require_nonneg_coeffs(const Poly& p, const char* who) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k).sign() < 0)
      throw negative_coefficient_error(std::string(who) +
                                       ": negative coefficient at index " +
                                       std::to_string(k));
}

// Index of the first negative coefficient, or -1.
int first_negative_index(const Poly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k).sign() < 0) return k;
  return -1;
}
}  // namespace

Poly l_operator(const Poly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> cs;
  const int d = p.degree();
  cs.reserve(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    cs.push_back(p.coeff(k) * p.coeff(k) - p.coeff(k + 1) * p.coeff(k - 1));
  return Poly::from_coeffs(std::move(cs));
}

bool is_log_concave(const Poly& p) {
  require_nonneg_coeffs(p, "is_log_concave");
  return first_negative_index(l_operator(p)) < 0;
}

LogConcavityReport k_fold_log_concave(const Poly& p, int k) {
  if (k < 1) throw std::domain_error("k_fold_log_concave: k must be positive");
  require_nonneg_coeffs(p, "k_fold_log_concave");
  LogConcavityReport rep;
  Poly cur = p;
  for (int fold = 1; fold <= k; ++fold) {
    cur = l_operator(cur);
    const int bad = first_negative_index(cur);
    if (bad >= 0) {
      rep.first_failure = {fold, bad};
      return rep;
    }
    rep.max_verified_fold = fold;
  }
  return rep;
}

LogConcavityReport certify_infinite_logconcavity(const Poly& p, int fold_bound) {
  require_nonneg_coeffs(p, "certify_infinite_logconcavity");
  if (p.is_zero() || is_real_rooted(p)) {
    LogConcavityReport rep;
    rep.certificate = LogConcavityCertificate::RealRootedNonneg;
    return rep;
  }
  LogConcavityReport rep = k_fold_log_concave(p, fold_bound);
  rep.certificate = LogConcavityCertificate::BoundedCheckOnly;
  return rep;
}

Rational boros_moll_coeff(long n, long k) {
  if (n < 0) throw std::domain_error("boros_moll_coeff: n must be nonnegative");
  if (k < 0 || k > n) return Rational(0);
  Rational sum(0);
  for (long j = k; j <= n; ++j) {
    sum += pow2(j) * Rational(mpz_class(binomial(2 * n - 2 * j, n - j) *
                                        binomial(n + j, j) * binomial(j, k)));
  }
  return pow2(-2 * n) * sum;
}

Poly boros_moll_poly(long n) {
  if (n < 0) throw std::domain_error("boros_moll_poly: n must be nonnegative");
  const Poly xp1 = Poly::x() + Poly{1};
  Poly acc;
  Poly shifted_pow{1};  // (x+1)^j, updated incrementally
  for (long j = 0; j <= n; ++j) {
    if (j > 0) shifted_pow *= xp1;
    acc += (pow2(j) * Rational(mpz_class(binomial(2 * n - 2 * j, n - j) *
                                         binomial(n + j, j)))) *
           shifted_pow;
  }
  return pow2(-2 * n) * acc;
}

Poly q_poly(long n) {
  if (n < 1) throw std::domain_error("q_poly: n must be positive");
  return l_operator(boros_moll_poly(n));
}

QDecompositionReport q_decomposition_check(long n) {
  if (n < 1) throw std::domain_error("q_decomposition_check: n must be positive");
  Poly dsum;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      const Rational w =
          pow2(i + j) * Rational(mpz_class(binomial(2 * n - 2 * i, n - i) *
                                           binomial(2 * n - 2 * j, n - j) *
                                           binomial(n + i, i) * binomial(n + j, j)));
      dsum += w * narayana_rect(i, j);
    }
  }
  const Poly q = q_poly(n);
  QDecompositionReport rep;
  rep.n = n;
  if (!q.is_zero() && !dsum.is_zero() && dsum.degree() == q.degree()) {
    const Rational r = dsum.leading() / q.leading();
    rep.proportional = (dsum - r * q).is_zero();
    if (rep.proportional) {
      rep.ratio = r;
      rep.ratio_is_pow_16n = (r == pow2(4 * n));
    }
  }
  return rep;
}

}  // namespace narayana
