#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "families.hpp"
#include "logconcavity.hpp"
#include "poly.hpp"

using namespace narayana;

namespace {
Poly make_poly(std::vector<long> cs) {
  std::vector<Rational> out;
  out.reserve(cs.size());
  for (long c : cs) out.emplace_back(c);
  return Poly::from_coeffs(std::move(out));
}
}  // namespace

TEST_CASE("square-minus-neighbors operator") {
  CHECK(l_operator(make_poly({1, 3, 1})) == make_poly({1, 8, 1}));
  CHECK(l_operator(Poly::x()) == Poly::x());
  CHECK(l_operator(Poly{5}) == Poly{25});
  CHECK(l_operator(Poly{}).is_zero());
  // Defined for arbitrary signs; squares land on the boundary terms.
  CHECK(l_operator(make_poly({-1, 1})) == make_poly({1, 1}));
}

TEST_CASE("single-fold log-concavity") {
  CHECK(is_log_concave(make_poly({1, 3, 1})));
  CHECK(is_log_concave(narayana_a(4)));
  CHECK(!is_log_concave(make_poly({1, 1, 2})));
  CHECK_THROWS_AS(is_log_concave(make_poly({-1, 1})), negative_coefficient_error);
}

TEST_CASE("iterated folds stop at the first negative entry") {
  // L(1,1,1) = (1,0,1); L(1,0,1) dips negative in the middle.
  const LogConcavityReport r = k_fold_log_concave(make_poly({1, 1, 1}), 5);
  CHECK(!r.all_folds_passed());
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->first == 2);
  CHECK(r.first_failure->second == 1);
  CHECK(r.max_verified_fold == 1);

  const LogConcavityReport ok = k_fold_log_concave(narayana_a(5), 3);
  CHECK(ok.all_folds_passed());
  CHECK(ok.max_verified_fold == 3);

  CHECK_THROWS_AS(k_fold_log_concave(narayana_a(3), 0), std::domain_error);
  CHECK_THROWS_AS(k_fold_log_concave(make_poly({1, -1}), 2),
                  negative_coefficient_error);
}

TEST_CASE("infinite log-concavity certificates") {
  const LogConcavityReport rr = certify_infinite_logconcavity(narayana_a(4));
  CHECK(rr.certificate == LogConcavityCertificate::RealRootedNonneg);
  CHECK(rr.all_folds_passed());

  const LogConcavityReport bounded =
      certify_infinite_logconcavity(make_poly({1, 1, 1}));
  CHECK(bounded.certificate == LogConcavityCertificate::BoundedCheckOnly);
  REQUIRE(bounded.first_failure.has_value());
  CHECK(bounded.first_failure->first == 2);
  CHECK(bounded.first_failure->second == 1);
  CHECK(bounded.max_verified_fold == 1);

  CHECK(certify_infinite_logconcavity(Poly{}).certificate ==
        LogConcavityCertificate::RealRootedNonneg);
  CHECK_THROWS_AS(certify_infinite_logconcavity(make_poly({1, -2, 1})),
                  negative_coefficient_error);
}

TEST_CASE("quartic-integral coefficients agree across both constructions") {
  for (long n = 0; n <= 12; ++n) {
    const Poly p = boros_moll_poly(n);
    CHECK(p.degree() == static_cast<int>(n));
    for (long k = 0; k <= n; ++k) CHECK(p.coeff(static_cast<int>(k)) == boros_moll_coeff(n, k));
    // All coefficients positive, so the iterated-fold machinery accepts them.
    for (long k = 0; k <= n; ++k) CHECK(boros_moll_coeff(n, k).sign() > 0);
  }
  CHECK(boros_moll_poly(1) == Poly::from_coeffs({Rational(3, 2), Rational(1)}));
  CHECK(boros_moll_coeff(2, 0) == Rational(21, 8));
  CHECK(boros_moll_coeff(2, 5) == Rational(0));
  CHECK(boros_moll_coeff(2, -1) == Rational(0));
  CHECK_THROWS_AS(boros_moll_coeff(-1, 0), std::domain_error);
  CHECK_THROWS_AS(boros_moll_poly(-2), std::domain_error);
}

TEST_CASE("squared-coefficient family") {
  CHECK(q_poly(1) == Poly::from_coeffs({Rational(9, 4), Rational(1)}));
  CHECK(q_poly(3) == l_operator(boros_moll_poly(3)));
  CHECK_THROWS_AS(q_poly(0), std::domain_error);
}

TEST_CASE("double-sum expansion matches up to the expected power of two") {
  for (long n = 1; n <= 4; ++n) {
    const QDecompositionReport rep = q_decomposition_check(n);
    CHECK(rep.n == n);
    CHECK(rep.proportional);
    CHECK(rep.ratio == pow2(4 * n));
    CHECK(rep.ratio_is_pow_16n);
  }
  CHECK(q_decomposition_check(2).ratio == Rational(256));
  CHECK_THROWS_AS(q_decomposition_check(0), std::domain_error);
}

TEST_CASE("real-rooted nonnegative inputs are log-concave") {
  std::mt19937_64 rng(101);
  for (int s = 0; s < 20; ++s) {
    Poly p{1};
    const int d = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < d; ++i) {
      const Rational root(1 + static_cast<long>(rng() % 15),
                          1 + static_cast<long>(rng() % 4));
      p *= Poly::x() + Poly{root};
    }
    CHECK(is_log_concave(p));
    CHECK(k_fold_log_concave(p, 3).all_folds_passed());
  }
}
