#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "families.hpp"

using namespace narayana;

namespace {

// Counts Dyck paths of semilength m by number of peaks (an up-step followed
// immediately by a down-step). Plain lattice walk, independent of any
// binomial formula.
std::vector<long> dyck_peak_counts(int m) {
  // dp[h][p][u]: prefixes ending at height h with p peaks, u = last step up.
  std::vector dp(m + 1, std::vector(m + 1, std::vector<long>(2, 0)));
  dp[0][0][0] = 1;
  for (int step = 0; step < 2 * m; ++step) {
    std::vector next(m + 1, std::vector(m + 1, std::vector<long>(2, 0)));
    for (int h = 0; h <= m; ++h)
      for (int p = 0; p <= m; ++p)
        for (int u = 0; u < 2; ++u) {
          const long c = dp[h][p][u];
          if (c == 0) continue;
          if (h + 1 <= m) next[h + 1][p][1] += c;
          if (h >= 1) next[h - 1][p + u][0] += c;
        }
    dp = std::move(next);
  }
  std::vector<long> out(m + 1, 0);
  for (int p = 0; p <= m; ++p) out[p] = dp[0][p][0] + dp[0][p][1];
  return out;
}

bool palindromic(const Poly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != p.coeff(p.degree() - k)) return false;
  return true;
}

}  // namespace

TEST_CASE("type A coefficients count Dyck paths by peaks") {
  for (long n = 0; n <= 8; ++n) {
    const Poly a = narayana_a(n);
    const auto counts = dyck_peak_counts(static_cast<int>(n) + 1);
    REQUIRE(a.degree() == static_cast<int>(n));
    for (long k = 0; k <= n; ++k)
      CHECK(a.coeff(static_cast<int>(k)) == Rational(counts[k + 1]));
  }
}

TEST_CASE("frozen small members") {
  CHECK(narayana_a(0) == Poly{1});
  CHECK(narayana_a(3) ==
        Poly::from_coeffs({Rational(1), Rational(6), Rational(6), Rational(1)}));
  CHECK(narayana_b(3) ==
        Poly::from_coeffs({Rational(1), Rational(9), Rational(9), Rational(1)}));
  CHECK(narayana_b(4) == Poly::from_coeffs({Rational(1), Rational(16),
                                            Rational(36), Rational(16),
                                            Rational(1)}));
  CHECK(narayana_d(2) ==
        Poly::from_coeffs({Rational(1), Rational(2), Rational(1)}));
  // The degree-3 coincidence: the D member equals the A member.
  CHECK(narayana_d(3) == narayana_a(3));
  CHECK(narayana_d(4) == Poly::from_coeffs({Rational(1), Rational(12),
                                            Rational(24), Rational(12),
                                            Rational(1)}));
  CHECK(narayana_rect(2, 2) ==
        Poly::from_coeffs({Rational(1), Rational(3), Rational(1)}));
  CHECK(overline_n(2, 1) ==
        Poly::from_coeffs({Rational(1), Rational(0), Rational(-1)}));
  CHECK(underline_n(1, 1) == Poly::from_coeffs({Rational(1), Rational(2)}));
}

TEST_CASE("rectangular family matches its defining sums") {
  for (long n = 0; n <= 7; ++n)
    for (long m = 0; m <= 7; ++m) {
      const Poly p = narayana_rect(n, m);
      for (int k = 0; k <= p.degree() + 2; ++k) {
        const Rational want(mpz_class(binomial(n, k) * binomial(m, k) -
                                      binomial(n, k + 1) * binomial(m, k - 1)));
        CHECK(p.coeff(k) == want);
      }
      CHECK(overline_n(m, n) == narayana_rect(n + m, n));
      CHECK(underline_n(m, n) == narayana_rect(n, n + m));
    }
}

TEST_CASE("identification identities") {
  for (long n = 0; n <= 12; ++n) {
    CHECK(narayana_rect(n, n) == narayana_a(n));
    CHECK(narayana_rect(n + 1, n) == narayana_a(n));
  }
  for (long n = 2; n <= 12; ++n)
    CHECK(f_family(n, Rational(1), Rational(-1)) == narayana_d(n));
  // Shift zero and one both reduce to the type A member.
  for (long n = 0; n <= 8; ++n) {
    CHECK(overline_n(0, n) == narayana_a(n));
    CHECK(overline_n(1, n) == narayana_a(n));
  }
}

TEST_CASE("palindromic coefficient sequences") {
  for (long n = 0; n <= 10; ++n) {
    CHECK(palindromic(narayana_a(n)));
    CHECK(palindromic(narayana_b(n)));
  }
  std::mt19937_64 rng(7);
  for (int s = 0; s < 20; ++s) {
    const Rational a(1 + static_cast<long>(rng() % 9),
                     1 + static_cast<long>(rng() % 9));
    const Rational b(static_cast<long>(rng() % 19) - 9,
                     1 + static_cast<long>(rng() % 9));
    const long n = 2 + static_cast<long>(rng() % 9);
    CHECK(palindromic(f_family(n, a, b)));
  }
}

TEST_CASE("two-parameter member agrees with its symbolic form") {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 25; ++s) {
    const long n = 2 + static_cast<long>(rng() % 8);
    const Rational a(static_cast<long>(rng() % 21) - 10,
                     1 + static_cast<long>(rng() % 6));
    const Rational b(static_cast<long>(rng() % 21) - 10,
                     1 + static_cast<long>(rng() % 6));
    CHECK(f_family_symbolic(n).substitute(a, b) == f_family(n, a, b));
  }
  CHECK(f_family(3, Rational(1), Rational(0)) == narayana_b(3));
}

TEST_CASE("domain checks reject undefined indices") {
  CHECK_THROWS_AS(narayana_a(-1), std::domain_error);
  CHECK_THROWS_AS(narayana_b(-2), std::domain_error);
  CHECK_THROWS_AS(narayana_d(1), std::domain_error);
  CHECK_THROWS_AS(narayana_rect(-1, 3), std::domain_error);
  CHECK_THROWS_AS(overline_n(-1, 2), std::domain_error);
  CHECK_THROWS_AS(underline_n(2, -1), std::domain_error);
  CHECK_THROWS_AS(f_family(1, Rational(1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(f_family_symbolic(1), std::domain_error);
}

TEST_CASE("family names parse and dispatch") {
  CHECK(parse_family("A") == FamilyId::A);
  CHECK(parse_family("rect") == FamilyId::Rect);
  CHECK(parse_family("bm") == FamilyId::BM);
  CHECK(!parse_family("nope").has_value());
  for (const char* name :
       {"A", "B", "D", "rect", "overline", "underline", "F", "bm", "Q"})
    CHECK(family_name(*parse_family(name)) == std::string(name));

  FamilySpec spec;
  spec.id = FamilyId::Rect;
  spec.n = 2;
  spec.m = 2;
  CHECK(make_family(spec) == narayana_rect(2, 2));
  spec.id = FamilyId::F;
  spec.n = 4;
  spec.alpha = Rational(1);
  spec.beta = Rational(-1);
  CHECK(make_family(spec) == narayana_d(4));
  spec.id = FamilyId::Overline;
  spec.t = 3;
  spec.n = 2;
  CHECK(make_family(spec) == overline_n(3, 2));
}
