#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace narayana {

// Dense univariate polynomial over Rational. coeffs()[k] is the coefficient
// of x^k. The zero polynomial is the empty vector; otherwise the last entry
// is nonzero, so degree() == coeffs().size() - 1.
class Poly {
 public:
  Poly() = default;
  Poly(Rational c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }  // NOLINT
  Poly(long c) : Poly(Rational(c)) {}                                      // NOLINT

  static Poly x();
  static Poly from_coeffs(std::vector<Rational> c);
  // Monomial c * x^k.
  static Poly term(Rational c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero outside the stored range.
  const Rational& coeff(int k) const;
  const Rational& leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Rational eval(const Rational& x) const;  // Horner
  Poly pow(unsigned e) const;

  // Quotient and remainder over the rationals; b must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // Exact quotient; throws if b does not divide a.
  static Poly div_exact(const Poly& a, const Poly& b);

  Poly monic() const;
  // Scales by a positive rational so the coefficients become coprime
  // integers (sign pattern preserved). Zero stays zero.
  Poly primitive() const;

 private:
  std::vector<Rational> coeffs_;
  void normalize();
};

// Monic gcd computed with a primitive pseudo-remainder sequence over the
// integers; rational coefficients only enter at the final monic scaling.
// Rejects the (0, 0) input.
Poly poly_gcd(const Poly& a, const Poly& b);

// p with all root multiplicities flattened to one (monic).
Poly squarefree_part(const Poly& p);

// Yun decomposition: pairwise-coprime monic squarefree factors f with
// multiplicities i such that p = lc(p) * prod f_i^i. Empty for constants.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

std::string to_string(const Poly& p, const char* var = "x");

}  // namespace narayana
