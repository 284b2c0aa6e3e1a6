#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace narayana {

// Polynomial in two formal parameters alpha, beta with rational coefficients.
// Sparse map keyed by (deg_alpha, deg_beta); entries are never zero.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;

  BivarPoly() = default;
  BivarPoly(Rational c) { add_term(std::move(c), 0, 0); }
  BivarPoly(long c) : BivarPoly(Rational(c)) {}

  static BivarPoly alpha() { return monomial(1, 1, 0); }
  static BivarPoly beta() { return monomial(1, 0, 1); }
  static BivarPoly monomial(Rational c, int i, int j);

  void add_term(Rational c, int i, int j);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;

  // True when the only term is the (0,0) constant, or the poly is zero.
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Rational& c, const BivarPoly& p);

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

  Rational eval(const Rational& alpha, const Rational& beta) const;

 private:
  std::map<Key, Rational> terms_;
};

// Printed with total degree descending, alpha-degree descending within a level:
// "162*alpha^2 + 108*alpha*beta + 18*beta^2".
std::string to_string(const BivarPoly& p);

// Polynomial in x whose coefficients live in Q[alpha, beta].
// coeffs[k] multiplies x^k; trailing zero coefficients are stripped.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(std::vector<BivarPoly> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static ParamPoly lift(const Poly& p);
  static ParamPoly term(BivarPoly c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BivarPoly>& coeffs() const { return coeffs_; }
  BivarPoly coeff(int k) const;

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const BivarPoly& c, const ParamPoly& p);
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly derivative() const;

  // Specialize alpha, beta to rationals, collapsing to a Poly in x.
  Poly substitute(const Rational& alpha, const Rational& beta) const;

 private:
  void normalize();
  std::vector<BivarPoly> coeffs_;
};

std::string to_string(const ParamPoly& p, const char* var = "x");

}  // namespace narayana
