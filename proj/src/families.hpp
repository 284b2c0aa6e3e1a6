#pragma once

#include <optional>
#include <string>

#include "bivar.hpp"
#include "poly.hpp"

namespace narayana {

// Type A Narayana polynomial. narayana_a(0) = 1 (empty-peak convention).
Poly narayana_a(long n);

// Type B Narayana polynomial, coefficients C(n,k)^2.
Poly narayana_b(long n);

// Type D Narayana polynomial, defined for n >= 2.
Poly narayana_d(long n);

// Rectangular family: coefficient of x^k is C(n,k)C(m,k) - C(n,k+1)C(m,k-1).
// Trailing zero coefficients are stripped.
Poly narayana_rect(long n, long m);

// Shifted rectangular families.
Poly overline_n(long t, long n);   // narayana_rect(n+t, n)
Poly underline_n(long t, long n);  // narayana_rect(n, n+t)

// One-parameter deformation a*narayana_b(n) + b*n*x*narayana_a(n-2), n >= 2.
Poly f_family(long n, const Rational& a, const Rational& b);

// Same family with the two weights kept as formal parameters alpha, beta.
ParamPoly f_family_symbolic(long n);

enum class FamilyId { A, B, D, Rect, Overline, Underline, F, BM, Q };

std::optional<FamilyId> parse_family(const std::string& name);
const char* family_name(FamilyId id);

struct FamilySpec {
  FamilyId id;
  long n = 0;
  long m = 0;
  long t = 0;
  Rational alpha{1};
  Rational beta{0};
};

// Builds the requested member; throws std::domain_error on out-of-domain
// indices. BM and Q dispatch into the log-concavity layer.
Poly make_family(const FamilySpec& spec);

}  // namespace narayana
