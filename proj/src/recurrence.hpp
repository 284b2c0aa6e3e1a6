#pragma once

#include <string>
#include <variant>

#include "bivar.hpp"
#include "families.hpp"
#include "poly.hpp"

namespace narayana {

// Degree-raising recurrence weights for the two-parameter family, linear in
// the formal alpha, beta.
struct TCoefficients {
  BivarPoly t1, t2, t3, t4, t5;
};

TCoefficients t_coefficients(long n);

enum class RectVariant { Overline, Underline };

// Weights of the three-term recurrences for the shifted rectangular families.
struct RectCoefficients {
  RectVariant variant;
  Rational a0, a1, a2, b0, b1, c0, c1;
};

RectCoefficients overline_coefficients(long t, long n);
RectCoefficients underline_coefficients(long t, long n);

struct RecurrenceCheckResult {
  std::string identity;      // "f", "overline", "underline"
  long n = 0;
  long t = 0;                // unused for the f identity
  bool verified = false;
  std::variant<Poly, ParamPoly> residual;  // zero iff verified

  std::string residual_str() const;
};

// Checks n(n+1)T1*F_{n+1} = (2n(n+1)T2*x + 2n(n-1)T5)*F_n
//                           - n(n-2)T3*(x-1)^2*F_{n-1} - 2T4*x(x-1)*F_n'
// with alpha, beta symbolic. At n = 2 the F_{n-1} term is dropped because its
// scalar factor n-2 vanishes, so F_1 is never formed.
RecurrenceCheckResult check_f_recurrence(long n);
RecurrenceCheckResult check_f_recurrence_with(long n, const TCoefficients& tc);

// Checks (n+t+1)(n+3)(c0+c1*x)*ov_{n+1} =
//        (a0+a1*x+a2*x^2)*ov_n - n(n+t)(x-1)^2(b0+b1*x)*ov_{n-1}.
RecurrenceCheckResult check_overline_recurrence(long t, long n);
RecurrenceCheckResult check_overline_recurrence_with(long t, long n,
                                                     const RectCoefficients& rc);

// Checks (n+t+3)(n+1)(c0+c1*x)*un_{n+1} =
//        (a0+a1*x+a2*x^2)*un_n - n(n+t)(x-1)^2(b0+b1*x)*un_{n-1}.
RecurrenceCheckResult check_underline_recurrence(long t, long n);
RecurrenceCheckResult check_underline_recurrence_with(long t, long n,
                                                      const RectCoefficients& rc);

}  // namespace narayana
