#include "recurrence.hpp"

#include <stdexcept>

namespace narayana {

namespace {
Rational R(long v) { return Rational(v); }
Rational half(Rational v) { return v / Rational(2); }
}  // namespace

TCoefficients t_coefficients(long n) {
  TCoefficients tc;
  auto lin = [](long ca, long cb) {
    BivarPoly p = BivarPoly::monomial(Rational(ca), 1, 0);
    p += BivarPoly::monomial(Rational(cb), 0, 1);
    return p;
  };
  tc.t1 = lin(4 * n - 2, n);
  tc.t2 = lin(4 * n - 1, n);
  tc.t3 = lin(4 * n, n + 1);
  tc.t4 = lin(6 * n, n + 1);
  tc.t5 = lin(4 * n + 1, n + 1);
  return tc;
}

RectCoefficients overline_coefficients(long t, long n) {
  if (t < 0 || n < 0) throw std::domain_error("overline_coefficients: t, n >= 0");
  RectCoefficients rc;
  rc.variant = RectVariant::Overline;
  rc.a0 = R(-(2 * n + 3)) * R(n + t) * R(n + t + 1);
  rc.a1 = half(R(3 * t) * R(t - 2) * R((t + 1) * (t + 1))) +
          R(t) * R(t - 2) * R(t * t + 7 * t + 5) * R(n) +
          R(3 * t) * R(t - 2) * R(t + 2) * R(n * n) +
          R(2 * t) * R(t - 2) * R(n * n * n);
  rc.a2 = half(R(t * t) * R(t - 1) * R((t + 1) * (t + 1))) +
          R(t - 1) * R(2 * t * t * t + 3 * t * t + t - 3) * R(n) +
          R(t - 1) * R(3 * t * t + 3 * t - 5) * R(n * n) +
          R(2) * R((t - 1) * (t - 1)) * R(n * n * n);
  rc.b0 = R(-n - 1 - t);
  rc.b1 = R((t - 1) * (t - 1)) * R(n) + half(R(t - 1) * R(t * t)) +
          R((t - 1) * (t - 1));
  rc.c0 = R(-n - t);
  rc.c1 = R((t - 1) * (t - 1)) * R(n) + half(R(t - 1) * R(t * t));
  return rc;
}

RectCoefficients underline_coefficients(long t, long n) {
  if (t < 0 || n < 0) throw std::domain_error("underline_coefficients: t, n >= 0");
  RectCoefficients rc;
  rc.variant = RectVariant::Underline;
  rc.a0 = -(R(2) * R(n * n * n) + R(2 * t + 5) * R(n * n) + R(2 * t + 3) * R(n));
  rc.a1 = R(2 * t) * R(t + 2) * R(n * n * n) +
          R(3 * t) * R((t + 2) * (t + 2)) * R(n * n) +
          R(t) * R(t + 2) * R(t * t + 5 * t + 5) * R(n) +
          half(R(t) * R(t + 1) * R(t + 2) * R(t + 3));
  rc.a2 = R(t + 1) * (R(2 * t + 2) * R(n * n * n) +
                      R(3 * t * t + 9 * t + 5) * R(n * n) +
                      R(2 * t + 3) * R(t * t + 3 * t + 1) * R(n) +
                      half(R(t) * R(t + 1) * R(t + 2) * R(t + 3)));
  rc.b0 = R(-(n + 1));
  rc.b1 = R((t + 1) * (t + 1)) * R(n) + half(R(t + 1) * R(t * t + 4 * t + 2));
  rc.c0 = R(-n);
  rc.c1 = R((t + 1) * (t + 1)) * R(n) + half(R(t) * R(t + 1) * R(t + 2));
  return rc;
}

std::string RecurrenceCheckResult::residual_str() const {
  if (std::holds_alternative<Poly>(residual))
    return to_string(std::get<Poly>(residual));
  return to_string(std::get<ParamPoly>(residual));
}

RecurrenceCheckResult check_f_recurrence_with(long n, const TCoefficients& tc) {
  if (n < 2) throw std::domain_error("check_f_recurrence: n must be >= 2");
  const ParamPoly f_next = f_family_symbolic(n + 1);
  const ParamPoly f_cur = f_family_symbolic(n);

  const ParamPoly x = ParamPoly::term(BivarPoly(1), 1);
  const Poly xm1 = Poly::x() - Poly{1};

  ParamPoly lhs = (R(n * (n + 1)) * tc.t1) * f_next;
  ParamPoly rhs =
      ((R(2 * n * (n + 1)) * tc.t2) * x +
       ParamPoly::term(R(2 * n * (n - 1)) * tc.t5, 0)) *
      f_cur;
  if (n > 2) {
    const ParamPoly f_prev = f_family_symbolic(n - 1);
    rhs -= (R(n * (n - 2)) * tc.t3) * (ParamPoly::lift(xm1 * xm1) * f_prev);
  }
  rhs -= (R(2) * tc.t4) * (ParamPoly::lift(Poly::x() * xm1) * f_cur.derivative());

  RecurrenceCheckResult res;
  res.identity = "f";
  res.n = n;
  ParamPoly residual = lhs - rhs;
  res.verified = residual.is_zero();
  res.residual = std::move(residual);
  return res;
}

RecurrenceCheckResult check_f_recurrence(long n) {
  return check_f_recurrence_with(n, t_coefficients(n));
}

namespace {
RecurrenceCheckResult check_rect_recurrence(const char* identity, long t, long n,
                                            const RectCoefficients& rc,
                                            const Poly& prev, const Poly& cur,
                                            const Poly& next, const Rational& lhs_scale) {
  const Poly x = Poly::x();
  const Poly xm1 = x - Poly{1};
  const Poly cpoly = Poly{rc.c0} + rc.c1 * x;
  const Poly apoly = Poly{rc.a0} + rc.a1 * x + rc.a2 * (x * x);
  const Poly bpoly = Poly{rc.b0} + rc.b1 * x;

  const Poly lhs = lhs_scale * (cpoly * next);
  const Poly rhs = apoly * cur - Rational(n) * Rational(n + t) * (xm1 * xm1 * bpoly * prev);

  RecurrenceCheckResult res;
  res.identity = identity;
  res.n = n;
  res.t = t;
  Poly residual = lhs - rhs;
  res.verified = residual.is_zero();
  res.residual = std::move(residual);
  return res;
}
}  // namespace

RecurrenceCheckResult check_overline_recurrence_with(long t, long n,
                                                     const RectCoefficients& rc) {
  if (t < 0 || n < 1)
    throw std::domain_error("check_overline_recurrence: need t >= 0, n >= 1");
  return check_rect_recurrence("overline", t, n, rc, overline_n(t, n - 1),
                               overline_n(t, n), overline_n(t, n + 1),
                               Rational((n + t + 1) * (n + 3)));
}

RecurrenceCheckResult check_overline_recurrence(long t, long n) {
  return check_overline_recurrence_with(t, n, overline_coefficients(t, n));
}

RecurrenceCheckResult check_underline_recurrence_with(long t, long n,
                                                      const RectCoefficients& rc) {
  if (t < 0 || n < 1)
    throw std::domain_error("check_underline_recurrence: need t >= 0, n >= 1");
  return check_rect_recurrence("underline", t, n, rc, underline_n(t, n - 1),
                               underline_n(t, n), underline_n(t, n + 1),
                               Rational((n + t + 3) * (n + 1)));
}

RecurrenceCheckResult check_underline_recurrence(long t, long n) {
  return check_underline_recurrence_with(t, n, underline_coefficients(t, n));
}

}  // namespace narayana
