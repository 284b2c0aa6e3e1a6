#pragma once

#include <string>
#include <vector>

#include "families.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "sturm.hpp"

namespace narayana {

enum class InterlaceRelation {
  StrictlyInterlaces,
  Interlaces,
  DoesNotInterlace,
  NotBothRealRooted,
};

const char* to_string(InterlaceRelation r);

struct InterlaceReport {
  InterlaceRelation relation = InterlaceRelation::DoesNotInterlace;
  std::string witness;  // failing position when the relation is negative
};

// Decides whether the zeros of g and f alternate as
// ... <= s2 <= r2 <= s1 <= r1 (descending, multiplicity counted), where the
// r's are zeros of f and the s's zeros of g. Inputs with negative leading
// coefficient are negated first. deg g must be deg f or deg f - 1.
InterlaceReport interlaces(const Poly& g, const Poly& f, long cap = -1);

struct LiuWangRootCheck {
  std::string root;
  int phi1_sign = 0;
  int phi2_sign = 0;
  bool ok = false;
};

// Stage-by-stage certificate that the degree-raising recurrence for the
// two-parameter family has nonpositive carrier coefficients at every zero of
// the current member. All stages run and are reported even when an early one
// fails.
struct LiuWangReport {
  long n = 0;
  Rational a, b;
  bool hypotheses_ok = false;  // a > 0 and a + b >= 0
  bool t1_nonzero = false;
  bool degree_ok = false;      // next member gains exactly one degree
  bool f_real_rooted = false;
  std::vector<LiuWangRootCheck> root_checks;
  bool signs_ok = false;
  bool passed = false;
};

LiuWangReport liu_wang_certificate_f(long n, const Rational& a, const Rational& b);

}  // namespace narayana
