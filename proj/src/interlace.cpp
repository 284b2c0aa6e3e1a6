#include "interlace.hpp"

#include <stdexcept>

namespace narayana {

const char* to_string(InterlaceRelation r) {
  switch (r) {
    case InterlaceRelation::StrictlyInterlaces: return "StrictlyInterlaces";
    case InterlaceRelation::Interlaces: return "Interlaces";
    case InterlaceRelation::DoesNotInterlace: return "DoesNotInterlace";
    case InterlaceRelation::NotBothRealRooted: return "NotBothRealRooted";
  }
  return "?";
}

namespace {
// Entry indices repeated by multiplicity, largest root first.
std::vector<size_t> descending_with_multiplicity(const RootIsolation& iso) {
  std::vector<size_t> out;
  for (size_t i = iso.roots.size(); i-- > 0;)
    for (int m = 0; m < iso.roots[i].multiplicity; ++m) out.push_back(i);
  return out;
}
}  // namespace

InterlaceReport interlaces(const Poly& g, const Poly& f, long cap) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("interlaces: zero polynomial");
  const Poly fn = f.leading().sign() < 0 ? -f : f;
  const Poly gn = g.leading().sign() < 0 ? -g : g;

  InterlaceReport rep;
  if (!is_real_rooted(fn)) {
    rep.relation = InterlaceRelation::NotBothRealRooted;
    rep.witness = "f is not real-rooted";
    return rep;
  }
  if (!is_real_rooted(gn)) {
    rep.relation = InterlaceRelation::NotBothRealRooted;
    rep.witness = "g is not real-rooted";
    return rep;
  }
  const int nf = fn.degree();
  const int ng = gn.degree();
  if (ng != nf && ng != nf - 1) {
    rep.relation = InterlaceRelation::DoesNotInterlace;
    rep.witness = "degree mismatch: deg f = " + std::to_string(nf) +
                  ", deg g = " + std::to_string(ng);
    return rep;
  }
  if (ng == 0) {
    // No zeros of g to order against.
    rep.relation = InterlaceRelation::Interlaces;
    return rep;
  }

  RootIsolation isoF = isolate_real_roots(fn);
  RootIsolation isoG = isolate_real_roots(gn);
  const std::vector<size_t> R = descending_with_multiplicity(isoF);
  const std::vector<size_t> S = descending_with_multiplicity(isoG);

  bool strict = true;
  for (size_t i = 0; i < S.size(); ++i) {
    // s_{i+1} <= r_{i+1}
    const int c1 = compare_roots(isoG, S[i], isoF, R[i], cap);
    if (c1 > 0) {
      rep.relation = InterlaceRelation::DoesNotInterlace;
      rep.witness = "zero #" + std::to_string(i + 1) + " of g (" +
                    to_string(isoG.roots[S[i]]) + ") lies right of zero #" +
                    std::to_string(i + 1) + " of f (" +
                    to_string(isoF.roots[R[i]]) + ")";
      return rep;
    }
    if (c1 == 0) strict = false;
    if (i + 1 < R.size()) {
      // r_{i+2} <= s_{i+1}
      const int c2 = compare_roots(isoF, R[i + 1], isoG, S[i], cap);
      if (c2 > 0) {
        rep.relation = InterlaceRelation::DoesNotInterlace;
        rep.witness = "zero #" + std::to_string(i + 2) + " of f (" +
                      to_string(isoF.roots[R[i + 1]]) + ") lies right of zero #" +
                      std::to_string(i + 1) + " of g (" +
                      to_string(isoG.roots[S[i]]) + ")";
        return rep;
      }
      if (c2 == 0) strict = false;
    }
  }
  rep.relation = strict ? InterlaceRelation::StrictlyInterlaces
                        : InterlaceRelation::Interlaces;
  return rep;
}

LiuWangReport liu_wang_certificate_f(long n, const Rational& a, const Rational& b) {
  if (n < 3) throw std::domain_error("liu_wang_certificate_f: n must be >= 3");
  LiuWangReport rep;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.hypotheses_ok = a.sign() > 0 && (a + b).sign() >= 0;
  const Rational t1 = Rational(4 * n - 2) * a + Rational(n) * b;
  const Rational t3 = Rational(4 * n) * a + Rational(n + 1) * b;
  const Rational t4 = Rational(6 * n) * a + Rational(n + 1) * b;
  rep.t1_nonzero = !t1.is_zero();

  const Poly f = f_family(n, a, b);
  if (f.is_zero()) {
    rep.passed = false;
    return rep;
  }
  const Poly next = f_family(n + 1, a, b);
  rep.degree_ok = !next.is_zero() && next.degree() == f.degree() + 1;
  rep.f_real_rooted = is_real_rooted(f);

  if (rep.t1_nonzero && rep.f_real_rooted) {
    // phi1 = -(n-2) T3 (x-1)^2 / ((n+1) T1)
    // phi2 = -2 T4 x (x-1) / (n (n+1) T1)
    const Rational c1 = Rational(-(n - 2)) * t3 / (Rational(n + 1) * t1);
    const Rational c2 = Rational(-2) * t4 / (Rational(n * (n + 1)) * t1);
    const Poly xm1 = Poly::x() - Poly{1};
    const Poly num1 = xm1 * xm1;
    const Poly num2 = Poly::x() * xm1;
    RootIsolation iso = isolate_real_roots(f);
    bool all_ok = true;
    for (size_t i = 0; i < iso.roots.size(); ++i) {
      LiuWangRootCheck rc;
      rc.phi1_sign = sign_at_root(num1, iso, i) * c1.sign();
      rc.phi2_sign = sign_at_root(num2, iso, i) * c2.sign();
      rc.root = to_string(iso.roots[i]);
      rc.ok = rc.phi1_sign <= 0 && rc.phi2_sign <= 0;
      all_ok = all_ok && rc.ok;
      rep.root_checks.push_back(std::move(rc));
    }
    rep.signs_ok = all_ok;
  }
  rep.passed = rep.hypotheses_ok && rep.t1_nonzero && rep.degree_ok &&
               rep.f_real_rooted && rep.signs_ok;
  return rep;
}

}  // namespace narayana
