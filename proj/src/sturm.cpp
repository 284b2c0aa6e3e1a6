#include "sturm.hpp"

#include <algorithm>

namespace narayana {

namespace {
int variations_of(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
  chain_.push_back(p.degree() > 0 ? p.primitive() : p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative().primitive());
  while (chain_.back().degree() > 0) {
    Poly r = Poly::divrem(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive());
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.eval(x).sign());
  return variations_of(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) {
    int s = q.leading().sign();
    if (q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations_of(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.leading().sign());
  return variations_of(signs);
}

int SturmChain::count_roots(const std::optional<Rational>& lo,
                            const std::optional<Rational>& hi) const {
  const int wlo = lo ? variations_at(*lo) : variations_at_neg_inf();
  const int whi = hi ? variations_at(*hi) : variations_at_pos_inf();
  return wlo - whi;
}

int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (lo && p.eval(*lo).is_zero())
    throw endpoint_is_root_error("count_real_roots: lower endpoint is a root; nudge it");
  if (hi && p.eval(*hi).is_zero())
    throw endpoint_is_root_error("count_real_roots: upper endpoint is a root; nudge it");
  return SturmChain(p).count_roots(lo, hi);
}

std::string to_string(const RootEntry& e) {
  std::string s = e.is_point ? "point " + e.point.str()
                             : "(" + e.lo.str() + ", " + e.hi.str() + ")";
  if (e.multiplicity > 1) s += " multiplicity " + std::to_string(e.multiplicity);
  return s;
}

int RootIsolation::count_with_multiplicity() const {
  int n = 0;
  for (const auto& e : roots) n += e.multiplicity;
  return n;
}

RootIsolation isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  RootIsolation iso;
  if (p.degree() == 0) {
    iso.squarefree = Poly{1};
    return iso;
  }
  const auto factors = squarefree_decomposition(p);
  iso.squarefree = squarefree_part(p);

  std::vector<RootEntry> out;
  Poly q = iso.squarefree;
  if (q.coeff(0).is_zero()) {
    RootEntry e;
    e.is_point = true;
    e.point = Rational(0);
    out.push_back(e);
    q = Poly::div_exact(q, Poly::x());
  }
  if (q.degree() >= 1) {
    // Cauchy bound: all roots lie strictly inside (-B, B).
    Rational maxabs(0);
    for (int i = 0; i < q.degree(); ++i) maxabs = std::max(maxabs, q.coeff(i).abs());
    const Rational B = Rational(1) + maxabs / q.leading().abs();
    SturmChain chain(q);
    struct Seg {
      Rational lo, hi;
      int cnt;
    };
    std::vector<Seg> stack;
    auto push_seg = [&stack](Rational lo, Rational hi, int cnt) {
      if (cnt > 0) stack.push_back({std::move(lo), std::move(hi), cnt});
    };
    // Cutting at 0 first keeps every interval on one side of the origin.
    push_seg(-B, Rational(0), chain.count_roots(-B, Rational(0)));
    push_seg(Rational(0), B, chain.count_roots(Rational(0), B));
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      if (s.cnt == 1) {
        RootEntry e;
        e.lo = s.lo;
        e.hi = s.hi;
        out.push_back(e);
        continue;
      }
      const Rational mid = (s.lo + s.hi) / Rational(2);
      if (q.eval(mid).is_zero()) {
        RootEntry e;
        e.is_point = true;
        e.point = mid;
        out.push_back(e);
        // Deflate so the cut point is no longer a root; counts of segments
        // elsewhere are unaffected.
        q = Poly::div_exact(q, Poly::x() - Poly{mid});
        chain = SturmChain(q);
        push_seg(s.lo, mid, chain.count_roots(s.lo, mid));
        push_seg(mid, s.hi, chain.count_roots(mid, s.hi));
      } else {
        const int left = chain.count_roots(s.lo, mid);
        push_seg(s.lo, mid, left);
        push_seg(mid, s.hi, s.cnt - left);
      }
    }
  }
  // Each entry holds one root of exactly one squarefree factor; that factor's
  // exponent is the multiplicity. An interval endpoint can be a previously
  // recorded root of the same factor, so a zero endpoint sign falls back to
  // an exact count over the open interval.
  for (auto& e : out) {
    for (const auto& [f, m] : factors) {
      bool match;
      if (e.is_point) {
        match = f.eval(e.point).is_zero();
      } else {
        const int slo = f.eval(e.lo).sign();
        const int shi = f.eval(e.hi).sign();
        if (slo != 0 && shi != 0) {
          match = slo * shi < 0;
        } else {
          int cnt = SturmChain(f).count_roots(e.lo, e.hi);
          if (shi == 0) --cnt;
          match = cnt == 1;
        }
      }
      if (match) {
        e.multiplicity = m;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RootEntry& x, const RootEntry& y) {
    const Rational kx = x.position_key();
    const Rational ky = y.position_key();
    if (kx != ky) return kx < ky;
    return x.is_point && !y.is_point;
  });
  iso.roots = std::move(out);
  return iso;
}

void refine_once(RootIsolation& iso, size_t idx) {
  RootEntry& e = iso.roots.at(idx);
  if (e.is_point) return;
  const Rational mid = (e.lo + e.hi) / Rational(2);
  const Rational vm = iso.squarefree.eval(mid);
  if (vm.is_zero()) {
    e.is_point = true;
    e.point = mid;
    return;
  }
  // Endpoints can be other roots of the polynomial (zero sign), in which case
  // the side is decided from the opposite endpoint or, if both vanish, from
  // an exact count over (lo, mid].
  const int smid = vm.sign();
  const int slo = iso.squarefree.eval(e.lo).sign();
  if (slo != 0) {
    if (slo != smid)
      e.hi = mid;
    else
      e.lo = mid;
    return;
  }
  const int shi = iso.squarefree.eval(e.hi).sign();
  if (shi != 0) {
    if (smid != shi)
      e.lo = mid;
    else
      e.hi = mid;
    return;
  }
  if (SturmChain(iso.squarefree).count_roots(e.lo, mid) >= 1)
    e.hi = mid;
  else
    e.lo = mid;
}

namespace {
// Position of point c relative to the single root inside interval entry e of
// iso: -1 when c is left of the root, 0 equal, +1 right. c lies strictly
// inside (e.lo, e.hi).
int point_vs_interval_root(const Rational& c, const RootIsolation& iso,
                           const RootEntry& e) {
  const int vc = iso.squarefree.eval(c).sign();
  if (vc == 0) return 0;
  // Sign change over (lo, c) means the root sits left of c. Endpoints can be
  // other roots of the polynomial (sign 0); fall back to the far endpoint or
  // to an exact count.
  const int s_lo = iso.squarefree.eval(e.lo).sign();
  if (s_lo != 0) return (s_lo != vc) ? 1 : -1;
  const int s_hi = iso.squarefree.eval(e.hi).sign();
  if (s_hi != 0) return (vc != s_hi) ? -1 : 1;
  return SturmChain(iso.squarefree).count_roots(e.lo, c) >= 1 ? 1 : -1;
}
}  // namespace

int compare_roots(RootIsolation& a, size_t ia, RootIsolation& b, size_t ib,
                  long cap) {
  if (&a == &b) {
    if (ia == ib) return 0;
    return ia < ib ? -1 : 1;
  }
  long budget = cap >= 0
                    ? cap
                    : 10 * std::max(a.squarefree.degree(), b.squarefree.degree()) + 60;
  bool gcd_checked = false;
  for (;;) {
    const RootEntry ea = a.roots.at(ia);
    const RootEntry eb = b.roots.at(ib);
    if (ea.is_point && eb.is_point) {
      if (ea.point < eb.point) return -1;
      return ea.point == eb.point ? 0 : 1;
    }
    if (ea.is_point) {
      if (ea.point <= eb.lo) return -1;
      if (ea.point >= eb.hi) return 1;
      return point_vs_interval_root(ea.point, b, eb);
    }
    if (eb.is_point) {
      if (eb.point <= ea.lo) return 1;
      if (eb.point >= ea.hi) return -1;
      return -point_vs_interval_root(eb.point, a, ea);
    }
    if (ea.hi <= eb.lo) return -1;
    if (eb.hi <= ea.lo) return 1;
    if (!gcd_checked) {
      gcd_checked = true;
      const Poly g = poly_gcd(a.squarefree, b.squarefree);
      if (g.degree() > 0) {
        const Rational ilo = std::max(ea.lo, eb.lo);
        const Rational ihi = std::min(ea.hi, eb.hi);
        // A common root strictly inside the overlap must be the root of both
        // entries; a root of g sitting exactly on ihi is not.
        if (ilo < ihi) {
          int cnt = SturmChain(g).count_roots(ilo, ihi);
          if (cnt > 0 && g.eval(ihi).is_zero()) --cnt;
          if (cnt > 0) return 0;
        }
      }
    }
    if (budget-- <= 0)
      throw refinement_cap_error("compare_roots: refinement cap exceeded");
    if (ea.hi - ea.lo >= eb.hi - eb.lo)
      refine_once(a, ia);
    else
      refine_once(b, ib);
  }
}

bool is_real_rooted(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
  if (p.degree() == 0) return true;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    if (SturmChain(f).count_roots(std::nullopt, std::nullopt) != f.degree())
      return false;
  }
  return true;
}

int count_sign_changes(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("count_sign_changes: zero polynomial");
  int v = 0;
  int prev = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    const int s = p.coeff(k).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int sign_at_root(const Poly& q, RootIsolation& iso, size_t idx, long cap) {
  if (q.is_zero()) return 0;
  {
    const RootEntry& e = iso.roots.at(idx);
    if (e.is_point) return q.eval(e.point).sign();
  }
  if (q.degree() == 0) return q.leading().sign();
  const Poly qs = squarefree_part(q);
  const Poly g = poly_gcd(iso.squarefree, qs);
  if (g.degree() > 0) {
    const RootEntry& e = iso.roots.at(idx);
    int cnt = SturmChain(g).count_roots(e.lo, e.hi);
    if (cnt > 0 && g.eval(e.hi).is_zero()) --cnt;
    if (cnt > 0) return 0;
  }
  long budget =
      cap >= 0 ? cap : 10 * std::max(iso.squarefree.degree(), qs.degree()) + 60;
  const SturmChain qc(qs);
  for (;;) {
    const RootEntry& e = iso.roots.at(idx);
    if (e.is_point) return q.eval(e.point).sign();
    int cnt = qc.count_roots(e.lo, e.hi);
    if (cnt > 0 && qs.eval(e.hi).is_zero()) --cnt;
    if (cnt == 0) {
      // q is root-free on the open interval, so its sign at the root matches
      // its sign at any interior point.
      return q.eval((e.lo + e.hi) / Rational(2)).sign();
    }
    if (budget-- <= 0)
      throw refinement_cap_error("sign_at_root: refinement cap exceeded");
    refine_once(iso, idx);
  }
}

}  // namespace narayana
