#include "suite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "families.hpp"
#include "interlace.hpp"
#include "logconcavity.hpp"
#include "parallel.hpp"
#include "recurrence.hpp"
#include "sturm.hpp"

namespace narayana {

namespace {

CriterionResult make_result(int id, const char* name, bool probe,
                            const std::vector<std::string>& failures,
                            const std::string& ok_detail) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.conjecture_probe = probe;
  std::vector<std::string> bad;
  for (const auto& f : failures)
    if (!f.empty()) bad.push_back(f);
  r.passed = bad.empty();
  if (r.passed) {
    r.detail = ok_detail;
    return r;
  }
  std::ostringstream os;
  os << bad.size() << " failure(s): " << bad[0];
  for (size_t i = 1; i < bad.size() && i < 3; ++i) os << "; " << bad[i];
  if (bad.size() > 3) os << "; ...";
  r.detail = os.str();
  return r;
}

bool relation_positive(InterlaceRelation r) {
  return r == InterlaceRelation::Interlaces ||
         r == InterlaceRelation::StrictlyInterlaces;
}

// Entries of iso holding negative roots, ascending. No interval straddles 0.
std::vector<size_t> negative_entries(const RootIsolation& iso) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < iso.roots.size(); ++i) {
    const RootEntry& e = iso.roots[i];
    const bool neg = e.is_point ? e.point.sign() < 0 : e.hi.sign() <= 0;
    if (neg) idx.push_back(i);
  }
  return idx;
}

bool all_coeffs_nonneg(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (c.sign() < 0) return false;
  return true;
}

// Deterministic small-range draw; mt19937_64 output is portable, the
// distribution adapters are not.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

CriterionResult criterion1(const SuiteBounds& b) {
  std::vector<long> ns;
  for (long n = 2; n <= b.f_rec_max_n; ++n) ns.push_back(n);
  std::vector<std::string> fail(ns.size() + 1);

  parallel_for(ns.size(), b.jobs, [&](size_t i) {
    if (!check_f_recurrence(ns[i]).verified)
      fail[i] = "identity fails at n=" + std::to_string(ns[i]);
  });

  // Frozen hand expansion: the x^1 coefficient of 3*T1*F_3 at n=2.
  BivarPoly expected;
  expected.add_term(Rational(162), 2, 0);
  expected.add_term(Rational(108), 1, 1);
  expected.add_term(Rational(18), 0, 2);
  const BivarPoly scalar = Rational(3) * t_coefficients(2).t1;
  const BivarPoly got = scalar * f_family_symbolic(3).coeff(1);
  if (got != expected)
    fail.back() = "hand-expanded n=2 coefficient mismatch: got " + to_string(got);

  return make_result(1, "two-parameter recurrence, symbolic in (alpha,beta)",
                     false, fail,
                     "verified for n=2.." + std::to_string(b.f_rec_max_n) +
                         " plus the hand-expanded n=2 coefficient");
}

CriterionResult criterion2(const SuiteBounds& b) {
  std::vector<std::pair<long, long>> grid;
  for (long t = 0; t <= b.rect_rec_max_t; ++t)
    for (long n = 1; n <= b.rect_rec_max_n; ++n) grid.emplace_back(t, n);
  std::vector<std::string> fail(2 * grid.size());

  parallel_for(2 * grid.size(), b.jobs, [&](size_t i) {
    const bool ov = i < grid.size();
    const auto [t, n] = grid[i % grid.size()];
    const RecurrenceCheckResult r =
        ov ? check_overline_recurrence(t, n) : check_underline_recurrence(t, n);
    if (!r.verified)
      fail[i] = r.identity + " identity fails at t=" + std::to_string(t) +
                ", n=" + std::to_string(n);
  });

  return make_result(2, "shifted rectangular recurrences", false, fail,
                     "both identities verified for t=0.." +
                         std::to_string(b.rect_rec_max_t) + ", n=1.." +
                         std::to_string(b.rect_rec_max_n));
}

CriterionResult criterion3(const SuiteBounds&) {
  std::vector<std::string> fail(2);
  if (is_real_rooted(f_family(4, Rational(1), Rational::parse("-19/10"))))
    fail[0] = "f(4; 1, -19/10) reported real-rooted";
  if (!is_real_rooted(f_family(4, Rational(1), Rational(-1))))
    fail[1] = "f(4; 1, -1) reported not real-rooted";
  return make_result(3, "deformation counterexample at n=4", false, fail,
                     "f(4; 1, -19/10) has complex zeros, f(4; 1, -1) is "
                     "real-rooted");
}

CriterionResult criterion4(const SuiteBounds& b) {
  std::vector<std::pair<Rational, Rational>> ab;
  const Rational as[3] = {Rational(1), Rational(2), Rational(1) / Rational(2)};
  for (const Rational& a : as) {
    ab.emplace_back(a, -a);
    ab.emplace_back(a, -(a / Rational(2)));
    ab.emplace_back(a, Rational(0));
    ab.emplace_back(a, Rational(1));
  }

  struct Task {
    Rational a, bb;
    long n;
    bool lw;  // certificate stage instead of root check
  };
  std::vector<Task> tasks;
  for (const auto& [a, bb] : ab) {
    for (long n = 2; n <= b.grid_max_n; ++n) tasks.push_back({a, bb, n, false});
    for (long n = 3; n <= b.lw_max_n; ++n) tasks.push_back({a, bb, n, true});
  }
  std::vector<std::string> fail(tasks.size());

  parallel_for(tasks.size(), b.jobs, [&](size_t i) {
    const Task& tk = tasks[i];
    const std::string where = "(a=" + tk.a.str() + ", b=" + tk.bb.str() +
                              ", n=" + std::to_string(tk.n) + ")";
    if (tk.lw) {
      if (!liu_wang_certificate_f(tk.n, tk.a, tk.bb).passed)
        fail[i] = "certificate fails at " + where;
      return;
    }
    const Poly cur = f_family(tk.n, tk.a, tk.bb);
    if (!is_real_rooted(cur)) {
      fail[i] = "not real-rooted at " + where;
      return;
    }
    const InterlaceReport rel =
        interlaces(cur, f_family(tk.n + 1, tk.a, tk.bb));
    if (!relation_positive(rel.relation))
      fail[i] = "no interlacing at " + where + ": " + rel.witness;
  });

  return make_result(4, "deformation family real-rooted with interlaced chain",
                     false, fail,
                     "12-point (a,b) grid: real-rooted and chained for n=2.." +
                         std::to_string(b.grid_max_n) + ", certificate for n=3.." +
                         std::to_string(b.lw_max_n));
}

CriterionResult criterion5(const SuiteBounds& b) {
  const long side = b.rect_max + 1;
  std::vector<std::string> fail(static_cast<size_t>(side * side));
  parallel_for(fail.size(), b.jobs, [&](size_t i) {
    const long n = static_cast<long>(i) / side;
    const long m = static_cast<long>(i) % side;
    if (!is_real_rooted(narayana_rect(n, m)))
      fail[i] = "rect(" + std::to_string(n) + "," + std::to_string(m) +
                ") not real-rooted";
  });
  return make_result(5, "rectangular family real-rooted", false, fail,
                     std::to_string(side * side) +
                         " instances decided exactly, all real-rooted");
}

// Strict alternation of the negative roots of consecutive overline members:
// descending, s_{k} > r_k > s_{k+1} with r from member n and s from n+1.
std::string overline_chain_check(long t, long n) {
  RootIsolation cur = isolate_real_roots(overline_n(t, n));
  RootIsolation nxt = isolate_real_roots(overline_n(t, n + 1));
  std::vector<size_t> rs = negative_entries(cur);
  std::vector<size_t> ss = negative_entries(nxt);
  const std::string where =
      " (t=" + std::to_string(t) + ", n=" + std::to_string(n) + ")";
  if (static_cast<long>(rs.size()) != n ||
      static_cast<long>(ss.size()) != n + 1)
    return "negative root counts off" + where;
  for (size_t i : rs)
    if (cur.roots[i].multiplicity != 1) return "repeated negative root" + where;
  for (size_t i : ss)
    if (nxt.roots[i].multiplicity != 1) return "repeated negative root" + where;
  std::reverse(rs.begin(), rs.end());  // descending: closest to 0 first
  std::reverse(ss.begin(), ss.end());
  for (long k = 0; k < n; ++k) {
    if (compare_roots(nxt, ss[k], cur, rs[k]) != 1)
      return "s_" + std::to_string(k + 1) + " <= r_" + std::to_string(k + 1) +
             where;
    if (compare_roots(cur, rs[k], nxt, ss[k + 1]) != 1)
      return "r_" + std::to_string(k + 1) + " <= s_" + std::to_string(k + 2) +
             where;
  }
  return "";
}

CriterionResult criterion6(const SuiteBounds& b) {
  struct Task {
    long t, n;
    bool chain;
  };
  std::vector<Task> tasks;
  for (long t = 2; t <= b.ov_max_t; ++t)
    for (long n = 0; n <= b.ov_max_n; ++n) tasks.push_back({t, n, false});
  for (long t = 2; t <= std::min<long>(3, b.ov_max_t); ++t)
    for (long n = 1; n <= b.ov_chain_max_n; ++n) tasks.push_back({t, n, true});
  std::vector<std::string> fail(tasks.size());

  parallel_for(tasks.size(), b.jobs, [&](size_t i) {
    const Task& tk = tasks[i];
    if (tk.chain) {
      fail[i] = overline_chain_check(tk.t, tk.n);
      return;
    }
    const std::string where =
        " (t=" + std::to_string(tk.t) + ", n=" + std::to_string(tk.n) + ")";
    const Poly p = overline_n(tk.t, tk.n);
    if (p.degree() != static_cast<int>(tk.n) + 1) {
      fail[i] = "degree != n+1" + where;
      return;
    }
    if (count_sign_changes(p) != 1) {
      fail[i] = "coefficient sign changes != 1" + where;
      return;
    }
    const RootIsolation iso = isolate_real_roots(p);
    if (iso.count_with_multiplicity() != p.degree()) {
      fail[i] = "not real-rooted" + where;
      return;
    }
    const long neg = static_cast<long>(negative_entries(iso).size());
    const long pos = static_cast<long>(iso.roots.size()) - neg;
    if (pos != 1 || neg != tk.n)
      fail[i] = "root layout is " + std::to_string(pos) + " positive / " +
                std::to_string(neg) + " negative" + where;
  });

  return make_result(
      6, "overline root layout and strict negative chain", false, fail,
      "one positive and n negative roots for t=2.." + std::to_string(b.ov_max_t) +
          ", n=0.." + std::to_string(b.ov_max_n) +
          "; strict negative alternation for t=2,3 up to n=" +
          std::to_string(b.ov_chain_max_n));
}

CriterionResult criterion7(const SuiteBounds& b) {
  std::vector<std::pair<long, long>> grid;
  for (long t = 0; t <= b.un_max_t; ++t)
    for (long n = 0; n <= b.un_max_n; ++n) grid.emplace_back(t, n);
  std::vector<std::string> fail(grid.size());
  parallel_for(grid.size(), b.jobs, [&](size_t i) {
    const auto [t, n] = grid[i];
    const InterlaceReport rel =
        interlaces(underline_n(t, n), underline_n(t, n + 1));
    if (!relation_positive(rel.relation))
      fail[i] = "underline(t=" + std::to_string(t) + ") members n=" +
                std::to_string(n) + "," + std::to_string(n + 1) +
                " do not interlace: " + rel.witness;
  });
  return make_result(7, "underline consecutive-member interlacing", false, fail,
                     "chain holds for t=0.." + std::to_string(b.un_max_t) +
                         ", n=0.." + std::to_string(b.un_max_n));
}

CriterionResult criterion8(const SuiteBounds& b) {
  std::vector<std::string> fail;
  for (long n = 0; n <= b.ident_max_n; ++n) {
    const Poly a = narayana_a(n);
    if (narayana_rect(n, n) != a)
      fail.push_back("rect(n,n) != A at n=" + std::to_string(n));
    if (narayana_rect(n + 1, n) != a)
      fail.push_back("rect(n+1,n) != A at n=" + std::to_string(n));
  }
  for (long n = 2; n <= b.ident_max_n; ++n) {
    if (f_family(n, Rational(1), Rational(-1)) != narayana_d(n))
      fail.push_back("f(n;1,-1) != D at n=" + std::to_string(n));
  }
  return make_result(8, "family identification identities", false, fail,
                     "square and off-square reductions plus the type-D "
                     "specialization agree for n<=" +
                         std::to_string(b.ident_max_n));
}

CriterionResult criterion9(const SuiteBounds& b) {
  std::vector<std::string> fail(
      static_cast<size_t>(b.bm_dual_max_n + 1 + b.bm_fold_max_n + 1));
  parallel_for(static_cast<size_t>(b.bm_dual_max_n + 1), b.jobs, [&](size_t i) {
    const long n = static_cast<long>(i);
    const Poly p = boros_moll_poly(n);
    bool ok = p.degree() == static_cast<int>(n);
    for (long k = 0; ok && k <= n; ++k)
      ok = p.coeff(static_cast<int>(k)) == boros_moll_coeff(n, k);
    if (!ok) fail[i] = "coefficient formulas disagree at n=" + std::to_string(n);
  });
  parallel_for(static_cast<size_t>(b.bm_fold_max_n + 1), b.jobs, [&](size_t i) {
    const long n = static_cast<long>(i);
    if (!k_fold_log_concave(boros_moll_poly(n), 2).all_folds_passed())
      fail[static_cast<size_t>(b.bm_dual_max_n + 1) + i] =
          "2-fold log-concavity fails at n=" + std::to_string(n);
  });
  return make_result(9, "quartic-integral coefficients: dual formulas and "
                        "2-fold log-concavity",
                     false, fail,
                     "formulas agree for n<=" + std::to_string(b.bm_dual_max_n) +
                         "; 2-fold check passes for n<=" +
                         std::to_string(b.bm_fold_max_n));
}

CriterionResult criterion10(const SuiteBounds& b) {
  std::mt19937_64 rng(b.seed);
  std::vector<Poly> samples;
  samples.reserve(static_cast<size_t>(b.brandon_samples));
  for (int s = 0; s < b.brandon_samples; ++s) {
    const long d = draw(rng, 1, 10);
    Poly p(1);
    for (long i = 0; i < d; ++i) {
      const Rational r(draw(rng, 1, 20), draw(rng, 1, 20));
      p *= Poly::from_coeffs({r, Rational(1)});
    }
    samples.push_back(std::move(p));
  }
  std::vector<std::string> fail(samples.size());
  parallel_for(samples.size(), b.jobs, [&](size_t i) {
    const Poly lp = l_operator(samples[i]);
    if (!all_coeffs_nonneg(lp))
      fail[i] = "negative coefficient in image of sample " + std::to_string(i);
    else if (!is_real_rooted(lp))
      fail[i] = "image of sample " + std::to_string(i) + " not real-rooted";
  });
  return make_result(10, "square-minus-neighbor-product operator preserves "
                         "real-rootedness",
                     false, fail,
                     std::to_string(b.brandon_samples) +
                         " random real-rooted inputs, every image real-rooted "
                         "with nonnegative coefficients");
}

CriterionResult criterion11(const SuiteBounds& b) {
  std::vector<std::string> fail(
      static_cast<size_t>(b.q_probe_max_n + b.q_dec_max_n));
  parallel_for(static_cast<size_t>(b.q_probe_max_n), b.jobs, [&](size_t i) {
    const long n = static_cast<long>(i) + 1;
    if (!is_real_rooted(q_poly(n)))
      fail[i] = "Q_" + std::to_string(n) + " not real-rooted";
  });
  parallel_for(static_cast<size_t>(b.q_dec_max_n), b.jobs, [&](size_t i) {
    const long n = static_cast<long>(i) + 1;
    const QDecompositionReport q = q_decomposition_check(n);
    if (!q.proportional || !q.ratio_is_pow_16n)
      fail[static_cast<size_t>(b.q_probe_max_n) + i] =
          "decomposition ratio at n=" + std::to_string(n) + " is " +
          (q.proportional ? q.ratio.str() : "not a scalar");
  });
  return make_result(11, "iterated-operator real-rootedness probe", true, fail,
                     "Q_n real-rooted for n<=" + std::to_string(b.q_probe_max_n) +
                         "; decomposition ratio is 2^(4n) for n<=" +
                         std::to_string(b.q_dec_max_n));
}

struct SturmSample {
  Poly p;
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
  bool has_complex = false;
};

SturmSample random_sturm_sample(std::mt19937_64& rng) {
  SturmSample s;
  const long k = draw(rng, 1, 6);
  std::set<Rational> seen;
  while (static_cast<long>(s.roots.size()) < k) {
    Rational r;
    if (draw(rng, 0, 6) == 0) {
      r = Rational(0);
    } else {
      r = Rational(draw(rng, 1, 20), draw(rng, 1, 20));
      if (draw(rng, 0, 1) == 0) r = -r;
    }
    if (!seen.insert(r).second) continue;
    s.roots.emplace_back(r, static_cast<int>(draw(rng, 1, 3)));
  }
  Poly p(Rational(draw(rng, 1, 5), draw(rng, 1, 3)));
  if (draw(rng, 0, 1) == 0) p = -p;
  for (const auto& [r, m] : s.roots)
    p *= Poly::from_coeffs({-r, Rational(1)}).pow(static_cast<unsigned>(m));
  if (draw(rng, 0, 2) == 0) {
    // (x-u)^2 + v with v > 0: no real zeros.
    const Rational u(draw(rng, 1, 9), draw(rng, 1, 4));
    const Rational v(draw(rng, 1, 9), draw(rng, 1, 4));
    const Poly quad = Poly::from_coeffs(
        {Rational(u * u + v), -(Rational(2) * u), Rational(1)});
    p *= quad.pow(static_cast<unsigned>(draw(rng, 1, 2)));
    s.has_complex = true;
  }
  s.p = std::move(p);
  return s;
}

std::string check_sturm_sample(const SturmSample& s, size_t idx) {
  const std::string where = " (sample " + std::to_string(idx) + ")";
  const long k = static_cast<long>(s.roots.size());
  if (count_real_roots(s.p, std::nullopt, std::nullopt) != k)
    return "distinct-root count off" + where;
  if (is_real_rooted(s.p) == s.has_complex)
    return "real-rootedness verdict off" + where;
  const RootIsolation iso = isolate_real_roots(s.p);
  if (iso.distinct_count() != k) return "isolation count off" + where;
  long with_mult = 0;
  for (const auto& [r, m] : s.roots) with_mult += m;
  if (iso.count_with_multiplicity() != with_mult)
    return "multiplicity total off" + where;
  std::vector<bool> used(iso.roots.size(), false);
  for (const auto& [r, m] : s.roots) {
    bool found = false;
    for (size_t i = 0; i < iso.roots.size() && !found; ++i) {
      const RootEntry& e = iso.roots[i];
      const bool holds = e.is_point ? e.point == r : (e.lo < r && r < e.hi);
      if (!holds) continue;
      if (used[i]) return "two roots share an entry" + where;
      if (e.multiplicity != m) return "multiplicity mismatch" + where;
      used[i] = true;
      found = true;
    }
    if (!found) return "constructed root " + r.str() + " not isolated" + where;
  }
  return "";
}

CriterionResult criterion12(const SuiteBounds& b) {
  std::mt19937_64 rng(b.seed + 1);
  std::vector<SturmSample> samples;
  samples.reserve(static_cast<size_t>(b.sturm_samples));
  for (int i = 0; i < b.sturm_samples; ++i)
    samples.push_back(random_sturm_sample(rng));
  std::vector<std::string> fail(samples.size());
  parallel_for(samples.size(), b.jobs,
               [&](size_t i) { fail[i] = check_sturm_sample(samples[i], i); });
  return make_result(12, "root isolation against constructed factorizations",
                     false, fail,
                     std::to_string(b.sturm_samples) +
                         " random factored polynomials: counts, intervals and "
                         "multiplicities all match");
}

}  // namespace

SuiteBounds SuiteBounds::quick(long cap) {
  SuiteBounds b;
  const long c = std::max<long>(cap, 2);
  b.f_rec_max_n = std::min(b.f_rec_max_n, c);
  b.rect_rec_max_t = std::min(b.rect_rec_max_t, c);
  b.rect_rec_max_n = std::min(b.rect_rec_max_n, c);
  b.grid_max_n = std::min(b.grid_max_n, c);
  b.lw_max_n = std::min(b.lw_max_n, std::max<long>(3, c));
  b.rect_max = std::min(b.rect_max, c);
  b.ov_max_t = std::min(b.ov_max_t, std::max<long>(2, c));
  b.ov_max_n = std::min(b.ov_max_n, c);
  b.ov_chain_max_n = std::min(b.ov_chain_max_n, c);
  b.un_max_t = std::min(b.un_max_t, c);
  b.un_max_n = std::min(b.un_max_n, c);
  b.ident_max_n = std::min(b.ident_max_n, c);
  b.bm_dual_max_n = std::min(b.bm_dual_max_n, c);
  b.bm_fold_max_n = std::min(b.bm_fold_max_n, c);
  b.brandon_samples = static_cast<int>(std::min<long>(b.brandon_samples, c * 10));
  b.q_probe_max_n = std::min(b.q_probe_max_n, c);
  b.q_dec_max_n = std::min(b.q_dec_max_n, std::min<long>(c, 5));
  b.sturm_samples = static_cast<int>(std::min<long>(b.sturm_samples, c * 20));
  return b;
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteBounds& bounds) {
  std::vector<CriterionResult> out;
  out.push_back(criterion1(bounds));
  out.push_back(criterion2(bounds));
  out.push_back(criterion3(bounds));
  out.push_back(criterion4(bounds));
  out.push_back(criterion5(bounds));
  out.push_back(criterion6(bounds));
  out.push_back(criterion7(bounds));
  out.push_back(criterion8(bounds));
  out.push_back(criterion9(bounds));
  out.push_back(criterion10(bounds));
  out.push_back(criterion11(bounds));
  out.push_back(criterion12(bounds));
  return out;
}

}  // namespace narayana
