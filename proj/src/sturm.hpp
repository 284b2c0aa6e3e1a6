#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace narayana {

// Thrown by count_real_roots when a finite endpoint is a root of p; the caller
// is expected to nudge the endpoint.
struct endpoint_is_root_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when interval refinement exhausts its bisection budget without
// reaching a decision. Never used to guess.
struct refinement_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sturm sequence of p: p, p', then negated remainders, each scaled by a
// positive rational to keep entries primitive. Sign data is unchanged by the
// scaling, so variation counts obey Sturm's theorem for arbitrary nonzero p
// (counting distinct roots).
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& entries() const { return chain_; }

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  // Distinct real roots in (lo, hi]; an unset bound means -inf / +inf.
  int count_roots(const std::optional<Rational>& lo,
                  const std::optional<Rational>& hi) const;

 private:
  std::vector<Poly> chain_;
};

// Distinct real roots of p in (lo, hi]. Throws endpoint_is_root_error when a
// finite endpoint is a root.
int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi);

struct RootEntry {
  bool is_point = false;
  Rational point;    // meaningful when is_point
  // Open interval when !is_point. The contained root is strictly inside, but
  // an endpoint may coincide with another (point) root of the polynomial.
  Rational lo, hi;
  int multiplicity = 1;

  Rational position_key() const { return is_point ? point : lo; }
};

std::string to_string(const RootEntry& e);

// Isolation of the real roots of a polynomial: entries are pairwise disjoint,
// sorted ascending, each holding exactly one distinct root of `squarefree`.
// No interval straddles 0, so sign classification is an endpoint test.
struct RootIsolation {
  Poly squarefree;
  std::vector<RootEntry> roots;

  int distinct_count() const { return static_cast<int>(roots.size()); }
  int count_with_multiplicity() const;
};

RootIsolation isolate_real_roots(const Poly& p);

// Halves the isolating interval of roots[idx]; converts the entry to an exact
// point when the midpoint lands on the root. No-op on point entries.
void refine_once(RootIsolation& iso, size_t idx);

// Orders the algebraic numbers held by a.roots[ia] and b.roots[ib].
// Returns -1, 0, +1. Equal roots are certified via gcd of the squarefree
// parts; otherwise intervals are refined until disjoint. cap < 0 picks
// 10*max(deg)+60 bisections; exhausting the cap throws refinement_cap_error.
int compare_roots(RootIsolation& a, size_t ia, RootIsolation& b, size_t ib,
                  long cap = -1);

// True iff every squarefree factor of p has as many distinct real roots as
// its degree (so p's real roots with multiplicity exhaust deg p).
bool is_real_rooted(const Poly& p);

// Sign changes in the coefficient sequence of p, zeros skipped.
int count_sign_changes(const Poly& p);

// Sign of q at the algebraic root held by iso.roots[idx]. Zero is certified
// via gcd(iso.squarefree, q); otherwise the interval is refined until q has
// constant sign on its closure.
int sign_at_root(const Poly& q, RootIsolation& iso, size_t idx, long cap = -1);

}  // namespace narayana
