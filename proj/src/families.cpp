#include "families.hpp"

#include <stdexcept>

namespace narayana {

namespace {
void require_nonneg(long v, const char* what) {
  if (v < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
}
}  // namespace

Poly narayana_a(long n) {
  require_nonneg(n, "narayana_a: n");
  std::vector<Rational> cs;
  cs.reserve(static_cast<size_t>(n) + 1);
  const Rational inv(1, n + 1);
  for (long k = 0; k <= n; ++k)
    cs.push_back(inv * Rational(mpz_class(binomial(n + 1, k) * binomial(n + 1, k + 1))));
  return Poly::from_coeffs(std::move(cs));
}

Poly narayana_b(long n) {
  require_nonneg(n, "narayana_b: n");
  std::vector<Rational> cs;
  cs.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    mpz_class c = binomial(n, k);
    cs.push_back(Rational(mpz_class(c * c)));
  }
  return Poly::from_coeffs(std::move(cs));
}

Poly narayana_d(long n) {
  if (n < 2) throw std::domain_error("narayana_d: n must be >= 2");
  return narayana_b(n) - Rational(n) * (Poly::x() * narayana_a(n - 2));
}

Poly narayana_rect(long n, long m) {
  require_nonneg(n, "narayana_rect: n");
  require_nonneg(m, "narayana_rect: m");
  std::vector<Rational> cs;
  cs.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    cs.push_back(Rational(mpz_class(binomial(n, k) * binomial(m, k) -
                                    binomial(n, k + 1) * binomial(m, k - 1))));
  return Poly::from_coeffs(std::move(cs));
}

Poly overline_n(long t, long n) {
  require_nonneg(t, "overline_n: t");
  require_nonneg(n, "overline_n: n");
  return narayana_rect(n + t, n);
}

Poly underline_n(long t, long n) {
  require_nonneg(t, "underline_n: t");
  require_nonneg(n, "underline_n: n");
  return narayana_rect(n, n + t);
}

Poly f_family(long n, const Rational& a, const Rational& b) {
  if (n < 2) throw std::domain_error("f_family: n must be >= 2");
  return a * narayana_b(n) + (b * Rational(n)) * (Poly::x() * narayana_a(n - 2));
}

ParamPoly f_family_symbolic(long n) {
  if (n < 2) throw std::domain_error("f_family_symbolic: n must be >= 2");
  std::vector<BivarPoly> cs;
  cs.reserve(static_cast<size_t>(n) + 1);
  const Rational ratio(n, n - 1);
  for (long k = 0; k <= n; ++k) {
    mpz_class cb = binomial(n, k);
    BivarPoly c = BivarPoly::monomial(Rational(mpz_class(cb * cb)), 1, 0);
    c += BivarPoly::monomial(
        ratio * Rational(mpz_class(binomial(n - 1, k - 1) * binomial(n - 1, k))), 0, 1);
    cs.push_back(std::move(c));
  }
  return ParamPoly(std::move(cs));
}

std::optional<FamilyId> parse_family(const std::string& name) {
  if (name == "A") return FamilyId::A;
  if (name == "B") return FamilyId::B;
  if (name == "D") return FamilyId::D;
  if (name == "rect") return FamilyId::Rect;
  if (name == "overline") return FamilyId::Overline;
  if (name == "underline") return FamilyId::Underline;
  if (name == "F") return FamilyId::F;
  if (name == "bm") return FamilyId::BM;
  if (name == "Q") return FamilyId::Q;
  return std::nullopt;
}

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::A: return "A";
    case FamilyId::B: return "B";
    case FamilyId::D: return "D";
    case FamilyId::Rect: return "rect";
    case FamilyId::Overline: return "overline";
    case FamilyId::Underline: return "underline";
    case FamilyId::F: return "F";
    case FamilyId::BM: return "bm";
    case FamilyId::Q: return "Q";
  }
  return "?";
}

}  // namespace narayana
