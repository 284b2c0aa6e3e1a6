#include "poly.hpp"

#include <sstream>
#include <stdexcept>

namespace narayana {

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::x() { return term(1, 1); }

Poly Poly::from_coeffs(std::vector<Rational> c) {
  Poly p;
  p.coeffs_ = std::move(c);
  p.normalize();
  return p;
}

Poly Poly::term(Rational c, int k) {
  if (k < 0) throw std::domain_error("Poly::term: negative exponent");
  if (c.is_zero()) return Poly{};
  Poly p;
  p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

const Rational& Poly::coeff(int k) const {
  static const Rational kZero(0);
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c.is_zero()) return Poly{};
  Poly r = p;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.reserve(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    r.coeffs_.push_back(Rational(static_cast<long>(k)) * coeffs_[k]);
  r.normalize();
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly r{1};
  Poly base = *this;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
  Poly q;
  Poly r = a;
  const int db = b.degree();
  const Rational lb_inv = b.leading().reciprocal();
  if (r.degree() >= db)
    q.coeffs_.assign(static_cast<size_t>(r.degree() - db) + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    Rational c = r.leading() * lb_inv;
    q.coeffs_[static_cast<size_t>(k)] = c;
    // r -= c * x^k * b, updating in place
    for (int i = 0; i <= db; ++i)
      r.coeffs_[static_cast<size_t>(k + i)] -= c * b.coeffs_[static_cast<size_t>(i)];
    r.normalize();
  }
  q.normalize();
  return {std::move(q), std::move(r)};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("Poly::div_exact: inexact division");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().reciprocal() * *this;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class num_gcd(0);
  mpz_class den_lcm(1);
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational scale = Rational(den_lcm) / Rational(num_gcd);  // positive
  return scale.abs() * *this;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Poly u = a.primitive();
  Poly v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = Poly::divrem(u, v).second;
    u = std::move(v);
    v = r.is_zero() ? std::move(r) : r.primitive();
  }
  return u.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return Poly{1};
  Poly g = poly_gcd(p, p.derivative());
  return Poly::div_exact(p, g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over Q.
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) {
    out.emplace_back(p.monic(), 1);
    return out;
  }
  Poly w = Poly::div_exact(p, g);
  Poly y = Poly::div_exact(p.derivative(), g);
  Poly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly f = poly_gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, i);
    w = Poly::div_exact(w, f);
    y = Poly::div_exact(z, f);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::string to_string(const Poly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(k);
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (a == Rational(1));
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace narayana
