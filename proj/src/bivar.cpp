#include "bivar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace narayana {

BivarPoly BivarPoly::monomial(Rational c, int i, int j) {
  if (i < 0 || j < 0) throw std::domain_error("BivarPoly::monomial: negative exponent");
  BivarPoly p;
  p.add_term(std::move(c), i, j);
  return p;
}

void BivarPoly::add_term(Rational c, int i, int j) {
  if (c.is_zero()) return;
  auto key = Key{i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find(Key{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BivarPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

Rational BivarPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("BivarPoly: not a constant");
  return terms_.begin()->second;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

BivarPoly operator*(const Rational& c, const BivarPoly& p) {
  BivarPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : p.terms_) r.terms_.emplace(k, c * v);
  return r;
}

Rational BivarPoly::eval(const Rational& alpha, const Rational& beta) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k.first; ++i) t *= alpha;
    for (int j = 0; j < k.second; ++j) t *= beta;
    acc += t;
  }
  return acc;
}

std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  // Order terms by total degree descending, then alpha-degree descending.
  std::vector<std::pair<BivarPoly::Key, Rational>> terms(p.terms().begin(),
                                                         p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second;
    int tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const auto [i, j] = key;
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (a == Rational(1));
    std::string vars;
    if (i > 0) {
      vars += "alpha";
      if (i > 1) vars += "^" + std::to_string(i);
    }
    if (j > 0) {
      if (!vars.empty()) vars += "*";
      vars += "beta";
      if (j > 1) vars += "^" + std::to_string(j);
    }
    if (vars.empty()) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << vars;
    }
  }
  return os.str();
}

void ParamPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ParamPoly ParamPoly::lift(const Poly& p) {
  std::vector<BivarPoly> cs;
  cs.reserve(static_cast<size_t>(p.degree()) + 1);
  for (int k = 0; k <= p.degree(); ++k) cs.emplace_back(p.coeff(k));
  return ParamPoly(std::move(cs));
}

ParamPoly ParamPoly::term(BivarPoly c, int k) {
  if (k < 0) throw std::domain_error("ParamPoly::term: negative exponent");
  if (c.is_zero()) return ParamPoly{};
  std::vector<BivarPoly> cs(static_cast<size_t>(k) + 1);
  cs.back() = std::move(c);
  return ParamPoly(std::move(cs));
}

BivarPoly ParamPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BivarPoly{};
  return coeffs_[static_cast<size_t>(k)];
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  std::vector<BivarPoly> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
  return ParamPoly(std::move(cs));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly{};
  std::vector<BivarPoly> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ParamPoly(std::move(cs));
}

ParamPoly operator*(const BivarPoly& c, const ParamPoly& p) {
  if (c.is_zero()) return ParamPoly{};
  std::vector<BivarPoly> cs = p.coeffs_;
  for (auto& v : cs) v = c * v;
  return ParamPoly(std::move(cs));
}

ParamPoly ParamPoly::derivative() const {
  if (coeffs_.size() <= 1) return ParamPoly{};
  std::vector<BivarPoly> cs;
  cs.reserve(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    cs.push_back(Rational(static_cast<long>(k)) * coeffs_[k]);
  return ParamPoly(std::move(cs));
}

Poly ParamPoly::substitute(const Rational& alpha, const Rational& beta) const {
  std::vector<Rational> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.eval(alpha, beta));
  return Poly::from_coeffs(std::move(cs));
}

std::string to_string(const ParamPoly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BivarPoly& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << "(" << to_string(c) << ")";
    } else {
      os << "(" << to_string(c) << ")*" << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace narayana
