#include "idealgb/polynomial.hpp"

#include <algorithm>

#include "idealgb/error.hpp"

namespace idealgb {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.addTerm(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.addTerm(m, c);
  return p;
}

Polynomial Polynomial::fromTerms(std::size_t nvars, const std::vector<Term>& terms) {
  Polynomial p(nvars);
  for (const auto& [m, c] : terms) p.addTerm(m, c);
  return p;
}

void Polynomial::requireSameDimension(std::size_t nvars) const {
  if (nvars != nvars_) throw DimensionMismatch("polynomials have different variable counts");
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  requireSameDimension(m.nvars());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Monomial> Polynomial::support(const MonomialOrder& order) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  std::sort(out.begin(), out.end(), OrderLess{&order});
  return out;
}

std::vector<Term> Polynomial::sortedTerms(const MonomialOrder& order) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.less(a.first, b.first); });
  return out;
}

Monomial::Exponent Polynomial::degreeIn(std::size_t var) const {
  Monomial::Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Polynomial::isUnivariateIn(std::size_t var) const {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (i != var && m[i] != 0) return false;
    }
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  requireSameDimension(other.nvars_);
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  requireSameDimension(other.nvars_);
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.requireSameDimension(b.nvars_);
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  a.requireSameDimension(m.nvars());
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) r.terms_.emplace(ma * m, ca);
  return r;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial scale(const Rational& c, const Polynomial& p) { return c * p; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionMismatch("derivative variable out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[var];
    if (e == 0) continue;
    std::vector<Monomial::Exponent> exps = m.exponents();
    exps[var] = e - 1;
    r.addTerm(Monomial(std::move(exps)), c * e);
  }
  return r;
}

Monomial lm(const Polynomial& p, const MonomialOrder& order) {
  if (p.isZero()) throw Error("lm of the zero polynomial");
  const auto& t = p.terms();
  return std::min_element(t.begin(), t.end(),
                          [&](const auto& a, const auto& b) {
                            return order.less(a.first, b.first);
                          })
      ->first;
}

Monomial leadingMonomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.isZero()) throw Error("leading monomial of the zero polynomial");
  const auto& t = p.terms();
  return std::max_element(t.begin(), t.end(),
                          [&](const auto& a, const auto& b) {
                            return order.less(a.first, b.first);
                          })
      ->first;
}

Rational leadingCoefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coefficient(leadingMonomial(p, order));
}

}  // namespace idealgb
