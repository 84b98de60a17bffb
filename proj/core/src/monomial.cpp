#include "idealgb/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "idealgb/error.hpp"

namespace idealgb {

Monomial Monomial::variable(std::size_t nvars, std::size_t var, Exponent power) {
  if (var >= nvars) throw DimensionMismatch("variable index out of range");
  Monomial m(nvars);
  m.exps_[var] = power;
  return m;
}

unsigned long Monomial::totalDegree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0UL);
}

bool Monomial::isOne() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

void Monomial::requireSameDimension(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    throw DimensionMismatch("monomials have different variable counts");
  }
}

bool Monomial::divides(const Monomial& other) const {
  requireSameDimension(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  requireSameDimension(other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("monomial division is not exact");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  requireSameDimension(other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  }
  return r;
}

Integer Monomial::factorial() const {
  Integer r = 1;
  for (Exponent e : exps_) r *= idealgb::factorial(e);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.nvars();
  for (auto e : m.exponents()) h = h * 1000003u ^ std::hash<unsigned>{}(e);
  return h;
}

}  // namespace idealgb
