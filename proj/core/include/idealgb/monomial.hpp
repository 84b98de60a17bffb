#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "idealgb/rational.hpp"

namespace idealgb {

/// Power product x_1^a_1 ... x_d^a_d, stored as its exponent vector.
///
/// The built-in comparison operators compare exponent vectors
/// lexicographically in storage order. They exist for use as container keys
/// only; use MonomialOrder for the mathematical order.
class Monomial {
 public:
  using Exponent = unsigned;

  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_var^power in `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t var, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  unsigned long totalDegree() const noexcept;
  bool isOne() const noexcept;

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  /// alpha! = alpha_1! ... alpha_d!
  Integer factorial() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  void requireSameDimension(const Monomial& other) const;

  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace idealgb
