#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "idealgb/monomial.hpp"

namespace idealgb {

/// lex or grlex with an explicit variable priority.
///
/// `priority` lists variable indices from greatest to least, so
/// grlex(y < x) over the variables (x, y) has priority {0, 1}. grlex breaks
/// total-degree ties lexicographically on the same priority.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grlex };

  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  static MonomialOrder lex(std::vector<std::size_t> priority) {
    return {Kind::Lex, std::move(priority)};
  }
  static MonomialOrder grlex(std::vector<std::size_t> priority) {
    return {Kind::Grlex, std::move(priority)};
  }
  /// Identity priority: variable 0 is greatest.
  static MonomialOrder natural(Kind kind, std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t nvars() const noexcept { return priority_.size(); }
  /// Index of the least variable.
  std::size_t leastVariable() const { return priority_.back(); }

  /// Throws DimensionMismatch unless both monomials have nvars() variables.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

/// Strict-weak-ordering adaptor for std containers and algorithms.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

/// Sorts and deduplicates monomials ascending under `order`.
void sortAscending(std::vector<Monomial>& monomials, const MonomialOrder& order);

}  // namespace idealgb
