#include "idealgb/order.hpp"

#include <algorithm>
#include <numeric>

#include "idealgb/error.hpp"

namespace idealgb {

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  if (priority_.empty()) throw Error("monomial order needs at least one variable");
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error("variable priority is not a permutation");
  }
}

MonomialOrder MonomialOrder::natural(Kind kind, std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return {kind, std::move(p)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars()) {
    throw DimensionMismatch("monomial dimension does not match the order");
  }
  if (kind_ == Kind::Grlex) {
    const auto da = a.totalDegree();
    const auto db = b.totalDegree();
    if (da != db) return da <=> db;
  }
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

void sortAscending(std::vector<Monomial>& monomials, const MonomialOrder& order) {
  std::sort(monomials.begin(), monomials.end(), OrderLess{&order});
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

}  // namespace idealgb
