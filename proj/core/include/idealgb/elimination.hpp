#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idealgb/counters.hpp"
#include "idealgb/monomial.hpp"
#include "idealgb/order.hpp"
#include "idealgb/polynomial.hpp"
#include "idealgb/rational.hpp"

namespace idealgb {

/// Dense row-major rational matrix whose columns are labelled by monomials in
/// ascending order.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::vector<Monomial> colLabels)
      : rows_(rows), cols_(colLabels.size()), entries_(rows * cols_),
        labels_(std::move(colLabels)) {}
  /// Unlabelled matrix from nested rows; all rows must have equal length.
  static ExactMatrix fromRows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Monomial>& colLabels() const noexcept { return labels_; }
  void swapRows(std::size_t a, std::size_t b);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<Monomial> labels_;
};

struct RrefResult {
  ExactMatrix matrix;
  std::vector<std::size_t> pivotColumns;
  std::uint64_t fieldOps = 0;

  std::size_t rank() const noexcept { return pivotColumns.size(); }
};

/// Reduced row echelon form over Q. Pivots are the first nonzero entry found
/// scanning columns left to right.
RrefResult rref(ExactMatrix m);

/// Linearly independent polynomials in which each least monomial has
/// coefficient 1 and occurs in no other member.
struct Team {
  std::vector<Polynomial> polys;
  MonomialOrder order;
};

/// Intermediate matrices of the team construction, exposed for inspection.
struct TeamTrace {
  ExactMatrix coefficients;  // rows: inputs, columns: joint support ascending
  RrefResult reduced;
  Team team;
};

/// Row-reduces the coefficient matrix over the joint support and reads back
/// one polynomial per row. Throws DependentPolynomials on a zero row.
Team reverseReducedTeam(const std::vector<Polynomial>& polys, const MonomialOrder& order,
                        OpCounters* counters = nullptr);
TeamTrace reverseReducedTeamTrace(const std::vector<Polynomial>& polys,
                                  const MonomialOrder& order, OpCounters* counters = nullptr);

/// Checks both team conditions (unit coefficient at lm, lm in no other support).
bool isReverseReducedTeam(const std::vector<Polynomial>& polys, const MonomialOrder& order);

/// Dimension of the linear span of `polys`.
std::size_t rank(const std::vector<Polynomial>& polys, const MonomialOrder& order);

}  // namespace idealgb
