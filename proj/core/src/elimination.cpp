#include "idealgb/elimination.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "idealgb/error.hpp"

namespace idealgb {

ExactMatrix ExactMatrix::fromRows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void ExactMatrix::swapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RrefResult rref(ExactMatrix m) {
  RrefResult out;
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < m.cols() && pivotRow < m.rows(); ++col) {
    std::size_t r = pivotRow;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    m.swapRows(pivotRow, r);

    const Rational inv = 1 / m(pivotRow, col);
    ++out.fieldOps;
    m(pivotRow, col) = 1;
    for (std::size_t c = col + 1; c < m.cols(); ++c) {
      if (m(pivotRow, c) != 0) {
        m(pivotRow, c) *= inv;
        ++out.fieldOps;
      }
    }
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == pivotRow) continue;
      const Rational factor = m(other, col);
      if (factor == 0) continue;
      m(other, col) = 0;
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        if (m(pivotRow, c) != 0) {
          m(other, c) -= factor * m(pivotRow, c);
          ++out.fieldOps;
        }
      }
    }
    out.pivotColumns.push_back(col);
    ++pivotRow;
  }
  out.matrix = std::move(m);
  return out;
}

namespace {

std::vector<Monomial> jointSupport(const std::vector<Polynomial>& polys,
                                   const MonomialOrder& order) {
  std::set<Monomial, OrderLess> all(OrderLess{&order});
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) all.insert(m);
  }
  return {all.begin(), all.end()};
}

ExactMatrix coefficientMatrix(const std::vector<Polynomial>& polys,
                              const MonomialOrder& order) {
  ExactMatrix u(polys.size(), jointSupport(polys, order));
  const auto& labels = u.colLabels();
  for (std::size_t c = 0; c < labels.size(); ++c) {
    for (std::size_t r = 0; r < polys.size(); ++r) u(r, c) = polys[r].coefficient(labels[c]);
  }
  return u;
}

}  // namespace

TeamTrace reverseReducedTeamTrace(const std::vector<Polynomial>& polys,
                                  const MonomialOrder& order, OpCounters* counters) {
  for (const auto& p : polys) {
    if (p.isZero()) throw DependentPolynomials("zero polynomial in team input");
    if (p.nvars() != order.nvars()) throw DimensionMismatch("polynomial/order dimension mismatch");
  }
  TeamTrace trace{coefficientMatrix(polys, order), {}, Team{{}, order}};
  trace.reduced = rref(trace.coefficients);
  if (counters) counters->fieldOps += trace.reduced.fieldOps;
  if (trace.reduced.rank() < polys.size()) {
    throw DependentPolynomials("input polynomials are linearly dependent (rank " +
                               std::to_string(trace.reduced.rank()) + " of " +
                               std::to_string(polys.size()) + ")");
  }
  const auto& reduced = trace.reduced.matrix;
  const auto& labels = trace.coefficients.colLabels();
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    Polynomial p(order.nvars());
    for (std::size_t c = 0; c < reduced.cols(); ++c) p.addTerm(labels[c], reduced(r, c));
    trace.team.polys.push_back(std::move(p));
  }
  return trace;
}

Team reverseReducedTeam(const std::vector<Polynomial>& polys, const MonomialOrder& order,
                        OpCounters* counters) {
  return std::move(reverseReducedTeamTrace(polys, order, counters).team);
}

bool isReverseReducedTeam(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].isZero()) return false;
    const Monomial least = lm(polys[i], order);
    if (polys[i].coefficient(least) != 1) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i != j && polys[j].coefficient(least) != 0) return false;
    }
  }
  return rank(polys, order) == polys.size();
}

std::size_t rank(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
  if (polys.empty()) return 0;
  return rref(coefficientMatrix(polys, order)).rank();
}

}  // namespace idealgb
