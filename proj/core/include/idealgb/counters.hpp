#pragma once

#include <cstdint>

namespace idealgb {

/// Arithmetic and evaluation counts collected while an algorithm runs.
struct OpCounters {
  /// Field multiplications and divisions performed by elimination.
  std::uint64_t fieldOps = 0;
  /// Every functional evaluation on a monomial.
  std::uint64_t functionalEvals = 0;
  /// The subset of functionalEvals spent building the truncated series q_j.
  std::uint64_t truncationEvals = 0;
  /// Independence decisions taken while searching for the quotient basis.
  std::uint64_t rankDecisions = 0;

  OpCounters& operator+=(const OpCounters& o) {
    fieldOps += o.fieldOps;
    functionalEvals += o.functionalEvals;
    truncationEvals += o.truncationEvals;
    rankDecisions += o.rankDecisions;
    return *this;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace idealgb
