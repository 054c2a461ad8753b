#pragma once

#include <utility>
#include <vector>

#include "gotzrep/integer.hpp"

namespace gotzrep {

/// C(k, j) with the combinatorial convention: zero whenever k < j, which
/// includes every negative k. Requires j >= 0.
Integer binomial(const Integer& k, long j);
Integer binomial(long k, long j);

/// d-th Macaulay representation a = C(k_d, d) + C(k_{d-1}, d-1) + ... +
/// C(k_delta, delta) with k_d > k_{d-1} > ... > k_delta >= delta >= 1.
/// Terms are stored top index first; zero has no terms.
struct MacaulayRep {
  struct Term {
    Integer top;
    long index;
    friend bool operator==(const Term&, const Term&) = default;
  };

  long d = 1;
  std::vector<Term> terms;

  Integer value() const;
  /// Strict descent of tops, consecutive indices from d, bottom index >= 1.
  bool well_formed() const;

  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

MacaulayRep macaulay_rep(const Integer& a, long d);

/// a^<d>: every C(k, j) of the representation becomes C(k + 1, j + 1).
Integer macaulay_transform(const Integer& a, long d);

/// a_<d>: every C(k, j) of the representation becomes C(k - 1, j).
Integer green_transform(const Integer& a, long d);

}  // namespace gotzrep
