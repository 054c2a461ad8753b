#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gotzrep/integer.hpp"
#include "gotzrep/monomial.hpp"

namespace gotzrep {

/// Graded Betti numbers beta_{i,j}: homological index i, internal degree j.
/// Only nonzero entries are stored.
struct BettiTable {
  std::map<std::pair<int, long>, Integer> entries;

  bool empty() const { return entries.empty(); }
  Integer at(int i, long j) const;
  void add(int i, long j, const Integer& v);
  /// max(j - i) over the entries; nullopt for the zero module.
  std::optional<long> regularity() const;
  /// sum_i (-1)^i beta_{i,j}, indexed by j.
  std::map<long, Integer> euler_characteristic() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

enum class BettiOf { quotient, submodule };

/// Betti numbers of S/I (quotient) or of I (submodule) from Koszul homology,
/// one multidegree b at a time over the box 0 <= b <= lcm of the generators.
BettiTable koszul_betti(const MonomialIdeal& ideal, BettiOf which);

/// Betti numbers of F/N or N; direct sums add, shifted by the degrees f_i.
BettiTable koszul_betti(const MonomialSubmodule& module, BettiOf which);

/// Castelnuovo-Mumford regularity from the Betti table. Throws ZeroModule.
long regularity(const MonomialSubmodule& module, BettiOf which);
long regularity(const MonomialIdeal& ideal, BettiOf which);

/// Strongly stable exchange condition on the minimal generators.
bool is_stable(const MonomialIdeal& ideal);

/// Regularity of a stable ideal as its largest generator degree.
/// Throws NotStable or ZeroModule.
long ek_regularity(const MonomialIdeal& ideal);

}  // namespace gotzrep
