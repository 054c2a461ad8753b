#pragma once

#include <span>
#include <utility>

#include "gotzrep/integer.hpp"
#include "gotzrep/numpoly.hpp"
#include "gotzrep/theorems.hpp"

namespace gotzrep {

struct ChernData {
  long n = 0;
  long r = 0;
  Integer c1;
  Integer c2;
};

/// First and second Chern classes of a rank-r sheaf on P^n read off the top
/// three coefficients of its Hilbert polynomial:
///   [d^n]     P = r / n!
///   [d^(n-1)] P = (r(n+1)/2 + c1) / (n-1)!
///   [d^(n-2)] P = ((c1^2 - 2 c2 + (n+1) c1)/2 + r(n+1)(3n+2)/24) / (n-2)!
/// Throws RankMismatch if the leading term is not r/n!, NonIntegralChern if
/// either class comes out fractional.
ChernData chern_from_hilbert(const NumPoly& p, long n, long r);

/// c2 <= c1^2 for a Hilbert polynomial admitting a rank-and-degree adjusted
/// Gotzmann representation over generator degrees that are all <= 0.
CheckReport check_chern_bound(const NumPoly& p, long n, std::span<const long> degrees, long r);

/// (sum_{1<=i<j<=n} i*j by double loop, (n-1)n(n+1)(3n+2)/24).
std::pair<Integer, Integer> sum_ij_identity(long n);

}  // namespace gotzrep
