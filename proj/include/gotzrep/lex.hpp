#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gotzrep/integer.hpp"
#include "gotzrep/monomial.hpp"
#include "gotzrep/numpoly.hpp"

namespace gotzrep {

// Module monomials m e_i are ordered position first: m e_i > m' e_j iff i < j,
// or i == j and m >_lex m'. A lex submodule therefore fills e_1 first and
// has components I_1 ⊇ I_2 ⊇ ... with its free components last.

/// The first c monomials of degree d in k[x_0..x_n], lex-descending.
/// Throws OutOfRange unless 0 <= c <= C(d + n, n).
std::vector<Monomial> lex_segment(int n, long d, const Integer& c);

/// Hilbert function given as a finite table followed by a polynomial tail.
/// Degrees below the first table entry have value 0; degrees past the last
/// entry take the tail. Table degrees must be consecutive.
struct HilbertFunctionSpec {
  std::vector<std::pair<long, Integer>> table;
  NumPoly tail;

  Integer value(long d) const;
  /// Last tabulated degree, or nullopt for an empty table.
  std::optional<long> last_degree() const;
};

struct LexifyOptions {
  /// Degrees examined past max(last table degree, f_m) before giving up.
  long max_extra_degrees = 100;
};

/// Lex submodule L of F with H(F/L, d) = H(d) for all d. Throws NotAchievable
/// when no submodule has that Hilbert function.
MonomialSubmodule lexify(const GradedFreeModule& f, const HilbertFunctionSpec& h,
                         const LexifyOptions& options = {});

/// Each graded piece of N, from the lowest generator degree through `up_to`,
/// is an initial segment in the module order.
bool is_lex_submodule(const MonomialSubmodule& module, long up_to);
bool is_lex_ideal(const MonomialIdeal& ideal, long up_to);

/// Saturation of the ideal generated by the lex segment of degree s = |g|
/// and codimension P(s), where P is the polynomial of g.
MonomialIdeal saturated_lex_ideal(const GotzmannRep& g, int n);

/// Saturated lex submodule L of F with Hilbert polynomial P(F/L) = P:
/// unit ideals in e_1..e_{m-r-1}, a saturated lex ideal in e_{m-r}, zero
/// in the last r components.
MonomialSubmodule saturated_lex_module(const NumPoly& p, const GradedFreeModule& f, long r);

}  // namespace gotzrep
