#include "gotzrep/chern.hpp"

#include "gotzrep/errors.hpp"
#include "gotzrep/io.hpp"

namespace gotzrep {

namespace {

Integer factorial(long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer as_integer(const Rational& x, const char* what) {
  if (x.get_den() != 1)
    throw NonIntegralChern(std::string(what) + " = " + x.get_str() + " is not an integer");
  return x.get_num();
}

}  // namespace

ChernData chern_from_hilbert(const NumPoly& p, long n, long r) {
  if (n < 2) throw PreconditionViolated("chern_from_hilbert: need n >= 2");
  if (r < 1) throw PreconditionViolated("chern_from_hilbert: need r >= 1");
  Rational lead(Integer(r), factorial(n));
  lead.canonicalize();
  if (p.degree() != n || p.leading() != lead)
    throw RankMismatch("leading term of " + p.to_string() + " is not " + lead.get_str() + "*d^" +
                       std::to_string(n));
  const Rational rr(r), nn(n);
  const Rational c1q = p.coeff(n - 1) * Rational(factorial(n - 1)) - rr * (nn + 1) / 2;
  const Integer c1 = as_integer(c1q, "c1");
  const Rational top = Rational(c1 * c1) + (nn + 1) * Rational(c1) +
                       rr * (nn + 1) * (3 * nn + 2) / 12 -
                       2 * p.coeff(n - 2) * Rational(factorial(n - 2));
  const Integer c2 = as_integer(top / 2, "c2");

  // Substitute back into both identities.
  const Rational check1 = (rr * (nn + 1) / 2 + Rational(c1)) / Rational(factorial(n - 1));
  const Rational check2 = ((Rational(c1 * c1) - 2 * Rational(c2) + (nn + 1) * Rational(c1)) / 2 +
                           rr * (nn + 1) * (3 * nn + 2) / 24) /
                          Rational(factorial(n - 2));
  if (check1 != p.coeff(n - 1) || check2 != p.coeff(n - 2))
    throw InvariantViolated("Chern classes do not reproduce the Hilbert coefficients");
  return {n, r, c1, c2};
}

CheckReport check_chern_bound(const NumPoly& p, long n, std::span<const long> degrees, long r) {
  for (long f : degrees)
    if (f > 0) throw PreconditionViolated("check_chern_bound: generator degrees must all be <= 0");
  const auto adj = adjusted_gotzmann_rep(p, n, degrees, r);
  const ChernData chern = chern_from_hilbert(p, n, r);
  CheckReport rep;
  rep.name = "chern";
  rep.instance = {{"poly", to_json(p)}, {"n", n}, {"degrees", degrees}, {"rank", r}};
  rep.bound_lhs = chern.c2;
  rep.bound_rhs = chern.c1 * chern.c1;
  rep.verdict = compare_bound(chern.c2, rep.bound_rhs);
  rep.context = {{"c1", to_json(chern.c1)},
                 {"c2", to_json(chern.c2)},
                 {"adjusted_gotzmann_number", adj.adjusted_number()}};
  return rep;
}

std::pair<Integer, Integer> sum_ij_identity(long n) {
  if (n < 1) throw PreconditionViolated("sum_ij_identity: need n >= 1");
  Integer lhs = 0;
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) lhs += Integer(i) * j;
  const Integer nn(n);
  Integer rhs = (nn - 1) * nn * (nn + 1) * (3 * nn + 2);
  mpz_divexact_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), 24);
  return {lhs, rhs};
}

}  // namespace gotzrep
