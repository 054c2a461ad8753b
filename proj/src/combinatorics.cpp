#include "gotzrep/combinatorics.hpp"

#include "gotzrep/errors.hpp"

namespace gotzrep {

Integer binomial(const Integer& k, long j) {
  if (j < 0) throw PreconditionViolated("binomial: negative lower index");
  if (k < j) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(j));
  return out;
}

Integer binomial(long k, long j) { return binomial(Integer(k), j); }

Integer MacaulayRep::value() const {
  Integer sum = 0;
  for (const auto& t : terms) sum += binomial(t.top, t.index);
  return sum;
}

bool MacaulayRep::well_formed() const {
  if (d < 1) return false;
  long expected = d;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].index != expected || expected < 1) return false;
    if (terms[i].top < terms[i].index) return false;
    if (i > 0 && !(terms[i - 1].top > terms[i].top)) return false;
    --expected;
  }
  return true;
}

namespace {

// Largest k >= j with C(k, j) <= a, for a >= 1.
Integer largest_top(const Integer& a, long j) {
  Integer lo = j;  // C(j, j) = 1 <= a
  Integer step = 1;
  Integer hi = lo + step;
  while (binomial(hi, j) <= a) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // C(lo, j) <= a < C(hi, j)
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binomial(mid, j) <= a)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const Integer& a, long d) {
  if (a < 0) throw PreconditionViolated("macaulay_rep: a must be nonnegative");
  if (d < 1) throw PreconditionViolated("macaulay_rep: d must be positive");
  MacaulayRep rep;
  rep.d = d;
  Integer rest = a;
  for (long j = d; j >= 1 && rest > 0; --j) {
    Integer k = largest_top(rest, j);
    rest -= binomial(k, j);
    rep.terms.push_back({std::move(k), j});
  }
  return rep;
}

Integer macaulay_transform(const Integer& a, long d) {
  Integer sum = 0;
  for (const auto& t : macaulay_rep(a, d).terms) sum += binomial(t.top + 1, t.index + 1);
  return sum;
}

Integer green_transform(const Integer& a, long d) {
  Integer sum = 0;
  for (const auto& t : macaulay_rep(a, d).terms) sum += binomial(t.top - 1, t.index);
  return sum;
}

}  // namespace gotzrep
