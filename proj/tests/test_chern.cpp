#include <doctest.h>

#include <random>

#include "gotzrep/chern.hpp"
#include "gotzrep/errors.hpp"
#include "oracles.hpp"

using namespace gotzrep;

namespace {

// Hilbert polynomial of O(a_1) + ... + O(a_r) on P^n.
NumPoly split_sum(long n, const std::vector<long>& a) {
  NumPoly p;
  for (long x : a) p += binomial_poly(n, n + x);
  return p;
}

// 0 -> O(-a) -> O^2 -> N(a) -> 0 on P^3, plus `extra` copies of O.
NumPoly kernel_family(long a, long extra) {
  return binomial_poly(3, 3) * Rational(2 + extra) - binomial_poly(3, 3 - a);
}

}  // namespace

TEST_CASE("chern_from_hilbert examples") {
  const auto c = chern_from_hilbert(kernel_family(2, 0), 3, 1);
  CHECK(c.c1 == 2);
  CHECK(c.c2 == 4);

  const auto o = chern_from_hilbert(binomial_poly(2, 2), 2, 1);
  CHECK(o.c1 == 0);
  CHECK(o.c2 == 0);

  const auto s = chern_from_hilbert(binomial_poly(3, 3) + binomial_poly(3, 2), 3, 2);
  CHECK(s.c1 == -1);
  CHECK(s.c2 == 0);

  CHECK_THROWS_AS(chern_from_hilbert(binomial_poly(2, 2), 2, 2), RankMismatch);
  // d^2/2 + d + 1/2 has the right leading term but c1 = -1/2.
  CHECK_THROWS_AS(chern_from_hilbert(NumPoly(std::vector<Rational>{Rational("1/2"), 1, Rational("1/2")}), 2, 1),
                  NonIntegralChern);
}

TEST_CASE("chern bound examples") {
  for (long a = 1; a <= 5; ++a)
    for (long extra = 0; extra <= 2; ++extra) {
      const std::vector<long> degs(static_cast<std::size_t>(2 + extra), 0);
      const auto r = check_chern_bound(kernel_family(a, extra), 3, degs, 1 + extra);
      CHECK(r.context["c1"] == a);
      CHECK(r.context["c2"] == a * a);
      CHECK(r.verdict == Verdict::sharp);
    }

  const std::vector<long> twist{-1, 0};
  const auto t = check_chern_bound(split_sum(2, {1, 0}), 2, twist, 2);
  CHECK(t.context["c1"] == 1);
  CHECK(t.context["c2"] == 0);
  CHECK(t.verdict == Verdict::holds);

  const std::vector<long> one{0};
  for (long n = 2; n <= 4; ++n) CHECK(check_chern_bound(binomial_poly(n, n), n, one, 1).verdict == Verdict::sharp);

  const std::vector<long> positive{1};
  CHECK_THROWS_AS(check_chern_bound(split_sum(2, {-1}), 2, positive, 1), PreconditionViolated);
}

TEST_CASE("split sums recover the elementary symmetric functions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const long n = std::uniform_int_distribution<long>(2, 4)(rng);
    const long r = std::uniform_int_distribution<long>(1, 4)(rng);
    std::vector<long> a(static_cast<std::size_t>(r));
    for (auto& x : a) x = std::uniform_int_distribution<long>(-3, 3)(rng);
    const auto [e1, e2] = oracle::e1_e2(a);
    const auto c = chern_from_hilbert(split_sum(n, a), n, r);
    REQUIRE(c.c1 == e1);
    REQUIRE(c.c2 == e2);
  }
}

TEST_CASE("vanishing c1 forces nonpositive c2") {
  std::mt19937_64 rng(5);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const long n = std::uniform_int_distribution<long>(2, 4)(rng);
    const long r = std::uniform_int_distribution<long>(1, 4)(rng);
    std::vector<long> a(static_cast<std::size_t>(r));
    for (auto& x : a) x = std::uniform_int_distribution<long>(-3, 3)(rng);
    const auto c = chern_from_hilbert(split_sum(n, a), n, r);
    if (c.c1 != 0) continue;
    ++seen;
    REQUIRE(c.c2 <= 0);
  }
  CHECK(seen > 10);
}

TEST_CASE("sum over pairs identity") {
  CHECK(sum_ij_identity(2) == std::pair<Integer, Integer>{2, 2});
  CHECK(sum_ij_identity(3) == std::pair<Integer, Integer>{11, 11});
  for (long n = 2; n <= 50; ++n) {
    const auto [lhs, rhs] = sum_ij_identity(n);
    REQUIRE(lhs == rhs);
  }
}
