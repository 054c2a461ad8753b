#include <doctest.h>

#include "gotzrep/errors.hpp"
#include "gotzrep/resolution.hpp"
#include "gotzrep/theorems.hpp"
#include "oracles.hpp"

using namespace gotzrep;

namespace {

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> g;
  for (auto& e : gens) g.emplace_back(std::move(e));
  return MonomialIdeal(n, std::move(g));
}

// Numerator of the Hilbert series, (1 - t)^(n+1) * sum H(d) t^d, from brute
// counting; `low` is the lowest degree considered and `high` the cutoff.
std::map<long, Integer> counted_numerator(const MonomialSubmodule& module, long low, long high) {
  std::map<long, Integer> h;
  for (long d = low; d <= high; ++d) {
    long count = 0;
    for (std::size_t c = 0; c < module.components.size(); ++c)
      oracle::for_each_monomial(module.n() + 1, d - module.degree_of(c), [&](const std::vector<int>& m) {
        if (!module.components[c].contains(Monomial(m))) ++count;
      });
    h[d] = count;
  }
  std::map<long, Integer> out;
  for (long d = low; d <= high; ++d) {
    Integer acc = 0;
    for (long k = 0; k <= module.n() + 1 && d - k >= low; ++k)
      acc += oracle::binom(module.n() + 1, k) * ((k % 2) ? -1 : 1) * h[d - k];
    if (acc != 0) out[d] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("betti examples") {
  const auto t = koszul_betti(ideal(2, {{2, 0, 0}, {1, 1, 0}}), BettiOf::quotient);
  CHECK(t.entries.size() == 3);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 2);
  CHECK(t.at(2, 3) == 1);

  const auto k = koszul_betti(ideal(1, {{1, 0}, {0, 1}}), BettiOf::quotient);
  CHECK(k.entries.size() == 3);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(1, 1) == 2);
  CHECK(k.at(2, 2) == 1);

  const auto free = MonomialSubmodule::zero(GradedFreeModule(2, {-1, -1, 0}));
  const auto ft = koszul_betti(free, BettiOf::quotient);
  CHECK(ft.entries.size() == 2);
  CHECK(ft.at(0, -1) == 2);
  CHECK(ft.at(0, 0) == 1);

  // Koszul complex on three variables.
  const auto m = koszul_betti(ideal(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), BettiOf::submodule);
  CHECK(m.at(0, 1) == 3);
  CHECK(m.at(1, 2) == 3);
  CHECK(m.at(2, 3) == 1);
}

TEST_CASE("regularity examples") {
  const auto i = ideal(2, {{2, 0, 0}, {1, 1, 0}});
  CHECK(regularity(i, BettiOf::submodule) == 2);
  CHECK(regularity(i, BettiOf::quotient) == 1);
  const MonomialSubmodule line_module(GradedFreeModule(1, {0, 0, 0}),
                               {MonomialIdeal::unit(1), MonomialIdeal::zero(1), MonomialIdeal::zero(1)});
  CHECK(regularity(line_module, BettiOf::quotient) == 0);
  CHECK(regularity(MonomialSubmodule::zero(GradedFreeModule(2, {-1, -1, 0})), BettiOf::quotient) == 0);
  CHECK_THROWS_AS(regularity(MonomialSubmodule::zero(GradedFreeModule(2, {0})), BettiOf::submodule), ZeroModule);
}

TEST_CASE("stability and the fast path") {
  CHECK(is_stable(ideal(2, {{2, 0, 0}, {1, 1, 0}})));
  CHECK_FALSE(is_stable(ideal(1, {{0, 1}})));
  CHECK(is_stable(MonomialIdeal::unit(2)));
  CHECK(ek_regularity(ideal(2, {{2, 0, 0}, {1, 1, 0}})) == 2);
  CHECK(ek_regularity(ideal(2, {{1, 0, 0}})) == 1);
  CHECK_THROWS_AS(ek_regularity(ideal(1, {{0, 1}})), NotStable);
  CHECK_THROWS_AS(ek_regularity(MonomialIdeal::zero(2)), ZeroModule);
}

TEST_CASE("fast path agrees with Koszul homology on stable ideals") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = static_cast<int>(seed % 3) + 1;
    const auto i = random_stable_ideal(n, 6, 6, seed);
    REQUIRE(is_stable(i));
    REQUIRE(ek_regularity(i) == regularity(i, BettiOf::submodule));
  }
}

TEST_CASE("quotient regularity is one less for proper ideals") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomSubmoduleSpec spec;
    spec.max_m = 1;
    spec.min_f = spec.max_f = 0;
    const auto module = random_submodule(spec, seed);
    const auto& i = module.components[0];
    if (i.is_zero() || i.is_unit()) continue;
    REQUIRE(regularity(i, BettiOf::quotient) == regularity(i, BettiOf::submodule) - 1);
  }
}

TEST_CASE("alternating Betti sums give the Hilbert series numerator") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto module = random_submodule({}, seed);
    const auto euler = koszul_betti(module, BettiOf::quotient).euler_characteristic();
    std::map<long, Integer> nonzero;
    for (const auto& [j, v] : euler)
      if (v != 0) nonzero[j] = v;
    // Numerator degree is at most lcm degree + max f <= 3 * 5 + 2 + slack.
    const long low = module.ambient.degrees.front();
    REQUIRE(nonzero == counted_numerator(module, low, low + 30));
  }
}
