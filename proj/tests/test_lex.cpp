#include <doctest.h>

#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"
#include "gotzrep/lex.hpp"
#include "gotzrep/resolution.hpp"
#include "gotzrep/theorems.hpp"
#include "corpus.hpp"

using namespace gotzrep;

namespace {

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> g;
  for (auto& e : gens) g.emplace_back(std::move(e));
  return MonomialIdeal(n, std::move(g));
}

NumPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return NumPoly(std::move(c));
}

// Strip every power of the last variable from the generators.
MonomialIdeal strip_last(const MonomialIdeal& i) {
  std::vector<Monomial> out;
  for (const auto& g : i.gens()) out.push_back(g.without_variable(i.n()));
  return MonomialIdeal(i.n(), std::move(out));
}

}  // namespace

TEST_CASE("lex_segment examples") {
  const auto seg = lex_segment(2, 2, 2);
  REQUIRE(seg.size() == 2);
  CHECK(seg[0] == Monomial({2, 0, 0}));
  CHECK(seg[1] == Monomial({1, 1, 0}));
  CHECK(lex_segment(3, 4, 0).empty());
  CHECK(lex_segment(1, 3, 4).size() == 4);
  CHECK_THROWS_AS(lex_segment(1, 3, 5), OutOfRange);
}

TEST_CASE("lexify examples") {
  const GradedFreeModule f(1, {0, 0, 0});
  HilbertFunctionSpec h{{}, poly({2, 2})};
  const auto l = lexify(f, h);
  CHECK(l.components[0].is_unit());
  CHECK(l.components[1].is_zero());
  CHECK(l.components[2].is_zero());

  const GradedFreeModule s(2, {0});
  const auto line = lexify(s, {{}, poly({1, 1})});
  CHECK(line.components[0] == ideal(2, {{1, 0, 0}}));

  HilbertFunctionSpec bad{{{0, 1}, {1, 3}}, poly({1, 1})};
  CHECK_THROWS_AS(lexify(GradedFreeModule(1, {0}), bad), NotAchievable);

  // H = (1, 3, 4, 4, ...) on P^2: four points.
  HilbertFunctionSpec pts{{{0, 1}, {1, 3}}, NumPoly(4)};
  const auto four = lexify(s, pts);
  CHECK(is_lex_submodule(four, 8));
  for (long d = 0; d <= 8; ++d) CHECK(hf_direct(four, d) == pts.value(d));
}

TEST_CASE("lexify reproduces random Hilbert functions") {
  int tried = 0;
  for (std::uint64_t seed = 0; seed < 200 && tried < 60; ++seed) {
    const auto module = random_submodule(corpus::small_spec(), seed);
    if (!corpus::modest(module)) continue;
    ++tried;
    const long top = module.max_generator_degree().value_or(module.ambient.degrees.back()) + 1;
    HilbertFunctionSpec h;
    h.tail = hilbert_polynomial(module);
    const long from = module.ambient.degrees.front();
    const long to = std::max(top, stabilization_degree(module));
    for (long d = from; d <= to; ++d) h.table.emplace_back(d, hf_direct(module, d));
    const auto l = lexify(module.ambient, h);
    REQUIRE(is_lex_submodule(l, to + 5));
    for (long d = from - 1; d <= to + 5; ++d) REQUIRE(hf_direct(l, d) == h.value(d));
  }
  CHECK(tried >= 40);
}

TEST_CASE("saturated_lex_ideal examples") {
  CHECK(saturated_lex_ideal(GotzmannRep{{1, 0}}, 2) == ideal(2, {{2, 0, 0}, {1, 1, 0}}));
  CHECK(saturated_lex_ideal(GotzmannRep{{0}}, 2) == ideal(2, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(saturated_lex_ideal(GotzmannRep{}, 1).is_unit());
  const auto five = saturated_lex_ideal(GotzmannRep{{1, 1, 0, 0, 0}}, 2);
  CHECK(five.max_generator_degree() == 5);
  CHECK(ek_regularity(five) == 5);
}

TEST_CASE("saturated lex ideals are stable and generated in degree s") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = static_cast<int>(seed % 3) + 1;
    const auto g = random_gotzmann_rep(8, n - 1, seed);
    const auto i = saturated_lex_ideal(g, n);
    REQUIRE(is_stable(i));
    REQUIRE(i.max_generator_degree() == static_cast<long>(g.size()));
    // Lex ideals are stable, so stripping x_n saturates them too.
    const auto segment = MonomialIdeal(n, lex_segment(n, static_cast<long>(g.size()),
                                                      binomial(static_cast<long>(g.size()) + n, n) -
                                                          g.polynomial().value_at(static_cast<long>(g.size()))));
    REQUIRE(strip_last(segment) == i);
  }
}

TEST_CASE("saturated_lex_module examples") {
  const GradedFreeModule f(1, {0, 0, 0});
  const auto l = saturated_lex_module(poly({2, 2}), f, 2);
  CHECK(l.components[0].is_unit());
  CHECK(l.components[1].is_zero());
  CHECK(l.components[2].is_zero());

  const GradedFreeModule g(2, {-1, -1, 0});
  const auto m = saturated_lex_module(poly({6, 5, 1}), g, 2);
  CHECK(m.components[1].is_zero());
  CHECK(m.components[2].is_zero());
  CHECK(hilbert_polynomial(m) == poly({6, 5, 1}));

  const GradedFreeModule one(2, {0});
  CHECK(saturated_lex_module(NumPoly(), one, 0).components[0].is_unit());

  const GradedFreeModule three(2, {0, 0, 0});
  const NumPoly p = binomial_poly(2, 2) * Rational(2) + poly({2, 1});
  const auto sharp = saturated_lex_module(p, three, 2);
  CHECK(sharp.components[0] == ideal(2, {{2, 0, 0}, {1, 1, 0}}));
  CHECK(regularity(sharp, BettiOf::submodule) == 2);
}
