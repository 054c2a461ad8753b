// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "gotzrep/chern.hpp"
#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"
#include "gotzrep/io.hpp"
#include "gotzrep/lex.hpp"
#include "gotzrep/resolution.hpp"
#include "gotzrep/theorems.hpp"
#include "oracles.hpp"

using namespace gotzrep;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

NumPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return NumPoly(std::move(c));
}

bool ok(Verdict v) { return v == Verdict::holds || v == Verdict::sharp; }

void twisted_plane(Outcome& out) {
  const NumPoly p = binomial_poly(2, 3) * Rational(2);
  out.expect(p == poly({6, 5, 1}), "P = d^2 + 5d + 6");
  const MonomialSubmodule module(GradedFreeModule(2, {-1, -1, 0}),
                                 {MonomialIdeal::zero(2), MonomialIdeal::zero(2), MonomialIdeal::unit(2)});
  out.expect(hilbert_polynomial(module) == p, "Hilbert polynomial of the module");
  const std::vector<long> degs{-1, -1, 0};
  const auto adj = adjusted_gotzmann_rep(p, 2, degs, 2);
  out.expect(adj.adjusted_number() == 2, "adjusted number 2");
  out.expect(adj.q.a == std::vector<long>{1, 0}, "adjusted terms [1,0]");
  out.expect(adj.free_degrees == std::vector<long>{-1, 0}, "free degrees {-1,0}");
  const auto g = gotzmann_rep(p);
  std::vector<long> expected{2, 2, 1, 1, 1};
  expected.insert(expected.end(), 11, 0);
  out.expect(g.size() == 16, "standard number 16");
  out.expect(g.a == expected, "standard terms");
  out.note << "adjusted " << adj.adjusted_number() << " " << to_json(adj.q).dump() << ", standard "
           << g.size();
}

void line_module(Outcome& out) {
  const MonomialSubmodule l(GradedFreeModule(1, {0, 0, 0}),
                            {MonomialIdeal::unit(1), MonomialIdeal::zero(1), MonomialIdeal::zero(1)});
  out.expect(hf_direct(l, 1) == 4, "H(F/L,1) = 4");
  out.expect(hf_direct(l, 2) == 6, "H(F/L,2) = 6");
  out.expect(macaulay_transform(4, 1) == 10, "4^<1> = 10");
  const auto classical = check_gasharov(l, 1, 0, GasharovKind::macaulay, 0);
  out.expect(classical.verdict == Verdict::holds && *classical.bound_lhs == 6 && classical.bound_rhs == 10,
             "classical bound 6 < 10");
  out.expect(generic_hyperplane_hf(l, 2, 3, 0) == 2, "H(F'/L',2) = 2");
  out.expect(gotzmann_number(poly({2, 2})) == 3, "classical Gotzmann number 3");
  out.expect(regularity(l, BettiOf::quotient) == 0, "reg(F/L) = 0");
  int sharp = 0;
  for (long d = 1; d <= 6; ++d) {
    out.expect(check_macaulay_adjusted(l, d).verdict == Verdict::sharp, "adjusted Macaulay sharp");
    out.expect(check_green_adjusted(l, d, 0).verdict == Verdict::sharp, "adjusted Green sharp");
    out.expect(check_persistence_adjusted(l, d, 4).verdict == Verdict::sharp, "adjusted persistence sharp");
    sharp += 3;
  }
  out.expect(check_gotzmann_regularity_adjusted(l).verdict == Verdict::sharp, "adjusted regularity sharp");
  ++sharp;
  out.note << "4, 6, 10, 2, s=3, reg 0; " << sharp << " adjusted checks sharp";
}

void sharpness(Outcome& out) {
  std::mt19937_64 rng(20240);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  int done = 0;
  std::uint64_t seed = 0;
  while (done < 50) {
    ++seed;
    const int n = static_cast<int>(uniform(1, 3));
    const long m = uniform(1, 3);
    const long r = uniform(0, m - 1);
    std::vector<long> degs;
    for (long i = 0; i + 1 < m - r; ++i) degs.push_back(uniform(-2, 0));
    degs.push_back(0);
    for (long i = 0; i < r; ++i) degs.push_back(uniform(0, 2));
    std::sort(degs.begin(), degs.end());
    const auto g = random_gotzmann_rep(6, n - 1, seed);
    if (static_cast<long>(g.size()) < degs.back()) continue;
    NumPoly p = g.polynomial();
    for (long i = m - r; i < m; ++i) p += binomial_poly(n, n - degs[static_cast<std::size_t>(i)]);
    const auto rep = check_sharpness(p, GradedFreeModule(n, degs), r);
    const long s = static_cast<long>(g.size());
    out.expect(rep.context["s"] == s, "adjusted number equals the constructed s");
    out.expect(rep.verdict == Verdict::sharp && *rep.bound_lhs == std::max(s, degs.back()),
               "reg(L) = max(s, f_m) for " + rep.instance.dump());
    ++done;
  }
  out.note << done << " instances, reg(L) = max(s, f_m) each";
}

void sweep(Outcome& out) {
  SweepOptions opts;
  opts.instances = 500;
  const auto reports = run_sweep(opts);
  std::size_t violated = 0;
  std::map<std::string, std::size_t> by_name;
  for (const auto& r : reports) {
    ++by_name[r.name];
    if (r.verdict == Verdict::violated) {
      ++violated;
      if (violated <= 3) std::fprintf(stderr, "%s\n", to_json(r).dump().c_str());
    }
  }
  for (const char* name : {"macaulay_adjusted", "green_adjusted", "persistence_adjusted",
                           "gotzmann_regularity_adjusted", "gasharov_macaulay", "gasharov_green"})
    out.expect(by_name[name] > 0, std::string("no reports from ") + name);
  out.expect(violated == 0, std::to_string(violated) + " violations");
  out.note << opts.instances << " instances, " << reports.size() << " checks, " << violated << " violated";
}

bool divides(const std::vector<int>& g, const std::vector<int>& m) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > m[i]) return false;
  return true;
}

void oracles(Outcome& out) {
  SeriesOptions raw;
  raw.verify = false;
  long values = 0, stable = 0;
  auto check_stable = [&](const MonomialIdeal& i) {
    if (i.is_zero() || !is_stable(i)) return;
    ++stable;
    out.expect(ek_regularity(i) == regularity(i, BettiOf::submodule), "EK regularity disagrees");
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto module = random_submodule({}, seed);
    const auto hs = hilbert_series(module, raw);
    for (long d = 0; d <= 12; ++d) {
      long count = 0;
      for (std::size_t c = 0; c < module.components.size(); ++c) {
        std::vector<std::vector<int>> gens;
        for (const auto& g : module.components[c].gens()) gens.push_back(g.exponents());
        oracle::for_each_monomial(module.n() + 1, d - module.degree_of(c), [&](const std::vector<int>& m) {
          for (const auto& g : gens)
            if (divides(g, m)) return;
          ++count;
        });
      }
      out.expect(hs.value(d) == count, "series disagrees with counting, seed " + std::to_string(seed));
      ++values;
    }
    for (const auto& c : module.components) check_stable(c);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    check_stable(random_stable_ideal(static_cast<int>(seed % 3) + 1, 6, 6, seed));
  out.note << values << " Hilbert values, " << stable << " stable ideals";
}

void chern(Outcome& out) {
  for (long a = 1; a <= 5; ++a) {
    const NumPoly p = binomial_poly(3, 3) * Rational(2) - binomial_poly(3, 3 - a);
    const auto c = chern_from_hilbert(p, 3, 1);
    out.expect(c.c1 == a && c.c2 == a * a, "(c1, c2) = (a, a^2)");
    const std::vector<long> degs{0, 0};
    out.expect(check_chern_bound(p, 3, degs, 1).verdict == Verdict::sharp, "c2 = c1^2 sharp");
  }
  for (long n = 2; n <= 50; ++n) {
    const auto [lhs, rhs] = sum_ij_identity(n);
    out.expect(lhs == rhs, "pair sum identity at n = " + std::to_string(n));
  }
  out.note << "a = 1..5 sharp, pair sums n = 2..50";
}

void quot(Outcome& out) {
  long cases = 0;
  for (long k = 1; k <= 4; ++k)
    for (long m = 0; m <= 5; ++m) {
      const NumPoly p = poly({k + m, k});
      const std::vector<long> degs(5, 0);
      out.expect(static_cast<long>(adjusted_gotzmann_rep(p, 1, degs, k).adjusted_number()) == m, "P^1 adjusted = m");
      out.expect(static_cast<long>(gotzmann_number(p)) == k * (k + 1) / 2 + m, "P^1 standard = k(k+1)/2 + m");
      ++cases;
    }
  for (long k = 1; k <= 3; ++k)
    for (long m1 = 0; m1 <= 3; ++m1)
      for (long m2 = 0; m2 <= 3; ++m2) {
        const NumPoly p = binomial_poly(2, 2) * Rational(k) + poly({m1, m1}) + NumPoly(m2);
        const std::vector<long> degs(static_cast<std::size_t>(k + 1), 0);
        out.expect(static_cast<long>(adjusted_gotzmann_rep(p, 2, degs, k).adjusted_number()) ==
                       m1 * (m1 + 1) / 2 + m2,
                   "P^2 adjusted number");
        const long standard = k * (k + 1) * (3 * k * k - k + 10 + 12 * m1) / 24 + m1 * (m1 + 1) / 2 + m2;
        out.expect(static_cast<long>(gotzmann_number(p)) == standard, "P^2 standard number");
        ++cases;
      }
  long flagged = 0;
  for (long m = 0; m <= 5; ++m) {
    const NumPoly p = poly({3 + m, 3});
    const std::vector<long> degs(5, 0);
    const auto adj = grassmannian_embedding_dims(p, 1, degs, 3, GotzmannMode::adjusted);
    out.expect(adj.grass_dim == (3 + 4 * m) * (2 + m), "adjusted Grassmannian dimension");
    const auto std_dims = grassmannian_embedding_dims(p, 1, degs, 3, GotzmannMode::standard);
    out.expect(std_dims.grass_dim == (21 + 4 * m) * (14 + m), "standard dimension from direct count");
    if (std_dims.grass_dim != (21 + 4 * m) * (14 + 4 * m)) ++flagged;
  }
  out.note << cases << " parameter points; standard dimension (21+4m)(14+m) differs from the printed "
           << "(21+4m)(14+4m) for " << flagged << " of 6 values of m";
}

void combinatorics(Outcome& out) {
  for (long a = 0; a <= 200; ++a)
    for (long d = 1; d <= 4; ++d) {
      const auto all = oracle::macaulay_decompositions(a, d);
      const auto rep = macaulay_rep(a, d);
      bool same = all.size() == 1 && all[0].size() == rep.terms.size();
      for (std::size_t i = 0; same && i < rep.terms.size(); ++i) same = rep.terms[i].top == all[0][i];
      out.expect(same, "unique representation of " + std::to_string(a));
    }
  constexpr long kMax = 500;
  std::vector<std::vector<Integer>> mac(7), grn(7);
  for (long d = 1; d <= 6; ++d)
    for (long a = 0; a <= 2 * kMax; ++a) {
      mac[d].push_back(macaulay_transform(a, d));
      grn[d].push_back(green_transform(a, d));
    }
  long bad = 0;
  for (long d = 1; d <= 5; ++d)
    for (long a = 1; a <= kMax; ++a) {
      for (long b = 1; b <= kMax; ++b) {
        if (grn[d][a] + grn[d][b] > grn[d][a + b]) ++bad;
        if (mac[d][a] + mac[d][b] > mac[d][a + b]) ++bad;
        if (a <= b && mac[d][a] > mac[d][b]) ++bad;
      }
      if (grn[d + 1][a] > grn[d][a]) ++bad;
      if (mac[d + 1][a] > mac[d][a]) ++bad;
    }
  out.expect(bad == 0, std::to_string(bad) + " inequality failures");
  out.note << "uniqueness a <= 200, d <= 4; transform inequalities a, b <= 500, d <= 5";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"rank-and-degree adjusted representation of 2*C(d+3,2)", twisted_plane},
      {"motivating example over P^1 with three generators", line_module},
      {"adjusted Gotzmann regularity attained by lex modules", sharpness},
      {"zero-violation sweep", sweep},
      {"series and regularity oracles", oracles},
      {"Chern classes and c2 <= c1^2", chern},
      {"Quot embedding numbers", quot},
      {"combinatorics properties", combinatorics},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%s] %zu. %s (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                out.note.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
