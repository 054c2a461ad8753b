#include "gotzrep/lex.hpp"

#include <algorithm>

#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"

namespace gotzrep {

std::vector<Monomial> lex_segment(int n, long d, const Integer& c) {
  const Integer total = d < 0 ? Integer(0) : binomial(d + n, n);
  if (c < 0 || c > total)
    throw OutOfRange("lex segment size " + c.get_str() + " outside [0, " + total.get_str() + "]");
  auto all = monomials_of_degree(n, d);
  all.resize(c.get_ui());
  return all;
}

Integer HilbertFunctionSpec::value(long d) const {
  if (table.empty()) return tail.value_at(d);
  if (d < table.front().first) return 0;
  if (d > table.back().first) return tail.value_at(d);
  return table[static_cast<std::size_t>(d - table.front().first)].second;
}

std::optional<long> HilbertFunctionSpec::last_degree() const {
  if (table.empty()) return std::nullopt;
  return table.back().first;
}

MonomialSubmodule lexify(const GradedFreeModule& f, const HilbertFunctionSpec& h,
                         const LexifyOptions& options) {
  for (std::size_t i = 1; i < h.table.size(); ++i)
    if (h.table[i].first != h.table[i - 1].first + 1)
      throw PreconditionViolated("Hilbert function table degrees must be consecutive");
  const long m = f.rank();
  const int n = f.n;
  if (m == 0) {
    if (!h.tail.is_zero()) throw NotAchievable("zero free module has zero Hilbert function");
    return MonomialSubmodule(f, {});
  }
  const long first = f.degrees.front();
  if (!h.table.empty() && h.table.front().first < first)
    for (const auto& [d, v] : h.table)
      if (d < first && v != 0)
        throw NotAchievable("H(" + std::to_string(d) + ") = " + v.get_str() +
                            " below the lowest generator degree");
  const long settle = std::max(h.last_degree().value_or(first), f.degrees.back()) + 1;

  std::vector<std::vector<Monomial>> gens(static_cast<std::size_t>(m));
  // Previous degree's chosen monomials per component.
  std::vector<std::vector<Monomial>> prev(static_cast<std::size_t>(m));

  for (long d = first; d <= settle + options.max_extra_degrees; ++d) {
    const Integer dim = f.dim(d);
    const Integer target = h.value(d);
    if (target < 0 || target > dim)
      throw NotAchievable("H(" + std::to_string(d) + ") = " + target.get_str() +
                          " outside [0, dim F_d = " + dim.get_str() + "]");
    Integer remaining = dim - target;
    bool new_generators = false;
    for (long i = 0; i < m; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const long e = d - f.degrees[idx];
      const Integer available = e < 0 ? Integer(0) : binomial(e + n, n);
      const Integer take = std::min(available, remaining);
      remaining -= take;
      auto chosen = lex_segment(n, e < 0 ? 0 : e, e < 0 ? Integer(0) : take);

      // The part generated by the previous degree must lie in the segment.
      std::vector<Monomial> generated;
      for (const auto& mono : prev[idx])
        for (int v = 0; v <= n; ++v) generated.push_back(mono * Monomial::variable(n, v));
      std::sort(generated.begin(), generated.end());
      generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
      std::vector<Monomial> sorted_chosen = chosen;
      std::sort(sorted_chosen.begin(), sorted_chosen.end());
      if (!std::includes(sorted_chosen.begin(), sorted_chosen.end(), generated.begin(), generated.end()))
        throw NotAchievable("lex segment in degree " + std::to_string(d) +
                            " does not contain the submodule generated below it");
      for (const auto& mono : chosen)
        if (!std::binary_search(generated.begin(), generated.end(), mono)) {
          gens[idx].push_back(mono);
          new_generators = true;
        }
      prev[idx] = std::move(chosen);
    }

    if (d < settle || new_generators) continue;
    std::vector<MonomialIdeal> comps;
    for (long i = 0; i < m; ++i) comps.emplace_back(n, gens[static_cast<std::size_t>(i)]);
    MonomialSubmodule current(f, std::move(comps));
    SeriesOptions quick;
    quick.verify = false;
    if (hilbert_polynomial(current, quick) != h.tail) continue;
    const long check_to = std::max(d, stabilization_degree(current)) + 5;
    bool agrees = true;
    for (long e = first; e <= check_to && agrees; ++e) agrees = hf_direct(current, e) == h.value(e);
    if (agrees) return current;
  }
  throw NotAchievable("lex construction did not settle within " +
                      std::to_string(options.max_extra_degrees) + " degrees past the table");
}

bool is_lex_ideal(const MonomialIdeal& ideal, long up_to) {
  for (long d = 0; d <= up_to; ++d) {
    bool outside = false;
    for (const auto& mono : monomials_of_degree(ideal.n(), d)) {
      const bool in = ideal.contains(mono);
      if (in && outside) return false;
      if (!in) outside = true;
    }
  }
  return true;
}

bool is_lex_submodule(const MonomialSubmodule& module, long up_to) {
  const long m = module.m();
  if (m == 0) return true;
  for (long d = module.ambient.degrees.front(); d <= up_to; ++d) {
    bool outside = false;
    for (long i = 0; i < m; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      for (const auto& mono : monomials_of_degree(module.n(), d - module.ambient.degrees[idx])) {
        const bool in = module.components[idx].contains(mono);
        if (in && outside) return false;
        if (!in) outside = true;
      }
    }
  }
  return true;
}

MonomialIdeal saturated_lex_ideal(const GotzmannRep& g, int n) {
  if (!g.well_formed()) throw PreconditionViolated("Gotzmann representation is not non-increasing");
  const long s = static_cast<long>(g.size());
  const NumPoly p = g.polynomial();
  const Integer size = binomial(s + n, n) - p.value_at(s);
  std::vector<Monomial> segment;
  try {
    segment = lex_segment(n, s, size);
  } catch (const OutOfRange&) {
    throw OutOfRange("Gotzmann representation with P(s) = " + p.value_at(s).get_str() +
                     " is not realizable in " + std::to_string(n + 1) + " variables");
  }
  MonomialIdeal out = saturate(MonomialIdeal(n, std::move(segment)));
  SeriesOptions quick;
  quick.verify = false;
  if (hilbert_polynomial(MonomialSubmodule(GradedFreeModule(n, {0}), {out}), quick) != p)
    throw InvariantViolated("saturated lex ideal has the wrong Hilbert polynomial");
  return out;
}

MonomialSubmodule saturated_lex_module(const NumPoly& p, const GradedFreeModule& f, long r) {
  const AdjustedGotzmannRep adj = adjusted_gotzmann_rep(p, f.n, f.degrees, r);
  const long m = f.rank();
  const long split = m - r;
  std::vector<MonomialIdeal> comps(static_cast<std::size_t>(m), MonomialIdeal::zero(f.n));
  if (split == 0) {
    if (!adj.remainder.is_zero())
      throw NotAdmissible("rank " + std::to_string(r) + " leaves remainder " +
                          adj.remainder.to_string() + " but no torsion component");
    return MonomialSubmodule(f, std::move(comps));
  }
  for (long i = 0; i + 1 < split; ++i) comps[static_cast<std::size_t>(i)] = MonomialIdeal::unit(f.n);
  // The e_{m-r} summand S(-f)/J contributes P_{S/J}(d - f); it must equal Q(d).
  const long shift = f.degrees[static_cast<std::size_t>(split - 1)];
  const GotzmannRep g = gotzmann_rep(adj.remainder.shifted(shift));
  comps[static_cast<std::size_t>(split - 1)] = saturated_lex_ideal(g, f.n);
  MonomialSubmodule out(f, std::move(comps));
  SeriesOptions quick;
  quick.verify = false;
  if (hilbert_polynomial(out, quick) != p)
    throw InvariantViolated("saturated lex module has the wrong Hilbert polynomial");
  return out;
}

}  // namespace gotzrep
