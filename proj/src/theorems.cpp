#include "gotzrep/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"
#include "gotzrep/io.hpp"
#include "gotzrep/lex.hpp"
#include "gotzrep/resolution.hpp"

namespace gotzrep {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::sharp: return "sharp";
    case Verdict::violated: return "violated";
    case Verdict::premise_fails: return "premise_fails";
  }
  return "unknown";
}

Verdict compare_bound(const Integer& lhs, const Integer& rhs) {
  if (lhs < rhs) return Verdict::holds;
  if (lhs == rhs) return Verdict::sharp;
  return Verdict::violated;
}

namespace {

CheckReport make_report(std::string name, nlohmann::json instance, const Integer& lhs,
                        const Integer& rhs) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.instance = std::move(instance);
  rep.bound_lhs = lhs;
  rep.bound_rhs = rhs;
  rep.verdict = compare_bound(lhs, rhs);
  return rep;
}

// First index of the free block: components split.. m-1 carry binomial terms.
long free_split(const MonomialSubmodule& module) { return module.m() - rank(module); }

void require_adjusted_degree(const MonomialSubmodule& module, long d, const char* who) {
  const auto thr = adjusted_threshold_degree(module);
  if (thr && d < *thr + 1)
    throw PreconditionViolated(std::string(who) + ": need d >= f_{m-r} + 1 = " +
                               std::to_string(*thr + 1) + ", got " + std::to_string(d));
}

// Sum over the last r generator degrees of C(d - f + top, top).
Integer free_sum(const MonomialSubmodule& module, long d, long top) {
  Integer sum = 0;
  for (long i = free_split(module); i < module.m(); ++i)
    sum += binomial(d - module.ambient.degrees[static_cast<std::size_t>(i)] + top, top);
  return sum;
}

// Transform index d - f_{m-r}; with no torsion component rho is identically 0.
long transform_index(const MonomialSubmodule& module, long d) {
  const auto thr = adjusted_threshold_degree(module);
  return thr ? d - *thr : 1;
}

Integer adjusted_macaulay_rhs(const MonomialSubmodule& module, long d) {
  const auto dec = adjusted_hf_decomposition(module, d);
  return free_sum(module, d + 1, module.n()) +
         macaulay_transform(dec.rho, transform_index(module, d));
}

}  // namespace

CheckReport check_macaulay_adjusted(const MonomialSubmodule& module, long d) {
  require_adjusted_degree(module, d, "check_macaulay_adjusted");
  const auto dec = adjusted_hf_decomposition(module, d);
  const long index = transform_index(module, d);
  auto rep = make_report("macaulay_adjusted", to_json(module), hf_direct(module, d + 1),
                         free_sum(module, d + 1, module.n()) + macaulay_transform(dec.rho, index));
  rep.context = {{"d", d},
                 {"rank", rank(module)},
                 {"rho", to_json(dec.rho)},
                 {"free_part", to_json(dec.free_part)},
                 {"transform_index", index}};
  return rep;
}

CheckReport check_green_adjusted(const MonomialSubmodule& module, long d, std::uint64_t seed,
                                 int samples) {
  require_adjusted_degree(module, d, "check_green_adjusted");
  if (module.n() < 1) throw PreconditionViolated("check_green_adjusted: need n >= 1");
  const auto dec = adjusted_hf_decomposition(module, d);
  const long index = transform_index(module, d);
  auto rep = make_report("green_adjusted", to_json(module),
                         generic_hyperplane_hf(module, d, samples, seed),
                         free_sum(module, d, module.n() - 1) + green_transform(dec.rho, index));
  rep.context = {{"d", d},           {"rank", rank(module)},   {"rho", to_json(dec.rho)},
                 {"seed", seed},     {"samples", samples},     {"transform_index", index}};
  return rep;
}

CheckReport check_gasharov(const MonomialSubmodule& module, long d, long p, GasharovKind which,
                           std::uint64_t seed, int samples) {
  if (module.m() == 0) throw PreconditionViolated("check_gasharov: free module has rank 0");
  if (p < 0) throw PreconditionViolated("check_gasharov: p must be nonnegative");
  const long l = module.ambient.degrees.back();
  if (d < p + l + 1)
    throw PreconditionViolated("check_gasharov: need d >= p + f_m + 1 = " +
                               std::to_string(p + l + 1) + ", got " + std::to_string(d));
  const Integer h = hf_direct(module, d);
  const long index = d - l - p;
  CheckReport rep;
  if (which == GasharovKind::macaulay) {
    rep = make_report("gasharov_macaulay", to_json(module), hf_direct(module, d + 1),
                      macaulay_transform(h, index));
  } else {
    if (module.n() < 1) throw PreconditionViolated("check_gasharov: need n >= 1");
    rep = make_report("gasharov_green", to_json(module), generic_hyperplane_hf(module, d, samples, seed),
                      green_transform(h, index));
    rep.context["seed"] = seed;
  }
  rep.context["d"] = d;
  rep.context["p"] = p;
  rep.context["transform_index"] = index;
  return rep;
}

CheckReport check_persistence_adjusted(const MonomialSubmodule& module, long d, long horizon) {
  require_adjusted_degree(module, d, "check_persistence_adjusted");
  if (const auto top = module.max_generator_degree(); top && *top > d)
    throw PreconditionViolated("check_persistence_adjusted: N has a generator in degree " +
                               std::to_string(*top) + " > d = " + std::to_string(d));
  if (horizon < 1) throw PreconditionViolated("check_persistence_adjusted: horizon must be positive");

  CheckReport rep;
  rep.name = "persistence_adjusted";
  rep.instance = to_json(module);
  rep.context = {{"d", d}, {"horizon", horizon}};

  const Integer premise_lhs = hf_direct(module, d + 1);
  const Integer premise_rhs = adjusted_macaulay_rhs(module, d);
  rep.context["premise_lhs"] = to_json(premise_lhs);
  rep.context["premise_rhs"] = to_json(premise_rhs);
  if (premise_lhs != premise_rhs) {
    rep.bound_lhs = premise_lhs;
    rep.bound_rhs = premise_rhs;
    rep.premises_hold = false;
    rep.verdict = premise_lhs > premise_rhs ? Verdict::violated : Verdict::premise_fails;
    return rep;
  }

  // Conclusion at d + 2, then the chain H(M, t) for t up to d + horizon.
  const long last = std::max(d + 2, d + horizon);
  rep.verdict = Verdict::sharp;
  for (long e = d + 1; e + 1 <= last; ++e) {
    const Integer lhs = hf_direct(module, e + 1);
    const Integer rhs = adjusted_macaulay_rhs(module, e);
    if (e == d + 1) {
      rep.bound_lhs = lhs;
      rep.bound_rhs = rhs;
    }
    if (lhs != rhs) {
      rep.verdict = Verdict::violated;
      rep.context["failed_at"] = e + 1;
      rep.context["failed_in_extension"] = e > d + 1;
      break;
    }
  }
  rep.context["conclusion_degree"] = d + 2;
  rep.context["chain_through"] = last;
  rep.context["chain_is_extension"] = true;
  return rep;
}

CheckReport check_gotzmann_regularity_adjusted(const MonomialSubmodule& module) {
  if (module.m() == 0) throw PreconditionViolated("check_gotzmann_regularity_adjusted: rank-0 free module");
  const long r = rank(module);
  const auto thr = adjusted_threshold_degree(module);
  if (thr && *thr > 0)
    throw PreconditionViolated("check_gotzmann_regularity_adjusted: f_{m-r} = " +
                               std::to_string(*thr) + " > 0");
  const NumPoly p = hilbert_polynomial(module);
  const auto adj = adjusted_gotzmann_rep(p, module.n(), module.ambient.degrees, r);
  const long s = static_cast<long>(adj.adjusted_number());
  const long fm = module.ambient.degrees.back();
  const long bound = std::max(s, fm);

  CheckReport rep;
  rep.name = "gotzmann_regularity_adjusted";
  rep.instance = to_json(module);
  rep.bound_rhs = bound;
  const MonomialSubmodule sat = saturate(module);
  rep.context = {{"s", s}, {"f_m", fm}, {"rank", r}, {"hilbert_polynomial", to_json(p)}};
  if (sat.is_zero()) {
    // reg(0) = -infinity; the bound holds vacuously.
    rep.verdict = Verdict::holds;
    rep.context["zero_submodule"] = true;
    return rep;
  }
  const long reg = regularity(sat, BettiOf::submodule);
  rep.bound_lhs = reg;
  rep.verdict = compare_bound(reg, bound);
  return rep;
}

CheckReport check_sharpness(const NumPoly& p, const GradedFreeModule& f, long r) {
  const long m = f.rank();
  if (r < 0 || r >= m)
    throw PreconditionViolated("check_sharpness: need 0 <= r < m so that f_{m-r} exists");
  if (f.degrees[static_cast<std::size_t>(m - r - 1)] != 0)
    throw PreconditionViolated("check_sharpness: need f_{m-r} = 0");
  const auto adj = adjusted_gotzmann_rep(p, f.n, f.degrees, r);
  const long s = static_cast<long>(adj.adjusted_number());
  const long fm = f.degrees.back();
  if (s < fm) throw PreconditionViolated("check_sharpness: need s >= f_m");
  const MonomialSubmodule lex = saturated_lex_module(p, f, r);
  if (lex.is_zero()) throw PreconditionViolated("check_sharpness: lex module is zero");
  const long reg = regularity(lex, BettiOf::submodule);

  CheckReport rep;
  rep.name = "sharpness";
  rep.instance = {{"poly", to_json(p)}, {"module_shape", to_json(f)}, {"rank", r}};
  rep.bound_lhs = reg;
  rep.bound_rhs = std::max(s, fm);
  rep.verdict = reg == std::max(s, fm) ? Verdict::sharp : Verdict::violated;
  rep.context = {{"s", s}, {"lex_module", to_json(lex)}};
  return rep;
}

CheckReport check_adjusted_refines_classical(const MonomialSubmodule& module, long d) {
  require_adjusted_degree(module, d, "check_adjusted_refines_classical");
  if (module.m() == 0) throw PreconditionViolated("check_adjusted_refines_classical: rank-0 free module");
  const long l = module.ambient.degrees.back();
  if (d < l + 1)
    throw PreconditionViolated("check_adjusted_refines_classical: need d >= f_m + 1");
  auto rep = make_report("adjusted_refines_classical", to_json(module), adjusted_macaulay_rhs(module, d),
                         macaulay_transform(hf_direct(module, d), d - l));
  rep.context = {{"d", d}};
  return rep;
}

// ------------------------------------------------------------ generators

MonomialSubmodule random_submodule(const RandomSubmoduleSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const int n = static_cast<int>(uniform(1, spec.max_n));
  const long m = uniform(1, spec.max_m);
  std::vector<long> degrees(static_cast<std::size_t>(m));
  for (auto& f : degrees) f = uniform(spec.min_f, spec.max_f);
  std::sort(degrees.begin(), degrees.end());
  std::vector<MonomialIdeal> comps;
  for (long i = 0; i < m; ++i) {
    if (uniform(0, 3) == 0) {
      comps.push_back(MonomialIdeal::zero(n));
      continue;
    }
    const long count = uniform(1, spec.max_gens);
    std::vector<Monomial> gens;
    for (long g = 0; g < count; ++g) {
      std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
      const long deg = uniform(1, spec.max_deg);
      for (long k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(0, n))];
      gens.emplace_back(std::move(e));
    }
    comps.emplace_back(n, std::move(gens));
  }
  return MonomialSubmodule(GradedFreeModule(n, std::move(degrees)), std::move(comps));
}

MonomialIdeal random_stable_ideal(int n, int max_gens, int max_deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::set<Monomial> closure;
  std::vector<Monomial> todo;
  const long count = uniform(1, max_gens);
  for (long g = 0; g < count; ++g) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    const long deg = uniform(1, max_deg);
    for (long k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(0, n))];
    todo.emplace_back(std::move(e));
  }
  // Close under x_u -> x_j for j < u.
  while (!todo.empty()) {
    Monomial mono = std::move(todo.back());
    todo.pop_back();
    if (!closure.insert(mono).second) continue;
    for (int u = 1; u <= n; ++u) {
      if (mono[u] == 0) continue;
      for (int j = 0; j < u; ++j) todo.push_back(mono.colon_variable(u) * Monomial::variable(n, j));
    }
  }
  return MonomialIdeal(n, std::vector<Monomial>(closure.begin(), closure.end()));
}

GotzmannRep random_gotzmann_rep(std::size_t max_len, long max_value, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  GotzmannRep g;
  for (std::size_t i = 0; i < len; ++i)
    g.a.push_back(std::uniform_int_distribution<long>(0, max_value)(rng));
  std::sort(g.a.begin(), g.a.end(), std::greater<>());
  return g;
}

// ------------------------------------------------------------ sweep

namespace {

// Precondition failures skip the degree; any other error on a valid instance
// is recorded as a violation so it cannot go unnoticed.
template <typename F>
void try_check(std::vector<CheckReport>& out, const char* name, const MonomialSubmodule& module, F&& f) {
  try {
    out.push_back(f());
  } catch (const PreconditionViolated&) {
  } catch (const Error& e) {
    CheckReport rep;
    rep.name = name;
    rep.instance = to_json(module);
    rep.verdict = Verdict::violated;
    rep.context = {{"error", e.what()}};
    out.push_back(std::move(rep));
  }
}

std::vector<CheckReport> sweep_instance(const SweepOptions& options, std::size_t id) {
  const std::uint64_t seed = options.seed + id;
  const MonomialSubmodule module = random_submodule(options.spec, seed);
  std::vector<CheckReport> out;
  const auto thr = adjusted_threshold_degree(module);
  const long start = thr ? *thr + 1 : module.ambient.degrees.front();
  for (long d = start; d < start + options.window; ++d) {
    try_check(out, "macaulay_adjusted", module, [&] { return check_macaulay_adjusted(module, d); });
    try_check(out, "green_adjusted", module, [&] { return check_green_adjusted(module, d, seed, options.samples); });
    try_check(out, "adjusted_refines_classical", module, [&] { return check_adjusted_refines_classical(module, d); });
  }
  const long persist_start = std::max(start, module.max_generator_degree().value_or(start));
  for (long d = persist_start; d < persist_start + options.window; ++d)
    try_check(out, "persistence_adjusted", module, [&] { return check_persistence_adjusted(module, d, options.horizon); });
  try_check(out, "gotzmann_regularity_adjusted", module, [&] { return check_gotzmann_regularity_adjusted(module); });
  const long fm = module.ambient.degrees.back();
  for (long p = 0; p <= options.max_p; ++p)
    for (long d = p + fm + 1; d < p + fm + 1 + options.window; ++d) {
      try_check(out, "gasharov_macaulay", module, [&] { return check_gasharov(module, d, p, GasharovKind::macaulay, seed); });
      try_check(out, "gasharov_green", module, [&] {
        return check_gasharov(module, d, p, GasharovKind::green, seed, options.samples);
      });
    }
  for (auto& rep : out) rep.context["instance_id"] = id;
  return out;
}

}  // namespace

std::vector<CheckReport> run_sweep(const SweepOptions& options) {
  std::vector<std::vector<CheckReport>> per_instance(options.instances);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t id = next++; id < options.instances; id = next++)
      per_instance[id] = sweep_instance(options, id);
  };
  const unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<CheckReport> out;
  for (auto& chunk : per_instance)
    for (auto& rep : chunk) out.push_back(std::move(rep));
  return out;
}

}  // namespace gotzrep
