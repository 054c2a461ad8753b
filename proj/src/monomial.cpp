#include "gotzrep/monomial.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <random>
#include <sstream>

#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"
#include "gotzrep/linalg.hpp"

namespace gotzrep {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw PreconditionViolated("monomial exponents must be nonnegative");
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n + 1), 0)); }

Monomial Monomial::variable(int n, int index) {
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  return Monomial(std::move(e));
}

long Monomial::degree() const {
  long d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::last_variable() const {
  for (int i = num_vars() - 1; i >= 0; --i)
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::colon_variable(int i, int k) const {
  std::vector<int> e = exps_;
  auto& x = e.at(static_cast<std::size_t>(i));
  x = std::max(0, x - k);
  return Monomial(std::move(e));
}

Monomial Monomial::without_variable(int i) const {
  std::vector<int> e = exps_;
  e.at(static_cast<std::size_t>(i)) = 0;
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (exps_[i] > 1) os << '^' << exps_[i];
    first = false;
  }
  return first ? "1" : os.str();
}

namespace {

void enumerate(int vars, long degree, std::vector<int>& prefix, std::vector<Monomial>& out) {
  const auto pos = prefix.size();
  if (static_cast<int>(pos) == vars - 1) {
    prefix.push_back(static_cast<int>(degree));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long e = degree; e >= 0; --e) {
    prefix.push_back(static_cast<int>(e));
    enumerate(vars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, long degree) {
  std::vector<Monomial> out;
  if (degree < 0 || n < 0) return out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n + 1));
  enumerate(n + 1, degree, prefix, out);
  return out;
}

// ----------------------------------------------------------- MonomialIdeal

namespace {

bool generator_order(const Monomial& a, const Monomial& b) {
  const long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), generator_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  if (n < 0) throw PreconditionViolated("ring needs at least one variable");
  for (const auto& g : gens)
    if (g.num_vars() != n + 1)
      throw PreconditionViolated("monomial " + g.to_string() + " has " +
                                 std::to_string(g.num_vars()) + " variables, expected " +
                                 std::to_string(n + 1));
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

long MonomialIdeal::max_generator_degree() const {
  long best = -1;
  for (const auto& g : gens_) best = std::max(best, g.degree());
  return best;
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial acc = Monomial::one(n_);
  for (const auto& g : gens_) acc = acc.lcm(g);
  return acc;
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& other) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(n_, std::move(all));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) {
    std::vector<int> e(g.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(0, e[i] - m[static_cast<int>(i)]);
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal(n_, std::move(out));
}

MonomialIdeal MonomialIdeal::colon_variable_infinity(int i) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.without_variable(i));
  return MonomialIdeal(n_, std::move(out));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) out.push_back(a.lcm(b));
  return MonomialIdeal(n_, std::move(out));
}

// ------------------------------------------------------- modules

GradedFreeModule::GradedFreeModule(int n_, std::vector<long> degrees_)
    : n(n_), degrees(std::move(degrees_)) {
  if (n < 0) throw PreconditionViolated("ring needs at least one variable");
  if (!std::is_sorted(degrees.begin(), degrees.end()))
    throw PreconditionViolated("free module degrees must be sorted ascending");
}

Integer GradedFreeModule::dim(long d) const {
  Integer sum = 0;
  for (long f : degrees) sum += binomial(d - f + n, n);
  return sum;
}

MonomialSubmodule::MonomialSubmodule(GradedFreeModule ambient_, std::vector<MonomialIdeal> components_)
    : ambient(std::move(ambient_)), components(std::move(components_)) {
  if (static_cast<long>(components.size()) != ambient.rank())
    throw PreconditionViolated("submodule has " + std::to_string(components.size()) +
                               " components but the free module has rank " +
                               std::to_string(ambient.rank()));
  for (const auto& c : components)
    if (c.n() != ambient.n) throw PreconditionViolated("component ideal lives in a different ring");
}

MonomialSubmodule MonomialSubmodule::zero(const GradedFreeModule& f) {
  return MonomialSubmodule(f, std::vector<MonomialIdeal>(f.degrees.size(), MonomialIdeal::zero(f.n)));
}

bool MonomialSubmodule::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.is_zero(); });
}

std::optional<long> MonomialSubmodule::max_generator_degree() const {
  std::optional<long> best;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    const long d = components[i].max_generator_degree() + ambient.degrees[i];
    if (!best || d > *best) best = d;
  }
  return best;
}

// ------------------------------------------------------- Hilbert functions

Integer HilbertSeries::coefficient(long power) const {
  const long i = power - low_degree;
  if (i < 0 || i >= static_cast<long>(numerator.size())) return 0;
  return numerator[static_cast<std::size_t>(i)];
}

long HilbertSeries::numerator_degree() const {
  for (long i = static_cast<long>(numerator.size()) - 1; i >= 0; --i)
    if (numerator[static_cast<std::size_t>(i)] != 0) return low_degree + i;
  return low_degree - 1;
}

Integer HilbertSeries::value(long d) const {
  Integer sum = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const long j = low_degree + static_cast<long>(i);
    if (numerator[i] != 0) sum += numerator[i] * binomial(d - j + n, n);
  }
  return sum;
}

Integer hf_direct(const MonomialSubmodule& module, long d) {
  Integer total = 0;
  const int n = module.n();
  for (std::size_t i = 0; i < module.components.size(); ++i) {
    const long e = d - module.degree_of(i);
    if (e < 0) continue;
    const auto& ideal = module.components[i];
    if (ideal.is_zero()) {
      total += binomial(e + n, n);
      continue;
    }
    unsigned long count = 0;
    for (const auto& mono : monomials_of_degree(n, e))
      if (!ideal.contains(mono)) ++count;
    total += count;
  }
  return total;
}

namespace {

using TPoly = std::vector<Integer>;

void add_shifted(TPoly& acc, const TPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

TPoly multiply(const TPoly& a, const TPoly& b) {
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::vector<int> used(static_cast<std::size_t>(gens.front().num_vars()), 0);
  for (const auto& g : gens)
    for (int v = 0; v < g.num_vars(); ++v)
      if (g[v] > 0 && used[static_cast<std::size_t>(v)]++) return false;
  return true;
}

class PivotRecursion {
 public:
  explicit PivotRecursion(std::size_t cap) : cap_(cap) {}

  TPoly run(const MonomialIdeal& ideal) {
    if (++nodes_ > cap_)
      throw RecursionLimit("Hilbert series recursion exceeded " + std::to_string(cap_) + " nodes");
    const auto& gens = ideal.gens();
    if (gens.empty()) return {1};
    if (ideal.is_unit()) return {0};
    if (pairwise_coprime(gens)) {
      TPoly acc{1};
      for (const auto& g : gens) {
        TPoly factor(static_cast<std::size_t>(g.degree()) + 1);
        factor.front() = 1;
        factor.back() = -1;
        acc = multiply(acc, factor);
      }
      return acc;
    }
    const int pivot = choose_pivot(ideal);
    const Monomial x = Monomial::variable(ideal.n(), pivot);
    TPoly out = run(ideal.plus(MonomialIdeal(ideal.n(), {x})));
    add_shifted(out, run(ideal.colon(x)), 1);
    return out;
  }

 private:
  // Most frequent variable among generators; ties to the lowest index. A
  // variable that is itself a generator occurs in no other generator and
  // would not split the ideal, so it is skipped.
  static int choose_pivot(const MonomialIdeal& ideal) {
    const int vars = ideal.n() + 1;
    std::vector<int> freq(static_cast<std::size_t>(vars), 0);
    std::vector<bool> is_gen(static_cast<std::size_t>(vars), false);
    for (const auto& g : ideal.gens()) {
      if (g.degree() == 1) is_gen[static_cast<std::size_t>(g.last_variable())] = true;
      for (int v = 0; v < vars; ++v)
        if (g[v] > 0) ++freq[static_cast<std::size_t>(v)];
    }
    int best = -1;
    for (int v = 0; v < vars; ++v) {
      if (is_gen[static_cast<std::size_t>(v)] || freq[static_cast<std::size_t>(v)] == 0) continue;
      if (best < 0 || freq[static_cast<std::size_t>(v)] > freq[static_cast<std::size_t>(best)]) best = v;
    }
    return best;
  }

  std::size_t cap_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Integer> ideal_series_numerator(const MonomialIdeal& ideal, const SeriesOptions& options) {
  TPoly out = PivotRecursion(options.node_cap).run(ideal);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

HilbertSeries hilbert_series(const MonomialSubmodule& module, const SeriesOptions& options) {
  HilbertSeries hs;
  hs.n = module.n();
  const auto& degrees = module.ambient.degrees;
  hs.low_degree = degrees.empty() ? 0 : degrees.front();
  for (std::size_t i = 0; i < module.components.size(); ++i) {
    const TPoly part = ideal_series_numerator(module.components[i], options);
    add_shifted(hs.numerator, part, static_cast<std::size_t>(degrees[i] - hs.low_degree));
  }
  while (!hs.numerator.empty() && hs.numerator.back() == 0) hs.numerator.pop_back();

  if (options.verify) {
    const long top = hs.numerator_degree() + hs.n + 2;
    for (long d = hs.low_degree - 1; d <= top; ++d)
      if (hs.value(d) != hf_direct(module, d))
        throw InvariantViolated("Hilbert series disagrees with direct count at d=" + std::to_string(d));
  }
  return hs;
}

NumPoly hilbert_polynomial(const MonomialSubmodule& module, const SeriesOptions& options) {
  const HilbertSeries hs = hilbert_series(module, options);
  return series_to_polynomial(hs.numerator, hs.n, hs.low_degree);
}

long stabilization_degree(const MonomialSubmodule& module) {
  const HilbertSeries hs = hilbert_series(module);
  const NumPoly p = series_to_polynomial(hs.numerator, hs.n, hs.low_degree);
  const long floor = hs.low_degree - hs.n - 1;
  long d = std::max(hs.numerator_degree() - hs.n + 1, floor);
  while (d - 1 >= floor && Rational(hf_direct(module, d - 1)) == p(Rational(d - 1))) --d;
  return d;
}

// ------------------------------------------------------- saturation, rank

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  MonomialIdeal acc = ideal.colon_variable_infinity(0);
  for (int v = 1; v <= ideal.n(); ++v) acc = acc.intersect(ideal.colon_variable_infinity(v));
  return acc;
}

MonomialSubmodule saturate(const MonomialSubmodule& module) {
  std::vector<MonomialIdeal> comps;
  comps.reserve(module.components.size());
  for (const auto& c : module.components) comps.push_back(saturate(c));
  return MonomialSubmodule(module.ambient, std::move(comps));
}

long rank(const MonomialSubmodule& module) {
  return static_cast<long>(std::count_if(module.components.begin(), module.components.end(),
                                         [](const auto& c) { return c.is_zero(); }));
}

std::optional<long> adjusted_threshold_degree(const MonomialSubmodule& module) {
  const long split = module.m() - rank(module);
  if (split < 1) return std::nullopt;
  return module.ambient.degrees[static_cast<std::size_t>(split - 1)];
}

AdjustedDecomposition adjusted_hf_decomposition(const MonomialSubmodule& module, long d) {
  const long m = module.m();
  const long split = m - rank(module);
  const int n = module.n();
  AdjustedDecomposition out;
  out.free_part = 0;
  Integer window = 0;
  for (long i = 0; i < m; ++i) {
    Integer b = binomial(d - module.ambient.degrees[static_cast<std::size_t>(i)] + n, n);
    if (i >= split)
      out.free_part += b;
    else
      window += b;
  }
  out.rho = hf_direct(module, d) - out.free_part;
  if (out.rho < 0 || out.rho > window)
    throw InvariantViolated("rho_" + std::to_string(d) + " = " + out.rho.get_str() +
                            " outside [0, " + window.get_str() + "]");
  return out;
}

// ------------------------------------------------------- hyperplane sections

namespace {

using SparsePoly = std::map<std::vector<int>, Integer>;

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// dim (S / (I + h))_e, computed in S / (h) ~ k[remaining n variables] by
// substituting for the last variable with a nonzero coefficient in h.
Integer section_dimension(const MonomialIdeal& ideal, long e, std::span<const long> form) {
  const int n = ideal.n();
  if (e < 0 || ideal.is_unit()) return 0;
  if (ideal.is_zero()) return binomial(e + n - 1, n - 1);

  int pivot = n;
  while (form[static_cast<std::size_t>(pivot)] == 0) --pivot;

  // Integer multiple of the image of x_pivot: -sum_{j != pivot} c_j y_j.
  SparsePoly linear;
  for (int j = 0, col = 0; j <= n; ++j) {
    if (j == pivot) continue;
    if (form[static_cast<std::size_t>(j)] != 0) {
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      exps[static_cast<std::size_t>(col)] = 1;
      linear[exps] = -form[static_cast<std::size_t>(j)];
    }
    ++col;
  }
  std::vector<SparsePoly> powers{SparsePoly{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}}};

  const auto rows = monomials_of_degree(n - 1, e);
  std::map<std::vector<int>, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i].exponents()] = i;

  std::vector<SparsePoly> columns;
  for (const auto& g : ideal.gens()) {
    if (g.degree() > e) continue;
    const int k = g[pivot];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(multiply(powers.back(), linear));
    std::vector<int> rest;
    for (int j = 0; j <= n; ++j)
      if (j != pivot) rest.push_back(g[j]);
    SparsePoly image;
    for (const auto& [exps, c] : powers[static_cast<std::size_t>(k)]) {
      std::vector<int> sum(exps);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rest[i];
      image[sum] += c;
    }
    for (const auto& u : monomials_of_degree(n - 1, e - g.degree())) {
      SparsePoly col;
      for (const auto& [exps, c] : image) {
        std::vector<int> sum(exps);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += u[static_cast<int>(i)];
        col[sum] = c;
      }
      columns.push_back(std::move(col));
    }
  }
  if (columns.empty()) return Integer(static_cast<unsigned long>(rows.size()));

  IntMatrix mat(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [exps, v] : columns[c]) mat(row_index.at(exps), c) = v;
  return Integer(static_cast<unsigned long>(rows.size() - exact_rank(mat)));
}

}  // namespace

Integer hyperplane_hf(const MonomialSubmodule& module, long d, std::span<const long> form) {
  const int n = module.n();
  if (n < 1) throw PreconditionViolated("hyperplane sections need n >= 1");
  if (static_cast<int>(form.size()) != n + 1)
    throw PreconditionViolated("linear form needs " + std::to_string(n + 1) + " coefficients");
  if (std::all_of(form.begin(), form.end(), [](long c) { return c == 0; }))
    throw PreconditionViolated("linear form is zero");
  Integer total = 0;
  for (std::size_t i = 0; i < module.components.size(); ++i)
    total += section_dimension(module.components[i], d - module.degree_of(i), form);
  return total;
}

Integer generic_hyperplane_hf(const MonomialSubmodule& module, long d, int samples, std::uint64_t seed) {
  if (samples < 1) throw PreconditionViolated("need at least one hyperplane sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-100, 100);
  std::optional<Integer> best;
  std::vector<long> form(static_cast<std::size_t>(module.n() + 1));
  for (int s = 0; s < samples; ++s) {
    do {
      for (auto& c : form) c = coef(rng);
    } while (std::all_of(form.begin(), form.end(), [](long c) { return c == 0; }));
    Integer v = hyperplane_hf(module, d, form);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

}  // namespace gotzrep
