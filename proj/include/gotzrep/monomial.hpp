#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gotzrep/integer.hpp"
#include "gotzrep/numpoly.hpp"

namespace gotzrep {

/// Monomial in k[x_0, ..., x_n] as an exponent vector of length n + 1.
/// Ordered lexicographically with x_0 > x_1 > ... > x_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int n);
  static Monomial variable(int n, int index);

  const std::vector<int>& exponents() const { return exps_; }
  int num_vars() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  long degree() const;
  bool is_one() const;
  /// Largest index with a nonzero exponent, or -1 for 1.
  int last_variable() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// other / this; requires divisibility.
  Monomial quotient_of(const Monomial& other) const;
  /// m : x_i^k, lowering the exponent of x_i by up to k.
  Monomial colon_variable(int i, int k = 1) const;
  Monomial without_variable(int i) const;

  /// "x0^2*x1", or "1".
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// All monomials of the given degree in n + 1 variables, lex-descending
/// (so the first element is x_0^degree). Empty for negative degree.
std::vector<Monomial> monomials_of_degree(int n, long degree);

/// Monomial ideal of k[x_0, ..., x_n] kept as a minimal generating set sorted
/// by degree, then lex-descending. No generators is the zero ideal; the
/// generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int n, std::vector<Monomial> gens);
  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

  int n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  /// Largest generator degree; -1 for the zero ideal.
  long max_generator_degree() const;
  Monomial lcm_of_generators() const;

  MonomialIdeal plus(const MonomialIdeal& other) const;
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal colon_variable_infinity(int i) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// F = S e_1 + ... + S e_m over k[x_0, ..., x_n], deg e_i = degrees[i],
/// sorted ascending.
struct GradedFreeModule {
  int n = 0;
  std::vector<long> degrees;

  GradedFreeModule() = default;
  GradedFreeModule(int n, std::vector<long> degrees);
  long rank() const { return static_cast<long>(degrees.size()); }
  /// dim F_d
  Integer dim(long d) const;
};

/// N = I_1 e_1 + ... + I_m e_m inside F. The quotient is M = F / N.
struct MonomialSubmodule {
  GradedFreeModule ambient;
  std::vector<MonomialIdeal> components;

  MonomialSubmodule() = default;
  MonomialSubmodule(GradedFreeModule ambient, std::vector<MonomialIdeal> components);
  static MonomialSubmodule zero(const GradedFreeModule& f);

  int n() const { return ambient.n; }
  long m() const { return ambient.rank(); }
  long degree_of(std::size_t component) const { return ambient.degrees[component]; }
  bool is_zero() const;
  /// Largest degree of a minimal generator m e_i (deg m + f_i); nullopt when
  /// N = 0.
  std::optional<long> max_generator_degree() const;
};

/// Hilbert series sum_j c_j t^j / (1 - t)^(n+1), with numerator[i] the
/// coefficient of t^(low_degree + i).
struct HilbertSeries {
  std::vector<Integer> numerator;
  long low_degree = 0;
  int n = 0;

  Integer coefficient(long power) const;
  /// Highest power with a nonzero coefficient (low_degree - 1 if zero).
  long numerator_degree() const;
  /// Coefficient of t^d in the expansion.
  Integer value(long d) const;
};

Integer hf_direct(const MonomialSubmodule& module, long d);

struct SeriesOptions {
  std::size_t node_cap = 10'000;
  bool verify = true;
};

/// Numerator of the Hilbert series of S / I by pivot recursion.
std::vector<Integer> ideal_series_numerator(const MonomialIdeal& ideal,
                                            const SeriesOptions& options = {});

HilbertSeries hilbert_series(const MonomialSubmodule& module, const SeriesOptions& options = {});
NumPoly hilbert_polynomial(const MonomialSubmodule& module, const SeriesOptions& options = {});
long stabilization_degree(const MonomialSubmodule& module);

MonomialIdeal saturate(const MonomialIdeal& ideal);
MonomialSubmodule saturate(const MonomialSubmodule& module);

/// Number of zero components, i.e. the rank of F / N.
long rank(const MonomialSubmodule& module);

struct AdjustedDecomposition {
  Integer free_part;
  Integer rho;
};

AdjustedDecomposition adjusted_hf_decomposition(const MonomialSubmodule& module, long d);

/// f_{m-r} for r = rank(N), or nullopt when every component is zero.
std::optional<long> adjusted_threshold_degree(const MonomialSubmodule& module);

/// dim (F / (N + hF))_d for sampled random linear forms h, minimized over the
/// samples. Requires n >= 1.
Integer generic_hyperplane_hf(const MonomialSubmodule& module, long d, int samples,
                              std::uint64_t seed);

/// Same, for one given linear form (coefficients of x_0..x_n, not all zero).
Integer hyperplane_hf(const MonomialSubmodule& module, long d, std::span<const long> form);

}  // namespace gotzrep
