#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gotzrep/integer.hpp"

namespace gotzrep {

/// Univariate polynomial in d with exact rational coefficients, stored densely
/// (index = power of d). Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients.
class NumPoly {
 public:
  NumPoly() = default;
  explicit NumPoly(std::vector<Rational> coeffs);
  NumPoly(long constant);  // NOLINT(google-explicit-constructor)

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(long power) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  /// Value at an integer argument; throws NotAdmissible if not an integer.
  Integer value_at(long d) const;
  /// Integer-valued on all integers (checked at deg + 1 consecutive points).
  bool is_numerical() const;
  /// The polynomial d -> P(d + by).
  NumPoly shifted(long by) const;

  NumPoly& operator+=(const NumPoly& other);
  NumPoly& operator-=(const NumPoly& other);
  NumPoly& operator*=(const Rational& scalar);

  friend NumPoly operator+(NumPoly a, const NumPoly& b) { return a += b; }
  friend NumPoly operator-(NumPoly a, const NumPoly& b) { return a -= b; }
  friend NumPoly operator*(NumPoly a, const Rational& s) { return a *= s; }
  friend NumPoly operator*(const NumPoly& a, const NumPoly& b);
  friend bool operator==(const NumPoly&, const NumPoly&) = default;

  /// Human-readable form, e.g. "1/2*d^2 + 5/2*d + 3".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// C(d + shift, a) expanded as a polynomial in d (polynomial convention).
NumPoly binomial_poly(long a, long shift);

/// P(d) = C(d + a_1, a_1) + C(d + a_2 - 1, a_2) + ... + C(d + a_s - (s-1), a_s)
/// with a_1 >= ... >= a_s >= 0. The length s is the Gotzmann number.
struct GotzmannRep {
  std::vector<long> a;

  std::size_t size() const { return a.size(); }
  bool well_formed() const;
  NumPoly polynomial() const;

  friend bool operator==(const GotzmannRep&, const GotzmannRep&) = default;
};

struct GotzmannOptions {
  /// Guards runaway constants: at most this many terms are produced.
  std::size_t max_terms = 1'000'000;
};

/// Greedy peeling; throws NotAdmissible when no representation exists.
GotzmannRep gotzmann_rep(const NumPoly& p, const GotzmannOptions& options = {});
std::size_t gotzmann_number(const NumPoly& p, const GotzmannOptions& options = {});

/// P(d) = sum over the last r generator degrees f of C(d - f + n, n) + Q(d),
/// with Q Gotzmann-represented.
struct AdjustedGotzmannRep {
  std::vector<long> free_degrees;
  long n = 0;
  NumPoly remainder;
  GotzmannRep q;

  std::size_t adjusted_number() const { return q.size(); }
  NumPoly polynomial() const;
};

/// `degrees` must be sorted ascending; 0 <= r <= degrees.size(). Throws
/// PreconditionViolated when f_{m-r} > 0 and NotAdmissible when the remainder
/// has no Gotzmann representation.
AdjustedGotzmannRep adjusted_gotzmann_rep(const NumPoly& p, long n,
                                          std::span<const long> degrees, long r,
                                          const GotzmannOptions& options = {});

enum class GotzmannMode { standard, adjusted };

struct EmbeddingDims {
  Integer s;
  Integer ambient_dim;
  Integer sub_dim;
  Integer grass_dim;
};

/// Dimensions for embedding the quotients with Hilbert polynomial P of the
/// free module with the given generator degrees into a Grassmannian of
/// subspaces of F_s.
EmbeddingDims grassmannian_embedding_dims(const NumPoly& p, long n,
                                          std::span<const long> degrees, long r,
                                          GotzmannMode mode);

/// Polynomial sum_j c_j * C(d - j + n, n) for the Hilbert series
/// sum_j c_j t^j / (1 - t)^(n+1), where numerator[i] is the coefficient of
/// t^(low_degree + i).
NumPoly series_to_polynomial(std::span<const Integer> numerator, long n,
                             long low_degree = 0);

}  // namespace gotzrep
