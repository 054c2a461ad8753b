#include "gotzrep/numpoly.hpp"

#include <algorithm>
#include <sstream>

#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"

namespace gotzrep {

NumPoly::NumPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

NumPoly::NumPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

void NumPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational NumPoly::coeff(long power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational NumPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational NumPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer NumPoly::value_at(long d) const {
  Rational v = (*this)(Rational(d));
  if (v.get_den() != 1)
    throw NotAdmissible("polynomial " + to_string() + " is not integer-valued at d=" +
                        std::to_string(d));
  return v.get_num();
}

bool NumPoly::is_numerical() const {
  for (long d = 0; d <= std::max(0L, degree()); ++d)
    if ((*this)(Rational(d)).get_den() != 1) return false;
  return true;
}

NumPoly NumPoly::shifted(long by) const {
  // Horner with the linear polynomial (d + by).
  NumPoly acc;
  const NumPoly lin(std::vector<Rational>{Rational(by), Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += NumPoly(std::vector<Rational>{*it});
  }
  return acc;
}

NumPoly& NumPoly::operator+=(const NumPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

NumPoly& NumPoly::operator-=(const NumPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

NumPoly& NumPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

NumPoly operator*(const NumPoly& a, const NumPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return NumPoly(std::move(out));
}

std::string NumPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long p = degree(); p >= 0; --p) {
    Rational c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    bool unit = (mag == 1);
    if (!unit || p == 0) os << mag.get_str();
    if (p > 0) {
      if (!unit) os << "*";
      os << "d";
      if (p > 1) os << "^" << p;
    }
    first = false;
  }
  return os.str();
}

NumPoly binomial_poly(long a, long shift) {
  if (a < 0) throw PreconditionViolated("binomial_poly: a must be nonnegative");
  // prod_{i=0}^{a-1} (d + shift - i) / a!
  NumPoly acc(1);
  Integer fact = 1;
  for (long i = 0; i < a; ++i) {
    acc = acc * NumPoly(std::vector<Rational>{Rational(shift - i), Rational(1)});
    fact *= (i + 1);
  }
  return acc * Rational(Integer(1), fact);
}

bool GotzmannRep::well_formed() const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return false;
    if (i > 0 && a[i] > a[i - 1]) return false;
  }
  return true;
}

NumPoly GotzmannRep::polynomial() const {
  NumPoly sum;
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      ++zeros;  // C(d - i, 0) = 1
      continue;
    }
    sum += binomial_poly(a[i], a[i] - static_cast<long>(i));
  }
  sum += NumPoly(std::vector<Rational>{Rational(Integer(zeros))});
  return sum;
}

GotzmannRep gotzmann_rep(const NumPoly& p, const GotzmannOptions& options) {
  if (!p.is_numerical())
    throw NotAdmissible("polynomial " + p.to_string() + " is not numerical");
  GotzmannRep rep;
  NumPoly rest = p;
  long prev = -1;
  while (!rest.is_zero()) {
    if (rest.leading() < 0)
      throw NotAdmissible("Gotzmann peeling of " + p.to_string() +
                          " reaches remainder " + rest.to_string() +
                          " with negative leading coefficient");
    const long a = rest.degree();
    if (prev >= 0 && a > prev)
      throw NotAdmissible("Gotzmann peeling of " + p.to_string() + " would increase the a-sequence");
    if (a == 0) {
      // Positive integer constant c contributes c trailing zeros.
      const Integer c = rest.leading().get_num();
      if (c > Integer(static_cast<unsigned long>(options.max_terms - rep.a.size())))
        throw OutOfRange("Gotzmann representation exceeds " + std::to_string(options.max_terms) +
                         " terms");
      rep.a.insert(rep.a.end(), c.get_ui(), 0L);
      break;
    }
    if (rep.a.size() >= options.max_terms)
      throw OutOfRange("Gotzmann representation exceeds " + std::to_string(options.max_terms) +
                       " terms");
    rest -= binomial_poly(a, a - static_cast<long>(rep.a.size()));
    rep.a.push_back(a);
    prev = a;
  }
  return rep;
}

std::size_t gotzmann_number(const NumPoly& p, const GotzmannOptions& options) {
  return gotzmann_rep(p, options).size();
}

NumPoly AdjustedGotzmannRep::polynomial() const {
  NumPoly sum = q.polynomial();
  for (long f : free_degrees) sum += binomial_poly(n, n - f);
  return sum;
}

AdjustedGotzmannRep adjusted_gotzmann_rep(const NumPoly& p, long n, std::span<const long> degrees,
                                          long r, const GotzmannOptions& options) {
  const long m = static_cast<long>(degrees.size());
  if (n < 0) throw PreconditionViolated("adjusted_gotzmann_rep: n must be nonnegative");
  if (r < 0 || r > m)
    throw PreconditionViolated("adjusted_gotzmann_rep: rank " + std::to_string(r) +
                               " outside [0, " + std::to_string(m) + "]");
  if (!std::is_sorted(degrees.begin(), degrees.end()))
    throw PreconditionViolated("adjusted_gotzmann_rep: degrees must be sorted ascending");
  if (m - r >= 1 && degrees[static_cast<std::size_t>(m - r - 1)] > 0)
    throw PreconditionViolated("adjusted_gotzmann_rep: f_{m-r} = " +
                               std::to_string(degrees[static_cast<std::size_t>(m - r - 1)]) +
                               " must be <= 0");
  AdjustedGotzmannRep out;
  out.n = n;
  out.free_degrees.assign(degrees.end() - r, degrees.end());
  out.remainder = p;
  for (long f : out.free_degrees) out.remainder -= binomial_poly(n, n - f);
  out.q = gotzmann_rep(out.remainder, options);
  return out;
}

EmbeddingDims grassmannian_embedding_dims(const NumPoly& p, long n, std::span<const long> degrees,
                                          long r, GotzmannMode mode) {
  const std::size_t s = mode == GotzmannMode::adjusted
                            ? adjusted_gotzmann_rep(p, n, degrees, r).adjusted_number()
                            : gotzmann_number(p);
  const long sl = static_cast<long>(s);
  EmbeddingDims out;
  out.s = Integer(static_cast<unsigned long>(s));
  out.ambient_dim = 0;
  for (long f : degrees) out.ambient_dim += binomial(sl - f + n, n);
  out.sub_dim = p.value_at(sl);
  if (out.sub_dim > out.ambient_dim)
    throw NotAdmissible("P(s) = " + out.sub_dim.get_str() + " exceeds dim F_s = " +
                        out.ambient_dim.get_str());
  if (out.sub_dim < 0) throw NotAdmissible("P(s) is negative");
  out.grass_dim = out.sub_dim * (out.ambient_dim - out.sub_dim);
  return out;
}

NumPoly series_to_polynomial(std::span<const Integer> numerator, long n, long low_degree) {
  NumPoly sum;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    const long j = low_degree + static_cast<long>(i);
    sum += binomial_poly(n, n - j) * Rational(numerator[i]);
  }
  return sum;
}

}  // namespace gotzrep
