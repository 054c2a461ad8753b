#include "gotzrep/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace gotzrep {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mul_mod(acc, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t reduce(const Integer& x) {
  static const Integer p(std::to_string(kPrime));
  Integer r = x % p;
  if (r < 0) r += p;
  return std::stoull(r.get_str());
}

}  // namespace

std::size_t rank_mod_prime(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Integer& v = m(r, c);
      if (v.fits_slong_p()) {
        long s = v.get_si();
        if (s >= 0) {
          a[r * cols + c] = static_cast<std::uint64_t>(s) % kPrime;
        } else {
          std::uint64_t u = (static_cast<std::uint64_t>(-(s + 1)) + 1) % kPrime;
          a[r * cols + c] = u == 0 ? 0 : kPrime - u;
        }
      } else {
        a[r * cols + c] = reduce(v);
      }
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
    const std::uint64_t inv = pow_mod(a[rank * cols + c], kPrime - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t f = a[r * cols + c];
      if (f == 0) continue;
      f = mul_mod(f, inv);
      for (std::size_t k = c; k < cols; ++k) {
        std::uint64_t sub = mul_mod(f, a[rank * cols + k]);
        std::uint64_t& x = a[r * cols + k];
        x = x >= sub ? x - sub : x + kPrime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_bareiss(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < cols; ++k) swap(m(piv, k), m(rank, k));
    const Integer pivot = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m(r, k) = pivot * m(r, k) - m(r, c) * m(rank, k);
        mpz_divexact(m(r, k).get_mpz_t(), m(r, k).get_mpz_t(), prev.get_mpz_t());
      }
      m(r, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::size_t modular = rank_mod_prime(m);
  if (modular == std::min(m.rows(), m.cols())) return modular;
  return rank_bareiss(m);
}

}  // namespace gotzrep
