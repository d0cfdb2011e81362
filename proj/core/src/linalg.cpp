#include "plat/linalg.hpp"

#include <mutex>
#include <stdexcept>

namespace plat {

namespace {
__extension__ typedef unsigned __int128 wide_t;
}  // namespace

mpz_class determinant_bareiss(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<wide_t>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t to_residue(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::uint64_t determinant_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Prefer the sparsest eligible pivot row to limit fill-in.
    std::size_t pivot = n;
    std::size_t best_weight = n + 1;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k] == 0) continue;
      std::size_t weight = 0;
      for (std::size_t j = k; j < n; ++j) weight += a[i][j] != 0;
      if (weight < best_weight) {
        best_weight = weight;
        pivot = i;
      }
    }
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = (p - det) % p;
    }
    const std::uint64_t pivot_value = a[k][k];
    det = mul_mod(det, pivot_value, p);
    const std::uint64_t inverse = pow_mod(pivot_value, p - 2, p);
    std::vector<std::size_t> support;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a[k][j] != 0) support.push_back(j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const std::uint64_t factor = mul_mod(a[i][k], inverse, p);
      for (std::size_t j : support) {
        a[i][j] = (a[i][j] + p - mul_mod(factor, a[k][j], p)) % p;
      }
      a[i][k] = 0;
    }
  }
  return det;
}

std::uint64_t modular_prime(std::size_t index) {
  static std::mutex lock;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> guard(lock);
  std::uint64_t candidate = primes.empty() ? (std::uint64_t{1} << 62U) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(candidate), 0, 0, &candidate);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) > 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

namespace {

mpz_class ceil_sqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) r += 1;
  return r;
}

}  // namespace

mpz_class hadamard_bound(const IntMatrix& matrix) {
  const std::size_t n = matrix.size();
  mpz_class by_rows = 1;
  mpz_class by_cols = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_sum = 0;
    mpz_class col_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row_sum += matrix[i][j] * matrix[i][j];
      col_sum += matrix[j][i] * matrix[j][i];
    }
    by_rows *= ceil_sqrt(row_sum);
    by_cols *= ceil_sqrt(col_sum);
  }
  return by_rows < by_cols ? by_rows : by_cols;
}

mpz_class determinant_modular(const IntMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  const mpz_class bound = hadamard_bound(matrix);
  if (bound == 0) return 0;

  mpz_class residue = 0;
  mpz_class modulus = 1;
  for (std::size_t index = 0; modulus <= 2 * bound; ++index) {
    const std::uint64_t p = modular_prime(index);
    std::vector<std::vector<std::uint64_t>> reduced(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) reduced[i][j] = to_residue(matrix[i][j], p);
    }
    const std::uint64_t d = determinant_mod(std::move(reduced), p);
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_class dz;
    mpz_import(dz.get_mpz_t(), 1, 1, sizeof(d), 0, 0, &d);
    // residue' = residue + modulus * ((d - residue) * modulus^-1 mod p)
    mpz_class inverse;
    mpz_invert(inverse.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    mpz_class step = (dz - residue) * inverse;
    mpz_fdiv_r(step.get_mpz_t(), step.get_mpz_t(), pz.get_mpz_t());
    residue += modulus * step;
    modulus *= pz;
  }
  // Symmetric representative.
  if (residue > modulus / 2) residue -= modulus;
  return residue;
}

}  // namespace plat
