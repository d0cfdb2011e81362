#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace plat {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Fraction-free Gaussian elimination. Exact; cubic in big-integer ops.
mpz_class determinant_bareiss(IntMatrix matrix);

/// Elimination modulo word-sized primes, recombined by CRT against the
/// Hadamard bound. Exact; fast on sparse matrices.
mpz_class determinant_modular(const IntMatrix& matrix);

/// Determinant of a square matrix over Z/p, p < 2^63. Rows with a zero in the
/// pivot column are skipped.
std::uint64_t determinant_mod(std::vector<std::vector<std::uint64_t>> matrix,
                              std::uint64_t p);

/// Primes below 2^62, descending, generated on first use.
std::uint64_t modular_prime(std::size_t index);

/// Product over rows of ceil(sqrt(row sum of squares)), or the same over
/// columns if smaller; bounds |det|.
mpz_class hadamard_bound(const IntMatrix& matrix);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;
std::uint64_t to_residue(const mpz_class& value, std::uint64_t p);

}  // namespace plat
