#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace nervelab {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column holds (row, value) pairs
/// sorted by row with no zero values.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::size_t nonzeros() const;
};

/// Product a * b; throws on a dimension mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

bool is_zero(const SparseMatrix& m);

struct SNFResult {
  /// Nonzero diagonal entries d1 | d2 | ..., all positive.
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
};

/// Invariant factors of an integer matrix, in exact arithmetic.
///
/// Unit entries are eliminated first on the sparse structure (fewest-entry
/// line wins, so fill-in stays low); whatever has no unit entry left is
/// finished densely, pivoting on an entry of least absolute value with
/// row-then-column tie-break.
SNFResult smith_normal_form(const SparseMatrix& m);
SNFResult smith_normal_form(const std::vector<std::vector<BigInt>>& dense);

/// Rank over the prime field Z/p. Throws if p is not prime.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

bool is_prime(std::uint32_t p);

}  // namespace nervelab
