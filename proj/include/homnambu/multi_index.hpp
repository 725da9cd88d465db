#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace homnambu {

// 0-based basis indices; files and reports use 1-based.
using MultiIndex = std::vector<std::size_t>;

// base^exp, throwing when the result would not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::size_t exp);

// Lexicographic rank of a tuple over {0..dim-1}^length.
std::uint64_t flat_index(const MultiIndex& tuple, std::size_t dim);
MultiIndex unflatten_index(std::uint64_t flat, std::size_t dim, std::size_t length);

// All strictly increasing tuples in lexicographic order.
std::vector<MultiIndex> increasing_tuples(std::size_t dim, std::size_t length);

// Sorts in place and returns the sign of the sorting permutation, or 0 if
// two entries coincide.
int sort_with_sign(MultiIndex& tuple);

MultiIndex to_one_based(MultiIndex tuple);

}  // namespace homnambu
