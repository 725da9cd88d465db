#include "homnambu/multi_index.hpp"

#include <limits>

#include "homnambu/error.hpp"

namespace homnambu {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error("index space too large");
    }
    out *= base;
  }
  return out;
}

std::uint64_t flat_index(const MultiIndex& tuple, std::size_t dim) {
  std::uint64_t f = 0;
  for (auto i : tuple) f = f * dim + i;
  return f;
}

MultiIndex unflatten_index(std::uint64_t flat, std::size_t dim, std::size_t length) {
  MultiIndex t(length);
  for (std::size_t k = length; k-- > 0;) {
    t[k] = static_cast<std::size_t>(flat % dim);
    flat /= dim;
  }
  return t;
}

std::vector<MultiIndex> increasing_tuples(std::size_t dim, std::size_t length) {
  std::vector<MultiIndex> out;
  if (length > dim) return out;
  MultiIndex t(length);
  for (std::size_t i = 0; i < length; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t k = length;
    while (k > 0 && t[k - 1] == dim - length + (k - 1)) --k;
    if (k == 0) break;
    ++t[k - 1];
    for (std::size_t j = k; j < length; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

int sort_with_sign(MultiIndex& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] == tuple[i]) return 0;
  }
  return sign;
}

MultiIndex to_one_based(MultiIndex tuple) {
  for (auto& i : tuple) ++i;
  return tuple;
}

}  // namespace homnambu
