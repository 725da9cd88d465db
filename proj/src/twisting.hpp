#pragma once

#include <vector>

#include "homnambu/tensor.hpp"

namespace homnambu::detail {

inline void axpy(std::vector<Scalar>& acc, const Scalar& c, const Scalar* row) {
  for (std::size_t j = 0; j < acc.size(); ++j) {
    if (sgn(row[j]) != 0) acc[j] += c * row[j];
  }
}

// Slot i is left alone; earlier slots s take twists[s], later slots take
// twists[s - 1]. This is the twist pattern around the inner bracket in the
// Hom-Nambu identity and in total Hom-associativity.
inline DenseTensor slot_twisted(const DenseTensor& c, const std::vector<Matrix>& twists, std::size_t i) {
  std::vector<const Matrix*> maps(c.arity(), nullptr);
  for (std::size_t s = 0; s < c.arity(); ++s) {
    if (s < i) maps[s] = &twists.at(s);
    if (s > i) maps[s] = &twists.at(s - 1);
  }
  return c.precompose(maps);
}

}  // namespace homnambu::detail
