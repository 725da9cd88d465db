#include "homnambu/tensor.hpp"

#include <algorithm>

#include "homnambu/error.hpp"

namespace homnambu {

DenseTensor::DenseTensor(std::size_t dim, std::size_t arity, std::size_t width)
    : dim_(dim), arity_(arity), width_(width == 0 ? dim : width), tuples_(checked_pow(dim, arity)) {
  data_.resize(static_cast<std::size_t>(tuples_ * width_));
}

Vector DenseTensor::value(std::uint64_t tuple) const {
  const Scalar* p = at(tuple);
  return Vector(std::vector<Scalar>(p, p + width_));
}

bool DenseTensor::value_is_zero(std::uint64_t tuple) const {
  const Scalar* p = at(tuple);
  for (std::size_t j = 0; j < width_; ++j) {
    if (sgn(p[j]) != 0) return false;
  }
  return true;
}

Vector DenseTensor::eval(std::span<const Vector> args) const {
  if (args.size() != arity_) throw Error("bracket arity mismatch");
  std::vector<std::vector<std::size_t>> support(arity_);
  for (std::size_t s = 0; s < arity_; ++s) {
    if (args[s].size() != dim_) throw Error("bracket argument dimension mismatch");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(args[s][i]) != 0) support[s].push_back(i);
    }
    if (support[s].empty()) return Vector(width_);
  }
  Vector out(width_);
  std::vector<Scalar> coeff(arity_ + 1);
  coeff[0] = 1;
  // Depth-first over the nonzero coordinates of each argument.
  auto recurse = [&](auto&& self, std::size_t slot, std::uint64_t prefix) -> void {
    if (slot == arity_) {
      const Scalar* row = at(prefix);
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(row[j]) != 0) out[j] += coeff[slot] * row[j];
      }
      return;
    }
    for (auto i : support[slot]) {
      coeff[slot + 1] = coeff[slot] * args[slot][i];
      self(self, slot + 1, prefix * dim_ + i);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

DenseTensor DenseTensor::precompose(std::span<const Matrix* const> maps) const {
  if (maps.size() != arity_) throw Error("precompose: one map per slot required");
  DenseTensor cur = *this;
  for (std::size_t s = 0; s < arity_; ++s) {
    const Matrix* m = maps[s];
    if (m == nullptr) continue;
    if (m->rows() != dim_ || m->cols() != dim_) throw Error("precompose: map shape mismatch");
    DenseTensor next(dim_, arity_, width_);
    // Tuple rank = (outer * dim + i_s) * inner + rest.
    const std::uint64_t inner = checked_pow(dim_, arity_ - 1 - s);
    const std::uint64_t outer = checked_pow(dim_, s);
    for (std::uint64_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < dim_; ++i) {
        for (std::uint64_t r = 0; r < inner; ++r) {
          const std::uint64_t src = (o * dim_ + i) * inner + r;
          if (cur.value_is_zero(src)) continue;
          const Scalar* from = cur.at(src);
          for (std::size_t j = 0; j < dim_; ++j) {
            const Scalar& c = (*m)(i, j);
            if (sgn(c) == 0) continue;
            Scalar* to = next.at((o * dim_ + j) * inner + r);
            for (std::size_t k = 0; k < width_; ++k) {
              if (sgn(from[k]) != 0) to[k] += c * from[k];
            }
          }
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

DenseTensor DenseTensor::postcompose(const Matrix& m) const {
  if (m.rows() != width_ || m.cols() != width_) throw Error("postcompose: map shape mismatch");
  DenseTensor out(dim_, arity_, width_);
  for (std::uint64_t t = 0; t < tuples_; ++t) {
    if (value_is_zero(t)) continue;
    const Scalar* from = at(t);
    Scalar* to = out.at(t);
    for (std::size_t r = 0; r < width_; ++r) {
      for (std::size_t c = 0; c < width_; ++c) {
        if (sgn(from[c]) != 0 && sgn(m(r, c)) != 0) to[r] += m(r, c) * from[c];
      }
    }
  }
  return out;
}

BracketTensor::BracketTensor(std::size_t dim, std::size_t arity, Storage storage)
    : dim_(dim), arity_(arity), storage_(storage) {
  if (arity < 2) throw Error("bracket arity must be at least 2");
  if (dim == 0) throw Error("dimension must be positive");
  build_dense();
}

BracketTensor BracketTensor::from_entries(std::size_t dim, std::size_t arity, const Entries& entries,
                                          Storage storage) {
  BracketTensor b(dim, arity, storage);
  for (const auto& [tuple, value] : entries) {
    if (tuple.size() != arity) throw Error("bracket entry has wrong arity");
    if (value.size() != dim) throw Error("bracket entry has wrong output dimension");
    for (auto i : tuple) {
      if (i >= dim) throw Error("bracket entry index out of range");
    }
    if (value.is_zero()) continue;
    MultiIndex key = tuple;
    Vector v = value;
    if (storage == Storage::antisymmetric) {
      const int sign = sort_with_sign(key);
      if (sign == 0) throw Error("antisymmetric bracket has nonzero entry with a repeated index");
      if (sign < 0) v = -v;
    }
    auto [it, inserted] = b.entries_.emplace(key, v);
    if (!inserted && !(it->second == v)) throw Error("conflicting bracket entries for one tuple");
  }
  b.build_dense();
  return b;
}

BracketTensor BracketTensor::from_dense(const DenseTensor& dense, Storage storage) {
  if (dense.width() != dense.dim()) throw Error("bracket output dimension must equal the space dimension");
  Entries entries;
  for (std::uint64_t t = 0; t < dense.tuples(); ++t) {
    if (dense.value_is_zero(t)) continue;
    entries.emplace(unflatten_index(t, dense.dim(), dense.arity()), dense.value(t));
  }
  auto b = from_entries(dense.dim(), dense.arity(), entries, Storage::general);
  return storage == Storage::general ? b : b.with_storage(storage);
}

void BracketTensor::build_dense() {
  DenseTensor d(dim_, arity_);
  for (const auto& [tuple, value] : entries_) {
    if (storage_ == Storage::general) {
      Scalar* to = d.at(flat_index(tuple, dim_));
      for (std::size_t j = 0; j < dim_; ++j) to[j] = value[j];
      continue;
    }
    MultiIndex perm = tuple;
    do {
      MultiIndex sorted = perm;
      const int sign = sort_with_sign(sorted);
      Scalar* to = d.at(flat_index(perm, dim_));
      for (std::size_t j = 0; j < dim_; ++j) to[j] = sign > 0 ? value[j] : Scalar(-value[j]);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  dense_ = std::make_shared<const DenseTensor>(std::move(d));
}

Vector BracketTensor::value(const MultiIndex& tuple) const {
  if (tuple.size() != arity_) throw Error("bracket arity mismatch");
  for (auto i : tuple) {
    if (i >= dim_) throw Error("basis index out of range");
  }
  return dense_->value(flat_index(tuple, dim_));
}

BracketTensor BracketTensor::with_storage(Storage storage) const {
  if (storage == storage_) return *this;
  if (storage == Storage::general) {
    Entries all;
    for (std::uint64_t t = 0; t < dense_->tuples(); ++t) {
      if (!dense_->value_is_zero(t)) all.emplace(unflatten_index(t, dim_, arity_), dense_->value(t));
    }
    return from_entries(dim_, arity_, all, Storage::general);
  }
  Entries canonical;
  for (const auto& t : increasing_tuples(dim_, arity_)) {
    Vector v = value(t);
    if (!v.is_zero()) canonical.emplace(t, std::move(v));
  }
  auto out = from_entries(dim_, arity_, canonical, Storage::antisymmetric);
  if (!(out == *this)) throw Error("bracket is not antisymmetric");
  return out;
}

BracketTensor BracketTensor::postcompose(const Matrix& m) const {
  auto out = from_dense(dense_->postcompose(m), Storage::general);
  if (storage_ == Storage::antisymmetric) return out.with_storage(Storage::antisymmetric);
  return out;
}

}  // namespace homnambu
