#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "homnambu/matrix.hpp"
#include "homnambu/multi_index.hpp"

namespace homnambu {

// Dense coefficient array of a multilinear map V^arity -> W with dim V = dim
// and dim W = width (width defaults to dim). The image of the basis tuple
// with lexicographic rank t occupies entries [t*width, (t+1)*width).
class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(std::size_t dim, std::size_t arity, std::size_t width = 0);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  std::size_t width() const { return width_; }
  std::uint64_t tuples() const { return tuples_; }

  const Scalar* at(std::uint64_t tuple) const { return data_.data() + tuple * width_; }
  Scalar* at(std::uint64_t tuple) { return data_.data() + tuple * width_; }
  Vector value(std::uint64_t tuple) const;
  bool value_is_zero(std::uint64_t tuple) const;
  const std::vector<Scalar>& data() const { return data_; }

  Vector eval(std::span<const Vector> args) const;

  // Slot s receives maps[s] (nullptr = identity): result(e_j...) = this(M e_j...).
  DenseTensor precompose(std::span<const Matrix* const> maps) const;
  // Applies m (width x width) to every value.
  DenseTensor postcompose(const Matrix& m) const;

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.width_ == b.width_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  std::size_t width_ = 0;
  std::uint64_t tuples_ = 0;
  std::vector<Scalar> data_;
};

enum class Storage { general, antisymmetric };

class BracketTensor {
 public:
  using Entries = std::map<MultiIndex, Vector>;

  BracketTensor() = default;
  BracketTensor(std::size_t dim, std::size_t arity, Storage storage = Storage::general);

  // Tuples absent from the map are zero. With antisymmetric storage each
  // tuple is folded onto its sorted representative by sign; repeated indices
  // or inconsistent permuted entries are rejected.
  static BracketTensor from_entries(std::size_t dim, std::size_t arity, const Entries& entries,
                                    Storage storage = Storage::general);
  static BracketTensor from_dense(const DenseTensor& dense, Storage storage = Storage::general);

  template <class F>
  static BracketTensor tabulate(std::size_t dim, std::size_t arity, F&& f, Storage storage = Storage::general);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  Storage storage() const { return storage_; }
  const Entries& entries() const { return entries_; }
  const DenseTensor& dense() const { return *dense_; }

  Vector value(const MultiIndex& tuple) const;
  Vector eval(std::span<const Vector> args) const { return dense_->eval(args); }
  bool is_zero() const { return entries_.empty(); }

  // Converting to antisymmetric storage throws unless the data is
  // antisymmetric.
  BracketTensor with_storage(Storage storage) const;
  BracketTensor postcompose(const Matrix& m) const;

  friend bool operator==(const BracketTensor& a, const BracketTensor& b) { return *a.dense_ == *b.dense_; }

 private:
  void build_dense();

  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  Storage storage_ = Storage::general;
  Entries entries_;
  std::shared_ptr<const DenseTensor> dense_ = std::make_shared<const DenseTensor>();
};

template <class F>
BracketTensor BracketTensor::tabulate(std::size_t dim, std::size_t arity, F&& f, Storage storage) {
  Entries entries;
  if (storage == Storage::antisymmetric) {
    for (const auto& t : increasing_tuples(dim, arity)) {
      Vector v = f(t);
      if (!v.is_zero()) entries.emplace(t, std::move(v));
    }
  } else {
    const std::uint64_t count = checked_pow(dim, arity);
    for (std::uint64_t k = 0; k < count; ++k) {
      MultiIndex t = unflatten_index(k, dim, arity);
      Vector v = f(t);
      if (!v.is_zero()) entries.emplace(std::move(t), std::move(v));
    }
  }
  return from_entries(dim, arity, entries, storage);
}

}  // namespace homnambu
