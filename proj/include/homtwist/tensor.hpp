#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "homtwist/matrix.hpp"

namespace homtwist {

/// Row-major, left-associative flattening: (i,j) ↦ i*dims[1] + j, and so on.
std::size_t flatten(std::span<const std::size_t> dims, std::span<const std::size_t> index);
std::vector<std::size_t> unflatten(std::span<const std::size_t> dims, std::size_t flat);
std::size_t product(std::span<const std::size_t> dims);

/// A linear map between tensor spaces stored by sparse columns, so that it can
/// be applied to a few consecutive factors of a larger tensor power.
class LinOp {
 public:
  LinOp() = default;
  LinOp(const Mat& m, std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims);
  /// Endomorphism of a single factor.
  explicit LinOp(const Mat& m) : LinOp(m, {std::size_t(m.cols())}, {std::size_t(m.rows())}) {}

  const std::vector<std::size_t>& in_dims() const { return in_dims_; }
  const std::vector<std::size_t>& out_dims() const { return out_dims_; }
  const std::vector<std::pair<std::size_t, Rational>>& column(std::size_t c) const { return cols_[c]; }

 private:
  std::vector<std::size_t> in_dims_, out_dims_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols_;
};

/// Sparse vector in a tensor product of factor spaces.
class TensorVec {
 public:
  TensorVec() = default;
  explicit TensorVec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  static TensorVec basis(std::vector<std::size_t> dims, std::span<const std::size_t> index);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::size_t flat, const Rational& c);
  TensorVec& operator+=(const TensorVec& o);
  TensorVec& operator*=(const Rational& c);

  /// Applies op to factors [first, first + op.in_dims().size()).
  TensorVec apply(const LinOp& op, std::size_t first) const;
  /// Swaps factors pos and pos+1.
  TensorVec swapped(std::size_t pos) const;

  std::vector<Rational> dense() const;

  friend bool operator==(const TensorVec& a, const TensorVec& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::map<std::size_t, Rational> terms_;
};

/// Matrix of a linear map given by its action on basis tensors of `in_dims`.
/// `out_size` is the dimension of the target space.
Mat to_matrix(const std::vector<std::size_t>& in_dims, std::size_t out_size,
              const std::function<TensorVec(const TensorVec&)>& f);

}  // namespace homtwist
