#include "homtwist/tensor.hpp"

#include "homtwist/error.hpp"

namespace homtwist {

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

std::size_t flatten(std::span<const std::size_t> dims, std::span<const std::size_t> index) {
  require_dims(dims.size() == index.size(), "flatten: index arity differs from factor count");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    require_dims(index[i] < dims[i], "flatten: index out of range");
    flat = flat * dims[i] + index[i];
  }
  return flat;
}

std::vector<std::size_t> unflatten(std::span<const std::size_t> dims, std::size_t flat) {
  require_dims(flat < product(dims), "unflatten: flat index out of range");
  std::vector<std::size_t> index(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    index[i] = flat % dims[i];
    flat /= dims[i];
  }
  return index;
}

LinOp::LinOp(const Mat& m, std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims)
    : in_dims_(std::move(in_dims)), out_dims_(std::move(out_dims)) {
  require_dims(std::size_t(m.cols()) == product(in_dims_) && std::size_t(m.rows()) == product(out_dims_),
               "operator shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                   " does not match its factor dimensions");
  cols_.resize(m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) cols_[c].emplace_back(r, m(r, c));
}

TensorVec TensorVec::basis(std::vector<std::size_t> dims, std::span<const std::size_t> index) {
  TensorVec v(std::move(dims));
  v.terms_.emplace(flatten(v.dims_, index), Rational(1));
  return v;
}

void TensorVec::add(std::size_t flat, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(flat, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
  require_dims(dims_ == o.dims_, "adding tensors of different shapes");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorVec& TensorVec::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorVec TensorVec::apply(const LinOp& op, std::size_t first) const {
  const std::size_t count = op.in_dims().size();
  require_dims(first + count <= dims_.size(), "operator applied past the last tensor factor");
  for (std::size_t i = 0; i < count; ++i)
    require_dims(dims_[first + i] == op.in_dims()[i], "operator input does not match tensor factor");

  const std::span<const std::size_t> all(dims_);
  const std::size_t in_mid = product(all.subspan(first, count));
  const std::size_t suffix = product(all.subspan(first + count));
  const std::size_t out_mid = product(op.out_dims());

  std::vector<std::size_t> out_dims(dims_.begin(), dims_.begin() + first);
  out_dims.insert(out_dims.end(), op.out_dims().begin(), op.out_dims().end());
  out_dims.insert(out_dims.end(), dims_.begin() + first + count, dims_.end());
  TensorVec out(std::move(out_dims));

  for (const auto& [flat, c] : terms_) {
    const std::size_t suf = flat % suffix;
    const std::size_t mid = (flat / suffix) % in_mid;
    const std::size_t pre = flat / (suffix * in_mid);
    for (const auto& [r, x] : op.column(mid)) out.add((pre * out_mid + r) * suffix + suf, c * x);
  }
  return out;
}

TensorVec TensorVec::swapped(std::size_t pos) const {
  require_dims(pos + 1 < dims_.size(), "swap past the last tensor factor");
  const std::size_t a = dims_[pos], b = dims_[pos + 1];
  const std::size_t suffix = product(std::span<const std::size_t>(dims_).subspan(pos + 2));
  std::vector<std::size_t> out_dims = dims_;
  std::swap(out_dims[pos], out_dims[pos + 1]);
  TensorVec out(std::move(out_dims));
  for (const auto& [flat, c] : terms_) {
    const std::size_t suf = flat % suffix;
    const std::size_t mid = (flat / suffix) % (a * b);
    const std::size_t pre = flat / (suffix * a * b);
    const std::size_t i = mid / b, j = mid % b;
    out.terms_.emplace((pre * a * b + j * a + i) * suffix + suf, c);
  }
  return out;
}

std::vector<Rational> TensorVec::dense() const {
  std::vector<Rational> out(product(dims_));
  for (const auto& [k, c] : terms_) out[k] = c;
  return out;
}

Mat to_matrix(const std::vector<std::size_t>& in_dims, std::size_t out_size,
              const std::function<TensorVec(const TensorVec&)>& f) {
  const std::size_t n = product(in_dims);
  Mat m = zeros(out_size, n);
  for (std::size_t c = 0; c < n; ++c) {
    const TensorVec image = f(TensorVec::basis(in_dims, unflatten(in_dims, c)));
    require_dims(product(image.dims()) == out_size, "to_matrix: image has unexpected size");
    for (const auto& [r, x] : image.terms()) m(r, c) = x;
  }
  return m;
}

}  // namespace homtwist
