#include "homtwist/matrix.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <sstream>

#include "homtwist/error.hpp"

namespace homtwist {

Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat zeros(std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  m.setConstant(Rational(0));
  return m;
}

Mat from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_dims(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_dims(a.cols() == b.rows(), "mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  // Skip zero entries: most operators here are permutation-like.
  Mat out = zeros(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

namespace {

// Returns the inverse, or an empty matrix when a is singular.
Mat gauss_jordan(const Mat& a) {
  const Eigen::Index n = a.rows();
  Mat work = a;
  Mat inv = identity(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Mat();
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = work(col, col).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      work(col, j) *= p;
      inv(col, j) *= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational f = work(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace

Mat mat_inv(const Mat& a) {
  require_dims(a.rows() == a.cols(), "mat_inv: matrix is not square");
  if (a.rows() == 0) return Mat(0, 0);
  Mat inv = gauss_jordan(a);
  if (inv.size() == 0) raise(ErrorKind::NotInvertible, "matrix is rank deficient:\n" + to_string(a));
  return inv;
}

bool is_invertible(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  return a.rows() == 0 || gauss_jordan(a).size() != 0;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out = Eigen::kroneckerProduct(a, b).eval();
  return out;
}

Mat kron(std::initializer_list<Mat> factors) {
  Mat out = identity(1);
  for (const Mat& f : factors) out = kron(out, f);
  return out;
}

Mat mat_pow(const Mat& a, int exponent) {
  require_dims(a.rows() == a.cols(), "mat_pow: matrix is not square");
  Mat base = exponent < 0 ? mat_inv(a) : a;
  int e = exponent < 0 ? -exponent : exponent;
  Mat out = identity(a.rows());
  while (e > 0) {
    if (e & 1) out = mat_mul(out, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return out;
}

Mat swap_matrix(std::size_t dimA, std::size_t dimB) {
  Mat m = zeros(dimA * dimB, dimA * dimB);
  for (std::size_t a = 0; a < dimA; ++a)
    for (std::size_t b = 0; b < dimB; ++b) m(b * dimA + a, a * dimB + b) = 1;
  return m;
}

bool is_identity(const Mat& a) { return a.rows() == a.cols() && equal(a, identity(a.rows())); }

bool equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << "[";
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace homtwist
