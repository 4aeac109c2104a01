#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "homtwist/rational.hpp"

namespace homtwist {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

Mat identity(std::size_t n);
Mat zeros(std::size_t rows, std::size_t cols);

/// Builds a matrix from row-major nested lists of integers or rationals.
Mat from_rows(const std::vector<std::vector<Rational>>& rows);

/// Exact product; DimensionMismatch when a.cols() != b.rows().
Mat mat_mul(const Mat& a, const Mat& b);
/// Exact Gauss-Jordan inverse; NotInvertible on rank deficiency,
/// DimensionMismatch when a is not square.
Mat mat_inv(const Mat& a);
bool is_invertible(const Mat& a);
/// (kron(a,b))[(i,j),(p,q)] = a[i,p] * b[j,q] under row-major flattening.
Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<Mat> factors);
/// Integer power, negative exponents through the exact inverse.
Mat mat_pow(const Mat& a, int exponent);

/// Permutation matrix of the swap A⊗B -> B⊗A, e_a⊗e_b ↦ e_b⊗e_a.
Mat swap_matrix(std::size_t dimA, std::size_t dimB);

bool is_identity(const Mat& a);
bool equal(const Mat& a, const Mat& b);

std::string to_string(const Mat& a);

}  // namespace homtwist
