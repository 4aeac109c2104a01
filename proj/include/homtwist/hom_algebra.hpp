#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homtwist/check_report.hpp"
#include "homtwist/matrix.hpp"
#include "homtwist/tensor.hpp"

namespace homtwist {

/// (A, μ, α) by structure constants. Column i*dim+j of `mul` holds the
/// coordinates of e_i e_j. A plain algebra is the same record with α = id.
struct HomAlgebra {
  std::size_t dim = 0;
  Mat mul;
  Mat alpha;
  std::vector<std::string> labels;
  std::string provenance;

  HomAlgebra() = default;
  HomAlgebra(std::size_t dim, Mat mul, Mat alpha);
  /// Plain algebra with α = id.
  HomAlgebra(std::size_t dim, Mat mul);

  /// c[i][j][k], i.e. e_i e_j = Σ_k c[i][j][k] e_k.
  static HomAlgebra from_constants(std::size_t dim, const std::vector<std::vector<std::vector<Rational>>>& c,
                                   Mat alpha);
  std::vector<std::vector<std::vector<Rational>>> constants() const;

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return mul(k, i * dim + j); }
  void set_product(std::size_t i, std::size_t j, const std::vector<Rational>& coords);
  Vec product(const Vec& x, const Vec& y) const;
  std::string label(std::size_t i) const;

  /// Throws DimensionMismatch on inconsistent shapes.
  void validate() const;
};

/// Structure constants and α agree entry-wise (labels and provenance ignored).
bool same_structure(const HomAlgebra& a, const HomAlgebra& b);

struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Mat matrix;
};

LinOp mul_op(const HomAlgebra& a);
LinOp alpha_op(const HomAlgebra& a);
std::vector<std::string> default_labels(std::size_t dim);
std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Equations "multiplicativity" (i,j) and "hom_associativity" (i,j,k).
CheckReport check_hom_algebra(const HomAlgebra& a);
/// Equation "associativity" (i,j,k); α ignored.
CheckReport check_associative(const HomAlgebra& a);
/// α∘μ with α checked multiplicative (NotMultiplicative otherwise).
HomAlgebra yau_twist_algebra(const HomAlgebra& a, const Mat& alpha);
HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b);
/// Equations "morphism_mul" (i,j) and "morphism_alpha" (i).
CheckReport check_algebra_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& b);
/// (ab)(cd) = α(a)(α⁻¹(bc)d) on all basis quadruples. A failing Hom-algebra
/// precondition is reported with ids prefixed "precondition/".
CheckReport check_lemma_four_elements(const HomAlgebra& a);

/// Pairs (i,j) where α(e_i e_j) != α(e_i)α(e_j), as a report.
CheckReport check_multiplicative(const HomAlgebra& a, const Mat& alpha);

}  // namespace homtwist
