#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homtwist/hom_algebra.hpp"

namespace homtwist {

/// (C, Δ, α). Column i of `comul` holds the coordinates of Δ(e_i) in C⊗C.
struct HomCoalgebra {
  std::size_t dim = 0;
  Mat comul;
  Mat alpha;
  std::vector<std::string> labels;
  std::string provenance;

  HomCoalgebra() = default;
  HomCoalgebra(std::size_t dim, Mat comul, Mat alpha);
  HomCoalgebra(std::size_t dim, Mat comul);

  /// d[i][j][k], i.e. Δ(e_i) = Σ d[i][j][k] e_j⊗e_k.
  static HomCoalgebra from_constants(std::size_t dim, const std::vector<std::vector<std::vector<Rational>>>& d,
                                     Mat alpha);
  std::vector<std::vector<std::vector<Rational>>> constants() const;

  void validate() const;
};

/// (H, μ, Δ, α); the algebra and coalgebra parts share α.
struct HomBialgebra {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;

  HomBialgebra() = default;
  HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra);
  HomBialgebra(std::size_t dim, Mat mul, Mat comul, Mat alpha);

  std::size_t dim() const { return algebra.dim; }
  const Mat& mul() const { return algebra.mul; }
  const Mat& comul() const { return coalgebra.comul; }
  const Mat& alpha() const { return algebra.alpha; }

  void validate() const;
};

bool same_structure(const HomCoalgebra& a, const HomCoalgebra& b);
bool same_structure(const HomBialgebra& a, const HomBialgebra& b);

LinOp comul_op(const HomCoalgebra& c);

/// Equations "comultiplicativity" (i) and "hom_coassociativity" (i).
CheckReport check_hom_coalgebra(const HomCoalgebra& c);
/// Equation "coassociativity" (i); α ignored.
CheckReport check_coassociative(const HomCoalgebra& c);
CheckReport check_comultiplicative(const HomCoalgebra& c, const Mat& alpha);
HomCoalgebra yau_twist_coalgebra(const HomCoalgebra& c, const Mat& alpha);

/// Algebra and coalgebra checks plus "hombia_coassoc", "hombia_mul" (h,h')
/// and "hombia_alpha".
CheckReport check_hom_bialgebra(const HomBialgebra& h);
HomBialgebra yau_twist_bialgebra(const HomBialgebra& h, const Mat& alpha);

}  // namespace homtwist
