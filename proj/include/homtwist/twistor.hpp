#pragma once

#include <cstddef>
#include <string_view>

#include "homtwist/hom_algebra.hpp"

namespace homtwist {

/// Linear map on D⊗D.
struct Operator2 {
  std::size_t dim = 0;
  Mat matrix;

  Operator2() = default;
  Operator2(std::size_t dim, Mat matrix);
  static Operator2 identity(std::size_t dim);
  LinOp op() const { return LinOp(matrix, {dim, dim}, {dim, dim}); }
};

/// Linear map on D⊗D⊗D.
struct Operator3 {
  std::size_t dim = 0;
  Mat matrix;

  Operator3() = default;
  Operator3(std::size_t dim, Mat matrix);
  static Operator3 identity(std::size_t dim);
  LinOp op() const { return LinOp(matrix, {dim, dim, dim}, {dim, dim, dim}); }
};

/// An operator together with its two companions.
struct TwistorTriple {
  Operator2 T;
  Operator3 C1;
  Operator3 C2;
};

/// Which axiom set the caller verified before deforming.
enum class Claim { Unchecked, Pseudotwistor, Twistor, HomPseudotwistor, HomTwistor, AlphaPseudotwistor };
std::string_view to_string(Claim claim);

/// T₁₃(d⊗d'⊗d'') = d^T⊗d'⊗d''_T.
Operator3 lift_13(const Operator2& T);
Operator3 lift_12(const Operator2& T);
Operator3 lift_23(const Operator2& T);

/// Equations "pstw1", "pstw2", "pstw3" on basis triples.
CheckReport check_pseudotwistor(const HomAlgebra& D, const Operator2& T, const Operator3& C1, const Operator3& C2);
/// Equations "twistor1", "twistor2", "twistor3"; companions are T₁₃.
CheckReport check_twistor(const HomAlgebra& D, const Operator2& T);
/// Equations "hommultT" (pairs) and "hompstw1".."hompstw3" (triples).
CheckReport check_hom_pseudotwistor(const HomAlgebra& D, const Operator2& T, const Operator3& C1,
                                    const Operator3& C2);
/// Equations "multtwistor" and "homtwistor1".."homtwistor3".
CheckReport check_hom_twistor(const HomAlgebra& D, const Operator2& T);

/// (D, μ∘T, α); provenance records the claim.
HomAlgebra deform(const HomAlgebra& D, const Operator2& T, Claim claim = Claim::Unchecked);
/// (D, μ∘T, alpha) for an α-pseudotwistor.
HomAlgebra deform_alpha(const HomAlgebra& D, const Mat& alpha, const Operator2& T,
                        Claim claim = Claim::AlphaPseudotwistor);

/// Equations "multT", "pstwhom1", "pstwhom2", "pstwhom3". Throws
/// NotMultiplicative when alpha is not an algebra endomorphism of D.
CheckReport check_alpha_pseudotwistor(const HomAlgebra& D, const Mat& alpha, const Operator2& T, const Operator3& C1,
                                      const Operator3& C2);
/// (α⊗α, id⊗id⊗α, α⊗id⊗id).
TwistorTriple yau_operator(const Mat& alpha);

/// Failed preconditions come back as failures prefixed "precondition/".
/// Otherwise checks the Hom-pseudotwistor axioms on D_α ("yau/...") and
/// that (D_α)^T and (D^T)_α agree ("twist_order").
CheckReport check_yau_compat(const HomAlgebra& D, const Mat& alpha, const Operator2& T, const Operator3& C1,
                             const Operator3& C2);

}  // namespace homtwist
