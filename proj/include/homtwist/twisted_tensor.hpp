#pragma once

#include <cstddef>

#include "homtwist/twistor.hpp"

namespace homtwist {

/// R: B⊗A -> A⊗B. Input columns are flattened as (b, a), output rows as (a, b).
struct TwistingMapR {
  std::size_t dimA = 0;
  std::size_t dimB = 0;
  Mat matrix;

  TwistingMapR() = default;
  TwistingMapR(std::size_t dimA, std::size_t dimB, Mat matrix);
  LinOp op() const { return LinOp(matrix, {dimB, dimA}, {dimA, dimB}); }
  /// Coordinates of R(e_b⊗e_a) in A⊗B.
  void set_image(std::size_t b, std::size_t a, const std::vector<Rational>& coords);
};

struct CliffordParams {
  Rational q;
  Mat sigma;
};

struct CliffordResult {
  HomAlgebra algebra;
  TwistingMapR R;
};

struct IteratedResult {
  HomAlgebra algebra;       // (A⊗_{R1}B)⊗_{P1}C
  HomAlgebra right_nested;  // A⊗_{P2}(B⊗_{R2}C)
  TwistingMapR P1;          // C⊗(A⊗B) -> (A⊗B)⊗C
  TwistingMapR P2;          // (B⊗C)⊗A -> A⊗(B⊗C)
};

struct AlphaTtpResult {
  HomAlgebra algebra;
  Operator2 T;
  Operator3 C1;
  Operator3 C2;
};

TwistingMapR flip(std::size_t dimA, std::size_t dimB);

/// Equations "twmap1" (b,a,a') and "twmap2" (b,b',a).
CheckReport check_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);
/// Equations "homtwmap0" (b,a), "homtwmap1" (b,a,a'), "homtwmap2" (b,b',a).
CheckReport check_hom_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);

/// Multiplication (a⊗b)(a'⊗b') = aa'_R⊗b_Rb' with structure map α_A⊗α_B,
/// built without checking R.
HomAlgebra twisted_product(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);

/// Throws PreconditionFailure unless R passes check_twisting_map.
HomAlgebra ttp(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);
Operator2 twistor_from_R(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);
/// Throws PreconditionFailure unless R passes check_hom_twisting_map.
HomAlgebra hom_ttp(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);
Operator2 hom_twistor_from_R(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);

/// Equation "braid" on (c,b,a) for R1: B⊗A->A⊗B, R2: C⊗B->B⊗C, R3: C⊗A->A⊗C.
CheckReport check_braid(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3);
TwistingMapR iterated_P1(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3);
TwistingMapR iterated_P2(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3);
/// Throws PreconditionFailure if a map fails its Hom-twisting check and
/// BraidViolation if the braid condition fails.
IteratedResult iterated_ttp(const HomAlgebra& A, const HomAlgebra& B, const HomAlgebra& C, const TwistingMapR& R1,
                            const TwistingMapR& R2, const TwistingMapR& R3);

/// C(k,q) = k[v]/(v² = q) on the basis (1, v) with α = id.
HomAlgebra clifford_algebra(const Rational& q);
/// Throws NotInvolutive, NotMultiplicative or NotCommutingWithAlpha.
CliffordResult clifford(const HomAlgebra& A, const CliffordParams& params);

/// Throws CommutationFailure when (α_A⊗α_B)∘P != P∘(α_B⊗α_A). A failing
/// twisting-map precondition is reported with prefix "precondition/".
CheckReport check_deform_compat_ttp(const HomAlgebra& A, const HomAlgebra& B, const Mat& alphaA, const Mat& alphaB,
                                    const TwistingMapR& P);

/// Equations "ashom0", "ashom1", "ashom2". Throws NotInvertible for singular
/// alphas and NotMultiplicative if an alpha is not an algebra map.
CheckReport check_alphaAB_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const Mat& alphaA, const Mat& alphaB,
                                       const TwistingMapR& R);
/// Throws PreconditionFailure unless check_alphaAB_twisting_map passes.
AlphaTtpResult alphaAB_ttp(const HomAlgebra& A, const HomAlgebra& B, const Mat& alphaA, const Mat& alphaB,
                           const TwistingMapR& R);
/// R = (α_A⊗α_B)∘P; throws CommutationFailure if P does not commute with the alphas.
TwistingMapR alphaAB_from_classical(const TwistingMapR& P, const Mat& alphaA, const Mat& alphaB);

/// Equation "commutes" on (b,a): (α_A⊗α_B)∘R = R∘(α_B⊗α_A).
CheckReport check_commutes(const TwistingMapR& R, const Mat& alphaA, const Mat& alphaB);

}  // namespace homtwist
