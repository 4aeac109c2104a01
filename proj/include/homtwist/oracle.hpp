#pragma once

#include <string>

#include "homtwist/module_smash.hpp"
#include "homtwist/uq_sl2.hpp"

/// Brute-force axiom scanners written directly against structure constants
/// with explicit index loops. They share no evaluation code with the library
/// checkers and serve as the independent side of cross-checks.
namespace homtwist::oracle {

struct Verdict {
  bool ok = true;
  std::string witness;  // first failing equation and tuple
  explicit operator bool() const { return ok; }
};

Verdict hom_algebra(const HomAlgebra& A);
Verdict associative(const HomAlgebra& A);
Verdict hom_coalgebra(const HomCoalgebra& C);
Verdict hom_bialgebra(const HomBialgebra& H);
Verdict twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);
Verdict hom_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R);
Verdict braid(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3);
Verdict module(const HomAlgebra& H, const ActionTable& M);
Verdict module_hom_algebra(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act);
Verdict comodule(const HomCoalgebra& C, const CoactionTable& M);
Verdict bicomodule(const HomCoalgebra& C, const CoactionTable& lam, const CoactionTable& rho);
Verdict comodule_hom_algebra(const HomBialgebra& H, const HomAlgebra& D, const CoactionTable& co);

/// Multiplication matrices of the closed-form smash products.
Mat left_smash_closed_form(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act);
Mat right_smash_closed_form(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act);
Mat two_sided_smash_closed_form(const HomAlgebra& A, const HomBialgebra& H, const HomAlgebra& C,
                                const ActionTable& actL, const ActionTable& actR);
/// (a⊗1 + b⊗v)(c⊗1 + d⊗v) = (ac + qbσ(d))⊗1 + (ad + bσ(c))⊗v on the basis of A⊗C(k,q).
Mat clifford_closed_form(const HomAlgebra& A, const Mat& sigma, const Rational& q);

/// Closed generator formulas of ρ_l for h ∈ {E, F, K, K⁻¹}.
QPlaneElement rho_generator_formula(Gen g, int m, int n, const UqParams& params);
/// Compares rho_l on generators with the closed generator formulas for m, n ≤ bound.
Verdict rho_extension(const UqParams& params, int bound);

}  // namespace homtwist::oracle
