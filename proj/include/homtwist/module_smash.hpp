#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homtwist/hom_coalgebra.hpp"
#include "homtwist/twisted_tensor.hpp"

namespace homtwist {

enum class Side { Left, Right };

std::string_view to_string(Side side);

/// Action of an acting algebra on (M, α_M). `act` is dim_m x (dim_h*dim_m);
/// column (h, m) holds e_h·e_m for a left action, column (m, h) holds e_m·e_h
/// for a right action.
struct ActionTable {
  Side side = Side::Left;
  std::size_t acting_dim = 0;
  std::size_t module_dim = 0;
  Mat act;
  Mat alpha;

  ActionTable() = default;
  ActionTable(Side side, std::size_t acting_dim, std::size_t module_dim, Mat act, Mat alpha);

  /// t[h][m][m'] is the coefficient of e_m' in e_h·e_m (left) or e_m·e_h (right).
  static ActionTable from_constants(Side side, std::size_t acting_dim, std::size_t module_dim,
                                    const std::vector<std::vector<std::vector<Rational>>>& t, Mat alpha);
  std::vector<std::vector<std::vector<Rational>>> constants() const;

  LinOp op() const;
  void validate() const;
};

/// Coaction λ: M -> C⊗M (rows (c, m)) or ρ: M -> M⊗C (rows (m, c)).
struct CoactionTable {
  Side side = Side::Left;
  std::size_t coalgebra_dim = 0;
  std::size_t module_dim = 0;
  Mat co;
  Mat alpha;

  CoactionTable() = default;
  CoactionTable(Side side, std::size_t coalgebra_dim, std::size_t module_dim, Mat co, Mat alpha);

  /// Left: t[m][c][m'] is the coefficient of e_c⊗e_m' in λ(e_m).
  /// Right: t[m][m'][c] is the coefficient of e_m'⊗e_c in ρ(e_m).
  static CoactionTable from_constants(Side side, std::size_t coalgebra_dim, std::size_t module_dim,
                                      const std::vector<std::vector<std::vector<Rational>>>& t, Mat alpha);
  std::vector<std::vector<std::vector<Rational>>> constants() const;

  LinOp op() const;
  void validate() const;
};

bool same_structure(const ActionTable& a, const ActionTable& b);
bool same_structure(const CoactionTable& a, const CoactionTable& b);

/// A acting on itself by its multiplication.
ActionTable regular_action(const HomAlgebra& A, Side side);
/// C coacting on itself by Δ.
CoactionTable regular_coaction(const HomCoalgebra& C, Side side);

/// Left: "module1" (h,m), "module2" (h,h',m).
/// Right: "rmodule1" (m,h), "rmodule2" (m,h,h').
CheckReport check_module(const HomAlgebra& H, const ActionTable& M);

/// Left: "module_algebra" (h,a,a'), α_H²(h)·(aa') = (h₁·a)(h₂·a').
/// Right: "rmodule_algebra" (c,c',h), (cc')·α_H²(h) = (c·h₁)(c'·h₂).
/// A failing module check is reported with prefix "precondition/";
/// PreconditionFailure if the action's α differs from A's.
CheckReport check_module_hom_algebra(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act);

struct TwistedModuleAlgebra {
  HomBialgebra H;
  HomAlgebra A;
  ActionTable act;
};

/// Twists a classical module algebra along bialgebra and algebra
/// endomorphisms; the new action is α_A(h·a) (left) or α_A(a·h) (right).
/// Throws PreconditionFailure, NotMultiplicative, NotComultiplicative or
/// IntertwiningFailure.
TwistedModuleAlgebra yau_twist_module_algebra(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act,
                                              const Mat& alphaH, const Mat& alphaA);

/// h·(m⊗n) = h₁·m⊗h₂·n with α_M⊗α_N. Left actions only.
ActionTable tensor_modules(const HomBialgebra& H, const ActionTable& M, const ActionTable& N);

/// Left: "comodule1", "comodule2" (m). Right: "rcomodule1", "rcomodule2" (m).
CheckReport check_comodule(const HomCoalgebra& C, const CoactionTable& M);
/// Equation "bicomodule" (m): (λ⊗α_C)∘ρ = (α_C⊗ρ)∘λ.
CheckReport check_bicomodule(const HomCoalgebra& C, const CoactionTable& lam, const CoactionTable& rho);
/// "comodule_algebra_mul" (d,d') and "comodule_algebra_alpha" (d): the
/// coaction is a Hom-algebra map into H⊗D (left) or D⊗H (right).
CheckReport check_comodule_hom_algebra(const HomBialgebra& H, const HomAlgebra& D, const CoactionTable& co);

/// Equation "yetter_drinfeld" (h,m). Failing module or comodule checks are
/// reported with prefix "precondition/".
CheckReport check_yetter_drinfeld(const HomBialgebra& H, const ActionTable& act, const CoactionTable& co);

struct SmashResult {
  TwistingMapR R;
  HomAlgebra algebra;
};

/// R(h⊗a) = α_H⁻²(h₁)·α_A⁻¹(a)⊗α_H⁻¹(h₂); algebra = hom_ttp(A, H, R).
SmashResult smash_left(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act);
/// R(c⊗h) = α_H⁻¹(h₁)⊗α_C⁻¹(c)·α_H⁻²(h₂); algebra = hom_ttp(H, C, R).
SmashResult smash_right(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act);

struct TwoSidedSmash {
  IteratedResult iterated;
  TwistingMapR R1;
  TwistingMapR R2;
  TwistingMapR R3;
  const HomAlgebra& algebra() const { return iterated.algebra; }
};

/// A#H#C through iterated_ttp with R1, R2 from the one-sided smashes and R3 the flip.
TwoSidedSmash smash_two_sided(const HomAlgebra& A, const HomBialgebra& H, const HomAlgebra& C,
                              const ActionTable& actL, const ActionTable& actR);

/// ρ(a#h) = (α_A(a)#h₁)⊗h₂.
CoactionTable coaction_rho_smash(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act);
/// λ(a#h) = a₋₁h₁⊗(a₀#h₂). Throws PreconditionFailure unless coA makes A a
/// left comodule Hom-algebra and YDViolation if the Yetter-Drinfeld check fails.
CoactionTable coaction_lambda_smash(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act,
                                    const CoactionTable& coA);
/// λ(h#c) = h₁⊗(h₂#α_C(c)).
CoactionTable coaction_lambda_right_smash(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act);

/// Classical smash map: h⊗a ↦ h₁·a⊗h₂ (left) or c⊗h ↦ h₁⊗c·h₂ (right).
TwistingMapR classical_smash_map(const HomBialgebra& H, const ActionTable& act);

/// Twists the classical data, then compares the twisted classical smash
/// ("coincide_mul", "coincide_alpha") with the Hom-smash of the twists, and R
/// with the classical map ("R_equals_P").
CheckReport check_smash_twist_compat(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act,
                                     const Mat& alphaH, const Mat& alphaA);

}  // namespace homtwist
