#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homtwist/check_report.hpp"
#include "homtwist/rational.hpp"

namespace homtwist {

struct UqParams {
  Rational q = 2;
  Rational lambda = 1;
  Rational xi = 1;
  int l = 0;

  /// DegenerateQ for q ∈ {0, 1, -1}; ParamConstraintViolation for λ = 0,
  /// ξ = 0 or l < 0.
  void validate() const;
};

/// [n]_q = (qⁿ - q⁻ⁿ)/(q - q⁻¹).
Rational q_int(long n, const Rational& q);

/// F^a E^b K^c.
struct PBWMonomial {
  int a = 0;
  int b = 0;
  int c = 0;
  auto operator<=>(const PBWMonomial&) const = default;
};

std::string to_string(const PBWMonomial& m);

struct UqElement {
  std::map<PBWMonomial, Rational> terms;

  static UqElement unit();
  static UqElement monomial(PBWMonomial m, Rational c = 1);
  void add(const PBWMonomial& m, const Rational& c);
  UqElement& operator+=(const UqElement& o);
  friend UqElement operator*(const Rational& s, UqElement u);
  bool operator==(const UqElement&) const = default;
};

std::string to_string(const UqElement& u);

/// Element of U_q⊗U_q.
struct UqTensor {
  std::map<std::pair<PBWMonomial, PBWMonomial>, Rational> terms;
  void add(const PBWMonomial& x, const PBWMonomial& y, const Rational& c);
  bool operator==(const UqTensor&) const = default;
};

std::string to_string(const UqTensor& t);

enum class Gen { E, F, K, Kinv };
using Word = std::vector<Gen>;

std::string to_string(Gen g);
/// Word of the monomial F^a E^b K^c.
Word word_of(const PBWMonomial& m);

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form through the rewrite system on words, always reducing the
/// leftmost or the rightmost redex.
UqElement pbw_normalize(const Word& word, const Rational& q, RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// Multiplication in U_q(sl2) at a fixed q. Products of monomials are built
/// by left multiplication with single generators and memoized per instance;
/// an instance must not be shared between threads.
class UqAlgebra {
 public:
  explicit UqAlgebra(Rational q);

  const Rational& q() const { return q_; }
  UqElement mul(const UqElement& u, const UqElement& v) const;
  UqElement mul(const PBWMonomial& x, const PBWMonomial& y) const;
  /// Left multiplication of a normal monomial by a generator.
  UqElement times(Gen g, const PBWMonomial& m) const;
  UqElement normalize(const Word& word) const;

  UqTensor coproduct(const UqElement& u) const;
  UqTensor coproduct(const PBWMonomial& m) const;
  UqTensor tensor_mul(const UqTensor& x, const UqTensor& y) const;

 private:
  Rational q_;
  Rational inv_diff_;  // 1/(q - q⁻¹)
  mutable std::map<std::pair<Gen, PBWMonomial>, UqElement> gen_cache_;
  mutable std::map<std::pair<PBWMonomial, PBWMonomial>, UqElement> mono_cache_;
};

UqElement uq_mul(const UqElement& u, const UqElement& v, const Rational& q);
UqTensor uq_coproduct(const UqElement& u, const Rational& q);
/// α^k: F^a E^b K^c ↦ λ^{k(b-a)} F^a E^b K^c.
UqElement uq_alpha(const UqElement& u, int k, const Rational& lambda);
UqTensor uq_alpha(const UqTensor& t, int k, const Rational& lambda);

/// x^m y^n keyed by (m, n).
struct QPlaneElement {
  std::map<std::pair<int, int>, Rational> terms;

  static QPlaneElement monomial(int m, int n, Rational c = 1);
  void add(int m, int n, const Rational& c);
  QPlaneElement& operator+=(const QPlaneElement& o);
  bool operator==(const QPlaneElement&) const = default;
};

std::string to_string(const QPlaneElement& p);

/// (x^m y^n)(x^r y^s) = q^{nr} x^{m+r} y^{n+s}.
QPlaneElement qp_mul(const QPlaneElement& p1, const QPlaneElement& p2, const Rational& q);
/// β^k: x^m y^n ↦ ξ^{k(m+n)} λ^{-kn} x^m y^n.
QPlaneElement qp_beta(const QPlaneElement& p, int k, const UqParams& params);

/// Classical action of U_q(sl2) on the quantum plane; a monomial acts as the
/// composition of its generators, rightmost first.
QPlaneElement sigma_action(const UqElement& h, const QPlaneElement& p, const Rational& q);
/// ρ_l(h, p) = σ(α^{l+1}(h))(β(p)).
QPlaneElement rho_l(const UqElement& h, const QPlaneElement& p, const UqParams& params);

using UqAction = std::function<QPlaneElement(const UqElement&, const QPlaneElement&)>;

/// Module axioms "uq_module1" (h,p), "uq_module2" (h,h',p) for h, h' generators
/// and the compatibility "uq_module_algebra" (h,p,p'), over plane monomials of
/// total degree ≤ bound. Uses μ_α = α∘μ, Δ_α = Δ∘α and μ_β = β∘μ.
CheckReport check_uq_module_hom_algebra(const UqParams& params, int bound);
CheckReport check_uq_module_hom_algebra(const UqParams& params, int bound, const UqAction& action);

/// Σ p_i ⊗ h_i, stored distributively.
struct SmashTerm {
  std::map<std::pair<std::pair<int, int>, PBWMonomial>, Rational> terms;

  static SmashTerm basis(int m, int n, const PBWMonomial& h, Rational c = 1);
  void add(int m, int n, const PBWMonomial& h, const Rational& c);
  bool operator==(const SmashTerm&) const = default;
};

std::string to_string(const SmashTerm& t);

/// (a#h)(a'#h') = a(α⁻²(h₁)·β⁻¹(a'))#α⁻¹(h₂)h' with the Hom structures.
SmashTerm smash_mul_uq(const SmashTerm& t1, const SmashTerm& t2, const UqParams& params);

/// Row generator of the closed formulas for the left factor x^m y^n # row.
enum class ClosedRow { K, Kinv, E, F };
std::string to_string(ClosedRow row);

using ClosedForm = std::function<SmashTerm(ClosedRow, int m, int n, int r, int s, const UqElement& G, const UqParams&)>;

/// The l = 0 closed formulas for (x^m y^n # row)(x^r y^s # G).
SmashTerm example32_closed_form(ClosedRow row, int m, int n, int r, int s, const UqElement& G, const UqParams& params);

/// G ∈ {1, E, F, K, K⁻¹, EK}.
std::vector<std::pair<std::string, UqElement>> example32_G_list();

/// Equations "row_K", "row_Kinv", "row_E", "row_F" over (m,n,r,s,G).
/// Requires l = 0 (PreconditionFailure otherwise).
CheckReport verify_example32(const UqParams& params, int bounds);
CheckReport verify_example32(const UqParams& params, int bounds, const ClosedForm& closed);

/// Structural properties of the engine on small inputs.
/// "confluence": every word up to max_len normalizes identically under both
/// strategies and the memoized multiplication.
CheckReport check_uq_confluence(const Rational& q, int max_len);
/// "associativity" on monomials with |a|,|b|,|c| ≤ max_exp.
CheckReport check_uq_associativity(const Rational& q, int max_exp);
/// "coproduct_multiplicative" on monomials of total degree ≤ max_degree.
CheckReport check_uq_coproduct_multiplicative(const Rational& q, int max_degree);
/// "alpha_comultiplicative" and "alpha_multiplicative".
CheckReport check_uq_alpha_bialgebra(const UqParams& params, int max_degree);

/// Monomials F^a E^b K^c with a + b + |c| ≤ degree.
std::vector<PBWMonomial> pbw_monomials(int degree);

}  // namespace homtwist
