#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/oracle.hpp"
#include "homtwist/uq_sl2.hpp"

using namespace homtwist;
using testing::R;

namespace {

constexpr PBWMonomial one{0, 0, 0}, E{0, 1, 0}, F{1, 0, 0}, K{0, 0, 1}, Kinv{0, 0, -1};

UqElement el(std::initializer_list<std::pair<PBWMonomial, Rational>> terms) {
  UqElement u;
  for (const auto& [m, c] : terms) u.add(m, c);
  return u;
}

ErrorKind validate_kind(const UqParams& p) {
  try {
    p.validate();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0, R(2)) == R(0));
  CHECK(q_int(1, R(2)) == R(1));
  CHECK(q_int(2, R(2)) == R(5, 2));
  CHECK(q_int(3, R(2)) == R(21, 4));
  CHECK(q_int(-2, R(3)) == -(R(3) + R(1, 3)));
}

TEST_CASE("defining relations normalize as expected") {
  for (Rational q : {R(2), R(3), R(-1, 2)}) {
    const Rational d = R(1) / (q - q.inverse());
    for (RewriteStrategy s : {RewriteStrategy::Leftmost, RewriteStrategy::Rightmost}) {
      CHECK(pbw_normalize({Gen::K, Gen::E}, q, s) == el({{{0, 1, 1}, q * q}}));
      CHECK(pbw_normalize({Gen::K, Gen::F}, q, s) == el({{{1, 0, 1}, (q * q).inverse()}}));
      CHECK(pbw_normalize({Gen::E, Gen::F}, q, s) == el({{{1, 1, 0}, R(1)}, {K, d}, {Kinv, -d}}));
      CHECK(pbw_normalize({Gen::K, Gen::Kinv}, q, s) == UqElement::unit());
      CHECK(pbw_normalize({Gen::Kinv, Gen::K}, q, s) == UqElement::unit());
    }
  }
}

TEST_CASE("multiplication, coproduct and alpha") {
  const Rational q = 2;
  UqAlgebra U(q);
  // Δ(E) = 1⊗E + E⊗K, so Δ(E²) = 1⊗E² + (1+q²) E⊗EK + E²⊗K².
  UqTensor want;
  want.add(one, {0, 2, 0}, 1);
  want.add(E, {0, 1, 1}, 5);
  want.add({0, 2, 0}, {0, 0, 2}, 1);
  CHECK(U.coproduct(PBWMonomial{0, 2, 0}) == want);
  CHECK(U.tensor_mul(U.coproduct(E), U.coproduct(E)) == want);
  CHECK(U.mul(E, E) == UqElement::monomial({0, 2, 0}));
  CHECK(U.mul(K, F) == el({{{1, 0, 1}, R(1, 4)}}));
  CHECK(uq_alpha(UqElement::monomial({1, 3, 2}), 1, R(3)) == el({{{1, 3, 2}, R(9)}}));
  CHECK(uq_alpha(UqElement::monomial(F), 2, R(3)) == el({{F, R(1, 9)}}));
  CHECK(check_uq_confluence(q, 4).passed());
  CHECK(check_uq_associativity(R(3), 1).passed());
  CHECK(check_uq_coproduct_multiplicative(q, 2).passed());
  CHECK(check_uq_alpha_bialgebra({q, R(3), R(5), 0}, 2).passed());
  CHECK(pbw_monomials(1).size() == 5);
}

TEST_CASE("parameter validation") {
  CHECK(validate_kind({R(1), R(1), R(1), 0}) == ErrorKind::DegenerateQ);
  CHECK(validate_kind({R(-1), R(1), R(1), 0}) == ErrorKind::DegenerateQ);
  CHECK(validate_kind({R(0), R(1), R(1), 0}) == ErrorKind::DegenerateQ);
  CHECK(validate_kind({R(2), R(0), R(1), 0}) == ErrorKind::ParamConstraintViolation);
  CHECK(validate_kind({R(2), R(1), R(0), 0}) == ErrorKind::ParamConstraintViolation);
  CHECK(validate_kind({R(2), R(1), R(1), -1}) == ErrorKind::ParamConstraintViolation);
  CHECK(validate_kind({R(2), R(1), R(1), 3}) == ErrorKind::SyntaxError);  // no error
}

TEST_CASE("quantum plane and the classical action") {
  const Rational q = 2;
  CHECK(qp_mul(QPlaneElement::monomial(0, 1), QPlaneElement::monomial(1, 0), q) == QPlaneElement::monomial(1, 1, q));
  // E·(x y²) = [2] x² y, F·(x y²) = [1] y³, K·(x y²) = q^{1-2} x y².
  const QPlaneElement p = QPlaneElement::monomial(1, 2);
  CHECK(sigma_action(UqElement::monomial(E), p, q) == QPlaneElement::monomial(2, 1, R(5, 2)));
  CHECK(sigma_action(UqElement::monomial(F), p, q) == QPlaneElement::monomial(0, 3, R(1)));
  CHECK(sigma_action(UqElement::monomial(K), p, q) == QPlaneElement::monomial(1, 2, R(1, 2)));
  // EK acts as E after K, and K∘E = q² E∘K.
  const QPlaneElement ek = sigma_action(UqElement::monomial({0, 1, 1}), p, q);
  CHECK(ek == sigma_action(UqElement::monomial(E), sigma_action(UqElement::monomial(K), p, q), q));
  const QPlaneElement ke = sigma_action(UqElement::monomial(K), sigma_action(UqElement::monomial(E), p, q), q);
  CHECK(ke == QPlaneElement::monomial(2, 1, R(5, 2) * R(2)));
  CHECK(ek == QPlaneElement::monomial(2, 1, R(5, 2) / R(2)));
}

TEST_CASE("rho_l agrees with the closed generator formulas") {
  for (const UqParams& u : {UqParams{R(2), R(3), R(5), 0}, UqParams{R(3), R(1, 2), R(2), 1},
                            UqParams{R(-2), R(2), R(1, 3), 2}}) {
    CHECK(oracle::rho_extension(u, 3).ok);
    const std::pair<Gen, PBWMonomial> gens[] = {{Gen::E, E}, {Gen::F, F}, {Gen::K, K}, {Gen::Kinv, Kinv}};
    for (auto [g, mono] : gens)
      for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
          CHECK(rho_l(UqElement::monomial(mono), QPlaneElement::monomial(m, n), u) ==
                oracle::rho_generator_formula(g, m, n, u));
    CHECK(check_uq_module_hom_algebra(u, 2).passed());
  }
}

TEST_CASE("untwisted action fails the Hom module-algebra axioms") {
  const UqParams u{R(2), R(3), R(5), 0};
  const CheckReport r = check_uq_module_hom_algebra(
      u, 2, [&](const UqElement& h, const QPlaneElement& p) { return sigma_action(h, p, u.q); });
  CHECK_FALSE(r.passed());
}

TEST_CASE("smash product closed formulas") {
  const UqParams u{R(2), R(3), R(5), 0};
  CHECK(verify_example32(u, 2).passed());
  CHECK(example32_G_list().size() == 6);

  // One wrong coefficient in the E row must be detected.
  const ClosedForm perturbed = [](ClosedRow row, int m, int n, int r, int s, const UqElement& G,
                                  const UqParams& p) {
    SmashTerm t = example32_closed_form(row, m, n, r, s, G, p);
    if (row == ClosedRow::E && m == 1 && r == 0 && s == 0) t.add(0, 0, PBWMonomial{}, 1);
    return t;
  };
  const CheckReport bad = verify_example32(u, 2, perturbed);
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.failures().front().equation == "row_E");

  try {
    verify_example32({R(2), R(3), R(5), 1}, 1);
    FAIL("expected PreconditionFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailure);
  }
}

TEST_CASE("smash multiplication by 1#1") {
  const UqParams u{R(3), R(2), R(1, 2), 0};
  // ρ(1, β⁻¹(x)) = x, so (1#1)(x#1) = μ_β(1, x)#μ_α(1, 1) = ξ x#1.
  const SmashTerm unit = SmashTerm::basis(0, 0, one);
  CHECK(smash_mul_uq(unit, SmashTerm::basis(1, 0, one), u) == SmashTerm::basis(1, 0, one, R(1, 2)));
}
