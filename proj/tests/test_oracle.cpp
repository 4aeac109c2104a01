#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/gallery.hpp"
#include "homtwist/oracle.hpp"

using namespace homtwist;
using testing::M;
using testing::R;

namespace {

using Constants = std::vector<std::vector<std::vector<Rational>>>;

Constants zero(std::size_t n, std::size_t m, std::size_t k) {
  return Constants(n, std::vector(m, std::vector<Rational>(k)));
}

}  // namespace

TEST_CASE("oracle separates associative and non-associative tables") {
  Constants c = zero(2, 2, 2);
  c[0][0][1] = 1;  // e1e1 = e2
  const HomAlgebra nil = HomAlgebra::from_constants(2, c, identity(2));
  CHECK(oracle::associative(nil).ok);
  CHECK(oracle::hom_algebra(nil).ok);
  c[1][0][0] = 1;  // e2e1 = e1, so (e1e1)e1 = e1 but e1(e1e1) = 0
  const HomAlgebra bad = HomAlgebra::from_constants(2, c, identity(2));
  const oracle::Verdict v = oracle::associative(bad);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
  CHECK_FALSE(oracle::hom_algebra(bad).ok);
}

TEST_CASE("oracle checks that alpha is multiplicative") {
  const HomAlgebra k2 = k2_algebra();
  const HomAlgebra scaled(2, k2.mul, M({{2, 0}, {0, 1}}));
  CHECK_FALSE(oracle::hom_algebra(scaled).ok);
  // The swap needs the twisted product e1e1 = e2, e2e2 = e1.
  CHECK_FALSE(oracle::hom_algebra(HomAlgebra(2, k2.mul, M({{0, 1}, {1, 0}}))).ok);
  Constants c = zero(2, 2, 2);
  c[0][0][1] = c[1][1][0] = 1;
  CHECK(oracle::hom_algebra(HomAlgebra::from_constants(2, c, M({{0, 1}, {1, 0}}))).ok);
}

TEST_CASE("oracle on coalgebras") {
  Constants d = zero(2, 2, 2);
  d[0][0][0] = d[1][1][1] = 1;
  const HomCoalgebra g = HomCoalgebra::from_constants(2, d, identity(2));
  CHECK(oracle::hom_coalgebra(g).ok);
  // Δ(e1) = e2⊗e1, Δ(e2) = e1⊗e1: the two iterates of e1 are e1⊗e1⊗e1 and e2⊗e2⊗e1.
  d = zero(2, 2, 2);
  d[0][1][0] = d[1][0][0] = 1;
  CHECK_FALSE(oracle::hom_coalgebra(HomCoalgebra::from_constants(2, d, identity(2))).ok);
}

TEST_CASE("oracle on twisting maps and braids") {
  const HomAlgebra k2 = k2_algebra();
  const TwistingMapR f = flip(2, 2);
  CHECK(oracle::twisting_map(k2, k2, f).ok);
  CHECK(oracle::braid(f, f, f).ok);
  // Doubling scales one side of each multiplicativity equation by 2, the other by 4.
  const TwistingMapR doubled(2, 2, f.matrix * Rational(2));
  CHECK_FALSE(oracle::twisting_map(k2, k2, doubled).ok);
}

TEST_CASE("oracle on modules and comodules") {
  const HomAlgebra k2 = k2_algebra();
  Constants t = zero(2, 2, 2);
  t[0][0][0] = t[0][1][1] = t[1][0][0] = t[1][1][1] = 1;  // both idempotents act as identity
  const ActionTable both = ActionTable::from_constants(Side::Left, 2, 2, t, identity(2));
  CHECK_FALSE(oracle::module(k2, both).ok);
  t[1][0][0] = t[1][1][1] = 0;  // e1 acts as identity, e2 as zero
  CHECK(oracle::module(k2, ActionTable::from_constants(Side::Left, 2, 2, t, identity(2))).ok);

  const HomBialgebra G = group_bialgebra(2);
  Constants c = zero(2, 2, 2);
  c[0][0][0] = c[1][1][1] = 1;  // λ(g^i) = g^i⊗g^i
  CHECK(oracle::comodule(G.coalgebra, CoactionTable::from_constants(Side::Left, 2, 2, c, identity(2))).ok);
  c[1][1][1] = 2;
  CHECK_FALSE(oracle::comodule(G.coalgebra, CoactionTable::from_constants(Side::Left, 2, 2, c, identity(2))).ok);
}

TEST_CASE("generator formulas reduce to the classical action") {
  const UqParams u{R(2), R(1), R(1), 0};
  // E·(x y²) = [2] x² y, F·(x y²) = [1] y³, K·(x y²) = q⁻¹ x y².
  CHECK(oracle::rho_generator_formula(Gen::E, 1, 2, u) == QPlaneElement::monomial(2, 1, R(5, 2)));
  CHECK(oracle::rho_generator_formula(Gen::F, 1, 2, u) == QPlaneElement::monomial(0, 3, R(1)));
  CHECK(oracle::rho_generator_formula(Gen::K, 1, 2, u) == QPlaneElement::monomial(1, 2, R(1, 2)));
  CHECK(oracle::rho_generator_formula(Gen::Kinv, 1, 2, u) == QPlaneElement::monomial(1, 2, R(2)));
  // F kills x⁰, E kills y⁰.
  CHECK(oracle::rho_generator_formula(Gen::F, 0, 2, u).terms.empty());
  CHECK(oracle::rho_generator_formula(Gen::E, 3, 0, u).terms.empty());
}
