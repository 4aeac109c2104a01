#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/gallery.hpp"
#include "homtwist/oracle.hpp"

using namespace homtwist;
using testing::M;
using testing::R;

namespace {

// k[C_n] coalgebra: Δ(g^i) = g^i ⊗ g^i.
HomCoalgebra grouplike(std::size_t n) {
  Mat de = zeros(n * n, n);
  for (std::size_t i = 0; i < n; ++i) de(i * n + i, i) = 1;
  return HomCoalgebra(n, de);
}

// Permutation matrix sending e_i to e_{p[i]}.
Mat perm(const std::vector<std::size_t>& p) {
  Mat m = zeros(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

}  // namespace

TEST_CASE("grouplike coalgebra is coassociative") {
  const HomCoalgebra C = grouplike(3);
  CHECK(check_coassociative(C).passed());
  CHECK(check_hom_coalgebra(C).passed());
  CHECK(oracle::hom_coalgebra(C).ok);
}

TEST_CASE("yau twist of a coalgebra along a coalgebra map") {
  const HomCoalgebra C = grouplike(3);
  const Mat alpha = perm({0, 2, 1});  // g ↦ g²
  const HomCoalgebra T = yau_twist_coalgebra(C, alpha);
  CHECK(check_hom_coalgebra(T).passed());
  CHECK(oracle::hom_coalgebra(T).ok);
  CHECK_FALSE(check_coassociative(T).passed());
  // Δ_α(e_1) = Δ(e_2) = e_2⊗e_2, computed by hand.
  CHECK(T.comul(2 * 3 + 2, 1) == R(1));
  CHECK(T.comul(1 * 3 + 1, 1) == R(0));
}

TEST_CASE("yau_twist_coalgebra preconditions") {
  const HomCoalgebra C = grouplike(2);
  CHECK_THROWS_AS(yau_twist_coalgebra(C, M({{1, 1}, {0, 1}})), Error);
  try {
    yau_twist_coalgebra(C, M({{1, 1}, {0, 1}}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComultiplicative);
  }
  const HomCoalgebra T = yau_twist_coalgebra(grouplike(2), perm({1, 0}));
  try {
    yau_twist_coalgebra(T, perm({1, 0}));
    FAIL("expected PreconditionFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailure);
  }
}

TEST_CASE("perturbed comultiplication is caught by checker and oracle alike") {
  testing::RandomRationals rng(7);
  const HomCoalgebra base = grouplike(2);
  int disagreements = 0, failures = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Mat de = base.comul;
    de(trial % 4, trial % 2) += rng.nonzero();
    const HomCoalgebra C(2, de);
    const bool lib = check_hom_coalgebra(C).passed();
    const bool ora = oracle::hom_coalgebra(C).ok;
    disagreements += lib != ora;
    failures += !lib;
  }
  CHECK(disagreements == 0);
  CHECK(failures > 0);
}

TEST_CASE("Sweedler H4 is a bialgebra and its Yau twists are Hom-bialgebras") {
  const HomBialgebra H = sweedler_h4();
  CHECK(check_hom_bialgebra(H).passed());
  CHECK(oracle::hom_bialgebra(H).ok);
  for (Rational c : {R(1), R(-1), R(3), R(1, 2)}) {
    const Mat alpha = M({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, c, 0}, {0, 0, 0, c}});
    const HomBialgebra T = yau_twist_bialgebra(H, alpha);
    CHECK(check_hom_bialgebra(T).passed());
    CHECK(oracle::hom_bialgebra(T).ok);
  }
}

TEST_CASE("a non-multiplicative map is rejected by yau_twist_bialgebra") {
  const HomBialgebra H = sweedler_h4();
  const Mat alpha = M({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}});
  try {
    yau_twist_bialgebra(H, alpha);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultiplicative);
  }
}

TEST_CASE("bialgebra failure names the compatibility equation") {
  const HomBialgebra G = group_bialgebra(2);
  // Replace Δ by the primitive-style Δ(g) = g⊗1 + 1⊗g, which breaks multiplicativity.
  Mat de = G.comul();
  de.col(1).setConstant(R(0));
  de(1, 1) = 1;
  de(2, 1) = 1;
  const HomBialgebra bad(2, G.mul(), de, identity(2));
  const CheckReport r = check_hom_bialgebra(bad);
  REQUIRE_FALSE(r.passed());
  CHECK_FALSE(oracle::hom_bialgebra(bad).ok);
  bool saw_mul = false;
  for (const Failure& f : r.failures()) saw_mul |= f.equation == "hombia_mul";
  CHECK(saw_mul);
}
