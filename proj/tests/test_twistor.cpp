#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/gallery.hpp"
#include "homtwist/oracle.hpp"

using namespace homtwist;
using testing::M;
using testing::R;

namespace {

// μ∘T by raw loops: c'[i][j][k] = Σ_{p,q} T[(p,q),(i,j)] c[p][q][k].
HomAlgebra naive_deform(const HomAlgebra& D, const Operator2& T) {
  const std::size_t n = D.dim;
  std::vector<std::vector<std::vector<Rational>>> c(n, std::vector(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t k = 0; k < n; ++k) c[i][j][k] += T.matrix(p * n + q, i * n + j) * D.constant(p, q, k);
  return HomAlgebra::from_constants(n, c, D.alpha);
}

Mat swap2() { return M({{0, 1}, {1, 0}}); }

}  // namespace

TEST_CASE("lift_13 acts on the outer factors") {
  testing::RandomRationals rng(3);
  const std::size_t d = 2;
  const Operator2 T(d, rng.matrix(4, 4));
  const Operator3 L = lift_13(T);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q)
            for (std::size_t r = 0; r < d; ++r) {
              const Rational want = q == j ? T.matrix(p * d + r, i * d + k) : Rational(0);
              CHECK(L.matrix((p * d + q) * d + r, (i * d + j) * d + k) == want);
            }
  CHECK(equal(lift_12(T).matrix, kron(T.matrix, identity(d))));
  CHECK(equal(lift_23(T).matrix, kron(identity(d), T.matrix)));
}

TEST_CASE("two-dimensional Hom-twistor and its deformation") {
  for (auto [a, l1, l2] : {std::tuple{R(1), R(1), R(2)}, {R(2), R(3), R(-1)}, {R(1), R(2), R(1, 2)}}) {
    const Bundle b = build_gallery("homtwistor_2dim", {{"a", a}, {"lambda1", l1}, {"lambda2", l2}});
    const auto& D = b.as<HomAlgebra>("D");
    const auto& T = b.as<Operator2>("T");
    CHECK(check_hom_twistor(D, T).passed());
    const HomAlgebra DT = deform(D, T, Claim::HomTwistor);
    CHECK(same_structure(DT, naive_deform(D, T)));
    CHECK(oracle::hom_algebra(DT).ok);
    // μ_T(e1,e2) = λ₁a/(1-λ₂) e1 while μ_T(e2,e1) = λ₁a e1 + λ₂a e2.
    CHECK(DT.constant(0, 1, 0) == l1 * a / (R(1) - l2));
    CHECK(DT.constant(0, 1, 1) == R(0));
    CHECK(DT.constant(1, 0, 1) == l2 * a);
  }
}

TEST_CASE("twistor from a twisting map deforms to the twisted tensor product") {
  for (Rational l : {R(0), R(2), R(-1, 3)}) {
    const Bundle b = build_gallery("ttp_k2_lambda", {{"lambda", l}});
    const auto& A = b.as<HomAlgebra>("A");
    const auto& Rm = b.as<TwistingMapR>("R");
    const HomAlgebra D = tensor_algebra(A, A);
    const Operator2 T = twistor_from_R(A, A, Rm);
    CHECK(check_twistor(D, T).passed());
    CHECK(check_pseudotwistor(D, T, lift_13(T), lift_13(T)).passed());
    const HomAlgebra DT = deform(D, T, Claim::Twistor);
    CHECK(same_structure(DT, naive_deform(D, T)));
    CHECK(same_structure(DT, b.as<HomAlgebra>("product")));
    CHECK(oracle::associative(DT).ok);
  }
}

TEST_CASE("random operators fail the twistor axioms with witnesses") {
  testing::RandomRationals rng(11);
  const HomAlgebra D = k2_algebra();
  int failed = 0;
  for (int t = 0; t < 10; ++t) {
    const Operator2 T(2, rng.matrix(4, 4));
    const CheckReport r = check_twistor(D, T);
    if (r.passed()) {
      CHECK(oracle::associative(deform(D, T)).ok);
    } else {
      ++failed;
      CHECK_FALSE(r.failures().empty());
    }
  }
  CHECK(failed > 0);
}

TEST_CASE("yau operator is an alpha-pseudotwistor and deforms to the Yau twist") {
  const HomAlgebra D0 = example_2dim(R(2), R(3), R(0));
  const HomAlgebra D(D0.dim, D0.mul);
  for (const Mat& alpha : {D0.alpha, identity(2)}) {
    const TwistorTriple y = yau_operator(alpha);
    CHECK(check_alpha_pseudotwistor(D, alpha, y.T, y.C1, y.C2).passed());
    const HomAlgebra deformed = deform_alpha(D, alpha, y.T);
    CHECK(same_structure(deformed, yau_twist_algebra(D, alpha)));
    CHECK(oracle::hom_algebra(deformed).ok);
  }
  const HomAlgebra k2 = k2_algebra();
  const TwistorTriple y = yau_operator(swap2());
  CHECK(check_alpha_pseudotwistor(k2, swap2(), y.T, y.C1, y.C2).passed());
  CHECK(same_structure(deform_alpha(k2, swap2(), y.T), yau_twist_algebra(k2, swap2())));
}

TEST_CASE("alpha-pseudotwistor needs an algebra endomorphism") {
  const HomAlgebra k2 = k2_algebra();
  const Mat bad = M({{1, 1}, {0, 1}});
  const TwistorTriple y = yau_operator(bad);
  try {
    check_alpha_pseudotwistor(k2, bad, y.T, y.C1, y.C2);
    FAIL("expected NotMultiplicative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultiplicative);
  }
}

TEST_CASE("Yau twisting commutes with deformation by a commuting twistor") {
  const Bundle b = build_gallery("ttp_k2_lambda", {{"lambda", 2}});
  const auto& A = b.as<HomAlgebra>("A");
  const HomAlgebra D = tensor_algebra(A, A);
  const Operator2 T = twistor_from_R(A, A, b.as<TwistingMapR>("R"));
  const Mat alpha = kron(swap2(), swap2());
  const CheckReport r = check_yau_compat(D, alpha, T, lift_13(T), lift_13(T));
  CHECK(r.passed());
  const HomAlgebra twisted = yau_twist_algebra(deform(D, T), alpha);
  CHECK(oracle::hom_algebra(twisted).ok);

  const CheckReport bad = check_yau_compat(D, kron(M({{1, 1}, {0, 1}}), identity(2)), T, lift_13(T), lift_13(T));
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.failures().front().equation.rfind("precondition/", 0) == 0);
}
