#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/hom_algebra.hpp"

using namespace homtwist;
using testing::M;
using testing::R;

namespace {

// The two-dimensional Hom-associative family, written out independently of the gallery.
HomAlgebra two_dim(Rational a, Rational l1, Rational l2, bool with_alpha = true) {
  Mat mul = zeros(2, 4);
  mul(0, 0) = a;
  mul(0, 1) = mul(0, 2) = l1 * a;
  mul(1, 1) = mul(1, 2) = l2 * a;
  const Rational one_minus = Rational(1) - l2;
  mul(0, 3) = l1 * l1 * (Rational(1) - Rational(2) * l2) * a / (one_minus * one_minus);
  mul(1, 3) = Rational(2) * l1 * l2 * a / one_minus;
  const Mat alpha = with_alpha ? M({{1, l1}, {0, l2}}) : identity(2);
  return HomAlgebra(2, mul, alpha);
}

HomAlgebra k2() {
  Mat mul = zeros(2, 4);
  mul(0, 0) = 1;
  mul(1, 3) = 1;
  return HomAlgebra(2, mul);
}

// Raw index loops, kept deliberately naive.
bool naive_hom_associative(const HomAlgebra& A) {
  const std::size_t d = A.dim;
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return A.mul(k, i * d + j); };
  // α(e_i)(e_j e_k) vs (e_i e_j)α(e_k), coefficient of e_l.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t s = 0; s < d; ++s) {
              lhs += A.alpha(p, i) * c(j, k, s) * c(p, s, l);
              rhs += c(i, j, s) * A.alpha(p, k) * c(s, p, l);
            }
          if (lhs != rhs) return false;
        }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t s = 0; s < d; ++s) lhs += c(i, j, s) * A.alpha(l, s);
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t s = 0; s < d; ++s) rhs += A.alpha(p, i) * A.alpha(s, j) * c(p, s, l);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("two-dimensional family is Hom-associative but not associative") {
  for (auto [a, l1, l2] : {std::tuple{R(1), R(1), R(2)}, {R(2), R(3), R(-1)}, {R(1), R(2), R(1, 2)}}) {
    const HomAlgebra D = two_dim(a, l1, l2);
    CHECK(check_hom_algebra(D).passed());
    CHECK_FALSE(check_associative(D).passed());
    CHECK(naive_hom_associative(D));
  }
  CHECK(check_associative(two_dim(R(1), R(1), R(0))).passed());
  CHECK(check_hom_algebra(two_dim(R(3), R(-2), R(0))).passed());
}

TEST_CASE("identity alpha on the deformed product is not Hom-associative") {
  const HomAlgebra D = two_dim(R(1), R(1), R(2), false);
  const CheckReport r = check_hom_algebra(D);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures().empty());
  CHECK(r.failures().front().equation == "hom_associativity");
  CHECK_FALSE(naive_hom_associative(D));
}

TEST_CASE("zero multiplication and associative algebras") {
  CHECK(check_associative(HomAlgebra(3, zeros(3, 9))).passed());
  CHECK(check_hom_algebra(k2()).passed());
  CHECK(check_hom_algebra(HomAlgebra(0, zeros(0, 0))).passed());
}

TEST_CASE("checker agrees with naive loops on random perturbations") {
  testing::RandomRationals rng(5);
  const HomAlgebra D = two_dim(R(1), R(2), R(1, 2));
  for (int trial = 0; trial < 10; ++trial) {
    HomAlgebra E = D;
    E.mul(trial % 2, trial % 4) += rng.nonzero();
    CHECK(check_hom_algebra(E).passed() == naive_hom_associative(E));
  }
}

TEST_CASE("yau_twist_algebra") {
  const Mat swap = M({{0, 1}, {1, 0}});
  const HomAlgebra T = yau_twist_algebra(k2(), swap);
  CHECK(T.constant(0, 0, 1) == R(1));
  CHECK(T.constant(0, 0, 0) == R(0));
  CHECK(check_hom_algebra(T).passed());
  CHECK(same_structure(yau_twist_algebra(k2(), identity(2)), k2()));

  try {
    yau_twist_algebra(k2(), M({{1, 1}, {0, 1}}));
    FAIL("expected NotMultiplicative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultiplicative);
  }
}

TEST_CASE("tensor_algebra") {
  const HomAlgebra kk = tensor_algebra(k2(), k2());
  CHECK(kk.dim == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(kk.constant(i, j, k) == R(i == j && j == k ? 1 : 0));

  const HomAlgebra Dk = tensor_algebra(two_dim(R(1), R(1), R(2)), k2());
  CHECK(check_hom_algebra(Dk).passed());
  CHECK(naive_hom_associative(Dk));
  CHECK(tensor_algebra(k2(), HomAlgebra(3, zeros(3, 9))).dim == 6);
  CHECK(kk.labels[1] == "e1⊗e2");
}

TEST_CASE("algebra morphisms") {
  const HomAlgebra D = two_dim(R(1), R(1), R(2));
  CHECK(check_algebra_morphism({2, 2, identity(2)}, D, D).passed());
  CHECK(check_algebra_morphism({2, 2, D.alpha}, D, D).passed());
  CHECK(check_algebra_morphism({2, 2, zeros(2, 2)}, D, D).passed());
  CHECK_FALSE(check_algebra_morphism({2, 2, M({{2, 0}, {0, 2}})}, D, D).passed());
  CHECK_THROWS_AS(check_algebra_morphism({2, 3, zeros(3, 2)}, D, D), Error);
}

TEST_CASE("four-element lemma") {
  CHECK(check_lemma_four_elements(two_dim(R(1), R(1), R(2))).passed());
  CHECK(check_lemma_four_elements(two_dim(R(2), R(3), R(-1))).passed());
  CHECK(check_lemma_four_elements(k2()).passed());
  const CheckReport bad = check_lemma_four_elements(two_dim(R(1), R(1), R(2), false));
  CHECK_FALSE(bad.passed());
  CHECK(bad.failures().front().equation.rfind("precondition/", 0) == 0);
  CHECK_THROWS_AS(check_lemma_four_elements(yau_twist_algebra(HomAlgebra(2, zeros(2, 4)), zeros(2, 2))), Error);
}
