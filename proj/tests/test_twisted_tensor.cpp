#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/gallery.hpp"
#include "homtwist/oracle.hpp"

using namespace homtwist;
using testing::M;
using testing::R;

namespace {

// (a⊗b)(a'⊗b') = a a'_R ⊗ b_R b' by raw loops.
HomAlgebra naive_ttp(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& Rm) {
  const std::size_t da = A.dim, db = B.dim, n = da * db;
  std::vector<std::vector<std::vector<Rational>>> c(n, std::vector(n, std::vector<Rational>(n)));
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t b2 = 0; b2 < db; ++b2)
          for (std::size_t x = 0; x < da; ++x)
            for (std::size_t y = 0; y < db; ++y) {
              const Rational r = Rm.matrix(x * db + y, b * da + a2);
              if (r.is_zero()) continue;
              for (std::size_t p = 0; p < da; ++p)
                for (std::size_t q = 0; q < db; ++q)
                  c[a * db + b][a2 * db + b2][p * db + q] += r * A.constant(a, x, p) * B.constant(y, b2, q);
            }
  return HomAlgebra::from_constants(n, c, kron(A.alpha, B.alpha));
}

}  // namespace

TEST_CASE("flip gives the ordinary tensor product") {
  const HomAlgebra D = example_2dim(R(1), R(1), R(2));
  const HomAlgebra C = clifford_algebra(R(-3));
  const TwistingMapR F = flip(D.dim, C.dim);
  CHECK(check_hom_twisting_map(D, C, F).passed());
  CHECK(oracle::hom_twisting_map(D, C, F).ok);
  CHECK(same_structure(hom_ttp(D, C, F), tensor_algebra(D, C)));
  // Images are e_a⊗e_b for input e_b⊗e_a.
  CHECK(F.matrix(1 * 2 + 0, 0 * 2 + 1) == R(1));
}

TEST_CASE("k² family: ttp matches the naive product and the reference table") {
  for (Rational l : {R(0), R(1), R(2), R(-1), R(5, 7)}) {
    const Bundle b = build_gallery("ttp_k2_lambda", {{"lambda", l}});
    const auto& A = b.as<HomAlgebra>("A");
    const auto& Rm = b.as<TwistingMapR>("R");
    const auto& P = b.as<HomAlgebra>("product");
    CHECK(check_twisting_map(A, A, Rm).passed());
    CHECK(oracle::twisting_map(A, A, Rm).ok);
    CHECK(same_structure(P, naive_ttp(A, A, Rm)));
    CHECK(oracle::associative(P).ok);
    // Two reference entries: (e1⊗e1)(e2⊗e2) = -λ e1⊗e2, (e2⊗e1)(e1⊗e2) = (λ-1) e2⊗e2.
    CHECK(P.constant(0, 3, 1) == -l);
    CHECK(P.constant(2, 1, 3) == l - R(1));
  }
}

TEST_CASE("ttp rejects maps that are not twisting maps") {
  testing::RandomRationals rng(5);
  const HomAlgebra A = k2_algebra();
  const TwistingMapR bad(2, 2, rng.matrix(4, 4));
  CHECK_FALSE(check_twisting_map(A, A, bad).passed());
  CHECK_FALSE(oracle::twisting_map(A, A, bad).ok);
  try {
    ttp(A, A, bad);
    FAIL("expected PreconditionFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailure);
  }
}

TEST_CASE("checker and oracle agree on perturbed Hom-twisting maps") {
  testing::RandomRationals rng(17);
  int agree = 0, total = 0, failing = 0;
  for (int t = 0; t < 12; ++t) {
    const Bundle b = build_gallery("homtwist_R1", {{"a1", rng.next()}, {"a2", rng.next()}, {"a5", rng.next()}});
    const auto& D = b.as<HomAlgebra>("D");
    TwistingMapR Rm = b.as<TwistingMapR>("R");
    if (t % 2) Rm.matrix(t % 4, (t / 2) % 4) += rng.nonzero();
    const bool lib = check_hom_twisting_map(D, D, Rm).passed();
    const bool ora = oracle::hom_twisting_map(D, D, Rm).ok;
    agree += lib == ora;
    failing += !lib;
    ++total;
  }
  CHECK(agree == total);
  CHECK(failing > 0);
}

TEST_CASE("R1, R2 and D-k² families are Hom-twisting maps") {
  testing::RandomRationals rng(23);
  for (const char* key : {"homtwist_R1", "homtwist_R2"})
    for (int t = 0; t < 5; ++t) {
      GalleryParams p{{"lambda1", rng.nonzero()}};
      for (int i = 1; i <= 5; ++i) p["a" + std::to_string(i)] = rng.next();
      const Bundle b = build_gallery(key, p);
      const auto& D = b.as<HomAlgebra>("D");
      const auto& Rm = b.as<TwistingMapR>("R");
      CHECK(check_hom_twisting_map(D, D, Rm).passed());
      CHECK(oracle::hom_twisting_map(D, D, Rm).ok);
      CHECK(same_structure(b.as<HomAlgebra>("product"), naive_ttp(D, D, Rm)));
      CHECK(oracle::hom_algebra(b.as<HomAlgebra>("product")).ok);
    }
  const Bundle b = build_gallery("homtwist_Dk2", {{"a1", R(2, 3)}, {"a2", R(-5)}});
  CHECK(check_hom_twisting_map(b.as<HomAlgebra>("D"), b.as<HomAlgebra>("K2"), b.as<TwistingMapR>("R")).passed());
  CHECK(oracle::hom_algebra(b.as<HomAlgebra>("product")).ok);
}

TEST_CASE("hom_twistor_from_R deforms the tensor Hom-algebra into hom_ttp") {
  const Bundle b = build_gallery("homtwist_R2", {{"a1", R(1)}, {"a3", R(-2)}});
  const auto& D = b.as<HomAlgebra>("D");
  const auto& Rm = b.as<TwistingMapR>("R");
  const Operator2 T = hom_twistor_from_R(D, D, Rm);
  const HomAlgebra DD = tensor_algebra(D, D);
  CHECK(check_hom_twistor(DD, T).passed());
  CHECK(same_structure(deform(DD, T, Claim::HomTwistor), b.as<HomAlgebra>("product")));
}

TEST_CASE("braid condition and iterated products") {
  const HomAlgebra X = example_2dim(R(1), R(1), R(2));
  const HomAlgebra Y = yau_twist_algebra(k2_algebra(), M({{0, 1}, {1, 0}}));
  const HomAlgebra Z = clifford_algebra(R(2));
  const TwistingMapR F1 = flip(2, 2), F2 = flip(2, 2), F3 = flip(2, 2);
  CHECK(check_braid(F1, F2, F3).passed());
  CHECK(oracle::braid(F1, F2, F3).ok);
  const IteratedResult it = iterated_ttp(X, Y, Z, F1, F2, F3);
  CHECK(same_structure(it.algebra, it.right_nested));
  CHECK(same_structure(it.algebra, tensor_algebra(tensor_algebra(X, Y), Z)));
  CHECK(oracle::hom_algebra(it.algebra).ok);
  CHECK(oracle::hom_twisting_map(tensor_algebra(X, Y), Z, it.P1).ok);

  testing::RandomRationals rng(29);
  // Flips are natural, so a failure needs more than one non-flip map.
  const TwistingMapR n1(2, 2, rng.matrix(4, 4)), n2(2, 2, rng.matrix(4, 4));
  CHECK(check_braid(n1, F2, F3).passed());
  CHECK_FALSE(check_braid(n1, n2, F3).passed());
  CHECK_FALSE(oracle::braid(n1, n2, F3).ok);
}

TEST_CASE("Clifford process") {
  const Mat swap = M({{0, 1}, {1, 0}});
  const HomAlgebra A = yau_twist_algebra(k2_algebra(), swap);
  for (Rational q : {R(1), R(2), R(-3), R(1, 2)}) {
    const CliffordResult c = clifford(A, {q, swap});
    CHECK(check_hom_twisting_map(A, clifford_algebra(q), c.R).passed());
    CHECK(check_hom_algebra(c.algebra).passed());
    CHECK(equal(c.algebra.mul, oracle::clifford_closed_form(A, swap, q)));
    CHECK(oracle::hom_algebra(c.algebra).ok);
    const CliffordResult plain = clifford(k2_algebra(), {q, swap});
    CHECK(check_associative(plain.algebra).passed());
  }
  try {
    clifford(A, {R(0), swap});
    FAIL("expected PreconditionFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailure);
  }
  try {
    clifford(A, {R(2), M({{1, 1}, {0, 1}})});
    FAIL("expected NotInvolutive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolutive);
  }
}

TEST_CASE("(alpha_A, alpha_B)-twisting maps") {
  const Bundle f = build_gallery("alpha_ttp_flip", {{"q", R(-2)}});
  const auto& A = f.as<HomAlgebra>("A");
  const auto& B = f.as<HomAlgebra>("B");
  const Mat& aA = f.as<LinearMap>("alphaA").matrix;
  const Mat& aB = f.as<LinearMap>("alphaB").matrix;
  const auto& P = f.as<TwistingMapR>("P");
  CHECK(equal(alphaAB_from_classical(P, aA, aB).matrix, mat_mul(kron(aA, aB), P.matrix)));
  CHECK(check_alphaAB_twisting_map(A, B, aA, aB, f.as<TwistingMapR>("R")).passed());
  const AlphaTtpResult r = alphaAB_ttp(A, B, aA, aB, f.as<TwistingMapR>("R"));
  CHECK(same_structure(r.algebra, yau_twist_algebra(tensor_algebra(A, B), kron(aA, aB))));
  CHECK(oracle::hom_algebra(r.algebra).ok);
  CHECK(check_alpha_pseudotwistor(tensor_algebra(A, B), kron(aA, aB), r.T, r.C1, r.C2).passed());

  const Bundle cl = build_gallery("alpha_ttp_clifford", {{"q", 3}});
  CHECK(same_structure(cl.as<HomAlgebra>("product"), cl.as<HomAlgebra>("expected")));
  CHECK(oracle::hom_algebra(cl.as<HomAlgebra>("product")).ok);
}

TEST_CASE("alphaAB_from_classical needs commuting structure maps") {
  const Bundle b = build_gallery("ttp_k2_lambda", {{"lambda", 2}});
  const auto& P = b.as<TwistingMapR>("R");
  const Mat odd = M({{0, 1}, {1, 0}});
  // R_λ commutes with swap⊗swap but not with swap⊗id.
  CHECK(check_commutes(P, odd, odd).passed());
  CHECK_FALSE(check_commutes(P, odd, identity(2)).passed());
  try {
    alphaAB_from_classical(P, odd, identity(2));
    FAIL("expected CommutationFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CommutationFailure);
  }
  const TwistingMapR lifted = alphaAB_from_classical(P, odd, odd);
  const HomAlgebra A = b.as<HomAlgebra>("A");
  CHECK(check_deform_compat_ttp(A, A, odd, odd, P).passed());
  CHECK(same_structure(alphaAB_ttp(A, A, odd, odd, lifted).algebra,
                       yau_twist_algebra(b.as<HomAlgebra>("product"), kron(odd, odd))));
}
