#include "homtwist/twisted_tensor.hpp"

#include "homtwist/error.hpp"

namespace homtwist {

TwistingMapR::TwistingMapR(std::size_t dimA, std::size_t dimB, Mat m) : dimA(dimA), dimB(dimB), matrix(std::move(m)) {
  const std::size_t n = dimA * dimB;
  require_dims(std::size_t(matrix.rows()) == n && std::size_t(matrix.cols()) == n,
               "twisting map must be (dim_a*dim_b) x (dim_a*dim_b)");
}

void TwistingMapR::set_image(std::size_t b, std::size_t a, const std::vector<Rational>& coords) {
  require_dims(coords.size() == dimA * dimB, "twisting map image has wrong length");
  for (std::size_t r = 0; r < coords.size(); ++r) matrix(r, b * dimA + a) = coords[r];
}

TwistingMapR flip(std::size_t dimA, std::size_t dimB) { return TwistingMapR(dimA, dimB, swap_matrix(dimB, dimA)); }

namespace {

void require_map_dims(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  A.validate();
  B.validate();
  require_dims(R.dimA == A.dim && R.dimB == B.dim,
               "twisting map dims (" + std::to_string(R.dimA) + "," + std::to_string(R.dimB) +
                   ") do not match algebras (" + std::to_string(A.dim) + "," + std::to_string(B.dim) + ")");
}

void require_alpha(const Mat& alpha, std::size_t dim) {
  require_dims(std::size_t(alpha.rows()) == dim && std::size_t(alpha.cols()) == dim, "alpha has wrong shape");
}

// Shared by the classical and Hom checks: with `hom` the α_B, α_A factors
// of the Hom-twisting equations are inserted, otherwise identities.
void twisting_equations(CheckReport& r, const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R, bool hom,
                        const std::string& prefix) {
  const LinOp muA = mul_op(A), muB = mul_op(B), Ro = R.op();
  const LinOp alA = hom ? alpha_op(A) : LinOp(identity(A.dim)), alB = hom ? alpha_op(B) : LinOp(identity(B.dim));
  const std::vector<std::size_t> baa{B.dim, A.dim, A.dim}, bba{B.dim, B.dim, A.dim};
  scan(r, prefix + "1", baa, [&](auto t) {
    const TensorVec v = TensorVec::basis(baa, t);
    TensorVec lhs = v.apply(muA, 1).apply(alB, 0).apply(Ro, 0);
    TensorVec rhs = v.apply(Ro, 0).apply(Ro, 1).apply(muA, 0).apply(alB, 1);
    return Sides{std::move(lhs), std::move(rhs)};
  });
  scan(r, prefix + "2", bba, [&](auto t) {
    const TensorVec v = TensorVec::basis(bba, t);
    TensorVec lhs = v.apply(muB, 0).apply(alA, 1).apply(Ro, 0);
    TensorVec rhs = v.apply(Ro, 1).apply(Ro, 0).apply(muB, 1).apply(alA, 0);
    return Sides{std::move(lhs), std::move(rhs)};
  });
}

std::vector<std::string> clifford_labels(const HomAlgebra& A) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < A.dim; ++i) {
    out.push_back(A.label(i) + "⊗1");
    out.push_back(A.label(i) + "⊗v");
  }
  return out;
}

void commutes_equation(CheckReport& r, const std::string& id, const TwistingMapR& R, const Mat& alphaA,
                       const Mat& alphaB) {
  require_alpha(alphaA, R.dimA);
  require_alpha(alphaB, R.dimB);
  const LinOp Ro = R.op(), aA(alphaA), aB(alphaB);
  const std::vector<std::size_t> ba{R.dimB, R.dimA};
  scan(r, id, ba, [&](auto t) {
    const TensorVec v = TensorVec::basis(ba, t);
    return Sides{v.apply(Ro, 0).apply(aA, 0).apply(aB, 1), v.apply(aB, 0).apply(aA, 1).apply(Ro, 0)};
  });
}

}  // namespace

CheckReport check_commutes(const TwistingMapR& R, const Mat& alphaA, const Mat& alphaB) {
  CheckReport r;
  commutes_equation(r, "commutes", R, alphaA, alphaB);
  return r;
}

CheckReport check_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  require_map_dims(A, B, R);
  CheckReport r;
  twisting_equations(r, A, B, R, false, "twmap");
  return r;
}

CheckReport check_hom_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  require_map_dims(A, B, R);
  CheckReport r;
  commutes_equation(r, "homtwmap0", R, A.alpha, B.alpha);
  twisting_equations(r, A, B, R, true, "homtwmap");
  return r;
}

HomAlgebra twisted_product(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  require_map_dims(A, B, R);
  const Mat mid = kron({identity(A.dim), R.matrix, identity(B.dim)});
  HomAlgebra out(A.dim * B.dim, mat_mul(kron(A.mul, B.mul), mid), kron(A.alpha, B.alpha));
  out.labels = tensor_labels(A.labels, B.labels);
  return out;
}

HomAlgebra ttp(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  const CheckReport c = check_twisting_map(A, B, R);
  if (!c.passed()) raise(ErrorKind::PreconditionFailure, "not a twisting map: " + c.summary());
  HomAlgebra out = twisted_product(A, B, R);
  out.provenance = "ttp(" + A.provenance + "," + B.provenance + ")";
  return out;
}

namespace {

Operator2 twistor_matrix(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R, const Mat& left,
                         const Mat& right) {
  // (a⊗b)⊗(a'⊗b') ↦ (left(a)⊗b_R)⊗(a'_R⊗right(b')); R's output (a',b) is swapped back into place.
  const Mat mid = mat_mul(swap_matrix(A.dim, B.dim), R.matrix);
  return Operator2(A.dim * B.dim, kron({left, mid, right}));
}

}  // namespace

Operator2 twistor_from_R(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  const CheckReport c = check_twisting_map(A, B, R);
  if (!c.passed()) raise(ErrorKind::PreconditionFailure, "not a twisting map: " + c.summary());
  return twistor_matrix(A, B, R, identity(A.dim), identity(B.dim));
}

HomAlgebra hom_ttp(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  const CheckReport c = check_hom_twisting_map(A, B, R);
  if (!c.passed()) raise(ErrorKind::PreconditionFailure, "not a Hom-twisting map: " + c.summary());
  HomAlgebra out = twisted_product(A, B, R);
  out.provenance = "hom_ttp(" + A.provenance + "," + B.provenance + ")";
  return out;
}

Operator2 hom_twistor_from_R(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  const CheckReport c = check_hom_twisting_map(A, B, R);
  if (!c.passed()) raise(ErrorKind::PreconditionFailure, "not a Hom-twisting map: " + c.summary());
  return twistor_matrix(A, B, R, identity(A.dim), identity(B.dim));
}

CheckReport check_braid(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3) {
  const std::size_t a = R1.dimA, b = R1.dimB, c = R2.dimB;
  require_dims(R2.dimA == b && R3.dimA == a && R3.dimB == c, "braid: twisting maps have incompatible dimensions");
  const LinOp o1 = R1.op(), o2 = R2.op(), o3 = R3.op();
  const std::vector<std::size_t> cba{c, b, a};
  CheckReport r;
  scan(r, "braid", cba, [&](auto t) {
    const TensorVec v = TensorVec::basis(cba, t);
    return Sides{v.apply(o1, 1).apply(o3, 0).apply(o2, 1), v.apply(o2, 0).apply(o3, 1).apply(o1, 0)};
  });
  return r;
}

TwistingMapR iterated_P1(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3) {
  const std::size_t a = R1.dimA, b = R1.dimB, c = R2.dimB;
  require_dims(R2.dimA == b && R3.dimA == a && R3.dimB == c, "P1: twisting maps have incompatible dimensions");
  return TwistingMapR(a * b, c, mat_mul(kron(identity(a), R2.matrix), kron(R3.matrix, identity(b))));
}

TwistingMapR iterated_P2(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3) {
  const std::size_t a = R1.dimA, b = R1.dimB, c = R2.dimB;
  require_dims(R2.dimA == b && R3.dimA == a && R3.dimB == c, "P2: twisting maps have incompatible dimensions");
  return TwistingMapR(a, b * c, mat_mul(kron(R1.matrix, identity(c)), kron(identity(b), R3.matrix)));
}

IteratedResult iterated_ttp(const HomAlgebra& A, const HomAlgebra& B, const HomAlgebra& C, const TwistingMapR& R1,
                            const TwistingMapR& R2, const TwistingMapR& R3) {
  const std::pair<const char*, CheckReport> checks[] = {{"R1", check_hom_twisting_map(A, B, R1)},
                                                         {"R2", check_hom_twisting_map(B, C, R2)},
                                                         {"R3", check_hom_twisting_map(A, C, R3)}};
  for (const auto& [name, rep] : checks)
    if (!rep.passed()) raise(ErrorKind::PreconditionFailure, std::string(name) + " is not a Hom-twisting map: " + rep.summary());
  const CheckReport braid = check_braid(R1, R2, R3);
  if (!braid.passed()) raise(ErrorKind::BraidViolation, braid.summary());

  IteratedResult out{HomAlgebra(), HomAlgebra(), iterated_P1(R1, R2, R3), iterated_P2(R1, R2, R3)};
  out.algebra = hom_ttp(hom_ttp(A, B, R1), C, out.P1);
  out.right_nested = hom_ttp(A, hom_ttp(B, C, R2), out.P2);
  out.algebra.provenance = "iterated_ttp(" + A.provenance + "," + B.provenance + "," + C.provenance + ")";
  out.right_nested.provenance = out.algebra.provenance + "[right]";
  return out;
}

HomAlgebra clifford_algebra(const Rational& q) {
  Mat mul = zeros(2, 4);
  mul(0, 0) = 1;  // 1·1
  mul(1, 1) = 1;  // 1·v
  mul(1, 2) = 1;  // v·1
  mul(0, 3) = q;  // v·v
  HomAlgebra C(2, mul);
  C.labels = {"1", "v"};
  C.provenance = "C(k," + q.str() + ")";
  return C;
}

CliffordResult clifford(const HomAlgebra& A, const CliffordParams& params) {
  A.validate();
  require_alpha(params.sigma, A.dim);
  if (params.q.is_zero()) raise(ErrorKind::PreconditionFailure, "Clifford parameter q must be nonzero");
  if (!is_identity(mat_mul(params.sigma, params.sigma))) raise(ErrorKind::NotInvolutive, "sigma^2 != id");
  const CheckReport m = check_multiplicative(A, params.sigma);
  if (!m.passed()) raise(ErrorKind::NotMultiplicative, "sigma: " + m.summary());
  if (!equal(mat_mul(params.sigma, A.alpha), mat_mul(A.alpha, params.sigma)))
    raise(ErrorKind::NotCommutingWithAlpha, "sigma does not commute with the structure map");

  TwistingMapR R(A.dim, 2, zeros(2 * A.dim, 2 * A.dim));
  for (std::size_t a = 0; a < A.dim; ++a) {
    R.matrix(a * 2 + 0, 0 * A.dim + a) = 1;
    for (std::size_t r = 0; r < A.dim; ++r) R.matrix(r * 2 + 1, 1 * A.dim + a) = params.sigma(r, a);
  }
  CliffordResult out{hom_ttp(A, clifford_algebra(params.q), R), R};
  out.algebra.labels = clifford_labels(A);
  out.algebra.provenance = "clifford(" + A.provenance + ")";
  return out;
}

CheckReport check_deform_compat_ttp(const HomAlgebra& A, const HomAlgebra& B, const Mat& alphaA, const Mat& alphaB,
                                    const TwistingMapR& P) {
  require_map_dims(A, B, P);
  const CheckReport comm = check_commutes(P, alphaA, alphaB);
  if (!comm.passed()) raise(ErrorKind::CommutationFailure, comm.summary());
  const CheckReport tw = check_twisting_map(A, B, P);
  if (!tw.passed()) {
    CheckReport r;
    r.merge_prefixed(tw, "precondition/");
    return r;
  }
  const HomAlgebra At = yau_twist_algebra(A, alphaA), Bt = yau_twist_algebra(B, alphaB);
  CheckReport r;
  r.merge_prefixed(check_hom_twisting_map(At, Bt, P), "hom_twisting/");
  const HomAlgebra left = twisted_product(At, Bt, P);
  const HomAlgebra right = yau_twist_algebra(ttp(A, B, P), kron(alphaA, alphaB));
  const LinOp muL = mul_op(left), muR = mul_op(right);
  const std::vector<std::size_t> dd{left.dim, left.dim};
  scan(r, "coincide", dd, [&](auto t) {
    const TensorVec v = TensorVec::basis(dd, t);
    return Sides{v.apply(muL, 0), v.apply(muR, 0)};
  });
  return r;
}

CheckReport check_alphaAB_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const Mat& alphaA, const Mat& alphaB,
                                       const TwistingMapR& R) {
  require_map_dims(A, B, R);
  require_alpha(alphaA, A.dim);
  require_alpha(alphaB, B.dim);
  const LinOp invA(mat_inv(alphaA)), invB(mat_inv(alphaB));
  for (const auto& [name, rep] : {std::pair{"alpha_A", check_multiplicative(A, alphaA)},
                                   std::pair{"alpha_B", check_multiplicative(B, alphaB)}})
    if (!rep.passed()) raise(ErrorKind::NotMultiplicative, std::string(name) + ": " + rep.summary());

  CheckReport r;
  commutes_equation(r, "ashom0", R, alphaA, alphaB);

  const LinOp muA = mul_op(A), muB = mul_op(B), Ro = R.op();
  const std::vector<std::size_t> baa{B.dim, A.dim, A.dim}, bba{B.dim, B.dim, A.dim};
  scan(r, "ashom1", baa, [&](auto t) {
    const TensorVec v = TensorVec::basis(baa, t);
    return Sides{v.apply(muA, 1).apply(Ro, 0), v.apply(Ro, 0).apply(invB, 1).apply(Ro, 1).apply(muA, 0)};
  });
  scan(r, "ashom2", bba, [&](auto t) {
    const TensorVec v = TensorVec::basis(bba, t);
    return Sides{v.apply(muB, 0).apply(Ro, 0), v.apply(Ro, 1).apply(invA, 1).apply(Ro, 0).apply(muB, 1)};
  });
  return r;
}

AlphaTtpResult alphaAB_ttp(const HomAlgebra& A, const HomAlgebra& B, const Mat& alphaA, const Mat& alphaB,
                           const TwistingMapR& R) {
  const CheckReport c = check_alphaAB_twisting_map(A, B, alphaA, alphaB, R);
  if (!c.passed()) raise(ErrorKind::PreconditionFailure, "not an (alpha_A, alpha_B)-twisting map: " + c.summary());

  const std::size_t n = A.dim * B.dim;
  const Operator2 T = twistor_matrix(A, B, R, alphaA, alphaB);
  const Mat lifted = lift_13(T).matrix;
  const Mat inv = kron(mat_inv(alphaA), mat_inv(alphaB));
  const Operator3 C1(n, mat_mul(lifted, kron(inv, identity(n * n))));
  const Operator3 C2(n, mat_mul(lifted, kron(identity(n * n), inv)));

  HomAlgebra plain = tensor_algebra(A, B);
  plain.alpha = identity(n);
  AlphaTtpResult out{deform_alpha(plain, kron(alphaA, alphaB), T), T, C1, C2};
  out.algebra.provenance = "alphaAB_ttp(" + A.provenance + "," + B.provenance + ")";
  return out;
}

TwistingMapR alphaAB_from_classical(const TwistingMapR& P, const Mat& alphaA, const Mat& alphaB) {
  const CheckReport comm = check_commutes(P, alphaA, alphaB);
  if (!comm.passed()) raise(ErrorKind::CommutationFailure, comm.summary());
  return TwistingMapR(P.dimA, P.dimB, mat_mul(kron(alphaA, alphaB), P.matrix));
}

}  // namespace homtwist
