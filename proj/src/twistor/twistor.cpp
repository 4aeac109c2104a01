#include "homtwist/twistor.hpp"

#include "homtwist/error.hpp"

namespace homtwist {

Operator2::Operator2(std::size_t dim, Mat m) : dim(dim), matrix(std::move(m)) {
  require_dims(std::size_t(matrix.rows()) == dim * dim && std::size_t(matrix.cols()) == dim * dim,
               "Operator2 must be dim^2 x dim^2");
}

Operator2 Operator2::identity(std::size_t dim) { return Operator2(dim, homtwist::identity(dim * dim)); }

Operator3::Operator3(std::size_t dim, Mat m) : dim(dim), matrix(std::move(m)) {
  require_dims(std::size_t(matrix.rows()) == dim * dim * dim && std::size_t(matrix.cols()) == dim * dim * dim,
               "Operator3 must be dim^3 x dim^3");
}

Operator3 Operator3::identity(std::size_t dim) { return Operator3(dim, homtwist::identity(dim * dim * dim)); }

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::Unchecked: return "unchecked";
    case Claim::Pseudotwistor: return "pseudotwistor";
    case Claim::Twistor: return "twistor";
    case Claim::HomPseudotwistor: return "hom_pseudotwistor";
    case Claim::HomTwistor: return "hom_twistor";
    case Claim::AlphaPseudotwistor: return "alpha_pseudotwistor";
  }
  return "unchecked";
}

Operator3 lift_13(const Operator2& T) {
  const std::size_t d = T.dim;
  const Mat s = kron(homtwist::identity(d), swap_matrix(d, d));
  return Operator3(d, mat_mul(s, mat_mul(kron(T.matrix, homtwist::identity(d)), s)));
}

Operator3 lift_12(const Operator2& T) { return Operator3(T.dim, kron(T.matrix, homtwist::identity(T.dim))); }
Operator3 lift_23(const Operator2& T) { return Operator3(T.dim, kron(homtwist::identity(T.dim), T.matrix)); }

namespace {

void require_operator_dims(const HomAlgebra& D, std::size_t dim) {
  D.validate();
  require_dims(D.dim == dim, "operator dimension " + std::to_string(dim) + " differs from algebra dimension " +
                                 std::to_string(D.dim));
}

// T₁₃ applied to a three-factor tensor without building the 27x27 matrix.
TensorVec apply_13(const TensorVec& v, const LinOp& T) { return v.swapped(1).apply(T, 0).swapped(1); }

struct Ops {
  LinOp mu, al, T, C1, C2;
  std::vector<std::size_t> dd, ddd;
};

Ops make_ops(const HomAlgebra& D, const Mat& alpha, const Operator2& T, const Operator3* C1, const Operator3* C2) {
  Ops o{mul_op(D), LinOp(alpha), T.op(), C1 ? C1->op() : LinOp(), C2 ? C2->op() : LinOp(), {D.dim, D.dim},
        {D.dim, D.dim, D.dim}};
  return o;
}

// Shared body of the four operator families. `hom` selects α⊗μ / μ⊗α in
// place of id⊗μ / μ⊗id; companions null means T₁₃.
void operator_equations(CheckReport& r, const Ops& o, const std::string& prefix, bool hom, bool lifted) {
  auto comp = [&](const TensorVec& v, const LinOp& C) { return lifted ? apply_13(v, o.T) : v.apply(C, 0); };
  auto left_mul = [&](const TensorVec& v) {  // id⊗μ or α⊗μ
    TensorVec w = v.apply(o.mu, 1);
    return hom ? w.apply(o.al, 0) : w;
  };
  auto right_mul = [&](const TensorVec& v) {  // μ⊗id or μ⊗α
    TensorVec w = v.apply(o.mu, 0);
    return hom ? w.apply(o.al, 1) : w;
  };

  scan(r, prefix + "1", o.ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.ddd, t);
    return Sides{left_mul(v).apply(o.T, 0), left_mul(comp(v.apply(o.T, 0), o.C1))};
  });
  scan(r, prefix + "2", o.ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.ddd, t);
    return Sides{right_mul(v).apply(o.T, 0), right_mul(comp(v.apply(o.T, 1), o.C2))};
  });
  scan(r, prefix + "3", o.ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.ddd, t);
    if (lifted) return Sides{v.apply(o.T, 1).apply(o.T, 0), v.apply(o.T, 0).apply(o.T, 1)};
    return Sides{comp(v.apply(o.T, 1).apply(o.T, 0), o.C1), comp(v.apply(o.T, 0).apply(o.T, 1), o.C2)};
  });
}

void commutes_with_alpha(CheckReport& r, const Ops& o, const std::string& id) {
  scan(r, id, o.dd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.dd, t);
    return Sides{v.apply(o.T, 0).apply(o.al, 0).apply(o.al, 1), v.apply(o.al, 0).apply(o.al, 1).apply(o.T, 0)};
  });
}

}  // namespace

CheckReport check_pseudotwistor(const HomAlgebra& D, const Operator2& T, const Operator3& C1, const Operator3& C2) {
  require_operator_dims(D, T.dim);
  require_operator_dims(D, C1.dim);
  require_operator_dims(D, C2.dim);
  CheckReport r;
  operator_equations(r, make_ops(D, D.alpha, T, &C1, &C2), "pstw", false, false);
  return r;
}

CheckReport check_twistor(const HomAlgebra& D, const Operator2& T) {
  require_operator_dims(D, T.dim);
  CheckReport r;
  operator_equations(r, make_ops(D, D.alpha, T, nullptr, nullptr), "twistor", false, true);
  return r;
}

CheckReport check_hom_pseudotwistor(const HomAlgebra& D, const Operator2& T, const Operator3& C1,
                                    const Operator3& C2) {
  require_operator_dims(D, T.dim);
  require_operator_dims(D, C1.dim);
  require_operator_dims(D, C2.dim);
  const Ops o = make_ops(D, D.alpha, T, &C1, &C2);
  CheckReport r;
  commutes_with_alpha(r, o, "hommultT");
  operator_equations(r, o, "hompstw", true, false);
  return r;
}

CheckReport check_hom_twistor(const HomAlgebra& D, const Operator2& T) {
  require_operator_dims(D, T.dim);
  const Ops o = make_ops(D, D.alpha, T, nullptr, nullptr);
  CheckReport r;
  commutes_with_alpha(r, o, "multtwistor");
  operator_equations(r, o, "homtwistor", true, true);
  return r;
}

HomAlgebra deform(const HomAlgebra& D, const Operator2& T, Claim claim) {
  return deform_alpha(D, D.alpha, T, claim);
}

HomAlgebra deform_alpha(const HomAlgebra& D, const Mat& alpha, const Operator2& T, Claim claim) {
  require_operator_dims(D, T.dim);
  HomAlgebra out(D.dim, mat_mul(D.mul, T.matrix), alpha);
  out.labels = D.labels;
  out.provenance = "deform[" + std::string(to_string(claim)) + "](" + D.provenance + ")";
  return out;
}

CheckReport check_alpha_pseudotwistor(const HomAlgebra& D, const Mat& alpha, const Operator2& T, const Operator3& C1,
                                      const Operator3& C2) {
  require_operator_dims(D, T.dim);
  require_operator_dims(D, C1.dim);
  require_operator_dims(D, C2.dim);
  const CheckReport m = check_multiplicative(D, alpha);
  if (!m.passed()) raise(ErrorKind::NotMultiplicative, m.summary());

  const Ops o = make_ops(D, alpha, T, &C1, &C2);
  CheckReport r;
  commutes_with_alpha(r, o, "multT");
  scan(r, "pstwhom1", o.ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.ddd, t);
    return Sides{v.apply(o.mu, 1).apply(o.T, 0), v.apply(o.T, 0).apply(o.C1, 0).apply(o.mu, 1)};
  });
  scan(r, "pstwhom2", o.ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.ddd, t);
    return Sides{v.apply(o.mu, 0).apply(o.T, 0), v.apply(o.T, 1).apply(o.C2, 0).apply(o.mu, 0)};
  });
  scan(r, "pstwhom3", o.ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.ddd, t);
    TensorVec lhs = v.apply(o.T, 1).apply(o.al, 0).apply(o.T, 0).apply(o.C1, 0);
    TensorVec rhs = v.apply(o.T, 0).apply(o.al, 2).apply(o.T, 1).apply(o.C2, 0);
    return Sides{std::move(lhs), std::move(rhs)};
  });
  return r;
}

TwistorTriple yau_operator(const Mat& alpha) {
  require_dims(alpha.rows() == alpha.cols(), "yau_operator: alpha is not square");
  const std::size_t d = alpha.rows();
  const Mat I = homtwist::identity(d);
  return {Operator2(d, kron(alpha, alpha)), Operator3(d, kron({I, I, alpha})), Operator3(d, kron({alpha, I, I}))};
}

CheckReport check_yau_compat(const HomAlgebra& D, const Mat& alpha, const Operator2& T, const Operator3& C1,
                             const Operator3& C2) {
  require_operator_dims(D, T.dim);
  CheckReport pre;
  pre.merge_prefixed(check_pseudotwistor(D, T, C1, C2), "pseudotwistor/");
  const Ops o = make_ops(D, alpha, T, &C1, &C2);
  commutes_with_alpha(pre, o, "commutes_with_alpha");
  pre.merge_prefixed(check_multiplicative(D, alpha), "alpha_on_D/");
  const HomAlgebra DT = deform(D, T, Claim::Pseudotwistor);
  pre.merge_prefixed(check_multiplicative(DT, alpha), "alpha_on_DT/");
  if (!pre.passed()) {
    CheckReport r;
    r.merge_prefixed(pre, "precondition/");
    return r;
  }

  const HomAlgebra Da = yau_twist_algebra(D, alpha);
  CheckReport r;
  r.merge_prefixed(check_hom_pseudotwistor(Da, T, C1, C2), "yau/");
  const HomAlgebra left = deform(Da, T, Claim::HomPseudotwistor);
  const HomAlgebra right = yau_twist_algebra(DT, alpha);
  const LinOp muL = mul_op(left), muR = mul_op(right);
  scan(r, "twist_order", o.dd, [&](auto t) {
    const TensorVec v = TensorVec::basis(o.dd, t);
    return Sides{v.apply(muL, 0), v.apply(muR, 0)};
  });
  return r;
}

}  // namespace homtwist
