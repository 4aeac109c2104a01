#include "homtwist/module_smash.hpp"

#include "homtwist/error.hpp"

namespace homtwist {

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

namespace {

void require_square(const Mat& m, std::size_t n, const std::string& what) {
  require_dims(std::size_t(m.rows()) == n && std::size_t(m.cols()) == n, what + " must be " + std::to_string(n) +
                                                                             "x" + std::to_string(n));
}

std::vector<std::string> smash_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "#" + y);
  return out;
}

void require_precondition(const CheckReport& r, const std::string& what) {
  if (!r.passed()) raise(ErrorKind::PreconditionFailure, what + ": " + r.summary());
}

}  // namespace

ActionTable::ActionTable(Side side, std::size_t acting_dim, std::size_t module_dim, Mat act, Mat alpha)
    : side(side), acting_dim(acting_dim), module_dim(module_dim), act(std::move(act)), alpha(std::move(alpha)) {
  validate();
}

void ActionTable::validate() const {
  require_dims(std::size_t(act.rows()) == module_dim && std::size_t(act.cols()) == acting_dim * module_dim,
               "action table must be dim_m x (dim_h*dim_m)");
  require_square(alpha, module_dim, "module alpha");
}

LinOp ActionTable::op() const {
  if (side == Side::Left) return LinOp(act, {acting_dim, module_dim}, {module_dim});
  return LinOp(act, {module_dim, acting_dim}, {module_dim});
}

ActionTable ActionTable::from_constants(Side side, std::size_t acting_dim, std::size_t module_dim,
                                        const std::vector<std::vector<std::vector<Rational>>>& t, Mat alpha) {
  require_dims(t.size() == acting_dim, "action constants have wrong outer length");
  Mat act = zeros(module_dim, acting_dim * module_dim);
  for (std::size_t h = 0; h < acting_dim; ++h) {
    require_dims(t[h].size() == module_dim, "action constants have wrong middle length");
    for (std::size_t m = 0; m < module_dim; ++m) {
      require_dims(t[h][m].size() == module_dim, "action constants have wrong inner length");
      const std::size_t col = side == Side::Left ? h * module_dim + m : m * acting_dim + h;
      for (std::size_t k = 0; k < module_dim; ++k) act(k, col) = t[h][m][k];
    }
  }
  return ActionTable(side, acting_dim, module_dim, std::move(act), std::move(alpha));
}

std::vector<std::vector<std::vector<Rational>>> ActionTable::constants() const {
  std::vector t(acting_dim, std::vector(module_dim, std::vector<Rational>(module_dim)));
  for (std::size_t h = 0; h < acting_dim; ++h)
    for (std::size_t m = 0; m < module_dim; ++m) {
      const std::size_t col = side == Side::Left ? h * module_dim + m : m * acting_dim + h;
      for (std::size_t k = 0; k < module_dim; ++k) t[h][m][k] = act(k, col);
    }
  return t;
}

CoactionTable::CoactionTable(Side side, std::size_t coalgebra_dim, std::size_t module_dim, Mat co, Mat alpha)
    : side(side), coalgebra_dim(coalgebra_dim), module_dim(module_dim), co(std::move(co)), alpha(std::move(alpha)) {
  validate();
}

void CoactionTable::validate() const {
  require_dims(std::size_t(co.rows()) == coalgebra_dim * module_dim && std::size_t(co.cols()) == module_dim,
               "coaction table must be (dim_c*dim_m) x dim_m");
  require_square(alpha, module_dim, "module alpha");
}

LinOp CoactionTable::op() const {
  if (side == Side::Left) return LinOp(co, {module_dim}, {coalgebra_dim, module_dim});
  return LinOp(co, {module_dim}, {module_dim, coalgebra_dim});
}

CoactionTable CoactionTable::from_constants(Side side, std::size_t coalgebra_dim, std::size_t module_dim,
                                            const std::vector<std::vector<std::vector<Rational>>>& t, Mat alpha) {
  require_dims(t.size() == module_dim, "coaction constants have wrong outer length");
  const std::size_t mid = side == Side::Left ? coalgebra_dim : module_dim;
  const std::size_t inner = side == Side::Left ? module_dim : coalgebra_dim;
  Mat co = zeros(coalgebra_dim * module_dim, module_dim);
  for (std::size_t m = 0; m < module_dim; ++m) {
    require_dims(t[m].size() == mid, "coaction constants have wrong middle length");
    for (std::size_t i = 0; i < mid; ++i) {
      require_dims(t[m][i].size() == inner, "coaction constants have wrong inner length");
      for (std::size_t j = 0; j < inner; ++j) co(i * inner + j, m) = t[m][i][j];
    }
  }
  return CoactionTable(side, coalgebra_dim, module_dim, std::move(co), std::move(alpha));
}

std::vector<std::vector<std::vector<Rational>>> CoactionTable::constants() const {
  const std::size_t mid = side == Side::Left ? coalgebra_dim : module_dim;
  const std::size_t inner = side == Side::Left ? module_dim : coalgebra_dim;
  std::vector t(module_dim, std::vector(mid, std::vector<Rational>(inner)));
  for (std::size_t m = 0; m < module_dim; ++m)
    for (std::size_t i = 0; i < mid; ++i)
      for (std::size_t j = 0; j < inner; ++j) t[m][i][j] = co(i * inner + j, m);
  return t;
}

bool same_structure(const ActionTable& a, const ActionTable& b) {
  return a.side == b.side && a.acting_dim == b.acting_dim && a.module_dim == b.module_dim && equal(a.act, b.act) &&
         equal(a.alpha, b.alpha);
}

bool same_structure(const CoactionTable& a, const CoactionTable& b) {
  return a.side == b.side && a.coalgebra_dim == b.coalgebra_dim && a.module_dim == b.module_dim &&
         equal(a.co, b.co) && equal(a.alpha, b.alpha);
}

ActionTable regular_action(const HomAlgebra& A, Side side) {
  A.validate();
  return ActionTable(side, A.dim, A.dim, A.mul, A.alpha);
}

CoactionTable regular_coaction(const HomCoalgebra& C, Side side) {
  C.validate();
  return CoactionTable(side, C.dim, C.dim, C.comul, C.alpha);
}

CheckReport check_module(const HomAlgebra& H, const ActionTable& M) {
  H.validate();
  M.validate();
  require_dims(M.acting_dim == H.dim, "action table acting dimension differs from the algebra");
  const LinOp act = M.op(), mu = mul_op(H), aH = alpha_op(H), aM(M.alpha);
  const std::size_t h = H.dim, m = M.module_dim;
  CheckReport r;
  if (M.side == Side::Left) {
    scan(r, "module1", {h, m}, [&](auto t) {
      const TensorVec v = TensorVec::basis({h, m}, t);
      return Sides{v.apply(act, 0).apply(aM, 0), v.apply(aH, 0).apply(aM, 1).apply(act, 0)};
    });
    scan(r, "module2", {h, h, m}, [&](auto t) {
      const TensorVec v = TensorVec::basis({h, h, m}, t);
      return Sides{v.apply(act, 1).apply(aH, 0).apply(act, 0), v.apply(mu, 0).apply(aM, 1).apply(act, 0)};
    });
  } else {
    scan(r, "rmodule1", {m, h}, [&](auto t) {
      const TensorVec v = TensorVec::basis({m, h}, t);
      return Sides{v.apply(act, 0).apply(aM, 0), v.apply(aM, 0).apply(aH, 1).apply(act, 0)};
    });
    scan(r, "rmodule2", {m, h, h}, [&](auto t) {
      const TensorVec v = TensorVec::basis({m, h, h}, t);
      return Sides{v.apply(act, 0).apply(aH, 1).apply(act, 0), v.apply(mu, 1).apply(aM, 0).apply(act, 0)};
    });
  }
  return r;
}

CheckReport check_module_hom_algebra(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act) {
  H.validate();
  A.validate();
  act.validate();
  require_dims(act.module_dim == A.dim, "action module dimension differs from the algebra");
  if (!equal(act.alpha, A.alpha)) raise(ErrorKind::PreconditionFailure, "module alpha differs from the algebra's");
  CheckReport r;
  const CheckReport pre = check_module(H.algebra, act);
  if (!pre.passed()) {
    r.merge_prefixed(pre, "precondition/");
    return r;
  }
  const LinOp ac = act.op(), muA = mul_op(A), de = comul_op(H.coalgebra);
  const LinOp aH2(mat_mul(H.alpha(), H.alpha()));
  const std::size_t h = H.dim(), a = A.dim;
  if (act.side == Side::Left) {
    scan(r, "module_algebra", {h, a, a}, [&](auto t) {
      const TensorVec v = TensorVec::basis({h, a, a}, t);
      TensorVec lhs = v.apply(muA, 1).apply(aH2, 0).apply(ac, 0);
      TensorVec rhs = v.apply(de, 0).swapped(1).apply(ac, 0).apply(ac, 1).apply(muA, 0);
      return Sides{std::move(lhs), std::move(rhs)};
    });
  } else {
    scan(r, "rmodule_algebra", {a, a, h}, [&](auto t) {
      const TensorVec v = TensorVec::basis({a, a, h}, t);
      TensorVec lhs = v.apply(muA, 0).apply(aH2, 1).apply(ac, 0);
      TensorVec rhs = v.apply(de, 2).swapped(1).apply(ac, 0).apply(ac, 1).apply(muA, 0);
      return Sides{std::move(lhs), std::move(rhs)};
    });
  }
  return r;
}

TwistedModuleAlgebra yau_twist_module_algebra(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act,
                                              const Mat& alphaH, const Mat& alphaA) {
  if (!is_identity(H.alpha()) || !is_identity(A.alpha) || !is_identity(act.alpha))
    raise(ErrorKind::PreconditionFailure, "module algebra twist expects classical data (all alphas identity)");
  require_precondition(check_module_hom_algebra(H, A, act), "not a classical module algebra");
  require_square(alphaH, H.dim(), "alpha_H");
  require_square(alphaA, A.dim, "alpha_A");

  TwistedModuleAlgebra out{yau_twist_bialgebra(H, alphaH), yau_twist_algebra(A, alphaA), ActionTable()};

  const LinOp ac = act.op(), aH(alphaH), aA(alphaA);
  const std::size_t h = H.dim(), a = A.dim;
  CheckReport inter;
  if (act.side == Side::Left) {
    scan(inter, "intertwining", {h, a}, [&](auto t) {
      const TensorVec v = TensorVec::basis({h, a}, t);
      return Sides{v.apply(ac, 0).apply(aA, 0), v.apply(aH, 0).apply(aA, 1).apply(ac, 0)};
    });
  } else {
    scan(inter, "intertwining", {a, h}, [&](auto t) {
      const TensorVec v = TensorVec::basis({a, h}, t);
      return Sides{v.apply(ac, 0).apply(aA, 0), v.apply(aA, 0).apply(aH, 1).apply(ac, 0)};
    });
  }
  if (!inter.passed()) raise(ErrorKind::IntertwiningFailure, inter.summary());

  out.act = ActionTable(act.side, act.acting_dim, act.module_dim, mat_mul(alphaA, act.act), alphaA);
  return out;
}

ActionTable tensor_modules(const HomBialgebra& H, const ActionTable& M, const ActionTable& N) {
  H.validate();
  require_dims(M.acting_dim == H.dim() && N.acting_dim == H.dim(), "modules are not over the given bialgebra");
  if (M.side != Side::Left || N.side != Side::Left)
    raise(ErrorKind::PreconditionFailure, "tensor product of modules needs left actions");
  require_precondition(check_module(H.algebra, M), "first factor is not a module");
  require_precondition(check_module(H.algebra, N), "second factor is not a module");
  const LinOp de = comul_op(H.coalgebra), aM = M.op(), aN = N.op();
  const std::size_t h = H.dim(), m = M.module_dim, n = N.module_dim;
  Mat act = to_matrix({h, m, n}, m * n, [&](const TensorVec& v) {
    return v.apply(de, 0).swapped(1).apply(aM, 0).apply(aN, 1);
  });
  return ActionTable(Side::Left, h, m * n, std::move(act), kron(M.alpha, N.alpha));
}

CheckReport check_comodule(const HomCoalgebra& C, const CoactionTable& M) {
  C.validate();
  M.validate();
  require_dims(M.coalgebra_dim == C.dim, "coaction coalgebra dimension differs from the coalgebra");
  const LinOp co = M.op(), de = comul_op(C), aC(C.alpha), aM(M.alpha);
  const std::size_t m = M.module_dim;
  const std::vector<std::size_t> box{m};
  CheckReport r;
  if (M.side == Side::Left) {
    scan(r, "comodule1", box, [&](auto t) {
      const TensorVec v = TensorVec::basis(box, t);
      return Sides{v.apply(co, 0).apply(aC, 0).apply(aM, 1), v.apply(aM, 0).apply(co, 0)};
    });
    scan(r, "comodule2", box, [&](auto t) {
      const TensorVec v = TensorVec::basis(box, t).apply(co, 0);
      return Sides{v.apply(de, 0).apply(aM, 2), v.apply(co, 1).apply(aC, 0)};
    });
  } else {
    scan(r, "rcomodule1", box, [&](auto t) {
      const TensorVec v = TensorVec::basis(box, t);
      return Sides{v.apply(co, 0).apply(aM, 0).apply(aC, 1), v.apply(aM, 0).apply(co, 0)};
    });
    scan(r, "rcomodule2", box, [&](auto t) {
      const TensorVec v = TensorVec::basis(box, t).apply(co, 0);
      return Sides{v.apply(de, 1).apply(aM, 0), v.apply(co, 0).apply(aC, 2)};
    });
  }
  return r;
}

CheckReport check_bicomodule(const HomCoalgebra& C, const CoactionTable& lam, const CoactionTable& rho) {
  if (lam.side != Side::Left || rho.side != Side::Right)
    raise(ErrorKind::PreconditionFailure, "bicomodule needs a left and a right coaction");
  require_dims(lam.module_dim == rho.module_dim, "coactions act on different modules");
  if (!equal(lam.alpha, rho.alpha)) raise(ErrorKind::PreconditionFailure, "coactions carry different module alphas");
  CheckReport r;
  const CheckReport pl = check_comodule(C, lam), pr = check_comodule(C, rho);
  if (!pl.passed() || !pr.passed()) {
    r.merge_prefixed(pl, "precondition/");
    r.merge_prefixed(pr, "precondition/");
    return r;
  }
  const LinOp l = lam.op(), p = rho.op(), aC(C.alpha);
  const std::vector<std::size_t> box{lam.module_dim};
  scan(r, "bicomodule", box, [&](auto t) {
    const TensorVec v = TensorVec::basis(box, t);
    return Sides{v.apply(p, 0).apply(l, 0).apply(aC, 2), v.apply(l, 0).apply(p, 1).apply(aC, 0)};
  });
  return r;
}

CheckReport check_comodule_hom_algebra(const HomBialgebra& H, const HomAlgebra& D, const CoactionTable& co) {
  H.validate();
  D.validate();
  require_dims(co.module_dim == D.dim, "coaction module dimension differs from the algebra");
  if (!equal(co.alpha, D.alpha)) raise(ErrorKind::PreconditionFailure, "comodule alpha differs from the algebra's");
  CheckReport r;
  const CheckReport pre = check_comodule(H.coalgebra, co);
  if (!pre.passed()) {
    r.merge_prefixed(pre, "precondition/");
    return r;
  }
  const LinOp c = co.op(), muD = mul_op(D), muH = mul_op(H.algebra), aH(H.alpha()), aD(D.alpha);
  const std::size_t d = D.dim;
  const bool left = co.side == Side::Left;
  scan(r, "comodule_algebra_mul", {d, d}, [&](auto t) {
    const TensorVec v = TensorVec::basis({d, d}, t);
    TensorVec lhs = v.apply(muD, 0).apply(c, 0);
    const TensorVec both = v.apply(c, 1).apply(c, 0).swapped(1);
    TensorVec rhs = left ? both.apply(muH, 0).apply(muD, 1) : both.apply(muD, 0).apply(muH, 1);
    return Sides{std::move(lhs), std::move(rhs)};
  });
  const std::vector<std::size_t> box{d};
  scan(r, "comodule_algebra_alpha", box, [&](auto t) {
    const TensorVec v = TensorVec::basis(box, t);
    TensorVec rhs = left ? v.apply(c, 0).apply(aH, 0).apply(aD, 1) : v.apply(c, 0).apply(aD, 0).apply(aH, 1);
    return Sides{v.apply(aD, 0).apply(c, 0), std::move(rhs)};
  });
  return r;
}

CheckReport check_yetter_drinfeld(const HomBialgebra& H, const ActionTable& act, const CoactionTable& co) {
  if (act.side != Side::Left || co.side != Side::Left)
    raise(ErrorKind::PreconditionFailure, "Yetter-Drinfeld check needs a left action and a left coaction");
  require_dims(act.module_dim == co.module_dim, "action and coaction live on different modules");
  if (!equal(act.alpha, co.alpha)) raise(ErrorKind::PreconditionFailure, "action and coaction carry different alphas");
  CheckReport r;
  const CheckReport pm = check_module(H.algebra, act), pc = check_comodule(H.coalgebra, co);
  if (!pm.passed() || !pc.passed()) {
    r.merge_prefixed(pm, "precondition/");
    r.merge_prefixed(pc, "precondition/");
    return r;
  }
  const LinOp ac = act.op(), c = co.op(), de = comul_op(H.coalgebra), mu = mul_op(H.algebra), aH(H.alpha());
  const LinOp aH2(mat_mul(H.alpha(), H.alpha()));
  const std::size_t h = H.dim(), m = act.module_dim;
  scan(r, "yetter_drinfeld", {h, m}, [&](auto t) {
    const TensorVec v = TensorVec::basis({h, m}, t);
    // [h1, m, h2] -> [(h1·m)₋₁, (h1·m)₀, α²(h2)] -> [(h1·m)₋₁ α²(h2), (h1·m)₀]
    TensorVec lhs = v.apply(de, 0).swapped(1).apply(ac, 0).apply(c, 0).apply(aH2, 2).swapped(1).apply(mu, 0);
    // [α²(h1), α(m₋₁), α(h2), m₀] -> [α²(h1)α(m₋₁), α(h2)·m₀]
    TensorVec rhs = v.apply(c, 1).apply(de, 0).apply(aH2, 0).apply(aH, 1).apply(aH, 2).swapped(1).apply(mu, 0).apply(
        ac, 1);
    return Sides{std::move(lhs), std::move(rhs)};
  });
  return r;
}

namespace {

struct SmashInverses {
  LinOp h1, h2, m1;  // α_H⁻¹, α_H⁻², α_M⁻¹
};

SmashInverses smash_preconditions(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act, Side side) {
  if (act.side != side) raise(ErrorKind::PreconditionFailure, "smash product needs a " + std::string(to_string(side)) +
                                                                  " action");
  const CheckReport c = check_module_hom_algebra(H, A, act);
  if (!c.passed()) raise(ErrorKind::PreconditionFailure, "not a module Hom-algebra: " + c.summary());
  const Mat hInv = mat_inv(H.alpha());
  return {LinOp(hInv), LinOp(mat_mul(hInv, hInv)), LinOp(mat_inv(A.alpha))};
}

TwistingMapR smash_left_map(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act,
                            const SmashInverses& inv) {
  const LinOp de = comul_op(H.coalgebra), ac = act.op();
  // [h, a] -> [α⁻²(h1), α⁻¹(h2), α⁻¹(a)] -> [α⁻²(h1), α⁻¹(a), α⁻¹(h2)] -> [a', h']
  Mat m = to_matrix({H.dim(), A.dim}, A.dim * H.dim(), [&](const TensorVec& v) {
    return v.apply(de, 0).apply(inv.h2, 0).apply(inv.h1, 1).apply(inv.m1, 2).swapped(1).apply(ac, 0);
  });
  return TwistingMapR(A.dim, H.dim(), std::move(m));
}

TwistingMapR smash_right_map(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act,
                             const SmashInverses& inv) {
  const LinOp de = comul_op(H.coalgebra), ac = act.op();
  // [c, h] -> [α⁻¹(c), α⁻¹(h1), α⁻²(h2)] -> [α⁻¹(h1), α⁻¹(c), α⁻²(h2)] -> [h', c']
  Mat m = to_matrix({C.dim, H.dim()}, H.dim() * C.dim, [&](const TensorVec& v) {
    return v.apply(de, 1).apply(inv.m1, 0).apply(inv.h1, 1).apply(inv.h2, 2).swapped(0).apply(ac, 1);
  });
  return TwistingMapR(H.dim(), C.dim, std::move(m));
}

}  // namespace

SmashResult smash_left(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act) {
  const SmashInverses inv = smash_preconditions(H, A, act, Side::Left);
  SmashResult out{smash_left_map(H, A, act, inv), HomAlgebra()};
  out.algebra = hom_ttp(A, H.algebra, out.R);
  out.algebra.labels = smash_labels(A.labels, H.algebra.labels);
  out.algebra.provenance = "smash_left(" + A.provenance + "," + H.algebra.provenance + ")";
  return out;
}

SmashResult smash_right(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act) {
  const SmashInverses inv = smash_preconditions(H, C, act, Side::Right);
  SmashResult out{smash_right_map(H, C, act, inv), HomAlgebra()};
  out.algebra = hom_ttp(H.algebra, C, out.R);
  out.algebra.labels = smash_labels(H.algebra.labels, C.labels);
  out.algebra.provenance = "smash_right(" + H.algebra.provenance + "," + C.provenance + ")";
  return out;
}

TwoSidedSmash smash_two_sided(const HomAlgebra& A, const HomBialgebra& H, const HomAlgebra& C,
                              const ActionTable& actL, const ActionTable& actR) {
  TwoSidedSmash out;
  out.R1 = smash_left(A, H, actL).R;
  out.R2 = smash_right(H, C, actR).R;
  out.R3 = flip(A.dim, C.dim);
  out.iterated = iterated_ttp(A, H.algebra, C, out.R1, out.R2, out.R3);
  out.iterated.algebra.labels = smash_labels(smash_labels(A.labels, H.algebra.labels), C.labels);
  out.iterated.algebra.provenance =
      "smash_two_sided(" + A.provenance + "," + H.algebra.provenance + "," + C.provenance + ")";
  return out;
}

CoactionTable coaction_rho_smash(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act) {
  smash_preconditions(H, A, act, Side::Left);
  const LinOp de = comul_op(H.coalgebra), aA(A.alpha);
  const std::size_t a = A.dim, h = H.dim();
  Mat co = to_matrix({a, h}, a * h * h, [&](const TensorVec& v) { return v.apply(aA, 0).apply(de, 1); });
  return CoactionTable(Side::Right, h, a * h, std::move(co), kron(A.alpha, H.alpha()));
}

CoactionTable coaction_lambda_smash(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act,
                                    const CoactionTable& coA) {
  smash_preconditions(H, A, act, Side::Left);
  if (coA.side != Side::Left) raise(ErrorKind::PreconditionFailure, "coaction on A must be a left coaction");
  require_precondition(check_comodule_hom_algebra(H, A, coA), "A is not a left comodule Hom-algebra");
  const CheckReport yd = check_yetter_drinfeld(H, act, coA);
  if (!yd.passed()) raise(ErrorKind::YDViolation, yd.summary());
  const LinOp de = comul_op(H.coalgebra), c = coA.op(), mu = mul_op(H.algebra);
  const std::size_t a = A.dim, h = H.dim();
  // [a₋₁, a₀, h1, h2] -> [a₋₁, h1, a₀, h2] -> [a₋₁h1, a₀, h2]
  Mat co = to_matrix({a, h}, h * a * h,
                     [&](const TensorVec& v) { return v.apply(c, 0).apply(de, 2).swapped(1).apply(mu, 0); });
  return CoactionTable(Side::Left, h, a * h, std::move(co), kron(A.alpha, H.alpha()));
}

CoactionTable coaction_lambda_right_smash(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act) {
  smash_preconditions(H, C, act, Side::Right);
  const LinOp de = comul_op(H.coalgebra), aC(C.alpha);
  const std::size_t h = H.dim(), c = C.dim;
  Mat co = to_matrix({h, c}, h * h * c, [&](const TensorVec& v) { return v.apply(de, 0).apply(aC, 2); });
  return CoactionTable(Side::Left, h, h * c, std::move(co), kron(H.alpha(), C.alpha));
}

TwistingMapR classical_smash_map(const HomBialgebra& H, const ActionTable& act) {
  require_dims(act.acting_dim == H.dim(), "action is not over the given bialgebra");
  const LinOp de = comul_op(H.coalgebra), ac = act.op();
  const std::size_t h = H.dim(), m = act.module_dim;
  if (act.side == Side::Left)
    return TwistingMapR(m, h, to_matrix({h, m}, m * h, [&](const TensorVec& v) {
                          return v.apply(de, 0).swapped(1).apply(ac, 0);
                        }));
  return TwistingMapR(h, m, to_matrix({m, h}, h * m, [&](const TensorVec& v) {
                        return v.apply(de, 1).swapped(0).apply(ac, 1);
                      }));
}

CheckReport check_smash_twist_compat(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act,
                                     const Mat& alphaH, const Mat& alphaA) {
  const TwistedModuleAlgebra tw = yau_twist_module_algebra(H, A, act, alphaH, alphaA);
  const bool left = act.side == Side::Left;
  const SmashResult hom = left ? smash_left(tw.A, tw.H, tw.act) : smash_right(tw.H, tw.A, tw.act);
  const TwistingMapR P = classical_smash_map(H, act);
  const HomAlgebra classical = left ? ttp(A, H.algebra, P) : ttp(H.algebra, A, P);
  const HomAlgebra twisted = yau_twist_algebra(classical, left ? kron(alphaA, alphaH) : kron(alphaH, alphaA));

  CheckReport r;
  const LinOp muT = mul_op(twisted), muH = mul_op(hom.algebra), aT = alpha_op(twisted), aH = alpha_op(hom.algebra);
  const std::size_t n = twisted.dim;
  scan(r, "coincide_mul", {n, n}, [&](auto t) {
    const TensorVec v = TensorVec::basis({n, n}, t);
    return Sides{v.apply(muT, 0), v.apply(muH, 0)};
  });
  const std::vector<std::size_t> box{n};
  scan(r, "coincide_alpha", box, [&](auto t) {
    const TensorVec v = TensorVec::basis(box, t);
    return Sides{v.apply(aT, 0), v.apply(aH, 0)};
  });
  const LinOp Rh = hom.R.op(), Rp = P.op();
  const std::vector<std::size_t> in{P.dimB, P.dimA};
  scan(r, "R_equals_P", in, [&](auto t) {
    const TensorVec v = TensorVec::basis(in, t);
    return Sides{v.apply(Rh, 0), v.apply(Rp, 0)};
  });
  return r;
}

}  // namespace homtwist
