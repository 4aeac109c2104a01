#include "homtwist/hom_algebra.hpp"

#include "homtwist/error.hpp"

namespace homtwist {

HomAlgebra::HomAlgebra(std::size_t dim, Mat mul, Mat alpha)
    : dim(dim), mul(std::move(mul)), alpha(std::move(alpha)), labels(default_labels(dim)) {
  validate();
}

HomAlgebra::HomAlgebra(std::size_t dim, Mat mul) : HomAlgebra(dim, std::move(mul), identity(dim)) {}

HomAlgebra HomAlgebra::from_constants(std::size_t dim, const std::vector<std::vector<std::vector<Rational>>>& c,
                                      Mat alpha) {
  require_dims(c.size() == dim, "mul has wrong outer length");
  Mat mul = zeros(dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    require_dims(c[i].size() == dim, "mul has wrong middle length");
    for (std::size_t j = 0; j < dim; ++j) {
      require_dims(c[i][j].size() == dim, "mul has wrong inner length");
      for (std::size_t k = 0; k < dim; ++k) mul(k, i * dim + j) = c[i][j][k];
    }
  }
  return HomAlgebra(dim, std::move(mul), std::move(alpha));
}

std::vector<std::vector<std::vector<Rational>>> HomAlgebra::constants() const {
  std::vector<std::vector<std::vector<Rational>>> c(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) c[i][j][k] = constant(i, j, k);
  return c;
}

void HomAlgebra::set_product(std::size_t i, std::size_t j, const std::vector<Rational>& coords) {
  require_dims(coords.size() == dim, "product coordinates have wrong length");
  for (std::size_t k = 0; k < dim; ++k) mul(k, i * dim + j) = coords[k];
}

Vec HomAlgebra::product(const Vec& x, const Vec& y) const {
  Vec out = Vec::Constant(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y(j).is_zero()) continue;
      const Rational s = x(i) * y(j);
      for (std::size_t k = 0; k < dim; ++k)
        if (!mul(k, i * dim + j).is_zero()) out(k) += s * mul(k, i * dim + j);
    }
  }
  return out;
}

std::string HomAlgebra::label(std::size_t i) const {
  return i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
}

void HomAlgebra::validate() const {
  require_dims(std::size_t(mul.rows()) == dim && std::size_t(mul.cols()) == dim * dim,
               "mul must be dim x dim^2 (dim " + std::to_string(dim) + ")");
  require_dims(std::size_t(alpha.rows()) == dim && std::size_t(alpha.cols()) == dim, "alpha must be dim x dim");
}

bool same_structure(const HomAlgebra& a, const HomAlgebra& b) {
  return a.dim == b.dim && equal(a.mul, b.mul) && equal(a.alpha, b.alpha);
}

LinOp mul_op(const HomAlgebra& a) { return LinOp(a.mul, {a.dim, a.dim}, {a.dim}); }
LinOp alpha_op(const HomAlgebra& a) { return LinOp(a.alpha); }

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "⊗" + y);
  return out;
}

CheckReport check_multiplicative(const HomAlgebra& a, const Mat& alpha) {
  require_dims(std::size_t(alpha.rows()) == a.dim && std::size_t(alpha.cols()) == a.dim, "alpha shape");
  const LinOp mu = mul_op(a), al(alpha);
  const std::vector<std::size_t> dd{a.dim, a.dim};
  CheckReport r;
  scan(r, "multiplicativity", dd, [&](auto t) {
    const TensorVec v = TensorVec::basis(dd, t);
    return Sides{v.apply(mu, 0).apply(al, 0), v.apply(al, 0).apply(al, 1).apply(mu, 0)};
  });
  return r;
}

CheckReport check_hom_algebra(const HomAlgebra& a) {
  a.validate();
  CheckReport r = check_multiplicative(a, a.alpha);
  const LinOp mu = mul_op(a), al = alpha_op(a);
  const std::vector<std::size_t> ddd{a.dim, a.dim, a.dim};
  scan(r, "hom_associativity", ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(ddd, t);
    return Sides{v.apply(mu, 1).apply(al, 0).apply(mu, 0), v.apply(mu, 0).apply(al, 1).apply(mu, 0)};
  });
  return r;
}

CheckReport check_associative(const HomAlgebra& a) {
  a.validate();
  const LinOp mu = mul_op(a);
  const std::vector<std::size_t> ddd{a.dim, a.dim, a.dim};
  CheckReport r;
  scan(r, "associativity", ddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(ddd, t);
    return Sides{v.apply(mu, 0).apply(mu, 0), v.apply(mu, 1).apply(mu, 0)};
  });
  return r;
}

HomAlgebra yau_twist_algebra(const HomAlgebra& a, const Mat& alpha) {
  a.validate();
  if (!is_identity(a.alpha)) raise(ErrorKind::PreconditionFailure, "yau_twist_algebra expects a plain algebra (alpha = id)");
  const CheckReport m = check_multiplicative(a, alpha);
  if (!m.passed()) raise(ErrorKind::NotMultiplicative, m.summary());
  HomAlgebra out(a.dim, mat_mul(alpha, a.mul), alpha);
  out.labels = a.labels;
  out.provenance = "yau_twist(" + a.provenance + ")";
  return out;
}

HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  a.validate();
  b.validate();
  // (a⊗b)(a'⊗b') = aa'⊗bb': reorder (a,b,a',b') -> (a,a',b,b') then μ_A⊗μ_B.
  const std::size_t n = a.dim * b.dim;
  const Mat reorder = kron({identity(a.dim), swap_matrix(b.dim, a.dim), identity(b.dim)});
  HomAlgebra out(n, mat_mul(kron(a.mul, b.mul), reorder), kron(a.alpha, b.alpha));
  out.labels = tensor_labels(a.labels, b.labels);
  out.provenance = "tensor(" + a.provenance + "," + b.provenance + ")";
  return out;
}

CheckReport check_algebra_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& b) {
  a.validate();
  b.validate();
  require_dims(f.source_dim == a.dim && f.target_dim == b.dim && std::size_t(f.matrix.rows()) == b.dim &&
                   std::size_t(f.matrix.cols()) == a.dim,
               "morphism shape does not match the algebras");
  const LinOp fo(f.matrix), muA = mul_op(a), muB = mul_op(b), alA = alpha_op(a), alB = alpha_op(b);
  CheckReport r;
  const std::vector<std::size_t> dd{a.dim, a.dim};
  scan(r, "morphism_mul", dd, [&](auto t) {
    const TensorVec v = TensorVec::basis(dd, t);
    return Sides{v.apply(muA, 0).apply(fo, 0), v.apply(fo, 0).apply(fo, 1).apply(muB, 0)};
  });
  const std::vector<std::size_t> d{a.dim};
  scan(r, "morphism_alpha", d, [&](auto t) {
    const TensorVec v = TensorVec::basis(d, t);
    return Sides{v.apply(fo, 0).apply(alB, 0), v.apply(alA, 0).apply(fo, 0)};
  });
  return r;
}

CheckReport check_lemma_four_elements(const HomAlgebra& a) {
  const CheckReport pre = check_hom_algebra(a);
  if (!pre.passed()) {
    CheckReport r;
    r.merge_prefixed(pre, "precondition/");
    return r;
  }
  const LinOp mu = mul_op(a), al = alpha_op(a), inv(mat_inv(a.alpha));
  const std::vector<std::size_t> dddd{a.dim, a.dim, a.dim, a.dim};
  CheckReport r;
  scan(r, "four_elements", dddd, [&](auto t) {
    const TensorVec v = TensorVec::basis(dddd, t);
    TensorVec lhs = v.apply(mu, 0).apply(mu, 1).apply(mu, 0);
    TensorVec rhs = v.apply(mu, 1).apply(inv, 1).apply(mu, 1).apply(al, 0).apply(mu, 0);
    return Sides{std::move(lhs), std::move(rhs)};
  });
  return r;
}

}  // namespace homtwist
