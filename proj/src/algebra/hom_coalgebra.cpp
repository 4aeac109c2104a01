#include "homtwist/hom_coalgebra.hpp"

#include "homtwist/error.hpp"

namespace homtwist {

HomCoalgebra::HomCoalgebra(std::size_t dim, Mat comul, Mat alpha)
    : dim(dim), comul(std::move(comul)), alpha(std::move(alpha)), labels(default_labels(dim)) {
  validate();
}

HomCoalgebra::HomCoalgebra(std::size_t dim, Mat comul) : HomCoalgebra(dim, std::move(comul), identity(dim)) {}

HomCoalgebra HomCoalgebra::from_constants(std::size_t dim, const std::vector<std::vector<std::vector<Rational>>>& d,
                                          Mat alpha) {
  require_dims(d.size() == dim, "comul has wrong outer length");
  Mat comul = zeros(dim * dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    require_dims(d[i].size() == dim, "comul has wrong middle length");
    for (std::size_t j = 0; j < dim; ++j) {
      require_dims(d[i][j].size() == dim, "comul has wrong inner length");
      for (std::size_t k = 0; k < dim; ++k) comul(j * dim + k, i) = d[i][j][k];
    }
  }
  return HomCoalgebra(dim, std::move(comul), std::move(alpha));
}

std::vector<std::vector<std::vector<Rational>>> HomCoalgebra::constants() const {
  std::vector<std::vector<std::vector<Rational>>> d(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) d[i][j][k] = comul(j * dim + k, i);
  return d;
}

void HomCoalgebra::validate() const {
  require_dims(std::size_t(comul.rows()) == dim * dim && std::size_t(comul.cols()) == dim,
               "comul must be dim^2 x dim (dim " + std::to_string(dim) + ")");
  require_dims(std::size_t(alpha.rows()) == dim && std::size_t(alpha.cols()) == dim, "alpha must be dim x dim");
}

HomBialgebra::HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra)
    : algebra(std::move(algebra)), coalgebra(std::move(coalgebra)) {
  validate();
}

HomBialgebra::HomBialgebra(std::size_t dim, Mat mul, Mat comul, Mat alpha)
    : HomBialgebra(HomAlgebra(dim, std::move(mul), alpha), HomCoalgebra(dim, std::move(comul), alpha)) {}

void HomBialgebra::validate() const {
  algebra.validate();
  coalgebra.validate();
  require_dims(algebra.dim == coalgebra.dim, "bialgebra parts have different dimensions");
  require_dims(equal(algebra.alpha, coalgebra.alpha), "bialgebra parts have different structure maps");
}

bool same_structure(const HomCoalgebra& a, const HomCoalgebra& b) {
  return a.dim == b.dim && equal(a.comul, b.comul) && equal(a.alpha, b.alpha);
}

bool same_structure(const HomBialgebra& a, const HomBialgebra& b) {
  return same_structure(a.algebra, b.algebra) && same_structure(a.coalgebra, b.coalgebra);
}

LinOp comul_op(const HomCoalgebra& c) { return LinOp(c.comul, {c.dim}, {c.dim, c.dim}); }

CheckReport check_comultiplicative(const HomCoalgebra& c, const Mat& alpha) {
  require_dims(std::size_t(alpha.rows()) == c.dim && std::size_t(alpha.cols()) == c.dim, "alpha shape");
  const LinOp de = comul_op(c), al(alpha);
  const std::vector<std::size_t> d{c.dim};
  CheckReport r;
  scan(r, "comultiplicativity", d, [&](auto t) {
    const TensorVec v = TensorVec::basis(d, t);
    return Sides{v.apply(de, 0).apply(al, 0).apply(al, 1), v.apply(al, 0).apply(de, 0)};
  });
  return r;
}

CheckReport check_hom_coalgebra(const HomCoalgebra& c) {
  c.validate();
  CheckReport r = check_comultiplicative(c, c.alpha);
  const LinOp de = comul_op(c), al(c.alpha);
  const std::vector<std::size_t> d{c.dim};
  scan(r, "hom_coassociativity", d, [&](auto t) {
    const TensorVec v = TensorVec::basis(d, t).apply(de, 0);
    return Sides{v.apply(al, 1).apply(de, 0), v.apply(de, 1).apply(al, 0)};
  });
  return r;
}

CheckReport check_coassociative(const HomCoalgebra& c) {
  c.validate();
  const LinOp de = comul_op(c);
  const std::vector<std::size_t> d{c.dim};
  CheckReport r;
  scan(r, "coassociativity", d, [&](auto t) {
    const TensorVec v = TensorVec::basis(d, t).apply(de, 0);
    return Sides{v.apply(de, 0), v.apply(de, 1)};
  });
  return r;
}

HomCoalgebra yau_twist_coalgebra(const HomCoalgebra& c, const Mat& alpha) {
  c.validate();
  if (!is_identity(c.alpha))
    raise(ErrorKind::PreconditionFailure, "yau_twist_coalgebra expects a plain coalgebra (alpha = id)");
  const CheckReport m = check_comultiplicative(c, alpha);
  if (!m.passed()) raise(ErrorKind::NotComultiplicative, m.summary());
  HomCoalgebra out(c.dim, mat_mul(c.comul, alpha), alpha);
  out.labels = c.labels;
  out.provenance = "yau_twist(" + c.provenance + ")";
  return out;
}

CheckReport check_hom_bialgebra(const HomBialgebra& h) {
  h.validate();
  CheckReport r = check_hom_algebra(h.algebra);
  r.merge(check_hom_coalgebra(h.coalgebra));

  const std::size_t n = h.dim();
  const LinOp mu = mul_op(h.algebra), de = comul_op(h.coalgebra), al(h.alpha());
  const std::vector<std::size_t> d{n}, dd{n, n};
  scan(r, "hombia_coassoc", d, [&](auto t) {
    const TensorVec v = TensorVec::basis(d, t).apply(de, 0);
    return Sides{v.apply(de, 0).apply(al, 2), v.apply(al, 0).apply(de, 1)};
  });
  scan(r, "hombia_mul", dd, [&](auto t) {
    const TensorVec v = TensorVec::basis(dd, t);
    TensorVec rhs = v.apply(de, 1).apply(de, 0).swapped(1).apply(mu, 2).apply(mu, 0);
    return Sides{v.apply(mu, 0).apply(de, 0), std::move(rhs)};
  });
  scan(r, "hombia_alpha", d, [&](auto t) {
    const TensorVec v = TensorVec::basis(d, t);
    return Sides{v.apply(al, 0).apply(de, 0), v.apply(de, 0).apply(al, 0).apply(al, 1)};
  });
  return r;
}

HomBialgebra yau_twist_bialgebra(const HomBialgebra& h, const Mat& alpha) {
  h.validate();
  if (!is_identity(h.alpha()))
    raise(ErrorKind::PreconditionFailure, "yau_twist_bialgebra expects a plain bialgebra (alpha = id)");
  const CheckReport m = check_multiplicative(h.algebra, alpha);
  if (!m.passed()) raise(ErrorKind::NotMultiplicative, m.summary());
  const CheckReport c = check_comultiplicative(h.coalgebra, alpha);
  if (!c.passed()) raise(ErrorKind::NotComultiplicative, c.summary());
  HomBialgebra out(yau_twist_algebra(h.algebra, alpha), yau_twist_coalgebra(h.coalgebra, alpha));
  return out;
}

}  // namespace homtwist
