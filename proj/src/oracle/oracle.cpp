#include "homtwist/oracle.hpp"

#include <sstream>

namespace homtwist::oracle {

namespace {

using V = std::vector<Rational>;
using C3 = std::vector<std::vector<std::vector<Rational>>>;

V unit(std::size_t n, std::size_t i) {
  V v(n);
  v[i] = 1;
  return v;
}

V lin(const Mat& m, const V& x) {
  V out(m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!x[c].is_zero()) out[r] += m(r, c) * x[c];
  return out;
}

// out[k] = Σ x[i] y[j] c[i][j][k]; c is indexed [left][right][result].
V bil(const C3& c, const V& x, const V& y, std::size_t out_dim) {
  V out(out_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < out_dim; ++k) out[k] += w * c[i][j][k];
    }
  }
  return out;
}

// Dense tensor over a few factors, row-major.
struct T {
  std::vector<std::size_t> dims;
  V data;
  explicit T(std::vector<std::size_t> d) : dims(std::move(d)) {
    std::size_t n = 1;
    for (std::size_t x : dims) n *= x;
    data.assign(n, Rational(0));
  }
  Rational& at(std::size_t i, std::size_t j) { return data[i * dims[1] + j]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data[(i * dims[1] + j) * dims[2] + k]; }
  bool operator==(const T& o) const { return dims == o.dims && data == o.data; }
};

std::string tuple_str(std::initializer_list<std::size_t> t) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t x : t) os << (first ? "" : ",") << x, first = false;
  os << ")";
  return os.str();
}

Verdict fail(const std::string& eq, std::initializer_list<std::size_t> t) { return {false, eq + " at " + tuple_str(t)}; }

// R(e_b⊗e_a) coefficient of e_a'⊗e_b'.
Rational r_at(const TwistingMapR& R, std::size_t b, std::size_t a, std::size_t a2, std::size_t b2) {
  return R.matrix(a2 * R.dimB + b2, b * R.dimA + a);
}

// R applied to x⊗y with x in B, y in A; result indexed [a][b].
T apply_R(const TwistingMapR& R, const V& x, const V& y) {
  T out({R.dimA, R.dimB});
  for (std::size_t b = 0; b < R.dimB; ++b)
    for (std::size_t a = 0; a < R.dimA; ++a) {
      const Rational w = x[b] * y[a];
      if (w.is_zero()) continue;
      for (std::size_t a2 = 0; a2 < R.dimA; ++a2)
        for (std::size_t b2 = 0; b2 < R.dimB; ++b2) out.at(a2, b2) += w * r_at(R, b, a, a2, b2);
    }
  return out;
}

Verdict twisting_common(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R, bool hom) {
  const std::size_t da = A.dim, db = B.dim;
  const C3 ca = A.constants(), cb = B.constants();
  const Mat alA = hom ? A.alpha : identity(da), alB = hom ? B.alpha : identity(db);
  if (hom) {
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a = 0; a < da; ++a) {
        T lhs = apply_R(R, unit(db, b), unit(da, a));
        T mapped({da, db});
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t j = 0; j < db; ++j)
            for (std::size_t p = 0; p < da; ++p)
              for (std::size_t q = 0; q < db; ++q) mapped.at(i, j) += alA(i, p) * alB(j, q) * lhs.at(p, q);
        if (!(mapped == apply_R(R, lin(alB, unit(db, b)), lin(alA, unit(da, a))))) return fail("homtwmap0", {b, a});
      }
  }
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t a2 = 0; a2 < da; ++a2) {
        const T lhs = apply_R(R, lin(alB, unit(db, b)), bil(ca, unit(da, a), unit(da, a2), da));
        T rhs({da, db});
        const T first = apply_R(R, unit(db, b), unit(da, a));
        for (std::size_t x = 0; x < da; ++x)
          for (std::size_t y = 0; y < db; ++y) {
            if (first.data[x * db + y].is_zero()) continue;
            const T second = apply_R(R, unit(db, y), unit(da, a2));
            for (std::size_t u = 0; u < da; ++u)
              for (std::size_t w = 0; w < db; ++w) {
                const Rational k = first.data[x * db + y] * second.data[u * db + w];
                if (k.is_zero()) continue;
                const V prod = bil(ca, unit(da, x), unit(da, u), da);
                const V beta = lin(alB, unit(db, w));
                for (std::size_t i = 0; i < da; ++i)
                  for (std::size_t j = 0; j < db; ++j) rhs.at(i, j) += k * prod[i] * beta[j];
              }
          }
        if (!(lhs == rhs)) return fail(hom ? "homtwmap1" : "twmap1", {b, a, a2});
      }
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t b2 = 0; b2 < db; ++b2)
      for (std::size_t a = 0; a < da; ++a) {
        const T lhs = apply_R(R, bil(cb, unit(db, b), unit(db, b2), db), lin(alA, unit(da, a)));
        T rhs({da, db});
        const T first = apply_R(R, unit(db, b2), unit(da, a));
        for (std::size_t x = 0; x < da; ++x)
          for (std::size_t y = 0; y < db; ++y) {
            if (first.data[x * db + y].is_zero()) continue;
            const T second = apply_R(R, unit(db, b), unit(da, x));
            for (std::size_t u = 0; u < da; ++u)
              for (std::size_t w = 0; w < db; ++w) {
                const Rational k = first.data[x * db + y] * second.data[u * db + w];
                if (k.is_zero()) continue;
                const V alpha = lin(alA, unit(da, u));
                const V prod = bil(cb, unit(db, w), unit(db, y), db);
                for (std::size_t i = 0; i < da; ++i)
                  for (std::size_t j = 0; j < db; ++j) rhs.at(i, j) += k * alpha[i] * prod[j];
              }
          }
        if (!(lhs == rhs)) return fail(hom ? "homtwmap2" : "twmap2", {b, b2, a});
      }
  return {};
}

// Δ(x) as [c][c'].
T comul(const C3& d, const V& x, std::size_t n) {
  T out({n, n});
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(j, k) += x[i] * d[i][j][k];
  }
  return out;
}

// Left action x·y from t[h][m][m'].
V act_left(const C3& t, const V& h, const V& m, std::size_t dm) { return bil(t, h, m, dm); }

// Right action y·x from t[h][m][m'] (t[h][m] holds e_m·e_h).
V act_right(const C3& t, const V& m, const V& h, std::size_t dm) { return bil(t, h, m, dm); }

// Coaction of x: left gives [c][m'], right gives [m'][c].
T coact(const CoactionTable& co, const C3& t, const V& x) {
  const bool left = co.side == Side::Left;
  T out(left ? std::vector<std::size_t>{co.coalgebra_dim, co.module_dim}
             : std::vector<std::size_t>{co.module_dim, co.coalgebra_dim});
  for (std::size_t m = 0; m < co.module_dim; ++m) {
    if (x[m].is_zero()) continue;
    for (std::size_t i = 0; i < out.dims[0]; ++i)
      for (std::size_t j = 0; j < out.dims[1]; ++j) out.at(i, j) += x[m] * t[m][i][j];
  }
  return out;
}

}  // namespace

Verdict hom_algebra(const HomAlgebra& A) {
  const std::size_t n = A.dim;
  const C3 c = A.constants();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const V ei = unit(n, i), ej = unit(n, j);
      if (lin(A.alpha, bil(c, ei, ej, n)) != bil(c, lin(A.alpha, ei), lin(A.alpha, ej), n))
        return fail("multiplicativity", {i, j});
      for (std::size_t k = 0; k < n; ++k) {
        const V ek = unit(n, k);
        if (bil(c, lin(A.alpha, ei), bil(c, ej, ek, n), n) != bil(c, bil(c, ei, ej, n), lin(A.alpha, ek), n))
          return fail("hom_associativity", {i, j, k});
      }
    }
  return {};
}

Verdict associative(const HomAlgebra& A) {
  const std::size_t n = A.dim;
  const C3 c = A.constants();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const V ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        if (bil(c, ei, bil(c, ej, ek, n), n) != bil(c, bil(c, ei, ej, n), ek, n)) return fail("associativity", {i, j, k});
      }
  return {};
}

Verdict hom_coalgebra(const HomCoalgebra& C) {
  const std::size_t n = C.dim;
  const C3 d = C.constants();
  for (std::size_t i = 0; i < n; ++i) {
    const V ei = unit(n, i);
    const T split = comul(d, ei, n);
    T mapped({n, n});
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) mapped.at(j, k) += C.alpha(j, p) * C.alpha(k, q) * split.data[p * n + q];
    if (!(mapped == comul(d, lin(C.alpha, ei), n))) return fail("comultiplicativity", {i});
    T lhs({n, n, n}), rhs({n, n, n});
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational w = split.data[p * n + q];
        if (w.is_zero()) continue;
        const V ap = lin(C.alpha, unit(n, p)), aq = lin(C.alpha, unit(n, q));
        const T dq = comul(d, unit(n, q), n), dp = comul(d, unit(n, p), n);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
              lhs.at(x, y, z) += w * ap[x] * dq.data[y * n + z];
              rhs.at(x, y, z) += w * dp.data[x * n + y] * aq[z];
            }
      }
    if (!(lhs == rhs)) return fail("hom_coassociativity", {i});
  }
  return {};
}

Verdict hom_bialgebra(const HomBialgebra& H) {
  if (!equal(H.algebra.alpha, H.coalgebra.alpha)) return {false, "alpha mismatch"};
  if (Verdict v = hom_algebra(H.algebra); !v) return v;
  if (Verdict v = hom_coalgebra(H.coalgebra); !v) return v;
  const std::size_t n = H.dim();
  const C3 c = H.algebra.constants(), d = H.coalgebra.constants();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const T lhs = comul(d, bil(c, unit(n, i), unit(n, j), n), n);
      const T di = comul(d, unit(n, i), n), dj = comul(d, unit(n, j), n);
      T rhs({n, n});
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
              const Rational w = di.data[p * n + q] * dj.data[r * n + s];
              if (w.is_zero()) continue;
              const V x = bil(c, unit(n, p), unit(n, r), n), y = bil(c, unit(n, q), unit(n, s), n);
              for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) rhs.at(u, v) += w * x[u] * y[v];
            }
      if (!(lhs == rhs)) return fail("comultiplication_multiplicative", {i, j});
    }
  return {};
}

Verdict twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  return twisting_common(A, B, R, false);
}

Verdict hom_twisting_map(const HomAlgebra& A, const HomAlgebra& B, const TwistingMapR& R) {
  return twisting_common(A, B, R, true);
}

Verdict braid(const TwistingMapR& R1, const TwistingMapR& R2, const TwistingMapR& R3) {
  const std::size_t da = R1.dimA, db = R1.dimB, dc = R2.dimB;
  for (std::size_t c = 0; c < dc; ++c)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a = 0; a < da; ++a) {
        T lhs({da, db, dc}), rhs({da, db, dc});
        for (std::size_t a1 = 0; a1 < da; ++a1)
          for (std::size_t b1 = 0; b1 < db; ++b1) {
            const Rational w1 = r_at(R1, b, a, a1, b1);
            if (w1.is_zero()) continue;
            for (std::size_t a2 = 0; a2 < da; ++a2)
              for (std::size_t c2 = 0; c2 < dc; ++c2) {
                const Rational w2 = w1 * r_at(R3, c, a1, a2, c2);
                if (w2.is_zero()) continue;
                for (std::size_t b3 = 0; b3 < db; ++b3)
                  for (std::size_t c3 = 0; c3 < dc; ++c3) lhs.at(a2, b3, c3) += w2 * r_at(R2, c2, b1, b3, c3);
              }
          }
        for (std::size_t b1 = 0; b1 < db; ++b1)
          for (std::size_t c1 = 0; c1 < dc; ++c1) {
            const Rational w1 = r_at(R2, c, b, b1, c1);
            if (w1.is_zero()) continue;
            for (std::size_t a1 = 0; a1 < da; ++a1)
              for (std::size_t c2 = 0; c2 < dc; ++c2) {
                const Rational w2 = w1 * r_at(R3, c1, a, a1, c2);
                if (w2.is_zero()) continue;
                for (std::size_t a2 = 0; a2 < da; ++a2)
                  for (std::size_t b2 = 0; b2 < db; ++b2) rhs.at(a2, b2, c2) += w2 * r_at(R1, b1, a1, a2, b2);
              }
          }
        if (!(lhs == rhs)) return fail("braid", {c, b, a});
      }
  return {};
}

Verdict module(const HomAlgebra& H, const ActionTable& M) {
  const std::size_t dh = H.dim, dm = M.module_dim;
  const C3 c = H.constants(), t = M.constants();
  const bool left = M.side == Side::Left;
  const auto act = [&](const V& h, const V& m) { return left ? act_left(t, h, m, dm) : act_right(t, m, h, dm); };
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t m = 0; m < dm; ++m) {
      const V eh = unit(dh, h), em = unit(dm, m);
      if (lin(M.alpha, act(eh, em)) != act(lin(H.alpha, eh), lin(M.alpha, em))) return fail("module1", {h, m});
      for (std::size_t h2 = 0; h2 < dh; ++h2) {
        const V e2 = unit(dh, h2);
        if (left) {
          if (act(lin(H.alpha, eh), act(e2, em)) != act(bil(c, eh, e2, dh), lin(M.alpha, em)))
            return fail("module2", {h, h2, m});
        } else {
          // (m·h)·α(h2) = α(m)·(h h2)
          if (act(lin(H.alpha, e2), act(eh, em)) != act(bil(c, eh, e2, dh), lin(M.alpha, em)))
            return fail("rmodule2", {m, h, h2});
        }
      }
    }
  return {};
}

Verdict module_hom_algebra(const HomBialgebra& H, const HomAlgebra& A, const ActionTable& act) {
  if (Verdict v = module(H.algebra, act); !v) return v;
  const std::size_t dh = H.dim(), da = A.dim;
  const C3 ca = A.constants(), d = H.coalgebra.constants(), t = act.constants();
  const Mat a2 = mat_mul(H.alpha(), H.alpha());
  const bool left = act.side == Side::Left;
  for (std::size_t h = 0; h < dh; ++h) {
    const T split = comul(d, unit(dh, h), dh);
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t y = 0; y < da; ++y) {
        const V ex = unit(da, x), ey = unit(da, y), ah = lin(a2, unit(dh, h));
        const V lhs = left ? act_left(t, ah, bil(ca, ex, ey, da), da) : act_right(t, bil(ca, ex, ey, da), ah, da);
        V rhs(da);
        for (std::size_t p = 0; p < dh; ++p)
          for (std::size_t q = 0; q < dh; ++q) {
            const Rational w = split.data[p * dh + q];
            if (w.is_zero()) continue;
            const V u = left ? act_left(t, unit(dh, p), ex, da) : act_right(t, ex, unit(dh, p), da);
            const V v = left ? act_left(t, unit(dh, q), ey, da) : act_right(t, ey, unit(dh, q), da);
            const V prod = bil(ca, u, v, da);
            for (std::size_t k = 0; k < da; ++k) rhs[k] += w * prod[k];
          }
        if (lhs != rhs) return fail("module_algebra", {h, x, y});
      }
  }
  return {};
}

Verdict comodule(const HomCoalgebra& C, const CoactionTable& M) {
  const std::size_t dc = C.dim, dm = M.module_dim;
  const C3 d = C.constants(), t = M.constants();
  const bool left = M.side == Side::Left;
  for (std::size_t m = 0; m < dm; ++m) {
    const T co = coact(M, t, unit(dm, m));
    // (α_C⊗α_M)λ vs λα_M, right version (α_M⊗α_C)ρ vs ρα_M.
    T mapped(co.dims);
    for (std::size_t i = 0; i < co.dims[0]; ++i)
      for (std::size_t j = 0; j < co.dims[1]; ++j)
        for (std::size_t p = 0; p < co.dims[0]; ++p)
          for (std::size_t q = 0; q < co.dims[1]; ++q) {
            const Rational f = left ? C.alpha(i, p) * M.alpha(j, q) : M.alpha(i, p) * C.alpha(j, q);
            mapped.at(i, j) += f * co.data[p * co.dims[1] + q];
          }
    if (!(mapped == coact(M, t, lin(M.alpha, unit(dm, m))))) return fail(left ? "comodule1" : "rcomodule1", {m});
    T lhs(left ? std::vector<std::size_t>{dc, dc, dm} : std::vector<std::size_t>{dm, dc, dc});
    T rhs = lhs;
    for (std::size_t p = 0; p < co.dims[0]; ++p)
      for (std::size_t q = 0; q < co.dims[1]; ++q) {
        const Rational w = co.data[p * co.dims[1] + q];
        if (w.is_zero()) continue;
        if (left) {
          // (Δ⊗α_M)λ and (α_C⊗λ)λ
          const T dp = comul(d, unit(dc, p), dc), lq = coact(M, t, unit(dm, q));
          const V ap = lin(C.alpha, unit(dc, p)), aq = lin(M.alpha, unit(dm, q));
          for (std::size_t x = 0; x < dc; ++x)
            for (std::size_t y = 0; y < dc; ++y)
              for (std::size_t z = 0; z < dm; ++z) {
                lhs.at(x, y, z) += w * dp.data[x * dc + y] * aq[z];
                rhs.at(x, y, z) += w * ap[x] * lq.data[y * dm + z];
              }
        } else {
          // (α_M⊗Δ)ρ and (ρ⊗α_C)ρ
          const T dq = comul(d, unit(dc, q), dc), rp = coact(M, t, unit(dm, p));
          const V ap = lin(M.alpha, unit(dm, p)), aq = lin(C.alpha, unit(dc, q));
          for (std::size_t x = 0; x < dm; ++x)
            for (std::size_t y = 0; y < dc; ++y)
              for (std::size_t z = 0; z < dc; ++z) {
                lhs.at(x, y, z) += w * ap[x] * dq.data[y * dc + z];
                rhs.at(x, y, z) += w * rp.data[x * dc + y] * aq[z];
              }
        }
      }
    if (!(lhs == rhs)) return fail(left ? "comodule2" : "rcomodule2", {m});
  }
  return {};
}

Verdict bicomodule(const HomCoalgebra& C, const CoactionTable& lam, const CoactionTable& rho) {
  if (Verdict v = comodule(C, lam); !v) return v;
  if (Verdict v = comodule(C, rho); !v) return v;
  const std::size_t dc = C.dim, dm = lam.module_dim;
  const C3 tl = lam.constants(), tr = rho.constants();
  for (std::size_t m = 0; m < dm; ++m) {
    T lhs({dc, dm, dc}), rhs({dc, dm, dc});
    const T r = coact(rho, tr, unit(dm, m)), l = coact(lam, tl, unit(dm, m));
    for (std::size_t p = 0; p < dm; ++p)
      for (std::size_t c = 0; c < dc; ++c) {
        const Rational w = r.data[p * dc + c];
        if (w.is_zero()) continue;
        const T lp = coact(lam, tl, unit(dm, p));
        const V ac = lin(C.alpha, unit(dc, c));
        for (std::size_t x = 0; x < dc; ++x)
          for (std::size_t y = 0; y < dm; ++y)
            for (std::size_t z = 0; z < dc; ++z) lhs.at(x, y, z) += w * lp.data[x * dm + y] * ac[z];
      }
    for (std::size_t c = 0; c < dc; ++c)
      for (std::size_t p = 0; p < dm; ++p) {
        const Rational w = l.data[c * dm + p];
        if (w.is_zero()) continue;
        const T rp = coact(rho, tr, unit(dm, p));
        const V ac = lin(C.alpha, unit(dc, c));
        for (std::size_t x = 0; x < dc; ++x)
          for (std::size_t y = 0; y < dm; ++y)
            for (std::size_t z = 0; z < dc; ++z) rhs.at(x, y, z) += w * ac[x] * rp.data[y * dc + z];
      }
    if (!(lhs == rhs)) return fail("bicomodule", {m});
  }
  return {};
}

Verdict comodule_hom_algebra(const HomBialgebra& H, const HomAlgebra& D, const CoactionTable& co) {
  if (Verdict v = comodule(H.coalgebra, co); !v) return v;
  const std::size_t dh = H.dim(), dd = D.dim;
  const C3 ch = H.algebra.constants(), cd = D.constants(), t = co.constants();
  const bool left = co.side == Side::Left;
  for (std::size_t x = 0; x < dd; ++x) {
    const T lhsA = coact(co, t, lin(D.alpha, unit(dd, x)));
    const T cx = coact(co, t, unit(dd, x));
    T rhsA(cx.dims);
    for (std::size_t i = 0; i < cx.dims[0]; ++i)
      for (std::size_t j = 0; j < cx.dims[1]; ++j)
        for (std::size_t p = 0; p < cx.dims[0]; ++p)
          for (std::size_t q = 0; q < cx.dims[1]; ++q) {
            const Rational f = left ? H.alpha()(i, p) * D.alpha(j, q) : D.alpha(i, p) * H.alpha()(j, q);
            rhsA.at(i, j) += f * cx.data[p * cx.dims[1] + q];
          }
    if (!(lhsA == rhsA)) return fail("comodule_algebra_alpha", {x});
    for (std::size_t y = 0; y < dd; ++y) {
      const T lhs = coact(co, t, bil(cd, unit(dd, x), unit(dd, y), dd));
      const T cy = coact(co, t, unit(dd, y));
      T rhs(lhs.dims);
      const std::size_t n1 = cx.dims[1];
      for (std::size_t p = 0; p < cx.dims[0]; ++p)
        for (std::size_t q = 0; q < n1; ++q)
          for (std::size_t r = 0; r < cy.dims[0]; ++r)
            for (std::size_t s = 0; s < n1; ++s) {
              const Rational w = cx.data[p * n1 + q] * cy.data[r * n1 + s];
              if (w.is_zero()) continue;
              const V u = left ? bil(ch, unit(dh, p), unit(dh, r), dh) : bil(cd, unit(dd, p), unit(dd, r), dd);
              const V v = left ? bil(cd, unit(dd, q), unit(dd, s), dd) : bil(ch, unit(dh, q), unit(dh, s), dh);
              for (std::size_t i = 0; i < u.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j) rhs.at(i, j) += w * u[i] * v[j];
            }
      if (!(lhs == rhs)) return fail("comodule_algebra_mul", {x, y});
    }
  }
  return {};
}

Mat left_smash_closed_form(const HomAlgebra& A, const HomBialgebra& H, const ActionTable& act) {
  const std::size_t da = A.dim, dh = H.dim(), n = da * dh;
  const C3 ca = A.constants(), chh = H.algebra.constants(), d = H.coalgebra.constants(), t = act.constants();
  const Mat h1 = mat_inv(H.alpha()), h2 = mat_mul(h1, h1), a1 = mat_inv(A.alpha);
  Mat out = zeros(n, n * n);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t h = 0; h < dh; ++h)
      for (std::size_t a_ = 0; a_ < da; ++a_)
        for (std::size_t h_ = 0; h_ < dh; ++h_) {
          const std::size_t col = (a * dh + h) * n + (a_ * dh + h_);
          for (std::size_t i = 0; i < dh; ++i)
            for (std::size_t j = 0; j < dh; ++j) {
              const Rational w = d[h][i][j];
              if (w.is_zero()) continue;
              const V left = bil(ca, unit(da, a), act_left(t, lin(h2, unit(dh, i)), lin(a1, unit(da, a_)), da), da);
              const V right = bil(chh, lin(h1, unit(dh, j)), unit(dh, h_), dh);
              for (std::size_t p = 0; p < da; ++p)
                for (std::size_t q = 0; q < dh; ++q) out(p * dh + q, col) += w * left[p] * right[q];
            }
        }
  return out;
}

Mat right_smash_closed_form(const HomBialgebra& H, const HomAlgebra& C, const ActionTable& act) {
  const std::size_t dh = H.dim(), dc = C.dim, n = dh * dc;
  const C3 cc = C.constants(), chh = H.algebra.constants(), d = H.coalgebra.constants(), t = act.constants();
  const Mat h1 = mat_inv(H.alpha()), h2 = mat_mul(h1, h1), c1 = mat_inv(C.alpha);
  Mat out = zeros(n, n * n);
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t c = 0; c < dc; ++c)
      for (std::size_t h_ = 0; h_ < dh; ++h_)
        for (std::size_t c_ = 0; c_ < dc; ++c_) {
          const std::size_t col = (h * dc + c) * n + (h_ * dc + c_);
          for (std::size_t i = 0; i < dh; ++i)
            for (std::size_t j = 0; j < dh; ++j) {
              const Rational w = d[h_][i][j];
              if (w.is_zero()) continue;
              const V left = bil(chh, unit(dh, h), lin(h1, unit(dh, i)), dh);
              const V right = bil(cc, act_right(t, lin(c1, unit(dc, c)), lin(h2, unit(dh, j)), dc), unit(dc, c_), dc);
              for (std::size_t p = 0; p < dh; ++p)
                for (std::size_t q = 0; q < dc; ++q) out(p * dc + q, col) += w * left[p] * right[q];
            }
        }
  return out;
}

Mat two_sided_smash_closed_form(const HomAlgebra& A, const HomBialgebra& H, const HomAlgebra& C,
                                const ActionTable& actL, const ActionTable& actR) {
  const std::size_t da = A.dim, dh = H.dim(), dc = C.dim, n = da * dh * dc;
  const C3 ca = A.constants(), chh = H.algebra.constants(), cc = C.constants(), d = H.coalgebra.constants();
  const C3 tl = actL.constants(), tr = actR.constants();
  const Mat h1 = mat_inv(H.alpha()), h2 = mat_mul(h1, h1), ai = mat_inv(A.alpha), ci = mat_inv(C.alpha);
  Mat out = zeros(n, n * n);
  const auto flat = [&](std::size_t a, std::size_t h, std::size_t c) { return (a * dh + h) * dc + c; };
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t h = 0; h < dh; ++h)
      for (std::size_t c = 0; c < dc; ++c)
        for (std::size_t a_ = 0; a_ < da; ++a_)
          for (std::size_t h_ = 0; h_ < dh; ++h_)
            for (std::size_t c_ = 0; c_ < dc; ++c_) {
              const std::size_t col = flat(a, h, c) * n + flat(a_, h_, c_);
              for (std::size_t i = 0; i < dh; ++i)
                for (std::size_t j = 0; j < dh; ++j) {
                  if (d[h][i][j].is_zero()) continue;
                  const V left =
                      bil(ca, unit(da, a), act_left(tl, lin(h2, unit(dh, i)), lin(ai, unit(da, a_)), da), da);
                  for (std::size_t k = 0; k < dh; ++k)
                    for (std::size_t l = 0; l < dh; ++l) {
                      const Rational w = d[h][i][j] * d[h_][k][l];
                      if (w.is_zero()) continue;
                      const V mid = lin(h1, bil(chh, unit(dh, j), unit(dh, k), dh));
                      const V right =
                          bil(cc, act_right(tr, lin(ci, unit(dc, c)), lin(h2, unit(dh, l)), dc), unit(dc, c_), dc);
                      for (std::size_t p = 0; p < da; ++p) {
                        if (left[p].is_zero()) continue;
                        for (std::size_t q = 0; q < dh; ++q) {
                          if (mid[q].is_zero()) continue;
                          for (std::size_t r = 0; r < dc; ++r) out(flat(p, q, r), col) += w * left[p] * mid[q] * right[r];
                        }
                      }
                    }
                }
            }
  return out;
}

Mat clifford_closed_form(const HomAlgebra& A, const Mat& sigma, const Rational& q) {
  const std::size_t n = A.dim, N = 2 * n;
  const C3 c = A.constants();
  Mat out = zeros(N, N * N);
  // Basis of A⊗C(k,q): (i, 0) = e_i⊗1, (i, 1) = e_i⊗v.
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      V a(n), b(n), cc(n), dd(n);
      (x % 2 == 0 ? a : b)[x / 2] = 1;
      (y % 2 == 0 ? cc : dd)[y / 2] = 1;
      const V one_ac = bil(c, a, cc, n), one_bsd = bil(c, b, lin(sigma, dd), n);
      const V v_ad = bil(c, a, dd, n), v_bsc = bil(c, b, lin(sigma, cc), n);
      for (std::size_t k = 0; k < n; ++k) {
        out(2 * k, x * N + y) = one_ac[k] + q * one_bsd[k];
        out(2 * k + 1, x * N + y) = v_ad[k] + v_bsc[k];
      }
    }
  return out;
}

QPlaneElement rho_generator_formula(Gen g, int m, int n, const UqParams& p) {
  const Rational xi = p.xi.pow(long(m) + n);
  QPlaneElement out;
  switch (g) {
    case Gen::E:
      if (n > 0) out.add(m + 1, n - 1, q_int(n, p.q) * xi * p.lambda.pow(long(p.l) - n + 1));
      break;
    case Gen::F:
      if (m > 0) out.add(m - 1, n + 1, q_int(m, p.q) * xi * p.lambda.pow(-long(p.l) - n - 1));
      break;
    case Gen::K:
    case Gen::Kinv: {
      // P(q^{±1}ξx, q^{∓1}ξλ⁻¹y) on P = x^m y^n
      const long s = g == Gen::K ? 1 : -1;
      out.add(m, n, p.q.pow(s * m) * p.xi.pow(m) * p.q.pow(-s * n) * p.xi.pow(n) * p.lambda.pow(-long(n)));
      break;
    }
  }
  return out;
}

Verdict rho_extension(const UqParams& params, int bound) {
  const PBWMonomial gens[] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}, {0, 0, -1}};
  const Gen names[] = {Gen::E, Gen::F, Gen::K, Gen::Kinv};
  for (std::size_t g = 0; g < 4; ++g)
    for (int m = 0; m <= bound; ++m)
      for (int n = 0; n <= bound; ++n) {
        const QPlaneElement got = rho_l(UqElement::monomial(gens[g]), QPlaneElement::monomial(m, n), params);
        if (!(got == rho_generator_formula(names[g], m, n, params)))
          return {false, "rho_" + to_string(names[g]) + " at (" + std::to_string(m) + "," + std::to_string(n) +
                             "): extension " + to_string(got) + ", closed form " +
                             to_string(rho_generator_formula(names[g], m, n, params))};
      }
  return {};
}

}  // namespace homtwist::oracle
