#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homtwist/error.hpp"
#include "homtwist/object.hpp"

namespace homtwist {

using GalleryParams = std::map<std::string, Rational>;

/// Named objects built for one gallery key, in construction order.
struct Bundle {
  std::string key;
  std::string provenance;  // "paper" or "auxiliary"
  std::vector<std::pair<std::string, Object>> objects;

  const Object& get(const std::string& name) const;
  template <class T>
  const T& as(const std::string& name) const {
    const Object& o = get(name);
    if (const T* p = std::get_if<T>(&o)) return *p;
    raise(ErrorKind::WrongKind, key + "." + name + " is " + std::string(kind_name(o)) + ", not " +
                                    std::string(kind_name_of<T>()));
  }
};

/// Keys accepted by build_gallery.
const std::vector<std::string>& gallery_keys();

/// Builds the bundle for `key`. Missing parameters take documented defaults;
/// unknown keys or parameter names throw UnknownName, violated parameter
/// constraints throw ParamConstraintViolation.
///
///   ttp_k2_lambda(lambda=2)            A, B, R, product
///   homalg_2dim(a=1,lambda1=1,lambda2=2)  D
///   homtwistor_2dim(a,lambda1,lambda2)  D, T, DT, DT_displayed
///   homtwist_R1 / homtwist_R2(a=1,lambda1=1,a1..a5=0)  D, R, product
///   homtwist_Dk2(a=1,lambda1=1,a1=0,a2=0)  D, K2, R, product
///   clifford(q=2)                       A, sigma, C, R, Abar
///   sweedler_h4(c=1)                    H, A, act, C, actR, alphaH, alphaA, alphaC, Ht, At, act_t, Ct, actR_t
///   group_algebra(n=2)                  H, A, triv_act, triv_co
///   uq_setup(q=2,lambda=3,xi=5,l=0)     params
///   alpha_ttp_flip(q=2)                 A, B, alphaA, alphaB, P, R, product, T, C1, C2, expected
///   alpha_ttp_clifford(q=2)             A, B, sigma, alphaB, R, product, Abar, sigma_bar, expected
Bundle build_gallery(const std::string& key, const GalleryParams& params = {});

/// Gallery building blocks shared with tests and the acceptance suite.
HomAlgebra k2_algebra(const std::string& prefix = "e");
/// k[y]/(y²) on the basis (1, y).
HomAlgebra dual_numbers();
/// Two-dimensional algebra D with parameters a, λ₁, λ₂ and its structure map.
HomAlgebra example_2dim(const Rational& a, const Rational& l1, const Rational& l2);
/// Sweedler's four-dimensional bialgebra on the basis (1, g, x, gx).
HomBialgebra sweedler_h4();
/// k[C_n] on the basis (1, g, ..., g^{n-1}) with grouplike coproduct.
HomBialgebra group_bialgebra(std::size_t n);

}  // namespace homtwist
