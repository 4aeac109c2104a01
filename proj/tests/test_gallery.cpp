#include <doctest.h>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/gallery.hpp"
#include "homtwist/oracle.hpp"

using namespace homtwist;
using testing::R;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::SyntaxError;
}

void oracle_all_structures(const Bundle& b) {
  for (const auto& [name, o] : b.objects) {
    CAPTURE(b.key + "." + name);
    if (const auto* a = std::get_if<HomAlgebra>(&o)) {
      CHECK(check_hom_algebra(*a).passed());
      CHECK(oracle::hom_algebra(*a).ok);
    } else if (const auto* c = std::get_if<HomCoalgebra>(&o)) {
      CHECK(oracle::hom_coalgebra(*c).ok);
    } else if (const auto* h = std::get_if<HomBialgebra>(&o)) {
      CHECK(check_hom_bialgebra(*h).passed());
      CHECK(oracle::hom_bialgebra(*h).ok);
    }
  }
}

}  // namespace

TEST_CASE("every gallery key builds with defaults and its structures pass the oracle") {
  CHECK(gallery_keys().size() == 12);
  for (const std::string& key : gallery_keys()) {
    CAPTURE(key);
    const Bundle b = build_gallery(key);
    CHECK(b.key == key);
    CHECK_FALSE(b.objects.empty());
    CHECK((b.provenance == "paper" || b.provenance == "auxiliary"));
    oracle_all_structures(b);
  }
}

TEST_CASE("claimed twisting maps") {
  struct Claim {
    const char* key;
    const char *A, *B, *R;
    bool hom;
  };
  for (const Claim& c : {Claim{"ttp_k2_lambda", "A", "B", "R", false}, {"homtwist_R1", "D", "D", "R", true},
                         {"homtwist_R2", "D", "D", "R", true}, {"homtwist_Dk2", "D", "K2", "R", true},
                         {"clifford", "A", "C", "R", true}}) {
    CAPTURE(c.key);
    const Bundle b = build_gallery(c.key);
    const auto& A = b.as<HomAlgebra>(c.A);
    const auto& B = b.as<HomAlgebra>(c.B);
    const auto& Rm = b.as<TwistingMapR>(c.R);
    if (c.hom) {
      CHECK(check_hom_twisting_map(A, B, Rm).passed());
      CHECK(oracle::hom_twisting_map(A, B, Rm).ok);
    } else {
      CHECK(check_twisting_map(A, B, Rm).passed());
      CHECK(oracle::twisting_map(A, B, Rm).ok);
    }
  }
}

TEST_CASE("claimed module and comodule structures") {
  const Bundle h = build_gallery("sweedler_h4", {{"c", R(2, 5)}});
  for (auto [H, A, act] : {std::tuple{"H", "A", "act"}, {"H", "C", "actR"}, {"Ht", "At", "act_t"}, {"Ht", "Ct", "actR_t"}})
    CHECK(oracle::module_hom_algebra(h.as<HomBialgebra>(H), h.as<HomAlgebra>(A), h.as<ActionTable>(act)).ok);
  const Bundle g = build_gallery("group_algebra", {{"n", 3}});
  CHECK(oracle::module_hom_algebra(g.as<HomBialgebra>("H"), g.as<HomAlgebra>("A"), g.as<ActionTable>("triv_act")).ok);
  CHECK(oracle::comodule(g.as<HomBialgebra>("H").coalgebra, g.as<CoactionTable>("triv_co")).ok);
  const Bundle t = build_gallery("homtwistor_2dim", {{"lambda2", 3}});
  CHECK(check_hom_twistor(t.as<HomAlgebra>("D"), t.as<Operator2>("T")).passed());
  CHECK(same_structure(t.as<HomAlgebra>("DT"), t.as<HomAlgebra>("DT_displayed")));
}

TEST_CASE("gallery errors") {
  CHECK(kind_of([] { build_gallery("no_such_key"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { build_gallery("clifford", {{"p", 2}}); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { build_gallery("homalg_2dim", {{"lambda2", 1}}); }) == ErrorKind::ParamConstraintViolation);
  CHECK(kind_of([] { build_gallery("homalg_2dim", {{"a", 0}}); }) == ErrorKind::ParamConstraintViolation);
  CHECK(kind_of([] { build_gallery("group_algebra", {{"n", 0}}); }) == ErrorKind::ParamConstraintViolation);
  CHECK(kind_of([] { build_gallery("group_algebra", {{"n", R(3, 2)}}); }) == ErrorKind::ParamConstraintViolation);
  CHECK(kind_of([] { build_gallery("sweedler_h4", {{"c", 0}}); }) == ErrorKind::ParamConstraintViolation);
  CHECK(kind_of([] { build_gallery("uq_setup", {{"q", 1}}); }) == ErrorKind::ParamConstraintViolation);
  const Bundle b = build_gallery("clifford");
  CHECK(kind_of([&] { b.as<Operator2>("A"); }) == ErrorKind::WrongKind);
  CHECK(kind_of([&] { b.get("Z"); }) == ErrorKind::UnknownName);
}
