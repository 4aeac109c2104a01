#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "homtwist/check_report.hpp"
#include "homtwist/error.hpp"
#include "homtwist/tensor.hpp"

using namespace homtwist;
using testing::M;
using testing::R;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(Rational::parse("3/6") == R(1, 2));
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4") == R(-4));
  CHECK(Rational::parse("-4").denominator() == "1");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("-10/4").str() == "-5/2");
  CHECK(Rational::parse("123456789012345678901234567890/2").numerator() == "61728394506172839450617283945");

  CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::ZeroDenominator);
  for (const char* bad : {"", "-", "1/", "/2", "+1", "1.5", "1/-2", " 1", "a", "--1", "1/2/3"})
    CHECK_MESSAGE(kind_of([&] { Rational::parse(bad); }) == ErrorKind::MalformedRational, bad);
}

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a = R(2, 6), b = R(-3, 9);
  CHECK((a + b).is_zero());
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b) == R(-1));
  CHECK(R(2).pow(-3) == R(1, 8));
  CHECK(R(-1, 2).pow(3) == R(-1, 8));
  CHECK(R(5).pow(0) == R(1));
  CHECK(kind_of([] { (void)(R(1) / R(0)); }) == ErrorKind::ZeroDenominator);
  CHECK(kind_of([] { (void)R(0).inverse(); }) == ErrorKind::NotInvertible);
  CHECK(R(1, 3) < R(1, 2));
}

TEST_CASE("mat_mul") {
  const Mat m = M({{1, 2}, {R(1, 3), -4}});
  CHECK(equal(mat_mul(identity(2), m), m));
  const Mat s = M({{0, 1}, {1, 0}});
  CHECK(is_identity(mat_mul(s, s)));
  CHECK(kind_of([] { mat_mul(zeros(2, 3), zeros(2, 2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("mat_inv") {
  CHECK(is_identity(mat_inv(identity(3))));
  const Mat u = M({{1, 1}, {0, 1}});
  const Mat ui = mat_inv(u);
  CHECK(equal(ui, M({{1, -1}, {0, 1}})));
  CHECK(is_identity(mat_mul(u, ui)));
  CHECK(kind_of([&] { mat_inv(M({{1, 1}, {1, 1}})); }) == ErrorKind::NotInvertible);
  CHECK(kind_of([] { mat_inv(zeros(2, 3)); }) == ErrorKind::DimensionMismatch);

  testing::RandomRationals rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = rng.matrix(4, 4);
    if (!is_invertible(a)) continue;
    const Mat ai = mat_inv(a);
    CHECK(is_identity(mat_mul(a, ai)));
    CHECK(is_identity(mat_mul(ai, a)));
  }
  // Rank deficiency requiring a row swap to notice.
  CHECK_FALSE(is_invertible(M({{0, 1, 2}, {0, 2, 4}, {1, 0, 0}})));
  CHECK(is_invertible(M({{0, 1}, {1, 0}})));
}

TEST_CASE("kron matches the row-major convention") {
  CHECK(is_identity(kron(identity(2), identity(2))));
  const Mat s = M({{0, 1}, {1, 0}});
  CHECK(equal(kron(s, identity(1)), s));
  CHECK(equal(kron(M({{2}}), M({{3}})), M({{6}})));

  testing::RandomRationals rng(11);
  const Mat a = rng.matrix(2, 3), b = rng.matrix(3, 2);
  const Mat k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 2; ++q) CHECK(k(i * 3 + j, p * 2 + q) == a(i, p) * b(j, q));

  const Mat c = rng.matrix(3, 2), d = rng.matrix(2, 4);
  CHECK(equal(mat_mul(kron(a, b), kron(c, d)), kron(mat_mul(a, c), mat_mul(b, d))));
}

TEST_CASE("swap matrix sends e_a⊗e_b to e_b⊗e_a") {
  const Mat s = swap_matrix(2, 3);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t r = 0; r < 6; ++r) CHECK(s(r, a * 3 + b) == R(r == b * 2 + a ? 1 : 0));
  CHECK(is_identity(mat_mul(swap_matrix(3, 2), s)));
}

TEST_CASE("flatten round trip") {
  const std::vector<std::vector<std::size_t>> shapes{{2, 3}, {4}, {2, 2, 2}, {3, 1, 5, 2}, {10, 10, 10, 10, 10}};
  for (const auto& dims : shapes) {
    const std::size_t n = product(dims);
    for (std::size_t f = 0; f < n; f += (n > 1000 ? 97 : 1)) CHECK(flatten(dims, unflatten(dims, f)) == f);
  }
  const std::vector<std::size_t> dims{2, 3};
  const std::vector<std::size_t> idx{1, 2};
  CHECK(flatten(dims, idx) == 5);
}

TEST_CASE("TensorVec apply and swap agree with kron") {
  testing::RandomRationals rng(3);
  const Mat op = rng.matrix(3, 3);
  const std::vector<std::size_t> dims{2, 3, 2};
  const Mat full = kron({identity(2), op, identity(2)});
  for (std::size_t f = 0; f < 12; ++f) {
    const TensorVec v = TensorVec::basis(dims, unflatten(dims, f));
    const std::vector<Rational> got = v.apply(LinOp(op), 1).dense();
    for (std::size_t r = 0; r < 12; ++r) CHECK(got[r] == full(r, f));
  }

  const Mat sw = kron(swap_matrix(2, 3), identity(2));
  for (std::size_t f = 0; f < 12; ++f) {
    const TensorVec v = TensorVec::basis(dims, unflatten(dims, f));
    const TensorVec w = v.swapped(0);
    CHECK(w.dims() == std::vector<std::size_t>{3, 2, 2});
    const std::vector<Rational> got = w.dense();
    for (std::size_t r = 0; r < 12; ++r) CHECK(got[r] == sw(r, f));
  }
}

TEST_CASE("scan is deterministic across worker counts") {
  const std::vector<std::size_t> ranges{5, 4, 3};
  const Equation eq = [](std::span<const std::size_t> t) {
    TensorVec a({1}), b({1});
    a.add(0, Rational(long(t[0] + t[1] + t[2])));
    b.add(0, Rational(long(t[0] * t[1] % 3 == 0 ? t[0] + t[1] + t[2] : 0)));
    return Sides{a, b};
  };
  setenv("HOMTWIST_THREADS", "1", 1);
  CheckReport one;
  scan(one, "eq", ranges, eq);
  setenv("HOMTWIST_THREADS", "3", 1);
  CheckReport three;
  scan(three, "eq", ranges, eq);
  unsetenv("HOMTWIST_THREADS");

  CHECK_FALSE(one.passed());
  CHECK(one.failure_count() == three.failure_count());
  REQUIRE(one.failures().size() == CheckReport::default_cap);
  REQUIRE(three.failures().size() == CheckReport::default_cap);
  for (std::size_t i = 0; i < one.failures().size(); ++i) CHECK(one.failures()[i].tuple == three.failures()[i].tuple);
  for (std::size_t i = 1; i < one.failures().size(); ++i) CHECK(one.failures()[i - 1].tuple < one.failures()[i].tuple);
}

TEST_CASE("report cap keeps passed honest") {
  CheckReport r(2);
  for (int i = 0; i < 5; ++i) r.add_failure({"x", {std::size_t(i)}, {}, {}});
  CHECK(r.failures().size() == 2);
  CHECK(r.failure_count() == 5);
  CHECK_FALSE(r.passed());
}
