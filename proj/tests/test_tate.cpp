#include "doctest.h"

#include "gstruct/tate.hpp"

using namespace gstruct;

namespace {
BigInt naive_sigma(unsigned k, std::int64_t n) {
  BigInt s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) {
      BigInt p = 1;
      for (unsigned i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}
}  // namespace

TEST_SUITE("tate") {
  TEST_CASE("sigma") {
    CHECK(sigma(3, 1) == 1);
    CHECK(sigma(3, 2) == 9);
    CHECK(sigma(5, 2) == 33);
    CHECK(sigma(3, 6) == 252);
    for (std::int64_t n = 1; n <= 200; ++n) {
      CHECK(sigma(3, n) == naive_sigma(3, n));
      CHECK(sigma(5, n) == naive_sigma(5, n));
    }
    CHECK_THROWS(sigma(3, 0));
  }

  TEST_CASE("series arithmetic") {
    // (1 - q)^-1 = 1 + q + q^2 + ...
    QSeries x(0, {1, -1, 0, 0, 0});
    auto inv = x.inverse();
    for (int e = 0; e <= 4; ++e) CHECK(inv.coefficient(e) == 1);
    CHECK((x * inv) == QSeries::constant(1, 4));
    QSeries qq(1, {1, 1, 0});  // q + q^2, known through q^3
    auto qi = qq.inverse();
    CHECK(qi.valuation() == -1);
    CHECK(qi.precision() == 1);
    CHECK(qi.coefficient(-1) == 1);
    CHECK(qi.coefficient(0) == -1);
    CHECK(qi.coefficient(1) == 1);
    CHECK(x.pow(3).coefficient(2) == 3);
    CHECK(x.pow(-2).coefficient(3) == 4);
    CHECK_THROWS_AS(QSeries(0, {0, 0}).inverse(), std::domain_error);
    CHECK_THROWS_AS(x.coefficient(5), std::out_of_range);
  }

  TEST_CASE("B and C") {
    auto [B, C] = tate_coefficients(50);
    CHECK(B.coefficient(1) == -5);
    CHECK(C.coefficient(1) == -1);
    CHECK(C.coefficient(2) == -23);
    CHECK(is_integral(B));
    CHECK(is_integral(C));
  }

  TEST_CASE("discriminant") {
    auto eta = discriminant_eta(50);
    CHECK(eta.coefficient(0) == 0);
    CHECK(eta.coefficient(1) == 1);
    CHECK(eta.coefficient(2) == -24);
    CHECK(eta.coefficient(3) == 252);
    auto [B, C] = tate_coefficients(50);
    auto w = discriminant_weierstrass(B, C);
    CHECK(w.precision() >= 50);
    CHECK(w == eta);
    CHECK(is_integral(w));
    QSeries zero(0, std::vector<Rational>(10));
    auto degenerate = discriminant_weierstrass(zero, zero);
    for (int e = 0; e <= 9; ++e) CHECK(degenerate.coefficient(e) == 0);
  }

  TEST_CASE("Eisenstein identity") {
    auto e4 = eisenstein_E4(50), e6 = eisenstein_E6(50);
    auto lhs = Rational(1, 1728) * (e4.pow(3) - e6.pow(2));
    CHECK(lhs == discriminant_eta(50));
  }

  TEST_CASE("j") {
    auto j = j_series(50);
    CHECK(j.valuation() == -1);
    CHECK(j.precision() == 50);
    CHECK(j.coefficient(-1) == 1);
    CHECK(j.coefficient(0) == 744);
    CHECK(j.coefficient(1) == 196884);
    CHECK(j.coefficient(2) == 21493760);
    CHECK(is_integral(j));
    // E4^3 / Delta as an independent route
    auto alt = eisenstein_E4(52).pow(3) * discriminant_eta(52).inverse();
    CHECK(alt.truncated(50) == j);
  }

  TEST_CASE("line format") {
    CHECK(format_series_lines(tate_series(TateSeries::C, 2)) == "0\t0/1\n1\t-1/1\n2\t-23/1\n");
    CHECK(format_series_lines(j_series(1)) == "-1\t1/1\n0\t744/1\n1\t196884/1\n");
  }
}
