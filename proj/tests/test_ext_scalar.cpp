#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hyptri/error.hpp"
#include "hyptri/ext_scalar.hpp"
#include "hyptri/rng.hpp"

using namespace hyptri;
using cd = std::complex<double>;

TEST_CASE("infinite sums follow the operational rules") {
  CHECK(ext_add(ExtReal::pos_inf(), ExtReal::neg_inf()) == ExtReal(0.0));
  CHECK(ext_add(ExtReal::pos_inf(), ExtReal::pos_inf()).is_pos_inf());
  CHECK(ext_add(ExtReal::neg_inf(), ExtReal::neg_inf()).is_neg_inf());
  CHECK(ext_add(ExtReal::neg_inf(), ExtReal(4.0)).is_neg_inf());
  CHECK(ext_add(ExtLength(3.0), ExtLength(0.0)) == ExtLength(3.0));
}

TEST_CASE("complementary real-ideal lengths add to pi i") {
  const ExtLength ab(0.3, ImQuantum::HalfPi), ba(-0.3, ImQuantum::HalfPi);
  const ExtLength sum = ext_add(ab, ba);
  CHECK(sum.re().value() == doctest::Approx(0.0));
  CHECK(sum.im() == ImQuantum::Pi);
}

TEST_CASE("imaginary part past pi is rejected") {
  const ExtLength p(1.0, ImQuantum::Pi), h(1.0, ImQuantum::HalfPi);
  CHECK_THROWS_AS(ext_add(p, h), Error);
  try {
    ext_add(p, h);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ImaginaryOverflow);
  }
}

TEST_CASE("infinite real part drops the quantum") {
  const ExtLength x(ExtReal::pos_inf(), ImQuantum::Pi);
  CHECK(x.im() == ImQuantum::Zero);
}

TEST_CASE("hyperbolic functions at infinity and zero") {
  CHECK(ext_tanh(ExtLength(ExtReal::pos_inf())).real() == 1.0);
  CHECK(ext_tanh(ExtLength(ExtReal::neg_inf())).real() == -1.0);
  CHECK(std::isinf(ext_cosh(ExtLength(ExtReal::neg_inf())).real()));
  CHECK(ext_sinh(ExtLength(ExtReal::neg_inf())).real() < 0);
  CHECK(ext_cosh(ExtLength(0.0)) == cd(1.0, 0.0));
}

TEST_CASE("sinh at a half-pi quantum against the complex exponential") {
  const cd z(0.5, std::numbers::pi / 2);
  const cd oracle = (std::exp(z) - std::exp(-z)) / 2.0;
  const cd got = ext_sinh(ExtLength(0.5, ImQuantum::HalfPi));
  CHECK(got.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(got.imag() == doctest::Approx(1.1276259652063807).epsilon(1e-15));
  CHECK(std::abs(got - oracle) < 1e-15);
}

TEST_CASE("property: cosh^2 - sinh^2 = 1 on every quantum") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.uniform(-20.0, 20.0);
    for (ImQuantum q : {ImQuantum::Zero, ImQuantum::HalfPi, ImQuantum::Pi}) {
      const ExtLength x(d, q);
      const cd c = ext_cosh(x), s = ext_sinh(x);
      const cd one = c * c - s * s;
      CHECK(std::abs(one - 1.0) <= 1e-12 * std::max(1.0, std::norm(c)));
    }
  }
}

TEST_CASE("property: half-pi shift swaps cosh and sinh") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.uniform(-10.0, 10.0);
    const ExtLength x(d, ImQuantum::HalfPi);
    const cd z(d, std::numbers::pi / 2);
    const cd oc = (std::exp(z) + std::exp(-z)) / 2.0, os = (std::exp(z) - std::exp(-z)) / 2.0;
    CHECK(std::abs(ext_cosh(x) - cd(0, std::sinh(d))) <= 1e-12 * std::cosh(d));
    CHECK(std::abs(ext_sinh(x) - cd(0, std::cosh(d))) <= 1e-12 * std::cosh(d));
    CHECK(std::abs(ext_cosh(x) - oc) <= 1e-12 * std::cosh(d));
    CHECK(std::abs(ext_sinh(x) - os) <= 1e-12 * std::cosh(d));
  }
}

TEST_CASE("segment lengths reproduce the tabulated pairs") {
  auto rr = segment_lengths(LineKind::Real, PointKind::Real, PointKind::Real, 0.8);
  CHECK(rr.first == ExtLength(0.8));
  CHECK(rr.second == ExtLength(-0.8, ImQuantum::Pi));

  auto ii = segment_lengths(LineKind::AtInfinity, PointKind::Infinite, PointKind::Infinite, 0.0);
  CHECK(ii.first == ExtLength(0.0));
  CHECK(ii.second == ExtLength(0.0, ImQuantum::Pi));

  auto rid = segment_lengths(LineKind::Real, PointKind::Real, PointKind::Ideal, 0.3);
  CHECK(rid.first == ExtLength(0.3, ImQuantum::HalfPi));
  CHECK(rid.second == ExtLength(-0.3, ImQuantum::HalfPi));

  auto inin = segment_lengths(LineKind::Real, PointKind::Infinite, PointKind::Infinite, 0.0);
  CHECK(inin.first.re().is_pos_inf());
  CHECK(inin.second.re().is_neg_inf());
}

TEST_CASE("property: finite segment pairs are complementary") {
  Rng rng(13);
  const PointKind kinds[] = {PointKind::Real, PointKind::Infinite, PointKind::Ideal};
  for (int i = 0; i < 300; ++i) {
    const double d = rng.uniform(-5.0, 5.0);
    for (LineKind carrier : {LineKind::Real, LineKind::AtInfinity}) {
      for (PointKind a : kinds) {
        for (PointKind b : kinds) {
          std::pair<ExtLength, ExtLength> p;
          try {
            p = segment_lengths(carrier, a, b, d);
          } catch (const Error&) {
            continue;  // configuration outside the tables
          }
          if (!p.first.is_finite() || !p.second.is_finite()) continue;
          const ExtLength s = ext_add(p.first, p.second);
          CHECK(std::abs(s.re().value()) < 1e-15);
          CHECK(s.im() == ImQuantum::Pi);
        }
      }
    }
  }
}

TEST_CASE("property: addition is associative with at most two infinities") {
  Rng rng(14);
  const ExtReal pool[] = {ExtReal::pos_inf(), ExtReal::neg_inf()};
  for (int i = 0; i < 500; ++i) {
    ExtReal x(rng.uniform(-3, 3)), y(rng.uniform(-3, 3)), z(rng.uniform(-3, 3));
    const int inf_count = static_cast<int>(rng.uniform(0, 3));
    if (inf_count >= 1) x = pool[i % 2];
    if (inf_count >= 2) z = pool[(i / 2) % 2];
    const ExtReal l = ext_add(ext_add(x, y), z), r = ext_add(x, ext_add(y, z));
    if (l.is_finite() && r.is_finite()) {
      CHECK(l.value() == doctest::Approx(r.value()).epsilon(1e-12));
    } else {
      CHECK(l.kind() == r.kind());
    }
  }
}

TEST_CASE("json round trip of an extended length") {
  const ExtLength x(-1.25, ImQuantum::HalfPi);
  const nlohmann::json j = x;
  CHECK(j.get<ExtLength>() == x);
  const ExtLength inf(ExtReal::neg_inf());
  CHECK(nlohmann::json(inf).get<ExtLength>() == inf);
}
