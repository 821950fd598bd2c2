#include <gtest/gtest.h>

#include <random>

#include "crsf/fixtures.hpp"
#include "crsf/seifert.hpp"

using crsf::ConePoint;
using crsf::Errc;
using crsf::Error;
using crsf::PiLaurent;
using crsf::Rational;
using crsf::SeifertData;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no crsf::Error thrown";
  return Errc::Schema;
}

}  // namespace

TEST(Seifert, FromGenus) {
  EXPECT_EQ(crsf::from_genus(0, Rational(-1), {}).chi_orb, Rational(2));
  EXPECT_EQ(crsf::from_genus(2, Rational(-1), {}).chi_orb, Rational(-2));
  EXPECT_EQ(crsf::from_genus(0, Rational(-1, 3), {{3, 1, 1}, {3, 2, 2}}).chi_orb, Rational(2, 3));
  EXPECT_EQ(crsf::from_genus(0, Rational(-1), {{2, 1, 1}}).chi_orb, Rational(3, 2));
}

TEST(Seifert, FromGenusErrors) {
  EXPECT_EQ(code_of([] { (void)crsf::from_genus(0, Rational(0), {}); }), Errc::NotPseudoconvex);
  EXPECT_EQ(code_of([] { (void)crsf::from_genus(0, Rational(1, 2), {}); }), Errc::NotPseudoconvex);
  EXPECT_EQ(code_of([] { (void)crsf::from_genus(0, Rational(-1), {{4, 2, 1}}); }), Errc::InvalidConePoint);
  EXPECT_EQ(code_of([] { (void)crsf::from_genus(0, Rational(-1), {{1, 0, 0}}); }), Errc::InvalidConePoint);
  EXPECT_EQ(code_of([] { (void)crsf::from_genus(0, Rational(-1), {{5, 5, 1}}); }), Errc::InvalidConePoint);
  EXPECT_EQ(code_of([] { (void)crsf::from_chi(Rational(2), Rational(3), {}); }), Errc::NotPseudoconvex);
}

TEST(Seifert, LensSpaceData) {
  const SeifertData l32 = crsf::lens_space(3, 2);
  EXPECT_EQ(l32.degree, Rational(-1, 3));
  EXPECT_EQ(l32.chi_orb, Rational(2, 3));
  EXPECT_EQ(l32.cone_points, (std::vector<ConePoint>{{3, 1, 1}, {3, 2, 2}}));

  const SeifertData l52 = crsf::lens_space(5, 2);
  EXPECT_EQ(l52.degree, Rational(-1, 5));
  EXPECT_EQ(l52.chi_orb, Rational(2, 5));
  EXPECT_EQ(l52.cone_points, (std::vector<ConePoint>{{5, 1, 1}, {5, 4, 2}}));
}

TEST(Seifert, LensSpaceErrors) {
  EXPECT_EQ(code_of([] { (void)crsf::lens_space(2, 1); }), Errc::GcdCondition);
  EXPECT_EQ(code_of([] { (void)crsf::lens_space(7, 1); }), Errc::GcdCondition);
  EXPECT_EQ(code_of([] { (void)crsf::lens_space(6, 3); }), Errc::NonCoprime);
  EXPECT_EQ(code_of([] { (void)crsf::lens_space(1, 1); }), Errc::DomainError);
}

TEST(Seifert, LensChiMatchesGenusZeroFormula) {
  for (std::int64_t p = 3; p <= 40; ++p)
    for (std::int64_t q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1 || std::gcd(q - 1, p) != 1) continue;
      const SeifertData l = crsf::lens_space(p, q);
      EXPECT_EQ(crsf::orbifold_euler_characteristic(0, l.cone_points), l.chi_orb);
      EXPECT_TRUE(crsf::validate(l).empty());
    }
}

TEST(Seifert, WebsterCurvature) {
  EXPECT_EQ(crsf::webster_curvature_const(crsf::sphere()), Rational(2));
  EXPECT_EQ(crsf::webster_curvature_const(crsf::lens_space(3, 2)), Rational(2));
  EXPECT_EQ(crsf::webster_curvature_const(crsf::from_chi(Rational(2), Rational(-2), {})), Rational(1));
}

TEST(Seifert, GeomIntegrals) {
  const auto s3 = crsf::geom_integrals_const(crsf::sphere());
  EXPECT_EQ(s3.vol, PiLaurent::monomial(Rational(4), 2));
  EXPECT_EQ(s3.int_R2, PiLaurent::monomial(Rational(16), 2));
  EXPECT_EQ(s3.int_R, PiLaurent::monomial(Rational(8), 2));
  EXPECT_TRUE(s3.int_tau2.is_zero());

  const auto l = crsf::geom_integrals_const(crsf::lens_space(3, 2));
  EXPECT_EQ(l.vol, PiLaurent::monomial(Rational(4, 3), 2));
  EXPECT_EQ(l.int_R2, PiLaurent::monomial(Rational(16, 3), 2));
}

TEST(Seifert, GeomIntegralProperties) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const SeifertData d = crsf::fixtures::random_seifert(rng);
    const auto g = crsf::geom_integrals_const(d);
    const Rational r = crsf::webster_curvature_const(d);
    EXPECT_EQ(g.vol, PiLaurent::monomial(Rational(-4) * d.degree, 2));
    EXPECT_EQ(g.int_R, g.vol * PiLaurent(r));
    EXPECT_EQ(g.int_R2, g.int_R * PiLaurent(r));
    // Gauss-Bonnet on the base: int_M R = (2 pi)(int_Sigma R dtheta) with int_Sigma R dtheta = 2 pi chi.
    EXPECT_EQ(g.int_R, PiLaurent::monomial(Rational(4) * d.chi_orb, 2));
    EXPECT_TRUE(g.int_tau2.is_zero());
  }
}

TEST(Seifert, ValidateReportsWithoutThrowing) {
  EXPECT_TRUE(crsf::validate(crsf::sphere()).empty());
  const SeifertData bad{Rational(1), Rational(2), {{4, 2, 1}, {1, 0, 0}}};
  const auto diags = crsf::validate(bad);
  ASSERT_EQ(diags.size(), 3U);
  EXPECT_EQ(diags[0].code, Errc::NotPseudoconvex);
  EXPECT_EQ(diags[1].code, Errc::NonCoprime);
  EXPECT_EQ(diags[2].code, Errc::InvalidConePoint);
}

TEST(Seifert, RandomFixturesAreValid) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(crsf::validate(crsf::fixtures::random_seifert(rng)).empty());
}
