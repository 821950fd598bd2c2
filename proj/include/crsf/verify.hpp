#pragma once

// Identity battery behind `crsf verify`. Randomized checks run on a fixed
// seed and report one aggregated row ("agreeing/total").

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "crsf/berger.hpp"
#include "crsf/dedekind.hpp"
#include "crsf/fixtures.hpp"
#include "crsf/invariants.hpp"
#include "crsf/obstruct.hpp"
#include "crsf/rrketa.hpp"
#include "crsf/seifert.hpp"
#include "crsf/spectrum.hpp"

namespace crsf {

inline constexpr std::uint64_t kVerifySeed = 0x5eed'c0de'2024ULL;

inline const std::vector<std::string_view>& verify_scopes() {
  static const std::vector<std::string_view> scopes{"exactq",  "dedekind", "seifert", "invariants", "rrketa",
                                                    "berger", "spectrum", "obstruct"};
  return scopes;
}

namespace detail {

inline CheckRow tally(std::string name, std::int64_t ok, std::int64_t total) {
  const std::string of = "/" + std::to_string(total);
  return assert_row(std::move(name), std::to_string(ok) + of, std::to_string(total) + of);
}

inline void battery_exactq(std::vector<CheckRow>& rows) {
  const PiLaurent v = PiLaurent(Rational(2, 3)) - PiLaurent::monomial(Rational(1, 32), 2);
  rows.push_back(assert_row("pi-Laurent print", v.str(), "2/3 - 1/32*pi^2"));
  rows.push_back(assert_row("pi-Laurent parse round trip", PiLaurent::parse(v.str()).str(), v.str()));
  rows.push_back(assert_row("zeta(0, 1/3)", hurwitz_zeta_at_zero(Rational(1, 3)).str(), "1/6"));
  rows.push_back(assert_row("zeta(-1)", zeta_at_minus_one().str(), "-1/12"));
  rows.push_back(assert_row("3^-1 mod 7", std::to_string(mod_inverse(3, 7)), "5"));
}

inline void battery_dedekind(std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(kVerifySeed);
  constexpr int kPairs = 1000;
  int agree = 0;
  for (int i = 0; i < kPairs; ++i) {
    const std::int64_t alpha = fixtures::uniform(rng, 2, 100000);
    const std::int64_t rho = fixtures::random_unit(rng, alpha), beta = fixtures::random_unit(rng, alpha);
    const auto [a, c] = reduce_to_classical(alpha, rho, beta);
    agree += dedekind_rademacher(alpha, rho, beta) == dedekind_fast(c, a);
  }
  rows.push_back(tally("sawtooth = reciprocity, alpha <= 1e5", agree, kPairs));

  agree = 0;
  for (int i = 0; i < kPairs; ++i) {
    const std::int64_t alpha = fixtures::uniform(rng, 2, 500);
    const std::int64_t rho = fixtures::random_unit(rng, alpha), beta = fixtures::random_unit(rng, alpha);
    const double diff = std::abs(dedekind_rademacher(alpha, rho, beta).to_double() -
                                 dedekind_float_oracle(alpha, rho, beta));
    agree += diff <= 1e-9;
  }
  rows.push_back(tally("cotangent sum within 1e-9, alpha <= 500", agree, kPairs));

  agree = 0;
  for (int i = 0; i < kPairs; ++i) {
    const std::int64_t k = fixtures::uniform(rng, 2, 100000);
    const std::int64_t h = fixtures::random_unit(rng, k);
    const Rational hr(h), kr(k);
    const Rational rhs = Rational(-1, 4) + (hr / kr + kr / hr + Rational(1) / (hr * kr)) / Rational(12);
    agree += dedekind_rademacher(k, 1, h) + dedekind_rademacher(h, 1, k) == rhs;
  }
  rows.push_back(tally("reciprocity law", agree, kPairs));
}

inline void battery_seifert(std::vector<CheckRow>& rows) {
  const SeifertData l = lens_space(3, 2);
  rows.push_back(assert_row("L(3,2) chi_orb", l.chi_orb.str(), "2/3"));
  rows.push_back(assert_row("L(3,2) degree", l.degree.str(), "-1/3"));
  rows.push_back(assert_row("S^3 volume", geom_integrals_const(sphere()).vol.str(), "4*pi^2"));
  rows.push_back(assert_row("S^3 int R^2", geom_integrals_const(sphere()).int_R2.str(), "16*pi^2"));
}

inline void battery_invariants(std::vector<CheckRow>& rows) {
  const SeifertData s3 = sphere();
  rows.push_back(assert_row("eta0(S^3)", eta0(s3).str(), "2/3"));
  rows.push_back(assert_row("nu(S^3)", nu(s3).str(), "-1"));
  rows.push_back(assert_row("Ouyang constant term (S^3)", ouyang_polynomial(s3).c0.str(), "2/3"));
  rows.push_back(assert_row("eta(D*)(S^3)", eta_dstar(s3).str(), "2/3 - 1/32*pi^2"));
  rows.push_back(assert_row("zeta(Delta_H)(0) at 16 pi^2",
                            zeta_deltaH(PiLaurent::monomial(Rational(16), 2)).str(), "1/32*pi^2"));
  rows.push_back(assert_row("round sphere eta", ouyang_eta(s3, round_metric_t2()).str(), "0"));

  std::mt19937_64 rng(kVerifySeed + 1);
  constexpr int kData = 200;
  int dstar_identity = 0, eta0_identity = 0, ouyang = 0, zeta_q = 0;
  for (int i = 0; i < kData; ++i) {
    const SeifertData d = fixtures::random_seifert(rng);
    const GeomIntegrals g = geom_integrals_const(d);
    dstar_identity += check_cor15(d);
    eta0_identity += nu(d) == nu_from_eta0(eta0(d), g.int_R2);
    ouyang += ouyang_polynomial(d).c0 == eta0(d);
    zeta_q += zeta_Q_expansion(g).coefficient(0).is_zero();
  }
  rows.push_back(tally("nu = -3 eta(D*) + (1/16pi^2 - 3/512) int R^2", dstar_identity, kData));
  rows.push_back(tally("nu = -3 eta0 + (1/16pi^2) int R^2", eta0_identity, kData));
  rows.push_back(tally("Ouyang constant term = eta0", ouyang, kData));
  rows.push_back(tally("zeta_Q eps^0 coefficient vanishes (torsion-free)", zeta_q, kData));
  GeomIntegrals torsion = geom_integrals_const(s3);
  torsion.int_tau2 = PiLaurent::monomial(Rational(24), 2);
  rows.push_back(assert_row("zeta_0(Q) at int |tau|^2 = 24 pi^2", zeta0_Q(torsion).str(), "1"));
}

inline void battery_rrketa(std::vector<CheckRow>& rows) {
  rows.push_back(assert_row("eta0 via RRK (S^3)", eta0_via_rrk(sphere()).str(), "2/3"));
  rows.push_back(assert_row("eta0 via RRK (L(3,2))", eta0_via_rrk(lens_space(3, 2)).str(), "4/3"));
  std::mt19937_64 rng(kVerifySeed + 2);
  constexpr int kData = 100;
  int agree = 0;
  for (int i = 0; i < kData; ++i) {
    const SeifertData d = fixtures::random_seifert(rng);
    agree += eta0_via_rrk(d) == eta0(d);
  }
  rows.push_back(tally("eta0 via RRK = eta0, alpha <= 60", agree, kData));
}

inline void battery_berger(std::vector<CheckRow>& rows) {
  rows.push_back(assert_row("Hitchin eta(1,1,4)", hitchin_eta(1, 1, 4).str(), "6"));
  rows.push_back(assert_row("berger_nu(1)", berger_nu(1).str(), "-1"));
  const auto samples = fixtures::rational_samples(20);
  int sum = 0, mu = 0, webster = 0, adiabatic = 0;
  for (const auto& l : samples) {
    const Rational lhs = berger_nu(l) + Rational(3) * berger_eta0(l);
    const Rational one_plus = Rational(1) + l;
    sum += lhs == one_plus * one_plus / (Rational(4) * l);
    mu += berger_nu(l) == Rational(3) * berger_mu(l) + Rational(2);
    webster += lhs == berger_webster(l).R2;
    adiabatic += hitchin_adiabatic_coefficients(l)[2] == berger_eta0(l);
  }
  const auto n = static_cast<std::int64_t>(samples.size());
  rows.push_back(tally("nu + 3 eta0 = (1 + l^2)^2/(4 l^2)", sum, n));
  rows.push_back(tally("nu = 3 mu + 2", mu, n));
  rows.push_back(tally("nu + 3 eta0 = R^2", webster, n));
  rows.push_back(tally("adiabatic constant term = eta0", adiabatic, n));
}

inline void battery_spectrum(std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(kVerifySeed + 3);
  constexpr int kSamples = 10000;
  int exact = 0, flt = 0, trace = 0;
  for (int i = 0; i < kSamples; ++i) {
    const Rational k(fixtures::uniform(rng, 0, 400), fixtures::uniform(rng, 1, 8));
    const std::int64_t n = fixtures::uniform(rng, -30, 30);
    const Rational eps(1, fixtures::uniform(rng, 1, 1024));
    auto [lp, lm] = lambda_pm(k, n, eps);
    if (lp.is_exact()) {
      exact += quadratic_residual(lp, k, n, eps).exact().is_zero() && quadratic_residual(lm, k, n, eps).exact().is_zero();
      trace += lp.exact() + lm.exact() == Rational(1);
    } else {
      ++exact;
      trace += std::abs(lp.to_double() + lm.to_double() - 1.0) <= 1e-12;
    }
    auto [fp, fm] = lambda_pm(Scalar(k.to_double() + 0.25), n, eps);
    flt += std::abs(quadratic_residual(fp, k.to_double() + 0.25, n, eps).to_double()) < 1e-12 &&
           std::abs(quadratic_residual(fm, k.to_double() + 0.25, n, eps).to_double()) < 1e-12;
  }
  rows.push_back(tally("quadratic residual, exact path", exact, kSamples));
  rows.push_back(tally("quadratic residual < 1e-12, float path", flt, kSamples));
  rows.push_back(tally("lambda+ + lambda- = 1", trace, kSamples));

  const auto modes = fixtures::sphere_modes(12);
  const auto holo = fixtures::sphere_holo(12);
  const LineSet limit = dstar_limit_spectrum(modes, holo);
  rows.push_back(assert_row("S^3 limit spectrum has no holomorphic negatives",
                            std::to_string(negative_holomorphic_count(limit)), "0"));
}

inline void battery_obstruct(std::vector<CheckRow>& rows) {
  int disk = 0, total = 0;
  for (std::int64_t chi = -40; chi <= -2; chi += 2, ++total) {
    const auto roots = disk_bundle_solve(chi);
    disk += roots.size() == 1 && roots.front() == Rational(chi, 2);
  }
  rows.push_back(tally("disk bundle solution d = chi/2", disk, total));
  rows.push_back(assert_row("chi^2/4d at (chi, d) = (-2, -1)", check_chi2_over_4d(-2, -1).value.str(), "-1"));
  rows.push_back(assert_row("chi^2/4d at (chi, d) = (-2, -3) integral",
                            check_chi2_over_4d(-2, -3).pass ? "yes" : "no", "no"));
  rows.push_back(assert_row("filling identity, disk bundle over genus 2",
                            filling_identity(-2, -1, nu(from_genus(2, Rational(-1), {}))) ? "yes" : "no", "yes"));

  int lens = 0, pairs = 0;
  for (const auto& [p, q] : admissible_lens_pairs(100)) {
    ++pairs;
    lens += lens_report(p, q).rows.front().status == CheckStatus::exact_pass;
  }
  rows.push_back(tally("nu + 3 eta_round = -1/p, p <= 100", lens, pairs));
  const LensReport r = lens_report(3, 2);
  rows.insert(rows.end(), r.rows.begin(), r.rows.end());
}

}  // namespace detail

/// Runs the battery for one module, or every module for "all".
inline std::vector<CheckRow> run_battery(std::string_view scope) {
  std::vector<CheckRow> rows;
  auto want = [&](std::string_view name) { return scope == "all" || scope == name; };
  bool known = scope == "all";
  for (auto s : verify_scopes()) known = known || s == scope;
  if (!known) throw Error(Errc::Schema, "unknown verify scope '" + std::string(scope) + "'");
  if (want("exactq")) detail::battery_exactq(rows);
  if (want("dedekind")) detail::battery_dedekind(rows);
  if (want("seifert")) detail::battery_seifert(rows);
  if (want("invariants")) detail::battery_invariants(rows);
  if (want("rrketa")) detail::battery_rrketa(rows);
  if (want("berger")) detail::battery_berger(rows);
  if (want("spectrum")) detail::battery_spectrum(rows);
  if (want("obstruct")) detail::battery_obstruct(rows);
  return rows;
}

inline bool battery_passed(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (r.status == CheckStatus::exact_fail) return false;
  return true;
}

}  // namespace crsf
