// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance [path-to-crsf-cli]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>

#include "crsf/crsf.hpp"

namespace {

using crsf::PiLaurent;
using crsf::Rational;
using crsf::SeifertData;

// Pinned tolerances and sample sizes.
constexpr double kDedekindFloatTol = 1e-9;
constexpr double kResidualFloatTol = 1e-12;
constexpr double kTraceFloatTol = 1e-12;
constexpr double kRateLow = 0.9, kRateHigh = 1.1;
constexpr double kCrossRouteSeconds = 5.0;
constexpr int kCrossRouteData = 200;
constexpr int kBergerSamples = 24;
constexpr int kDedekindPairs = 1000;
constexpr int kDstarIdentityData = 200;
constexpr int kSpectrumSamples = 10000;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// Literal cotangent sum in long double, kept separate from the library's oracle.
double cot_sum(std::int64_t alpha, std::int64_t rho, std::int64_t beta) {
  const long double pi = std::numbers::pi_v<long double>;
  long double acc = 0;
  for (std::int64_t k = 1; k < alpha; ++k)
    acc += 1.0L / std::tan(pi * static_cast<long double>((k * rho) % alpha) / alpha) /
           std::tan(pi * static_cast<long double>((k * beta) % alpha) / alpha);
  return static_cast<double>(acc / (4.0L * alpha));
}

Outcome c1_triple_route() {
  Outcome o;
  const SeifertData s3 = crsf::sphere();
  o.require(crsf::eta0(s3) == Rational(2, 3), "closed form");
  o.require(crsf::ouyang_polynomial(s3).c0 == Rational(2, 3), "Ouyang constant term");
  o.require(crsf::eta0_via_rrk(s3) == Rational(2, 3), "RRK/Hurwitz route");
  o.detail = o.pass ? "all three routes give 2/3" : o.detail;
  return o;
}

Outcome c2_sphere_nu() {
  Outcome o;
  o.require(crsf::nu(crsf::sphere()) == Rational(-1), "constant-curvature formula");
  o.require(crsf::berger_nu(Rational(1)) == Rational(-1), "Berger closed form at lambda^2 = 1");
  if (o.pass) o.detail = "nu(S^3) = -1 by both routes";
  return o;
}

Outcome c3_cross_route() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  const auto start = std::chrono::steady_clock::now();
  int agree = 0;
  for (int i = 0; i < kCrossRouteData; ++i) {
    const SeifertData d = crsf::fixtures::random_seifert(rng, 60, 4);
    agree += crsf::eta0_via_rrk(d) == crsf::eta0(d);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(agree == kCrossRouteData, std::to_string(kCrossRouteData - agree) + " disagreements");
  o.require(secs < kCrossRouteSeconds, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(kCrossRouteData) + " in " + std::to_string(secs) + " s";
  return o;
}

Outcome c4_berger() {
  Outcome o;
  int n = 0;
  for (const auto& l : crsf::fixtures::rational_samples(kBergerSamples)) {
    const Rational nu = crsf::berger_nu(l), eta = crsf::berger_eta0(l);
    const Rational lhs = nu + Rational(3) * eta;
    o.require(lhs == (Rational(1) + l) * (Rational(1) + l) / (Rational(4) * l), "nu + 3 eta0 at " + l.str());
    o.require(nu == Rational(3) * crsf::berger_mu(l) + Rational(2), "nu = 3 mu + 2 at " + l.str());
    o.require(lhs == crsf::berger_webster(l).R2, "nu + 3 eta0 = R^2 at " + l.str());
    ++n;
  }
  if (o.pass) o.detail = "3 identities at " + std::to_string(n) + " values of lambda^2";
  return o;
}

Outcome c5_dedekind() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  using crsf::fixtures::random_unit;
  using crsf::fixtures::uniform;
  for (int i = 0; i < kDedekindPairs; ++i) {
    const std::int64_t a = uniform(rng, 2, 100000), r = random_unit(rng, a), b = random_unit(rng, a);
    const auto [alpha, c] = crsf::reduce_to_classical(a, r, b);
    o.require(crsf::dedekind_rademacher(a, r, b) == crsf::dedekind_fast(c, alpha), "sawtooth vs reciprocity");
  }
  double worst = 0;
  for (int i = 0; i < kDedekindPairs; ++i) {
    const std::int64_t a = uniform(rng, 2, 500), r = random_unit(rng, a), b = random_unit(rng, a);
    worst = std::max(worst, std::abs(crsf::dedekind_rademacher(a, r, b).to_double() - cot_sum(a, r, b)));
  }
  o.require(worst <= kDedekindFloatTol, "float gap " + std::to_string(worst));
  for (int i = 0; i < kDedekindPairs; ++i) {
    const std::int64_t k = uniform(rng, 2, 100000), h = random_unit(rng, k);
    const Rational hr(h), kr(k);
    o.require(crsf::dedekind_rademacher(k, 1, h) + crsf::dedekind_rademacher(h, 1, k) ==
                  Rational(-1, 4) + (hr / kr + kr / hr + Rational(1) / (hr * kr)) / Rational(12),
              "reciprocity law at (" + std::to_string(h) + "," + std::to_string(k) + ")");
  }
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "3 x %d pairs; worst float gap %.2e", kDedekindPairs, worst);
    o.detail = buf;
  }
  return o;
}

Outcome c6_lens_identity() {
  Outcome o;
  int n = 0;
  for (const auto& [p, q] : crsf::admissible_lens_pairs(100)) {
    const SeifertData l = crsf::lens_space(p, q);
    const Rational lhs = crsf::nu(l) + Rational(3) * crsf::ouyang_eta(l, crsf::round_metric_t2());
    o.require(lhs == Rational(-1, p), "L(" + std::to_string(p) + "," + std::to_string(q) + ")");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " admissible pairs";
  return o;
}

Outcome c7_dstar_values() {
  Outcome o;
  const PiLaurent z = crsf::zeta_deltaH(PiLaurent::monomial(Rational(16), 2));
  o.require(z == PiLaurent::monomial(Rational(1, 32), 2), "zeta_deltaH(16 pi^2) = " + z.str());
  const PiLaurent e = crsf::eta_dstar(crsf::sphere());
  o.require(e == PiLaurent(Rational(2, 3)) - PiLaurent::monomial(Rational(1, 32), 2), "eta_dstar = " + e.str());
  if (o.pass) o.detail = z.str() + "; " + e.str();
  return o;
}

Outcome c8_dstar_identity() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  int n = 0;
  for (int i = 0; i < kDstarIdentityData; ++i) n += crsf::check_cor15(crsf::fixtures::random_seifert(rng));
  o.require(n == kDstarIdentityData, std::to_string(kDstarIdentityData - n) + " failures");
  if (o.pass) o.detail = std::to_string(n) + "/" + std::to_string(kDstarIdentityData);
  return o;
}

Outcome c9_zeta_q() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 9);
  for (int i = 0; i < 200; ++i) {
    const auto g = crsf::geom_integrals_const(crsf::fixtures::random_seifert(rng));
    o.require(crsf::zeta_Q_expansion(g).coefficient(0).is_zero(), "torsion-free eps^0 coefficient");
  }
  for (const auto& t : crsf::fixtures::rational_samples(20)) {
    auto g = crsf::geom_integrals_const(crsf::sphere());
    g.int_tau2 = PiLaurent::monomial(t, 2);
    const PiLaurent expect = PiLaurent::monomial(Rational(1, 24), -2) * g.int_tau2;
    o.require(crsf::zeta0_Q(g) == expect, "torsion integral " + t.str());
  }
  if (o.pass) o.detail = "200 torsion-free inputs, 20 torsion integrals";
  return o;
}

Outcome c10_spectrum() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 10);
  using crsf::fixtures::uniform;
  int exact = 0, floats = 0;
  double worst = 0;
  for (int i = 0; i < kSpectrumSamples; ++i) {
    const std::int64_t n = uniform(rng, -40, 40);
    const Rational eps(1, uniform(rng, 1, 2048));
    // Half the draws sit on CR modes k = |n|, which always take the exact path.
    const Rational k = (i % 2 == 0) ? Rational(std::abs(n)) : Rational(uniform(rng, 0, 4000), uniform(rng, 1, 9));
    const auto [lp, lm] = crsf::lambda_pm(k, n, eps);
    if (lp.is_exact()) {
      ++exact;
      o.require(crsf::quadratic_residual(lp, k, n, eps).exact().is_zero() &&
                    crsf::quadratic_residual(lm, k, n, eps).exact().is_zero(),
                "exact residual");
      o.require(lp.exact() + lm.exact() == Rational(1), "exact trace");
    } else {
      ++floats;
      const double r = std::max(std::abs(crsf::quadratic_residual(lp, k, n, eps).to_double()),
                                std::abs(crsf::quadratic_residual(lm, k, n, eps).to_double()));
      worst = std::max(worst, r);
      o.require(r < kResidualFloatTol, "float residual " + std::to_string(r));
      o.require(std::abs(lp.to_double() + lm.to_double() - 1.0) < kTraceFloatTol, "float trace");
    }
  }
  // Observed order of |lambda-/eps + k| on eps = 2^-1 .. 2^-10.
  double rate_lo = INFINITY, rate_hi = -INFINITY;
  for (const auto& [k, n] : std::array<std::pair<std::int64_t, std::int64_t>, 4>{{{3, 1}, {1, 5}, {10, 2}, {7, 0}}}) {
    std::array<double, 10> err{};
    for (int j = 1; j <= 10; ++j) {
      const Rational eps(1, std::int64_t{1} << j);
      const auto [lp, lm] = crsf::lambda_pm(Rational(k), n, eps);
      err[j - 1] = std::abs(lm.to_double() / eps.to_double() + static_cast<double>(k));
    }
    // The observed order is the rate of the finest halving; coarser halvings
    // are pre-asymptotic and must approach it monotonically.
    double prev = -INFINITY;
    for (int j = 1; j < 10; ++j) {
      const double rate = std::log2(err[j - 1] / err[j]);
      o.require(rate >= prev, "rate not monotone for (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + ")");
      prev = rate;
    }
    rate_lo = std::min(rate_lo, prev);
    rate_hi = std::max(rate_hi, prev);
  }
  o.require(rate_lo >= kRateLow && rate_hi <= kRateHigh,
            "observed order in [" + std::to_string(rate_lo) + ", " + std::to_string(rate_hi) + "]");
  if (o.pass) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "%d exact, %d float (worst residual %.1e); observed order %.3f..%.3f", exact,
                  floats, worst, rate_lo, rate_hi);
    o.detail = buf;
  }
  return o;
}

Outcome c11_obstruction() {
  Outcome o;
  for (std::int64_t chi = -40; chi <= -2; chi += 2) {
    const auto roots = crsf::disk_bundle_solve(chi);
    o.require(roots.size() == 1 && roots.front() == Rational(chi, 2), "chi = " + std::to_string(chi));
  }
  // Disk bundle over a genus-2 surface with d = chi/2 = -1: chi^2/4d = -1 is an integer.
  const auto worked = crsf::check_chi2_over_4d(Rational(-2), Rational(-1));
  o.require(worked.pass && worked.value == Rational(-1), "worked example chi^2/4d");
  const auto obstructed = crsf::check_chi2_over_4d(Rational(-2), Rational(-3));
  o.require(!obstructed.pass, "d = -3 must be obstructed");
  if (o.pass) o.detail = "20 even chi; worked example integral, d = -3 obstructed";
  return o;
}

Outcome c12_report_mode(const std::string& cli) {
  Outcome o;
  const auto r = crsf::lens_report(3, 2);
  o.require(r.rows.at(0).status == crsf::CheckStatus::exact_pass, "internal identity");
  o.require(r.rows.at(1).status == crsf::CheckStatus::report_mismatch, "nu comparison should be a mismatch");
  if (!cli.empty()) {
    const std::string cmd = cli + " sweep lens --pmax 50 --format csv";
    FILE* pipe = popen(cmd.c_str(), "r");
    o.require(pipe != nullptr, "cannot run " + cmd);
    if (pipe) {
      std::string out;
      std::array<char, 4096> buf{};
      while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
      const int status = pclose(pipe);
      o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "sweep exit status " + std::to_string(status));
      o.require(out.rfind("p,q,nu,eta_round,nu_direct,eta_aps,identity,nu_vs_direct,eta_vs_aps\n", 0) == 0,
                "sweep header");
      o.require(out.find("\n3,2,-11/3,10/9,-1,2/9,EXACT-PASS,REPORT-MISMATCH,REPORT-MISMATCH\n") != std::string::npos,
                "(3,2) row");
    }
  }
  if (o.pass) o.detail = cli.empty() ? "library report only" : "sweep exits 0 with (3,2) REPORT-MISMATCH";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::array<std::pair<const char*, std::function<Outcome()>>, 12> criteria{{
      {"triple-route eta0(S^3) = 2/3", c1_triple_route},
      {"nu(S^3) = -1 by two routes", c2_sphere_nu},
      {"cross-route eta0 on random data", c3_cross_route},
      {"Berger identity battery", c4_berger},
      {"Dedekind sums", c5_dedekind},
      {"lens identity nu + 3 eta_round = -1/p", c6_lens_identity},
      {"zeta(Delta_H)(0) and eta(D*) on S^3", c7_dstar_values},
      {"nu from eta(D*) on random data", c8_dstar_identity},
      {"zeta_Q expansion", c9_zeta_q},
      {"spectral quadratic and diabatic decay", c10_spectrum},
      {"disk bundles and chi^2/4d", c11_obstruction},
      {"report mode for lens sweep", [&] { return c12_report_mode(cli); }},
  }};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
