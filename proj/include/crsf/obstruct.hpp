#pragma once

// Obstructions to filling a CR-Seifert manifold by a complex hyperbolic
// surface, and the lens-space cross-checks.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "crsf/dedekind.hpp"
#include "crsf/invariants.hpp"
#include "crsf/seifert.hpp"

namespace crsf {

struct Verdict {
  bool pass = false;  // true when the quantity is an integer
  Rational value;
};

/// A complex hyperbolic filling forces nu(M) = -chi(N) + 3 tau(N) to be an integer.
inline Verdict check_integer_nu(const SeifertData& data) {
  const Rational v = nu(data);
  return Verdict{v.is_integer(), v};
}

/// When chi^2/(4d) is not an integer, M cannot bound a complex hyperbolic metric.
inline Verdict check_chi2_over_4d(const Rational& chi, const Rational& d) {
  detail::require_pseudoconvex(d);
  const Rational v = chi * chi / (Rational(4) * d);
  return Verdict{v.is_integer(), v};
}

inline bool filling_identity(std::int64_t chi_N, std::int64_t tau_N, const Rational& nu_value) {
  return nu_value == Rational(-chi_N + 3 * tau_N);
}

/// Rational roots of a x^2 + b x + c = 0 (a != 0), ascending, without repetition.
inline std::vector<Rational> rational_quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw Error(Errc::DomainError, "leading coefficient is zero");
  const Rational disc = b * b - Rational(4) * a * c;
  auto root = rational_sqrt(disc);
  if (!root) return {};
  const Rational two_a = Rational(2) * a;
  Rational x1 = (-b - *root) / two_a, x2 = (-b + *root) / two_a;
  if (x2 < x1) std::swap(x1, x2);
  if (x1 == x2) return {x1};
  return {x1, x2};
}

/// Disk bundle N over a surface of Euler characteristic chi (tau(N) = -1):
/// negative rational d with chi + 3 = d + 3 + chi^2/(4d), i.e. 4d^2 - 4 chi d + chi^2 = 0.
inline std::vector<Rational> disk_bundle_solve(std::int64_t chi) {
  if (chi >= 0 || chi % 2 != 0) throw Error(Errc::DomainError, "chi must be a negative even integer");
  const Rational x(chi);
  std::vector<Rational> out;
  for (auto& d : rational_quadratic_roots(Rational(4), Rational(-4) * x, x * x))
    if (d.sign() < 0) out.push_back(d);
  return out;
}

/// Right-hand side -nu(M) of chi(N) - 3 tau(N) >= -nu(M).
inline Rational miyaoka_yau_bound(const SeifertData& data) { return -nu(data); }

inline Scalar miyaoka_yau_bound(const SeifertData& data, const CurvatureIntegral& int_R2_base) {
  const Scalar v = nu(data, int_R2_base);
  return v.is_exact() ? Scalar(-v.exact()) : Scalar(-v.to_double());
}

/// tau_cusp(N) = tau(N) - (1/3) sum [Sigma_i].[Sigma_i].
inline Rational cusp_signature(std::int64_t tau_N, const std::vector<std::int64_t>& self_intersections) {
  const std::int64_t sum = std::accumulate(self_intersections.begin(), self_intersections.end(), std::int64_t{0});
  return Rational(tau_N) - Rational(sum, 3);
}

/// nu(L(p, q)) = -1/p + 12 s(p, q, 1), the closed form stated for lens spaces.
inline Rational lens_nu_direct(std::int64_t p, std::int64_t q) {
  if (std::gcd(p, q) != 1)
    throw Error(Errc::NonCoprime, "q=" + std::to_string(q) + " is not prime to p=" + std::to_string(p));
  return Rational(-1, p) + Rational(12) * dedekind_rademacher(p, q, 1);
}

enum class CheckStatus { exact_pass, exact_fail, report_match, report_mismatch };

constexpr std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::exact_pass: return "EXACT-PASS";
    case CheckStatus::exact_fail: return "EXACT-FAIL";
    case CheckStatus::report_match: return "REPORT-MATCH";
    case CheckStatus::report_mismatch: return "REPORT-MISMATCH";
  }
  return "?";
}

struct CheckRow {
  std::string check;
  std::string lhs;
  std::string rhs;
  CheckStatus status = CheckStatus::exact_pass;
};

inline CheckRow assert_row(std::string name, const std::string& lhs, const std::string& rhs) {
  return CheckRow{std::move(name), lhs, rhs, lhs == rhs ? CheckStatus::exact_pass : CheckStatus::exact_fail};
}

inline CheckRow report_row(std::string name, const std::string& lhs, const std::string& rhs) {
  return CheckRow{std::move(name), lhs, rhs, lhs == rhs ? CheckStatus::report_match : CheckStatus::report_mismatch};
}

struct LensReport {
  std::int64_t p = 0, q = 0;
  Rational nu;         // constant-curvature formula on the two-point orbifold data
  Rational eta_round;  // Ouyang's eta at the round parameter
  Rational nu_direct;  // -1/p + 12 s(p, q, 1)
  Rational eta_aps;    // -4 s(p, q, 1)
  std::vector<CheckRow> rows;
};

/// The identity nu + 3 eta_round = -1/p is asserted; the comparisons with the
/// closed forms in s(p, q, 1) are only reported.
inline LensReport lens_report(std::int64_t p, std::int64_t q) {
  const SeifertData data = lens_space(p, q);
  LensReport r;
  r.p = p;
  r.q = q;
  r.nu = nu(data);
  r.eta_round = ouyang_eta(data, round_metric_t2());
  r.nu_direct = lens_nu_direct(p, q);
  r.eta_aps = Rational(-4) * dedekind_rademacher(p, q, 1);
  const std::string tag = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  r.rows.push_back(assert_row(tag + " nu + 3*eta_round = -1/p", (r.nu + Rational(3) * r.eta_round).str(),
                              Rational(-1, p).str()));
  r.rows.push_back(report_row(tag + " nu vs -1/p + 12 s(p,q,1)", r.nu.str(), r.nu_direct.str()));
  r.rows.push_back(report_row(tag + " eta_round vs -4 s(p,q,1)", r.eta_round.str(), r.eta_aps.str()));
  return r;
}

/// Admissible lens parameters 1 <= q < p with gcd(q, p) = gcd(q - 1, p) = 1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> admissible_lens_pairs(std::int64_t pmax) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 2; p <= pmax; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1 && std::gcd(q - 1, p) == 1) out.emplace_back(p, q);
  return out;
}

struct BurnsEpstein {
  Rational mu;
  Rational nu;
  bool three_mu_integer = false;
  bool chi2_over_4d_integer = false;
};

/// mu = chi^2/(4d) and nu = -chi^2/(4d) - d - 3 on cone-free data.
inline BurnsEpstein burns_epstein(const Rational& chi, const Rational& d) {
  detail::require_pseudoconvex(d);
  BurnsEpstein out;
  out.mu = chi * chi / (Rational(4) * d);
  out.nu = -out.mu - d - Rational(3);
  out.three_mu_integer = (Rational(3) * out.mu).is_integer();
  out.chi2_over_4d_integer = out.mu.is_integer();
  return out;
}

}  // namespace crsf
