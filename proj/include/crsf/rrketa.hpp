#pragma once

// eta_0 through holomorphic counting: Riemann-Roch-Kawasaki Euler
// characteristics of the orbifold line bundles L^n and the zeta-regularized
// value at s = 0 of
//
//     sum_{n != 0} sgn(n) chi(L^{-n}) / |n|^s.
//
// chi(L^{-n}) = chi/2 - n d + g(n) with g periodic of period lcm(alpha_i) and
// mean zero. The constant drops out by odd symmetry, the affine part gives
// -2 d zeta(-1) = d/6, and the periodic part is a finite Hurwitz sum.

#include <cstdint>
#include <numeric>
#include <vector>

#include "crsf/exactq.hpp"
#include "crsf/seifert.hpp"

namespace crsf {

struct EtaBreakdown {
  Rational affine_part;
  Rational periodic_part;
  Rational total;
  std::int64_t period = 1;  // period used for the Hurwitz evaluation
};

struct HCounts {
  std::int64_t h0 = 0;
  std::int64_t h2 = 0;

  friend bool operator==(const HCounts&, const HCounts&) = default;
};

namespace detail {

/// beta * rho^{-1} mod alpha, the fiber weight after normalizing rho to 1.
inline std::int64_t fiber_weight(const ConePoint& c) {
  return static_cast<std::int64_t>(static_cast<__int128>(c.beta) * mod_inverse(c.rho, c.alpha) % c.alpha);
}

}  // namespace detail

/// The periodic part g(n) = sum_i [(1/2)(1 - 1/alpha_i) - {n beta_i rho'_i / alpha_i}].
///
/// The fractional part is taken at +n beta rho'. With the opposite sign the
/// periodic contribution flips to -2 s(alpha, rho, beta) per point and the
/// holomorphic route no longer reproduces eta_0 = 1 + d/3 + 4 sum s.
inline Rational periodic_component(const SeifertData& data, std::int64_t n) {
  Rational acc(0);
  for (const auto& c : data.cone_points) {
    acc += Rational(1, 2) * (Rational(1) - Rational(1, c.alpha));
    acc -= frac(Rational(static_cast<__int128>(n) * detail::fiber_weight(c), c.alpha));
  }
  return acc;
}

/// Riemann-Roch-Kawasaki: chi(L^{-n}) = chi/2 - n d + g(n).
inline Rational chi_del(const SeifertData& data, std::int64_t n) {
  return data.chi_orb / Rational(2) - Rational(n) * data.degree + periodic_component(data, n);
}

inline std::int64_t cone_period(const SeifertData& data) {
  std::int64_t a = 1;
  for (const auto& c : data.cone_points) a = std::lcm(a, c.alpha);
  return a;
}

/// Periods above this are evaluated point by point (the periodic part is additive).
inline constexpr std::int64_t kMaxJointPeriod = std::int64_t{1} << 26;

/// sum_{r=1}^{A} (g(r) - g(-r)) zeta(0, r/A) for the points in `cones`, with
/// the closed form zeta(0, x) = 1/2 - x. For a single point
/// g(r) - g(-r) = (alpha - 2m)/alpha where m = r c mod alpha != 0, so the sum is
/// an integer over 2 alpha A and the loop stays in 128-bit integers.
inline Rational hurwitz_periodic_sum(const std::vector<ConePoint>& cones, std::int64_t period) {
  Rational acc(0);
  for (const auto& c : cones) {
    if (period % c.alpha != 0) throw Error(Errc::DomainError, "period is not a multiple of alpha");
    const std::int64_t w = detail::fiber_weight(c);
    __int128 num = 0;
    std::int64_t m = 0;
    for (std::int64_t r = 1; r <= period; ++r) {
      m += w;
      if (m >= c.alpha) m -= c.alpha;
      if (m == 0) continue;
      num += static_cast<__int128>(c.alpha - 2 * m) * (period - 2 * r);
    }
    acc += Rational(num, static_cast<__int128>(2) * c.alpha * period);
  }
  return acc;
}

/// Literal evaluation through chi_del and hurwitz_zeta_at_zero in rational
/// arithmetic: f(r) = chi(L^{-r}) - chi(L^{r}) + 2 r d removes the affine
/// part. Slow; meant for cross-checking small periods.
inline Rational hurwitz_periodic_sum_literal(const SeifertData& data, std::int64_t period) {
  Rational acc(0);
  for (std::int64_t r = 1; r <= period; ++r) {
    const Rational f = chi_del(data, r) - chi_del(data, -r) + Rational(2 * r) * data.degree;
    acc += f * hurwitz_zeta_at_zero(Rational(r, period));
  }
  return acc;
}

inline EtaBreakdown regularized_eta_difference(const SeifertData& data) {
  EtaBreakdown out;
  out.affine_part = Rational(-2) * data.degree * zeta_at_minus_one();
  const std::int64_t joint = cone_period(data);
  if (joint <= kMaxJointPeriod) {
    out.period = joint;
    out.periodic_part = hurwitz_periodic_sum(data.cone_points, joint);
  } else {
    out.period = 0;
    for (const auto& c : data.cone_points) out.periodic_part += hurwitz_periodic_sum({c}, c.alpha);
  }
  out.total = out.affine_part + out.periodic_part;
  return out;
}

/// Same value with each cone point summed over its own period alpha_i.
inline EtaBreakdown regularized_eta_difference_per_point(const SeifertData& data) {
  EtaBreakdown out;
  out.affine_part = Rational(-2) * data.degree * zeta_at_minus_one();
  out.period = 0;
  for (const auto& c : data.cone_points) out.periodic_part += hurwitz_periodic_sum({c}, c.alpha);
  out.total = out.affine_part + out.periodic_part;
  return out;
}

/// eta_0 = 1 + 2 (eta(-iT|H^{2,0})(0) - eta(iT|ker dbar_b)(0)).
inline Rational eta0_via_rrk(const SeifertData& data) {
  return Rational(1) + Rational(2) * regularized_eta_difference(data).total;
}

/// Holomorphic counts on the standard sphere: h0(n) = n + 1 (homogeneous
/// polynomials of degree n in two variables), h2(n) = n - 1.
inline HCounts sphere_h_counts(std::int64_t n) {
  return HCounts{n >= 0 ? n + 1 : 0, n >= 2 ? n - 1 : 0};
}

}  // namespace crsf
