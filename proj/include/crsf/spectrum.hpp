#pragma once

// Diabatic spectrum of the boundary signature operator on a CR-Seifert
// manifold and the limit spectrum of D*. A joint eigenmode of the horizontal
// Laplacian (eigenvalue k) and of iT (eigenvalue n) contributes the two roots
// of
//
//     lambda^2 - lambda - (eps k + eps^2 n^2) = 0
//
// which, divided by eps, give the lines +Q+ and -Q- of d*_eps / eps. The
// holomorphic corrections add 2 h2(n) copies of n and remove 2 h0(n) copies
// of -n.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crsf/error.hpp"
#include "crsf/exactq.hpp"

namespace crsf {

struct SpectralMode {
  Scalar k;
  std::int64_t n = 0;
  std::int64_t mult = 1;
};

enum class Family { plus, minus, holomorphic, horizontal };

constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::plus: return "plus";
    case Family::minus: return "minus";
    case Family::holomorphic: return "holomorphic";
    case Family::horizontal: return "horizontal";
  }
  return "?";
}

struct SpectralLine {
  Scalar value;
  std::int64_t mult = 1;
  Family family = Family::minus;
  std::string origin;
  std::int64_t fourier = 0;  // iT-eigenvalue n of the originating mode or holomorphic line
};

using LineSet = std::vector<SpectralLine>;

/// h0(n): CR functions with iT f = -n f; h2(n): sections of the twisted canonical bundle.
struct HoloCounts {
  std::map<std::int64_t, std::int64_t> h0;
  std::map<std::int64_t, std::int64_t> h2;
};

inline void validate(const HoloCounts& holo) {
  for (const auto& [n, m] : holo.h0) {
    if (m < 0) throw Error(Errc::DomainError, "negative h0 count at n=" + std::to_string(n));
    if (n < 0 && m != 0) throw Error(Errc::DomainError, "h0(n) must vanish for n < 0, got n=" + std::to_string(n));
  }
  for (const auto& [n, m] : holo.h2)
    if (m < 0) throw Error(Errc::DomainError, "negative h2 count at n=" + std::to_string(n));
}

inline void validate(const SpectralMode& mode) {
  if (mode.k.to_double() < 0.0 || (mode.k.is_exact() && mode.k.exact().sign() < 0))
    throw Error(Errc::DomainError, "mode eigenvalue k must be non-negative, got " + mode.k.str());
  if (mode.mult < 1) throw Error(Errc::DomainError, "mode multiplicity must be positive");
}

inline std::string mode_origin(const SpectralMode& m) {
  return "k=" + m.k.str() + ";n=" + std::to_string(m.n);
}

/// Roots (lambda+, lambda-) of lambda^2 - lambda - (eps k + eps^2 n^2) = 0.
/// Exact when the radicand 1 + 4 eps (k + eps n^2) is a rational square.
inline std::pair<Scalar, Scalar> lambda_pm(const Scalar& k, std::int64_t n, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(Errc::DomainError, "eps must be positive");
  if (k.to_double() < 0.0) throw Error(Errc::DomainError, "k must be non-negative");
  const Rational n2 = Rational(n) * Rational(n);
  if (k.is_exact()) {
    const Rational c = eps * k.exact() + eps * eps * n2;
    if (auto root = rational_sqrt(Rational(1) + Rational(4) * c)) {
      const Rational plus = (Rational(1) + *root) / Rational(2);
      return {plus, Rational(1) - plus};
    }
  }
  const double e = eps.to_double();
  const double c = e * k.to_double() + e * e * n2.to_double();
  const double root = std::sqrt(1.0 + 4.0 * c);
  // The small root through -2c/(1 + root) avoids cancellation as eps -> 0.
  return {(1.0 + root) / 2.0, -2.0 * c / (1.0 + root)};
}

/// lambda^2 - lambda - (eps k + eps^2 n^2); identically zero on the exact path.
inline Scalar quadratic_residual(const Scalar& lambda, const Scalar& k, std::int64_t n, const Rational& eps) {
  const Rational n2 = Rational(n) * Rational(n);
  if (lambda.is_exact() && k.is_exact()) {
    const Rational& l = lambda.exact();
    return l * l - l - (eps * k.exact() + eps * eps * n2);
  }
  const double l = lambda.to_double(), e = eps.to_double();
  return l * l - l - (e * k.to_double() + e * e * n2.to_double());
}

namespace detail {

inline Scalar divide(const Scalar& v, const Rational& by) {
  if (v.is_exact()) return v.exact() / by;
  return v.to_double() / by.to_double();
}

inline bool is_zero(const Scalar& v) { return v.is_exact() ? v.exact().is_zero() : v.to_double() == 0.0; }

inline bool line_less(const SpectralLine& a, const SpectralLine& b) {
  const double va = a.value.to_double(), vb = b.value.to_double();
  if (va != vb) return va < vb;
  if (a.origin != b.origin) return a.origin < b.origin;
  return a.family < b.family;
}

/// Sorts by value then origin and merges lines that agree in value, family and origin.
inline LineSet normalize(LineSet lines) {
  std::stable_sort(lines.begin(), lines.end(), line_less);
  LineSet out;
  for (auto& l : lines) {
    if (l.mult == 0) continue;
    if (!out.empty() && out.back().origin == l.origin && out.back().family == l.family &&
        out.back().value == l.value) {
      out.back().mult += l.mult;
      continue;
    }
    out.push_back(std::move(l));
  }
  return out;
}

/// Adds 2 h2(n) copies of n and removes 2 h0(n) copies of -n (n >= 1).
inline LineSet apply_holomorphic_corrections(LineSet lines, const HoloCounts& holo) {
  validate(holo);
  for (const auto& [n, h] : holo.h2) {
    if (n == 0 || h == 0) continue;
    lines.push_back(SpectralLine{Rational(n), 2 * h, Family::holomorphic, "h2:" + std::to_string(n), n});
  }
  lines = normalize(std::move(lines));
  for (const auto& [n, h] : holo.h0) {
    if (n < 1 || h == 0) continue;
    std::int64_t remaining = 2 * h;
    const Rational target(-n);
    std::vector<SpectralLine*> candidates;
    for (auto& l : lines)
      if (l.family == Family::minus && l.value.is_exact() && l.value.exact() == target)
        candidates.push_back(&l);
    // Lines coming from modes with |n| equal to the removed value go first.
    std::sort(candidates.begin(), candidates.end(), [n](const SpectralLine* a, const SpectralLine* b) {
      const bool ma = (a->fourier == n || a->fourier == -n), mb = (b->fourier == n || b->fourier == -n);
      if (ma != mb) return ma;
      return a->origin < b->origin;
    });
    for (auto* l : candidates) {
      const std::int64_t take = std::min(remaining, l->mult);
      l->mult -= take;
      remaining -= take;
      if (remaining == 0) break;
    }
    if (remaining > 0)
      throw Error(Errc::NegativeMultiplicity, "cannot remove " + std::to_string(2 * h) + " copies of " +
                                                  target.str() + ": only " + std::to_string(2 * h - remaining) +
                                                  " present");
  }
  return normalize(std::move(lines));
}

}  // namespace detail

/// spec*(d*_eps / eps): the lambda+/eps and lambda-/eps lines of every mode
/// (the zero line of the constant mode dropped), with holomorphic corrections.
inline LineSet virtual_spectrum(const std::vector<SpectralMode>& modes, const HoloCounts& holo, const Rational& eps) {
  LineSet lines;
  lines.reserve(2 * modes.size());
  for (const auto& m : modes) {
    validate(m);
    auto [plus, minus] = lambda_pm(m.k, m.n, eps);
    const std::string origin = mode_origin(m);
    lines.push_back(SpectralLine{detail::divide(plus, eps), m.mult, Family::plus, origin, m.n});
    if (!detail::is_zero(minus))
      lines.push_back(SpectralLine{detail::divide(minus, eps), m.mult, Family::minus, origin, m.n});
  }
  return detail::apply_holomorphic_corrections(std::move(lines), holo);
}

/// spec*(D*) = spec*(-Delta_H) with the same holomorphic corrections.
inline LineSet dstar_limit_spectrum(const std::vector<SpectralMode>& modes, const HoloCounts& holo) {
  LineSet lines;
  for (const auto& m : modes) {
    validate(m);
    if (detail::is_zero(m.k)) continue;
    Scalar v = m.k.is_exact() ? Scalar(-m.k.exact()) : Scalar(-m.k.to_double());
    lines.push_back(SpectralLine{v, m.mult, Family::minus, mode_origin(m), m.n});
  }
  return detail::apply_holomorphic_corrections(std::move(lines), holo);
}

/// spec*(Delta_H): one +k line per mode with k != 0.
inline LineSet deltaH_lines(const std::vector<SpectralMode>& modes) {
  LineSet lines;
  for (const auto& m : modes) {
    validate(m);
    if (detail::is_zero(m.k)) continue;
    lines.push_back(SpectralLine{m.k, m.mult, Family::horizontal, mode_origin(m), m.n});
  }
  return detail::normalize(std::move(lines));
}

/// spec*(Delta_2) = spec*(D*) u spec*(Delta_3), as a multiset union.
inline LineSet delta2_spectrum(const LineSet& dstar_lines, const LineSet& deltaH) {
  LineSet all = dstar_lines;
  all.insert(all.end(), deltaH.begin(), deltaH.end());
  return detail::normalize(std::move(all));
}

/// Lines with family minus only.
inline LineSet minus_family(const LineSet& lines) {
  LineSet out;
  std::copy_if(lines.begin(), lines.end(), std::back_inserter(out),
               [](const SpectralLine& l) { return l.family == Family::minus; });
  return out;
}

/// sum mult * sgn(lambda) / |lambda|^s over the non-zero lines.
inline double partial_eta(const LineSet& lines, double s) {
  double acc = 0.0;
  for (const auto& l : lines) {
    const double v = l.value.to_double();
    if (v == 0.0) continue;
    acc += static_cast<double>(l.mult) * (v > 0 ? 1.0 : -1.0) / std::pow(std::abs(v), s);
  }
  return acc;
}

/// Total multiplicity of negative holomorphic lines (reported, no expected value).
inline std::int64_t negative_holomorphic_count(const LineSet& lines) {
  std::int64_t count = 0;
  for (const auto& l : lines)
    if (l.family == Family::holomorphic && l.value.to_double() < 0.0) count += l.mult;
  return count;
}

}  // namespace crsf
