#pragma once

// Deterministic sample data shared by the verify battery, the sweeps and
// the test suites.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "crsf/seifert.hpp"
#include "crsf/spectrum.hpp"

namespace crsf::fixtures {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::int64_t random_unit(std::mt19937_64& rng, std::int64_t alpha) {
  for (;;) {
    const std::int64_t x = uniform(rng, 1, alpha - 1);
    if (std::gcd(x, alpha) == 1) return x;
  }
}

/// Random valid data: genus <= 3, up to max_points cone points with
/// alpha <= max_alpha, and a negative degree d = -(m + sum beta_i/alpha_i).
inline SeifertData random_seifert(std::mt19937_64& rng, std::int64_t max_alpha = 60, int max_points = 4) {
  const std::int64_t genus = uniform(rng, 0, 3);
  const int points = static_cast<int>(uniform(rng, 0, max_points));
  std::vector<ConePoint> cones;
  Rational degree(0);
  for (int i = 0; i < points; ++i) {
    const std::int64_t alpha = uniform(rng, 2, max_alpha);
    ConePoint c{alpha, random_unit(rng, alpha), random_unit(rng, alpha)};
    degree -= Rational(c.beta, c.alpha);
    cones.push_back(c);
  }
  degree -= Rational(uniform(rng, cones.empty() ? 1 : 0, 3));
  return from_genus(genus, degree, std::move(cones));
}

/// Bidegree (a, b) harmonics on the standard sphere, a + b <= cutoff, in the
/// normalization k = 2ab + a + b, n = a - b, multiplicity a + b + 1. The CR
/// functions (a, 0) and their conjugates sit at k = |n|.
inline std::vector<SpectralMode> sphere_modes(std::int64_t cutoff) {
  std::vector<SpectralMode> out;
  for (std::int64_t a = 0; a <= cutoff; ++a)
    for (std::int64_t b = 0; a + b <= cutoff; ++b)
      out.push_back(SpectralMode{Rational(2 * a * b + a + b), a - b, a + b + 1});
  return out;
}

/// h0(n) = n + 1 and h2(n) = n - 1 up to the cutoff.
inline HoloCounts sphere_holo(std::int64_t cutoff) {
  HoloCounts h;
  for (std::int64_t n = 0; n <= cutoff; ++n) {
    h.h0[n] = n + 1;
    if (n >= 2) h.h2[n] = n - 1;
  }
  return h;
}

/// The first `count` positive rationals p/q (p, q <= 12, reduced) in a fixed order.
inline std::vector<Rational> rational_samples(std::size_t count) {
  std::vector<Rational> out;
  for (std::int64_t s = 2; out.size() < count; ++s)
    for (std::int64_t p = 1; p < s && out.size() < count; ++p) {
      const std::int64_t q = s - p;
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  return out;
}

}  // namespace crsf::fixtures
