#pragma once

// Dedekind-Rademacher sums
//
//     s(alpha, rho, beta) = 1/(4 alpha) sum_{k=1}^{alpha-1} cot(k rho pi/alpha) cot(k beta pi/alpha)
//
// computed three ways: the sawtooth form sum ((k rho/alpha))((k beta/alpha))
// (exact, O(alpha)), the reciprocity recursion on the classical sum s(c, alpha)
// (exact, O(log alpha)), and the literal cotangent sum in long double.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "crsf/error.hpp"
#include "crsf/exactq.hpp"

namespace crsf {

namespace detail {

inline void require_coprime(std::int64_t a, std::int64_t alpha, const char* what) {
  if (std::gcd(a, alpha) != 1)
    throw Error(Errc::NonCoprime, std::string(what) + "=" + std::to_string(a) +
                                      " is not prime to alpha=" + std::to_string(alpha));
}

inline void require_alpha(std::int64_t alpha) {
  if (alpha < 1) throw Error(Errc::DomainError, "alpha must be positive, got " + std::to_string(alpha));
}

}  // namespace detail

/// Sawtooth evaluation. With m_k = k*rho mod alpha and ((m/alpha)) = (2m - alpha)/(2 alpha)
/// the whole sum is an integer over 4 alpha^2, so the loop runs in 128-bit integers.
inline Rational dedekind_rademacher(std::int64_t alpha, std::int64_t rho, std::int64_t beta) {
  detail::require_alpha(alpha);
  if (alpha == 1) return Rational(0);
  detail::require_coprime(rho, alpha, "rho");
  detail::require_coprime(beta, alpha, "beta");
  const std::int64_t r = mod_floor(rho, alpha), b = mod_floor(beta, alpha);
  __int128 acc = 0;
  std::int64_t mr = 0, mb = 0;
  for (std::int64_t k = 1; k < alpha; ++k) {
    mr += r;
    if (mr >= alpha) mr -= alpha;
    mb += b;
    if (mb >= alpha) mb -= alpha;
    acc += static_cast<__int128>(2 * mr - alpha) * (2 * mb - alpha);
  }
  return Rational(acc, static_cast<__int128>(4) * alpha * alpha);
}

/// (alpha, c) with s(alpha, 1, c) = s(alpha, rho, beta), c = beta * rho^{-1} mod alpha.
inline std::pair<std::int64_t, std::int64_t> reduce_to_classical(std::int64_t alpha, std::int64_t rho,
                                                                 std::int64_t beta) {
  detail::require_alpha(alpha);
  if (alpha == 1) return {1, 0};
  detail::require_coprime(rho, alpha, "rho");
  detail::require_coprime(beta, alpha, "beta");
  const std::int64_t inv = mod_inverse(rho, alpha);
  return {alpha, static_cast<std::int64_t>(static_cast<__int128>(mod_floor(beta, alpha)) * inv % alpha)};
}

/// Classical Dedekind sum s(c, alpha) by the reciprocity law
///   s(h, k) + s(k, h) = -1/4 + (h/k + k/h + 1/(hk))/12.
inline Rational dedekind_fast(std::int64_t c, std::int64_t alpha) {
  detail::require_alpha(alpha);
  if (alpha == 1) return Rational(0);
  detail::require_coprime(c, alpha, "c");
  std::int64_t h = mod_floor(c, alpha), k = alpha;
  Rational acc(0);
  int sign = 1;
  while (h != 0 && k != 1) {
    const Rational hr(h), kr(k);
    const Rational rec = Rational(-1, 4) + (hr / kr + kr / hr + Rational(1) / (hr * kr)) / Rational(12);
    if (sign > 0)
      acc += rec;
    else
      acc -= rec;
    sign = -sign;
    k = std::exchange(h, k % h);
  }
  return acc;
}

/// Literal cotangent summation; an oracle for the exact routes.
inline double dedekind_float_oracle(std::int64_t alpha, std::int64_t rho, std::int64_t beta) {
  detail::require_alpha(alpha);
  if (alpha == 1) return 0.0;
  detail::require_coprime(rho, alpha, "rho");
  detail::require_coprime(beta, alpha, "beta");
  const long double pi = std::numbers::pi_v<long double>;
  const std::int64_t r = mod_floor(rho, alpha), b = mod_floor(beta, alpha);
  long double acc = 0.0L;
  for (std::int64_t k = 1; k < alpha; ++k) {
    const long double x = pi * static_cast<long double>(k * r % alpha) / alpha;
    const long double y = pi * static_cast<long double>(k * b % alpha) / alpha;
    acc += (std::cos(x) / std::sin(x)) * (std::cos(y) / std::sin(y));
  }
  return static_cast<double>(acc / (4.0L * alpha));
}

}  // namespace crsf
