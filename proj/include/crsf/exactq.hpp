#pragma once

// Exact rational arithmetic, finite Laurent polynomials in pi and in the
// diabatic parameter eps, plus the handful of number-theoretic helpers the
// invariant formulas need.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <concepts>
#include <cstdio>
#include <compare>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "crsf/error.hpp"

namespace crsf {

namespace detail {

inline mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace detail

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(__int128 num, __int128 den) {
    if (den == 0) throw Error(Errc::DomainError, "zero denominator");
    q_ = mpq_class(detail::to_mpz(num), detail::to_mpz(den));
    q_.canonicalize();
  }

  template <std::integral I, std::integral J>
  Rational(I num, J den) : Rational(static_cast<__int128>(num), static_cast<__int128>(den)) {}

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::DomainError, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p/q", "p" or "-p/q". Anything else is a schema error.
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(Errc::Schema, "empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw Error(Errc::Schema, "bad rational literal '" + s + "'");
      return Rational(mpz_class(strip_plus(s)), mpz_class(1));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw Error(Errc::Schema, "bad rational literal '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw Error(Errc::Schema, "zero denominator in '" + s + "'");
    return Rational(mpz_class(strip_plus(num)), d);
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  mpz_class floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::DomainError, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// Fractional part x - floor(x), always in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(x.floor(), mpz_class(1)); }

/// Exact square root when x is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(x.den().get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.den().get_mpz_t());
  return Rational(n, d);
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, in [1, m). By convention the inverse modulo 1 is 0.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw Error(Errc::DomainError, "modulus must be positive");
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = mod_floor(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1)
    throw Error(Errc::NotInvertible,
                std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  return mod_floor(t0, m);
}

/// zeta(0, x) = 1/2 - x for the Hurwitz zeta function, x in (0, 1].
inline Rational hurwitz_zeta_at_zero(const Rational& x) {
  if (x.sign() <= 0 || x > Rational(1))
    throw Error(Errc::DomainError, "Hurwitz argument " + x.str() + " outside (0, 1]");
  return Rational(1, 2) - x;
}

inline Rational zeta_at_minus_one() { return Rational(-1, 12); }

/// Finite Laurent polynomial sum_e c_e pi^e with exponents in [-4, 4].
class PiLaurent {
 public:
  static constexpr int kMinExp = -4;
  static constexpr int kMaxExp = 4;

  PiLaurent() = default;
  PiLaurent(const Rational& c) { set(0, c); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  PiLaurent(I c) : PiLaurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static PiLaurent monomial(const Rational& c, int exponent) {
    PiLaurent p;
    p.set(exponent, c);
    return p;
  }
  static PiLaurent pi_pow(int exponent) { return monomial(Rational(1), exponent); }

  Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  Rational to_rational() const {
    if (!is_rational())
      throw Error(Errc::ExponentMismatch, "value " + str() + " is not free of pi");
    return coefficient(0);
  }

  double to_double() const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += c.to_double() * std::pow(std::numbers::pi, e);
    return acc;
  }

  PiLaurent operator-() const {
    PiLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  PiLaurent& operator+=(const PiLaurent& o) {
    for (const auto& [e, c] : o.terms_) set(e, coefficient(e) + c);
    return *this;
  }
  PiLaurent& operator-=(const PiLaurent& o) { return *this += -o; }

  friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
  friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }

  friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
    PiLaurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.set(ea + eb, out.coefficient(ea + eb) + ca * cb);
    return out;
  }

  /// Division is only defined by a single monomial c*pi^e.
  friend PiLaurent operator/(const PiLaurent& a, const PiLaurent& b) {
    if (b.terms_.size() != 1)
      throw Error(Errc::DomainError, "division by non-monomial " + b.str());
    const auto& [eb, cb] = *b.terms_.begin();
    return a * monomial(Rational(1) / cb, -eb);
  }

  friend bool operator==(const PiLaurent& a, const PiLaurent& b) { return a.terms_ == b.terms_; }

  /// e.g. "2/3 - 1/32*pi^2"; terms in increasing exponent order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c.sign() < 0;
      const Rational mag = c.abs();
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != Rational(1)) out += mag.str() + "*";
      out += "pi";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// Inverse of str(). Accepts terms such as "16*pi^2", "pi", "-1/48*pi^-2".
  static PiLaurent parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(Errc::Schema, "empty pi-Laurent literal");
    PiLaurent out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sgn = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sgn = s[pos] == '-' ? -1 : 1;
        ++pos;
      }
      std::size_t end = pos;
      while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^')) ++end;
      const std::string term = s.substr(pos, end - pos);
      if (term.empty()) throw Error(Errc::Schema, "bad pi-Laurent literal '" + s + "'");
      pos = end;

      Rational coeff(1);
      int exponent = 0;
      const auto pi_at = term.find("pi");
      if (pi_at == std::string::npos) {
        coeff = Rational::parse(term);
      } else {
        std::string head = term.substr(0, pi_at);
        const std::string tail = term.substr(pi_at + 2);
        if (!head.empty()) {
          if (head.back() != '*') throw Error(Errc::Schema, "bad term '" + term + "'");
          head.pop_back();
          coeff = Rational::parse(head);
        }
        if (tail.empty()) {
          exponent = 1;
        } else {
          if (tail[0] != '^') throw Error(Errc::Schema, "bad term '" + term + "'");
          exponent = static_cast<int>(Rational::parse(tail.substr(1)).num().get_si());
          if (!Rational::parse(tail.substr(1)).is_integer())
            throw Error(Errc::Schema, "non-integer exponent in '" + term + "'");
        }
      }
      out += monomial(sgn < 0 ? -coeff : coeff, exponent);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const PiLaurent& p) { return os << p.str(); }

 private:
  void set(int exponent, const Rational& c) {
    if (exponent < kMinExp || exponent > kMaxExp)
      throw Error(Errc::ExponentOverflow, "pi exponent " + std::to_string(exponent) + " out of range");
    if (c.is_zero())
      terms_.erase(exponent);
    else
      terms_[exponent] = c;
  }

  std::map<int, Rational> terms_;
};

/// Laurent polynomial sum_i eta_i eps^i in the diabatic parameter, i in [-2, 2].
class LaurentEps {
 public:
  static constexpr int kMinExp = -2;
  static constexpr int kMaxExp = 2;

  PiLaurent coefficient(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? PiLaurent() : it->second;
  }

  void set(int i, const PiLaurent& v) {
    if (i < kMinExp || i > kMaxExp)
      throw Error(Errc::ExponentOverflow, "eps exponent " + std::to_string(i) + " out of range");
    if (v.is_zero())
      terms_.erase(i);
    else
      terms_[i] = v;
  }

  const std::map<int, PiLaurent>& terms() const { return terms_; }

  std::optional<int> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  friend bool operator==(const LaurentEps&, const LaurentEps&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [i, v] : terms_) {
      if (!out.empty()) out += "; ";
      out += "eps^" + std::to_string(i) + ": " + v.str();
    }
    return out;
  }

 private:
  std::map<int, PiLaurent> terms_;
};

/// A number that is exact when it can be, floating-point otherwise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double d) : v_(d) {}              // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const { return std::get<Rational>(v_); }
  double to_double() const {
    return is_exact() ? exact().to_double() : std::get<double>(v_);
  }
  std::string str() const {
    if (is_exact()) return exact().str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
    return buf;
  }

  /// Exact equality on the rational path, bitwise otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  std::variant<Rational, double> v_{Rational(0)};
};

}  // namespace crsf
