#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "spineless/errors.hpp"

namespace spineless {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every d-invariant in the library
/// is one of these; there is no floating point anywhere on the computation
/// path.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const mpz_class& value) : q_(value) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses `a` or `a/b` (optional leading '-', decimal digits only).
  /// Non-reduced input such as `6/8` is accepted and canonicalized.
  static Rational parse(std::string_view text) {
    auto digits_ok = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    const std::string original(text);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!digits_ok(num_digits) || !digits_ok(den))
      throw InvalidInput("malformed rational '" + original + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + original + "'");
    return Rational(n, d);
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer <= this.
  mpz_class floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
  }

  mpz_class ceil() const {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
  }

  Rational abs() const { return q_ < 0 ? -*this : *this; }

  /// Canonical text: `a` for integers, `a/b` otherwise.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Decimal rendering with `digits` places, rounded half away from zero.
  /// Display only.
  std::string decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpq_class scaled = q_.get_num() < 0 ? mpq_class(-q_) : q_;
    scaled *= scale;
    mpq_class shifted = scaled + mpq_class(1, 2);
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    std::string body = rounded.get_str();
    if (digits > 0) {
      if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
      body.insert(body.size() - digits, ".");
    }
    const bool negative = q_ < 0 && rounded != 0;
    return negative ? "-" + body : body;
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw InvalidInput("division by zero");
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
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// Representative of x modulo 2Z in [0, 2).
inline Rational mod2(const Rational& x) {
  const Rational half = x / Rational(2);
  return x - Rational(2) * Rational(half.floor());
}

}  // namespace spineless
