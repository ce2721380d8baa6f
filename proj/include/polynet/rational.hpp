#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace polynet {

using int128 = __int128;

// Exact rational over 64-bit numerator/denominator. Intermediates widen to
// 128 bits; results must reduce back into 64-bit range or we refuse (all the
// exponent algebra here lives in tiny fractions, so hitting Overflow means a
// bug, not a capacity problem).
class Rational {
 public:
  constexpr Rational() : p_(0), q_(1) {}
  constexpr Rational(long long n) : p_(n), q_(1) {}
  Rational(long long n, long long d) { *this = make(n, d); }

  static Rational make(int128 n, int128 d) {
    if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.p_ = narrow(n);
    r.q_ = narrow(d);
    return r;
  }

  long long num() const { return p_; }
  long long den() const { return q_; }
  bool is_integer() const { return q_ == 1; }
  bool is_zero() const { return p_ == 0; }
  int sign() const { return p_ > 0 ? 1 : p_ < 0 ? -1 : 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make((int128)a.p_ * b.q_ + (int128)b.p_ * a.q_, (int128)a.q_ * b.q_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make((int128)a.p_ * b.q_ - (int128)b.p_ * a.q_, (int128)a.q_ * b.q_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make((int128)a.p_ * b.p_, (int128)a.q_ * b.q_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.p_ == 0) throw Error(Errc::DivisionByZero, "rational division by zero");
    return make((int128)a.p_ * b.q_, (int128)a.q_ * b.p_);
  }
  Rational operator-() const { Rational r; r.p_ = -p_; r.q_ = q_; return r; }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (int128)a.p_ * b.q_ < (int128)b.p_ * a.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return (double)p_ / (double)q_; }

  std::string str() const {
    std::string s = std::to_string(p_);
    if (q_ != 1) s += "/" + std::to_string(q_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  // Parses "p" or "p/q" (optional leading minus); anything else is a SyntaxError.
  static Rational parse(const std::string& text) {
    const auto bad = [&] { throw Error(Errc::SyntaxError, "bad rational '" + text + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    const auto to_ll = [&](const std::string& part) -> long long {
      if (part.empty() || (part.size() == 1 && (part[0] == '-' || part[0] == '+'))) bad();
      for (std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') bad();
      errno = 0;
      char* end = nullptr;
      long long v = std::strtoll(part.c_str(), &end, 10);
      if (errno != 0 || end != part.c_str() + part.size()) bad();
      return v;
    };
    if (slash == std::string::npos) return Rational(to_ll(text));
    return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
  }

 private:
  static int128 gcd128(int128 a, int128 b) {
    while (b != 0) { int128 t = a % b; a = b; b = t; }
    return a;
  }
  static long long narrow(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw Error(Errc::Overflow, "rational exceeds 64-bit range after reduction");
    return (long long)v;
  }

  long long p_;
  long long q_;
};

}  // namespace polynet
