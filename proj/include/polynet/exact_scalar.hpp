#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "rational.hpp"

namespace polynet {

// Splits n into s*s*r with r squarefree (n = s^2 r, n >= 1). Trial division;
// inputs here are discriminant-sized, nowhere near stressing this.
inline std::pair<long long, long long> squarefree_split(long long n) {
  long long s = 1, r = 1;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    int e = 0;
    while (n % f == 0) { n /= f; ++e; }
    for (int i = 0; i < e / 2; ++i) s *= f;
    if (e & 1) r *= f;
  }
  r *= n;  // leftover prime (or 1)
  return {s, r};
}

// A number of the form a + b*sqrt(r): exact rationals extended by at most one
// square root. b == 0 collapses to the plain rational a (then r == 1); when
// b != 0, r is squarefree and > 1. Mixing two different radicands, or taking
// a root of a radical, is a hard error rather than a silent approximation.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), r_(1) {}
  ExactScalar(long long n) : a_(n), b_(0), r_(1) {}
  ExactScalar(const Rational& a) : a_(a), b_(0), r_(1) {}
  ExactScalar(const Rational& a, const Rational& b, long long r) { assign(a, b, r); }

  static ExactScalar sqrt_of(const Rational& x) {
    if (x.sign() < 0)
      throw Error(Errc::NegativeDiscriminant, "square root of negative rational " + x.str());
    if (x.is_zero()) return ExactScalar(0);
    // sqrt(p/q) = sqrt(p*q)/q
    const int128 prod = (int128)x.num() * x.den();
    if (prod > INT64_MAX) throw Error(Errc::Overflow, "radicand too large");
    const auto [s, r] = squarefree_split((long long)prod);
    return ExactScalar(Rational(0), Rational(s, x.den()), r);
  }

  bool is_rational() const { return b_.is_zero(); }
  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  long long radicand() const { return r_; }

  // The rational value; refuses when a radical survives.
  const Rational& as_rational() const {
    if (!is_rational())
      throw Error(Errc::NestedRadical, "value " + str() + " is not rational");
    return a_;
  }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // a and b*sqrt(r) compete: compare a^2 against b^2 r.
    const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(r_);
    if (lhs == rhs) return 0;  // cannot happen for squarefree r>1, kept for safety
    const bool rational_wins = lhs > rhs;
    return rational_wins ? a_.sign() : b_.sign();
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    const long long r = merge_radicand(x, y);
    return ExactScalar(x.a_ + y.a_, x.b_ + y.b_, r);
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    const long long r = merge_radicand(x, y);
    return ExactScalar(x.a_ - y.a_, x.b_ - y.b_, r);
  }
  ExactScalar operator-() const { return ExactScalar(-a_, -b_, r_); }

  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    const long long r = merge_radicand(x, y);
    // (a1 + b1 s)(a2 + b2 s) with s^2 = r
    return ExactScalar(x.a_ * y.a_ + x.b_ * y.b_ * Rational(r),
                       x.a_ * y.b_ + x.b_ * y.a_, r);
  }
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero scalar");
    // rational divisor: divide componentwise instead of paying for the
    // conjugate trick, whose squared terms can leave 64-bit range
    if (y.b_.is_zero()) return ExactScalar(x.a_ / y.a_, x.b_ / y.a_, x.r_);
    const long long r = merge_radicand(x, y);
    // multiply by the conjugate of y
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(r);
    if (norm.is_zero())
      throw Error(Errc::InternalInconsistency, "zero norm for nonzero radical");
    const ExactScalar conj(y.a_, -y.b_, r);
    ExactScalar num = x * conj;
    return ExactScalar(num.a_ / norm, num.b_ / norm, r);
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  ExactScalar& operator/=(const ExactScalar& y) { return *this = *this / y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    // canonical form makes componentwise comparison exact
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.r_ == y.r_);
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const ExactScalar& x, const ExactScalar& y) { return y < x; }
  friend bool operator<=(const ExactScalar& x, const ExactScalar& y) { return !(y < x); }
  friend bool operator>=(const ExactScalar& x, const ExactScalar& y) { return !(x < y); }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt((double)r_);
  }

  std::string str() const {
    if (is_rational()) return a_.str();
    std::string root = "sqrt(" + std::to_string(r_) + ")";
    std::string rad;
    if (b_ == Rational(1)) rad = root;
    else if (b_ == Rational(-1)) rad = "-" + root;
    else rad = b_.str() + "*" + root;
    if (a_.is_zero()) return rad;
    if (b_.sign() > 0) return a_.str() + "+" + rad;
    return a_.str() + rad;  // rad already carries the minus
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    return os << x.str();
  }

  // Accepts "p/q", "sqrt(r)", "a+sqrt(r)", "a-b*sqrt(r)" and the like.
  static ExactScalar parse(const std::string& text) {
    const std::size_t root = text.find("sqrt(");
    if (root == std::string::npos) return ExactScalar(Rational::parse(text));
    if (text.back() != ')')
      throw Error(Errc::SyntaxError, "bad scalar '" + text + "'");
    const std::string inside = text.substr(root + 5, text.size() - root - 6);
    long long r = 0;
    try {
      const Rational rr = Rational::parse(inside);
      if (!rr.is_integer() || rr.sign() < 0)
        throw Error(Errc::SyntaxError, "radicand must be a nonnegative integer");
      r = rr.num();
    } catch (const Error&) {
      throw Error(Errc::SyntaxError, "bad radicand in '" + text + "'");
    }
    std::string head = text.substr(0, root);  // "", "-", "a+", "a-b*", "b*"
    Rational a(0), b(1);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head == "-") b = Rational(-1);
    else if (!head.empty()) {
      // split at the last top-level +/- that separates a from b
      std::size_t cut = std::string::npos;
      for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') { cut = i; break; }
      }
      if (cut == std::string::npos) b = Rational::parse(head);
      else {
        a = Rational::parse(head.substr(0, cut));
        std::string btxt = head.substr(cut);
        if (btxt == "+") b = Rational(1);
        else if (btxt == "-") b = Rational(-1);
        else b = Rational::parse(btxt);
      }
    }
    const auto [s, sq] = squarefree_split(r == 0 ? 1 : r);
    if (r == 0) return ExactScalar(a);
    return ExactScalar(a, b * Rational(s), sq);
  }

 private:
  void assign(const Rational& a, const Rational& b, long long r) {
    a_ = a;
    b_ = b;
    r_ = r;
    if (b_.is_zero()) { r_ = 1; return; }
    if (r_ <= 0) throw Error(Errc::NegativeDiscriminant, "radicand must be positive");
    const auto [s, sq] = squarefree_split(r_);
    if (s != 1) { b_ = b_ * Rational(s); r_ = sq; }
    if (r_ == 1) { a_ = a_ + b_; b_ = Rational(0); }
  }

  static long long merge_radicand(const ExactScalar& x, const ExactScalar& y) {
    if (x.b_.is_zero()) return y.r_;
    if (y.b_.is_zero()) return x.r_;
    if (x.r_ != y.r_)
      throw Error(Errc::MixedRadicals, "cannot combine sqrt(" + std::to_string(x.r_) +
                                           ") with sqrt(" + std::to_string(y.r_) + ")");
    return x.r_;
  }

  Rational a_;
  Rational b_;
  long long r_;
};

}  // namespace polynet
