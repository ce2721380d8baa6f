#pragma once

#include <array>
#include <ostream>
#include <string>

#include "rational.hpp"

namespace polynet {

// Truncated expansion c0 + c1*eps (+ c2*eps^2) around four dimensions.
// The order is part of the value: coefficients beyond it do not exist (we
// refuse to pretend they are zero), and arithmetic demands matching orders.
class EpsilonSeries {
 public:
  EpsilonSeries() : order_(1), c_{Rational(0), Rational(0), Rational(0)} {}
  EpsilonSeries(int order, const Rational& c0, const Rational& c1,
                const Rational& c2 = Rational(0))
      : order_(order), c_{c0, c1, c2} {
    if (order != 1 && order != 2)
      throw Error(Errc::UnsupportedCombination, "epsilon order must be 1 or 2");
    if (order == 1) c_[2] = Rational(0);
  }

  int order() const { return order_; }
  const Rational& c0() const { return c_[0]; }
  const Rational& c1() const { return c_[1]; }
  const Rational& c2() const {
    if (order_ < 2)
      throw Error(Errc::UnsupportedCombination, "series has no eps^2 coefficient");
    return c_[2];
  }

  EpsilonSeries truncated(int order) const {
    if (order > order_)
      throw Error(Errc::UnsupportedCombination, "cannot extend a series to higher order");
    return EpsilonSeries(order, c_[0], c_[1], order >= 2 ? c_[2] : Rational(0));
  }

  // Value at eps = 0, i.e. the four-dimensional (Brownian) limit.
  const Rational& at_eps_zero() const { return c_[0]; }

  friend EpsilonSeries operator+(const EpsilonSeries& x, const EpsilonSeries& y) {
    check_orders(x, y);
    return EpsilonSeries(x.order_, x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2]);
  }
  friend EpsilonSeries operator-(const EpsilonSeries& x, const EpsilonSeries& y) {
    check_orders(x, y);
    return EpsilonSeries(x.order_, x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2]);
  }
  EpsilonSeries operator-() const { return EpsilonSeries(order_, -c_[0], -c_[1], -c_[2]); }
  friend EpsilonSeries operator*(const Rational& s, const EpsilonSeries& x) {
    return EpsilonSeries(x.order_, s * x.c_[0], s * x.c_[1], s * x.c_[2]);
  }
  friend EpsilonSeries operator*(const EpsilonSeries& x, const Rational& s) { return s * x; }

  friend bool operator==(const EpsilonSeries& x, const EpsilonSeries& y) {
    return x.order_ == y.order_ && x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] &&
           x.c_[2] == y.c_[2];
  }
  friend bool operator!=(const EpsilonSeries& x, const EpsilonSeries& y) { return !(x == y); }

  std::string str() const {
    std::string s = c_[0].str();
    s += term(c_[1], "eps");
    if (order_ >= 2) s += term(c_[2], "eps^2");
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const EpsilonSeries& x) {
    return os << x.str();
  }

 private:
  static std::string term(const Rational& c, const char* power) {
    if (c.sign() >= 0) return " + " + c.str() + "*" + power;
    return " - " + (-c).str() + "*" + power;
  }
  static void check_orders(const EpsilonSeries& x, const EpsilonSeries& y) {
    if (x.order_ != y.order_)
      throw Error(Errc::InternalInconsistency, "epsilon series orders differ");
  }

  int order_;
  std::array<Rational, 3> c_;
};

}  // namespace polynet
