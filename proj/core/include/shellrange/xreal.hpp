#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "shellrange/errors.hpp"

namespace shellrange {

/// Extended real: a finite double or +/-infinity. NaN is never admitted;
/// 0/0 situations must be resolved by the caller (see xdiv).
class XReal {
 public:
  constexpr XReal() : v_(0.0) {}
  XReal(double v) : v_(v) {
    if (std::isnan(v)) throw InvalidInput("XReal: NaN is not an extended real");
  }

  static XReal inf() { return XReal(std::numeric_limits<double>::infinity()); }
  static XReal neg_inf() { return XReal(-std::numeric_limits<double>::infinity()); }

  bool finite() const { return std::isfinite(v_); }
  bool infinite() const { return std::isinf(v_); }
  int sign() const { return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0); }

  /// Finite value; throws if infinite.
  double value() const {
    if (!finite()) throw Error("XReal: value() on an infinite quantity");
    return v_;
  }
  /// Underlying double, +/-inf allowed.
  double raw() const { return v_; }

  friend bool operator==(XReal a, XReal b) { return a.v_ == b.v_; }
  friend bool operator<(XReal a, XReal b) { return a.v_ < b.v_; }
  friend bool operator<=(XReal a, XReal b) { return a.v_ <= b.v_; }
  XReal operator-() const { return XReal(-v_); }

  std::string str() const {
    if (infinite()) return v_ > 0 ? "inf" : "-inf";
    return std::to_string(v_);
  }

 private:
  double v_;
};

/// Policy for resolving 0/0 in quotients of invariants.
enum class ZeroOverZero { Zero, One, Inf };

/// a/b with a/0 = +/-inf by the sign of a and 0/0 resolved by policy.
inline XReal xdiv(double a, double b, ZeroOverZero policy) {
  if (b != 0.0) return XReal(a / b);
  if (a > 0.0) return XReal::inf();
  if (a < 0.0) return XReal::neg_inf();
  switch (policy) {
    case ZeroOverZero::Zero: return XReal(0.0);
    case ZeroOverZero::One: return XReal(1.0);
    case ZeroOverZero::Inf: return XReal::inf();
  }
  return XReal(0.0);
}

}  // namespace shellrange
