// golden.hpp
// Exact arithmetic in the golden-ratio field Q(tau), tau^2 = tau + 1.
// Every geometric comparison in the library goes through this type; no
// floating point is used for any decision.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fib {

using BigInt = boost::multiprecision::cpp_int;

// Raised by inverse(0) and by division by zero.
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("golden: division by zero") {}
};

// p + q*tau with integer p, q.
struct GoldenInt {
  BigInt p;
  BigInt q;

  GoldenInt() = default;
  GoldenInt(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {}

  bool is_zero() const { return p == 0 && q == 0; }

  // Galois conjugate: tau -> 1 - tau.
  GoldenInt conj() const { return {p + q, -q}; }

  // Field norm N(p + q*tau) = p^2 + p*q - q^2; zero only at zero.
  BigInt norm() const { return p * p + p * q - q * q; }

  friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
    return {x.p + y.p, x.q + y.q};
  }
  friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
    return {x.p - y.p, x.q - y.q};
  }
  friend GoldenInt operator-(const GoldenInt& x) { return {-x.p, -x.q}; }
  // (p+q*tau)(r+s*tau) = (pr+qs) + (ps+qr+qs)*tau  via tau^2 = tau+1.
  friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
    return {x.p * y.p + x.q * y.q, x.p * y.q + x.q * y.p + x.q * y.q};
  }
  friend bool operator==(const GoldenInt& x, const GoldenInt& y) {
    return x.p == y.p && x.q == y.q;
  }

  // Exact sign of the real number p + q*tau, integer arithmetic only.
  int sign() const;
};

// (p + q*tau)/den in canonical form: den > 0 and gcd(p, q, den) = 1.
// Equality of values coincides with equality of representations.
class GoldenRational {
 public:
  GoldenRational() : num_{0, 0}, den_(1) {}
  GoldenRational(long long v) : num_{v, 0}, den_(1) {}  // NOLINT(google-explicit-constructor)
  GoldenRational(BigInt p, BigInt q, BigInt den);

  static GoldenRational tau() { return GoldenRational(0, 1, 1); }

  const GoldenInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  const BigInt& p() const { return num_.p; }
  const BigInt& q() const { return num_.q; }

  bool is_zero() const { return num_.is_zero(); }
  // Membership in Z[tau] = Z + (1/tau)Z; holds iff den = 1.
  bool in_ztau() const { return den_ == 1; }

  int sign() const { return num_.sign(); }

  GoldenRational inverse() const;
  GoldenRational conjugate() const { return GoldenRational(num_.p + num_.q, -num_.q, den_); }

  // x = m + frac with 0 <= frac < 1, both exact.
  std::pair<BigInt, GoldenRational> floor_mod1() const;
  BigInt floor() const { return floor_mod1().first; }
  GoldenRational frac() const { return floor_mod1().second; }

  double to_double() const;

  friend GoldenRational operator+(const GoldenRational& x, const GoldenRational& y);
  friend GoldenRational operator-(const GoldenRational& x, const GoldenRational& y);
  friend GoldenRational operator*(const GoldenRational& x, const GoldenRational& y);
  friend GoldenRational operator/(const GoldenRational& x, const GoldenRational& y);
  friend GoldenRational operator-(const GoldenRational& x) {
    return GoldenRational(-x.num_.p, -x.num_.q, x.den_);
  }

  friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const GoldenRational& x, const GoldenRational& y) { return !(x == y); }
  friend bool operator<(const GoldenRational& x, const GoldenRational& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const GoldenRational& x, const GoldenRational& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const GoldenRational& x, const GoldenRational& y) { return y < x; }
  friend bool operator>=(const GoldenRational& x, const GoldenRational& y) { return y <= x; }

 private:
  GoldenInt num_;
  BigInt den_;

  void reduce();
};

// Exact tau^k for any integer k; tau^{-k} has integer coefficients
// (-1)^k (f_{k+1} - f_k tau).
GoldenRational golden_power(long k);

// Canonical text form "p+q*tau/d" (den suppressed when 1, terms when 0).
std::string to_text(const GoldenRational& x);

// Truncated decimal rendering with the given number of fractional digits.
std::string to_decimal_string(const GoldenRational& x, int digits);

}  // namespace fib
