#include "fibchain/golden.hpp"

#include <boost/integer/common_factor.hpp>

#include <cmath>
#include <sstream>

namespace fib {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Floor division for arbitrary signs.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// floor(q * sqrt(5)); exact, since 5*q^2 is never a perfect square for q != 0.
BigInt floor_sqrt5_mult(const BigInt& q) {
  if (q == 0) return 0;
  BigInt r = boost::multiprecision::sqrt(BigInt(5 * q * q));
  return q > 0 ? r : BigInt(-r - 1);
}

}  // namespace

int GoldenInt::sign() const {
  // p + q*tau = (P + Q*sqrt(5))/2 with P = 2p+q, Q = q.
  BigInt P = 2 * p + q;
  const BigInt& Q = q;
  if (P >= 0 && Q >= 0) return (P == 0 && Q == 0) ? 0 : 1;
  if (P <= 0 && Q <= 0) return (P == 0 && Q == 0) ? 0 : -1;
  // Opposite quadrants: compare P^2 against 5 Q^2 (never equal here).
  BigInt lhs = P * P, rhs = 5 * Q * Q;
  if (P > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

GoldenRational::GoldenRational(BigInt p, BigInt q, BigInt den)
    : num_{std::move(p), std::move(q)}, den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZero();
  reduce();
}

void GoldenRational::reduce() {
  if (den_ < 0) {
    num_.p = -num_.p;
    num_.q = -num_.q;
    den_ = -den_;
  }
  BigInt g = boost::integer::gcd(boost::integer::gcd(abs_big(num_.p), abs_big(num_.q)), den_);
  if (g > 1) {
    num_.p /= g;
    num_.q /= g;
    den_ /= g;
  }
  if (num_.is_zero()) den_ = 1;
}

GoldenRational GoldenRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // (p+q*tau)^{-1} = conj / N, lifted to the rational level.
  GoldenInt c = num_.conj();
  return GoldenRational(den_ * c.p, den_ * c.q, num_.norm());
}

GoldenRational operator+(const GoldenRational& x, const GoldenRational& y) {
  return GoldenRational(x.num_.p * y.den_ + y.num_.p * x.den_,
                        x.num_.q * y.den_ + y.num_.q * x.den_, x.den_ * y.den_);
}

GoldenRational operator-(const GoldenRational& x, const GoldenRational& y) { return x + (-y); }

GoldenRational operator*(const GoldenRational& x, const GoldenRational& y) {
  GoldenInt n = x.num_ * y.num_;
  return GoldenRational(std::move(n.p), std::move(n.q), x.den_ * y.den_);
}

GoldenRational operator/(const GoldenRational& x, const GoldenRational& y) {
  return x * y.inverse();
}

std::pair<BigInt, GoldenRational> GoldenRational::floor_mod1() const {
  // floor((P + Q*sqrt(5))/(2*den)) with P = 2p+q, Q = q; replacing Q*sqrt(5)
  // by its floor cannot change the outer floor.
  BigInt P = 2 * num_.p + num_.q;
  BigInt m = floor_div(P + floor_sqrt5_mult(num_.q), 2 * den_);
  GoldenRational frac = *this - GoldenRational(m, 0, 1);
  while (frac.sign() < 0) {
    --m;
    frac = frac + GoldenRational(1);
  }
  while ((frac - GoldenRational(1)).sign() >= 0) {
    ++m;
    frac = frac - GoldenRational(1);
  }
  return {std::move(m), std::move(frac)};
}

double GoldenRational::to_double() const {
  static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
  return (num_.p.convert_to<double>() + num_.q.convert_to<double>() * kPhi) /
         den_.convert_to<double>();
}

GoldenRational golden_power(long k) {
  if (k == 0) return GoldenRational(1);
  long m = k > 0 ? k : -k;
  // tau^m = f_m tau + f_{m-1}
  BigInt fprev = 0, fcur = 1;  // f_0, f_1
  for (long i = 1; i < m; ++i) {
    BigInt next = fprev + fcur;
    fprev = fcur;
    fcur = next;
  }
  if (k > 0) return GoldenRational(fprev, fcur, 1);
  // tau^{-m} = (-1)^m (f_{m+1} - f_m tau)
  BigInt fnext = fprev + fcur;
  if (m % 2 == 0) return GoldenRational(fnext, -fcur, 1);
  return GoldenRational(-fnext, fcur, 1);
}

std::string to_text(const GoldenRational& x) {
  std::ostringstream os;
  if (x.q() == 0) {
    os << x.p();
  } else {
    if (x.p() != 0) {
      os << x.p();
      if (x.q() > 0) os << "+";
    }
    os << x.q() << "*tau";
  }
  if (x.den() != 1) os << "/" << x.den();
  return os.str();
}

std::string to_decimal_string(const GoldenRational& x, int digits) {
  if (digits < 0) digits = 0;
  int s = x.sign();
  GoldenRational a = s < 0 ? -x : x;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt n = (a * GoldenRational(scale, 0, 1)).floor();
  std::string raw = n.str();
  while (static_cast<int>(raw.size()) <= digits) raw.insert(raw.begin(), '0');
  std::string out;
  if (s < 0) out += "-";
  out += raw.substr(0, raw.size() - digits);
  if (digits > 0) {
    out += ".";
    out += raw.substr(raw.size() - digits);
  }
  return out;
}

}  // namespace fib
