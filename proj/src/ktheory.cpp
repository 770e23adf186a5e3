#include "fibchain/ktheory.hpp"

#include <mutex>

namespace fib {

const BigInt& fibonacci(int n) {
  static std::mutex mu;
  static std::vector<BigInt> memo = {0, 1, 1};
  if (n < 0) throw std::out_of_range("fibonacci: negative index");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n)
    memo.push_back(memo[memo.size() - 1] + memo[memo.size() - 2]);
  return memo[n];
}

std::vector<IndexPrefix> enumerate_prefixes(int n) {
  if (n < 0) throw std::out_of_range("enumerate_prefixes: negative length");
  if (n > 25) throw CapExceeded("enumerate_prefixes: n > 25");
  std::vector<IndexPrefix> out;
  IndexPrefix cur;
  cur.bits.resize(n + 1, 0);
  // Depth-first in lexicographic order.
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.push_back(cur);
      return;
    }
    cur.bits[j] = 0;
    self(self, j + 1);
    if (j == 0 || cur.bits[j - 1] == 0) {
      cur.bits[j] = 1;
      self(self, j + 1);
      cur.bits[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

DimensionVector dimension_vector(int n) {
  if (n < 0) throw std::out_of_range("dimension_vector: negative level");
  DimensionVector v{1, 1, n};
  for (int i = 0; i < n; ++i) {
    BigInt k = v.k + v.kp;
    v.kp = v.k;
    v.k = k;
  }
  return v;
}

Mat2 inclusion_power(int n) {
  if (n < 1) throw std::out_of_range("inclusion_power: n >= 1 required");
  return Mat2{fibonacci(n + 1), fibonacci(n), fibonacci(n), fibonacci(n - 1)};
}

bool cone_member_finite(int n, const K0Element& e) {
  if (n < 1) throw std::out_of_range("cone_member_finite: n >= 1 required");
  return fibonacci(n) * e.a + fibonacci(n + 1) * e.b >= 0 &&
         fibonacci(n - 1) * e.a + fibonacci(n) * e.b >= 0;
}

bool cone_member_limit(const K0Element& e) {
  return GoldenInt{e.a, e.b}.sign() >= 0;
}

bool prefix_equiv_rn(const IndexPrefix& z, const IndexPrefix& zp) {
  if (z.bits.size() != zp.bits.size() || z.bits.empty())
    throw std::invalid_argument("prefix_equiv_rn: equal nonzero lengths required");
  return z.bits.back() == zp.bits.back();
}

TailVerdict tail_equiv(const IndexPrefix& z, const IndexPrefix& zp) {
  if (z.bits.size() != zp.bits.size())
    throw std::invalid_argument("tail_equiv: equal lengths required");
  const int n = static_cast<int>(z.bits.size()) - 1;
  if (n < 0) return {TailVerdict::Inconclusive, 0};
  if (z.bits[n] != zp.bits[n]) return {TailVerdict::DistinctThrough, n};
  int m = 0;
  for (int j = n - 1; j >= 0; --j) {
    if (z.bits[j] != zp.bits[j]) {
      m = j;
      break;
    }
  }
  return {TailVerdict::EquivalentFrom, m};
}

bool leaf_equivalent(const GoldenRational& b, const GoldenRational& bp) {
  return (b - bp).in_ztau();
}

std::vector<GoldenRational> rotation_orbit(const GoldenRational& start, std::size_t count,
                                           const GoldenRational& step) {
  std::vector<GoldenRational> orbit;
  orbit.reserve(count);
  GoldenRational cur = start.frac();
  for (std::size_t k = 0; k < count; ++k) {
    orbit.push_back(cur);
    cur = (cur + step).frac();
  }
  return orbit;
}

}  // namespace fib
