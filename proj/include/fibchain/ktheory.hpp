// ktheory.hpp
// Combinatorics of the index sequences: the sets Z_n, the equivalence
// relations R_n and R, Bratteli dimension data under the inclusion matrix
// [[1,1],[1,0]], and the ordered K0 group with exact cone membership.

#pragma once

#include "fibchain/golden.hpp"
#include "fibchain/word.hpp"

#include <cstddef>
#include <vector>

namespace fib {

struct CapExceeded : std::length_error {
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

// Fibonacci numbers with f_0 = 0, f_1 = f_2 = 1; memoized, thread-safe.
const BigInt& fibonacci(int n);

// All of Z_n = {(a_0,...,a_n) | a_j = 1 => a_{j+1} = 0}, lexicographic.
// |Z_n| = f_{n+3}. Capped at n <= 25.
std::vector<IndexPrefix> enumerate_prefixes(int n);

// Bratteli level sizes: k_n sequences ending in 0, k'_n ending in 1.
struct DimensionVector {
  BigInt k;
  BigInt kp;
  int level = 0;
};

DimensionVector dimension_vector(int n);

struct Mat2 {
  BigInt a, b, c, d;  // [[a,b],[c,d]]
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// [[1,1],[1,0]]^n = [[f_{n+1}, f_n],[f_n, f_{n-1}]]; n >= 1.
Mat2 inclusion_power(int n);

// The class a + b*tau in K0 = Z^2.
struct K0Element {
  BigInt a;
  BigInt b;
};

// Finite-level cone: f_n a + f_{n+1} b >= 0 and f_{n-1} a + f_n b >= 0.
bool cone_member_finite(int n, const K0Element& e);

// Limit cone: a + tau*b >= 0, decided by the exact sign.
bool cone_member_limit(const K0Element& e);

// R_n: equal final entries. Throws on length mismatch.
bool prefix_equiv_rn(const IndexPrefix& z, const IndexPrefix& zp);

struct TailVerdict {
  enum Kind { EquivalentFrom, DistinctThrough, Inconclusive } kind;
  int index = 0;  // M for EquivalentFrom, final index for DistinctThrough

  friend bool operator==(const TailVerdict& x, const TailVerdict& y) {
    return x.kind == y.kind && x.index == y.index;
  }
};

// Finite-window reading of the tail relation R: EquivalentFrom(M) with the
// least M >= 0 such that entries agree at every index > M; DistinctThrough
// when the final entries differ; Inconclusive on empty input.
TailVerdict tail_equiv(const IndexPrefix& z, const IndexPrefix& zp);

// Same leaf of the foliation: b - b' in Z + (1/tau)Z = Z[tau].
bool leaf_equivalent(const GoldenRational& b, const GoldenRational& bp);

// frac(start + k*step) for k = 0..count-1, exact.
std::vector<GoldenRational> rotation_orbit(const GoldenRational& start, std::size_t count,
                                           const GoldenRational& step);

}  // namespace fib
