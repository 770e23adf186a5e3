// partition.hpp
// The interval-partition tower W_n of (0,1): typed intervals refined by
// the parity split rule, the bijection with index prefixes, index lookup
// from an intercept, and the boundary-orbit data.

#pragma once

#include "fibchain/golden.hpp"
#include "fibchain/ktheory.hpp"
#include "fibchain/word.hpp"

#include <vector>

namespace fib {

inline constexpr int kPartitionDepthCap = 40;

// Open sub-interval of (0,1) at a tower level. The path (a_1,...,a_level)
// selects it; kind is S exactly when the last path bit is 1. Lengths are
// tau^{-level} for L and tau^{-(level+1)} for S.
struct Interval {
  GoldenRational lo, hi;
  char kind = 'L';
  int level = 0;
  IndexPrefix path;
};

struct Partition {
  int level = 0;
  std::vector<Interval> intervals;        // ascending by lo
  std::vector<GoldenRational> boundaries;  // interior split points, ascending
};

// W_n, built by refining W_0 = {(0,1), L}: an S-interval becomes L; an
// L-interval of W_k splits with the S part on the lower side for even k and
// the upper side for odd k. Throws CapExceeded beyond the depth cap.
Partition build_partition(int n);

struct SingularBoundary {
  int level;  // first level whose split point equals the query
};

struct LocateResult {
  bool singular = false;
  Interval interval;      // when !singular
  int singular_level = 0;  // when singular
};

// The interval of W_n containing b in (0,1), or the boundary report.
LocateResult locate(const GoldenRational& b, int n);

struct InterceptIndexResult {
  bool singular = false;
  IndexPrefix prefix;
  int singular_level = 0;
};

// (a_0,...,a_depth) with a_0 = 0 and a_k the kind (S = 1) of the containing
// interval of W_k.
InterceptIndexResult index_from_intercept(const GoldenRational& b, int depth);

// First f_{n+2}-1 points of b_k = frac(1/tau^2 - (k-1)/tau); as a set these
// are exactly the boundaries of W_n.
std::vector<GoldenRational> boundary_orbit(int n);

// Mutually inverse bijection between valid prefixes (a_0,...,a_n) with
// a_0 = 0 and the intervals of W_n.
Interval interval_for_prefix(const IndexPrefix& z);
IndexPrefix prefix_for_interval(const Interval& interval);

// Exact difference data for two same-kind intervals at the same level:
// diff = k_L tau^{-n} + k_S tau^{-(n+1)} = k1/tau + k2 with
// k1 = (-1)^n (k_S f_{n+1} - k_L f_n) and k2 = (-1)^n (k_L f_{n-1} - k_S f_n).
struct PairDifference {
  long kL = 0;
  long kS = 0;
  BigInt k1;
  BigInt k2;
  GoldenRational diff;
};

PairDifference interval_pair_difference(const Interval& to, const Interval& from,
                                        const GoldenRational& t);

}  // namespace fib
