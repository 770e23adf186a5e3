#include "fibchain/partition.hpp"

#include <algorithm>

namespace fib {

namespace {

void check_depth(int n) {
  if (n < 0) throw std::out_of_range("partition: negative level");
  if (n > kPartitionDepthCap) throw CapExceeded("partition: depth cap exceeded");
}

void check_unit_interval(const GoldenRational& b) {
  if (b.sign() <= 0 || (b - GoldenRational(1)).sign() >= 0)
    throw std::domain_error("intercept must lie strictly inside (0,1)");
}

}  // namespace

Partition build_partition(int n) {
  check_depth(n);
  Partition w;
  w.level = n;
  w.intervals.push_back({GoldenRational(0), GoldenRational(1), 'L', 0, {}});
  for (int k = 0; k < n; ++k) {
    const GoldenRational piece = golden_power(-(k + 2));  // S part length
    std::vector<Interval> next;
    next.reserve(w.intervals.size() * 2);
    for (const Interval& iv : w.intervals) {
      if (iv.kind == 'S') {
        Interval l = iv;
        l.kind = 'L';
        l.level = k + 1;
        l.path.bits.push_back(0);
        next.push_back(std::move(l));
        continue;
      }
      Interval lpart = iv, spart = iv;
      lpart.kind = 'L';
      spart.kind = 'S';
      lpart.level = spart.level = k + 1;
      lpart.path.bits.push_back(0);
      spart.path.bits.push_back(1);
      if (k % 2 == 0) {  // S on the lower side
        spart.hi = iv.lo + piece;
        lpart.lo = spart.hi;
        next.push_back(std::move(spart));
        next.push_back(std::move(lpart));
      } else {  // S on the upper side
        lpart.hi = iv.hi - piece;
        spart.lo = lpart.hi;
        next.push_back(std::move(lpart));
        next.push_back(std::move(spart));
      }
    }
    w.intervals = std::move(next);
  }
  w.boundaries.clear();
  for (std::size_t i = 1; i < w.intervals.size(); ++i)
    w.boundaries.push_back(w.intervals[i].lo);
  return w;
}

LocateResult locate(const GoldenRational& b, int n) {
  check_depth(n);
  check_unit_interval(b);
  Interval cur{GoldenRational(0), GoldenRational(1), 'L', 0, {}};
  for (int k = 0; k < n; ++k) {
    if (cur.kind == 'S') {
      cur.kind = 'L';
      cur.path.bits.push_back(0);
    } else {
      const GoldenRational piece = golden_power(-(k + 2));
      GoldenRational split = k % 2 == 0 ? cur.lo + piece : cur.hi - piece;
      int cmp = (b - split).sign();
      if (cmp == 0) return {true, {}, k + 1};
      bool lower = cmp < 0;
      bool lower_is_s = k % 2 == 0;
      cur.kind = lower == lower_is_s ? 'S' : 'L';
      cur.path.bits.push_back(cur.kind == 'S' ? 1 : 0);
      (lower ? cur.hi : cur.lo) = split;
    }
    cur.level = k + 1;
  }
  return {false, std::move(cur), 0};
}

InterceptIndexResult index_from_intercept(const GoldenRational& b, int depth) {
  LocateResult loc = locate(b, depth);
  if (loc.singular) return {true, {}, loc.singular_level};
  InterceptIndexResult r;
  r.prefix.bits.push_back(0);  // the origin segment is always L on (0,1)
  r.prefix.bits.insert(r.prefix.bits.end(), loc.interval.path.bits.begin(),
                       loc.interval.path.bits.end());
  return r;
}

std::vector<GoldenRational> boundary_orbit(int n) {
  check_depth(n);
  if (n < 1) throw std::out_of_range("boundary_orbit: n >= 1 required");
  const GoldenRational inv_tau = GoldenRational::tau() - GoldenRational(1);
  std::size_t count = (fibonacci(n + 2) - 1).convert_to<std::size_t>();
  return rotation_orbit(golden_power(-2), count, -inv_tau);
}

Interval interval_for_prefix(const IndexPrefix& z) {
  if (z.bits.empty() || z.bits.front() != 0 || !z.valid())
    throw std::invalid_argument("interval_for_prefix: prefix must be valid and start with 0");
  const int n = static_cast<int>(z.bits.size()) - 1;
  check_depth(n);
  Interval cur{GoldenRational(0), GoldenRational(1), 'L', 0, {}};
  for (int k = 0; k < n; ++k) {
    const int a = z.bits[k + 1];
    if (cur.kind == 'S') {
      cur.kind = 'L';  // a is 0 here by the index constraint
    } else {
      const GoldenRational piece = golden_power(-(k + 2));
      GoldenRational split = k % 2 == 0 ? cur.lo + piece : cur.hi - piece;
      cur.kind = a == 1 ? 'S' : 'L';
      bool take_lower = (a == 1) == (k % 2 == 0);
      (take_lower ? cur.hi : cur.lo) = split;
    }
    cur.path.bits.push_back(a);
    cur.level = k + 1;
  }
  return cur;
}

IndexPrefix prefix_for_interval(const Interval& interval) {
  IndexPrefix z;
  z.bits.push_back(0);
  z.bits.insert(z.bits.end(), interval.path.bits.begin(), interval.path.bits.end());
  return z;
}

PairDifference interval_pair_difference(const Interval& to, const Interval& from,
                                        const GoldenRational& t) {
  if (to.kind != from.kind || to.level != from.level)
    throw std::invalid_argument("interval_pair_difference: same kind and level required");
  if (t.sign() < 0 || (t - (to.hi - to.lo)).sign() >= 0)
    throw std::domain_error("interval_pair_difference: offset outside interval");
  const int n = to.level;
  PairDifference d;
  d.diff = (to.lo + t) - (from.lo + t);
  // Signed counts of L- and S-intervals swept between the two left
  // endpoints; unique since tau^{-n} and tau^{-(n+1)} are independent over Q.
  const BigInt a = d.diff.p();  // diff lies in Z[tau], den = 1
  const BigInt b = d.diff.q();
  BigInt kl = fibonacci(n + 1) * a + fibonacci(n + 2) * b;
  BigInt ks = fibonacci(n) * a + fibonacci(n + 1) * b;
  d.kL = kl.convert_to<long>();
  d.kS = ks.convert_to<long>();
  const int sgn = n % 2 == 0 ? 1 : -1;
  d.k1 = sgn * (ks * fibonacci(n + 1) - kl * fibonacci(n));
  d.k2 = sgn * (n >= 1 ? BigInt(kl * fibonacci(n - 1) - ks * fibonacci(n)) : BigInt(-ks));
  return d;
}

}  // namespace fib
