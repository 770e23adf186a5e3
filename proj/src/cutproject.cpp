#include "fibchain/cutproject.hpp"

#include <cmath>

namespace fib {

namespace {

BigInt ceil_of(const GoldenRational& x) {
  auto [m, f] = x.floor_mod1();
  return f.is_zero() ? m : BigInt(m + 1);
}

}  // namespace

bool is_singular(const GoldenRational& b) { return b.in_ztau(); }

CutChain cut_chain(const GoldenRational& b0, std::size_t count, SingularPolicy policy) {
  const GoldenRational tau = GoldenRational::tau();
  const GoldenRational b = b0.frac();
  CutChain chain;
  chain.word.reserve(count);
  BigInt m = 0;           // next vertical grid line x = m
  BigInt n = ceil_of(b);  // next horizontal grid line y = n, at x = tau*(n-b)
  while (chain.word.size() < count) {
    GoldenRational xv(m, 0, 1);
    GoldenRational xh = tau * (GoldenRational(n, 0, 1) - b);
    int cmp = (xv - xh).sign();
    if (cmp < 0) {
      chain.events.push_back({'L', m, xv, false});
      chain.word.push_back('L');
      ++m;
    } else if (cmp > 0) {
      chain.events.push_back({'S', n, xh, false});
      chain.word.push_back('S');
      ++n;
    } else {
      chain.coincidences.push_back(chain.word.size());
      const bool upper = policy == SingularPolicy::Upper;
      CrossingEvent ev_l{'L', m, xv, true};
      CrossingEvent ev_s{'S', n, xh, true};
      chain.events.push_back(upper ? ev_s : ev_l);
      chain.word.push_back(upper ? 'S' : 'L');
      if (chain.word.size() < count) {
        chain.events.push_back(upper ? ev_l : ev_s);
        chain.word.push_back(upper ? 'L' : 'S');
      }
      ++m;
      ++n;
    }
  }
  return chain;
}

StripChain strip_chain(const GoldenRational& c, std::size_t count) {
  const GoldenRational tau = GoldenRational::tau();
  const GoldenRational inv_tau = tau - GoldenRational(1);  // 1/tau
  if (c.in_ztau())
    throw SingularWindow("strip window boundary passes a lattice point; "
                         "use cut_chain with a singular policy");
  // Topmost lattice point of column r = 0 inside [c, c+tau).
  auto [m, f] = (c + tau).floor_mod1();
  BigInt r = 0;
  BigInt s = f.is_zero() ? BigInt(m - 1) : m;
  GoldenRational u(s, 0, 1);
  const GoldenRational thresh = c + inv_tau;
  StripChain chain;
  chain.word.reserve(count);
  chain.points.push_back({r, s});
  while (chain.word.size() < count) {
    if ((u - thresh).sign() >= 0) {
      chain.word.push_back('L');
      ++r;
      u = u - inv_tau;
    } else {
      chain.word.push_back('S');
      ++s;
      u = u + GoldenRational(1);
    }
    chain.points.push_back({r, s});
  }
  return chain;
}

GoldenRational perp_coordinate(const BigInt& r, const BigInt& s) {
  // s - r/tau = (s + r) - r*tau
  return GoldenRational(s + r, -r, 1);
}

std::vector<LatticeLine> enumerate_window_lines(std::size_t limit) {
  const GoldenRational tau = GoldenRational::tau();
  const GoldenRational scale = tau * (tau + GoldenRational(2)).inverse();  // tau/(tau+2)
  const GoldenRational inv_tau = tau - GoldenRational(1);
  std::vector<LatticeLine> lines;
  lines.reserve(limit);
  // For each column r >= 1 exactly one s has u in (0,1): s = floor(r/tau)+1.
  for (BigInt r = 1; lines.size() < limit; ++r) {
    GoldenRational rr(r, 0, 1);
    BigInt s = (rr * inv_tau).floor() + 1;
    GoldenRational u = perp_coordinate(r, s);
    GoldenRational d = scale * (rr + GoldenRational(s, 0, 1) * inv_tau);
    lines.push_back({r, s, u, d});
  }
  return lines;
}

std::vector<Tile> render_tiling(const Word& w, double origin) {
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  const double hyp = std::sqrt(tau * tau + 1.0);
  const double len_l = tau / hyp;  // cos(theta)
  const double len_s = 1.0 / hyp;  // sin(theta)
  std::vector<Tile> tiles;
  tiles.reserve(w.size());
  double x = origin;
  for (char ch : w) {
    double len = ch == 'L' ? len_l : len_s;
    tiles.push_back({x, len, ch});
    x += len;
  }
  return tiles;
}

}  // namespace fib
