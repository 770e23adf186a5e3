// cutproject.hpp
// Geometric F-chain generators: the cut-procedure (ordered grid crossings
// of the line y = x/tau + b), the strip/window projection, singular-line
// handling, and lattice-line enumeration for the partition tower.

#pragma once

#include "fibchain/golden.hpp"
#include "fibchain/word.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace fib {

// Resolution of a coincident vertical/horizontal crossing. Upper: the line
// nudged upward meets the horizontal grid line first (S then L); Lower: L
// then S.
enum class SingularPolicy { Upper, Lower };

// One grid crossing. Vertical grid lines (x = m) give L, horizontal ones
// (y = n, at x = tau*(n-b)) give S.
struct CrossingEvent {
  char kind;          // 'L' or 'S'
  BigInt grid_index;  // m for vertical, n for horizontal
  GoldenRational x;
  bool coincident = false;
};

struct CutChain {
  Word word;
  std::vector<CrossingEvent> events;
  // Word index of the first letter of each coincident (policy-resolved) pair.
  std::vector<std::size_t> coincidences;
};

// First `count` letters of the chain read off the crossings at x >= 0, in
// strictly increasing exact x order. The intercept is reduced mod 1 first.
CutChain cut_chain(const GoldenRational& b, std::size_t count,
                   SingularPolicy policy = SingularPolicy::Lower);

// True iff the line y = x/tau + b passes a lattice point, i.e. b in Z[tau].
bool is_singular(const GoldenRational& b);

struct SingularWindow : std::domain_error {
  explicit SingularWindow(const std::string& what) : std::domain_error(what) {}
};

struct StripChain {
  Word word;
  std::vector<std::pair<BigInt, BigInt>> points;  // visited lattice points
};

// Staircase walk through the lattice points with u = s - r/tau in the
// half-open window [c, c+tau), started at the topmost point of column r = 0
// so that the first letter is the origin segment. An exact boundary hit is
// possible only for c in Z[tau]; such windows raise SingularWindow (use
// cut_chain with a policy instead).
StripChain strip_chain(const GoldenRational& c, std::size_t count);

// Dimensionless perp coordinate u = s - r/tau = s - (tau-1) r.
GoldenRational perp_coordinate(const BigInt& r, const BigInt& s);

struct LatticeLine {
  BigInt r, s;
  GoldenRational intercept;  // u = s - r/tau, in (0,1)
  GoldenRational distance;   // d(r,s) = (tau/(tau+2)) (r + s/tau)
};

// First `limit` lattice points with 0 < u < 1 and positive parallel
// distance, ordered by increasing d. Exactly one point per column r >= 1,
// so the enumeration is linear.
std::vector<LatticeLine> enumerate_window_lines(std::size_t limit);

struct Tile {
  double start;
  double length;
  char kind;
};

// Metric lift for export only: m(L) = cos(theta), m(S) = sin(theta) with
// theta = arctan(1/tau).
std::vector<Tile> render_tiling(const Word& w, double origin = 0.0);

}  // namespace fib
