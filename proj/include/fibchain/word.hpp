// word.hpp
// Finite words over {L, S}, the Fibonacci substitution (deflation),
// its inverse composition (inflation), and index-sequence extraction.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fib {

// A word is a string over the alphabet "LS".
using Word = std::string;

struct InvalidWord : std::invalid_argument {
  explicit InvalidWord(const std::string& what) : std::invalid_argument(what) {}
};

// Finite index sequence (a_0,...,a_n); a_j = 1 implies a_{j+1} = 0.
struct IndexPrefix {
  std::vector<int> bits;

  bool valid() const;
  std::string str() const;  // e.g. "00010"
  static IndexPrefix parse(const std::string& s);

  friend bool operator==(const IndexPrefix& x, const IndexPrefix& y) { return x.bits == y.bits; }
};

// One block of an inflation parse. A LongShort block covers an L followed
// by an S and maps to L; a Long block covers a bare L and maps to S. The
// two partial kinds sit at the window edges: a LeadingShort is the S whose
// L partner lies left of the window (its image is necessarily L), a
// TrailingLong is a final L whose partner may lie right of the window (its
// image is undecidable).
enum class BlockKind { LongShort, Long, LeadingShort, TrailingLong };

struct Block {
  BlockKind kind;
  std::size_t start;
  std::size_t len;
};

struct BlockParse {
  std::vector<Block> blocks;
  bool leading_partial = false;
  bool trailing_partial = false;

  // Index into blocks of the block covering the given parent position.
  std::size_t block_of(std::size_t parent_pos) const;
  // Position of a (non-partial) block's image in the output word.
  std::size_t output_pos(std::size_t block_index) const;
};

struct InflateResult {
  Word word;
  BlockParse parse;
};

// Per-letter substitution S -> L, L -> LS.
Word deflate(const Word& w);

// n-fold deflation of "L"; |fixed_word(n)| = f_{n+2}.
Word fixed_word(int n);

// Greedy left-to-right parse into LS and L blocks; throws InvalidWord on an
// interior "SS" or a letter outside {L,S}. Partial edge blocks are flagged
// and dropped from the output word.
InflateResult inflate(const Word& w);

struct IndexResult {
  bool defined = true;
  IndexPrefix prefix;     // (a_0,...,a_depth) when defined
  int undefined_level = -1;

  static IndexResult undefined_at(int level) {
    IndexResult r;
    r.defined = false;
    r.undefined_level = level;
    return r;
  }
};

// Index prefix (a_0,...,a_depth) of the segment at `position`: a_k = 1 iff
// the segment lies in an S of the k-fold inflated chain. A leading S at the
// window edge inflates to a forced L; only a trailing bare L is genuinely
// undecidable and yields Undefined(level).
IndexResult index_prefix(const Word& w, std::size_t position, int depth);

// True iff w uses only {L,S} and contains neither "SS" nor "LLL".
bool is_valid_fword(const Word& w);

}  // namespace fib
