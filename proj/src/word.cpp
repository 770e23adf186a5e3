#include "fibchain/word.hpp"

#include <algorithm>

namespace fib {

bool IndexPrefix::valid() const {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) return false;
    if (i + 1 < bits.size() && bits[i] == 1 && bits[i + 1] == 1) return false;
  }
  return true;
}

std::string IndexPrefix::str() const {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

IndexPrefix IndexPrefix::parse(const std::string& s) {
  IndexPrefix z;
  z.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw InvalidWord("index prefix must be a string of 0s and 1s");
    z.bits.push_back(c - '0');
  }
  return z;
}

std::size_t BlockParse::block_of(std::size_t parent_pos) const {
  auto it = std::upper_bound(blocks.begin(), blocks.end(), parent_pos,
                             [](std::size_t pos, const Block& b) { return pos < b.start; });
  return static_cast<std::size_t>(it - blocks.begin()) - 1;
}

std::size_t BlockParse::output_pos(std::size_t block_index) const {
  return leading_partial ? block_index - 1 : block_index;
}

Word deflate(const Word& w) {
  Word out;
  out.reserve(2 * w.size());
  for (char c : w) {
    if (c == 'S') {
      out.push_back('L');
    } else if (c == 'L') {
      out.push_back('L');
      out.push_back('S');
    } else {
      throw InvalidWord("word letters must be L or S");
    }
  }
  return out;
}

Word fixed_word(int n) {
  Word w = "L";
  for (int i = 0; i < n; ++i) w = deflate(w);
  return w;
}

InflateResult inflate(const Word& w) {
  InflateResult res;
  std::size_t i = 0;
  const std::size_t n = w.size();
  if (n > 0 && w[0] == 'S') {
    res.parse.blocks.push_back({BlockKind::LeadingShort, 0, 1});
    res.parse.leading_partial = true;
    i = 1;
  }
  while (i < n) {
    if (w[i] == 'S') throw InvalidWord("interior SS: not an F-word");
    if (w[i] != 'L') throw InvalidWord("word letters must be L or S");
    if (i + 1 < n && w[i + 1] == 'S') {
      res.parse.blocks.push_back({BlockKind::LongShort, i, 2});
      res.word.push_back('L');
      i += 2;
    } else if (i + 1 == n) {
      res.parse.blocks.push_back({BlockKind::TrailingLong, i, 1});
      res.parse.trailing_partial = true;
      i += 1;
    } else {
      res.parse.blocks.push_back({BlockKind::Long, i, 1});
      res.word.push_back('S');
      i += 1;
    }
  }
  return res;
}

IndexResult index_prefix(const Word& w, std::size_t position, int depth) {
  if (position >= w.size()) throw std::out_of_range("index_prefix: position out of range");
  IndexResult r;
  r.prefix.bits.push_back(w[position] == 'S' ? 1 : 0);
  Word cur = w;
  std::size_t pos = position;
  for (int k = 1; k <= depth; ++k) {
    InflateResult inf = inflate(cur);
    std::size_t bi = inf.parse.block_of(pos);
    switch (inf.parse.blocks[bi].kind) {
      case BlockKind::TrailingLong:
        return IndexResult::undefined_at(k);
      case BlockKind::LeadingShort:
        // The S ends an LS block whose L lies just left of the window; the
        // image letter is forced, so track it as a prepended L.
        r.prefix.bits.push_back(0);
        cur = "L" + inf.word;
        pos = 0;
        break;
      case BlockKind::LongShort:
        r.prefix.bits.push_back(0);
        pos = inf.parse.output_pos(bi);
        cur = std::move(inf.word);
        break;
      case BlockKind::Long:
        r.prefix.bits.push_back(1);
        pos = inf.parse.output_pos(bi);
        cur = std::move(inf.word);
        break;
    }
  }
  return r;
}

bool is_valid_fword(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 'L' && w[i] != 'S') return false;
    if (i + 1 < w.size() && w[i] == 'S' && w[i + 1] == 'S') return false;
    if (i + 2 < w.size() && w[i] == 'L' && w[i + 1] == 'L' && w[i + 2] == 'L') return false;
  }
  return true;
}

}  // namespace fib
