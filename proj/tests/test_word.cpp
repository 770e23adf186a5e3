#include "fibchain/word.hpp"

#include "fibchain/ktheory.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <string>

using namespace fib;

TEST_CASE("deflate substitution") {
  CHECK(deflate("L") == "LS");
  CHECK(deflate("S") == "L");
  CHECK(deflate("LSL") == "LSLLS");
}

TEST_CASE("fixed words") {
  CHECK(fixed_word(0) == "L");
  CHECK(fixed_word(4) == "LSLLSLSL");
  Word w5 = fixed_word(5);
  CHECK(w5.size() == 13);
  CHECK(std::count(w5.begin(), w5.end(), 'L') == 8);
  CHECK(std::count(w5.begin(), w5.end(), 'S') == 5);
}

TEST_CASE("fixed word lengths and letter counts") {
  for (int n = 0; n <= 20; ++n) {
    Word w = fixed_word(n);
    CHECK(BigInt(w.size()) == fibonacci(n + 2));
    CHECK(BigInt(std::count(w.begin(), w.end(), 'L')) == fibonacci(n + 1));
    CHECK(BigInt(std::count(w.begin(), w.end(), 'S')) == fibonacci(n));
  }
}

TEST_CASE("inflate parses") {
  auto r1 = inflate("LSLLS");
  CHECK(r1.word == "LSL");
  CHECK(!r1.parse.leading_partial);
  CHECK(!r1.parse.trailing_partial);
  REQUIRE(r1.parse.blocks.size() == 3);
  CHECK(r1.parse.blocks[0].kind == BlockKind::LongShort);
  CHECK(r1.parse.blocks[1].kind == BlockKind::Long);
  CHECK(r1.parse.blocks[2].kind == BlockKind::LongShort);

  auto r2 = inflate("SLS");
  CHECK(r2.word == "L");
  CHECK(r2.parse.leading_partial);

  auto r3 = inflate("LSLLSLSL");
  CHECK(r3.word == "LSLL");
  CHECK(r3.parse.trailing_partial);

  CHECK_THROWS_AS(inflate("LSS"), InvalidWord);
  CHECK_THROWS_AS(inflate("LSSL"), InvalidWord);
}

TEST_CASE("index prefixes") {
  auto r1 = index_prefix("LSLLS", 0, 2);
  REQUIRE(r1.defined);
  CHECK(r1.prefix.str() == "000");

  auto r2 = index_prefix("LSLLS", 1, 1);
  REQUIRE(r2.defined);
  CHECK(r2.prefix.str() == "10");

  auto r3 = index_prefix("LS", 0, 2);
  CHECK(!r3.defined);
  CHECK(r3.undefined_level == 2);
}

TEST_CASE("F-word validity") {
  CHECK(is_valid_fword("LSLLSLSL"));
  CHECK(!is_valid_fword("LSS"));
  CHECK(!is_valid_fword("LLL"));
  CHECK(!is_valid_fword("LSX"));
  // LLL never occurs in deflation images of L
  CHECK(fixed_word(12).find("LLL") == Word::npos);
  CHECK(fixed_word(12).find("SS") == Word::npos);
}

TEST_CASE("deflate of an inflate image is a factor of the input") {
  std::mt19937_64 rng(42);
  Word big = fixed_word(20);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> start(0, big.size() - 60);
    std::uniform_int_distribution<std::size_t> len(5, 50);
    Word w = big.substr(start(rng), len(rng));
    Word back = deflate(inflate(w).word);
    CHECK(w.find(back) != Word::npos);
  }
  // Exact round trip when edges line up
  for (int n = 1; n <= 15; ++n) {
    auto r = inflate(fixed_word(n));
    Word parent = fixed_word(n - 1);
    CHECK(parent.compare(0, r.word.size(), r.word) == 0);
    CHECK(parent.size() - r.word.size() <= 1);
  }
}

TEST_CASE("emitted prefixes satisfy the index constraint") {
  Word w = fixed_word(14);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
  for (int i = 0; i < 300; ++i) {
    auto r = index_prefix(w, pos(rng), 10);
    if (r.defined) CHECK(r.prefix.valid());
  }
}

TEST_CASE("factor complexity of the Fibonacci word is m+1") {
  Word w = fixed_word(24);
  for (std::size_t m = 1; m <= 12; ++m) {
    std::set<std::string> factors;
    for (std::size_t i = 0; i + m <= w.size(); ++i) factors.insert(w.substr(i, m));
    CHECK(factors.size() == m + 1);
  }
}

TEST_CASE("nearby positions agree beyond a finite level") {
  Word w = fixed_word(18);
  const int depth = 12;
  std::mt19937_64 rng(9);
  // Keep both positions left of the first level-12 block boundary (f_14 =
  // 377), so the pair is guaranteed to merge within the tested depth.
  std::uniform_int_distribution<std::size_t> pos(0, 300);
  std::uniform_int_distribution<std::size_t> gap(1, 20);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    std::size_t p1 = pos(rng), p2 = p1 + gap(rng);
    auto r1 = index_prefix(w, p1, depth);
    auto r2 = index_prefix(w, p2, depth);
    if (!r1.defined || !r2.defined) continue;
    ++checked;
    CHECK(r1.prefix.bits[depth] == r2.prefix.bits[depth]);  // agree at the top
    auto v = tail_equiv(r1.prefix, r2.prefix);
    CHECK(v.kind == TailVerdict::EquivalentFrom);
    CHECK(v.index <= depth);
  }
  CHECK(checked > 50);
}
