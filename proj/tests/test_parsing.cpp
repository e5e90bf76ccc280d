#include "doctest.h"
#include "odoseq/builders.hpp"
#include "odoseq/odometer.hpp"
#include "odoseq/parsing.hpp"

#include <random>
#include <vector>

using namespace odoseq;

TEST_CASE("parse positions inside a two-word level-2 word") {
  auto seq = build_two_word({10, 12}, 2);
  auto win = parse(seq, {2, 0}, 57);
  CHECK(win.anchor(1).offset == 7);
  CHECK(win.anchor(2).offset == 57);
  // block 5 (the 6th) of a_2 holds the origin; blocks 0-2 of a_2 are a_1
  CHECK(win.anchor(1).word.index == seq.word(2, 0)[5]);
  // the window symbols at the principal 1-subword match its expansion
  const auto sub = expand(seq, win.anchor(1).word);
  for (std::size_t i = 0; i < sub.size(); ++i) CHECK(win.symbols[50 + i] == sub[i]);

  auto zero = parse(seq, {2, 0}, 0);
  for (const auto& a : zero.anchors) CHECK(a.offset == 0);

  CHECK_THROWS_AS(parse(seq, {2, 0}, 120), std::invalid_argument);
}

TEST_CASE("parse offsets reduce through levels") {
  auto seq = build_two_word({10, 11, 12}, 3);
  for (std::uint64_t pos : {0ull, 1ull, 109ull, 110ull, 1319ull, 777ull}) {
    auto win = parse(seq, {3, 1}, pos);
    for (std::size_t n = 0; n + 1 <= 3; ++n)
      CHECK(win.anchor(n + 1).offset % seq.length_u64(n) == win.anchor(n).offset);
  }
}

TEST_CASE("phi digits and equivariance") {
  auto seq = build_two_word({10, 12}, 2);
  CHECK(phi(seq, {2, 0}, 57, 2) == std::vector<std::uint64_t>{7, 5});
  CHECK(phi(seq, {2, 0}, 0, 2) == std::vector<std::uint64_t>{0, 0});

  // phi(p+1) = succ(phi(p)), exhaustively over the level-2 word
  auto c = CoefficientSequence::from_u64({10, 12});
  const std::uint64_t total = seq.length_u64(2);
  for (std::uint64_t p = 0; p + 1 < total; ++p) {
    const auto cur = phi(seq, {2, 0}, p, 2);
    const auto next = phi(seq, {2, 0}, p + 1, 2);
    const auto stepped = succ(c, OdoPoint::from_u64(cur));
    CHECK_FALSE(stepped.overflow);
    std::vector<std::uint64_t> stepped_digits;
    for (const auto& d : stepped.point.digits) stepped_digits.push_back(to_u64(d));
    REQUIRE(next == stepped_digits);
  }
}

TEST_CASE("materialize round trips with parse") {
  auto seq = build_two_word({10, 11, 12}, 3);
  for (std::uint64_t pos : {3ull, 42ull, 1000ull, 1319ull}) {
    auto win = parse(seq, {3, 0}, pos);
    auto re = materialize(seq, win.anchors);
    CHECK(re.symbols == win.symbols);
    CHECK(re.origin == win.origin);
    auto again = parse(seq, re.anchors.back().word, re.origin);
    for (const auto& a : win.anchors) {
      CHECK(again.anchor(a.level).offset == a.offset);
      CHECK(again.anchor(a.level).word == a.word);
    }
  }

  // anchors where the named word is not the containing block are rejected,
  // and the first failing level is the one named
  auto win = parse(seq, {3, 0}, 42);
  auto bad = win.anchors;
  bad[3].word.index = 1 - bad[3].word.index;  // swap the top container
  CHECK_THROWS_WITH_AS(materialize(seq, bad), doctest::Contains("level 2"),
                       std::invalid_argument);

  auto bad2 = win.anchors;
  bad2[1].offset += 1;  // offsets no longer reduce mod K_0... caught at level 0
  CHECK_THROWS_WITH_AS(materialize(seq, bad2), doctest::Contains("level 0"),
                       std::invalid_argument);
}

TEST_CASE("psi windows for the two-word builder") {
  auto seq = build_two_word({12, 14, 16}, 3);
  // digits (10, 11, 12): r_3 = 10 + 11*12 + 12*168 = 2158
  auto win = psi_window(seq, {10, 11, 12});
  CHECK(win.top_level() == 3);
  CHECK(win.origin == 10 + 11 * 12 + 12 * 168);
  // w_n is a_n at even tail blocks and b_n at odd ones
  CHECK(win.anchor(0).word.index == 0);
  CHECK(win.anchor(1).word.index == 1);
  CHECK(win.anchor(2).word.index == 0);

  // any tail block index >= 6 selects the same word in both containers
  for (std::uint64_t j : {10ull, 11ull, 12ull, 13ull}) {
    CHECK(seq.word(3, 0)[j] == seq.word(3, 1)[j]);
  }

  CHECK_THROWS_AS(psi_window(seq, {3, 11, 12}), std::invalid_argument);
  CHECK_THROWS_AS(psi_window(seq, {10, 11, 20}), std::invalid_argument);  // digit range
  // below-threshold digits are fine under the stabilization index
  auto shifted = psi_window(seq, {3, 11, 12}, 1);
  CHECK(shifted.base_level() == 1);
  CHECK(shifted.origin == 3 + 11 * 12 + 12 * 168);
}

TEST_CASE("phi is a left inverse of psi") {
  auto seq = build_two_word({12, 14, 16, 18}, 4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> digits(4);
    for (std::size_t n = 0; n < 4; ++n) {
      const std::uint64_t k = seq.coeffs().k_u64(n);
      digits[n] = 10 + rng() % (k - 10);
    }
    auto win = psi_window(seq, digits);
    CHECK(phi(seq, win.anchors.back().word, win.origin, 4) == digits);
  }
}

TEST_CASE("psi depends only on the digits beyond the stabilization index") {
  auto seq = build_two_word({14, 14, 16}, 3);
  auto w1 = psi_window(seq, {10, 11, 12});
  auto w2 = psi_window(seq, {12, 11, 12});
  // same anchor words at every level, same top container, origins differ by 2
  for (std::size_t n = 0; n <= 3; ++n) CHECK(w1.anchor(n).word == w2.anchor(n).word);
  CHECK(w2.origin == w1.origin + 2);
  CHECK(w1.symbols == w2.symbols);

  // agreeing digit prefixes give agreeing symbols around the origin:
  // digits 0..1 agree, so the principal 1-subwords and their offsets agree
  auto w3 = psi_window(seq, {10, 11, 13});
  CHECK(w3.anchor(1).word == w1.anchor(1).word);
  CHECK(w3.anchor(1).offset == w1.anchor(1).offset);
  const std::uint64_t k1 = seq.length_u64(1);
  const std::uint64_t start1 = w1.origin - w1.anchor(1).offset;
  const std::uint64_t start3 = w3.origin - w3.anchor(1).offset;
  for (std::uint64_t i = 0; i < k1; ++i) CHECK(w1.symbols[start1 + i] == w3.symbols[start3 + i]);
}

TEST_CASE("psi for small fingers picks the shared suffix word") {
  auto seq = build_small_fingers({BigInt(12), BigInt(217)}, 1000);
  // prefix of a level-1 word spans 3 s_0 = 9 blocks; digit 10 is in the tail
  auto win = psi_window(seq, {10, 20});
  CHECK(win.anchor(0).word.index == 10 % 3);
  CHECK(win.anchor(1).word.index == 20 % 5);
  CHECK(win.origin == 10 + 20 * 12);
  CHECK_THROWS_AS(psi_window(seq, {8, 20}), std::invalid_argument);   // inside prefix
  CHECK_THROWS_AS(psi_window(seq, {10, 14}), std::invalid_argument);  // inside prefix
}
