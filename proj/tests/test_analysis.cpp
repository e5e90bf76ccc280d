#include "doctest.h"
#include "odoseq/analysis.hpp"
#include "odoseq/builders.hpp"

#include <vector>

using namespace odoseq;

namespace {

std::vector<Rational> rats(std::initializer_list<std::pair<long, long>> pairs) {
  std::vector<Rational> out;
  for (auto [p, q] : pairs) out.push_back(make_rational(p, q));
  return out;
}

}  // namespace

TEST_CASE("frequency profiles") {
  auto alt = build_alternating_complement(3);
  auto profile = frequency_profile(alt);
  REQUIRE(profile.levels.size() == 3);
  for (const auto& lv : profile.levels) {
    CHECK(lv.f_max == make_rational(1, 2));
    CHECK(lv.f_min == make_rational(1, 2));
    CHECK(lv.source == "table");
  }

  auto two = build_two_word({10, 11, 12}, 3);
  auto p2 = frequency_profile(two);
  CHECK(p2.level(0).f_max == make_rational(1, 2));
  CHECK(p2.level(1).f_max == make_rational(6, 11));
  CHECK(p2.level(2).f_max == make_rational(1, 2));

  // min frequency stays above the clause-3 floor 1/k_n
  for (const auto& lv : p2.levels)
    CHECK(lv.f_min >= make_rational(1, two.coeffs().k(lv.level)));
}

TEST_CASE("small fingers profile switches to the closed form past the tables") {
  auto seq = build_small_fingers({BigInt(12), BigInt(217), BigInt(9766)}, 1000);
  auto profile = frequency_profile(seq);
  REQUIRE(profile.levels.size() == 3);
  CHECK(profile.level(0).source == "table");
  CHECK(profile.level(1).source == "table");
  CHECK(profile.level(2).source == "closed-form");
  CHECK(profile.level(0).f_max == make_rational(1, 3));
  CHECK(profile.level(1).f_max == make_rational(44, 217));
  CHECK(profile.level(2).f_max == make_rational(83, 9766));
  // strictly decreasing over computed levels, and f_n <= 2/s_n
  CHECK(profile.level(1).f_max < profile.level(0).f_max);
  CHECK(profile.level(2).f_max < profile.level(1).f_max);
  CHECK(profile.level(0).f_max <= make_rational(2, 3));
  CHECK(profile.level(1).f_max <= make_rational(2, 5));
  CHECK(profile.level(2).f_max <= make_rational(2, 119));
}

TEST_CASE("small word property checks") {
  auto alt = build_alternating_complement(3);
  CHECK(check_swp(alt, rats({{1, 1}, {1, 1}, {1, 1}})).holds);
  auto strict = check_swp(alt, rats({{1, 2}}));
  CHECK_FALSE(strict.holds);  // f_0 = 1/2 is not strictly below 1/2
  CHECK(*strict.violation_level == 0);
  CHECK(check_swp(alt, {}).holds);  // vacuous
}

TEST_CASE("measure bounds for the two-word builder") {
  auto seq = build_two_word({10, 11, 12}, 3);
  auto report = measure_bound_check(seq, 0, 3);
  CHECK(report.lower == make_rational(1, 10));
  CHECK(report.upper == make_rational(1, 2));
  CHECK(report.all_within);
  REQUIRE(report.entries.size() == 4);

  // separation through delta_1 / K_1 with an SWP-compatible delta list
  auto sep = measure_bound_check(seq, 0, 3, rats({{9, 10}, {7, 10}}));
  REQUIRE(sep.separation_ok.has_value());
  CHECK(*sep.separation_ok);
}

TEST_CASE("measure bound edge cases") {
  // a word occurring exactly once per next-level block sits on the lower bound
  ConstructionSequence once(Alphabet({"a", "b"}), CoefficientSequence::from_u64({3}),
                            {{{0, 0, 1}}});
  auto r = measure_bound_check(once, 0, 1);
  CHECK(r.all_within);
  CHECK(r.entries[1].rate == r.lower);  // symbol b: one occurrence in aab

  // a clause-3 violator breaks the lower bound and is reported
  ConstructionSequence missing(Alphabet({"a", "b"}), CoefficientSequence::from_u64({3}),
                               {{{0, 0, 0}}});
  auto bad = measure_bound_check(missing, 0, 1);
  CHECK_FALSE(bad.all_within);
  CHECK(bad.entries[1].rate == Rational(0));
}

TEST_CASE("thin follows the greedy game strategy") {
  auto seq = build_two_word({10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20}, 11);
  // b_n = 2^-n, deltas 10^-i: picks are the least levels beating each target
  auto b = geometric_bounds(make_rational(1, 2), 12);
  auto result = thin(seq, rats({{1, 1}, {1, 10}, {1, 100}, {1, 1000}}), b);
  CHECK(result.complete);
  CHECK(result.picks == std::vector<std::size_t>{0, 1, 4, 7, 10});
  for (const auto& round : result.rounds) CHECK(round.achieved < round.delta);

  // greedy minimality: with deltas all 1 every next level qualifies
  auto ones = thin(seq, rats({{1, 1}, {1, 1}, {1, 1}}), b);
  CHECK(ones.picks == std::vector<std::size_t>{0, 1, 2, 3});

  // prefix stability: later deltas do not move earlier picks
  auto perturbed = thin(seq, rats({{1, 1}, {1, 10}, {1, 128}, {1, 9999}}), b);
  CHECK(perturbed.picks[1] == result.picks[1]);
  CHECK(perturbed.picks[2] == result.picks[2]);
}

TEST_CASE("thin on the exact profile recomposes a valid sequence") {
  auto seq = build_two_word({10, 11, 12, 13, 14}, 5);
  // true f: 1/2, 6/11, 1/2, 7/13; pick through the 13/25 and 3/5 targets
  auto result = thin(seq, rats({{13, 25}, {3, 5}}));
  REQUIRE(result.complete);
  CHECK(result.picks == std::vector<std::size_t>{0, 2, 3});
  REQUIRE(result.thinned.has_value());
  const auto& thinned = *result.thinned;
  CHECK(thinned.coeffs().k(0) == 110);
  CHECK(thinned.coeffs().k(1) == 12);
  CHECK(thinned.coeffs().partial_product(2) == seq.coeffs().partial_product(3));
  auto report = validate(thinned);
  CHECK(report.ok());
  // recomputed true frequencies are reported per round
  REQUIRE(result.rounds[0].table_f.has_value());
  CHECK(*result.rounds[0].table_f == make_rational(1, 2));
}

TEST_CASE("thin reports a partial result when levels run out") {
  auto alt = build_alternating_complement(4);  // f identically 1/2
  auto result = thin(alt, rats({{1, 1}, {1, 2}}));
  CHECK_FALSE(result.complete);
  CHECK(result.rounds.size() == 1);
  CHECK_FALSE(result.diagnostic.empty());
}

TEST_CASE("geometric bounds") {
  auto b = geometric_bounds(make_rational(3, 5), 4);
  CHECK(b[0] == Rational(1));
  CHECK(b[3] == make_rational(27, 125));
}
