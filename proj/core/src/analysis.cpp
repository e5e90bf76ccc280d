#include "odoseq/analysis.hpp"

#include <stdexcept>
#include <string>

#include "odoseq/builders.hpp"
#include "odoseq/odometer.hpp"

namespace odoseq {

const FrequencyLevel& FrequencyProfile::level(std::size_t n) const {
  for (const auto& lv : levels) {
    if (lv.level == n) return lv;
  }
  throw std::out_of_range("no frequency entry for level " + std::to_string(n));
}

FrequencyProfile frequency_profile(const ConstructionSequence& seq, std::size_t level_cap) {
  FrequencyProfile profile;
  const bool small_fingers = seq.generator() && seq.generator()->name == "small_fingers";
  const std::size_t depth = std::min(seq.coeffs().depth(), level_cap);
  for (std::size_t n = 0; n < depth; ++n) {
    FrequencyLevel lv;
    lv.level = n;
    if (n + 1 <= seq.max_level()) {
      const auto counts = aligned_count_table(seq, n);
      const BigInt capacity = seq.coeffs().k(n);
      std::uint64_t best = 0, worst = UINT64_MAX;
      for (const auto& row : counts) {
        for (auto c : row) {
          best = std::max(best, c);
          worst = std::min(worst, c);
        }
      }
      lv.f_max = make_rational(BigInt(static_cast<unsigned long>(best)), capacity);
      lv.f_min = make_rational(BigInt(static_cast<unsigned long>(worst)), capacity);
      lv.source = "table";
    } else if (small_fingers) {
      const auto stats = small_fingers_stats(seq, n);
      lv.f_max = stats.f_max;
      lv.f_min = stats.f_min;
      lv.source = "closed-form";
    } else {
      break;  // nothing exact to report past the materialized tables
    }
    profile.levels.push_back(std::move(lv));
  }
  return profile;
}

SwpResult check_swp(const ConstructionSequence& seq, const std::vector<Rational>& deltas) {
  const auto profile = frequency_profile(seq, deltas.size());
  SwpResult out;
  for (std::size_t n = 0; n < deltas.size() && n < profile.levels.size(); ++n) {
    if (profile.levels[n].f_max < deltas[n]) continue;
    out.holds = false;
    out.violation_level = n;
    out.f = profile.levels[n].f_max;
    out.delta = deltas[n];
    break;
  }
  return out;
}

MeasureBoundReport measure_bound_check(const ConstructionSequence& seq, std::size_t n,
                                       std::size_t m, const std::vector<Rational>& deltas,
                                       std::uint64_t cap) {
  if (n >= m) throw std::invalid_argument("measure_bound_check requires n < M");
  if (m > seq.max_level()) throw std::out_of_range("level M is not materialized");

  MeasureBoundReport report;
  report.n = n;
  report.m = m;
  report.lower = make_rational(1, seq.length(n + 1));
  const auto profile = frequency_profile(seq, n + 1);
  report.upper = profile.level(n).f_max / Rational(seq.length(n));

  const std::uint64_t sn = seq.word_count(n);
  const std::uint64_t sm = seq.word_count(m);
  const BigInt km = seq.length(m);
  for (std::uint64_t j = 0; j < sm; ++j) {
    for (std::uint64_t i = 0; i < sn; ++i) {
      const std::uint64_t count =
          occurrences(seq, WordId{n, i}, WordId{m, j}, CountMode::Subword, cap);
      MeasureBoundEntry entry;
      entry.word_index = i;
      entry.upper_index = j;
      entry.rate = make_rational(BigInt(static_cast<unsigned long>(count)), km);
      entry.within = report.lower <= entry.rate && entry.rate <= report.upper;
      report.all_within = report.all_within && entry.within;
      report.entries.push_back(std::move(entry));
    }
  }

  // Strict separation rho(<w'>) < delta_{n+1}/K_{n+1} < rho(<w>) in its
  // finite-frequency form, when the delta list reaches level n+1.
  if (deltas.size() > n + 1 && n + 2 <= seq.max_level()) {
    const Rational mid = deltas[n + 1] / Rational(seq.length(n + 1));
    bool ok = true;
    for (std::uint64_t i = 0; i < sn && ok; ++i) {
      const std::uint64_t c = occurrences(seq, WordId{n, i}, WordId{m, 0}, CountMode::Subword, cap);
      ok = mid < make_rational(BigInt(static_cast<unsigned long>(c)), km);
    }
    const std::uint64_t sn1 = seq.word_count(n + 1);
    for (std::uint64_t i = 0; i < sn1 && ok; ++i) {
      const std::uint64_t c =
          occurrences(seq, WordId{n + 1, i}, WordId{m, 0}, CountMode::Subword, cap);
      ok = make_rational(BigInt(static_cast<unsigned long>(c)), km) < mid;
    }
    report.separation_ok = ok;
  }
  return report;
}

std::vector<Rational> geometric_bounds(const Rational& ratio, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  Rational cur(1);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur *= ratio;
  }
  return out;
}

ThinningResult thin(const ConstructionSequence& seq, const std::vector<Rational>& deltas,
                    const std::vector<Rational>& b_override) {
  std::vector<Rational> b = b_override;
  if (b.empty()) {
    const auto profile = frequency_profile(seq);
    b.reserve(profile.levels.size());
    for (const auto& lv : profile.levels) b.push_back(lv.f_max);
  }

  ThinningResult result;
  result.picks = {0};
  std::size_t last = 0;
  for (std::size_t round = 0; round < deltas.size(); ++round) {
    std::size_t pick = last + 1;
    while (pick < b.size() && !(b[pick] < deltas[round])) ++pick;
    if (pick >= b.size()) {
      result.diagnostic = "no level above " + std::to_string(last) + " has bound below " +
                          rational_to_string(deltas[round]) + " within the available " +
                          std::to_string(b.size()) + " levels";
      break;
    }
    ThinRound r;
    r.round = round;
    r.delta = deltas[round];
    r.pick = pick;
    r.achieved = b[pick];
    result.rounds.push_back(std::move(r));
    result.picks.push_back(pick);
    last = pick;
  }
  result.complete = result.rounds.size() == deltas.size();

  // Recompose the picked levels into a standalone sequence when the tables
  // reach far enough, and recompute the true inter-level frequencies.
  const std::size_t top_pick = result.picks.back();
  if (result.picks.size() >= 2 && top_pick <= seq.max_level()) {
    std::vector<std::size_t> k_picks(result.picks.begin() + 1, result.picks.end());
    CoefficientSequence regrouped = regroup(seq.coeffs(), k_picks);
    std::vector<std::vector<Word>> tables;
    for (std::size_t i = 1; i < result.picks.size(); ++i) {
      const std::size_t level = result.picks[i];
      const std::size_t below = result.picks[i - 1];
      std::vector<Word> table;
      const std::uint64_t count = seq.word_count(level);
      table.reserve(count);
      for (std::uint64_t j = 0; j < count; ++j)
        table.push_back(expand_to_level(seq, WordId{level, j}, below, UINT64_MAX));
      tables.push_back(std::move(table));
    }
    std::string picks_str;
    for (std::size_t i = 0; i < result.picks.size(); ++i)
      picks_str += (i ? "," : "") + std::to_string(result.picks[i]);
    GeneratorDescriptor gen{"thinned", {{"picks", picks_str}}};
    result.thinned = ConstructionSequence(seq.alphabet(), std::move(regrouped),
                                          std::move(tables), gen);
    const auto profile = frequency_profile(*result.thinned);
    for (auto& round : result.rounds) {
      if (round.round < profile.levels.size())
        round.table_f = profile.levels[round.round].f_max;
    }
  }
  return result;
}

}  // namespace odoseq
