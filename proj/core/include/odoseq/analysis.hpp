#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odoseq/numeric.hpp"
#include "odoseq/words.hpp"

namespace odoseq {

struct FrequencyLevel {
  std::size_t level = 0;  // frequencies of level-n words inside level-(n+1) words
  Rational f_max;
  Rational f_min;
  std::string source;  // "table" | "closed-form"
};

struct FrequencyProfile {
  std::vector<FrequencyLevel> levels;
  const FrequencyLevel& level(std::size_t n) const;
};

/// Exact per-level f_n = max Freq(w, w') over consecutive levels, by full
/// table scan where materialized; small_fingers levels beyond the tables
/// use the exact block-multiplicity closed form.
FrequencyProfile frequency_profile(const ConstructionSequence& seq,
                                   std::size_t level_cap = SIZE_MAX);

struct SwpResult {
  bool holds = true;
  std::optional<std::size_t> violation_level;
  std::optional<Rational> f;
  std::optional<Rational> delta;
};

/// Small word property: f_n < delta_n for every checked level. An empty
/// delta list is vacuously true.
SwpResult check_swp(const ConstructionSequence& seq, const std::vector<Rational>& deltas);

struct MeasureBoundEntry {
  std::uint64_t word_index = 0;   // w in W_n
  std::uint64_t upper_index = 0;  // w' in W_M
  Rational rate;                  // subword count / K_M
  bool within = false;
};

struct MeasureBoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Rational lower;  // 1 / K_{n+1}
  Rational upper;  // f_n / K_n
  std::vector<MeasureBoundEntry> entries;
  bool all_within = true;
  std::optional<bool> separation_ok;  // rate(w') < delta_{n+1}/K_{n+1} < rate(w)
};

/// Finite-word surrogate of the invariant-measure bounds: per-position
/// occurrence rates of level-n words inside level-M words must lie in
/// [1/K_{n+1}, f_n/K_n]; with a delta list, also checks the strict
/// separation through delta_{n+1}/K_{n+1}.
MeasureBoundReport measure_bound_check(const ConstructionSequence& seq, std::size_t n,
                                       std::size_t m,
                                       const std::vector<Rational>& deltas = {},
                                       std::uint64_t cap = 1'000'000);

struct ThinRound {
  std::size_t round = 0;
  Rational delta;                  // the target played this round
  std::size_t pick = 0;            // n_{round+1}
  Rational achieved;               // b_{pick}, strictly below delta
  std::optional<Rational> table_f; // true max frequency V_round -> V_{round+1}
};

struct ThinningResult {
  std::vector<std::size_t> picks;  // n_0 = 0, then one pick per resolved round
  std::vector<ThinRound> rounds;
  bool complete = false;
  std::string diagnostic;  // set when rounds could not be resolved
  std::optional<ConstructionSequence> thinned;
};

/// Greedy winning strategy of the selection game: n_0 = 0 and n_{k+1} is the
/// least level above n_k whose bound b falls below delta_k. The bound
/// sequence defaults to the exact frequency profile; a strictly decreasing
/// model sequence can be supplied instead. The thinned sequence recomposes
/// the picked levels with regrouped coefficients.
ThinningResult thin(const ConstructionSequence& seq, const std::vector<Rational>& deltas,
                    const std::vector<Rational>& b_override = {});

/// b_n = ratio^n for n < count, exact.
std::vector<Rational> geometric_bounds(const Rational& ratio, std::size_t count);

}  // namespace odoseq
