#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odoseq/words.hpp"

namespace odoseq {

/// One stage of a staged periodic filling: the residues mod `period` this
/// stage pins to a symbol. Stages never redefine a position an earlier
/// stage already filled.
struct ToeplitzStage {
  std::uint64_t period = 1;
  std::map<std::uint64_t, std::uint32_t> fill;  // residue -> alphabet index
};

/// Intensional description of a Toeplitz sequence: periods divide along the
/// stage list and the filled residue classes grow. Positions are evaluated
/// on demand; the raw sequence is never stored.
class ToeplitzSpec {
 public:
  ToeplitzSpec() = default;
  ToeplitzSpec(Alphabet alphabet, std::vector<ToeplitzStage> stages);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<ToeplitzStage>& stages() const { return stages_; }

  /// Symbol forced at position k, with the 1-based stage that forces it.
  struct Lookup {
    std::optional<std::uint32_t> symbol;
    std::size_t stages_consulted = 0;
  };
  Lookup at(std::int64_t k) const;

 private:
  Alphabet alphabet_;
  std::vector<ToeplitzStage> stages_;
};

/// Determined symbols on [lo, hi); throws std::invalid_argument naming the
/// first unfilled position and the deepest stage consulted.
std::vector<std::uint32_t> toeplitz_window(const ToeplitzSpec& spec, std::int64_t lo,
                                           std::int64_t hi);

enum class PerMode { Exact, Empirical };

/// Per_p positions in [lo, hi): exact mode returns positions whose filling
/// stage period divides p (the spec forces x(k+mp) = x(k) for all m);
/// empirical mode checks the identity within the window only.
std::vector<std::int64_t> per_set(const ToeplitzSpec& spec, std::uint64_t p, std::int64_t lo,
                                  std::int64_t hi, PerMode mode = PerMode::Exact);

struct EssentialPeriodLink {
  std::uint64_t from_period = 0;  // K_n
  std::uint64_t to_period = 0;    // K_{n+1}
  bool c_ok = false;  // every aligned K_n-block below the bound recurs in [0, K_{n+1})
  bool d_ok = false;  // every aligned K_n-block in [0, K_{n+1}) occurs there twice
  std::uint64_t checked_bound = 0;
  std::uint64_t distinct_blocks = 0;     // distinct aligned blocks in [0, K_{n+1})
  std::uint64_t min_occurrences = 0;     // among those blocks
};

struct EssentialPeriodList {
  std::vector<std::uint64_t> periods;  // divisibility-increasing, starts at 1
  std::vector<EssentialPeriodLink> links;
  std::uint64_t coverage_prefix_end = 0;  // [0, end) covered by the selected Per sets
  bool complete = false;
  std::string diagnostic;
};

/// Greedy divisibility-increasing selection among {1} + stage periods,
/// keeping only periods whose c) and d) checks pass over [0, window_bound).
/// min_ratio filters candidates to at least min_ratio times the previous
/// period (the augmentation needs ratios >= 10).
EssentialPeriodList select_essential_periods(const ToeplitzSpec& spec, std::size_t count,
                                             std::uint64_t window_bound,
                                             std::uint64_t min_ratio = 1);

/// Runs the same evidence checks for a hand-picked period chain.
EssentialPeriodList verify_essential_periods(const ToeplitzSpec& spec,
                                             const std::vector<std::uint64_t>& periods,
                                             std::uint64_t window_bound);

/// Pairs the aligned blocks of the Toeplitz sequence with the two-word
/// odometer presentation over the product alphabet: level n words are
/// (aligned K_n-block occurring below K_{n+1}, w^j_n). Periods must start
/// at 1 and their ratios must equal the odometer component's coefficients.
ConstructionSequence toeplitz_augment(const ToeplitzSpec& spec,
                                      const std::vector<std::uint64_t>& periods,
                                      const ConstructionSequence& odo_component);

struct AperiodicityFailure {
  std::uint64_t position = 0;
  std::uint64_t period = 0;
};

struct AperiodicityReport {
  std::uint64_t p_max = 0;
  std::uint64_t lo = 0, hi = 0;     // scanned interior positions
  std::uint64_t pairs_checked = 0;
  std::uint64_t skipped = 0;        // pairs with no comparable position at all
  std::uint64_t max_witness = 0;    // largest least-|b| over all pairs
  std::vector<AperiodicityFailure> failures;  // first few (k, p) without witness
  std::uint64_t failure_count = 0;
  bool all_found() const { return failure_count == 0; }
};

/// For every position k in [lo, hi) and period 1 <= p <= p_max, searches the
/// least |b| != 0 with window[k] != window[k + b p], staying inside the
/// window. Pairs with no witness are failures.
AperiodicityReport aperiodicity_scan(const std::vector<std::uint32_t>& window,
                                     std::uint64_t p_max, std::uint64_t lo, std::uint64_t hi);

}  // namespace odoseq
