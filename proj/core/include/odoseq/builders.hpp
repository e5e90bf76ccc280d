#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odoseq/numeric.hpp"
#include "odoseq/odometer.hpp"
#include "odoseq/words.hpp"

namespace odoseq {

/// Two-word presentation over {a, b}: level n+1 words start aaa / bbb and
/// share an alternating tail (a at even block positions >= 6). Requires
/// every k_n >= 10. Materializes table levels 1..levels.
ConstructionSequence build_two_word(const std::vector<std::uint64_t>& ks, std::size_t levels);

/// Permutation-prefix presentation over {a, b, c}: level n+1 words are
/// w_sigma ^ t for non-identity permutations sigma of the level-n table,
/// where w_sigma repeats the sigma-ordering three times and t is the shared
/// suffix. Levels whose table size s_n!-1 exceeds enumerate_cap stay lazy
/// and are addressed by permutation rank.
ConstructionSequence build_small_fingers(const std::vector<BigInt>& ks,
                                         std::uint64_t enumerate_cap);

/// Complement-doubling presentation over {0, 1}: W_{n+1} = {v, bar v} with
/// v = w^{K_n} bar w^{K_n}, so k_n = 2 K_n.
ConstructionSequence build_alternating_complement(std::size_t levels);

// --- small-fingers lazy addressing -------------------------------------

/// Number of words at `level`, including lazy levels (s_{n+1} = s_n! - 1).
BigInt small_fingers_level_size(const ConstructionSequence& seq, std::size_t level);

/// Index vector of the level-n word with permutation rank `rank` (Lehmer
/// code order; rank 0 is the identity and is excluded, so 1 <= rank < s!).
/// Only levels whose constituents are materialized are addressable.
std::vector<std::uint32_t> small_fingers_word_blocks(const ConstructionSequence& seq,
                                                     std::size_t level, const BigInt& rank);

/// k_n = s_n (c_n + 3) + d_n decomposition and the exact block-multiplicity
/// frequencies it induces: every level-n word occurs c_n + 3 times in every
/// level-(n+1) word, the first d_n words once more.
struct SmallFingersLevelStats {
  BigInt s;     // s_n
  BigInt c;     // c_n
  BigInt d;     // d_n
  Rational f_max;
  Rational f_min;
};
SmallFingersLevelStats small_fingers_stats(const ConstructionSequence& seq, std::size_t level);

/// Factorial-base decode: permutation of {0..n-1} with the given Lehmer
/// rank in [0, n!).
std::vector<std::uint64_t> lehmer_unrank(std::uint64_t n, const BigInt& rank);
BigInt lehmer_rank(const std::vector<std::uint64_t>& perm);

// --- painting ------------------------------------------------------------

/// Assignment of inventory words to the spare initial tower blocks so every
/// word lands at least twice; remaining blocks repeat the first word.
struct PaintingPlan {
  std::uint64_t block_length = 0;  // K_n
  std::uint64_t capacity_blocks = 0;
  std::string mode;  // "strict" | "demo"
  BigInt d_next;     // 4 K_n a^{K_n}, the spare-level budget
  std::vector<std::string> inventory;
  std::vector<std::uint32_t> assignment;  // block -> inventory index
};

/// capacity_blocks == 0 selects strict mode (capacity 4 a^{K_n}); any other
/// value is demo mode and must be >= 2 * |inventory|.
PaintingPlan paint_levels(const std::vector<std::string>& inventory, std::uint64_t a,
                          std::uint64_t block_length, std::uint64_t capacity_blocks = 0);

// --- tower budget ----------------------------------------------------------

/// A coefficient for the budget checker: scale * a^exponent + offset.
/// Explicit integers use scale == 0. The power form keeps coefficients like
/// 4 * a^{K_n} * 10^e + 1 exact when a^{K_n} cannot be materialized.
struct BudgetCoefficient {
  BigInt scale;
  BigInt exponent;
  BigInt offset;

  static BudgetCoefficient explicit_value(BigInt v) { return {BigInt(0), BigInt(0), std::move(v)}; }
  static BudgetCoefficient power_form(BigInt scale, BigInt exponent, BigInt offset) {
    return {std::move(scale), std::move(exponent), std::move(offset)};
  }
  bool is_explicit() const { return scale == 0; }
  /// Materialized value; throws CapExceeded when the power is too large.
  BigInt value(std::uint64_t a) const;
  std::string describe(std::uint64_t a) const;
};

struct TowerBudgetEntry {
  std::size_t tower_level = 0;       // n, bounding mu(D_n) = d_n / K_n
  std::size_t coefficient_index = 0; // n - 1, the k that decides the bound
  Rational bound;                    // 10^{-(n+1)}
  bool holds = false;
  std::optional<Rational> mu;        // exact value when materializable
  bool symbolic = false;             // decided by exponent algebra instead
};

struct TowerBudget {
  std::uint64_t a = 0;
  std::vector<TowerBudgetEntry> entries;
  std::optional<std::size_t> first_violation;  // tower level
  Rational sum_upper_bound;                    // over checked levels
  bool sum_ok = false;                         // sum_upper_bound < 1/4
};

/// Verifies mu(D_n) = 4 K_{n-1} a^{K_{n-1}} / K_n < 10^{-(n+1)} for
/// n = 1..n_max, which holds exactly when k_{n-1} > 4 a^{K_{n-1}} 10^{n+1}.
/// All arithmetic is exact; entries whose powers cannot be materialized are
/// decided by exact exponent comparison and flagged `symbolic`.
TowerBudget check_tower_budget(std::uint64_t a, const std::vector<BudgetCoefficient>& ks,
                               std::size_t n_max);

TowerBudget check_tower_budget(std::uint64_t a, const CoefficientSequence& ks,
                               std::size_t n_max);

/// Minimal coefficients passing the budget chain: k_m = 4 a^{K_m} 10^{m+2} + 1.
std::vector<BudgetCoefficient> admissible_budget_coefficients(std::uint64_t a,
                                                              std::size_t count);

}  // namespace odoseq
