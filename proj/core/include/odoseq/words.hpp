#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odoseq/numeric.hpp"
#include "odoseq/odometer.hpp"

namespace odoseq {

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& token(std::uint32_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& tokens() const { return symbols_; }
  std::optional<std::uint32_t> index_of(const std::string& token) const;
  bool single_char_tokens() const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

/// A level-n word (n >= 1) is a vector of k_{n-1} indices into level n-1.
using Word = std::vector<std::uint32_t>;

struct WordId {
  std::size_t level = 0;
  std::uint64_t index = 0;
  bool operator==(const WordId&) const = default;
};

/// Records how a sequence was produced, for reproducibility and for lazy
/// (non-materialized) level addressing.
struct GeneratorDescriptor {
  std::string name;
  std::map<std::string, std::string> params;
  bool operator==(const GeneratorDescriptor&) const = default;
};

/// Leveled word tables over an alphabet: level 0 is the alphabet itself,
/// level n+1 words are stored as index vectors over level n. Immutable
/// after construction.
class ConstructionSequence {
 public:
  ConstructionSequence() = default;
  ConstructionSequence(Alphabet alphabet, CoefficientSequence coeffs,
                       std::vector<std::vector<Word>> tables,
                       std::optional<GeneratorDescriptor> generator = std::nullopt);

  const Alphabet& alphabet() const { return alphabet_; }
  const CoefficientSequence& coeffs() const { return coeffs_; }
  const std::optional<GeneratorDescriptor>& generator() const { return generator_; }

  /// Highest materialized level (0 if only the alphabet is present).
  std::size_t max_level() const { return tables_.size(); }
  std::uint64_t word_count(std::size_t level) const;  // s_n
  const Word& word(std::size_t level, std::uint64_t index) const;
  const std::vector<Word>& level_table(std::size_t level) const;

  /// K_n, the expansion length of level-n words.
  const BigInt& length(std::size_t level) const { return coeffs_.partial_product(level); }
  std::uint64_t length_u64(std::size_t level) const {
    return to_u64(length(level), "word length");
  }

  void check_word_id(const WordId& id) const;

 private:
  Alphabet alphabet_;
  CoefficientSequence coeffs_;
  std::vector<std::vector<Word>> tables_;  // tables_[t] = level t+1
  std::optional<GeneratorDescriptor> generator_;
};

/// Full symbol string (as alphabet indices) of a word, length K_n.
/// Throws CapExceeded before attempting an expansion longer than `cap`.
std::vector<std::uint32_t> expand(const ConstructionSequence& seq, const WordId& id,
                                  std::uint64_t cap = 1'000'000);

/// Constituent indices of `id` at `target_level` <= id.level (target 0 gives
/// the symbol string). Length K_{id.level} / K_{target}.
std::vector<std::uint32_t> expand_to_level(const ConstructionSequence& seq, const WordId& id,
                                           std::size_t target_level,
                                           std::uint64_t cap = 1'000'000);

/// Renders an expansion as text; tokens are joined directly when all are
/// single characters, otherwise separated by spaces.
std::string render(const Alphabet& alphabet, const std::vector<std::uint32_t>& symbols);

enum class CountMode { Subword, Aligned };

/// Occurrences of `w` inside `wp` (levels n < m). Subword mode counts all
/// start offsets in the expansion; aligned mode counts offsets that are
/// multiples of K_n, computed from the index tables without expansion.
std::uint64_t occurrences(const ConstructionSequence& seq, const WordId& w, const WordId& wp,
                          CountMode mode, std::uint64_t cap = 1'000'000);

/// Freq(w, w') = occurrences / (K_m / K_n), exact. Defaults to aligned
/// counting (cap-free); for uniquely readable levels the two modes agree.
Rational freq(const ConstructionSequence& seq, const WordId& w, const WordId& wp,
              CountMode mode = CountMode::Aligned, std::uint64_t cap = 1'000'000);

struct ValidationWitness {
  std::string clause;  // "unique_readability", "clause3", "distinct", ...
  std::size_t level = 0;
  std::string detail;
};

struct LevelValidation {
  std::size_t level = 0;
  bool block_structure_ok = true;  // every word is a k_{n-1}-vector of valid indices
  bool distinct_ok = true;
  std::optional<bool> unique_readable;  // nullopt when skipped
  std::string ur_mode = "exact";        // "exact" | "sampled" | "skipped"
  // Pair statistics against level+1, when that level is materialized:
  std::optional<std::uint64_t> clause3_min_aligned;
  std::optional<std::uint64_t> clause3_min_subword;
  bool clause3_ok = true;     // every word occurs (aligned) in every next-level word
  bool minimality_ok = true;  // at least twice
};

struct ValidationReport {
  bool alphabet_ok = true;
  Rational spacer_fraction = Rational(0);  // no spacers in this encoding, constant
  std::vector<LevelValidation> levels;
  std::vector<ValidationWitness> witnesses;

  bool ok() const;        // clauses 1-3 + unique readability + structure
  bool minimal() const ;  // additionally every word occurs >= 2 times
  const LevelValidation& level(std::size_t n) const;
};

struct ValidateOptions {
  std::size_t level_cap = SIZE_MAX;      // highest level to check
  std::uint64_t expansion_cap = 1'000'000;   // max symbols per expanded word
  std::uint64_t ur_work_cap = 200'000'000;   // ~ s^2 K budget for exhaustive UR
  std::uint64_t sample_pairs = 512;          // pair samples when over budget
};

/// Deterministic validation of the defining clauses. Over-budget unique
/// readability degrades to a sampled check and is flagged as such.
ValidationReport validate(const ConstructionSequence& seq, const ValidateOptions& opts = {});

/// Exact aligned-occurrence counts of every level-n word in every level-(n+1)
/// word: result[j][i] = count of word i (level n) among the blocks of word j.
std::vector<std::vector<std::uint64_t>> aligned_count_table(const ConstructionSequence& seq,
                                                            std::size_t n);

}  // namespace odoseq
