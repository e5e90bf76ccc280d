#include "odoseq/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace odoseq {

namespace {

// z[i] = length of the longest common prefix of s and s[i:].
std::vector<std::uint64_t> z_function(const std::vector<std::int64_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::uint64_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min<std::uint64_t>(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

std::vector<std::int64_t> concat_with_sentinel(const std::vector<std::uint32_t>& pat,
                                               const std::vector<std::uint32_t>& text) {
  std::vector<std::int64_t> s;
  s.reserve(pat.size() + text.size() + 1);
  for (auto c : pat) s.push_back(c);
  s.push_back(-1);
  for (auto c : text) s.push_back(c);
  return s;
}

// Offsets d in [1, K-1] such that text[d:] equals pat[:K-d] (suffix of text
// matching a prefix of pat); pat and text both have length K.
void suffix_prefix_overlaps(const std::vector<std::uint32_t>& pat,
                            const std::vector<std::uint32_t>& text,
                            std::vector<char>& out) {
  const std::size_t k = pat.size();
  auto z = z_function(concat_with_sentinel(pat, text));
  for (std::size_t d = 1; d < k; ++d) {
    if (z[k + 1 + d] >= k - d) out[d] = 1;
  }
}

std::uint64_t kmp_count(const std::vector<std::uint32_t>& pat,
                        const std::vector<std::uint32_t>& text) {
  if (pat.empty() || pat.size() > text.size()) return 0;
  std::vector<std::uint64_t> fail(pat.size(), 0);
  for (std::size_t i = 1; i < pat.size(); ++i) {
    std::uint64_t j = fail[i - 1];
    while (j > 0 && pat[i] != pat[j]) j = fail[j - 1];
    if (pat[i] == pat[j]) ++j;
    fail[i] = j;
  }
  std::uint64_t count = 0, j = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (j > 0 && text[i] != pat[j]) j = fail[j - 1];
    if (text[i] == pat[j]) ++j;
    if (j == pat.size()) {
      ++count;
      j = fail[j - 1];
    }
  }
  return count;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate alphabet token: " + s);
  }
}

std::optional<std::uint32_t> Alphabet::index_of(const std::string& token) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == token) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

bool Alphabet::single_char_tokens() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

ConstructionSequence::ConstructionSequence(Alphabet alphabet, CoefficientSequence coeffs,
                                           std::vector<std::vector<Word>> tables,
                                           std::optional<GeneratorDescriptor> generator)
    : alphabet_(std::move(alphabet)),
      coeffs_(std::move(coeffs)),
      tables_(std::move(tables)),
      generator_(std::move(generator)) {
  if (tables_.size() > coeffs_.depth())
    throw std::invalid_argument("more word-table levels than coefficients");
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    const std::uint64_t k = coeffs_.k_u64(t);
    const std::uint64_t below = t == 0 ? alphabet_.size() : tables_[t - 1].size();
    if (tables_[t].empty())
      throw std::invalid_argument("empty word table at level " + std::to_string(t + 1));
    for (const Word& w : tables_[t]) {
      if (w.size() != k)
        throw std::invalid_argument("level " + std::to_string(t + 1) + " word has " +
                                    std::to_string(w.size()) + " blocks, expected " +
                                    std::to_string(k));
      for (auto idx : w) {
        if (idx >= below)
          throw std::invalid_argument("level " + std::to_string(t + 1) +
                                      " word references out-of-range index " +
                                      std::to_string(idx));
      }
    }
  }
}

std::uint64_t ConstructionSequence::word_count(std::size_t level) const {
  if (level == 0) return alphabet_.size();
  if (level > tables_.size())
    throw std::out_of_range("level " + std::to_string(level) + " is not materialized");
  return tables_[level - 1].size();
}

const Word& ConstructionSequence::word(std::size_t level, std::uint64_t index) const {
  if (level == 0 || level > tables_.size())
    throw std::out_of_range("no word table at level " + std::to_string(level));
  return tables_[level - 1].at(index);
}

const std::vector<Word>& ConstructionSequence::level_table(std::size_t level) const {
  if (level == 0 || level > tables_.size())
    throw std::out_of_range("no word table at level " + std::to_string(level));
  return tables_[level - 1];
}

void ConstructionSequence::check_word_id(const WordId& id) const {
  if (id.level > max_level())
    throw std::out_of_range("level " + std::to_string(id.level) + " is not materialized");
  if (id.index >= word_count(id.level)) throw std::out_of_range("word index out of range");
}

std::vector<std::uint32_t> expand_to_level(const ConstructionSequence& seq, const WordId& id,
                                           std::size_t target_level, std::uint64_t cap) {
  seq.check_word_id(id);
  if (target_level > id.level) throw std::invalid_argument("target level above word level");
  const BigInt total = seq.length(id.level) / seq.length(target_level);
  if (total > cap)
    throw CapExceeded("expansion of length " + total.get_str() + " exceeds cap " +
                      std::to_string(cap));
  std::vector<std::uint32_t> cur{static_cast<std::uint32_t>(id.index)};
  for (std::size_t level = id.level; level > target_level; --level) {
    std::vector<std::uint32_t> next;
    next.reserve(cur.size() * seq.coeffs().k_u64(level - 1));
    for (auto idx : cur) {
      const Word& w = seq.word(level, idx);
      next.insert(next.end(), w.begin(), w.end());
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::uint32_t> expand(const ConstructionSequence& seq, const WordId& id,
                                  std::uint64_t cap) {
  return expand_to_level(seq, id, 0, cap);
}

std::string render(const Alphabet& alphabet, const std::vector<std::uint32_t>& symbols) {
  std::string out;
  const bool joined = alphabet.single_char_tokens();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!joined && i > 0) out += ' ';
    out += alphabet.token(symbols[i]);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> aligned_count_table(const ConstructionSequence& seq,
                                                            std::size_t n) {
  if (n + 1 > seq.max_level())
    throw std::out_of_range("level " + std::to_string(n + 1) + " is not materialized");
  const std::uint64_t sn = seq.word_count(n);
  const auto& table = seq.level_table(n + 1);
  std::vector<std::vector<std::uint64_t>> counts(table.size());
  for (std::size_t j = 0; j < table.size(); ++j) {
    counts[j].assign(sn, 0);
    for (auto idx : table[j]) ++counts[j][idx];
  }
  return counts;
}

std::uint64_t occurrences(const ConstructionSequence& seq, const WordId& w, const WordId& wp,
                          CountMode mode, std::uint64_t cap) {
  seq.check_word_id(w);
  seq.check_word_id(wp);
  if (w.level >= wp.level)
    throw std::invalid_argument("occurrences requires w.level < wp.level");
  if (mode == CountMode::Aligned) {
    // Compositional count over index tables; no expansion below level w.level.
    std::vector<std::uint64_t> cur(seq.word_count(w.level), 0);
    cur[w.index] = 1;
    for (std::size_t level = w.level; level < wp.level; ++level) {
      const auto& table = seq.level_table(level + 1);
      std::vector<std::uint64_t> next(table.size(), 0);
      for (std::size_t j = 0; j < table.size(); ++j) {
        for (auto idx : table[j]) next[j] += cur[idx];
      }
      cur = std::move(next);
    }
    return cur[wp.index];
  }
  const auto pat = expand(seq, w, cap);
  const auto text = expand(seq, wp, cap);
  return kmp_count(pat, text);
}

Rational freq(const ConstructionSequence& seq, const WordId& w, const WordId& wp, CountMode mode,
              std::uint64_t cap) {
  const std::uint64_t count = occurrences(seq, w, wp, mode, cap);
  const BigInt capacity = seq.length(wp.level) / seq.length(w.level);
  return make_rational(BigInt(static_cast<unsigned long>(count)), capacity);
}

bool ValidationReport::ok() const {
  if (!alphabet_ok) return false;
  for (const auto& lv : levels) {
    if (!lv.block_structure_ok || !lv.distinct_ok || !lv.clause3_ok) return false;
    if (lv.unique_readable.has_value() && !*lv.unique_readable) return false;
  }
  return true;
}

bool ValidationReport::minimal() const {
  if (!ok()) return false;
  for (const auto& lv : levels) {
    if (!lv.minimality_ok) return false;
  }
  return true;
}

const LevelValidation& ValidationReport::level(std::size_t n) const {
  for (const auto& lv : levels) {
    if (lv.level == n) return lv;
  }
  throw std::out_of_range("no validation entry for level " + std::to_string(n));
}

namespace {

// Exhaustive unique-readability check for one level via suffix/prefix
// overlap sets: an interior occurrence of w in some uv at offset d means
// u[d:] == w[:K-d] and v[:d] == w[K-d:]. The two sides are collected
// independently, so the scan is O(s^2 K) instead of O(s^3 K).
void check_unique_readability(const std::vector<std::vector<std::uint32_t>>& exps,
                              const std::vector<std::size_t>& left_sample,
                              const std::vector<std::size_t>& right_sample, std::size_t level,
                              LevelValidation& lv, std::vector<ValidationWitness>& witnesses) {
  const std::size_t k = exps.front().size();
  std::vector<char> u_side(k, 0), v_side(k, 0);
  std::vector<std::vector<std::uint32_t>> reversed(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    reversed[i] = std::vector<std::uint32_t>(exps[i].rbegin(), exps[i].rend());

  bool ok = true;
  for (std::size_t wi = 0; wi < exps.size() && ok; ++wi) {
    std::fill(u_side.begin(), u_side.end(), 0);
    std::fill(v_side.begin(), v_side.end(), 0);
    for (auto ui : left_sample) suffix_prefix_overlaps(exps[wi], exps[ui], u_side);
    std::vector<char> rev_overlap(k, 0);
    for (auto vi : right_sample) suffix_prefix_overlaps(reversed[wi], reversed[vi], rev_overlap);
    for (std::size_t dp = 1; dp < k; ++dp) {
      if (rev_overlap[dp]) v_side[k - dp] = 1;
    }
    for (std::size_t d = 1; d < k && ok; ++d) {
      if (!u_side[d] || !v_side[d]) continue;
      ok = false;
      // Recover a concrete (u, v) pair for the witness.
      std::size_t u_hit = 0, v_hit = 0;
      for (auto ui : left_sample) {
        std::vector<char> tmp(k, 0);
        suffix_prefix_overlaps(exps[wi], exps[ui], tmp);
        if (tmp[d]) {
          u_hit = ui;
          break;
        }
      }
      for (auto vi : right_sample) {
        std::vector<char> tmp(k, 0);
        suffix_prefix_overlaps(reversed[wi], reversed[vi], tmp);
        if (tmp[k - d]) {
          v_hit = vi;
          break;
        }
      }
      witnesses.push_back({"unique_readability", level,
                           "word " + std::to_string(wi) + " occurs at offset " +
                               std::to_string(d) + " in concatenation " + std::to_string(u_hit) +
                               "*" + std::to_string(v_hit)});
    }
  }
  lv.unique_readable = ok;
}

std::vector<std::size_t> strided_sample(std::size_t n, std::size_t want) {
  std::vector<std::size_t> out;
  if (want >= n) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  const std::size_t stride = n / want;
  for (std::size_t i = 0; i < n && out.size() < want; i += stride) out.push_back(i);
  return out;
}

}  // namespace

ValidationReport validate(const ConstructionSequence& seq, const ValidateOptions& opts) {
  ValidationReport report;
  report.alphabet_ok = seq.alphabet().size() >= 1;  // distinctness enforced by Alphabet ctor
  const std::size_t top = std::min<std::size_t>(seq.max_level(), opts.level_cap);

  // Lazily expanded level tables, shared between the UR and subword checks.
  // Levels are filled bottom-up; a level past the expansion cap (and
  // everything above it) stays empty.
  std::vector<std::vector<std::vector<std::uint32_t>>> exp_cache(top + 2);
  auto level_expansions =
      [&](std::size_t n) -> const std::vector<std::vector<std::uint32_t>>* {
    if (n >= exp_cache.size() || n > seq.max_level()) return nullptr;
    for (std::size_t l = 0; l <= n; ++l) {
      if (!exp_cache[l].empty()) continue;
      if (seq.length(l) > opts.expansion_cap) return nullptr;
      const std::uint64_t kl = seq.length_u64(l);
      const std::uint64_t sl = seq.word_count(l);
      exp_cache[l].resize(sl);
      if (l == 0) {
        for (std::uint32_t i = 0; i < sl; ++i) exp_cache[0][i] = {i};
        continue;
      }
      for (std::uint64_t j = 0; j < sl; ++j) {
        auto& e = exp_cache[l][j];
        e.reserve(kl);
        for (auto idx : seq.word(l, j)) {
          const auto& sub = exp_cache[l - 1][idx];
          e.insert(e.end(), sub.begin(), sub.end());
        }
      }
    }
    return &exp_cache[n];
  };

  for (std::size_t n = 0; n <= top; ++n) {
    LevelValidation lv;
    lv.level = n;
    const std::uint64_t sn = seq.word_count(n);

    if (n >= 1) {
      // Distinctness within the level (index vectors are faithful encodings).
      std::set<Word> seen;
      for (std::uint64_t j = 0; j < sn; ++j) {
        if (!seen.insert(seq.word(n, j)).second) {
          lv.distinct_ok = false;
          report.witnesses.push_back(
              {"distinct", n, "duplicate word at index " + std::to_string(j)});
        }
      }

      // Unique readability. Level 0 words are single symbols with no interior
      // offsets, so only levels >= 1 are scanned.
      const auto* exps = level_expansions(n);
      if (exps == nullptr) {
        lv.unique_readable = std::nullopt;
        lv.ur_mode = "skipped";
      } else {
        const std::uint64_t kn = seq.length_u64(n);
        const bool exhaustive = sn * sn * kn <= opts.ur_work_cap;
        std::vector<std::size_t> sample;
        if (exhaustive) {
          sample = strided_sample(sn, sn);
          lv.ur_mode = "exact";
        } else {
          std::size_t per_side = 1;
          while ((per_side + 1) * (per_side + 1) <= opts.sample_pairs) ++per_side;
          sample = strided_sample(sn, per_side);
          lv.ur_mode = "sampled";
        }
        check_unique_readability(*exps, sample, sample, n, lv, report.witnesses);
      }
    } else {
      lv.unique_readable = true;
      lv.ur_mode = "exact";
    }

    // Clause 3 and the minimality strengthening, against level n+1.
    if (n + 1 <= seq.max_level()) {
      const auto counts = aligned_count_table(seq, n);
      std::uint64_t min_aligned = UINT64_MAX;
      for (std::size_t j = 0; j < counts.size(); ++j) {
        for (std::uint64_t i = 0; i < sn; ++i) {
          if (counts[j][i] < min_aligned) min_aligned = counts[j][i];
          if (counts[j][i] == 0 && lv.clause3_ok) {
            lv.clause3_ok = false;
            report.witnesses.push_back({"clause3", n,
                                        "word " + std::to_string(i) +
                                            " does not occur in level-" + std::to_string(n + 1) +
                                            " word " + std::to_string(j)});
          }
        }
      }
      lv.clause3_min_aligned = min_aligned;
      lv.minimality_ok = min_aligned >= 2;
      if (!lv.minimality_ok && lv.clause3_ok) {
        report.witnesses.push_back(
            {"minimality", n, "minimum aligned occurrence count is " +
                                  std::to_string(min_aligned) + " (< 2)"});
      }

      // Subword cross-count, reported alongside the aligned one where the
      // expansions fit the caps (for uniquely readable levels they agree).
      const auto* pat_exps = level_expansions(n);
      const auto* text_exps = level_expansions(n + 1);
      if (pat_exps != nullptr && text_exps != nullptr) {
        const std::uint64_t snext = seq.word_count(n + 1);
        const std::uint64_t work = sn * snext * seq.length_u64(n + 1);
        if (work <= opts.ur_work_cap) {
          std::uint64_t min_sub = UINT64_MAX;
          for (const auto& text : *text_exps) {
            for (const auto& pat : *pat_exps) {
              min_sub = std::min(min_sub, kmp_count(pat, text));
            }
          }
          lv.clause3_min_subword = min_sub;
        }
      }
    }

    report.levels.push_back(std::move(lv));
  }
  return report;
}

}  // namespace odoseq
