#pragma once

#include <cstdint>
#include <vector>

#include "odoseq/words.hpp"

namespace odoseq {

/// One level of hierarchical parse data: the principal n-subword and the
/// offset r_n of the origin inside it (0 <= r_n < K_n).
struct Anchor {
  std::size_t level = 0;
  std::uint64_t offset = 0;  // r_n
  WordId word;               // the principal n-subword
};

/// A finite symbol window with its hierarchical parse anchors. The window
/// is the expansion of the top anchor word; the origin sits at offset
/// anchors.back().offset within it.
struct AnchoredWindow {
  std::vector<std::uint32_t> symbols;
  std::uint64_t origin = 0;
  std::vector<Anchor> anchors;  // contiguous levels, ascending

  std::size_t base_level() const { return anchors.front().level; }
  std::size_t top_level() const { return anchors.back().level; }
  const Anchor& anchor(std::size_t level) const;
};

/// Parses `position` inside the expansion of `top`: r_n = position mod K_n,
/// and the principal words are read off the index tables.
AnchoredWindow parse(const ConstructionSequence& seq, const WordId& top, std::uint64_t position,
                     std::uint64_t cap = 1'000'000);

/// The canonical factor-map digits c_n = floor(position / K_n) mod k_n for
/// n < depth: which block of the principal (n+1)-subword holds the origin.
std::vector<std::uint64_t> phi(const ConstructionSequence& seq, const WordId& top,
                               std::uint64_t position, std::size_t depth);

/// Reconstructs the unique window with the given anchors. Anchors must be
/// compatible: r_{n+1} = r_n (mod K_n) and the block of w_{n+1} containing
/// the origin must be w_n; the first failing level is named otherwise.
AnchoredWindow materialize(const ConstructionSequence& seq, const std::vector<Anchor>& anchors,
                           std::uint64_t cap = 1'000'000);

/// The measure-one inverse of phi for the two_word and small_fingers
/// builders: digits x(from_level .. N-1) must index blocks in the shared
/// tail of every next-level word (x(n) >= 10 for two_word, x(n) >= 3 s_n
/// for small_fingers). Returns the window anchored at levels from_level..N
/// with the deterministic top container (word 0 of level N).
AnchoredWindow psi_window(const ConstructionSequence& seq,
                          const std::vector<std::uint64_t>& digits, std::size_t from_level = 0,
                          std::uint64_t cap = 1'000'000);

}  // namespace odoseq
