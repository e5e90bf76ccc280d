#include "odoseq/parsing.hpp"

#include <stdexcept>
#include <string>

#include "odoseq/builders.hpp"

namespace odoseq {

const Anchor& AnchoredWindow::anchor(std::size_t level) const {
  for (const auto& a : anchors) {
    if (a.level == level) return a;
  }
  throw std::out_of_range("no anchor at level " + std::to_string(level));
}

AnchoredWindow parse(const ConstructionSequence& seq, const WordId& top, std::uint64_t position,
                     std::uint64_t cap) {
  seq.check_word_id(top);
  const std::uint64_t total = seq.length_u64(top.level);
  if (position >= total) throw std::invalid_argument("position out of range");

  AnchoredWindow out;
  out.symbols = expand(seq, top, cap);
  out.origin = position;
  out.anchors.resize(top.level + 1);
  out.anchors[top.level] = Anchor{top.level, position, top};
  WordId cur = top;
  for (std::size_t n = top.level; n-- > 0;) {
    const std::uint64_t kn = seq.length_u64(n);
    const std::uint64_t block = (position / kn) % seq.coeffs().k_u64(n);
    cur = WordId{n, seq.word(n + 1, cur.index)[block]};
    out.anchors[n] = Anchor{n, position % kn, cur};
  }
  return out;
}

std::vector<std::uint64_t> phi(const ConstructionSequence& seq, const WordId& top,
                               std::uint64_t position, std::size_t depth) {
  seq.check_word_id(top);
  if (depth > top.level) throw std::invalid_argument("phi depth exceeds the word level");
  if (position >= seq.length_u64(top.level)) throw std::invalid_argument("position out of range");
  std::vector<std::uint64_t> digits(depth);
  for (std::size_t n = 0; n < depth; ++n)
    digits[n] = (position / seq.length_u64(n)) % seq.coeffs().k_u64(n);
  return digits;
}

AnchoredWindow materialize(const ConstructionSequence& seq, const std::vector<Anchor>& anchors,
                           std::uint64_t cap) {
  if (anchors.empty()) throw std::invalid_argument("materialize requires at least one anchor");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const Anchor& a = anchors[i];
    if (i > 0 && a.level != anchors[i - 1].level + 1)
      throw std::invalid_argument("anchors must cover contiguous ascending levels");
    if (a.word.level != a.level) throw std::invalid_argument("anchor word level mismatch");
    seq.check_word_id(a.word);
    if (a.offset >= seq.length_u64(a.level))
      throw std::invalid_argument("anchor offset out of range at level " +
                                  std::to_string(a.level));
  }
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    const Anchor& lo = anchors[i];
    const Anchor& hi = anchors[i + 1];
    const std::uint64_t kn = seq.length_u64(lo.level);
    if (hi.offset % kn != lo.offset)
      throw std::invalid_argument("incompatible anchors at level " + std::to_string(lo.level) +
                                  ": offsets disagree mod K_n");
    const std::uint64_t block = hi.offset / kn;
    if (seq.word(hi.level, hi.word.index)[block] != lo.word.index)
      throw std::invalid_argument("incompatible anchors at level " + std::to_string(lo.level) +
                                  ": containing block is a different word");
  }

  AnchoredWindow out;
  const Anchor& top = anchors.back();
  out.symbols = expand(seq, top.word, cap);
  out.origin = top.offset;
  out.anchors = anchors;
  return out;
}

AnchoredWindow psi_window(const ConstructionSequence& seq,
                          const std::vector<std::uint64_t>& digits, std::size_t from_level,
                          std::uint64_t cap) {
  if (!seq.generator())
    throw std::invalid_argument("psi requires a builder-generated sequence");
  const std::string& builder = seq.generator()->name;
  const std::size_t depth = digits.size();
  if (depth == 0) throw std::invalid_argument("psi requires at least one digit");
  if (from_level >= depth) throw std::invalid_argument("stabilization index beyond digit depth");
  if (depth > seq.max_level())
    throw CapExceeded("psi needs materialized level " + std::to_string(depth));
  for (std::size_t n = 0; n < depth; ++n) {
    if (digits[n] >= seq.coeffs().k_u64(n))
      throw std::invalid_argument("digit x(" + std::to_string(n) + ") out of range");
  }

  // The digit must land in the tail every next-level word shares, which pins
  // the principal word of that level independent of the container.
  auto shared_tail_word = [&](std::size_t n) -> std::uint64_t {
    const std::uint64_t x = digits[n];
    if (builder == "two_word") {
      if (x < 10)
        throw std::invalid_argument("psi: digit x(" + std::to_string(n) + ") = " +
                                    std::to_string(x) + " is below the two_word threshold 10");
      return x % 2 == 0 ? 0 : 1;  // tail block j holds a_n iff j is even
    }
    if (builder == "small_fingers") {
      const BigInt s = small_fingers_level_size(seq, n);
      const std::uint64_t prefix = 3 * to_u64(s);
      if (x < prefix)
        throw std::invalid_argument("psi: digit x(" + std::to_string(n) + ") = " +
                                    std::to_string(x) + " lies in the permutation prefix (< " +
                                    std::to_string(prefix) + ")");
      return x % to_u64(s);  // suffix block j holds word j mod s_n
    }
    throw std::invalid_argument("psi is defined for two_word and small_fingers sequences");
  };

  std::vector<Anchor> anchors;
  std::uint64_t r = 0;  // r_n = sum_{i<n} x(i) K_i, accumulated level by level
  for (std::size_t n = 0; n < depth; ++n) {
    if (n >= from_level)
      anchors.push_back(Anchor{n, r, WordId{n, shared_tail_word(n)}});
    r += digits[n] * seq.length_u64(n);
  }
  anchors.push_back(Anchor{depth, r, WordId{depth, 0}});  // deterministic container
  return materialize(seq, anchors, cap);
}

}  // namespace odoseq
