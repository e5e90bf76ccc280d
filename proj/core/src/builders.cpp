#include "odoseq/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace odoseq {

namespace {

constexpr std::uint64_t kTableCap = 1u << 21;  // max blocks per materialized word

// Materialization budget for a^e: refuse numbers past ~4 MB.
constexpr unsigned long kMaxPowerBits = 1ul << 25;

bool power_materializable(std::uint64_t a, const BigInt& e) {
  if (e < 0 || !e.fits_ulong_p()) return false;
  const std::size_t abits = mpz_sizeinbase(BigInt(static_cast<unsigned long>(a)).get_mpz_t(), 2);
  const unsigned long eu = e.get_ui();
  return eu <= kMaxPowerBits && eu * abits <= kMaxPowerBits;
}

BigInt pow_a(std::uint64_t a, const BigInt& e) {
  return big_pow(BigInt(static_cast<unsigned long>(a)), e);
}

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

// --- two-word builder -------------------------------------------------------

ConstructionSequence build_two_word(const std::vector<std::uint64_t>& ks, std::size_t levels) {
  if (levels > ks.size())
    throw std::invalid_argument("two_word: need a coefficient for every materialized level");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 10)
      throw std::invalid_argument("two_word: k_" + std::to_string(i) + " = " +
                                  std::to_string(ks[i]) + " is below the minimum 10");
  }
  std::vector<std::vector<Word>> tables;
  tables.reserve(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    const std::uint64_t k = ks[n];
    Word a_word(k), b_word(k);
    for (std::uint64_t j = 0; j < k; ++j) {
      std::uint32_t tail = j % 2 == 0 ? 0 : 1;  // shared alternating tail
      a_word[j] = j < 3 ? 0 : (j < 6 ? 1 : tail);
      b_word[j] = j < 3 ? 1 : (j < 6 ? 0 : tail);
    }
    tables.push_back({std::move(a_word), std::move(b_word)});
  }
  GeneratorDescriptor gen{"two_word", {{"levels", std::to_string(levels)}}};
  return ConstructionSequence(Alphabet({"a", "b"}), CoefficientSequence::from_u64(ks),
                              std::move(tables), gen);
}

// --- alternating complement --------------------------------------------------

ConstructionSequence build_alternating_complement(std::size_t levels) {
  std::vector<BigInt> ks;
  std::vector<std::vector<Word>> tables;
  BigInt K = 1;
  for (std::size_t n = 0; n < levels; ++n) {
    const BigInt k = 2 * K;
    if (k > kTableCap)
      throw CapExceeded("alternating: k_" + std::to_string(n) + " = " + k.get_str() +
                        " blocks exceed the table cap");
    const std::uint64_t ku = to_u64(k);
    Word v(ku), vbar(ku);
    for (std::uint64_t j = 0; j < ku; ++j) {
      v[j] = j < ku / 2 ? 0 : 1;   // w^{K_n} then bar w^{K_n}
      vbar[j] = j < ku / 2 ? 1 : 0;
    }
    tables.push_back({std::move(v), std::move(vbar)});
    ks.push_back(k);
    K *= k;
  }
  GeneratorDescriptor gen{"alternating", {{"levels", std::to_string(levels)}}};
  return ConstructionSequence(Alphabet({"0", "1"}), CoefficientSequence(std::move(ks)),
                              std::move(tables), gen);
}

// --- small fingers -----------------------------------------------------------

std::vector<std::uint64_t> lehmer_unrank(std::uint64_t n, const BigInt& rank) {
  if (rank < 0 || rank >= factorial(n)) throw std::invalid_argument("rank out of range");
  // Factorial-base digits, most significant first.
  std::vector<BigInt> digits(n, 0);
  BigInt rest = rank;
  for (std::uint64_t i = 2; i <= n; ++i) {
    digits[n - i] = rest % i;
    rest /= i;
  }
  std::vector<std::uint64_t> pool(n), perm(n);
  for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t d = to_u64(digits[i]);
    perm[i] = pool[d];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return perm;
}

BigInt lehmer_rank(const std::vector<std::uint64_t>& perm) {
  const std::uint64_t n = perm.size();
  std::vector<std::uint64_t> pool(n);
  for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
  BigInt rank = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto it = std::find(pool.begin(), pool.end(), perm[i]);
    if (it == pool.end()) throw std::invalid_argument("not a permutation");
    rank = rank * (n - i) + (it - pool.begin());
    pool.erase(it);
  }
  return rank;
}

namespace {

// s_0 = 3, s_{n+1} = s_n! - 1, for as long as the factorial is computable.
std::vector<BigInt> small_fingers_sizes(std::size_t max_level) {
  std::vector<BigInt> s{3};
  while (s.size() <= max_level) {
    const BigInt& prev = s.back();
    if (!prev.fits_ulong_p())
      throw CapExceeded("small_fingers: level size s_" + std::to_string(s.size()) +
                        " is a factorial of " + prev.get_str() + " and cannot be computed");
    s.push_back(factorial(prev.get_ui()) - 1);
  }
  return s;
}

struct PrefixSplit {
  BigInt c;
  BigInt d;
};

PrefixSplit split_k(const BigInt& k, const BigInt& s) {
  if (k < 3 * s) throw std::invalid_argument("small_fingers: k < 3 s_n");
  PrefixSplit out;
  const BigInt rest = k - 3 * s;
  out.c = rest / s;
  out.d = rest % s;
  return out;
}

Word small_fingers_blocks(std::uint64_t s, std::uint64_t k, const std::vector<std::uint64_t>& sigma) {
  const PrefixSplit split = split_k(BigInt(static_cast<unsigned long>(k)),
                                    BigInt(static_cast<unsigned long>(s)));
  const std::uint64_t c = to_u64(split.c), d = to_u64(split.d);
  Word blocks;
  blocks.reserve(k);
  for (int rep = 0; rep < 3; ++rep)
    for (std::uint64_t i = 0; i < s; ++i) blocks.push_back(static_cast<std::uint32_t>(sigma[i]));
  for (std::uint64_t rep = 0; rep < c; ++rep)
    for (std::uint64_t i = 0; i < s; ++i) blocks.push_back(static_cast<std::uint32_t>(i));
  for (std::uint64_t i = 0; i < d; ++i) blocks.push_back(static_cast<std::uint32_t>(i));
  return blocks;
}

}  // namespace

ConstructionSequence build_small_fingers(const std::vector<BigInt>& ks,
                                         std::uint64_t enumerate_cap) {
  const std::size_t depth = ks.size();
  if (depth == 0) throw std::invalid_argument("small_fingers: empty coefficient list");
  const auto s = small_fingers_sizes(depth);  // s_0..s_depth
  for (std::size_t n = 0; n < depth; ++n) {
    if (ks[n] < 3 * s[n])
      throw std::invalid_argument("small_fingers: k_" + std::to_string(n) + " < 3 s_" +
                                  std::to_string(n));
    if (n + 1 < depth) {
      const BigInt required = 3 * s[n] * (BigInt(1 << n) + 1) * ks[n];
      if (ks[n + 1] <= required)
        throw std::invalid_argument("small_fingers: growth condition fails at index " +
                                    std::to_string(n + 1) + " (need k > " + required.get_str() +
                                    ")");
    }
  }

  std::vector<std::vector<Word>> tables;
  for (std::size_t n = 0; n < depth; ++n) {
    if (s[n + 1] > enumerate_cap || ks[n] > kTableCap || !s[n].fits_ulong_p()) break;
    const std::uint64_t sn = s[n].get_ui();
    const std::uint64_t kn = to_u64(ks[n]);
    std::vector<Word> table;
    table.reserve(to_u64(s[n + 1]));
    const BigInt count = factorial(sn);
    for (BigInt r = 1; r < count; ++r)  // rank 0 is the identity, excluded
      table.push_back(small_fingers_blocks(sn, kn, lehmer_unrank(sn, r)));
    tables.push_back(std::move(table));
  }

  GeneratorDescriptor gen{"small_fingers", {{"enumerate_cap", std::to_string(enumerate_cap)}}};
  return ConstructionSequence(Alphabet({"a", "b", "c"}), CoefficientSequence(ks),
                              std::move(tables), gen);
}

namespace {

void require_small_fingers(const ConstructionSequence& seq) {
  if (!seq.generator() || seq.generator()->name != "small_fingers")
    throw std::invalid_argument("sequence was not produced by the small_fingers builder");
}

}  // namespace

BigInt small_fingers_level_size(const ConstructionSequence& seq, std::size_t level) {
  require_small_fingers(seq);
  if (level > seq.coeffs().depth())
    throw std::out_of_range("level beyond the coefficient depth");
  return small_fingers_sizes(level)[level];
}

std::vector<std::uint32_t> small_fingers_word_blocks(const ConstructionSequence& seq,
                                                     std::size_t level, const BigInt& rank) {
  require_small_fingers(seq);
  if (level == 0 || level > seq.coeffs().depth())
    throw std::out_of_range("no such level");
  const auto s = small_fingers_sizes(level - 1);
  const BigInt& s_below = s[level - 1];
  if (!s_below.fits_ulong_p())
    throw CapExceeded("level " + std::to_string(level) + " is beyond addressable depth");
  if (rank < 1 || rank >= factorial(s_below.get_ui()))
    throw std::invalid_argument("permutation rank out of range (identity excluded)");
  return small_fingers_blocks(s_below.get_ui(), seq.coeffs().k_u64(level - 1),
                              lehmer_unrank(s_below.get_ui(), rank));
}

SmallFingersLevelStats small_fingers_stats(const ConstructionSequence& seq, std::size_t level) {
  require_small_fingers(seq);
  if (level >= seq.coeffs().depth())
    throw std::out_of_range("no coefficient for level " + std::to_string(level));
  const auto s = small_fingers_sizes(level);
  SmallFingersLevelStats out;
  out.s = s[level];
  const BigInt& k = seq.coeffs().k(level);
  const PrefixSplit split = split_k(k, out.s);
  out.c = split.c;
  out.d = split.d;
  // Every word appears c+3 times per next-level word; the first d words once more.
  out.f_min = make_rational(split.c + 3, k);
  out.f_max = make_rational(split.c + 3 + (split.d > 0 ? 1 : 0), k);
  return out;
}

// --- painting ------------------------------------------------------------

PaintingPlan paint_levels(const std::vector<std::string>& inventory, std::uint64_t a,
                          std::uint64_t block_length, std::uint64_t capacity_blocks) {
  if (inventory.empty()) throw std::invalid_argument("paint_levels: empty inventory");
  std::set<std::string> seen;
  for (const auto& w : inventory) {
    if (w.size() != block_length)
      throw std::invalid_argument("paint_levels: inventory word of length " +
                                  std::to_string(w.size()) + ", expected " +
                                  std::to_string(block_length));
    if (!seen.insert(w).second)
      throw std::invalid_argument("paint_levels: duplicate inventory word");
  }
  const BigInt word_bound = 2 * pow_a(a, block_length);
  if (BigInt(static_cast<unsigned long>(inventory.size())) > word_bound)
    throw std::invalid_argument("paint_levels: inventory exceeds the 2 a^{K_n} word bound");

  PaintingPlan plan;
  plan.block_length = block_length;
  plan.inventory = inventory;
  plan.d_next = 4 * BigInt(static_cast<unsigned long>(block_length)) * pow_a(a, block_length);
  if (capacity_blocks == 0) {
    plan.mode = "strict";
    plan.capacity_blocks = to_u64(4 * pow_a(a, block_length), "painting capacity");
  } else {
    plan.mode = "demo";
    plan.capacity_blocks = capacity_blocks;
  }
  const std::uint64_t needed = 2 * inventory.size();
  if (plan.capacity_blocks < needed)
    throw std::invalid_argument("paint_levels: capacity shortfall, need " +
                                std::to_string(needed) + " blocks but only " +
                                std::to_string(plan.capacity_blocks) + " available");

  plan.assignment.resize(plan.capacity_blocks);
  for (std::uint64_t b = 0; b < plan.capacity_blocks; ++b)
    plan.assignment[b] = b < needed ? static_cast<std::uint32_t>(b / 2) : 0;
  return plan;
}

// --- tower budget ----------------------------------------------------------

BigInt BudgetCoefficient::value(std::uint64_t a) const {
  if (is_explicit()) return offset;
  if (!power_materializable(a, exponent))
    throw CapExceeded("coefficient " + describe(a) + " cannot be materialized");
  return scale * pow_a(a, exponent) + offset;
}

std::string BudgetCoefficient::describe(std::uint64_t a) const {
  if (is_explicit()) return offset.get_str();
  std::string s = scale.get_str() + "*" + std::to_string(a) + "^" + exponent.get_str();
  if (offset != 0) s += "+" + offset.get_str();
  return s;
}

namespace {

// Exact three-way comparison of c1 a^{e1} + o1 vs c2 a^{e2} + o2 without
// materializing unrepresentable powers. Guards keep every branch sound.
int compare_budget_forms(std::uint64_t a, const BudgetCoefficient& lhs,
                         const BudgetCoefficient& rhs) {
  auto try_value = [&](const BudgetCoefficient& f) -> std::optional<BigInt> {
    if (f.is_explicit()) return f.offset;
    if (!power_materializable(a, f.exponent)) return std::nullopt;
    return f.scale * pow_a(a, f.exponent) + f.offset;
  };
  const auto lv = try_value(lhs);
  const auto rv = try_value(rhs);
  if (lv && rv) return lv < rv ? -1 : (*lv == *rv ? 0 : 1);

  // One explicit side against an unmaterializable power: decide by bit length.
  if (lv && !rhs.is_explicit()) {
    if (rhs.scale < 1 || rhs.offset < 0) throw std::invalid_argument("unsupported budget form");
    if (BigInt(bit_length(*lv)) <= rhs.exponent) return -1;  // lv < 2^{e2} <= rhs
    throw CapExceeded("cannot decide comparison against " + rhs.describe(a));
  }
  if (rv && !lhs.is_explicit()) return -compare_budget_forms(a, rhs, lhs);

  // Both are power forms with unmaterializable powers.
  if (lhs.scale < 1 || rhs.scale < 1) throw std::invalid_argument("unsupported budget form");
  const BudgetCoefficient& hi = lhs.exponent >= rhs.exponent ? lhs : rhs;
  const BudgetCoefficient& lo = lhs.exponent >= rhs.exponent ? rhs : lhs;
  const int sign = lhs.exponent >= rhs.exponent ? 1 : -1;
  const BigInt d = hi.exponent - lo.exponent;
  // C = hi.scale * a^d - lo.scale decides unless it vanishes.
  BigInt C;
  if (power_materializable(a, d)) {
    C = hi.scale * pow_a(a, d) - lo.scale;
  } else {
    // a^d is astronomically larger than any sane scale.
    if (bit_length(lo.scale) >= 63) throw std::invalid_argument("scale too large");
    C = 1;
  }
  if (C == 0) {
    const BigInt diff = hi.offset - lo.offset;
    return sign * (diff < 0 ? -1 : (diff == 0 ? 0 : 1));
  }
  const BigInt off_gap = hi.offset >= lo.offset ? hi.offset - lo.offset : lo.offset - hi.offset;
  // |C| a^{e_lo} dominates the offset gap whenever 2^{e_lo} exceeds it.
  if (BigInt(bit_length(off_gap)) >= lo.exponent)
    throw CapExceeded("offset gap too large for symbolic comparison");
  return sign * (C > 0 ? 1 : -1);
}

}  // namespace

TowerBudget check_tower_budget(std::uint64_t a, const std::vector<BudgetCoefficient>& ks,
                               std::size_t n_max) {
  if (a < 2) throw std::invalid_argument("alphabet size must be >= 2");
  TowerBudget budget;
  budget.a = a;
  budget.sum_upper_bound = Rational(0);

  std::optional<BigInt> K = BigInt(1);  // K_{n-1}, while materializable
  bool all_hold = true;
  const std::size_t top = std::min(n_max, ks.size());
  for (std::size_t n = 1; n <= top; ++n) {
    const BudgetCoefficient& k = ks[n - 1];
    if (!K) break;  // cannot even express the threshold exponent

    TowerBudgetEntry entry;
    entry.tower_level = n;
    entry.coefficient_index = n - 1;
    entry.bound = make_rational(1, pow10(static_cast<unsigned long>(n + 1)));

    // mu(D_n) < 10^{-(n+1)}  <=>  k_{n-1} > 4 a^{K_{n-1}} 10^{n+1}.
    const BudgetCoefficient threshold =
        BudgetCoefficient::power_form(4 * pow10(static_cast<unsigned long>(n + 1)), *K, 0);
    entry.holds = compare_budget_forms(a, k, threshold) > 0;

    if (power_materializable(a, *K)) {
      try {
        const BigInt kv = k.value(a);
        entry.mu = make_rational(4 * pow_a(a, *K), kv);
        entry.symbolic = false;
      } catch (const CapExceeded&) {
        entry.symbolic = true;
      }
    } else {
      entry.symbolic = true;
    }

    if (!entry.holds && !budget.first_violation) budget.first_violation = n;
    all_hold = all_hold && entry.holds;
    if (entry.mu) {
      budget.sum_upper_bound += *entry.mu;
    } else if (entry.holds) {
      budget.sum_upper_bound += entry.bound;
    } else {
      budget.sum_upper_bound += Rational(1);  // no usable bound for a violator
    }
    budget.entries.push_back(std::move(entry));

    // Advance K_n = K_{n-1} * k_{n-1} while the product stays representable.
    try {
      K = *K * k.value(a);
    } catch (const CapExceeded&) {
      K = std::nullopt;
    }
  }
  budget.sum_ok = all_hold && budget.sum_upper_bound < make_rational(1, 4);
  return budget;
}

TowerBudget check_tower_budget(std::uint64_t a, const CoefficientSequence& ks,
                               std::size_t n_max) {
  std::vector<BudgetCoefficient> forms;
  forms.reserve(ks.depth());
  for (std::size_t i = 0; i < ks.depth(); ++i)
    forms.push_back(BudgetCoefficient::explicit_value(ks.k(i)));
  return check_tower_budget(a, forms, n_max);
}

std::vector<BudgetCoefficient> admissible_budget_coefficients(std::uint64_t a,
                                                              std::size_t count) {
  std::vector<BudgetCoefficient> out;
  std::optional<BigInt> K = BigInt(1);
  for (std::size_t m = 0; m < count; ++m) {
    if (!K)
      throw CapExceeded("admissible coefficients beyond index " + std::to_string(m) +
                        " have unrepresentable exponents");
    out.push_back(
        BudgetCoefficient::power_form(4 * pow10(static_cast<unsigned long>(m + 2)), *K, 1));
    try {
      K = *K * out.back().value(a);
    } catch (const CapExceeded&) {
      K = std::nullopt;
    }
  }
  return out;
}

}  // namespace odoseq
