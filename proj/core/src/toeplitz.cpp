#include "odoseq/toeplitz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace odoseq {

namespace {

std::uint64_t residue(std::int64_t k, std::uint64_t period) {
  const std::int64_t r = k % static_cast<std::int64_t>(period);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(period) : r);
}

}  // namespace

ToeplitzSpec::ToeplitzSpec(Alphabet alphabet, std::vector<ToeplitzStage> stages)
    : alphabet_(std::move(alphabet)), stages_(std::move(stages)) {
  std::uint64_t prev = 1;
  for (std::size_t m = 0; m < stages_.size(); ++m) {
    const auto& stage = stages_[m];
    if (stage.period < 1) throw std::invalid_argument("stage period must be >= 1");
    if (stage.period % prev != 0)
      throw std::invalid_argument("stage " + std::to_string(m + 1) +
                                  " period does not extend the previous one");
    prev = stage.period;
    for (const auto& [r, sym] : stage.fill) {
      if (r >= stage.period) throw std::invalid_argument("fill residue out of range");
      if (sym >= alphabet_.size()) throw std::invalid_argument("fill symbol out of range");
      // A later stage may not redefine a position an earlier stage pinned.
      for (std::size_t e = 0; e < m; ++e) {
        auto it = stages_[e].fill.find(r % stages_[e].period);
        if (it != stages_[e].fill.end() && it->second != sym)
          throw std::invalid_argument("stage " + std::to_string(m + 1) +
                                      " conflicts with stage " + std::to_string(e + 1) +
                                      " at residue " + std::to_string(r));
      }
    }
  }
}

ToeplitzSpec::Lookup ToeplitzSpec::at(std::int64_t k) const {
  Lookup out;
  for (std::size_t m = 0; m < stages_.size(); ++m) {
    out.stages_consulted = m + 1;
    auto it = stages_[m].fill.find(residue(k, stages_[m].period));
    if (it != stages_[m].fill.end()) {
      out.symbol = it->second;
      return out;
    }
  }
  return out;
}

std::vector<std::uint32_t> toeplitz_window(const ToeplitzSpec& spec, std::int64_t lo,
                                           std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty window bounds");
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t k = lo; k < hi; ++k) {
    const auto look = spec.at(k);
    if (!look.symbol)
      throw std::invalid_argument("position " + std::to_string(k) +
                                  " is not determined after consulting " +
                                  std::to_string(look.stages_consulted) + " stages");
    out.push_back(*look.symbol);
  }
  return out;
}

std::vector<std::int64_t> per_set(const ToeplitzSpec& spec, std::uint64_t p, std::int64_t lo,
                                  std::int64_t hi, PerMode mode) {
  if (p < 1) throw std::invalid_argument("period must be >= 1");
  std::vector<std::int64_t> out;
  if (mode == PerMode::Exact) {
    for (std::int64_t k = lo; k < hi; ++k) {
      for (const auto& stage : spec.stages()) {
        if (p % stage.period != 0) continue;
        if (stage.fill.count(residue(k, stage.period))) {
          out.push_back(k);
          break;
        }
      }
    }
    return out;
  }
  const auto window = toeplitz_window(spec, lo, hi);
  for (std::int64_t k = lo; k < hi; ++k) {
    bool periodic = true;
    const std::uint32_t ref = window[static_cast<std::size_t>(k - lo)];
    for (std::int64_t q = k % static_cast<std::int64_t>(p); q < hi && periodic;
         q += static_cast<std::int64_t>(p)) {
      if (q < lo) continue;
      periodic = window[static_cast<std::size_t>(q - lo)] == ref;
    }
    if (periodic) out.push_back(k);
  }
  return out;
}

namespace {

using Block = std::vector<std::uint32_t>;

// c) and d) evidence for one divisibility link, over window[0, bound).
EssentialPeriodLink check_link(const std::vector<std::uint32_t>& window, std::uint64_t from,
                               std::uint64_t to) {
  EssentialPeriodLink link;
  link.from_period = from;
  link.to_period = to;
  link.checked_bound = window.size();

  auto block_at = [&](std::uint64_t i) {
    return Block(window.begin() + static_cast<std::ptrdiff_t>(i),
                 window.begin() + static_cast<std::ptrdiff_t>(i + from));
  };

  std::map<Block, std::uint64_t> initial;  // blocks aligned below K_{n+1}
  for (std::uint64_t i = 0; i + from <= to; i += from) ++initial[block_at(i)];
  link.distinct_blocks = initial.size();
  link.min_occurrences = UINT64_MAX;
  for (const auto& [block, count] : initial)
    link.min_occurrences = std::min(link.min_occurrences, count);
  link.d_ok = link.min_occurrences >= 2;

  link.c_ok = true;
  for (std::uint64_t k = 0; k + from <= window.size(); k += from) {
    if (!initial.count(block_at(k))) {
      link.c_ok = false;
      break;
    }
  }
  return link;
}

}  // namespace

EssentialPeriodList verify_essential_periods(const ToeplitzSpec& spec,
                                             const std::vector<std::uint64_t>& periods,
                                             std::uint64_t window_bound) {
  EssentialPeriodList out;
  out.periods = periods;
  if (periods.empty()) {
    out.complete = true;
    return out;
  }
  const auto window = toeplitz_window(spec, 0, static_cast<std::int64_t>(window_bound));
  bool all_ok = true;
  for (std::size_t i = 0; i + 1 < periods.size(); ++i) {
    if (periods[i + 1] % periods[i] != 0 || periods[i + 1] <= periods[i])
      throw std::invalid_argument("periods must be divisibility-increasing");
    if (periods[i + 1] > window_bound)
      throw std::invalid_argument("window bound too small for period " +
                                  std::to_string(periods[i + 1]));
    auto link = check_link(window, periods[i], periods[i + 1]);
    all_ok = all_ok && link.c_ok && link.d_ok;
    out.links.push_back(std::move(link));
  }
  // b) evidence: the prefix of Z covered by the selected Per sets.
  std::uint64_t k = 0;
  for (; k < window_bound; ++k) {
    bool covered = false;
    for (auto p : out.periods) {
      for (const auto& stage : spec.stages()) {
        if (p % stage.period == 0 &&
            stage.fill.count(residue(static_cast<std::int64_t>(k), stage.period))) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) break;
  }
  out.coverage_prefix_end = k;
  out.complete = all_ok;
  return out;
}

EssentialPeriodList select_essential_periods(const ToeplitzSpec& spec, std::size_t count,
                                             std::uint64_t window_bound,
                                             std::uint64_t min_ratio) {
  EssentialPeriodList out;
  if (count == 0) {
    out.complete = true;
    return out;
  }
  const auto window = toeplitz_window(spec, 0, static_cast<std::int64_t>(window_bound));

  std::set<std::uint64_t> candidates{1};
  for (const auto& stage : spec.stages()) candidates.insert(stage.period);

  out.periods.push_back(1);
  while (out.periods.size() < count) {
    const std::uint64_t last = out.periods.back();
    bool advanced = false;
    for (auto p : candidates) {
      if (p <= last || p % last != 0) continue;
      if (min_ratio > 1 && p < last * min_ratio) continue;
      if (p > window_bound) break;
      auto link = check_link(window, last, p);
      if (!link.c_ok || !link.d_ok) continue;
      out.links.push_back(std::move(link));
      out.periods.push_back(p);
      advanced = true;
      break;
    }
    if (!advanced) {
      out.diagnostic = "no admissible period above " + std::to_string(last) +
                       " within window bound " + std::to_string(window_bound);
      break;
    }
  }
  const auto verified = verify_essential_periods(spec, out.periods, window_bound);
  out.coverage_prefix_end = verified.coverage_prefix_end;
  out.complete = out.periods.size() == count;
  return out;
}

ConstructionSequence toeplitz_augment(const ToeplitzSpec& spec,
                                      const std::vector<std::uint64_t>& periods,
                                      const ConstructionSequence& odo_component) {
  if (periods.size() < 2 || periods.front() != 1)
    throw std::invalid_argument("augment needs periods starting at 1");
  const std::size_t levels = periods.size() - 1;
  if (odo_component.max_level() < levels)
    throw std::invalid_argument("odometer component lacks materialized levels");
  for (std::size_t i = 0; i + 1 < periods.size(); ++i) {
    if (periods[i + 1] % periods[i] != 0)
      throw std::invalid_argument("periods must be divisibility-increasing");
    const BigInt ratio(static_cast<unsigned long>(periods[i + 1] / periods[i]));
    if (odo_component.coeffs().k(i) != ratio)
      throw std::invalid_argument("odometer coefficient k_" + std::to_string(i) +
                                  " does not match the period ratio " + ratio.get_str());
  }
  if (odo_component.alphabet().size() != 2)
    throw std::invalid_argument("augment expects the two-word odometer presentation");

  const auto window = toeplitz_window(spec, 0, static_cast<std::int64_t>(periods.back()));

  // Aligned-block inventories per level, ordered by first occurrence below
  // the next period.
  std::vector<std::vector<Block>> inventory(levels);
  std::vector<std::map<Block, std::uint32_t>> inv_index(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    const std::uint64_t kn = periods[n];
    for (std::uint64_t i = 0; i + kn <= periods[n + 1]; i += kn) {
      Block b(window.begin() + static_cast<std::ptrdiff_t>(i),
              window.begin() + static_cast<std::ptrdiff_t>(i + kn));
      if (inv_index[n].emplace(b, static_cast<std::uint32_t>(inventory[n].size())).second)
        inventory[n].push_back(std::move(b));
    }
  }

  // Product alphabet = V_0: (1-block occurring below K_1) x odometer symbol.
  std::vector<std::string> tokens;
  for (const auto& b : inventory[0]) {
    for (std::size_t j = 0; j < 2; ++j)
      tokens.push_back(spec.alphabet().token(b[0]) + "|" + odo_component.alphabet().token(j));
  }
  Alphabet product_alphabet(tokens);

  std::vector<BigInt> ks;
  for (std::size_t i = 0; i + 1 < periods.size(); ++i)
    ks.emplace_back(static_cast<unsigned long>(periods[i + 1] / periods[i]));

  std::vector<std::vector<Word>> tables(levels >= 1 ? levels - 1 : 0);
  for (std::size_t n = 1; n < levels; ++n) {
    const std::uint64_t kn_below = periods[n - 1];
    const std::uint64_t ratio = periods[n] / kn_below;
    for (std::uint32_t bi = 0; bi < inventory[n].size(); ++bi) {
      const Block& blk = inventory[n][bi];
      for (std::uint32_t j = 0; j < 2; ++j) {
        const Word& odo_word = odo_component.word(n, j);
        Word constituents(ratio);
        for (std::uint64_t t = 0; t < ratio; ++t) {
          Block sub(blk.begin() + static_cast<std::ptrdiff_t>(t * kn_below),
                    blk.begin() + static_cast<std::ptrdiff_t>((t + 1) * kn_below));
          auto it = inv_index[n - 1].find(sub);
          if (it == inv_index[n - 1].end())
            throw std::invalid_argument(
                "condition c) fails: a level-" + std::to_string(n - 1) +
                " block inside an occurring level-" + std::to_string(n) +
                " block does not occur below its period");
          constituents[t] = it->second * 2 + odo_word[t];
        }
        tables[n - 1].push_back(std::move(constituents));
      }
    }
  }

  std::string periods_str;
  for (std::size_t i = 0; i < periods.size(); ++i)
    periods_str += (i ? "," : "") + std::to_string(periods[i]);
  GeneratorDescriptor gen{"toeplitz_augment", {{"periods", periods_str}}};
  return ConstructionSequence(std::move(product_alphabet), CoefficientSequence(std::move(ks)),
                              std::move(tables), gen);
}

AperiodicityReport aperiodicity_scan(const std::vector<std::uint32_t>& window,
                                     std::uint64_t p_max, std::uint64_t lo, std::uint64_t hi) {
  if (hi > window.size() || lo > hi) throw std::invalid_argument("interior range out of window");
  AperiodicityReport report;
  report.p_max = p_max;
  report.lo = lo;
  report.hi = hi;
  const std::int64_t size = static_cast<std::int64_t>(window.size());
  for (std::uint64_t k = lo; k < hi; ++k) {
    for (std::uint64_t p = 1; p <= p_max; ++p) {
      ++report.pairs_checked;
      const std::uint32_t ref = window[k];
      std::uint64_t found = 0;
      bool comparable = false;
      for (std::uint64_t b = 1; found == 0; ++b) {
        const std::int64_t fwd = static_cast<std::int64_t>(k) + static_cast<std::int64_t>(b * p);
        const std::int64_t bwd = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(b * p);
        const bool fwd_in = fwd < size;
        const bool bwd_in = bwd >= 0;
        if (!fwd_in && !bwd_in) break;
        comparable = true;
        if (fwd_in && window[static_cast<std::size_t>(fwd)] != ref) found = b;
        if (!found && bwd_in && window[static_cast<std::size_t>(bwd)] != ref) found = b;
      }
      if (found != 0) {
        report.max_witness = std::max(report.max_witness, found);
      } else if (!comparable) {
        ++report.skipped;  // p reaches past the window: vacuous
      } else {
        ++report.failure_count;
        if (report.failures.size() < 32) report.failures.push_back({k, p});
      }
    }
  }
  return report;
}

}  // namespace odoseq
