#include "odoseq/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace odoseq {

namespace {

json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v.fits_ulong_p()) return json(v.get_ui());
  return json(v.get_str());  // decimal string for anything larger
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

}  // namespace

json sequence_to_json(const ConstructionSequence& seq) {
  json j;
  j["alphabet"] = seq.alphabet().tokens();
  json coeffs = json::array();
  for (const auto& k : seq.coeffs().coeffs()) coeffs.push_back(bigint_to_json(k));
  j["coeffs"] = std::move(coeffs);
  json levels = json::array();
  for (std::size_t n = 1; n <= seq.max_level(); ++n) {
    json words = json::array();
    for (const auto& w : seq.level_table(n)) words.push_back(w);
    levels.push_back(json{{"words", std::move(words)}});
  }
  j["levels"] = std::move(levels);
  if (seq.generator()) {
    json params = json::object();
    for (const auto& [key, value] : seq.generator()->params) params[key] = value;
    j["generator"] = json{{"name", seq.generator()->name}, {"params", std::move(params)}};
  }
  return j;
}

ConstructionSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("coeffs") ||
      !j.contains("levels"))
    throw std::invalid_argument("sequence JSON needs alphabet, coeffs and levels");
  Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
  std::vector<BigInt> ks;
  for (const auto& e : j.at("coeffs")) ks.push_back(bigint_from_json(e));
  std::vector<std::vector<Word>> tables;
  for (const auto& level : j.at("levels")) {
    std::vector<Word> table;
    for (const auto& w : level.at("words")) table.push_back(w.get<Word>());
    tables.push_back(std::move(table));
  }
  std::optional<GeneratorDescriptor> gen;
  if (j.contains("generator")) {
    GeneratorDescriptor g;
    g.name = j.at("generator").at("name").get<std::string>();
    if (j.at("generator").contains("params")) {
      for (const auto& [key, value] : j.at("generator").at("params").items())
        g.params[key] = value.get<std::string>();
    }
    gen = std::move(g);
  }
  return ConstructionSequence(std::move(alphabet), CoefficientSequence(std::move(ks)),
                              std::move(tables), std::move(gen));
}

json toeplitz_spec_to_json(const ToeplitzSpec& spec) {
  json j;
  j["alphabet"] = spec.alphabet().tokens();
  json stages = json::array();
  for (const auto& stage : spec.stages()) {
    json fill = json::object();
    for (const auto& [r, sym] : stage.fill) fill[std::to_string(r)] = spec.alphabet().token(sym);
    stages.push_back(json{{"period", stage.period}, {"fill", std::move(fill)}});
  }
  j["stages"] = std::move(stages);
  return j;
}

ToeplitzSpec toeplitz_spec_from_json(const json& j) {
  Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
  std::vector<ToeplitzStage> stages;
  for (const auto& s : j.at("stages")) {
    ToeplitzStage stage;
    stage.period = s.at("period").get<std::uint64_t>();
    for (const auto& [key, value] : s.at("fill").items()) {
      const auto idx = alphabet.index_of(value.get<std::string>());
      if (!idx) throw std::invalid_argument("fill symbol not in alphabet: " + value.dump());
      stage.fill[std::stoull(key)] = *idx;
    }
    stages.push_back(std::move(stage));
  }
  return ToeplitzSpec(std::move(alphabet), std::move(stages));
}

json validation_report_to_json(const ValidationReport& report) {
  json levels = json::array();
  for (const auto& lv : report.levels) {
    json e{{"level", lv.level},
           {"block_structure_ok", lv.block_structure_ok},
           {"distinct_ok", lv.distinct_ok},
           {"ur_mode", lv.ur_mode},
           {"clause3_ok", lv.clause3_ok},
           {"minimality_ok", lv.minimality_ok}};
    if (lv.unique_readable) e["unique_readable"] = *lv.unique_readable;
    if (lv.clause3_min_aligned) e["clause3_min_aligned"] = *lv.clause3_min_aligned;
    if (lv.clause3_min_subword) e["clause3_min_subword"] = *lv.clause3_min_subword;
    levels.push_back(std::move(e));
  }
  json witnesses = json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(json{{"clause", w.clause}, {"level", w.level}, {"detail", w.detail}});
  return json{{"ok", report.ok()},
              {"minimal", report.minimal()},
              {"alphabet_ok", report.alphabet_ok},
              {"spacer_fraction", rational_to_string(report.spacer_fraction)},
              {"levels", std::move(levels)},
              {"witnesses", std::move(witnesses)}};
}

json frequency_profile_to_json(const FrequencyProfile& profile) {
  json levels = json::array();
  for (const auto& lv : profile.levels) {
    levels.push_back(json{{"level", lv.level},
                          {"f_max", rational_to_string(lv.f_max)},
                          {"f_min", rational_to_string(lv.f_min)},
                          {"source", lv.source}});
  }
  return json{{"levels", std::move(levels)}};
}

json swp_result_to_json(const SwpResult& result) {
  json j{{"holds", result.holds}};
  if (result.violation_level) {
    j["violation_level"] = *result.violation_level;
    j["f"] = rational_to_string(*result.f);
    j["delta"] = rational_to_string(*result.delta);
  }
  return j;
}

json measure_bound_report_to_json(const MeasureBoundReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"word", e.word_index},
                           {"upper_word", e.upper_index},
                           {"rate", rational_to_string(e.rate)},
                           {"within", e.within}});
  }
  json j{{"n", report.n},
         {"M", report.m},
         {"lower", rational_to_string(report.lower)},
         {"upper", rational_to_string(report.upper)},
         {"all_within", report.all_within},
         {"entries", std::move(entries)}};
  if (report.separation_ok) j["separation_ok"] = *report.separation_ok;
  return j;
}

json thinning_result_to_json(const ThinningResult& result) {
  json rounds = json::array();
  for (const auto& r : result.rounds) {
    json e{{"round", r.round},
           {"delta", rational_to_string(r.delta)},
           {"pick", r.pick},
           {"achieved", rational_to_string(r.achieved)}};
    if (r.table_f) e["table_f"] = rational_to_string(*r.table_f);
    rounds.push_back(std::move(e));
  }
  json j{{"picks", result.picks}, {"complete", result.complete}, {"rounds", std::move(rounds)}};
  if (!result.diagnostic.empty()) j["diagnostic"] = result.diagnostic;
  return j;
}

json tower_budget_to_json(const TowerBudget& budget) {
  json entries = json::array();
  for (const auto& e : budget.entries) {
    json entry{{"tower_level", e.tower_level},
               {"coefficient_index", e.coefficient_index},
               {"bound", rational_to_string(e.bound)},
               {"holds", e.holds},
               {"symbolic", e.symbolic}};
    if (e.mu) entry["mu"] = rational_to_string(*e.mu);
    entries.push_back(std::move(entry));
  }
  json j{{"a", budget.a},
         {"entries", std::move(entries)},
         {"sum_upper_bound", rational_to_string(budget.sum_upper_bound)},
         {"sum_ok", budget.sum_ok}};
  if (budget.first_violation) j["first_violation"] = *budget.first_violation;
  return j;
}

json painting_plan_to_json(const PaintingPlan& plan) {
  return json{{"block_length", plan.block_length},
              {"capacity_blocks", plan.capacity_blocks},
              {"mode", plan.mode},
              {"d_next", plan.d_next.get_str()},
              {"inventory", plan.inventory},
              {"assignment", plan.assignment}};
}

json essential_period_list_to_json(const EssentialPeriodList& list) {
  json links = json::array();
  for (const auto& l : list.links) {
    links.push_back(json{{"from", l.from_period},
                         {"to", l.to_period},
                         {"c_ok", l.c_ok},
                         {"d_ok", l.d_ok},
                         {"checked_bound", l.checked_bound},
                         {"distinct_blocks", l.distinct_blocks},
                         {"min_occurrences", l.min_occurrences}});
  }
  json j{{"periods", list.periods},
         {"links", std::move(links)},
         {"coverage_prefix_end", list.coverage_prefix_end},
         {"complete", list.complete}};
  if (!list.diagnostic.empty()) j["diagnostic"] = list.diagnostic;
  return j;
}

json aperiodicity_report_to_json(const AperiodicityReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back(json{{"position", f.position}, {"period", f.period}});
  return json{{"p_max", report.p_max},
              {"lo", report.lo},
              {"hi", report.hi},
              {"pairs_checked", report.pairs_checked},
              {"max_witness", report.max_witness},
              {"failure_count", report.failure_count},
              {"failures", std::move(failures)}};
}

ConstructionSequence load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return sequence_from_json(j);
}

void save_sequence(const ConstructionSequence& seq, const std::string& path) {
  save_json(sequence_to_json(seq), path);
}

ToeplitzSpec load_toeplitz_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return toeplitz_spec_from_json(j);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace odoseq
