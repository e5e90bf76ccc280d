// odoseq — build, validate, parse and analyze odometer-based construction
// sequences from the command line. Exit codes: 0 all requested checks
// passed, 1 a validation or property check failed, 2 malformed input or a
// cap was exceeded.

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "odoseq/analysis.hpp"
#include "odoseq/builders.hpp"
#include "odoseq/json_io.hpp"
#include "odoseq/parsing.hpp"
#include "odoseq/toeplitz.hpp"

using namespace odoseq;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(std::stoull(part));
  return out;
}

std::vector<BigInt> parse_bigint_list(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& part : split(text, ',')) out.emplace_back(part);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(rational_from_string(part));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw std::invalid_argument("range must be lo:hi");
  return {std::stoll(parts[0]), std::stoll(parts[1])};
}

// "level:index", or letter_level shorthand like "a_2" for builder alphabets.
WordId parse_word_spec(const ConstructionSequence& seq, const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    WordId id{std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
    seq.check_word_id(id);
    return id;
  }
  const auto underscore = text.find('_');
  if (underscore == std::string::npos)
    throw std::invalid_argument("word must be level:index or letter_level");
  const auto letter = seq.alphabet().index_of(text.substr(0, underscore));
  if (!letter) throw std::invalid_argument("unknown word letter in " + text);
  WordId id{std::stoull(text.substr(underscore + 1)), *letter};
  seq.check_word_id(id);
  return id;
}

json anchors_to_json(const AnchoredWindow& win) {
  json anchors = json::array();
  for (const auto& a : win.anchors) {
    anchors.push_back(json{{"level", a.level},
                           {"offset", a.offset},
                           {"word", json::array({a.word.level, a.word.index})}});
  }
  return anchors;
}

json window_to_json(const ConstructionSequence& seq, const AnchoredWindow& win) {
  return json{{"origin", win.origin},
              {"base_level", win.base_level()},
              {"top", json::array({win.top_level(), win.anchors.back().word.index})},
              {"position", win.origin},
              {"anchors", anchors_to_json(win)},
              {"window", render(seq.alphabet(), win.symbols)}};
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json(j, out_path);
  }
}

void print_level_table(const ConstructionSequence& seq) {
  std::cout << "level  s_n  K_n\n";
  for (std::size_t n = 0; n <= seq.max_level(); ++n) {
    std::cout << n << "  " << seq.word_count(n) << "  " << seq.length(n).get_str() << "\n";
  }
}

struct Options {
  std::string in, out, spec, word, odo, report;
  std::string ks, deltas, digits, range, periods, b_list, b_geometric, words, mode = "exact";
  std::uint64_t levels = 0, cap = 1'000'000, pos = 0, depth = 0, from = 0;
  std::uint64_t pmax = 8, count = 3, bound = 4096, min_ratio = 1, enumerate_cap = 1000;
  std::uint64_t a = 2, block_length = 0, capacity = 0, n = 0, m = 0, n_max = 3, minimal = 0;
  std::uint64_t p = 1;
};

int cmd_generate(const std::string& builder, const Options& opt) {
  ConstructionSequence seq;
  if (builder == "two-word") {
    const auto ks = parse_u64_list(opt.ks);
    seq = build_two_word(ks, opt.levels ? opt.levels : ks.size());
  } else if (builder == "small-fingers") {
    seq = build_small_fingers(parse_bigint_list(opt.ks), opt.enumerate_cap);
  } else if (builder == "alternating") {
    seq = build_alternating_complement(opt.levels ? opt.levels : 4);
  } else {
    throw std::invalid_argument("unknown builder: " + builder);
  }
  print_level_table(seq);
  if (!opt.out.empty()) save_sequence(seq, opt.out);
  return 0;
}

int cmd_validate(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  ValidateOptions vopts;
  if (opt.levels) vopts.level_cap = opt.levels;
  vopts.expansion_cap = opt.cap;
  const auto report = validate(seq, vopts);
  emit(validation_report_to_json(report), opt.report);
  std::cout << (report.ok() ? "valid" : "INVALID")
            << " (minimal: " << (report.minimal() ? "yes" : "no") << ")\n";
  return report.ok() ? 0 : 1;
}

int cmd_parse(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  const auto win = parse(seq, parse_word_spec(seq, opt.word), opt.pos, opt.cap);
  emit(window_to_json(seq, win), opt.out);
  return 0;
}

int cmd_phi(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  const auto id = parse_word_spec(seq, opt.word);
  const auto digits = phi(seq, id, opt.pos, opt.depth ? opt.depth : id.level);
  emit(json{{"digits", digits}}, opt.out);
  return 0;
}

int cmd_psi(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  const auto win = psi_window(seq, parse_u64_list(opt.digits), opt.from, opt.cap);
  emit(window_to_json(seq, win), opt.out);
  return 0;
}

int cmd_analyze_freq(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  const auto profile = frequency_profile(seq, opt.levels ? opt.levels : SIZE_MAX);
  emit(frequency_profile_to_json(profile), opt.out);
  return 0;
}

int cmd_analyze_swp(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  const auto result = check_swp(seq, parse_rational_list(opt.deltas));
  emit(swp_result_to_json(result), opt.out);
  return result.holds ? 0 : 1;
}

int cmd_analyze_bounds(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  std::vector<Rational> deltas;
  if (!opt.deltas.empty()) deltas = parse_rational_list(opt.deltas);
  const auto report = measure_bound_check(seq, opt.n, opt.m, deltas, opt.cap);
  emit(measure_bound_report_to_json(report), opt.out);
  const bool ok = report.all_within && report.separation_ok.value_or(true);
  return ok ? 0 : 1;
}

int cmd_budget(const Options& opt) {
  TowerBudget budget;
  if (opt.minimal) {
    budget =
        check_tower_budget(opt.a, admissible_budget_coefficients(opt.a, opt.minimal), opt.n_max);
  } else {
    budget = check_tower_budget(opt.a, CoefficientSequence(parse_bigint_list(opt.ks)), opt.n_max);
  }
  emit(tower_budget_to_json(budget), opt.out);
  return budget.first_violation ? 1 : 0;
}

int cmd_paint(const Options& opt) {
  const auto plan = paint_levels(split(opt.words, ','), opt.a, opt.block_length, opt.capacity);
  emit(painting_plan_to_json(plan), opt.out);
  return 0;
}

int cmd_thin(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  std::vector<Rational> b;
  if (!opt.b_list.empty()) {
    b = parse_rational_list(opt.b_list);
  } else if (!opt.b_geometric.empty()) {
    b = geometric_bounds(rational_from_string(opt.b_geometric), seq.max_level() + 1);
  }
  const auto result = thin(seq, parse_rational_list(opt.deltas), b);
  emit(thinning_result_to_json(result), opt.report);
  if (result.thinned && !opt.out.empty()) save_sequence(*result.thinned, opt.out);
  return result.complete ? 0 : 1;
}

int cmd_toeplitz_window(const Options& opt) {
  const auto spec = load_toeplitz_spec(opt.spec);
  const auto [lo, hi] = parse_range(opt.range);
  const auto window = toeplitz_window(spec, lo, hi);
  emit(json{{"lo", lo}, {"hi", hi}, {"window", render(spec.alphabet(), window)}}, opt.out);
  return 0;
}

int cmd_toeplitz_per(const Options& opt) {
  const auto spec = load_toeplitz_spec(opt.spec);
  const auto [lo, hi] = parse_range(opt.range);
  const auto mode = opt.mode == "empirical" ? PerMode::Empirical : PerMode::Exact;
  const auto positions = per_set(spec, opt.p, lo, hi, mode);
  emit(json{{"p", opt.p}, {"mode", opt.mode}, {"positions", positions}}, opt.out);
  return 0;
}

int cmd_toeplitz_periods(const Options& opt) {
  const auto spec = load_toeplitz_spec(opt.spec);
  EssentialPeriodList list;
  if (!opt.periods.empty()) {
    list = verify_essential_periods(spec, parse_u64_list(opt.periods), opt.bound);
  } else {
    list = select_essential_periods(spec, opt.count, opt.bound, opt.min_ratio);
  }
  emit(essential_period_list_to_json(list), opt.out);
  return list.complete ? 0 : 1;
}

int cmd_toeplitz_augment(const Options& opt) {
  const auto spec = load_toeplitz_spec(opt.spec);
  const auto periods = parse_u64_list(opt.periods);
  ConstructionSequence odo;
  if (!opt.odo.empty()) {
    odo = load_sequence(opt.odo);
  } else {
    std::vector<std::uint64_t> ratios;
    for (std::size_t i = 0; i + 1 < periods.size(); ++i)
      ratios.push_back(periods[i + 1] / periods[i]);
    odo = build_two_word(ratios, ratios.size());
  }
  const auto aug = toeplitz_augment(spec, periods, odo);
  print_level_table(aug);
  if (!opt.out.empty()) save_sequence(aug, opt.out);
  return 0;
}

int cmd_toeplitz_aperiodicity(const Options& opt) {
  const auto seq = load_sequence(opt.in);
  const auto window = expand(seq, parse_word_spec(seq, opt.word), opt.cap);
  std::uint64_t lo = 0, hi = window.size();
  if (!opt.range.empty()) {
    const auto r = parse_range(opt.range);
    lo = static_cast<std::uint64_t>(r.first);
    hi = static_cast<std::uint64_t>(r.second);
  }
  const auto report = aperiodicity_scan(window, opt.pmax, lo, hi);
  emit(aperiodicity_report_to_json(report), opt.out);
  return report.all_found() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odometer-based construction sequences"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto* gen = app.add_subcommand("generate", "build a construction sequence");
  std::string builder;
  gen->add_option("builder", builder, "two-word | small-fingers | alternating")->required();
  gen->add_option("--k", opt.ks, "comma-separated coefficients");
  gen->add_option("--levels", opt.levels, "levels to materialize");
  gen->add_option("--enumerate-cap", opt.enumerate_cap, "max table size before lazy addressing");
  gen->add_option("--out", opt.out, "output sequence JSON");
  gen->callback([&] { action = [&] { return cmd_generate(builder, opt); }; });

  auto* val = app.add_subcommand("validate", "check the defining clauses");
  val->add_option("--in", opt.in)->required();
  val->add_option("--levels", opt.levels, "highest level to check");
  val->add_option("--cap", opt.cap, "max expansion length");
  val->add_option("--report", opt.report, "write the full report JSON here");
  val->callback([&] { action = [&] { return cmd_validate(opt); }; });

  auto* par = app.add_subcommand("parse", "hierarchical parse of a position");
  par->add_option("--in", opt.in)->required();
  par->add_option("--word", opt.word)->required();
  par->add_option("--pos", opt.pos)->required();
  par->add_option("--cap", opt.cap);
  par->add_option("--out", opt.out);
  par->callback([&] { action = [&] { return cmd_parse(opt); }; });

  auto* phi_cmd = app.add_subcommand("phi", "canonical factor-map digits");
  phi_cmd->add_option("--in", opt.in)->required();
  phi_cmd->add_option("--word", opt.word)->required();
  phi_cmd->add_option("--pos", opt.pos)->required();
  phi_cmd->add_option("--depth", opt.depth);
  phi_cmd->add_option("--out", opt.out);
  phi_cmd->callback([&] { action = [&] { return cmd_phi(opt); }; });

  auto* psi_cmd = app.add_subcommand("psi", "window from odometer digits");
  psi_cmd->add_option("--in", opt.in)->required();
  psi_cmd->add_option("--digits", opt.digits)->required();
  psi_cmd->add_option("--from", opt.from, "stabilization index");
  psi_cmd->add_option("--cap", opt.cap);
  psi_cmd->add_option("--out", opt.out);
  psi_cmd->callback([&] { action = [&] { return cmd_psi(opt); }; });

  auto* analyze = app.add_subcommand("analyze", "frequency statistics");
  analyze->require_subcommand(1);
  auto* freq_cmd = analyze->add_subcommand("freq", "per-level frequency profile");
  freq_cmd->add_option("--in", opt.in)->required();
  freq_cmd->add_option("--levels", opt.levels);
  freq_cmd->add_option("--out", opt.out);
  freq_cmd->callback([&] { action = [&] { return cmd_analyze_freq(opt); }; });
  auto* swp_cmd = analyze->add_subcommand("swp", "small word property");
  swp_cmd->add_option("--in", opt.in)->required();
  swp_cmd->add_option("--delta", opt.deltas)->required();
  swp_cmd->add_option("--out", opt.out);
  swp_cmd->callback([&] { action = [&] { return cmd_analyze_swp(opt); }; });
  auto* bounds_cmd = analyze->add_subcommand("bounds", "per-position rate bounds");
  bounds_cmd->add_option("--in", opt.in)->required();
  bounds_cmd->add_option("-n", opt.n)->required();
  bounds_cmd->add_option("-M", opt.m)->required();
  bounds_cmd->add_option("--delta", opt.deltas);
  bounds_cmd->add_option("--cap", opt.cap);
  bounds_cmd->add_option("--out", opt.out);
  bounds_cmd->callback([&] { action = [&] { return cmd_analyze_bounds(opt); }; });

  auto* budget_cmd = app.add_subcommand("budget", "tower measure budget");
  budget_cmd->add_option("-a", opt.a, "alphabet size");
  budget_cmd->add_option("--k", opt.ks, "explicit coefficients (decimal, comma-separated)");
  budget_cmd->add_option("--minimal", opt.minimal, "use N minimal admissible coefficients");
  budget_cmd->add_option("--n-max", opt.n_max);
  budget_cmd->add_option("--out", opt.out);
  budget_cmd->callback([&] { action = [&] { return cmd_budget(opt); }; });

  auto* paint_cmd = app.add_subcommand("paint", "painting allocation plan");
  paint_cmd->add_option("--words", opt.words, "comma-separated inventory")->required();
  paint_cmd->add_option("-a", opt.a);
  paint_cmd->add_option("--block-length", opt.block_length)->required();
  paint_cmd->add_option("--capacity", opt.capacity, "demo capacity (0 = strict)");
  paint_cmd->add_option("--out", opt.out);
  paint_cmd->callback([&] { action = [&] { return cmd_paint(opt); }; });

  auto* thin_cmd = app.add_subcommand("thin", "subsequence selection game");
  thin_cmd->add_option("--in", opt.in)->required();
  thin_cmd->add_option("--delta", opt.deltas)->required();
  thin_cmd->add_option("--b", opt.b_list, "explicit bound sequence");
  thin_cmd->add_option("--b-geometric", opt.b_geometric, "geometric bound ratio");
  thin_cmd->add_option("--out", opt.out, "write the thinned sequence here");
  thin_cmd->add_option("--report", opt.report);
  thin_cmd->callback([&] { action = [&] { return cmd_thin(opt); }; });

  auto* toep = app.add_subcommand("toeplitz", "staged periodic fillings");
  toep->require_subcommand(1);
  auto* tw = toep->add_subcommand("window", "determined symbols on a range");
  tw->add_option("--spec", opt.spec)->required();
  tw->add_option("--range", opt.range)->required();
  tw->add_option("--out", opt.out);
  tw->callback([&] { action = [&] { return cmd_toeplitz_window(opt); }; });
  auto* tp = toep->add_subcommand("per", "p-periodic positions");
  tp->add_option("--spec", opt.spec)->required();
  tp->add_option("-p", opt.p)->required();
  tp->add_option("--range", opt.range)->required();
  tp->add_option("--mode", opt.mode, "exact | empirical");
  tp->add_option("--out", opt.out);
  tp->callback([&] { action = [&] { return cmd_toeplitz_per(opt); }; });
  auto* tsel = toep->add_subcommand("periods", "select or verify essential periods");
  tsel->add_option("--spec", opt.spec)->required();
  tsel->add_option("--count", opt.count);
  tsel->add_option("--bound", opt.bound);
  tsel->add_option("--min-ratio", opt.min_ratio);
  tsel->add_option("--periods", opt.periods, "verify this chain instead of selecting");
  tsel->add_option("--out", opt.out);
  tsel->callback([&] { action = [&] { return cmd_toeplitz_periods(opt); }; });
  auto* taug = toep->add_subcommand("augment", "pair blocks with the odometer words");
  taug->add_option("--spec", opt.spec)->required();
  taug->add_option("--periods", opt.periods)->required();
  taug->add_option("--odo", opt.odo, "odometer component sequence (built if omitted)");
  taug->add_option("--out", opt.out);
  taug->callback([&] { action = [&] { return cmd_toeplitz_augment(opt); }; });
  auto* tap = toep->add_subcommand("aperiodicity", "witness scan on an expansion");
  tap->add_option("--in", opt.in)->required();
  tap->add_option("--word", opt.word)->required();
  tap->add_option("--pmax", opt.pmax);
  tap->add_option("--range", opt.range, "interior positions lo:hi");
  tap->add_option("--cap", opt.cap);
  tap->add_option("--out", opt.out);
  tap->callback([&] { action = [&] { return cmd_toeplitz_aperiodicity(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
