#include "hrrc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "hrrc/cnf.hpp"
#include "hrrc/exhaustive.hpp"
#include "hrrc/io.hpp"
#include "hrrc/poly_solvers.hpp"
#include "hrrc/reductions.hpp"
#include "hrrc/stability.hpp"

namespace hrrc::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool as_json = false;
  unsigned jobs = 1;

  std::string instance_path;
  std::string matching_path;
  std::string cnf_path;
  std::string out_path;
  std::string occurrences_path;
  std::string algorithm = "auto";
  std::string target;
  std::optional<int> limit;
  bool all = false;
  bool force = false;
  bool normalize = false;
};

int brute_limit(const Options& o) {
  if (o.limit) return *o.limit;
  const char* env = std::getenv("HRRC_BRUTE_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultBruteLimit;
  const std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw UsageError("HRRC_BRUTE_LIMIT must be a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

int agents(const Instance& inst) { return static_cast<int>(inst.residents.size() + inst.hospitals.size()); }

Instance read_instance(const std::string& path) { return load_instance(read_file(path)); }

json matching_json(const Instance& inst, const Assignment& m) { return json::parse(save_matching(inst, m)); }

std::string pairs_line(const Instance& inst, const Assignment& m) {
  std::string s;
  for (const Pair& p : m.pairs()) s += (s.empty() ? "" : " ") + describe(inst, p);
  return s.empty() ? "(empty)" : s;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.jobs = std::max(1u, o.jobs);
  return s;
}

int outcome_exit(const SolveOutcome& outcome) {
  if (std::holds_alternative<Found>(outcome)) return kOk;
  if (std::holds_alternative<NoneExists>(outcome)) return kNegative;
  return kUnknown;
}

// Shared by solve and brute.
int report_outcome(const Options& o, const Instance& inst, const SolveOutcome& outcome,
                   const std::string& algorithm, std::ostream& out) {
  const auto* found = std::get_if<Found>(&outcome);
  if (found && !o.out_path.empty()) write_file(o.out_path, save_matching(inst, found->matching));
  if (o.as_json) {
    json doc{{"outcome", outcome_name(outcome)}, {"algorithm", algorithm}};
    if (found) doc["matching"] = matching_json(inst, found->matching);
    if (const auto* unknown = std::get_if<Unknown>(&outcome)) doc["reason"] = unknown->reason;
    out << doc.dump(2) << "\n";
  } else {
    out << outcome_name(outcome) << " (" << algorithm << ")\n";
    if (const auto* unknown = std::get_if<Unknown>(&outcome)) out << unknown->reason << "\n";
    if (found && o.out_path.empty()) out << save_matching(inst, found->matching);
  }
  return outcome_exit(outcome);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance_path);
  const InstanceClass c = classify(inst);
  const std::string solver = algorithm_name(select_algorithm(inst, brute_limit(o)));
  if (o.as_json) {
    out << json{{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma}, {"disjoint", c.disjoint},
                {"residents", inst.residents.size()}, {"hospitals", inst.hospitals.size()},
                {"regions", inst.regions.size()}, {"solver", solver}}
               .dump(2)
        << "\n";
  } else {
    out << "alpha=" << c.alpha << " beta=" << c.beta << " gamma=" << c.gamma
        << " disjoint=" << (c.disjoint ? "true" : "false") << "\n"
        << "solver=" << solver << "\n";
  }
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance_path);
  const int limit = brute_limit(o);
  Algorithm algorithm = Algorithm::None;
  if (o.algorithm == "auto") algorithm = select_algorithm(inst, limit);
  else if (o.algorithm == "alg1") algorithm = Algorithm::RegionsSize1;
  else if (o.algorithm == "alg2") algorithm = Algorithm::ResidentListsLen1;
  else if (o.algorithm == "alg3") algorithm = Algorithm::HospitalListsLen1;
  else if (o.algorithm == "alg4") algorithm = Algorithm::TwoByTwoFree;
  else if (o.algorithm == "alg5") algorithm = Algorithm::Disjoint222;
  else algorithm = Algorithm::Exhaustive;

  SolveOutcome outcome;
  switch (algorithm) {
    case Algorithm::RegionsSize1: outcome = Found{solve_regions_size1(inst)}; break;
    case Algorithm::ResidentListsLen1: outcome = Found{solve_res_len1(inst)}; break;
    case Algorithm::HospitalListsLen1: outcome = Found{solve_hosp_len1(inst)}; break;
    case Algorithm::TwoByTwoFree: outcome = Found{solve_2x2_free(inst)}; break;
    case Algorithm::Disjoint222: outcome = solve_222_disjoint(inst); break;
    case Algorithm::Exhaustive:
      if (agents(inst) > limit)
        outcome = Unknown{"instance has " + std::to_string(agents(inst)) +
                          " agents, above the brute-force limit of " + std::to_string(limit)};
      else
        outcome = exists_strongly_stable(inst, search_options(o));
      break;
    case Algorithm::None: outcome = dispatch(inst, limit); break;
  }
  return report_outcome(o, inst, outcome, algorithm_name(algorithm), out);
}

int cmd_check(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance_path);
  const Assignment m = load_matching(inst, read_file(o.matching_path));
  if (!is_matching(inst, m)) throw UsageError("'" + o.matching_path + "' is not a matching of the instance");
  const bool feasible = is_feasible(inst, m);
  const auto witnesses = label_blocking_pairs(inst, m);
  std::vector<BlockingWitness> strong;
  for (const auto& w : witnesses)
    if (w.kind == BlockingKind::StrongBlocking) strong.push_back(w);
  const bool stable = feasible && strong.empty();

  auto conditions = [&](const BlockingWitness& w) {
    std::vector<std::string> c;
    if (w.preferred_over) c.push_back("hospital prefers resident over " + inst.residents[*w.preferred_over].id);
    if (w.move_feasible) c.push_back("move keeps every regional cap");
    return c;
  };

  if (o.as_json) {
    json regions = json::array();
    for (RegionIndex e = 0; e < static_cast<RegionIndex>(inst.regions.size()); ++e)
      regions.push_back({{"load", region_load(inst, m, e)}, {"cap", inst.regions[e].cap}});
    json bps = json::array(), sbps = json::array();
    for (const auto& w : witnesses)
      bps.push_back({inst.residents[w.pair.resident].id, inst.hospitals[w.pair.hospital].id});
    for (const auto& w : strong) {
      json entry{{"resident", inst.residents[w.pair.resident].id},
                 {"hospital", inst.hospitals[w.pair.hospital].id},
                 {"move_feasible", w.move_feasible}};
      entry["preferred_over"] = w.preferred_over ? json(inst.residents[*w.preferred_over].id) : json(nullptr);
      sbps.push_back(entry);
    }
    out << json{{"feasible", feasible}, {"regions", regions}, {"blocking_pairs", bps},
                {"strong_blocking_pairs", sbps}, {"strongly_stable", stable}}
               .dump(2)
        << "\n";
  } else {
    out << "feasible: " << (feasible ? "yes" : "no") << "\n";
    for (RegionIndex e = 0; e < static_cast<RegionIndex>(inst.regions.size()); ++e) {
      const int load = region_load(inst, m, e);
      if (load > inst.regions[e].cap)
        out << "  region " << e + 1 << " holds " << load << " over its cap of " << inst.regions[e].cap << "\n";
    }
    out << "blocking pairs: " << witnesses.size() << "\n";
    for (const auto& w : witnesses) out << "  " << describe(inst, w.pair) << "\n";
    out << "strong blocking pairs: " << strong.size() << "\n";
    for (const auto& w : strong) {
      out << "  " << describe(inst, w.pair);
      std::string sep = ": ";
      for (const auto& c : conditions(w)) {
        out << sep << c;
        sep = "; ";
      }
      out << "\n";
    }
    out << "strongly stable: " << (stable ? "yes" : "no") << "\n";
  }
  return stable ? kOk : kNegative;
}

int cmd_brute(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance_path);
  const int limit = brute_limit(o);
  if (agents(inst) > limit && !o.force)
    throw UsageError("instance has " + std::to_string(agents(inst)) +
                     " agents, above the brute-force limit of " + std::to_string(limit) +
                     "; pass --force to search anyway");
  if (!o.all) return report_outcome(o, inst, exists_strongly_stable(inst, search_options(o)), "exhaustive", out);

  const auto all = strongly_stable_set(inst, search_options(o));
  if (o.as_json) {
    json list = json::array();
    for (const auto& m : all) list.push_back(matching_json(inst, m));
    out << json{{"count", all.size()}, {"matchings", list}}.dump(2) << "\n";
  } else {
    out << all.size() << " strongly stable matching" << (all.size() == 1 ? "" : "s") << "\n";
    for (const auto& m : all) out << "  " << pairs_line(inst, m) << "\n";
  }
  return all.empty() ? kNegative : kOk;
}

struct PreparedReduction {
  CnfFormula source;
  std::optional<PpnNormalization> normalization;
  Reduction reduction;
};

PreparedReduction prepare_reduction(const Options& o) {
  const auto target = parse_target(o.target);
  if (!target) throw UsageError("unknown target '" + o.target + "'");
  CnfFormula source = parse_dimacs(read_file(o.cnf_path));
  std::optional<PpnNormalization> norm;
  if (o.normalize) {
    if (*target == ReductionTarget::OneInThree222)
      throw UsageError("--normalize-ppn only applies to the ppn-* targets");
    norm = to_ppn(source);
  }
  Reduction red = reduce(norm ? norm->formula : source, *target);
  return {std::move(source), std::move(norm), std::move(red)};
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const PreparedReduction p = prepare_reduction(o);
  const Reduction& red = p.reduction;
  const std::string instance_doc = save_instance(red.instance);
  if (!o.out_path.empty()) write_file(o.out_path, instance_doc);
  if (!o.occurrences_path.empty()) {
    if (!red.occurrences) throw UsageError("the one-in-three reduction has no occurrence table");
    write_file(o.occurrences_path, save_occurrence_table(*red.occurrences));
  }
  if (o.as_json) {
    json doc{{"target", target_name(red.target)},
             {"variables", red.formula.num_variables},
             {"clauses", red.formula.clauses.size()},
             {"residents", red.instance.residents.size()},
             {"hospitals", red.instance.hospitals.size()},
             {"regions", red.instance.regions.size()}};
    if (o.out_path.empty()) doc["instance"] = json::parse(instance_doc);
    if (red.occurrences) doc["occurrences"] = json::parse(save_occurrence_table(*red.occurrences));
    out << doc.dump(2) << "\n";
  } else if (o.out_path.empty()) {
    out << instance_doc;
  } else {
    out << target_name(red.target) << ": " << red.instance.residents.size() << " residents, "
        << red.instance.hospitals.size() << " hospitals, " << red.instance.regions.size() << " regions\n";
  }
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const PreparedReduction p = prepare_reduction(o);
  const Reduction& red = p.reduction;
  const Assignment m = load_matching(red.instance, read_file(o.matching_path));
  if (!is_matching(red.instance, m))
    throw UsageError("'" + o.matching_path + "' is not a matching of the reduced instance");
  const bool stable = is_strongly_stable(red.instance, m);
  SatAssignment a = decode_matching(red, m);
  if (p.normalization) a = project_assignment(*p.normalization, p.source.num_variables, a);
  const SatMode mode = red.target == ReductionTarget::OneInThree222 ? SatMode::OneInThree : SatMode::Ordinary;
  const bool ok = satisfies(p.source, a, mode);

  if (o.as_json) {
    out << json{{"assignment", a}, {"satisfies", ok}, {"strongly_stable", stable}}.dump(2) << "\n";
  } else {
    out << "v";
    for (std::size_t i = 0; i < a.size(); ++i) out << " " << (a[i] ? "" : "-") << i + 1;
    out << " 0\n"
        << "satisfies: " << (ok ? "yes" : "no") << "\n";
    if (!stable) out << "note: the matching is not strongly stable\n";
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Strong stability for hospitals/residents with regional caps", "hrrc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.as_json, "Emit a JSON document instead of text");
  app.add_option("--jobs", o.jobs, "Worker threads for exhaustive search")->check(CLI::Range(1u, 256u));

  auto* classify_cmd = app.add_subcommand("classify", "Print the instance's parameter class");
  classify_cmd->add_option("instance", o.instance_path)->required();

  auto* solve = app.add_subcommand("solve", "Find a strongly stable matching");
  solve->add_option("instance", o.instance_path)->required();
  solve->add_option("--algorithm", o.algorithm)
      ->check(CLI::IsMember({"auto", "alg1", "alg2", "alg3", "alg4", "alg5", "brute"}));
  solve->add_option("--brute-limit", o.limit, "Largest |R|+|H| searched exhaustively")->check(CLI::NonNegativeNumber);
  solve->add_option("--out", o.out_path, "Write the matching here");

  auto* check = app.add_subcommand("check", "Report feasibility and (strong) blocking pairs");
  check->add_option("instance", o.instance_path)->required();
  check->add_option("matching", o.matching_path)->required();

  auto* brute = app.add_subcommand("brute", "Exhaustive search");
  brute->add_option("instance", o.instance_path)->required();
  brute->add_flag("--all", o.all, "List every strongly stable matching");
  brute->add_flag("--force", o.force, "Search even above the size limit");
  brute->add_option("--limit", o.limit, "Largest |R|+|H| searched")->check(CLI::NonNegativeNumber);
  brute->add_option("--out", o.out_path, "Write the matching here");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the instance for a formula");
  reduce_cmd->add_option("cnf", o.cnf_path)->required();
  reduce_cmd->add_option("--target", o.target)->required();
  reduce_cmd->add_flag("--normalize-ppn", o.normalize, "Rewrite the formula into PPN form first");
  reduce_cmd->add_option("--out", o.out_path, "Write the instance here");
  reduce_cmd->add_option("--occurrences", o.occurrences_path, "Write the occurrence table here");

  auto* decode = app.add_subcommand("decode", "Read an assignment off a matching of a reduced instance");
  decode->add_option("cnf", o.cnf_path)->required();
  decode->add_option("matching", o.matching_path)->required();
  decode->add_option("--target", o.target)->required();
  decode->add_flag("--normalize-ppn", o.normalize, "The instance was built with --normalize-ppn");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hrrc: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*check) return cmd_check(o, out);
    if (*brute) return cmd_brute(o, out);
    if (*reduce_cmd) return cmd_reduce(o, out);
    if (*decode) return cmd_decode(o, out);
  } catch (const std::exception& e) {
    err << "hrrc: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hrrc::cli
