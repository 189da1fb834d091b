#include "wordmaps/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmaps/bounds.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/evaluator.hpp"
#include "wordmaps/group.hpp"
#include "wordmaps/interpolator.hpp"
#include "wordmaps/parser.hpp"
#include "wordmaps/schreier.hpp"

namespace wordmaps {

namespace {

using nlohmann::json;

struct CommonOptions {
  int degree = 0;
  int rank = 1;
  std::string word_text;
  std::string format = "json";
  std::uint64_t budget = 10'000'000;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t letter_cap = 1'000'000;
  int target_distance = 0;
  std::string tau_text;
  std::string trace_path;
  std::string group_text;
  std::string map_path;
  bool emit_image = false;
  bool emit_word = false;
};

json assignment_json(const Assignment& assignment) {
  json out = json::array();
  for (const auto& p : assignment) out.push_back(format_permutation(p));
  return out;
}

json points_json(const std::vector<int>& points) {
  json out = json::array();
  for (int p : points) out.push_back(p + 1);
  return out;
}

json report_skeleton(const std::string& command, const CommonOptions& options) {
  json report;
  report["command"] = command;
  report["version"] = kToolVersion;
  json input;
  if (!options.word_text.empty()) input["word"] = options.word_text;
  if (!options.group_text.empty()) input["group"] = options.group_text;
  if (!options.map_path.empty()) input["map"] = options.map_path;
  input["n"] = options.degree;
  input["r"] = options.rank;
  report["input"] = std::move(input);
  return report;
}

Word parse_input_word(const CommonOptions& options) {
  return parse_word(options.word_text, options.rank, options.degree,
                    ParseLimits{options.letter_cap});
}

EnumeratedGroup parse_group(const CommonOptions& options) {
  std::vector<Permutation> generators;
  std::string_view text = options.group_text;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view piece = text.substr(start, stop - start);
    const auto first = piece.find_first_not_of(" \t");
    if (first != std::string_view::npos)
      generators.push_back(parse_permutation(piece, options.degree));
    start = stop + 1;
  }
  if (generators.empty()) throw InvalidInput("--group needs at least one generator");
  return EnumeratedGroup::closure(std::move(generators), options.degree);
}

void render_text(const json& value, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (item.is_object() || (item.is_array() && !item.empty() && item.front().is_structured())) {
        out << pad << key << ":\n";
        render_text(item, out, indent + 1);
      } else if (item.is_array()) {
        out << pad << key << ": " << item.dump() << "\n";
      } else if (item.is_string()) {
        out << pad << key << ": " << item.get<std::string>() << "\n";
      } else {
        out << pad << key << ": " << item.dump() << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      out << pad << "-\n";
      render_text(item, out, indent + 1);
    }
  } else {
    out << pad << value.dump() << "\n";
  }
}

void emit(const json& report, const CommonOptions& options, std::ostream& out) {
  if (options.format == "text")
    render_text(report, out, 0);
  else
    out << report.dump(2) << "\n";
}

json summary_json(const Word& w) {
  const WordSummary summary = summarize(w);
  json out;
  out["length"] = summary.length;
  out["max_variable_count"] = summary.max_per_variable;
  out["critical_support"] = summary.critical_support;
  out["strong"] = summary.strong;
  out["content_trivial"] = summary.content_trivial;
  return out;
}

json run_analyze(const CommonOptions& options) {
  const Word w = parse_input_word(options);
  const Classification cls = classify(w);
  const Norms nm = norms(w);

  json report = report_skeleton("analyze", options);
  report["normal_form"] = format_word(w);
  report["length"] = nm.length;
  report["variable_counts"] = nm.per_variable;
  report["max_variable_count"] = nm.max_per_variable;
  report["critical_support"] = nm.critical_support;
  report["strong"] = w.is_strong();
  report["content"] = format_letters(content(w));
  report["content_trivial"] = has_trivial_content(w);
  report["variable_change_indices"] = cls.variable_change;
  report["same_sign_indices"] = cls.same_sign;
  report["critical_indices"] = cls.critical;
  json constants = json::array();
  for (int j : cls.critical) {
    json entry;
    entry["index"] = j;
    entry["constant"] = format_permutation(w.constant(j));
    entry["support"] = hamming_norm(w.constant(j));
    constants.push_back(std::move(entry));
  }
  report["critical_constants"] = std::move(constants);
  return report;
}

json image_json(const ImageReport& image, bool emit_members) {
  json out;
  out["method"] = image.method;
  out["diameter"] = image.diameter;
  out["evaluations"] = image.evaluations;
  out["witnesses"] = {{"first", format_permutation(image.witnesses.first)},
                      {"second", format_permutation(image.witnesses.second)}};
  if (image.image) {
    out["image_size"] = image.image->size();
    if (emit_members) {
      json members = json::array();
      for (const auto& p : *image.image) members.push_back(format_permutation(p));
      out["image"] = std::move(members);
    }
  }
  if (image.method == "sampled") {
    out["sample_count"] = image.sample_count;
    out["seed"] = image.seed;
    out["note"] = "diameter is a certified lower bound";
  }
  return out;
}

json run_image(const CommonOptions& options) {
  const Word w = parse_input_word(options);
  json report = report_skeleton("image", options);
  const ImageReport image = options.samples > 0
                                ? diameter_sampled(w, options.samples, options.seed)
                                : image_exhaustive(w, EnumerationBudget{options.budget});
  report.update(image_json(image, options.emit_image));
  return report;
}

json run_identity(const CommonOptions& options) {
  const Word w = parse_input_word(options);
  json report = report_skeleton("identity", options);
  const MixedIdentityReport verdict = is_mixed_identity(w, EnumerationBudget{options.budget});
  report["mixed_identity"] = verdict.is_identity;
  report["evaluations"] = verdict.evaluations;
  if (verdict.counterexample) {
    report["counterexample"] = {{"assignment", assignment_json(*verdict.counterexample)},
                                {"value", format_permutation(*verdict.counterexample_value)}};
  }
  return report;
}

json conditions_json(const LemmaConditions& conditions) {
  const auto family = [](const std::vector<ConditionCheck>& checks) {
    json out = json::array();
    for (const auto& check : checks) {
      out.push_back({{"index", check.index},
                     {"lhs", check.lhs},
                     {"rhs", check.rhs},
                     {"satisfied", check.satisfied()}});
    }
    return out;
  };
  json out;
  out["d"] = conditions.d;
  out["all_satisfied"] = conditions.all_satisfied();
  out["variable_change"] = family(conditions.variable_change);
  out["same_sign"] = family(conditions.same_sign);
  out["critical"] = family(conditions.critical);
  out["final_letter"] = {{"index", conditions.final_letter.index},
                         {"lhs", conditions.final_letter.lhs},
                         {"rhs", conditions.final_letter.rhs},
                         {"satisfied", conditions.final_letter.satisfied()}};
  return out;
}

json run_witness(const CommonOptions& options) {
  const Word w = parse_input_word(options);
  json report = report_skeleton("witness", options);

  int d = options.target_distance;
  if (d == 0) {
    d = max_feasible_distance(w);
    if (d == 0)
      throw InvalidInput("no distance d >= 1 satisfies the conditions for this word");
    report["d_source"] = "largest feasible";
  } else {
    report["d_source"] = "requested";
  }
  report["conditions"] = conditions_json(check_conditions(w, d));

  std::optional<Permutation> tau;
  if (!options.tau_text.empty()) tau = parse_permutation(options.tau_text, options.degree);

  std::ofstream trace_file;
  WitnessOptions witness_options;
  if (!options.trace_path.empty()) {
    trace_file.open(options.trace_path);
    if (!trace_file) throw InvalidInput("cannot open trace file " + options.trace_path);
    witness_options.trace_sink = &trace_file;
  }

  const WitnessCertificate cert = construct_witness(w, d, tau, witness_options);
  report["d"] = cert.d;
  report["tau"] = format_permutation(cert.tau);
  report["sigma"] = format_permutation(cert.sigma);
  report["assignment"] = assignment_json(cert.assignment);
  report["basepoints"] = points_json(cert.basepoints);
  report["disagreement_points"] = points_json(cert.disagreement_points());
  report["distance"] = hamming_distance(cert.sigma, cert.tau);
  report["lead_stripped"] = cert.lead_stripped;
  report["arrows"] = cert.trace.size();
  report["verified"] = true;  // construct_witness re-verifies before returning
  return report;
}

json run_bounds(const CommonOptions& options) {
  const Word w = parse_input_word(options);
  json report = report_skeleton("bounds", options);
  report["summary"] = summary_json(w);

  const bool sampled = options.samples > 0;
  const ImageReport image = sampled ? diameter_sampled(w, options.samples, options.seed)
                                    : image_exhaustive(w, EnumerationBudget{options.budget});
  report["diameter"] = image.diameter;
  report["method"] = image.method;
  if (sampled) {
    report["seed"] = image.seed;
    report["note"] =
        "sampled diameters are lower bounds: a holding inequality is certified, "
        "a failing one is inconclusive";
  }

  json checks = json::array();
  const auto add_check = [&](const BoundCheck& check) {
    json entry;
    entry["name"] = check.name;
    entry["applicable"] = check.applicable;
    entry["lhs"] = check.lhs;
    entry["rhs"] = check.rhs;
    if (!check.note.empty()) entry["note"] = check.note;
    if (!check.applicable)
      entry["verdict"] = "not applicable";
    else if (check.holds)
      entry["verdict"] = "holds";
    else
      entry["verdict"] = sampled ? "inconclusive" : "fails";
    checks.push_back(std::move(entry));
  };
  if (w.length() >= 1)
    for (const auto& check : master_inequality(w, image.diameter).checks) add_check(check);
  for (const auto& check : theorem_bounds(w, image.diameter).checks) add_check(check);
  report["checks"] = std::move(checks);

  if (!sampled && w.length() >= 1 &&
      2LL * (image.diameter + 1) * w.length() < w.degree()) {
    const auto [index, constant] = find_small_critical_constant(w, image.diameter);
    report["small_critical_constant"] = {{"index", index},
                                         {"constant", format_permutation(constant)},
                                         {"support", hamming_norm(constant)}};
  }
  return report;
}

json run_chain(const CommonOptions& options) {
  const Word w = parse_input_word(options);
  json report = report_skeleton("chain", options);
  const ReductionChain chain = reduction_chain(w);
  json words = json::array();
  json lengths = json::array();
  for (const auto& word : chain.words) {
    words.push_back(format_word(word));
    lengths.push_back(word.length());
  }
  json steps = json::array();
  for (const auto& step : chain.steps) {
    steps.push_back({{"index", step.index},
                     {"constant", format_permutation(step.removed)},
                     {"support", step.support}});
  }
  report["words"] = std::move(words);
  report["lengths"] = std::move(lengths);
  report["steps"] = std::move(steps);
  report["content"] = format_letters(content(w));
  report["final_strong"] = chain.words.back().is_strong();
  return report;
}

json run_covering(const CommonOptions& options) {
  const EnumeratedGroup group = parse_group(options);
  json report = report_skeleton("covering", options);
  report["order"] = group.size();
  const CoveringData covering = covering_number(group);
  report["covering_number"] = covering.covering_number;
  report["covering_diameter"] = covering.covering_diameter;
  json classes = json::array();
  for (const auto& cls : covering.classes) {
    classes.push_back({{"representative", format_permutation(group.element(cls.representative))},
                       {"size", cls.members.size()}});
  }
  report["classes"] = std::move(classes);
  json per_class = json::array();
  for (const auto& cover : covering.per_class) {
    const auto& cls = covering.classes[static_cast<std::size_t>(cover.class_index)];
    per_class.push_back(
        {{"representative", format_permutation(group.element(cls.representative))},
         {"steps_to_cover", cover.steps_to_cover},
         {"steps_to_cover_symmetric", cover.steps_to_cover_symmetric}});
  }
  report["per_class"] = std::move(per_class);
  return report;
}

json run_interpolate(const CommonOptions& options) {
  const EnumeratedGroup group = parse_group(options);
  if (options.map_path.empty()) throw InvalidInput("interpolate needs --map <file>");
  std::ifstream map_file(options.map_path);
  if (!map_file) throw InvalidInput("cannot open map file " + options.map_path);
  const std::vector<int> map = parse_map_table(group, map_file);

  Interpolator interpolator(group);
  const InterpolationCertificate cert = interpolator.interpolate(map);

  json report = report_skeleton("interpolate", options);
  report["order"] = group.size();
  report["covering_number"] = interpolator.covering().covering_number;
  report["length"] = cert.length;
  report["sharp_bound"] = cert.sharp_bound;
  report["cubic_bound"] = cert.cubic_bound;
  report["delta_lengths"] = cert.delta_lengths;
  report["verified"] = true;  // interpolate re-verifies the table before returning
  if (options.emit_word) report["word"] = format_word(cert.word);
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"algebra of words with constants over symmetric groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonOptions options;
  std::string command;

  const auto add_common = [&](CLI::App* sub, bool with_word) {
    sub->add_option("-n,--degree", options.degree, "degree of the symmetric group")->required();
    sub->add_option("-r,--rank", options.rank, "number of variables");
    sub->add_option("--format", options.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_word) {
      sub->add_option("word", options.word_text, "word in the DSL")->required();
      sub->add_option("--letter-cap", options.letter_cap, "max letters after expansion");
    }
    sub->callback([&command, sub] { command = sub->get_name(); });
    return sub;
  };

  auto* analyze = add_common(app.add_subcommand("analyze", "normal form, norms, classification"), true);
  (void)analyze;

  auto* image = add_common(app.add_subcommand("image", "image diameter of the word map"), true);
  image->add_option("--samples", options.samples, "sample instead of exhausting");
  image->add_option("--seed", options.seed, "sampling seed");
  image->add_option("--budget", options.budget, "max exhaustive evaluations");
  image->add_flag("--emit-image", options.emit_image, "list the image elements");

  auto* identity = add_common(app.add_subcommand("identity", "mixed-identity check"), true);
  identity->add_option("--budget", options.budget, "max exhaustive evaluations");

  auto* witness = add_common(app.add_subcommand("witness", "distance-d witness certificate"), true);
  witness->add_option("-d,--distance", options.target_distance,
                      "target distance (default: largest feasible)");
  witness->add_option("--tau", options.tau_text, "reference image member (cycle notation)");
  witness->add_option("--trace", options.trace_path, "write per-arrow trace records here");

  auto* bounds = add_common(app.add_subcommand("bounds", "image-size inequalities"), true);
  bounds->add_option("--samples", options.samples, "sample instead of exhausting");
  bounds->add_option("--seed", options.seed, "sampling seed");
  bounds->add_option("--budget", options.budget, "max exhaustive evaluations");

  auto* chain = add_common(app.add_subcommand("chain", "reduction chain"), true);
  (void)chain;

  auto* covering = add_common(app.add_subcommand("covering", "class covering numbers"), false);
  covering->add_option("--group", options.group_text, "generators, ';'-separated")->required();

  auto* interpolate =
      add_common(app.add_subcommand("interpolate", "compile a self-map into a word"), false);
  interpolate->add_option("--group", options.group_text, "generators, ';'-separated")->required();
  interpolate->add_option("--map", options.map_path, "file of lines '<perm> -> <perm>'")->required();
  interpolate->add_flag("--emit-word", options.emit_word, "include the compiled word");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion") {
      std::ostringstream help;
      const int code = app.exit(e, help, help);
      out << help.str();
      return code;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    json report;
    if (command == "analyze")
      report = run_analyze(options);
    else if (command == "image")
      report = run_image(options);
    else if (command == "identity")
      report = run_identity(options);
    else if (command == "witness")
      report = run_witness(options);
    else if (command == "bounds")
      report = run_bounds(options);
    else if (command == "chain")
      report = run_chain(options);
    else if (command == "covering")
      report = run_covering(options);
    else if (command == "interpolate")
      report = run_interpolate(options);
    emit(report, options, out);
    return 0;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wordmaps
