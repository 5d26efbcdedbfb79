// stepfuzz: analyze stepwise problem-solving cohorts as fuzzy profile lattices.
//
// Exit codes: 0 success, 1 data error (unreadable/invalid input), 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stepfuzz/stepfuzz.hpp"

namespace {

using namespace stepfuzz;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read \"" + path + "\"");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

dataset_format format_of(const std::string& path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? dataset_format::csv
                                                                    : dataset_format::json;
}

struct report_options {
  std::string format = "markdown";
  int decimals = 3;
  bool include_zero_rows = false;
  std::string rounding = "half-even";
  std::vector<std::string> scale_names;

  report_config to_config() const {
    report_config config;
    if (format == "markdown")
      config.format = report_format::markdown;
    else if (format == "csv")
      config.format = report_format::csv;
    else if (format == "json")
      config.format = report_format::json;
    else
      throw usage_error("unknown format \"" + format + "\"");
    config.decimals = decimals;
    config.include_zero_rows = include_zero_rows;
    config.rounding = rounding == "exact" ? rounding_mode::exact : rounding_mode::half_even;
    return config;
  }
};

void add_report_options(CLI::App* cmd, report_options& opts) {
  cmd->add_option("--format", opts.format, "Report format: markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  cmd->add_option("--decimals", opts.decimals, "Displayed decimal places (default 3)")
      ->check(CLI::Range(1, 12));
  cmd->add_flag("--include-zero-rows", opts.include_zero_rows,
                "Keep profiles whose values are all zero");
  cmd->add_option("--rounding", opts.rounding, "Value display: half-even or exact rationals")
      ->check(CLI::IsMember({"half-even", "exact"}));
  cmd->add_option("--scale", opts.scale_names,
                  "Expected label names, e.g. --scale a,b,c,d,e")
      ->delimiter(',');
}

struct loaded_group {
  cohort_dataset dataset;
  group_assessment assessment;
};

loaded_group load_group(const std::string& path, const std::vector<std::string>& expected_scale) {
  auto dataset = parse_dataset(load_file(path), format_of(path));
  if (dataset.group_name.empty())
    dataset.group_name = std::filesystem::path(path).stem().string();
  if (!expected_scale.empty() && dataset.scale_names != expected_scale)
    throw validation_error("\"" + path + "\" declares a different scale than --scale");
  const auto scale = scale_from_names(dataset.scale_names);
  std::vector<fuzzy_step_set> steps;
  for (const auto& sc : to_step_counts(dataset, scale)) steps.push_back(build_fuzzy_step(sc, scale));
  auto assessment = assess_group(dataset.group_name, scale, std::move(steps));
  return {std::move(dataset), std::move(assessment)};
}

std::string entropy_text(double h) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", h);
  return buffer;
}

void print_step_sets_markdown(std::ostream& out, const group_assessment& a) {
  out << "| step |";
  for (const auto& l : a.scale.labels()) out << " " << l.name << " |";
  out << "\n|";
  for (int i = 0; i <= a.scale.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& s : a.steps) {
    out << "| " << s.step_name << " |";
    for (const auto& m : s.memberships) out << " " << m.to_string() << " |";
    out << "\n";
  }
}

void print_group_summary(std::ostream& out, const group_assessment& a) {
  out << "## " << a.group_name << "\n\n";
  print_step_sets_markdown(out, a);
  out << "\n";
  out << "max membership = " << a.max_membership.to_string() << " ("
      << format_decimal_half_even(a.max_membership, 6) << ")\n";
  if (a.degenerate) out << "degenerate lattice: every membership is zero\n";
  out << "H = " << entropy_text(a.entropy) << "\n\n";
}

nlohmann::ordered_json step_set_json(const fuzzy_step_set& s, const label_scale& scale) {
  nlohmann::ordered_json memberships;
  for (int i = 0; i < scale.size(); ++i) {
    const auto& m = s.memberships[static_cast<std::size_t>(i)];
    memberships[scale[i].name] = {{"num", m.num()}, {"den", m.den()}};
  }
  return {{"name", s.step_name}, {"memberships", memberships}};
}

nlohmann::ordered_json group_json(const group_assessment& a) {
  nlohmann::ordered_json doc;
  doc["group"] = a.group_name;
  doc["scale"] = a.scale.names();
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : a.steps) steps.push_back(step_set_json(s, a.scale));
  doc["steps"] = steps;
  doc["max_membership"] = {{"num", a.max_membership.num()}, {"den", a.max_membership.den()}};
  doc["entropy"] = a.entropy;
  doc["degenerate"] = a.degenerate;
  doc["lattice_size"] = a.lattice_size;
  return doc;
}

void print_diff(std::ostream& out, const table_diff& diff, const std::string& table_name) {
  out << "diff against \"" << table_name << "\" (tolerance 0.01): " << diff.matches << " match, "
      << diff.roundings << " rounding, " << diff.conflicts << " conflict"
      << (diff.conflicts == 1 ? "" : "s") << "\n";
  for (const auto& cell : diff.cells) {
    if (cell.kind != diff_kind::conflict) continue;
    out << "  conflict: (";
    for (std::size_t i = 0; i < cell.profile_labels.size(); ++i)
      out << (i ? "," : "") << cell.profile_labels[i];
    out << ") column " << cell.column << ": computed " << cell.computed.to_string() << " = "
        << format_decimal_half_even(cell.computed, 3) << " vs printed "
        << format_decimal_half_even(cell.printed, 3) << "\n";
  }
}

int run_analyze(const std::string& input, const std::string& compat_path,
                const report_options& opts) {
  const auto config = opts.to_config();
  const auto group = load_group(input, opts.scale_names);
  const auto& a = group.assessment;
  const std::vector<group_assessment> groups{a};

  if (config.format == report_format::csv) {
    std::cout << render_lattice(groups, nullptr, config);
    std::cerr << "H = " << entropy_text(a.entropy) << "\n";
  } else if (config.format == report_format::json) {
    auto doc = group_json(a);
    doc["lattice"] = nlohmann::ordered_json::parse(render_lattice(groups, nullptr, config));
    std::cout << doc.dump(2) << "\n";
  } else {
    print_group_summary(std::cout, a);
    std::cout << "profiles with nonzero values:\n\n"
              << render_lattice(groups, nullptr, config) << "\n";
  }

  if (!compat_path.empty()) {
    const auto table = parse_reference_table(load_file(compat_path));
    const auto compat = assess_from_table(table, a.scale);
    std::cout << "replay of \"" << table.name << "\" through the same pipeline:\n";
    std::cout << "H (paper-compat) = " << entropy_text(compat.entropy) << "\n";
    print_diff(std::cout, diff_against_fixture(a, table), table.name);
  }
  return 0;
}

int run_combine(const std::vector<std::string>& inputs, const report_options& opts) {
  const auto config = opts.to_config();
  std::vector<loaded_group> loaded;
  for (const auto& path : inputs) loaded.push_back(load_group(path, opts.scale_names));
  std::vector<group_assessment> groups;
  for (auto& g : loaded) groups.push_back(std::move(g.assessment));
  const auto combined = combine(groups);

  if (config.format == report_format::csv) {
    std::cout << render_lattice(groups, &combined, config);
  } else if (config.format == report_format::json) {
    nlohmann::ordered_json doc;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : groups) arr.push_back(group_json(g));
    doc["groups"] = arr;
    doc["max_pseudo_frequency"] = {{"num", combined.max_pseudo_frequency.num()},
                                   {"den", combined.max_pseudo_frequency.den()}};
    doc["degenerate"] = combined.degenerate;
    doc["lattice"] = nlohmann::ordered_json::parse(render_lattice(groups, &combined, config));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "# combined: ";
    for (std::size_t i = 0; i < combined.group_names.size(); ++i)
      std::cout << (i ? " + " : "") << combined.group_names[i];
    std::cout << "\n\n";
    for (const auto& g : groups) print_group_summary(std::cout, g);
    std::cout << "max pseudo-frequency = " << combined.max_pseudo_frequency.to_string() << " ("
              << format_decimal_half_even(combined.max_pseudo_frequency, 6) << ")\n\n";
    std::cout << "profiles with nonzero values:\n\n"
              << render_lattice(groups, &combined, config) << "\n";
  }
  return 0;
}

int run_simulate(std::int64_t cohort, int steps, std::uint64_t seed, const std::string& skill_name,
                 std::int64_t total, const std::string& group_name) {
  skill_profile skill = skill_profile::uniform;
  if (skill_name == "strong")
    skill = skill_profile::strong;
  else if (skill_name == "weak")
    skill = skill_profile::weak;
  else if (skill_name != "uniform")
    throw usage_error("unknown skill \"" + skill_name + "\"");
  try {
    std::cout << simulate_dataset_json(cohort, steps, seed, skill, total, group_name);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
  return 0;
}

int run_fixtures(const std::string& dir) {
  const auto written = fixtures::write_files(dir.empty() ? "." : dir);
  for (const auto& path : written) std::cerr << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy profile-lattice assessment of stepwise problem-solving cohorts"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_input;
  std::string compat_path;
  report_options analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Assess one cohort dataset");
  analyze->add_option("input", analyze_input, "Dataset file (.json or .csv)")->required();
  analyze->add_option("--paper-compat", compat_path,
                      "Reference table to replay through the possibility/entropy pipeline");
  add_report_options(analyze, analyze_opts);

  // combine
  std::vector<std::string> combine_inputs;
  report_options combine_opts;
  auto* combine_cmd = app.add_subcommand("combine", "Combine two or more cohort datasets");
  combine_cmd->add_option("inputs", combine_inputs, "Dataset files")->expected(2, -1);
  add_report_options(combine_cmd, combine_opts);

  // simulate
  std::int64_t sim_cohort = 20;
  int sim_steps = 3;
  std::uint64_t sim_seed = 0;
  std::string sim_skill = "uniform";
  std::int64_t sim_total = 4;
  std::string sim_group;
  auto* simulate = app.add_subcommand("simulate", "Emit a synthetic per-solver dataset");
  simulate->add_option("-n,--cohort", sim_cohort, "Number of solvers")->required();
  simulate->add_option("-k,--steps", sim_steps, "Number of steps")->required();
  simulate->add_option("--seed", sim_seed, "Generator seed (output is deterministic per seed)");
  simulate->add_option("--skill", sim_skill, "Skill profile: uniform, strong or weak")
      ->check(CLI::IsMember({"uniform", "strong", "weak"}));
  simulate->add_option("--total", sim_total, "Problems per step (default 4)");
  simulate->add_option("--group", sim_group, "Group name for the emitted dataset");

  // fixtures
  std::string fixtures_dir;
  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "Write the bundled classroom datasets and reference tables");
  fixtures_cmd->add_option("--dir", fixtures_dir, "Target directory (default: current)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_input, compat_path, analyze_opts);
    if (combine_cmd->parsed()) {
      if (combine_inputs.size() < 2) throw usage_error("combine needs at least 2 inputs");
      return run_combine(combine_inputs, combine_opts);
    }
    if (simulate->parsed())
      return run_simulate(sim_cohort, sim_steps, sim_seed, sim_skill, sim_total, sim_group);
    if (fixtures_cmd->parsed()) return run_fixtures(fixtures_dir);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "invalid data: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
