#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torusadm/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"admissibility of rank-one local systems on line-arrangement "
               "complements"};
  app.require_subcommand(1);

  torusadm::CliOptions opts;
  unsigned long long budget_value = 0;

  auto add_common = [&](CLI::App* sub, bool wants_point) {
    sub->add_option("arrangement", opts.arrangement_path,
                    "arrangement JSON file")
        ->required();
    if (wants_point)
      sub->add_option("point", opts.point_path,
                      "torus point JSON file (per-line exponents)")
          ->required();
    sub->add_flag("--json", opts.json, "machine-readable output");
  };

  auto* phi =
      app.add_subcommand("phi", "forms of Phi taking the value 1 at a point");
  add_common(phi, true);

  auto* check = app.add_subcommand("check", "decide admissibility of a point");
  add_common(check, true);
  check->add_flag("--betti", opts.betti,
                  "also report twisted Betti numbers (admissible points)");

  auto* strata =
      app.add_subcommand("strata", "enumerate the non-admissible locus");
  add_common(strata, false);
  strata->add_flag("--essential", opts.essential,
                   "only strata with no coordinate equal to 1");
  auto* budget_opt = strata->add_option(
      "--budget", budget_value,
      "max candidate subsets to examine (env STRATUM_BUDGET)");
  strata->add_option("--jobs", opts.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  strata->add_option("--forms", opts.forms,
                     "comma-separated form labels to restrict to");

  auto* components =
      app.add_subcommand("components", "subtorus attached to a form subset");
  add_common(components, false);
  components->add_option("--forms", opts.forms,
                         "comma-separated form labels (default: all)");

  auto* resonance =
      app.add_subcommand("resonance", "degree-1 cohomology of a class");
  resonance
      ->add_option("arrangement", opts.arrangement_path,
                   "arrangement JSON file")
      ->required();
  resonance
      ->add_option("class", opts.class_path,
                   "class JSON file with per-line \"weights\"")
      ->required();
  resonance->add_flag("--json", opts.json, "machine-readable output");

  auto* report =
      app.add_subcommand("report", "full report for one point");
  add_common(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto* sub : {phi, check, strata, components, resonance, report})
    if (sub->parsed()) opts.verb = sub->get_name();
  if (budget_opt->count() > 0) opts.budget = budget_value;

  return torusadm::run_cli(opts, std::cout, std::cerr);
}
