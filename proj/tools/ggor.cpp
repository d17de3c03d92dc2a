// ggor: command-line front end. See `ggor --help`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ggor/cli.hpp"

int main(int argc, char** argv) {
  using namespace ggor::cli;
  CLI::App app{"Presentation matrices and Betti sequences of generalized Gorenstein ideals"};
  app.require_subcommand(1);

  std::string format = "text", order = "grevlex", output, budget;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", order, "Monomial order of the input ring")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--budget-seconds", budget, "Time cap per Groebner computation (default 60, env GGOR_BUDGET_SECONDS)");
  app.add_option("-o,--output", output, "Write the report to a file");

  JobSpec spec;
  std::vector<std::string> hom_parts;
  std::string input, seq, strategy = "largest", u, scenario;
  bool verify = false, no_verify = false, quick = false;

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("input", input, "JSON input file")->required()->check(CLI::ExistingFile);
    return c;
  };
  file_cmd("gamma", "gamma(M): normalized signed maximal minors");
  file_cmd("check", "Decide whether a matrix is a presentation matrix");
  file_cmd("resolve", "Length-3 resolution of a presentation matrix, or minimal resolution of an ideal")
      ->add_flag("--verify", verify, "Also run the exactness criterion on an ideal's resolution");
  file_cmd("zeta", "zeta(I) and the normalized last map");
  file_cmd("decompose", "I = I(B) cap (H) for an (n+1) x n matrix with distinguished last row");

  auto seq_options = [&](CLI::App* c) {
    auto* s = c->add_option("--seq", seq, "Betti sequence, e.g. \"(1,1,1;2,2,2;3)\"");
    auto* h = c->add_option("--homogeneous", hom_parts, "Homogeneous sequence n a b")->expected(3);
    s->excludes(h);
  };
  auto* classify = app.add_subcommand("betti-classify", "Essentiality verdict for a Betti sequence");
  seq_options(classify);
  auto* reduce = app.add_subcommand("betti-reduce", "Strip non-Gaeta blocks");
  seq_options(reduce);
  reduce->add_option("--strategy", strategy, "Choice of t")->check(CLI::IsMember({"largest", "smallest"}));
  auto* lift = app.add_subcommand("betti-lift", "Lift a sequence by u");
  seq_options(lift);
  lift->add_option("--u", u, "Comma-separated nonnegative integers")->required();
  auto* construct = app.add_subcommand("construct", "Build a presentation matrix realizing a sequence");
  seq_options(construct);
  construct->add_flag("--no-verify", no_verify, "Skip the resolution check");
  auto* paper = app.add_subcommand("verify-paper-example", "Reproduce a worked example from the fixtures");
  paper->add_option("scenario", scenario, "Scenario name")->required()->check(CLI::IsMember(scenarios()));
  paper->add_flag("--quick", quick, "closing-remark: height only, skip the full resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  spec.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) spec.input_path = input;
  if (!scenario.empty()) spec.scenario = scenario;
  spec.options["order"] = order;
  if (!budget.empty()) spec.options["budget-seconds"] = budget;
  if (!seq.empty()) spec.options["seq"] = seq;
  if (!hom_parts.empty()) {
    std::string joined;
    for (const auto& p : hom_parts) joined += (joined.empty() ? "" : " ") + p;
    spec.options["homogeneous"] = joined;
  }
  if (spec.command == "betti-reduce") spec.options["strategy"] = strategy;
  if (!u.empty()) spec.options["u"] = u;
  if (verify) spec.options["verify"] = "true";
  if (no_verify) spec.options["verify"] = "false";
  if (quick) spec.options["full"] = "false";

  JobResult res = run(spec);
  const std::string text = format == "json" ? res.report.dump(2) + "\n" : render_text(res.report);
  if (!output.empty()) {
    std::ofstream(output) << text;
  } else {
    std::cout << text;
  }
  return res.exit_code;
}
