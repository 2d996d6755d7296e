#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wb/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite category theory workbench"};
  app.require_subcommand(1);

  wb::CommandOptions opt;
  std::string format = "plain", out;

  auto common = [&](CLI::App* sub) {
    sub->add_option("files", opt.files, "workspace documents");
    sub->add_option("--grade-bound", opt.load.grade_bound, "word weight bound of the list monad")->capture_default_str();
    sub->add_option("--probe-size", opt.load.probe_size, "size of probe objects in certificates")->capture_default_str();
    sub->add_option("--format", format, "plain or structured")->check(CLI::IsMember({"plain", "structured"}));
    sub->add_option("--out", out, "write the report (translate: the workspace) to this path");
  };

  auto* validate = app.add_subcommand("validate", "validate every structure in the workspace");
  common(validate);
  validate->add_option("--name", opt.name, "only this structure");

  auto* certify = app.add_subcommand("certify", "monad laws and cartesianness certificates");
  common(certify);
  certify->add_option("--monad", opt.monad, "monad reference, e.g. maybe or list(bound=3)");

  auto* translate = app.add_subcommand("translate", "apply a translation and add the result under a new name");
  common(translate);
  translate->add_option("--theorem", opt.theorem)->required()->check(CLI::IsMember(wb::theorem_names()));
  translate->add_option("--input", opt.input, "structure to translate")->required();
  translate->add_option("--as", opt.as, "name of the result")->required();

  auto* enumerate = app.add_subcommand("enumerate", "count structures up to a size bound");
  common(enumerate);
  enumerate->add_option("--what", opt.what)->required()->check(CLI::IsMember(wb::enumerable_names()));
  enumerate->add_option("--bound", opt.bound, "size bound")->capture_default_str();
  enumerate->add_option("--input", opt.input, "base category for dfibs");
  enumerate->add_option("--monad", opt.monad, "monad for algebras");
  enumerate->add_flag("--list", opt.list, "list the structures");

  auto* suite = app.add_subcommand("suite", "run an acceptance suite");
  common(suite);
  suite->add_option("--name", opt.name, "suite name or all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  try {
    auto res = wb::run_command(sub->get_name(), opt);
    auto fmt = format == "structured" ? wb::ReportFormat::Structured : wb::ReportFormat::Plain;
    auto text = wb::emit_report(res.report, fmt);
    if (sub == translate && !out.empty()) {
      std::ofstream(out) << res.workspace->dump(2) << "\n";
      std::cout << text;
    } else if (!out.empty()) {
      std::ofstream(out) << text;
    } else {
      std::cout << text;
    }
    return res.exit_code();
  } catch (const wb::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
