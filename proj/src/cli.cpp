#include "sncdp/cli.hpp"

#include <CLI11.hpp>

#include "sncdp/report.hpp"

namespace sncdp {

namespace {

struct Options {
  int rank = 2;
  int n_max = 8;
  int b_max = 8;
  std::string example;
  bool show_intermediates = false;
  bool emit_setup = false;
  std::string file;
};

void append_evaluation(Json& report, const Evaluation& ev, bool show_intermediates) {
  report["results"] = ev.results;
  if (show_intermediates) report["intermediates"] = ev.intermediates;
  report["checks"] = ev.checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local invariants of snc del Pezzo surfaces", "sncdp"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "List local snc del Pezzo configurations");
  classify_cmd->add_option("--rank", o.rank, "Number of components")->required()->check(CLI::IsMember({2, 3}));
  classify_cmd->add_option("--nmax", o.n_max, "Largest Hirzebruch index")->check(CLI::Range(0, 64));
  classify_cmd->add_option("--bmax", o.b_max, "Largest fiber coefficient of a boundary curve")->check(CLI::Range(0, 64));

  auto* example_cmd = app.add_subcommand("example", "Evaluate a built-in example");
  example_cmd->add_option("name", o.example, "Example name")->required()->check(CLI::IsMember(builtin_example_names()));
  example_cmd->add_flag("--show-intermediates", o.show_intermediates, "Include every intermediate class");
  example_cmd->add_flag("--emit-setup", o.emit_setup, "Print the example as a setup file instead");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a setup file");
  eval_cmd->add_option("file", o.file, "Setup file")->required();
  eval_cmd->add_flag("--show-intermediates", o.show_intermediates, "Include every intermediate class");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'sncdp --help' for usage\n";
    return 2;
  }

  try {
    if (classify_cmd->parsed()) {
      Json report = report_header("classify", {{"rank", o.rank}, {"nmax", o.n_max}, {"bmax", o.b_max}});
      report["results"] = classification_results(classify(o.rank, o.n_max, o.b_max));
      out << dump_report(report);
    } else if (example_cmd->parsed()) {
      SetupDocument doc = builtin_document(o.example);
      if (o.emit_setup) {
        out << serialize_setup(doc);
        return 0;
      }
      Json report = report_header("example", {{"name", o.example}, {"show_intermediates", o.show_intermediates}});
      append_evaluation(report, evaluate(doc), o.show_intermediates);
      out << dump_report(report);
    } else if (eval_cmd->parsed()) {
      SetupDocument doc = load_setup(o.file);
      Json report = report_header("eval", {{"file", o.file}, {"show_intermediates", o.show_intermediates}});
      append_evaluation(report, evaluate(doc), o.show_intermediates);
      out << dump_report(report);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sncdp
