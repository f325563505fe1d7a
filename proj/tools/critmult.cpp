#include "critmult/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace critmult;

int main(int argc, char** argv) {
  CLI::App app{"Guaranteed alpha-intervals, reduced solver and expansion lab"};
  app.require_subcommand(1);

  std::map<Command, std::map<std::string, std::string>> values;
  std::map<Command, CLI::App*> subs;
  std::string format = "json";
  std::string output;
  const std::map<Command, std::string> blurb = {
      {Command::Interval, "guaranteed alpha-interval for one example"},
      {Command::Table, "intervals of the examples at default parameters"},
      {Command::Solve, "minimize the reduced quotient on a circle"},
      {Command::Expansion, "small-epsilon expansion of the bubble quotient"},
  };
  for (auto c : {Command::Interval, Command::Table, Command::Solve, Command::Expansion}) {
    auto* sub = app.add_subcommand(std::string(to_string(c)), blurb.at(c));
    subs[c] = sub;
    for (const auto& [key, doc] : parameter_docs(c)) {
      if (key == "all")
        sub->add_flag_callback("--all", [&values, c] { values[c]["all"] = "true"; }, doc);
      else
        sub->add_option("--" + key, values[c][key], doc);
    }
    sub->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", output, "write the result to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage;
  }

  RunRequest req;
  for (const auto& [c, sub] : subs) {
    if (!sub->parsed())
      continue;
    req.command = c;
    for (const auto& [key, doc] : parameter_docs(c))
      if (key == "all" ? values[c].count("all") : sub->count("--" + key) > 0)
        req.parameters[key] = values[c][key];
  }
  if (format == "csv")
    req.format = OutputFormat::Csv;
  else if (req.command == Command::Table && !subs[Command::Table]->count("--format"))
    req.format = OutputFormat::Csv;
  if (!output.empty())
    req.output_path = output;

  const auto res = run(req);
  if (!res.message.empty())
    std::cerr << res.message << '\n';
  if (res.status == exit_code::usage)
    std::cerr << subs[req.command]->help();
  std::cout << res.output;
  return res.status;
}
