// Copyright 2026 The VPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vps/error.hpp"

namespace vps::cli {
namespace {

// Fills options that were not given on the command line from a JSON object
// whose keys mirror the flag names.
void ApplyConfig(const std::string& path, const CLI::App& app, Options* o) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!cfg.is_object()) throw ParseError("config: expected a JSON object");
  auto unset = [&](const char* flag) {
    const CLI::Option* opt = app.get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  try {
    for (const auto& [key, value] : cfg.items()) {
      const std::string flag = "--" + key;
      if (!unset(flag.c_str())) continue;
      if (key == "json") {
        o->json = value.get<bool>();
      } else if (key == "out") {
        o->out = value.get<std::string>();
      } else if (key == "jobs") {
        o->jobs = value.get<int>();
      } else if (key == "grid") {
        o->grid = value.get<int>();
      } else if (key == "tol") {
        o->tol = value.get<double>();
      } else if (key == "dist") {
        o->dist = value.get<std::string>();
      } else if (key == "loss") {
        o->loss = value.get<std::string>();
      } else if (key == "env") {
        o->env = value.get<std::string>();
      } else if (key == "mu0") {
        o->mu0 = value.is_string() ? value.get<std::string>() : value.dump();
      } else {
        throw ParseError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

void AddCommonFlags(CLI::App* app, Options* o, std::string* config) {
  app->add_flag("--json", o->json, "Machine-readable JSON output");
  app->add_option("--out", o->out, "Write output to this path");
  app->add_option("--jobs", o->jobs, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--grid", o->grid, "Grid size override")->check(CLI::PositiveNumber);
  app->add_option("--tol", o->tol, "Tolerance for oracle comparisons");
  app->add_option("--dist", o->dist, "Distribution literal");
  app->add_option("--loss", o->loss, "Proposer loss literal");
  app->add_option("--env", o->env, "Binary environment literal");
  app->add_option("--mu0", o->mu0, "Prior list for figure 5");
  app->add_option("--config", *config, "JSON file with flag defaults");
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Veto bargaining with persuasion: solvers and oracles", "vps"};
  app.require_subcommand(1);
  Options opts;
  std::string config;

  std::string model, timing, instance, loss, parameter, values;
  int figure_id = 0;

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("model", model, "quad | linear2 | linear3")->required();
  solve->add_option("timing", timing, "persuasion-first | proposal-first")->required();
  solve->add_option("instance", instance, "Distribution or environment literal")
      ->required();
  solve->add_option("loss_literal", loss, "Proposer loss literal (or --loss)");
  AddCommonFlags(solve, &opts, &config);

  CLI::App* sweep = app.add_subcommand("sweep", "Comparative-statics sweep (CSV)");
  sweep->add_option("parameter", parameter, "risk | tilt | theta-hi")->required();
  sweep->add_option("values", values, "List a,b,c or range lo:hi:n")->required();
  AddCommonFlags(sweep, &opts, &config);

  CLI::App* figure = app.add_subcommand("figure", "Emit figure data (CSV)");
  figure->add_option("id", figure_id, "Figure number 1..6")->required();
  AddCommonFlags(figure, &opts, &config);

  CLI::App* oracle = app.add_subcommand("oracle", "Cross-check against oracles");
  oracle->add_option("model", model, "quad | linear2 | linear3")->required();
  oracle->add_option("instance", instance, "Distribution or environment literal")
      ->required();
  oracle->add_option("loss_literal", loss, "Proposer loss literal (or --loss)");
  AddCommonFlags(oracle, &opts, &config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_msg;
    std::ostringstream e_msg;
    const int code = app.exit(e, o_msg, e_msg);
    out << o_msg.str();
    err << e_msg.str();
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config.empty()) ApplyConfig(config, *active, &opts);
    if (loss.empty()) loss = opts.loss;
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opts.out.empty()) {
      file.open(opts.out);
      if (!file) throw ParseError("cannot open output file '" + opts.out + "'");
      sink = &file;
    }
    if (active == solve) return CmdSolve(model, timing, instance, loss, opts, *sink);
    if (active == sweep) return CmdSweep(parameter, values, opts, *sink);
    if (active == figure) return CmdFigure(figure_id, opts, *sink);
    return CmdOracle(model, instance, loss, opts, *sink);
  } catch (const vps::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace vps::cli
