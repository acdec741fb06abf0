// Copyright 2026 The aqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "commands.hpp"

using aqnn::cli::Options;

int main(int argc, char** argv) {
  CLI::App app{"aqnn: attractor channels, coherence, dilations and diamond distances"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Entry entries[] = {
      {"apply", "apply a channel r times to a state", aqnn::cli::cmd_apply},
      {"iterate", "apply a channel r times and report the coherence trajectory", aqnn::cli::cmd_iterate},
      {"choi", "print the Choi state of a channel", aqnn::cli::cmd_choi},
      {"cptp-check", "decide complete positivity and trace preservation", aqnn::cli::cmd_cptp_check},
      {"classify", "place a channel in the incoherent-operation hierarchy", aqnn::cli::cmd_classify},
      {"dilate", "build and verify a Stinespring dilation", aqnn::cli::cmd_dilate},
      {"diamond", "diamond distance between two channels", aqnn::cli::cmd_diamond},
      {"experiment", "run a parameter sweep from a config file", aqnn::cli::cmd_experiment},
  };

  std::function<int(const Options&)> selected;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    const std::string name = e.name;
    if (name == "experiment") {
      sub->add_option("--config", o.config, "experiment config (JSON)")->required();
      sub->add_option("--out", o.out, "CSV output path (overrides output_path)");
      sub->add_option("--seed", o.seed, "seed when the config has none");
    } else {
      auto* spec = sub->add_option("--spec", o.specs, "channel spec (JSON)")->required();
      if (name == "diamond") {
        spec->expected(2);
      } else {
        spec->expected(1);
      }
      sub->add_option("--out", o.out, "output path (default stdout)");
    }
    if (name == "apply" || name == "iterate") {
      sub->add_option("--state", o.state, "input density matrix (JSON)")->required();
      sub->add_option("--iterations", o.iterations, "number of applications")
          ->check(CLI::PositiveNumber);
    }
    if (name == "classify") {
      sub->add_option("--seed", o.seed, "certificate search seed");
      sub->add_option("--budget", o.budget, "certificate search iterations");
    }
    if (name == "dilate") {
      sub->add_option("--method", o.method, "gio | sio | generic")
          ->check(CLI::IsMember({"gio", "sio", "generic"}));
      sub->add_option("--trials", o.trials, "random states for verification (default 100)");
      sub->add_option("--seed", o.seed, "verification seed");
    }
    if (name == "diamond") {
      sub->add_option("--method", o.method, "auto | analytic | interior_point")
          ->check(CLI::IsMember({"auto", "analytic", "interior_point"}));
      sub->add_option("--trials", o.trials, "random inputs for the lower bound (default 200)");
      sub->add_option("--seed", o.seed, "lower-bound seed");
    }
    sub->callback([&selected, run = e.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : aqnn::cli::kParse;
  }

  try {
    return selected(o);
  } catch (const aqnn::Error& e) {
    std::cerr << "aqnn: " << e.what() << '\n';
    return aqnn::cli::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "aqnn: " << e.what() << '\n';
    return aqnn::cli::kParse;
  }
}
