// Copyright 2026 The Courant Lab Authors
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

#ifndef COURANT_CLI_HPP_
#define COURANT_CLI_HPP_

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "courant/report.hpp"

namespace courant {

// Either a configuration to run or an exit status to return at once.
using ParseOutcome = std::variant<RunConfig, int>;

inline ParseOutcome parse_command_line(const std::vector<std::string>& args,
                                       std::ostream& out, std::ostream& err) {
  CLI::App app{"Courant-sharp eigenvalue laboratory", "courant_lab"};
  app.require_subcommand(1);

  std::string domain = "equilateral", pair, theta, format, output;
  int resolution = 512, count = 0;
  bool stamp = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--domain", domain,
                    "torus | equilateral | right-isosceles | hemiequilateral");
    sub->add_option("--format", format, "csv | json | svg");
    sub->add_option("--out", output, "output file (default stdout)");
    sub->add_flag("--stamp", stamp, "write a metadata sidecar next to --out");
  };
  const auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--pair", pair, "mode pair m,n");
  };
  const auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--theta", theta, "radians, pi/6, pi/12 or theta_c");
  };
  const auto add_resolution = [&](CLI::App* sub) {
    sub->add_option("--resolution", resolution, "grid samples per unit length");
  };

  std::map<CLI::App*, std::string> names;
  const auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    names[s] = name;
    add_common(s);
    return s;
  };
  CLI::App* spectrum = sub("spectrum", "list eigenvalues");
  spectrum->add_option("--count", count, "eigenvalues to cover");
  sub("screen", "Faber-Krahn screening summary");
  add_resolution(sub("verdict", "Courant-sharp verdicts"));
  for (const char* name : {"nodal", "plot"}) {
    CLI::App* s = sub(name, std::string(name) == "nodal" ? "count nodal domains"
                                                          : "nodal set as SVG");
    add_pair(s);
    add_theta(s);
    add_resolution(s);
  }
  CLI::App* cz = sub("critical-zeros", "edge and median critical zeros");
  add_pair(cz);
  add_theta(cz);
  add_pair(sub("fixed-points", "common zeros of C and S"));
  sub("bifurcation", "bifurcation point and angle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  RunConfig c;
  const auto chosen = app.get_subcommands();
  c.command = *parse_command(names.at(chosen.front()));
  const auto d = parse_domain(domain);
  if (!d) {
    err << "error: unknown domain '" << domain << "'\n" << app.help();
    return kExitValidation;
  }
  c.domain = *d;
  if (!pair.empty()) {
    c.mode = parse_pair(pair);
    if (!c.mode) {
      err << "error: --pair expects m,n\n";
      return kExitValidation;
    }
  }
  if (!theta.empty()) {
    c.theta = parse_theta(theta);
    if (!c.theta) {
      err << "error: cannot read --theta '" << theta << "'\n";
      return kExitValidation;
    }
  }
  if (!format.empty()) {
    c.format = parse_format(format);
    if (!c.format) {
      err << "error: unknown format '" << format << "'\n";
      return kExitValidation;
    }
  }
  c.resolution = resolution;
  c.count = count;
  c.output_path = output;
  c.stamp = stamp;
  return c;
}

inline int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const ParseOutcome parsed = parse_command_line(args, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), std::cout, std::cerr);
}

}  // namespace courant

#endif  // COURANT_CLI_HPP_
