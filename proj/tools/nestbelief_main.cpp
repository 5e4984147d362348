// Copyright 2026 The nestbelief Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nestbelief/errors.hpp"
#include "nestbelief/scenario.hpp"

namespace {

using nestbelief::RenderFormat;

struct Options {
  std::size_t max_depth = 5;
  std::size_t max_steps = 8;
  std::size_t max_nodes = 200000;
  std::vector<std::string> libraries;
  std::string format = "ascii";
  std::string trace_file;
  std::string scenario;
};

std::string describe(const nestbelief::ParseError& e) {
  std::string out = "expected " + e.expected();
  if (!e.found().empty()) out += ", found '" + e.found() + "'";
  return out;
}

nestbelief::RunConfig make_config(const Options& o) {
  nestbelief::RunConfig c;
  c.max_depth = o.max_depth;
  c.limits.max_steps = o.max_steps;
  c.limits.max_nodes = o.max_nodes;
  c.libraries = o.libraries;
  c.show_format = o.format == "json" ? RenderFormat::Json : RenderFormat::Ascii;
  return c;
}

bool write_trace(const std::string& path, const nestbelief::Trace& trace) {
  if (path.empty()) return true;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << trace.to_json();
  return true;
}

int run_file(const Options& o) {
  std::ifstream in(o.scenario, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << o.scenario << "\n";
    return nestbelief::kExitParseOrIo;
  }
  std::ostringstream text;
  text << in.rdbuf();

  nestbelief::RunConfig config = make_config(o);
  config.base_dir = std::filesystem::path(o.scenario).parent_path();
  if (config.base_dir.empty()) config.base_dir = ".";

  std::vector<nestbelief::ScenarioCommand> commands;
  try {
    commands = nestbelief::parse_scenario(text.str());
  } catch (const nestbelief::ParseError& e) {
    std::cerr << o.scenario << ":" << e.line() << ":" << e.column() << ": " << describe(e) << "\n";
    return nestbelief::kExitParseOrIo;
  }
  const nestbelief::RunResult r = nestbelief::run(commands, config);
  std::cout << (o.format == "json" ? r.trace.to_json() : r.trace.to_text());
  if (!write_trace(o.trace_file, r.trace)) return nestbelief::kExitParseOrIo;
  return r.exit_status;
}

int brace_balance(const std::string& s) {
  int depth = 0;
  bool quoted = false;
  char quote = 0;
  for (char c : s) {
    if (quoted) {
      if (c == quote) quoted = false;
      continue;
    }
    if (c == '#') break;
    if (c == '\'' || c == '"') {
      quoted = true;
      quote = c;
    } else if (c == '{' || c == '(') {
      ++depth;
    } else if (c == '}' || c == ')') {
      --depth;
    }
  }
  return depth;
}

int repl(const Options& o) {
  nestbelief::ScenarioRunner runner(make_config(o));
  std::string pending;
  std::size_t shown = runner.trace().events().size();
  auto flush = [&] {
    const auto& events = runner.trace().events();
    nestbelief::Trace fresh;
    for (std::size_t i = shown; i < events.size(); ++i) fresh.add(events[i]);
    shown = events.size();
    std::cout << fresh.to_text();
  };
  flush();
  std::string line;
  while (true) {
    std::cout << (pending.empty() ? "nb> " : "... ") << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (pending.empty() && (line == "quit" || line == "exit")) break;
    pending += line + "\n";
    if (brace_balance(pending) > 0) continue;
    try {
      runner.execute_text(pending);
    } catch (const nestbelief::ParseError& e) {
      std::cout << "parse error at column " << e.column() << ": " << describe(e) << "\n";
    }
    pending.clear();
    flush();
  }
  std::cout << "\n";
  if (!write_trace(o.trace_file, runner.trace())) return nestbelief::kExitParseOrIo;
  return runner.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nestbelief: nested belief environments, speech acts and planning"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-depth", o.max_depth, "Nesting limit for belief environments")
      ->default_val(5);
  app.add_option("--max-steps", o.max_steps, "Step limit for planning")->default_val(8);
  app.add_option("--max-nodes", o.max_nodes, "Search node limit for planning")
      ->default_val(200000);
  app.add_option("--library", o.libraries, "Act/operator library file (repeatable)");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"ascii", "json"}))
      ->default_val("ascii");
  app.add_option("--trace", o.trace_file, "Write the JSON trace to this file");

  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", o.scenario, "Scenario file")->required();
  CLI::App* rep = app.add_subcommand("repl", "Interactive session");
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : nestbelief::kExitParseOrIo;
  }
  if (*run) return run_file(o);
  if (*rep) return repl(o);
  return 0;
}
