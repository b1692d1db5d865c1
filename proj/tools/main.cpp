#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "app.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Exchange graphs of dissections of marked surfaces"};
  std::string command, configPath, format, out;
  int threads = 0;
  cli.add_option("command", command, "validate, shear, standard, flip, graph, check-connected, algebra, enumerate or selftest");
  cli.add_option("--config", configPath, "JSON job description");
  cli.add_option("--threads", threads, "worker threads for the exchange graph search (default: $TSURF_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  cli.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  cli.add_option("--out", out, "directory for artifacts and summary.json");
  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = cli.exit(e);
    return rc == 0 ? 0 : tsurf::app::kConfigError;
  }

  tsurf::app::JobConfig config;
  try {
    tsurf::io::json j = tsurf::io::json::object();
    if (!configPath.empty()) {
      std::ifstream f(configPath);
      if (!f) throw tsurf::io::ConfigError("cannot read " + configPath);
      try {
        j = tsurf::io::json::parse(f);
      } catch (const tsurf::io::json::parse_error& e) {
        throw tsurf::io::ConfigError(std::string("malformed JSON: ") + e.what());
      }
    }
    bool threadsInConfig = j.is_object() && j.contains("threads");
    config = tsurf::app::parse_config(j);
    if (!threadsInConfig)
      if (const char* env = std::getenv("TSURF_THREADS")) {
        try {
          config.threads = std::stoi(env);
        } catch (const std::exception&) {
          throw tsurf::io::ConfigError("TSURF_THREADS must be a positive integer");
        }
      }
  } catch (const tsurf::io::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return tsurf::app::kConfigError;
  }
  if (!command.empty()) config.command = command;
  if (threads > 0) config.threads = threads;
  if (!format.empty()) config.format = format;
  if (!out.empty()) config.out = out;
  return tsurf::app::run(config, std::cout, std::cerr);
}
