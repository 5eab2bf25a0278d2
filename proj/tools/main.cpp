#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgbccm/cli.hpp"

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mgbccm::cli::ParseError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Secrecy rate regions for the two-user multi-antenna Gaussian broadcast "
      "channel with confidential messages"};

  std::string config_path;
  std::string command_list;
  std::string out_dir = "out";
  std::string format;
  int alpha_grid = 0;
  int tau_grid = 0;

  app.add_option("--config", config_path, "channel configuration file")->required();
  app.add_option("--command", command_list,
                 "comma-separated subset of region,outer,timeshare,verify,compare");
  app.add_option("--out", out_dir, "output directory (default: out)");
  app.add_option("--format", format, "output format: csv or json");
  app.add_option("--alpha-grid", alpha_grid, "number of alpha samples (>= 2)");
  app.add_option("--tau-grid", tau_grid, "number of time-sharing samples (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  try {
    mgbccm::cli::RunConfig config = mgbccm::cli::parse_config(read_text(config_path));

    if (!command_list.empty()) {
      config.commands.clear();
      std::stringstream ss(command_list);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (!name.empty()) config.commands.push_back(mgbccm::cli::command_from_string(name));
      }
    }
    if (!format.empty()) {
      if (format == "csv") {
        config.format = mgbccm::cli::OutputFormat::csv;
      } else if (format == "json") {
        config.format = mgbccm::cli::OutputFormat::json;
      } else {
        throw mgbccm::cli::ParseError("format must be csv or json");
      }
    }
    if (alpha_grid != 0) {
      if (alpha_grid < 2) throw mgbccm::cli::ParseError("--alpha-grid must be >= 2");
      config.n_alpha = alpha_grid;
    }
    if (tau_grid != 0) {
      if (tau_grid < 2) throw mgbccm::cli::ParseError("--tau-grid must be >= 2");
      config.n_tau = tau_grid;
    }

    const int status = mgbccm::cli::run(config, out_dir);
    if (status == 0) {
      std::cout << "ok: outputs written to " << out_dir << "\n";
    } else {
      std::cerr << "verification failure: see reports in " << out_dir << "\n";
    }
    return status;
  } catch (const mgbccm::cli::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
