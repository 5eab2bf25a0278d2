#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mgbccm/cli.hpp"

using namespace mgbccm;
namespace fs = std::filesystem;

namespace {

const char* kExample1 =
    "h = [1.5, 0]\n"
    "g = [1.801, 0.872]\n"
    "power = 10\n"
    "mode = real\n";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mgbccm_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing accepts the reference channels") {
  const cli::RunConfig config = cli::parse_config(kExample1);
  CHECK(config.channel.h[0].real() == 1.5);
  CHECK(config.channel.g[1].real() == 0.872);
  CHECK(config.channel.power == 10.0);
  CHECK(config.channel.mode == Mode::real_alphabet);
  CHECK(config.n_alpha == 201);
  CHECK(config.n_tau == 101);
  CHECK(config.format == cli::OutputFormat::csv);
  CHECK(config.commands.empty());
}

TEST_CASE("config parsing reads every optional key") {
  const cli::RunConfig config = cli::parse_config(
      "h = [1.414, 1.414]\n"
      "g = [0.4, 1.959]\n"
      "power = 10\n"
      "mode = real\n"
      "alpha_grid = 51\n"
      "tau_grid = 21\n"
      "format = json\n"
      "commands = region, verify\n");
  CHECK(config.n_alpha == 51);
  CHECK(config.n_tau == 21);
  CHECK(config.format == cli::OutputFormat::json);
  REQUIRE(config.commands.size() == 2);
  CHECK(config.commands[0] == cli::Command::region);
  CHECK(config.commands[1] == cli::Command::verify);
}

TEST_CASE("complex vector literals") {
  const cli::RunConfig config = cli::parse_config(
      "h = [1+2i, -i]\n"
      "g = [3i, 1.5-0.25i]\n"
      "power = 4\n");
  CHECK(config.channel.h[0] == Complex(1.0, 2.0));
  CHECK(config.channel.h[1] == Complex(0.0, -1.0));
  CHECK(config.channel.g[0] == Complex(0.0, 3.0));
  CHECK(config.channel.g[1] == Complex(1.5, -0.25));
}

TEST_CASE("config errors carry line context") {
  auto message_of = [](const std::string& text) {
    try {
      cli::parse_config(text);
      return std::string("no error");
    } catch (const cli::ParseError& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("h = [1, 0]\ng = [0, 1]\npower = 10\nwidgets = 3\n").find("widgets") !=
        std::string::npos);
  CHECK(message_of("h = [1, 0]\ng = [0, 1, 2]\npower = 10\n").find("different lengths") !=
        std::string::npos);
  CHECK(message_of("h = [1, 0]\ng = [0, 1]\npower = -10\n").find("line 3") !=
        std::string::npos);
  CHECK(message_of("h = [1, oops]\ng = [0, 1]\npower = 10\n").find("line 1") !=
        std::string::npos);
  CHECK(message_of("g = [0, 1]\npower = 10\n").find("'h'") != std::string::npos);
  CHECK(message_of("h = [1, 0]\ng = [0, 1]\npower = 10\nmode = octarine\n").find("mode") !=
        std::string::npos);
  CHECK(message_of("h [1, 0]\n").find("key = value") != std::string::npos);
}

TEST_CASE("run rejects an empty command list") {
  cli::RunConfig config = cli::parse_config(kExample1);
  CHECK_THROWS_AS(cli::run(config, fresh_dir("none")), cli::ParseError);
}

TEST_CASE("identical configs produce byte-identical outputs") {
  cli::RunConfig config = cli::parse_config(kExample1);
  config.n_alpha = 31;
  config.n_tau = 11;
  config.commands = {cli::Command::region, cli::Command::timeshare, cli::Command::verify,
                     cli::Command::compare};
  const fs::path dir_a = fresh_dir("det_a"), dir_b = fresh_dir("det_b");
  CHECK(cli::run(config, dir_a) == 0);
  CHECK(cli::run(config, dir_b) == 0);
  for (const char* name : {"region_frontier.csv", "region_hull.csv", "timeshare.csv",
                           "report.json", "compare.json"}) {
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));
  }
}

TEST_CASE("csv numbers carry 12 significant digits") {
  cli::RunConfig config = cli::parse_config(kExample1);
  config.n_alpha = 11;
  config.commands = {cli::Command::region};
  const fs::path dir = fresh_dir("fmt");
  CHECK(cli::run(config, dir) == 0);
  const std::string text = slurp(dir / "region_frontier.csv");
  CHECK(text.find("alpha,gamma1,gamma2,r1,r2") == 0);
  CHECK(text.find("9.84933993813") != std::string::npos);  // lambda2 to 12 digits
  CHECK(text.find(',') != std::string::npos);
  CHECK(text.find(';') == std::string::npos);
}

TEST_CASE("json format emits arrays of records") {
  cli::RunConfig config = cli::parse_config(kExample1);
  config.n_alpha = 11;
  config.format = cli::OutputFormat::json;
  config.commands = {cli::Command::region, cli::Command::outer};
  const fs::path dir = fresh_dir("json");
  CHECK(cli::run(config, dir) == 0);
  CHECK(slurp(dir / "region_frontier.json").front() == '[');
  CHECK(slurp(dir / "outer.json").front() == '[');
}

TEST_CASE("degenerate channel emits a notice and still succeeds") {
  cli::RunConfig config = cli::parse_config(
      "h = [1.5, 0.7]\n"
      "g = [1.5, 0.7]\n"
      "power = 10\n");
  config.n_alpha = 11;
  config.commands = {cli::Command::region};
  const fs::path dir = fresh_dir("degenerate");
  CHECK(cli::run(config, dir) == 0);
  CHECK(fs::exists(dir / "region_notice.txt"));
  const std::string hull = slurp(dir / "region_hull.csv");
  CHECK(hull == "r1,r2\n0,0\n");
}

TEST_CASE("a failed verification reports status 2") {
  cli::RunConfig config = cli::parse_config(kExample1);
  config.n_alpha = 11;
  config.commands = {cli::Command::compare};
  const double saved = numeric_policy().coincidence_abs;
  numeric_policy().coincidence_abs = 1e-300;  // nothing can meet this
  const int status = cli::run(config, fresh_dir("fail"));
  numeric_policy().coincidence_abs = saved;
  CHECK(status == 2);
}

TEST_CASE("verify and compare succeed on the reference channel") {
  cli::RunConfig config = cli::parse_config(kExample1);
  config.n_alpha = 31;
  config.commands = {cli::Command::verify, cli::Command::compare};
  const fs::path dir = fresh_dir("verify");
  CHECK(cli::run(config, dir) == 0);
  const std::string report = slurp(dir / "report.json");
  CHECK(report.find("\"pass\": true") != std::string::npos);
  CHECK(report.find("outer-inner-rate1") != std::string::npos);
  const std::string compare = slurp(dir / "compare.json");
  CHECK(compare.find("\"pass\": true") != std::string::npos);
}
