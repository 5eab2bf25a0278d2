#include "mgbccm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mgbccm/baselines.hpp"
#include "mgbccm/sato.hpp"
#include "mgbccm/sdpc.hpp"

namespace mgbccm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw ParseError("config line " + std::to_string(line_no) + ": " + message);
}

double parse_real(const std::string& text, int line_no) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);  // from_chars rejects a leading '+'
  double value = 0.0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) fail(line_no, "malformed number '" + t + "'");
  return value;
}

// complex literal: "1.5", "-2i", "1+2i", "1.5-0.3i", "i", "-i"
Complex parse_complex(const std::string& raw, int line_no) {
  std::string t = trim(raw);
  std::string compact;
  for (char c : t) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) fail(line_no, "empty vector entry");
  if (compact.back() != 'i' && compact.back() != 'I') {
    return Complex(parse_real(compact, line_no), 0.0);
  }
  compact.pop_back();  // drop the i
  // split at the last +/- that is not a leading sign or an exponent sign
  size_t split = std::string::npos;
  for (size_t k = compact.size(); k-- > 1;) {
    const char c = compact[k];
    if ((c == '+' || c == '-') && compact[k - 1] != 'e' && compact[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, line_no);
  };
  if (split == std::string::npos) {
    return Complex(0.0, imag_part(compact));
  }
  return Complex(parse_real(compact.substr(0, split), line_no),
                 imag_part(compact.substr(split)));
}

ComplexVector parse_vector(const std::string& raw, int line_no) {
  std::string t = trim(raw);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    fail(line_no, "expected a vector literal [a, b, ...]");
  }
  t = t.substr(1, t.size() - 2);
  std::vector<Complex> entries;
  std::string item;
  std::stringstream ss(t);
  while (std::getline(ss, item, ',')) {
    entries.push_back(parse_complex(item, line_no));
  }
  if (entries.empty()) fail(line_no, "empty vector literal");
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v[static_cast<Eigen::Index>(i)] = entries[i];
  return v;
}

int parse_grid(const std::string& raw, int line_no) {
  const double v = parse_real(raw, line_no);
  if (v < 2.0 || v != std::floor(v)) fail(line_no, "grid counts must be integers >= 2");
  return static_cast<int>(v);
}

// locale-independent, 12 significant digits
std::string format_number(double v) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& table) {
  std::string text;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) text += ',';
    text += table.columns[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_number(row[i]);
    }
    text += '\n';
  }
  return text;
}

std::string to_json_rows(const Table& table) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

void emit_table(const Table& table, const std::filesystem::path& dir,
                const std::string& stem, OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_file(dir / (stem + ".csv"), to_csv(table));
  } else {
    write_file(dir / (stem + ".json"), to_json_rows(table));
  }
}

ordered_json channel_to_json(const ChannelPair& ch) {
  auto vec = [](const ComplexVector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      arr.push_back(ordered_json::array({v[i].real(), v[i].imag()}));
    }
    return arr;
  };
  ordered_json j;
  j["h"] = vec(ch.h);
  j["g"] = vec(ch.g);
  j["power"] = ch.power;
  j["mode"] = to_string(ch.mode);
  return j;
}

void append_check(std::vector<CheckResult>& checks, const std::string& name, bool pass,
                  double residual) {
  checks.push_back(CheckResult{name, pass, residual});
}

}  // namespace

Command command_from_string(const std::string& name) {
  if (name == "region") return Command::region;
  if (name == "outer") return Command::outer;
  if (name == "timeshare") return Command::timeshare;
  if (name == "verify") return Command::verify;
  if (name == "compare") return Command::compare;
  throw ParseError("unknown command '" + name + "'");
}

std::string to_string(Command cmd) {
  switch (cmd) {
    case Command::region: return "region";
    case Command::outer: return "outer";
    case Command::timeshare: return "timeshare";
    case Command::verify: return "verify";
    case Command::compare: return "compare";
  }
  return "?";
}

RunConfig parse_config(const std::string& text) {
  std::optional<ComplexVector> h, g;
  std::optional<double> power;
  Mode mode = Mode::complex_alphabet;
  int n_alpha = 201, n_tau = 101;
  OutputFormat format = OutputFormat::csv;
  std::vector<Command> commands;
  int h_line = 0, g_line = 0, power_line = 0;

  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail(line_no, "missing value for key '" + key + "'");

    if (key == "h") {
      h = parse_vector(value, line_no);
      h_line = line_no;
    } else if (key == "g") {
      g = parse_vector(value, line_no);
      g_line = line_no;
    } else if (key == "power") {
      power = parse_real(value, line_no);
      power_line = line_no;
      if (!(*power > 0.0)) fail(line_no, "power must be positive");
    } else if (key == "mode") {
      try {
        mode = mode_from_string(value);
      } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
      }
    } else if (key == "alpha_grid") {
      n_alpha = parse_grid(value, line_no);
    } else if (key == "tau_grid") {
      n_tau = parse_grid(value, line_no);
    } else if (key == "format") {
      if (value == "csv") {
        format = OutputFormat::csv;
      } else if (value == "json") {
        format = OutputFormat::json;
      } else {
        fail(line_no, "format must be csv or json");
      }
    } else if (key == "commands") {
      std::string list = value;
      if (!list.empty() && list.front() == '[' && list.back() == ']') {
        list = list.substr(1, list.size() - 2);
      }
      std::stringstream cs(list);
      std::string name;
      while (std::getline(cs, name, ',')) {
        name = trim(name);
        if (name.empty()) continue;
        try {
          commands.push_back(command_from_string(name));
        } catch (const ParseError& e) {
          fail(line_no, e.what());
        }
      }
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (!h) throw ParseError("config: missing required key 'h'");
  if (!g) throw ParseError("config: missing required key 'g'");
  if (!power) throw ParseError("config: missing required key 'power'");
  if (h->size() != g->size()) {
    fail(std::max(h_line, g_line), "vectors h and g have different lengths (" +
                                       std::to_string(h->size()) + " vs " +
                                       std::to_string(g->size()) + ")");
  }
  try {
    ChannelPair channel(*h, *g, *power, mode);
    RunConfig config{std::move(channel), n_alpha, n_tau, format, std::move(commands)};
    return config;
  } catch (const std::invalid_argument& e) {
    fail(power_line ? power_line : 1, e.what());
  }
}

VerificationReport build_verification_report(const ChannelPair& ch, int n_alpha) {
  const auto& pol = numeric_policy();
  const ChannelParameters params = channel_parameters(ch);

  VerificationReport report;
  report.lambda1 = params.lambda1;
  report.lambda2 = params.lambda2;
  report.degenerate = params.degenerate || params.lambda1 == 1.0;
  auto [c1, c2] = corner_points(params, ch.mode);
  report.corner1 = c1;
  report.corner2 = c2;

  auto& checks = report.checks;

  // eigenvalue floor
  const double floor_defect = std::max({0.0, 1.0 - params.lambda1, 1.0 - params.lambda2});
  append_check(checks, "eigenvalue-floor", floor_defect == 0.0, floor_defect);

  if (!report.degenerate) {
    // quotient identity tying the eigenpair to the eigenvalue
    const double hp = std::norm(ch.h.dot(params.e1));
    const double gp = std::norm(ch.g.dot(params.e1));
    const double lhs = hp - params.lambda1 * gp;
    const double rhs = (params.lambda1 - 1.0) / ch.power;
    const double rel = std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
    append_check(checks, "rayleigh-identity", rel <= pol.identity_rel, rel);

    // rate-quotient identities and power trace over an interior grid
    double rel1 = 0.0, rel2 = 0.0, trace_err = 0.0;
    const int n_id = 50;
    for (int i = 0; i < n_id; ++i) {
      const double a = static_cast<double>(i) / n_id;  // [0, 1)
      const SdpcIdentityReport idr = verify_sdpc_identities(ch, params, a);
      rel1 = std::max(rel1, idr.rel1);
      rel2 = std::max(rel2, idr.rel2);
      const CovariancePair cov = build_covariances(ch, params, a);
      trace_err = std::max(trace_err, std::abs(cov.k_x.trace().real() - ch.power));
    }
    append_check(checks, "sdpc-rate1-match", rel1 <= pol.identity_rel, rel1);
    append_check(checks, "sdpc-rate2-match", rel2 <= pol.identity_rel, rel2);
    append_check(checks, "transmit-power-trace", trace_err <= pol.trace_tol, trace_err);

    // monotone user-1 quotient
    const MonotonicityReport mono = monotonicity_check(ch, params, 201);
    append_check(checks, "rate1-quotient-monotone", mono.worst_step >= -pol.mono_slack,
                 std::max(0.0, -mono.worst_step));
    append_check(checks, "rate1-quotient-slope", mono.worst_slope >= -pol.mono_slack,
                 std::max(0.0, -mono.worst_slope));

    // converse identities on an interior grid
    std::vector<CheckResult> worst;
    const int n_conv = 25;
    for (int i = 0; i < n_conv; ++i) {
      const double a = static_cast<double>(i + 1) / (n_conv + 1);
      const ConverseReport conv = verify_converse_identities(ch, params, a);
      if (worst.empty()) {
        for (const auto& item : conv.items) worst.push_back({item.name, item.pass, item.residual});
      } else {
        for (size_t k = 0; k < conv.items.size(); ++k) {
          worst[k].pass = worst[k].pass && conv.items[k].pass;
          worst[k].residual = std::max(worst[k].residual, conv.items[k].residual);
        }
      }
    }
    for (auto& item : worst) checks.push_back(item);

    // slice assignment on sampled covariances
    double worst_root = 0.0;
    bool root_pass = true;
    for (const ComplexMatrix& k :
         random_covariance_family(ch.antennas(), ch.power, 25, 0x5eedu)) {
      try {
        const AlphaAssignment asg = alpha_for_covariance(ch, params, k);
        worst_root = std::max(worst_root, std::abs(asg.residual));
      } catch (const std::exception&) {
        root_pass = false;
      }
    }
    append_check(checks, "alpha-root-bisection", root_pass && worst_root <= pol.root_residual,
                 worst_root);

    // inner/outer coincidence
    const CoincidenceReport coin = coincidence_check(ch, n_alpha);
    append_check(checks, "outer-inner-rate1", coin.max_f1_gap <= pol.coincidence_abs,
                 coin.max_f1_gap);
    append_check(checks, "outer-inner-rate2", coin.max_f2_gap <= pol.coincidence_abs,
                 coin.max_f2_gap);

    // hull intercepts reproduce the corner points
    const RateRegion region = region_sweep(ch, n_alpha);
    double r1_max = 0.0, r2_max = 0.0;
    for (const RatePoint& v : region.hull) {
      r1_max = std::max(r1_max, v.r1);
      r2_max = std::max(r2_max, v.r2);
    }
    const double corner_err =
        std::max(std::abs(r1_max - report.corner1.r1), std::abs(r2_max - report.corner2.r2));
    append_check(checks, "corner-intercepts", corner_err == 0.0, corner_err);
  }

  report.pass = true;
  for (const auto& c : checks) report.pass = report.pass && c.pass;
  return report;
}

std::string report_to_json(const ChannelPair& ch, const VerificationReport& report) {
  ordered_json j;
  j["channel"] = channel_to_json(ch);
  j["lambda1"] = report.lambda1;
  j["lambda2"] = report.lambda2;
  j["corners"] = ordered_json::array({ordered_json::array({report.corner1.r1, report.corner1.r2}),
                                      ordered_json::array({report.corner2.r1, report.corner2.r2})});
  j["degenerate"] = report.degenerate;
  j["pass"] = report.pass;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["residual"] = c.residual;
    checks.push_back(item);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

int run(const RunConfig& config, const std::filesystem::path& out_dir) {
  if (config.commands.empty()) {
    throw ParseError("no command selected; choose from region, outer, timeshare, verify, compare");
  }
  std::filesystem::create_directories(out_dir);

  const ChannelPair& ch = config.channel;
  const double s = ch.rate_scale();
  bool all_pass = true;

  for (const Command cmd : config.commands) {
    switch (cmd) {
      case Command::region: {
        const RateRegion region = region_sweep(ch, config.n_alpha);
        Table frontier{{"alpha", "gamma1", "gamma2", "r1", "r2"}, {}};
        for (const RegionPoint& p : region.frontier) {
          frontier.rows.push_back({p.alpha, p.gamma1, p.gamma2, p.r1, p.r2});
        }
        emit_table(frontier, out_dir, "region_frontier", config.format);
        Table hull{{"r1", "r2"}, {}};
        for (const RatePoint& v : region.hull) hull.rows.push_back({v.r1, v.r2});
        emit_table(hull, out_dir, "region_hull", config.format);
        if (region.hull.size() == 1) {
          write_file(out_dir / "region_notice.txt",
                     "degenerate channel: the rate region is the single point (0, 0)\n");
        }
        break;
      }
      case Command::outer: {
        const ChannelParameters params = channel_parameters(ch);
        Table outer{{"alpha", "f1", "f2", "r1", "r2"}, {}};
        if (!params.degenerate && params.lambda1 > 1.0) {
          const NoiseCorrelation rho = rho_canonical(ch, params);
          std::vector<ComplexMatrix> family;
          family.reserve(static_cast<size_t>(config.n_alpha));
          std::vector<double> alphas;
          for (int i = 0; i < config.n_alpha; ++i) {
            const double a = static_cast<double>(i + 1) / (config.n_alpha + 1);
            alphas.push_back(a);
            family.push_back(build_covariances(ch, params, a).k_x);
          }
          const auto points = outer_region(ch, rho, ch.power, family);
          for (size_t i = 0; i < points.size(); ++i) {
            outer.rows.push_back({alphas[i], points[i].f1, points[i].f2, s * points[i].f1,
                                  s * points[i].f2});
          }
        }
        emit_table(outer, out_dir, "outer", config.format);
        break;
      }
      case Command::timeshare: {
        Table ts{{"tau1", "p1", "p2", "r1", "r2"}, {}};
        for (const TimeSharePoint& p : time_share_frontier(ch, config.n_tau, config.n_tau)) {
          ts.rows.push_back({p.tau1, p.p1, p.p2, p.r1, p.r2});
        }
        emit_table(ts, out_dir, "timeshare", config.format);
        break;
      }
      case Command::verify: {
        const VerificationReport report = build_verification_report(ch, config.n_alpha);
        write_file(out_dir / "report.json", report_to_json(ch, report));
        all_pass = all_pass && report.pass;
        break;
      }
      case Command::compare: {
        const CoincidenceReport coin = coincidence_check(ch, config.n_alpha);
        ordered_json j;
        j["n_alpha"] = coin.n_alpha;
        j["degenerate"] = coin.degenerate;
        j["max_f1_gap"] = coin.max_f1_gap;
        j["max_f2_gap"] = coin.max_f2_gap;
        j["tolerance"] = numeric_policy().coincidence_abs;
        j["pass"] = coin.pass;
        write_file(out_dir / "compare.json", j.dump(2) + "\n");
        all_pass = all_pass && coin.pass;
        break;
      }
    }
  }
  return all_pass ? 0 : 2;
}

}  // namespace mgbccm::cli
