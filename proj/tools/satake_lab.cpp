// satake-lab: exact computations of Weyl coset combinatorics, Kostant-type
// cohomology decompositions, central-character checks, and graded Satake
// target reports, cross-validated by a Chevalley-Eilenberg oracle over F_p.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "satake/job.hpp"

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const satake::Json& envelope, const std::string& format,
                  const std::string& out_path) {
  std::ostringstream body;
  if (format == "text")
    satake::render_text(envelope, body);
  else
    body << envelope.dump(2) << "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      std::exit(1);
    }
    out << body.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mod-p Satake target computations"};
  std::string command;
  std::string config_path = "-";
  std::string format;
  std::string out_path;
  long long cap_weyl = -1, cap_underline = -1;
  app.add_option("command", command, "one of: check kostant group-cohomology left-adjoint satake pseries parameters oracle-verify report-all")
      ->required();
  app.add_option("--config", config_path, "config JSON file, or - for stdin");
  app.add_option("--format", format, "json or text (overrides the config)");
  app.add_option("--cap-weyl", cap_weyl, "override the Weyl enumeration cap");
  app.add_option("--cap-underline", cap_underline, "override the underline enumeration cap");
  app.add_option("--out", out_path, "output file (default stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string raw;
    if (config_path == "-") {
      raw = read_all(std::cin);
    } else {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) {
        std::cerr << "ConfigError: cannot open config file: " << config_path << "\n";
        return 1;
      }
      raw = read_all(in);
    }
    satake::Json parsed;
    try {
      parsed = satake::Json::parse(raw);
    } catch (const std::exception& e) {
      std::cerr << "ConfigError: invalid JSON: " << e.what() << "\n";
      return 1;
    }
    satake::JobConfig cfg = satake::parse_config(parsed);
    if (!cfg.command.empty() && cfg.command != command) {
      std::cerr << "ConfigError: config command '" << cfg.command
                << "' conflicts with CLI command '" << command << "'\n";
      return 1;
    }
    cfg.command = command;
    if (!format.empty()) {
      if (format != "json" && format != "text") {
        std::cerr << "ConfigError: --format must be json or text\n";
        return 1;
      }
      cfg.output_format = format;
    }
    if (cap_weyl > 0) cfg.caps.weyl = cap_weyl;
    if (cap_underline > 0) cfg.caps.underline = cap_underline;

    satake::RunResult result = satake::run(cfg);
    write_output(result.envelope, cfg.output_format, out_path);
    return result.exit_code;
  } catch (const satake::Error& e) {
    if (e.code() == satake::ErrorCode::ConfigError) {
      std::cerr << e.what() << "\n";
      return 1;
    }
    if (e.code() == satake::ErrorCode::AssumptionViolated) {
      satake::Json envelope{{"schema_version", 1},
                            {"command", command},
                            {"error", e.what()},
                            {"verdicts", satake::Json{{"assumption", "Fail"}}}};
      write_output(envelope, format.empty() ? "json" : format, out_path);
      return 2;
    }
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
