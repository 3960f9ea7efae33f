#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cherednik/cli.hpp"
#include "cherednik/errors.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kComputation = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in rational Cherednik algebras over p-adic fields", "cherednik"};
  app.set_version_flag("--version", cherednik::kVersion);
  std::string command, config_path, format = "tsv", out_path;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cherednik::command_names()));
  app.add_option("--config", config_path, "Configuration file")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "jsonl"}));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "cherednik: cannot read config '" << config_path << "'\n";
    return kUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();

  try {
    cherednik::ConfigOptions options;
    options.base_dir = std::filesystem::path(config_path).parent_path();
    if (options.base_dir.empty()) options.base_dir = ".";
    options.default_precision = cherednik::default_precision_from_env();
    cherednik::JobConfig cfg = cherednik::parse_config(text.str(), options);
    cfg.command = command;
    const cherednik::Report report = cherednik::run_command(cfg);
    const std::string body = cherednik::emit_report(
        report, format == "jsonl" ? cherednik::ReportFormat::jsonl : cherednik::ReportFormat::tsv);
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cherednik: cannot write '" << out_path << "'\n";
        return kUsage;
      }
      out << body;
    }
  } catch (const cherednik::ValidationError& e) {
    std::cerr << "cherednik: " << e.what() << "\n";
    return kValidation;
  } catch (const cherednik::Error& e) {
    std::cerr << "cherednik: " << e.what() << "\n";
    return kComputation;
  } catch (const std::exception& e) {
    std::cerr << "cherednik: " << e.what() << "\n";
    return kComputation;
  }
  return 0;
}
