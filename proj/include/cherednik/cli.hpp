#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cherednik/builtin.hpp"
#include "cherednik/scalar.hpp"

namespace cherednik {

inline constexpr const char* kVersion = "0.1.0";

/// A validated batch job. The command is supplied separately on the command line.
struct JobConfig {
  std::string command;
  /// Built-in group name, or "file:<path>" for a group data file.
  std::string group_spec;
  GroupData data;
  /// One value per reflection class, in reflection_classes() order.
  std::vector<Scalar> c;
  std::optional<unsigned long> prime;
  unsigned precision = 64;
  std::optional<unsigned> cutoff;
  unsigned levels = 0;
  std::optional<unsigned> level;
  /// Forces r at a single level instead of choose_r.
  std::optional<unsigned> r;
  std::optional<std::string> irrep;
  std::optional<std::string> element;
  std::uint64_t seed = 0;

  /// Normalized key/value pairs in a fixed order, for report headers.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

struct ConfigOptions {
  /// Relative group_file paths resolve against this directory.
  std::filesystem::path base_dir = ".";
  /// Used when the config has no precision key.
  unsigned default_precision = 64;
};

/// Grammar, one entry per line:
///
///   line  := ws* [key ws* '=' ws* value ws*] ['#' comment]
///   key   := group | group_file | c | prime | precision | cutoff | levels
///          | level | r | irrep | element | seed
///
/// Exactly one of group / group_file. c is a comma list with one Scalar per
/// reflection class, or a single value used for every class.
/// Throws ParseError for syntax, unknown or repeated keys; ValidationError naming
/// the field for bad values.
JobConfig parse_config(std::string_view text, const ConfigOptions& options = {});

/// Group data file:
///
///   field rational | field cyclotomic <ell>
///   dimension <n>
///   generator            (one or more blocks of n rows of n entries)
///     <row>...
///   end
///   irrep <label> <d>    (one block per irrep: d rows for each generator in turn)
///     <row>...
///   end
///
/// Entries are Scalars in the declared field ("z" is zeta_ell). '#' starts a comment.
/// The irreps must be complete: sum of d^2 equals |G|.
GroupData parse_group_file(std::string_view text, const std::string& name);

/// Reads the environment override for the default precision; falls back to 64.
unsigned default_precision_from_env();

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  /// Columns emitted as JSON integers.
  std::vector<bool> numeric;
  std::vector<std::vector<std::string>> rows;
};

/// Throws ValidationError for unknown commands or missing fields.
Report run_command(const JobConfig& cfg);

enum class ReportFormat { tsv, jsonl };

/// TSV: '#' header lines (version, config, notes), a column row, then data rows.
/// JSONL: a header record, then one record per row with keys in column order.
std::string emit_report(const Report& report, ReportFormat format);

const std::vector<std::string>& command_names();

}  // namespace cherednik
