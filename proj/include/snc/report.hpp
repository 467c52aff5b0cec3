#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snc/io.hpp"

namespace snc {

enum class ReportFormat { Human, Machine, Csv };

std::string to_string(ReportFormat f);
ReportFormat parse_format(const std::string& text);

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInput = 2, kExitInconclusive = 3 };

/// Ordered report records plus counters. Every record carries "type", "id" and "pass".
struct ReportFile {
  std::string title;
  std::vector<Json> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t violations = 0;
  std::size_t inconclusive = 0;

  /// Appends a record and updates the counters from its fields.
  void add(Json record);
  int exit_code() const;
};

/// Machine: one JSON object per line, then a summary line.
/// Human: one line per record, then the summary.
/// Csv: residual tables for SIP records, a verdict table otherwise.
std::string render_records(const ReportFile& report, ReportFormat format);

Json to_json(const VerificationReport& r);
Json to_json(const std::string& id, const OptimalityResult& r);
Json to_json(const std::string& id, const SipResult& r);

/// Command-line overrides applied on top of an instance file.
struct RunOptions {
  std::vector<Rational> epsilon;  // empty: use the file
  std::optional<std::string> s_grid;
  std::optional<FormulaMode> mode;
  FormulaOptions formula;
};

/// Runs the command named in the file. Refused closure evidence becomes an
/// inconclusive record; input and precondition errors propagate.
ReportFile run_instance(const InstanceFile& file, const RunOptions& options = {});

struct SuiteOptions {
  bool parallel = true;
  FormulaOptions formula;
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t dim = 0;  // 0: generators choose
};

/// Hand-built scenarios with known answers, each recorded with a pass flag.
ReportFile run_curated_suite(const SuiteOptions& options);
/// Seeded mix of generated instances, verified in batch.
ReportFile run_random_suite(const SuiteOptions& options);
/// Curated followed by random.
ReportFile run_full_suite(const SuiteOptions& options);

}  // namespace snc
