#pragma once

#include <optional>
#include <string>
#include <vector>

#include "session.hpp"

namespace tensorcoh::cli {

struct FixtureResult {
  std::string fixture;
  std::string path;
  std::vector<Record> records;
  /// Parse or runtime input problem (exit code 2).
  std::optional<std::string> input_error;
  /// Soundness problems: an unexpected "fails" verdict or an engine consistency error (exit code 1).
  std::vector<std::string> gate_failures;
  int expectations = 0;
  std::vector<std::string> expectation_failures;
  double millis = 0;

  bool ok() const { return !input_error && gate_failures.empty() && expectation_failures.empty(); }
};

FixtureResult run_text(const std::string& fixture, const std::string& text, const Options& opts);
FixtureResult run_file(const std::string& path, const Options& opts);

/// Sorted *.tcs files of the corpus directory.
std::vector<std::string> corpus_files(const std::string& dir);

/// "corpus", a file path, or a fixture id inside the corpus directory.
std::vector<std::string> resolve_targets(const std::vector<std::string>& args, const std::string& corpus_dir);

/// Runs in declared order; with threads > 1 the fixtures run concurrently and merge in order.
/// Stops after the first fixture with a soundness failure.
std::vector<FixtureResult> run_all(const std::vector<std::string>& paths, const Options& opts, int threads);

nlohmann::json to_json(const Record& r, const std::string& fixture);
nlohmann::json to_json(const std::vector<FixtureResult>& results);

/// 0 all good, 1 check or expectation failure, 2 input error.
int exit_code(const std::vector<FixtureResult>& results);

}  // namespace tensorcoh::cli
