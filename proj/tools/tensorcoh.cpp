#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "cli/explorer.hpp"
#include "cli/runner.hpp"

using namespace tensorcoh;
using namespace tensorcoh::cli;

namespace {

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return true;
}

void print_fixture(const FixtureResult& res, bool verbose) {
  std::cout << "== " << res.fixture << "\n";
  if (res.input_error) std::cout << "  input error: " << *res.input_error << "\n";
  if (!verbose) return;
  for (const auto& r : res.records) {
    std::cout << "  [" << r.pos.line << "] " << r.text << "\n";
    for (const auto& e : r.expectations)
      std::cout << "    expect " << e.key << " = " << e.expected << " [" << e.origin << "]: "
                << (e.ok ? "ok" : "MISMATCH, got " + e.got) << "\n";
  }
}

void print_summary(const std::vector<FixtureResult>& results, std::size_t planned, bool timing) {
  std::cout << "\n" << std::left << std::setw(28) << "fixture" << std::setw(9) << "records" << std::setw(14)
            << "expectations" << std::setw(8) << "status";
  if (timing) std::cout << "ms";
  std::cout << "\n";
  for (const auto& r : results) {
    int ok = r.expectations - static_cast<int>(r.expectation_failures.size());
    std::string status = r.input_error ? "input" : r.ok() ? "ok" : "FAIL";
    std::cout << std::setw(28) << r.fixture << std::setw(9) << r.records.size() << std::setw(14)
              << (std::to_string(ok) + "/" + std::to_string(r.expectations)) << std::setw(8) << status;
    if (timing) std::cout << std::fixed << std::setprecision(1) << r.millis;
    std::cout << "\n";
  }
  for (const auto& r : results) {
    for (const auto& f : r.gate_failures) std::cout << "soundness: " << f << "\n";
    for (const auto& f : r.expectation_failures) std::cout << "expectation: " << f << "\n";
  }
  if (results.size() < planned)
    std::cout << "aborted after " << results.size() << " of " << planned << " fixtures\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensorcoh: local cohomology of tensor products over graded rings"};
  app.require_subcommand(1);

  Options opts;
  std::vector<std::string> targets;
  std::string json_out, csv_out, corpus_dir = TENSORCOH_CORPUS_DIR;
  int threads = 1;
  bool no_timing = false, quiet = false;
  std::uint32_t field_char = PrimeField::kDefaultCharacteristic;
  int bound = -1;
  std::uint32_t seed = 1;

  auto* run = app.add_subcommand("run", "Run a session file, a fixture id, or the whole corpus");
  run->add_option("targets", targets, "file, fixture id, or 'corpus'")->required();
  run->add_option("--json", json_out, "write the JSON report here");
  run->add_option("--csv", csv_out, "write explorer CSV rows here");
  run->add_option("--seed", seed, "default explorer seed");
  run->add_option("--field-char", field_char, "characteristic for rings without p=");
  run->add_option("--bound", bound, "default resolution bound");
  run->add_option("--threads", threads, "fixtures run concurrently")->check(CLI::PositiveNumber);
  run->add_option("--corpus", corpus_dir, "corpus directory");
  run->add_flag("--no-timing", no_timing, "report zero timings for byte-stable output");
  run->add_flag("--quiet", quiet, "summary only");

  bool list_json = false;
  auto* list = app.add_subcommand("list-checks", "Print the check registry");
  list->add_flag("--json", list_json, "as JSON");

  std::string explore_id;
  int trials = 100;
  auto* exp = app.add_subcommand("explore", "Sample random instances of a bound and emit CSV");
  exp->add_option("id", explore_id, "bound id")->required();
  exp->add_option("--trials", trials, "instances")->check(CLI::NonNegativeNumber);
  exp->add_option("--seed", seed, "random seed");
  exp->add_option("--field-char", field_char, "field characteristic");
  exp->add_option("--csv", csv_out, "output file (default stdout)");

  std::string fmt_file;
  auto* fmt = app.add_subcommand("fmt", "Parse a session and print it in canonical form");
  fmt->add_option("file", fmt_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (field_char < 2 || !is_prime(field_char)) {
    std::cerr << "error: --field-char must be a prime\n";
    return 2;
  }

  if (*run) {
    opts.field_char = field_char;
    if (bound >= 0) opts.bound = bound;
    if (run->count("--seed")) opts.seed = seed;
    opts.timing = !no_timing;
    auto paths = resolve_targets(targets, corpus_dir);
    if (paths.empty()) {
      std::cerr << "error: nothing to run\n";
      return 2;
    }
    auto results = run_all(paths, opts, threads);
    for (const auto& r : results) print_fixture(r, !quiet);
    print_summary(results, paths.size(), opts.timing);
    if (!json_out.empty() && !write_file(json_out, to_json(results).dump(2) + "\n")) return 2;
    if (!csv_out.empty()) {
      std::string csv;
      for (const auto& res : results)
        for (const auto& r : res.records) {
          if (r.csv.empty()) continue;
          csv += csv.empty() ? r.csv : r.csv.substr(r.csv.find('\n') + 1);
        }
      if (!write_file(csv_out, csv)) return 2;
    }
    return exit_code(results);
  }

  if (*list) {
    if (list_json) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& c : registry())
        out.push_back({{"id", c.id},
                       {"kind", to_string(c.kind)},
                       {"statement", c.statement},
                       {"hypotheses", c.hypotheses},
                       {"arguments", c.arguments}});
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& c : registry())
        std::cout << c.id << "  [" << to_string(c.kind) << "]  " << c.statement << "\n    hypotheses: " << c.hypotheses
                  << "\n    arguments: " << c.arguments << "\n";
    }
    return 0;
  }

  if (*exp) {
    try {
      ExploreResult res = explore(explore_id, trials, seed, field_char);
      if (csv_out.empty()) std::cout << res.csv();
      else if (!write_file(csv_out, res.csv())) return 2;
      return 0;
    } catch (const InternalConsistency& e) {
      std::cerr << "soundness: " << e.what() << "\n";
      return 1;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  if (*fmt) {
    std::ifstream in(fmt_file);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      std::cout << print(parse(buf.str()));
      return 0;
    } catch (const InputError& e) {
      std::cerr << fmt_file << ": " << e.what() << "\n";
      return 2;
    }
  }
  return 0;
}
