#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace tensorcoh::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string where(const std::string& fixture, Pos p) { return fixture + ":" + std::to_string(p.line); }

void audit(FixtureResult& res) {
  for (const auto& r : res.records) {
    bool expected_failure = false;
    for (const auto& e : r.expectations) {
      ++res.expectations;
      if (e.key == "verdict" && e.expected == "fails" && e.ok) expected_failure = true;
      if (!e.ok)
        res.expectation_failures.push_back(where(res.fixture, e.pos) + ": " + r.check + ", " + e.key + ": expected " +
                                           e.expected + " got " + e.got);
    }
    if (r.verdict() == "fails" && !expected_failure)
      res.gate_failures.push_back(where(res.fixture, r.pos) + ": " + r.check + " returned fails");
  }
}

}  // namespace

FixtureResult run_text(const std::string& fixture, const std::string& text, const Options& opts) {
  FixtureResult res;
  res.fixture = fixture;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Script script = parse(text);
    Session session(opts);
    res.records = session.run(script);
    audit(res);
  } catch (const InputError& e) {
    res.input_error = fixture + ": " + e.what();
  } catch (const InternalConsistency& e) {
    res.gate_failures.push_back(fixture + ": engine consistency error: " + e.what());
  }
  res.millis = opts.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() : 0;
  return res;
}

FixtureResult run_file(const std::string& path, const Options& opts) {
  std::ifstream in(path);
  std::string id = fs::path(path).stem().string();
  if (!in) {
    FixtureResult res;
    res.fixture = id;
    res.path = path;
    res.input_error = "cannot read " + path;
    return res;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  FixtureResult res = run_text(id, buf.str(), opts);
  res.path = path;
  return res;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".tcs") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> resolve_targets(const std::vector<std::string>& args, const std::string& corpus_dir) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "fixture") continue;
    if (a == "corpus") {
      auto all = corpus_files(corpus_dir);
      out.insert(out.end(), all.begin(), all.end());
    } else if (fs::is_regular_file(a)) {
      out.push_back(a);
    } else {
      out.push_back((fs::path(corpus_dir) / (a + ".tcs")).string());
    }
  }
  return out;
}

std::vector<FixtureResult> run_all(const std::vector<std::string>& paths, const Options& opts, int threads) {
  std::vector<FixtureResult> out;
  if (threads <= 1) {
    for (const auto& p : paths) {
      out.push_back(run_file(p, opts));
      if (!out.back().gate_failures.empty()) break;
    }
    return out;
  }
  std::vector<std::future<FixtureResult>> pending;
  std::size_t next = 0;
  std::vector<std::optional<FixtureResult>> done(paths.size());
  std::size_t emitted = 0;
  while (emitted < paths.size()) {
    while (next < paths.size() && pending.size() < static_cast<std::size_t>(threads)) {
      const std::string& p = paths[next++];
      pending.push_back(std::async(std::launch::async, [p, opts] { return run_file(p, opts); }));
    }
    FixtureResult r = pending.front().get();
    pending.erase(pending.begin());
    out.push_back(std::move(r));
    ++emitted;
    if (!out.back().gate_failures.empty()) break;
  }
  for (auto& f : pending) f.wait();
  return out;
}

json to_json(const Record& r, const std::string& fixture) {
  json j = {{"fixture", fixture}, {"line", r.pos.line}, {"check", r.check}, {"statement", r.statement}};
  json hyps = json::array(), lhs = json::array(), rhs = json::array();
  if (r.report) {
    for (const auto& h : r.report->hypotheses) hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}});
    for (const auto& q : r.report->lhs) lhs.push_back({{"name", q.name}, {"value", to_json(q.value)}});
    for (const auto& q : r.report->rhs) rhs.push_back({{"name", q.name}, {"value", to_json(q.value)}});
    if (!r.report->notes.empty()) j["notes"] = r.report->notes;
  }
  j["hypotheses"] = hyps;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["verdict"] = r.verdict();
  j["millis"] = r.millis;
  j["values"] = r.values;
  if (!r.expectations.empty()) {
    json ex = json::array();
    for (const auto& e : r.expectations)
      ex.push_back({{"key", e.key}, {"expected", e.expected}, {"got", e.got}, {"origin", e.origin}, {"ok", e.ok}});
    j["expectations"] = ex;
  }
  return j;
}

json to_json(const std::vector<FixtureResult>& results) {
  json out = json::array();
  for (const auto& res : results)
    for (const auto& r : res.records) out.push_back(to_json(r, res.fixture));
  return out;
}

int exit_code(const std::vector<FixtureResult>& results) {
  bool input = false, failed = false;
  for (const auto& r : results) {
    input = input || r.input_error;
    failed = failed || !r.gate_failures.empty() || !r.expectation_failures.empty();
  }
  return input ? 2 : failed ? 1 : 0;
}

}  // namespace tensorcoh::cli
