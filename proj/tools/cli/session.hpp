#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "script.hpp"
#include "tensorcoh/checks.hpp"

namespace tensorcoh::cli {

struct Options {
  std::uint32_t field_char = PrimeField::kDefaultCharacteristic;
  std::optional<int> bound;
  std::optional<std::uint32_t> seed;
  bool timing = true;
};

struct ExpectResult {
  Pos pos;
  std::string key;
  std::string expected;
  std::string got;
  std::string origin;
  bool ok = false;
};

/// One executed command.
struct Record {
  Pos pos;
  std::string check;
  std::string statement;
  std::optional<CheckReport> report;
  nlohmann::json values = nlohmann::json::object();
  std::string text;
  std::string csv;
  std::vector<ExpectResult> expectations;
  double millis = 0;

  /// "holds", "fails", ... for checks; "computed" otherwise.
  std::string verdict() const;
};

class Session {
 public:
  explicit Session(Options opts = {}) : opts_(opts) {}

  /// Runs every statement; InputError for runtime input problems (bad names, unsupported input).
  std::vector<Record> run(const Script& script);

 private:
  void define(const Statement& st);
  Record execute(const Statement& st, const Command& cmd);
  void expect(const Statement& st, const Expect& e, std::vector<Record>& out);

  RingPtr ring(const std::string& name, Pos pos) const;
  Ideal ideal(const IdealRef& a) const;
  ModulePtr eval(const ModExpr& e);
  ModuleOrigin origin(const ModExpr& e) const;
  bool certified(const ModExpr& e, const std::string& prop) const;

  Options opts_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, ModulePtr> modules_;
  std::map<std::string, ModuleOrigin> origins_;
  std::map<std::string, std::set<std::string>> certs_;
  std::map<std::string, ModulePtr> expr_cache_;
};

/// Text form of counts in reports: integers, or "inf".
nlohmann::json to_json(const Count& c);

}  // namespace tensorcoh::cli
