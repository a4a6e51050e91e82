#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli/explorer.hpp"
#include "cli/runner.hpp"
#include "tensorcoh/poly_parser.hpp"

using namespace tensorcoh;
using namespace tensorcoh::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Options quiet_opts() {
  Options o;
  o.timing = false;
  return o;
}

InputError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return InputError("none", {});
}

}  // namespace

TEST(Parse, TwoLineSession) {
  Script s = parse("ring S = poly(p=32003, vars=[x,y])\nmodule m = maximal S\nh (m⊗m) 0\n");
  ASSERT_EQ(s.statements.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<RingDef>(s.statements[0].body));
  EXPECT_TRUE(std::holds_alternative<ModuleDef>(s.statements[1].body));
  const auto& cmd = std::get<Command>(s.statements[2].body);
  EXPECT_EQ(cmd.verb, "h");
  ASSERT_EQ(cmd.args.size(), 1u);
  EXPECT_EQ(cmd.args[0].factors.size(), 2u);
  EXPECT_EQ(print(s.statements[2]), "h (m⊗m) 0");
}

TEST(Parse, SpecGrammarLines) {
  Script s = parse(
      "ring S = poly(p=32003, vars=[x,y,u,v])\n"
      "ideal I = (x*y - u*v) in S\n"
      "ring R = S / I\n"
      "module M = coker R [[x, y], [u, x]] twists [0,0] -> [1,1]\n"
      "module I1 = ideal (x^2, y^3) in R\n"
      "invariants M\n"
      "h M 0..3\n"
      "resolve M bound 5\n"
      "check lemma-0 M I1\n"
      "depthseq M n=4 ideal (x, y) in R\n"
      "explore vasc-81 trials=200 seed=42\n");
  EXPECT_EQ(s.statements.size(), 11u);
}

TEST(Parse, InhomogeneousEntryNamesPosition) {
  InputError e = parse_error("ring S = poly(vars=[x,y])\nmodule M = coker S [[x, x+1]]\n");
  EXPECT_EQ(e.pos().line, 2);
  EXPECT_EQ(e.pos().column, 25);
  EXPECT_NE(std::string(e.what()).find("x+1"), std::string::npos) << e.what();
}

TEST(Parse, DegreeIncompatibleMatrix) {
  InputError e = parse_error("ring S = poly(vars=[x,y])\nmodule M = coker S [[x, y], [x^2, y]]\n");
  EXPECT_EQ(e.pos().line, 2);
}

TEST(Parse, UndefinedAndSyntaxErrors) {
  EXPECT_EQ(parse_error("ring S = poly(vars=[x,y])\nh m 0\n").pos().line, 2);
  EXPECT_EQ(parse_error("ring S = poly(vars=[x,y]\n").pos().line, 1);
  EXPECT_EQ(parse_error("ring S = poly(p=10, vars=[x])\n").pos().line, 1);
  EXPECT_EQ(parse_error("ring S = poly(vars=[x])\nmodule m = maximal S\nmodule m = residue S\n").pos().line, 3);
  EXPECT_EQ(parse_error("ring S = poly(vars=[x])\nexpect h0 = 1 [guess]\n").pos().line, 2);
}

TEST(Parse, ColumnsCountCodePoints) {
  InputError e = parse_error("ring S = poly(vars=[x,y])\nmodule m = maximal S\nh (m⊗m⊗q) 0\n");
  EXPECT_EQ(e.pos().line, 3);
  EXPECT_EQ(e.pos().column, 8);
}

TEST(Parse, RoundTripOnCorpus) {
  auto files = corpus_files(TENSORCOH_CORPUS_DIR);
  ASSERT_GE(files.size(), 10u);
  for (const auto& f : files) {
    Script a = parse(slurp(f));
    std::string once = print(a);
    Script b = parse(once);
    EXPECT_EQ(print(b), once) << f;
    EXPECT_EQ(b.statements.size(), a.statements.size()) << f;
  }
}

TEST(Run, CorpusPasses) {
  auto results = run_all(corpus_files(TENSORCOH_CORPUS_DIR), quiet_opts(), 1);
  int expectations = 0;
  for (const auto& r : results) {
    EXPECT_TRUE(r.ok()) << r.fixture << (r.input_error ? ": " + *r.input_error : "");
    for (const auto& f : r.expectation_failures) ADD_FAILURE() << f;
    for (const auto& f : r.gate_failures) ADD_FAILURE() << f;
    expectations += r.expectations;
  }
  EXPECT_EQ(exit_code(results), 0);
  EXPECT_GT(expectations, 50);
}

TEST(Run, FixtureIdResolves) {
  auto paths = resolve_targets({"fixture", "f-m2"}, TENSORCOH_CORPUS_DIR);
  ASSERT_EQ(paths.size(), 1u);
  auto results = run_all(paths, quiet_opts(), 1);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].records.at(0).values, nlohmann::json({{"h0", 1}}));
}

TEST(Run, F55iiD4) {
  auto results = run_all(resolve_targets({"f-55ii-d4"}, TENSORCOH_CORPUS_DIR), quiet_opts(), 1);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].records.at(0).values, nlohmann::json({{"h", {0, 1, 4, 4}}}));
}

TEST(Run, DeterministicJson) {
  auto files = corpus_files(TENSORCOH_CORPUS_DIR);
  std::string a = to_json(run_all(files, quiet_opts(), 1)).dump();
  std::string b = to_json(run_all(files, quiet_opts(), 1)).dump();
  std::string c = to_json(run_all(files, quiet_opts(), 3)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Run, ExpectationMismatchIsFailure) {
  auto r = run_text("t", "ring S = poly(vars=[x,y])\nmodule m = maximal S\nh (m⊗m) 0\nexpect h0 = 2 [closed-form]\n",
                    quiet_opts());
  ASSERT_EQ(r.expectation_failures.size(), 1u);
  EXPECT_NE(r.expectation_failures[0].find("expected 2 got 1"), std::string::npos) << r.expectation_failures[0];
  EXPECT_EQ(exit_code({r}), 1);
}

TEST(Run, InputErrorsExitTwo) {
  auto r = run_text("t", "ring S = poly(vars=[x,y])\nh nope 0\n", quiet_opts());
  ASSERT_TRUE(r.input_error.has_value());
  EXPECT_NE(r.input_error->find("line 2"), std::string::npos) << *r.input_error;
  EXPECT_EQ(exit_code({r}), 2);
}

TEST(Run, UnexpectedFailsIsGateFailure) {
  std::string veronese =
      "ring S = poly(vars=[a,b,c,d])\n"
      "ring V = S / (a*c - b^2, a*d - b*c, b*d - c^2) with domain normal isolated\n"
      "check f-tach V\n";
  auto r = run_text("t", veronese, quiet_opts());
  EXPECT_EQ(r.gate_failures.size(), 1u);
  EXPECT_EQ(exit_code({r}), 1);
  auto known = run_text("t", veronese + "expect verdict = fails [frozen]\n", quiet_opts());
  EXPECT_TRUE(known.gate_failures.empty());
  EXPECT_EQ(exit_code({known}), 0);
}

TEST(Run, FieldCharacteristicOption) {
  Options o = quiet_opts();
  o.field_char = 101;
  auto r = run_text("t", "ring S = poly(vars=[x,y])\nmodule m = maximal S\nh (m⊗m) 0\nexpect h0 = 1 [closed-form]\n", o);
  EXPECT_TRUE(r.ok());
}

TEST(Explore, Lemma0HundredRows) {
  ExploreResult res = explore("lemma-0", 100, 1);
  ASSERT_EQ(res.rows.size(), 100u);
  EXPECT_LE(res.max_ratio(), 1.0);
  std::istringstream csv(res.csv());
  std::string line;
  int n = 0;
  std::getline(csv, line);
  EXPECT_EQ(line, "instance_id,description,lhs,rhs,ratio");
  while (std::getline(csv, line)) ++n;
  EXPECT_EQ(n, 100);
}

TEST(Explore, SameSeedSameBytes) {
  for (const auto& id : explorable()) {
    EXPECT_EQ(explore(id, 12, 7).csv(), explore(id, 12, 7).csv()) << id;
  }
  EXPECT_NE(explore("lemma-0", 12, 7).csv(), explore("lemma-0", 12, 8).csv());
}

TEST(Explore, EveryProvenBoundHolds) {
  for (const auto& id : explorable()) {
    ExploreResult res = explore(id, 15, 2024);
    EXPECT_EQ(res.rows.size(), 15u) << id;
    for (const auto& row : res.rows)
      if (!row.lhs.infinite && !row.rhs.infinite) EXPECT_LE(row.lhs.value, row.rhs.value) << id << " " << row.description;
  }
}

TEST(Explore, UnknownIdRejected) {
  EXPECT_THROW(explore("f-m2", 5, 1), Error);
  EXPECT_THROW(explore("nope", 5, 1), Error);
}

TEST(Format, Ratio) {
  EXPECT_EQ(format_ratio(Count{1}, Count{4}), "0.250000");
  EXPECT_EQ(format_ratio(Count{0}, Count{0}), "0");
  EXPECT_EQ(format_ratio(Count{3}, Count::inf()), "0");
}

TEST(Frozen, CuspH0RoutesAgree) {
  auto S = std::make_shared<AmbientRing>(std::vector<std::string>{"x", "y"}, std::vector<int>{2, 3}, PrimeField());
  Certificates c;
  c.domain = true;
  RingPtr R = QuotientRing::make(S, {parse_polynomial(S, "y^2-x^3")}, c);
  ModulePtr m = ideal_module(Ideal::maximal(R));
  ModulePtr X = tensor(m, m);
  EXPECT_EQ(h(X, 0), Count{2});
  EXPECT_EQ(h0_sat(X), 2);
}

TEST(Frozen, VeroneseRoutesAgree) {
  auto S = std::make_shared<AmbientRing>(std::vector<std::string>{"a", "b", "c", "d"}, std::vector<int>{}, PrimeField());
  std::vector<Polynomial> I;
  for (const char* f : {"a*c-b^2", "a*d-b*c", "b*d-c^2"}) I.push_back(parse_polynomial(S, f));
  Certificates c;
  c.domain = true;
  RingPtr V = QuotientRing::make(S, I, c);
  ModulePtr w = canonical(V);
  ModulePtr X = tensor(w, dual(w));
  EXPECT_EQ(h(X, 0), Count{2});
  EXPECT_EQ(h0_sat(X), 2);
  EXPECT_EQ(length(torsion(X)), Count{2});
}

// h1(X) through H0(X/f^N X) with f^N killing H1 and H0(X) = 0
std::int64_t h1_by_hyperplane(const ModulePtr& X, const std::string& f, int N) {
  RingPtr R = X->ring();
  Ideal J{R, {parse_polynomial(R->ambient(), "(" + f + ")^" + std::to_string(N))}};
  return h0_sat(tensor(X, cyclic_module(J)));
}

TEST(Frozen, HypersurfaceH1) {
  auto S = std::make_shared<AmbientRing>(std::vector<std::string>{"x", "y", "u", "v"}, std::vector<int>{}, PrimeField());
  Certificates c;
  c.domain = true;
  RingPtr R = QuotientRing::make(S, {parse_polynomial(S, "x*y-u*v")}, c);
  Ideal I{R, {parse_polynomial(S, "x"), parse_polynomial(S, "u")}};
  ModulePtr M = ideal_module(I);
  ModulePtr X = tensor(M, dual(M));
  ASSERT_EQ(h0_sat(X), 0);
  EXPECT_EQ(h1_by_hyperplane(X, "x+y+u+v", 3), 1);
  EXPECT_EQ(h1_by_hyperplane(X, "x+y+u+v", 4), 1);
  EXPECT_EQ(h(X, 1), Count{1});
}

TEST(Frozen, VeroneseH1) {
  auto S = std::make_shared<AmbientRing>(std::vector<std::string>{"a", "b", "c", "d"}, std::vector<int>{}, PrimeField());
  std::vector<Polynomial> I;
  for (const char* f : {"a*c-b^2", "a*d-b*c", "b*d-c^2"}) I.push_back(parse_polynomial(S, f));
  Certificates c;
  c.domain = true;
  RingPtr V = QuotientRing::make(S, I, c);
  ModulePtr w = canonical(V);
  ModulePtr Y = modulo_saturation(tensor(w, dual(w)), Ideal::maximal(V));
  EXPECT_EQ(h1_by_hyperplane(Y, "a+d", 3), 1);
  EXPECT_EQ(h1_by_hyperplane(Y, "a+d", 4), 1);
}
