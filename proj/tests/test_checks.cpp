#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "tensorcoh/checks.hpp"
#include "tensorcoh/errors.hpp"

using namespace tctest;

namespace {

Count fin(std::int64_t v) { return {v, false}; }

std::vector<std::int64_t> values(const std::vector<Quantity>& qs) {
  std::vector<std::int64_t> out;
  for (const auto& q : qs) out.push_back(q.value.infinite ? -1 : q.value.value);
  return out;
}

CheckInput pair(const ModulePtr& M, const ModulePtr& N) {
  CheckInput in;
  in.M = M;
  in.N = N;
  return in;
}

CheckInput on_ideal(const Ideal& a) {
  CheckInput in;
  in.ring = a.ring;
  in.a = a;
  return in;
}

// m-primary monomial ideal: random generators plus pure powers
std::vector<std::string> random_primary(std::mt19937& rng, const std::vector<std::string>& vars) {
  auto gens = random_monomials(rng, vars);
  std::uniform_int_distribution<int> e(1, 3);
  for (const auto& v : vars) gens.push_back(v + "^" + std::to_string(e(rng)));
  return gens;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndKnown) {
  std::set<std::string> ids;
  for (const auto& c : registry()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (const char* id : {"lemma-0", "lemma-red", "prop-vector", "prop-cvector", "cor-1d", "cor-jac", "prop-v5",
                         "prop-buchs", "fact-3ht", "prop-vector2", "vasc-81", "g-vanish", "gc-vanish", "gor-ht2",
                         "f-m2", "f-param", "f-claimA", "f-55i", "f-55ii", "f-54", "f-kan", "f-tor1", "f-tach",
                         "f-dualpair", "f-bv", "free-2au", "free-t2", "free-t3", "free-hyp2", "free-518",
                         "free-laun", "free-sph1", "sph-equiv", "refl-516", "depthseq", "yoshida"})
    EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_THROW(check_info("no-such-check"), UndefinedInput);
  Algebra A({"x", "y"});
  EXPECT_THROW(verify_formula("lemma-0", pair(A.residue_field(), A.ring())), UndefinedInput);
}

TEST(Bounds, LengthTimesGenerators) {
  Algebra A({"x", "y"});
  auto rep = evaluate_bound("lemma-0", pair(A.residue_field(), A.ideal_mod({"x", "y"})));
  EXPECT_EQ(values(rep.lhs), std::vector<std::int64_t>{2});
  EXPECT_EQ(values(rep.rhs), std::vector<std::int64_t>{2});
  EXPECT_EQ(rep.verdict, Verdict::holds);

  auto bad = evaluate_bound("lemma-0", pair(A.ring(), A.residue_field()));
  EXPECT_EQ(bad.verdict, Verdict::hypotheses_violated);
  EXPECT_EQ(bad.hypotheses.at(0).status, HypothesisStatus::violated);
}

TEST(Bounds, LengthBoundOnRandomFiniteLengthModules) {
  std::mt19937 rng(4711);
  Algebra A({"x", "y", "z"});
  for (int trial = 0; trial < 50; ++trial) {
    ModulePtr M = A.cyclic(random_primary(rng, {"x", "y", "z"}));
    auto ngens = random_monomials(rng, {"x", "y", "z"});
    ModulePtr N = trial % 2 ? A.ideal_mod(ngens) : A.cyclic(ngens);
    auto rep = evaluate_bound("lemma-0", pair(M, N));
    ASSERT_EQ(rep.verdict, Verdict::holds) << "trial " << trial;
    auto lm = length(M);
    EXPECT_EQ(rep.rhs.at(0).value, fin(lm.value * mu(N)));
  }
}

TEST(Bounds, ReductionLemma) {
  Algebra A({"x", "y", "z"});
  ModulePtr M = direct_sum(A.residue_field(), A.cyclic({"x"}));
  ModulePtr N = A.ideal_mod({"x", "y"});
  auto rep = evaluate_bound("lemma-red", pair(M, N));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.rhs.size(), 2u);
}

TEST(Bounds, VectorBundleBoundExample) {
  Algebra A({"x", "y", "z"});
  auto rep = evaluate_bound("prop-vector", pair(A.cyclic({"x"}), A.ideal_mod({"x", "y", "z"})));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  // S/(x)⊗m = m/xm, whose socle is spanned by the class of x
  EXPECT_EQ(rep.lhs.at(0).value, fin(1));
  EXPECT_EQ(rep.rhs.at(0).value, fin(1));
}

TEST(Bounds, RegularRingBounds) {
  Algebra A({"x", "y"});
  ModulePtr I = A.ideal_mod({"x^2", "y^3"});
  ModulePtr m = A.ideal_mod({"x", "y"});
  auto cv = evaluate_bound("prop-cvector", pair(I, m));
  EXPECT_EQ(cv.verdict, Verdict::holds);
  auto c1 = evaluate_bound("cor-1d", pair(I, m));
  EXPECT_EQ(c1.verdict, Verdict::holds);
  auto c1bad = evaluate_bound("cor-1d", pair(A.residue_field(), m));
  EXPECT_EQ(c1bad.verdict, Verdict::hypotheses_violated);
}

TEST(Bounds, PresentationBoundOnMaximalIdeal) {
  Algebra A({"x", "y"});
  // m = coker [y, -x]^T: n = 1, d = 2, I_1 = m, deg m = 1, l(R/m) = 1
  auto rep = evaluate_bound("vasc-81", pair(A.ideal_mod({"x", "y"}), nullptr));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(values(rep.lhs), std::vector<std::int64_t>{1});
  EXPECT_EQ(values(rep.rhs), std::vector<std::int64_t>{8});
}

TEST(Bounds, BuchsbaumCertificate) {
  Algebra A({"x", "y", "z"});
  ModulePtr M = A.cyclic({"x"});
  ModulePtr N = A.ideal_mod({"x", "y", "z"});
  auto uncertified = evaluate_bound("prop-buchs", pair(M, N));
  EXPECT_EQ(uncertified.verdict, Verdict::hypotheses_violated);
  CheckInput in = pair(M, N);
  in.N_buchsbaum = true;
  auto rep = evaluate_bound("prop-buchs", in);
  EXPECT_EQ(rep.verdict, Verdict::holds);
  bool certified = false;
  for (const auto& h : rep.hypotheses) certified = certified || h.status == HypothesisStatus::certified;
  EXPECT_TRUE(certified);
}

TEST(Vanishing, HeightTwoCompleteIntersection) {
  Algebra A({"x", "y", "z"});
  auto rep = verify_vanishing("gor-ht2", on_ideal(A.ideal({"x", "y"})));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.lhs.at(0).value, fin(0));
}

TEST(Vanishing, GradeSumOnSecondSyzygy) {
  Algebra A({"x", "y", "z"});
  ModulePtr M = syzygy_module(A.residue_field(), 2);
  CheckInput in = pair(M, M);
  auto rep = verify_vanishing("g-vanish", in);
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.lhs.at(0).value, fin(0));
  in.r = 1;
  EXPECT_EQ(verify_vanishing("g-vanish", in).verdict, Verdict::hypotheses_violated);
  EXPECT_EQ(verify_vanishing("gc-vanish", pair(M, M)).verdict, Verdict::holds);
}

TEST(Vanishing, IdealGeneratedByThreeVariablesInFour) {
  Algebra A({"x", "y", "z", "w"});
  ModulePtr M = A.ideal_mod({"x", "y", "z"});
  auto rep = verify_vanishing("g-vanish", pair(M, M));
  EXPECT_EQ(rep.verdict, Verdict::hypotheses_violated);
  EXPECT_EQ(rep.lhs.size(), 1u);
}

TEST(Vanishing, GeneralIdealDecidedByGrade) {
  Algebra A({"x", "y", "z"});
  CheckInput in = pair(A.ring(), A.ring());
  in.a = A.ideal({"x", "y"});
  auto rep = verify_vanishing("g-vanish", in);
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.lhs.at(0).name, "grade(a,M⊗N)");
  EXPECT_EQ(rep.lhs.at(0).value, fin(2));
}

TEST(Vanishing, InfinitePdBreaksVanishing) {
  Algebra A({"x", "y"}, {"x^2+y^2"}, true);
  ModulePtr m = A.ideal_mod({"x", "y"});
  auto rep = verify_vanishing("g-vanish", pair(m, m));
  EXPECT_EQ(rep.verdict, Verdict::hypotheses_violated);
  EXPECT_EQ(rep.hypotheses.at(0).status, HypothesisStatus::violated);
  EXPECT_NE(rep.lhs.at(0).value, fin(0));
}

TEST(Formulas, MaximalIdealSquare) {
  Algebra A({"x", "y"});
  auto rep = verify_formula("f-m2", on_ideal(A.maximal()));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.lhs.at(0).value, fin(1));
}

TEST(Formulas, ParameterIdeal) {
  Algebra A({"x", "y"});
  auto rep = verify_formula("f-param", on_ideal(A.ideal({"x^2", "y^3"})));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(values(rep.lhs), (std::vector<std::int64_t>{6, 6, 6}));
}

TEST(Formulas, ClaimAOnMaximalIdeal) {
  Algebra A({"x", "y", "z"});
  auto rep = verify_formula("f-claimA", on_ideal(A.maximal()));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(values(rep.lhs), (std::vector<std::int64_t>{3, 4, 0}));
}

TEST(Formulas, MaximalIdealTensorSquare) {
  for (int d = 2; d <= 3; ++d) {
    std::vector<std::string> vars = {"x", "y", "z"};
    vars.resize(d);
    Algebra A(vars);
    auto rep = verify_formula("f-55i", on_ideal(A.maximal()));
    EXPECT_EQ(rep.verdict, Verdict::holds) << d;
    std::vector<std::int64_t> want = {d * (d - 1) / 2, d + 1};
    for (int i = 2; i < d; ++i) want.push_back(0);
    EXPECT_EQ(values(rep.lhs), want);
  }
}

TEST(Formulas, DualOfMaximalIdealInDepthThree) {
  Algebra A({"x", "y", "z"});
  auto rep = verify_formula("f-54", on_ideal(A.maximal()));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  Algebra B({"x", "y"});
  EXPECT_EQ(verify_formula("f-54", on_ideal(B.maximal())).verdict, Verdict::hypotheses_violated);
}

TEST(Formulas, ExtAgainstCohomologyOfDual) {
  Algebra A({"x", "y", "z", "w"});
  ModulePtr L = syzygy_module(A.residue_field(), 3);
  auto rep = verify_formula("f-bv", pair(L, A.ring()));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.lhs.size(), 2u);
}

TEST(Freeness, TwoDimensionalRegular) {
  Algebra A({"x", "y"});
  auto rep = freeness_criterion("free-2au", pair(A.ideal_mod({"x^2", "y^3"}), nullptr));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.lhs.at(0).value, fin(6));
  EXPECT_EQ(rep.rhs.at(0).value, fin(0));
  auto free = freeness_criterion("free-2au", pair(A.free({0, 1}), nullptr));
  EXPECT_EQ(free.verdict, Verdict::holds);
  EXPECT_EQ(free.lhs.at(0).value, fin(0));
}

TEST(Freeness, DepthTwoAndThree) {
  Algebra A({"x", "y"});
  auto t2 = freeness_criterion("free-t2", pair(A.ideal_mod({"x", "y"}), nullptr));
  EXPECT_EQ(t2.verdict, Verdict::holds);
  EXPECT_EQ(t2.lhs.at(0).value, fin(0));
  Algebra B({"x", "y", "z"});
  ModulePtr syz = syzygy_module(B.residue_field(), 2);
  auto t3 = freeness_criterion("free-t3", pair(syz, nullptr));
  EXPECT_EQ(t3.verdict, Verdict::holds);
  EXPECT_EQ(t3.rhs.at(0).value, fin(0));
}

TEST(Freeness, NormalQuadricSurface) {
  Algebra A({"x", "y", "z"}, {"x^2+y^2+z^2"}, true);
  Certificates c;
  c.domain = c.normal = true;
  RingPtr R = QuotientRing::make(A.S, {A.p("x^2+y^2+z^2")}, c);
  auto rep = freeness_criterion("free-hyp2", pair(free_module(R, {0}), nullptr));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(rep.rhs.at(0).value, fin(1));
}

TEST(Freeness, GradeCriteria) {
  Algebra A({"x", "y", "z"});
  ModulePtr syz = syzygy_module(A.residue_field(), 2);
  CheckInput in = pair(syz, nullptr);
  EXPECT_EQ(freeness_criterion("free-laun", in).verdict, Verdict::holds);
  EXPECT_EQ(freeness_criterion("free-sph1", in).verdict, Verdict::holds);
  in.r = 2;
  auto s518 = freeness_criterion("free-518", in);
  EXPECT_EQ(s518.verdict, Verdict::holds);
  EXPECT_EQ(s518.lhs.at(0).value, fin(0));
}

TEST(DepthSequences, PdOneIdeal) {
  Algebra A({"x", "y"});
  Ideal I = A.ideal({"x^2", "y^3"});
  auto res = depth_sequence(ideal_module(I), std::nullopt, 4, {ModuleOrigin::Kind::ideal, I});
  EXPECT_EQ(res.sequence.depths, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(res.sequence.stable_from, 2);
  EXPECT_EQ(res.report.verdict, Verdict::holds);
}

TEST(DepthSequences, MaximalIdeal) {
  for (int d = 2; d <= 3; ++d) {
    std::vector<std::string> vars = {"x", "y", "z"};
    vars.resize(d);
    Algebra A(vars);
    auto res = depth_sequence(ideal_module(A.maximal()), std::nullopt, 3, {ModuleOrigin::Kind::ideal, A.maximal()});
    EXPECT_EQ(res.sequence.depths, (std::vector<int>{1, 0, 0})) << d;
    EXPECT_EQ(res.report.verdict, Verdict::holds) << d;
  }
}

TEST(DepthSequences, ParameterQuotientIsConstant) {
  Algebra A({"x", "y"});
  Ideal J = A.ideal({"x"});
  auto res = depth_sequence(cyclic_module(J), J, 3, {ModuleOrigin::Kind::quotient, J});
  EXPECT_EQ(res.sequence.depths, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(res.sequence.stable_from, 1);
  EXPECT_EQ(res.report.verdict, Verdict::holds);
  ASSERT_EQ(res.sequence.grades.size(), 3u);
  EXPECT_EQ(res.sequence.grades[0], fin(0));
}

TEST(DepthSequences, GeneratorCapTruncates) {
  Algebra A({"x", "y", "z"});
  auto res = depth_sequence(ideal_module(A.maximal()), std::nullopt, 4, {}, 8);
  EXPECT_TRUE(res.sequence.truncated);
  EXPECT_EQ(res.sequence.depths.size(), 1u);
}

TEST(Yoshida, FreeModuleGivesEquality) {
  Algebra A({"x", "y", "z"});
  auto rep = yoshida_report(A.ring(), A.ideal_mod({"x", "y", "z"}), true);
  EXPECT_EQ(rep.verdict, Verdict::holds);
  ASSERT_EQ(rep.notes.size(), 3u);
  for (const auto& n : rep.notes) EXPECT_NE(n.find("equality"), std::string::npos) << n;
  EXPECT_EQ(values(rep.lhs), values(rep.rhs));
}

TEST(Yoshida, HyperplaneQuotientTable) {
  Algebra A({"x", "y", "z"});
  auto rep = yoshida_report(A.cyclic({"x"}), A.ideal_mod({"x", "y", "z"}), true);
  EXPECT_NE(rep.verdict, Verdict::fails);
  EXPECT_EQ(rep.lhs.size(), 2u);
  for (std::size_t i = 0; i < rep.lhs.size(); ++i)
    EXPECT_TRUE(rep.lhs[i].value.value <= rep.rhs[i].value.value);
}

TEST(Properties, TorSymmetry) {
  std::mt19937 rng(99);
  Algebra A({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    auto g1 = random_monomials(rng, {"x", "y", "z"});
    auto g2 = random_monomials(rng, {"x", "y", "z"});
    ModulePtr M = A.cyclic(g1);
    ModulePtr N = trial % 2 ? A.ideal_mod(g2) : A.cyclic(g2);
    EXPECT_EQ(tor(M, N, 1).series(), tor(N, M, 1).series()) << "trial " << trial;
  }
}

TEST(Properties, DepthFormulaWhenTorVanishes) {
  std::mt19937 rng(314);
  Algebra A({"x", "y", "z"});
  int n = 3, independent = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::string> va = {"x", "y", "z"};
    std::vector<std::string> vb = va;
    if (trial % 2 == 0) {
      va = {"x"};
      vb = {"y", "z"};
    }
    ModulePtr M = A.cyclic(random_monomials(rng, va));
    ModulePtr N = A.cyclic(random_monomials(rng, vb));
    bool vanish = true;
    for (int i = 1; i <= n && vanish; ++i) vanish = tor(M, N, i).is_zero();
    if (!vanish) continue;
    ++independent;
    ModulePtr X = tensor(M, N);
    if (X->is_zero()) continue;
    EXPECT_EQ(pd_ambient(X), pd_ambient(M) + pd_ambient(N)) << "trial " << trial;
    EXPECT_EQ(depth(X), depth(M) + depth(N) - n) << "trial " << trial;
  }
  EXPECT_GE(independent, 10);
}
