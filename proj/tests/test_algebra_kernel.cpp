#include <gtest/gtest.h>

#include <random>

#include "tensorcoh/errors.hpp"
#include "tensorcoh/groebner.hpp"
#include "tensorcoh/hilbert.hpp"

using namespace tensorcoh;

namespace {

AmbientPtr ring_of(std::vector<std::string> names) {
  return std::make_shared<AmbientRing>(std::move(names), std::vector<int>{}, PrimeField());
}

Polynomial var(const AmbientPtr& R, int i, int p = 1) { return Polynomial::variable(R, i, p); }
Polynomial num(const AmbientPtr& R, std::int64_t c) { return Polynomial::constant(R, c); }

}  // namespace

TEST(Field, InversesOfSamples) {
  PrimeField F;
  EXPECT_EQ(F.characteristic(), 32003u);
  for (Coef a = 1; a < 32003; a += 97) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_EQ(F.mul(32002, F.inv(32002)), 1u);
  EXPECT_THROW(PrimeField(32004), UnsupportedInput);
  PrimeField F7(7);
  for (Coef a = 1; a < 7; ++a) EXPECT_EQ(F7.mul(a, F7.inv(a)), 1u);
}

TEST(Ring, RejectsBadDeclarations) {
  EXPECT_THROW(AmbientRing({"x", "x"}, {}, PrimeField()), StructuralError);
  EXPECT_THROW(AmbientRing({"x"}, {0}, PrimeField()), StructuralError);
  EXPECT_THROW(AmbientRing({}, {}, PrimeField()), StructuralError);
}

TEST(Ring, OrderRefinesDivisibilityAndRespectsProducts) {
  for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    AmbientRing R({"x", "y", "z"}, {}, PrimeField(), order);
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> e(0, 4);
    auto rnd = [&] { return R.make({e(gen), e(gen), e(gen)}); };
    for (int k = 0; k < 300; ++k) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      if (a != b) EXPECT_EQ(R.compare(a, b), -R.compare(b, a));
      if (a.divides(b) && a != b) EXPECT_GT(R.compare(b, a), 0);
      EXPECT_EQ(R.compare(a, b), R.compare(a * c, b * c));
    }
  }
}

TEST(Polynomial, TermsSortedAndCombined) {
  auto R = ring_of({"x", "y"});
  Polynomial f = var(R, 1) * var(R, 1) + var(R, 0) * var(R, 1) + var(R, 0) * var(R, 0) - var(R, 0) * var(R, 1);
  EXPECT_EQ(f.to_string(), "x^2 + y^2");
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE((var(R, 0) + num(R, 1)).is_homogeneous());
  EXPECT_EQ((var(R, 0) - var(R, 0)).is_zero(), true);
  EXPECT_EQ((var(R, 0) * var(R, 0) - var(R, 1) * var(R, 1) * var(R, 1)).derivative(1).to_string(), "-3*y^2");
}

TEST(Reduce, ExactMultiple) {
  auto R = ring_of({"x", "y"});
  EXPECT_TRUE(reduce(var(R, 0, 2) * var(R, 1), {var(R, 0, 2)}).is_zero());
}

TEST(Reduce, SingleStep) {
  auto R = ring_of({"x", "y"});
  EXPECT_EQ(reduce(var(R, 0, 2) * var(R, 1) + var(R, 1, 3), {var(R, 0, 2)}), var(R, 1, 3));
}

TEST(Reduce, TracedDivision) {
  // xy^2 - y(xy + y^2) = -y^3, irreducible by x^2 and xy
  auto R = ring_of({"x", "y"});
  Polynomial g2 = var(R, 0) * var(R, 1) + var(R, 1, 2);
  EXPECT_EQ(reduce(var(R, 0) * var(R, 1, 2), {var(R, 0, 2), g2}), -var(R, 1, 3));
}

TEST(Reduce, RingMismatch) {
  auto R = ring_of({"x", "y"});
  auto T = ring_of({"u", "v"});
  EXPECT_THROW(reduce(var(R, 0), {var(T, 0)}), StructuralError);
}

TEST(Buchberger, AlreadyReduced) {
  auto R = ring_of({"x", "y"});
  auto G = buchberger({var(R, 0), var(R, 1)});
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G[0], var(R, 0));
  EXPECT_EQ(G[1], var(R, 1));
}

TEST(Buchberger, SPairProducesCube) {
  auto R = ring_of({"x", "y"});
  auto G = buchberger({var(R, 0, 2), var(R, 0) * var(R, 1) + var(R, 1, 2)});
  ASSERT_EQ(G.size(), 3u);
  EXPECT_EQ(G[0], var(R, 0, 2));
  EXPECT_EQ(G[1], var(R, 0) * var(R, 1) + var(R, 1, 2));
  EXPECT_EQ(G[2], var(R, 1, 3));
  EXPECT_EQ(buchberger(G), G);
}

TEST(Buchberger, Principal) {
  auto R = ring_of({"x", "y", "z"});
  Polynomial f = var(R, 0) * var(R, 1) - var(R, 2, 2);
  auto G = buchberger({f});
  ASSERT_EQ(G.size(), 1u);
  EXPECT_EQ(G[0], f);
}

TEST(Buchberger, RejectsInhomogeneous) {
  auto R = ring_of({"x", "y"});
  EXPECT_THROW(buchberger({var(R, 0) + num(R, 1)}), UnsupportedInput);
}

namespace {

Polynomial random_form(const AmbientPtr& R, std::mt19937& gen, int deg) {
  std::uniform_int_distribution<int> c(0, 5);
  std::vector<Term> terms;
  int n = R->nvars();
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      int k = c(gen);
      if (k) terms.push_back({R->make(e), static_cast<Coef>(k)});
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, deg);
  return Polynomial(R, terms);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const auto& R = f.ring();
  Monomial l = R->lcm(f.leading().mono, g.leading().mono);
  return f.times(l / f.leading().mono, R->field().inv(f.leading().coef)) -
         g.times(l / g.leading().mono, R->field().inv(g.leading().coef));
}

}  // namespace

TEST(Buchberger, RandomIdealsSatisfyCriterion) {
  auto R = ring_of({"x", "y", "z"});
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> d(1, 3), k(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    int count = k(gen);
    for (int i = 0; i < count; ++i) {
      Polynomial f = random_form(R, gen, d(gen));
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    auto G = buchberger(gens);
    for (const auto& g : G) EXPECT_EQ(g.leading().coef, 1u);
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i != j) EXPECT_FALSE(G[i].leading().mono.divides(G[j].leading().mono));
        if (i < j) EXPECT_TRUE(reduce(spoly(G[i], G[j]), G).is_zero());
      }
    for (const auto& f : gens) EXPECT_TRUE(reduce(f, G).is_zero());
    std::uniform_int_distribution<int> m(0, 2);
    Polynomial comb(R);
    for (const auto& f : gens) comb = comb + f * random_form(R, gen, m(gen));
    EXPECT_TRUE(reduce(comb, G).is_zero());
    EXPECT_EQ(buchberger(G), G);
    EXPECT_EQ(buchberger(gens), G);
  }
}

TEST(Hilbert, MonomialQuotientLengths) {
  auto R = ring_of({"x", "y"});
  auto len = [&](std::vector<Monomial> g) {
    std::vector<VTerm> leads;
    for (auto& m : g) leads.push_back({m, 0, 1});
    return series_from_leads(*R, {0}, leads).length();
  };
  EXPECT_EQ(len({R->make({2, 0}), R->make({1, 1}), R->make({0, 2})}), 3);
  EXPECT_EQ(len({R->make({2, 0}), R->make({0, 3})}), 6);
  EXPECT_EQ(len({R->make({2, 0})}), std::nullopt);
  HilbertSeries S = series_from_leads(*R, {0}, {});
  EXPECT_EQ(S.dim(), 2);
  EXPECT_EQ(S.degree(), 1);
  EXPECT_EQ(S.value(3), 4);
}

TEST(Hilbert, PivotRecursionMatchesCounting) {
  auto R = ring_of({"x", "y", "z"});
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> e(0, 3), k(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> g;
    int count = k(gen);
    for (int i = 0; i < count; ++i) {
      Monomial m = R->make({e(gen), e(gen), e(gen)});
      if (!m.is_one()) g.push_back(m);
    }
    std::vector<VTerm> leads;
    for (auto& m : g) leads.push_back({m, 0, 1});
    HilbertSeries H = series_from_leads(*R, {0}, leads);
    for (int d = 0; d <= 8; ++d) {
      std::int64_t count_std = 0;
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) {
          Monomial m = R->make({a, b, d - a - b});
          bool in = false;
          for (auto& x : g) in = in || x.divides(m);
          if (!in) ++count_std;
        }
      EXPECT_EQ(H.value(d), count_std);
    }
  }
}
