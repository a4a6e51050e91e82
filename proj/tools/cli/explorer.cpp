#include "explorer.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "tensorcoh/errors.hpp"
#include "tensorcoh/poly_parser.hpp"

namespace tensorcoh::cli {

namespace {

constexpr int kMaxGens = 5;
constexpr int kMaxDegree = 6;
constexpr int kAttempts = 200;

using Rng = std::mt19937;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string monomial(Rng& rng, const std::vector<std::string>& vars, int max_degree = kMaxDegree) {
  int d = uniform(rng, 1, max_degree);
  std::vector<int> e(vars.size(), 0);
  for (int k = 0; k < d; ++k) ++e[uniform(rng, 0, static_cast<int>(vars.size()) - 1)];
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::vector<std::string> monomials(Rng& rng, const std::vector<std::string>& vars, int max_degree = kMaxDegree) {
  std::vector<std::string> out;
  int k = uniform(rng, 1, kMaxGens);
  for (int i = 0; i < k; ++i) out.push_back(monomial(rng, vars, max_degree));
  return out;
}

// m-primary: random generators plus a pure power of every variable
std::vector<std::string> primary(Rng& rng, const std::vector<std::string>& vars, int max_degree = kMaxDegree) {
  std::vector<std::string> out;
  int k = uniform(rng, 0, kMaxGens - static_cast<int>(vars.size()));
  for (int i = 0; i < k; ++i) out.push_back(monomial(rng, vars, max_degree));
  for (const auto& v : vars) {
    int e = uniform(rng, 1, max_degree);
    out.push_back(e > 1 ? v + "^" + std::to_string(e) : v);
  }
  return out;
}

std::string list(const std::vector<std::string>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + gens[i];
  return out + ")";
}

struct Model {
  RingPtr R;
  std::vector<std::string> vars;
  std::string name;

  Model(std::vector<std::string> v, std::uint32_t p, std::vector<std::string> ideal = {}, bool domain = false,
        std::string label = "")
      : vars(v), name(std::move(label)) {
    auto S = std::make_shared<AmbientRing>(v, std::vector<int>{}, PrimeField(p));
    std::vector<Polynomial> gens;
    for (const auto& g : ideal) gens.push_back(parse_polynomial(S, g));
    Certificates c;
    c.domain = domain;
    R = QuotientRing::make(S, gens, c);
    if (name.empty()) {
      name = "k[";
      for (std::size_t i = 0; i < v.size(); ++i) name += (i ? "," : "") + v[i];
      name += "]";
    }
  }

  Ideal ideal(const std::vector<std::string>& gens) const {
    Ideal J{R, {}};
    for (const auto& g : gens) J.gens.push_back(parse_polynomial(R->ambient(), g));
    return J;
  }
  ModulePtr cyclic(const std::vector<std::string>& g) const { return cyclic_module(ideal(g)); }
  ModulePtr ideal_mod(const std::vector<std::string>& g) const { return ideal_module(ideal(g)); }
};

struct Sample {
  std::string description;
  CheckInput input;
};

// random cyclic quotient or monomial ideal, with its description
std::pair<ModulePtr, std::string> random_module(Rng& rng, const Model& m) {
  auto g = monomials(rng, m.vars);
  if (uniform(rng, 0, 1)) return {m.ideal_mod(g), list(g)};
  return {m.cyclic(g), "R/" + list(g)};
}

using Sampler = std::function<Sample(Rng&)>;

Sampler sampler(const std::string& id, std::uint32_t p) {
  auto xyz = std::make_shared<Model>(std::vector<std::string>{"x", "y", "z"}, p);
  auto xy = std::make_shared<Model>(std::vector<std::string>{"x", "y"}, p);
  auto x1 = std::make_shared<Model>(std::vector<std::string>{"x"}, p);

  auto pair = [](const std::string& dm, const std::string& dn, const Model& m) {
    return "M=" + dm + " N=" + dn + " over " + m.name;
  };

  if (id == "lemma-0")
    return [=](Rng& rng) {
      auto g = primary(rng, xyz->vars, 3);
      auto [N, dn] = random_module(rng, *xyz);
      Sample s{pair("R/" + list(g), dn, *xyz), {}};
      s.input.M = xyz->cyclic(g);
      s.input.N = N;
      return s;
    };
  if (id == "lemma-red" || id == "fact-3ht")
    return [=](Rng& rng) {
      bool ideals = id == "fact-3ht";
      auto gm = monomials(rng, xyz->vars), gn = monomials(rng, xyz->vars);
      Sample s;
      if (ideals) {
        s.input.M = xyz->ideal_mod(gm);
        s.input.N = xyz->ideal_mod(gn);
        s.description = pair(list(gm), list(gn), *xyz);
      } else {
        auto [M, dm] = random_module(rng, *xyz);
        auto [N, dn] = random_module(rng, *xyz);
        s.input.M = M;
        s.input.N = N;
        s.description = pair(dm, dn, *xyz);
      }
      return s;
    };
  if (id == "prop-vector" || id == "prop-cvector")
    return [=](Rng& rng) {
      const Model& m = id == "prop-cvector" && uniform(rng, 0, 1) ? *xy : *xyz;
      auto [M, dm] = random_module(rng, m);
      auto gn = primary(rng, m.vars, 3);
      Sample s{pair(dm, list(gn), m), {}};
      s.input.M = M;
      s.input.N = m.ideal_mod(gn);
      return s;
    };
  if (id == "cor-1d")
    return [=](Rng& rng) {
      const Model& m = uniform(rng, 0, 1) ? *xy : *x1;
      auto gm = monomials(rng, m.vars);
      auto [N, dn] = random_module(rng, m);
      Sample s{pair(list(gm), dn, m), {}};
      s.input.M = m.ideal_mod(gm);
      s.input.N = N;
      return s;
    };
  if (id == "cor-jac") {
    auto node = std::make_shared<Model>(std::vector<std::string>{"x", "y"}, p, std::vector<std::string>{"x^2+y^2"},
                                        true, "k[x,y]/(x^2+y^2)");
    return [=](Rng& rng) {
      auto [M, dm] = random_module(rng, *node);
      auto [N, dn] = random_module(rng, *node);
      Sample s{pair(dm, dn, *node), {}};
      s.input.M = M;
      s.input.N = N;
      return s;
    };
  }
  if (id == "vasc-81")
    return [=](Rng& rng) {
      bool three = uniform(rng, 0, 2) == 0;
      const Model& m = three ? *xyz : *xy;
      std::vector<int> e;
      for (std::size_t i = 0; i < m.vars.size(); ++i) e.push_back(uniform(rng, 1, 3));
      int total = 0;
      for (int k : e) total += k;
      std::vector<std::vector<Polynomial>> rows;
      std::vector<int> gen_twists;
      std::string d = "coker[";
      for (std::size_t i = 0; i < e.size(); ++i) {
        std::string entry = m.vars[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        rows.push_back({parse_polynomial(m.R->ambient(), entry)});
        gen_twists.push_back(total - e[i]);
        d += (i ? ";" : "") + entry;
      }
      Sample s{d + "] over " + m.name, {}};
      s.input.M = GradedModule::coker(GradedMap::from_entries(m.R, {total}, gen_twists, rows));
      return s;
    };
  if (id == "prop-v5") {
    auto hyp = std::make_shared<Model>(std::vector<std::string>{"x", "y", "u", "v"}, p,
                                       std::vector<std::string>{"x*y-u*v"}, true, "k[x,y,u,v]/(xy-uv)");
    return [=](Rng& rng) {
      static const std::vector<std::vector<std::string>> mcm = {{"x", "u"}, {"x", "v"}, {"y", "u"}, {"y", "v"}};
      int pick = uniform(rng, 0, static_cast<int>(mcm.size()));
      ModulePtr M = pick == 0 ? free_module(hyp->R, {0}) : hyp->ideal_mod(mcm[pick - 1]);
      std::string dm = pick == 0 ? "R" : list(mcm[pick - 1]);
      auto gn = monomials(rng, hyp->vars, 3);
      Sample s{pair(dm, "R/" + list(gn), *hyp), {}};
      s.input.M = M;
      s.input.N = hyp->cyclic(gn);
      return s;
    };
  }
  if (id == "prop-buchs" || id == "prop-vector2")
    return [=](Rng& rng) {
      std::vector<std::string> gm = {monomial(rng, xyz->vars)};
      if (id == "prop-vector2" && uniform(rng, 0, 1))
        gm = {"x^" + std::to_string(uniform(rng, 1, 3)), "y^" + std::to_string(uniform(rng, 1, 3))};
      Sample s;
      s.input.M = xyz->cyclic(gm);
      std::string dn;
      if (id == "prop-buchs") {
        int k = uniform(rng, 0, 2);
        s.input.N = k == 0 ? free_module(xyz->R, {0}) : syzygy_module(cyclic_module(Ideal::maximal(xyz->R)), k);
        s.input.N_buchsbaum = true;
        dn = k == 0 ? "R" : "Syz" + std::to_string(k) + "(k)";
      } else {
        auto gn = primary(rng, xyz->vars, 3);
        s.input.N = xyz->ideal_mod(gn);
        dn = list(gn);
      }
      s.description = pair("R/" + list(gm), dn, *xyz);
      return s;
    };
  throw UndefinedInput("no random model for '" + id + "'");
}

}  // namespace

const std::vector<std::string>& explorable() {
  static const std::vector<std::string> ids = {"lemma-0", "lemma-red", "prop-vector", "prop-cvector", "cor-1d",
                                               "cor-jac", "prop-v5",   "prop-buchs",  "fact-3ht",     "prop-vector2",
                                               "vasc-81"};
  return ids;
}

std::string format_ratio(const Count& lhs, const Count& rhs) {
  if (rhs.infinite) return "0";
  if (rhs.value == 0) return lhs.infinite || lhs.value != 0 ? "inf" : "0";
  if (lhs.infinite) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(lhs.value) / static_cast<double>(rhs.value));
  return buf;
}

std::string ExploreResult::csv() const {
  auto count = [](const Count& c) { return c.infinite ? std::string("inf") : std::to_string(c.value); };
  std::string out = "instance_id,description,lhs,rhs,ratio\n";
  for (const auto& r : rows)
    out += std::to_string(r.instance) + ",\"" + r.description + "\"," + count(r.lhs) + "," + count(r.rhs) + "," +
           format_ratio(r.lhs, r.rhs) + "\n";
  return out;
}

double ExploreResult::max_ratio() const {
  double best = 0;
  for (const auto& r : rows) {
    std::string s = format_ratio(r.lhs, r.rhs);
    best = std::max(best, s == "inf" ? std::numeric_limits<double>::infinity() : std::stod(s));
  }
  return best;
}

ExploreResult explore(const std::string& id, int trials, std::uint32_t seed, std::uint32_t field_char) {
  if (check_info(id).kind != CheckKind::bound) throw UndefinedInput("'" + id + "' is not a bound");
  Sampler sample = sampler(id, field_char);
  Rng rng(seed);
  ExploreResult out;
  out.id = id;
  for (int t = 0; t < trials; ++t) {
    int attempt = 0;
    while (true) {
      if (++attempt > kAttempts) throw UnsupportedInput("no instance satisfying the hypotheses of '" + id + "'");
      Sample s = sample(rng);
      CheckReport rep = evaluate_bound(id, s.input);
      if (rep.verdict == Verdict::fails)
        throw InternalConsistency("bound '" + id + "' violated on " + s.description + ": " +
                                  rep.lhs.front().value.to_string() + " vs " + rep.rhs.front().value.to_string());
      if (rep.verdict != Verdict::holds) continue;
      out.rows.push_back({t + 1, s.description, rep.lhs.front().value, rep.rhs.front().value});
      break;
    }
  }
  return out;
}

}  // namespace tensorcoh::cli
