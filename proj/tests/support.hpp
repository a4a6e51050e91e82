#pragma once

#include <random>
#include <string>
#include <vector>

#include "tensorcoh/operations.hpp"
#include "tensorcoh/poly_parser.hpp"
#include "tensorcoh/resolution.hpp"

namespace tctest {

using namespace tensorcoh;

struct Algebra {
  AmbientPtr S;
  RingPtr R;

  Algebra(std::vector<std::string> vars, std::vector<std::string> ideal = {}, bool domain = false,
          std::vector<int> weights = {}) {
    S = std::make_shared<AmbientRing>(std::move(vars), std::move(weights), PrimeField());
    std::vector<Polynomial> I;
    for (const auto& s : ideal) I.push_back(parse_polynomial(S, s));
    Certificates c;
    c.domain = domain;
    R = QuotientRing::make(S, std::move(I), c);
  }

  Polynomial p(const std::string& s) const { return parse_polynomial(S, s); }

  Ideal ideal(const std::vector<std::string>& gens) const {
    Ideal J{R, {}};
    for (const auto& g : gens) J.gens.push_back(p(g));
    return J;
  }
  Ideal maximal() const { return Ideal::maximal(R); }

  GradedMap matrix(const std::vector<std::vector<std::string>>& rows, std::vector<int> target = {}) const {
    std::vector<std::vector<Polynomial>> polys;
    for (const auto& r : rows) {
      std::vector<Polynomial> row;
      for (const auto& e : r) row.push_back(p(e));
      polys.push_back(row);
    }
    return GradedMap::with_inferred_twists(R, polys, std::move(target));
  }
  ModulePtr coker(const std::vector<std::vector<std::string>>& rows, std::vector<int> target = {}) const {
    return GradedModule::coker(matrix(rows, std::move(target)));
  }
  ModulePtr free(std::vector<int> twists) const { return free_module(R, std::move(twists)); }
  ModulePtr ring() const { return free({0}); }
  ModulePtr cyclic(const std::vector<std::string>& gens) const { return cyclic_module(ideal(gens)); }
  ModulePtr ideal_mod(const std::vector<std::string>& gens) const { return ideal_module(ideal(gens)); }
  ModulePtr residue_field() const { return cyclic_module(maximal()); }
};

inline std::int64_t length_of(const SubQuotient& q) {
  auto l = q.series().length();
  return l ? *l : -1;
}

inline std::int64_t length_of(const ModulePtr& M) {
  auto l = M->series().length();
  return l ? *l : -1;
}

// random monomial ideal in vars, up to four generators with exponents <= 3
inline std::vector<std::string> random_monomials(std::mt19937& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> count(1, 4), expo(0, 3);
  std::vector<std::string> out;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::string m;
    for (const auto& v : vars) {
      int e = expo(rng);
      if (!e) continue;
      if (!m.empty()) m += "*";
      m += v + "^" + std::to_string(e);
    }
    out.push_back(m.empty() ? vars[i % vars.size()] : m);
  }
  return out;
}

}  // namespace tctest
