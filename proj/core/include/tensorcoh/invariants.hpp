#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorcoh/resolution.hpp"

namespace tensorcoh {

const HilbertSeries& hilbert_series(const ModulePtr& M);
/// Krull dimension; -1 for the zero module.
int dim(const ModulePtr& M);
std::int64_t degree(const ModulePtr& M);
Count length(const ModulePtr& M);
std::int64_t mu(const ModulePtr& M);
/// deg(M)/deg(R) when dim M = dim R, else 0. Requires a domain.
std::int64_t rank(const ModulePtr& M);

/// n - pd_S(M).
int depth(const ModulePtr& M);
int pd_ambient(const ModulePtr& M);
/// min{i : Ext^i_R(R/a, M) != 0}; infinite when M = aM.
Count grade(const Ideal& a, const ModulePtr& M);
/// Length of H^i_m(M) through ℓ(Ext^{n-i}_S(M, S)); infinite when that Ext has positive dimension.
Count h(const ModulePtr& M, int i);
/// Length of H^0_m(M) through saturation.
std::int64_t h0_sat(const ModulePtr& M);
std::int64_t hdeg(const ModulePtr& M);
/// H^0_m(M) as a module.
ModulePtr local_zeroth(const ModulePtr& M);

/// Ext^{n-d}_S(R, S(-σ)) as an R-module; requires R Cohen–Macaulay.
ModulePtr canonical(const RingPtr& R);
std::int64_t type(const RingPtr& R);
bool is_gorenstein(const RingPtr& R);
bool is_cohen_macaulay(const RingPtr& R);
/// I + (c×c minors of the Jacobian of the minimal generators), c = n - dim R, as an ideal of R.
Ideal jacobian_ideal(const RingPtr& R);

bool is_free(const ModulePtr& M);
bool is_torsion_free(const ModulePtr& M);
bool is_reflexive(const ModulePtr& M);
/// Free of constant rank on Spec R minus V(a); decided through Fitt_rank(M) : a^∞.
bool is_locally_free_off(const ModulePtr& M, const Ideal& a);
bool is_locally_free_punctured(const ModulePtr& M);
bool serre_Sr(const ModulePtr& M, int r);

enum class Tri { yes, no, not_applicable };
std::string to_string(Tri t);
/// Every H^i_m(M), i < dim M, has finite length and is killed by m; not applicable when some
/// of them is not of finite length.
Tri is_quasi_buchsbaum(const ModulePtr& M);

/// Equal Hilbert series and equal Betti tables over R up to the bound.
bool iso_candidate(const ModulePtr& M, const ModulePtr& N, int bound);

struct InvariantReport {
  int dim = -1;
  std::optional<int> depth;
  std::optional<int> pd;
  std::int64_t mu = 0;
  Count length;
  std::int64_t deg = 0;
  std::optional<std::int64_t> rank;
  std::vector<Count> h;
  std::optional<std::int64_t> hdeg;
  bool is_free = false;
  std::optional<bool> torsion_free;
  std::optional<bool> reflexive;
  std::optional<bool> locally_free_punctured;
  int serre_r = 1;
  bool serre = false;
  Tri quasi_buchsbaum = Tri::not_applicable;
};

InvariantReport invariants(const ModulePtr& M, int serre_r = 1);

}  // namespace tensorcoh
