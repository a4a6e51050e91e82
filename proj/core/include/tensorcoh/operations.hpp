#pragma once

#include <vector>

#include "tensorcoh/module.hpp"

namespace tensorcoh {

/// Homogeneous ideal of R given by generators.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  static Ideal maximal(const RingPtr& ring);
  /// Gröbner basis over S of the generators together with the defining ideal.
  std::vector<Polynomial> basis() const;
  /// dim R/(this).
  int quotient_dim() const;
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
};

ModulePtr free_module(const RingPtr& ring, std::vector<int> twists);
/// R/J.
ModulePtr cyclic_module(const Ideal& J);
/// J as a submodule of R.
ModulePtr ideal_module(const Ideal& J);
/// Image of a map, minimally presented.
ModulePtr image_module(const GradedMap& phi);
/// M(k): degrees shifted so that M(k)_d = M_{k+d}.
ModulePtr twist(const ModulePtr& M, int k);
ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N);
ModulePtr tensor(const ModulePtr& M, const ModulePtr& N);
/// M^{⊗k} built by iterated minimized tensor products; k >= 1.
ModulePtr tensor_power(const ModulePtr& M, int k);
ModulePtr hom(const ModulePtr& M, const ModulePtr& N);
ModulePtr dual(const ModulePtr& M);

/// The biduality morphism M -> M** and the pieces read from it. Requires a domain.
struct Biduality {
  ModulePtr bidual;
  /// ker: a subquotient of the generators' free module of M.
  SubQuotient kernel;
  /// coker: M** modulo the image of M.
  SubQuotient cokernel;
  /// Matrix of the morphism from the generators of M into the free module containing M**.
  GradedMap matrix;
};
Biduality eval_map(const ModulePtr& M);
ModulePtr torsion(const ModulePtr& M);
/// M / torsion(M).
ModulePtr torsion_free_part(const ModulePtr& M);

/// Nonzero k×k minors of a matrix given by rows, reduced modulo the defining ideal; {1} when k <= 0.
std::vector<Polynomial> minors(const RingPtr& R, const std::vector<std::vector<Polynomial>>& rows, int k);
/// Ideal of (g - r)-minors of the minimal presentation (g generators), plus the defining ideal.
Ideal fitting(const ModulePtr& M, int r);
Ideal annihilator(const ModulePtr& M);
/// (U :_F a) for a submodule U of a free module F (given by generators), returned as generators.
std::vector<ModuleVector> colon(const RingPtr& ring, const std::vector<int>& twists,
                                const std::vector<ModuleVector>& U, const Ideal& a);
/// (0 :_M a^∞) as a subquotient of the generators' free module.
SubQuotient saturate(const ModulePtr& M, const Ideal& a);
/// M / H^0_a(M).
ModulePtr modulo_saturation(const ModulePtr& M, const Ideal& a);
Ideal ideal_saturation(const Ideal& J, const Ideal& a);

/// Complex of graded free modules: maps[k] : F_{k+1} -> F_k, twists[i] the twists of F_i.
struct FreeComplex {
  RingPtr ring;
  std::vector<std::vector<int>> twists;
  std::vector<GradedMap> maps;

  /// Twists of F_i; empty beyond the computed range.
  std::vector<int> free_twists(std::size_t i) const { return i < twists.size() ? twists[i] : std::vector<int>{}; }
};

/// Koszul complex of seq with the sign convention d(e_S) = Σ_t (-1)^t f_{s_t} e_{S - s_t}.
FreeComplex koszul(const RingPtr& ring, const std::vector<Polynomial>& seq);
/// H_i(C ⊗ N).
SubQuotient tensor_homology(const FreeComplex& C, std::size_t i, const ModulePtr& N);
/// H^i(Hom(C, N)).
SubQuotient hom_cohomology(const FreeComplex& C, std::size_t i, const ModulePtr& N);

}  // namespace tensorcoh
