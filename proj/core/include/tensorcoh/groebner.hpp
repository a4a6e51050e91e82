#pragma once

#include <climits>
#include <cstdint>
#include <vector>

#include "tensorcoh/module_vector.hpp"

namespace tensorcoh {

/// Leading-term index over a fixed list of reducers. Reducers are tried in list order.
class DivisorIndex {
 public:
  explicit DivisorIndex(bool any_component = false) : any_component_(any_component) {}
  void add(const Monomial& lead, std::uint32_t comp, std::uint32_t idx);
  /// Index of the first reducer whose lead divides t, or -1.
  std::int64_t find(const VTerm& t) const;

 private:
  struct Entry {
    Monomial lead;
    std::uint32_t idx;
  };
  bool any_component_;
  std::vector<std::vector<Entry>> lists_;
};

/// Normal forms against a fixed reducer list. With any_component set, the reducers are
/// single-component vectors in component 0 acting on every component (an ideal times F).
class Reducer {
 public:
  Reducer() = default;
  Reducer(AmbientPtr ring, std::vector<ModuleVector> reducers, bool any_component = false);

  /// Full reduction: no term of the result is divisible by a reducer lead.
  ModuleVector reduce(const ModuleVector& f) const;
  /// Only the leading term is made irreducible.
  ModuleVector reduce_top(const ModuleVector& f) const;
  const std::vector<ModuleVector>& reducers() const { return reducers_; }
  const AmbientPtr& ring() const { return ring_; }

 private:
  AmbientPtr ring_;
  std::vector<ModuleVector> reducers_;
  DivisorIndex index_;
  bool any_component_ = false;
};

struct GroebnerProblem {
  /// Degrees of the basis vectors of the ambient free module.
  std::vector<int> twists;
  /// Reduced Gröbner basis of a polynomial ideal I; I·e_j is included for j in [ideal_lo, ideal_hi).
  std::vector<Polynomial> ideal;
  std::uint32_t ideal_lo = 0;
  std::uint32_t ideal_hi = 0;
  std::vector<ModuleVector> background;
  /// Generators whose minimal subset (modulo everything of lower degree) is reported.
  std::vector<ModuleVector> tracked;
  bool reduce_tails = true;
  /// Stop before processing any degree above this one.
  int degree_limit = INT_MAX;
};

struct GroebnerResult {
  /// Monic, sorted by degree then descending lead; reduced when reduce_tails is set.
  std::vector<ModuleVector> basis;
  /// Indices of tracked generators forming a minimal generating set modulo the background.
  std::vector<std::size_t> minimal;
  bool truncated = false;
};

/// Homogeneous Buchberger algorithm for submodules of a graded free module, processed degree
/// by degree with the normal selection strategy and the Gebauer–Möller criteria.
GroebnerResult groebner(const AmbientPtr& ring, const GroebnerProblem& problem);

/// Division of f by G; reducers are tried in the given order.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G);
/// Reduced monic Gröbner basis of the ideal generated by homogeneous gens.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

}  // namespace tensorcoh
