#pragma once

#include <cstdint>
#include <vector>

#include "tensorcoh/polynomial.hpp"

namespace tensorcoh {

struct VTerm {
  Monomial mono;
  std::uint32_t comp;
  Coef coef;
};

/// Position-over-term comparison: a lower component index dominates, then the ring order.
inline int compare_terms(const AmbientRing& R, const VTerm& a, const VTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return R.compare(a.mono, b.mono);
}

/// Element of a free module S^r, terms strictly descending under compare_terms.
class ModuleVector {
 public:
  ModuleVector() = default;
  /// Terms must already be sorted and combined.
  explicit ModuleVector(std::vector<VTerm> sorted) : terms_(std::move(sorted)) {}

  static ModuleVector from_terms(const AmbientRing& R, std::vector<VTerm> terms);
  static ModuleVector from_polynomial(const Polynomial& f, std::uint32_t comp);
  static ModuleVector unit(std::uint32_t comp, const Monomial& m = Monomial{}, Coef c = 1);

  const std::vector<VTerm>& terms() const { return terms_; }
  std::vector<VTerm>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const VTerm& lead() const { return terms_.front(); }
  /// Degree of the leading term given the twists of the basis vectors.
  int degree(const std::vector<int>& twists) const {
    return terms_.front().mono.degree + twists[terms_.front().comp];
  }
  bool is_homogeneous(const std::vector<int>& twists) const;
  bool single_component() const { return terms_.empty() || terms_.front().comp == terms_.back().comp; }
  std::uint32_t max_component() const;

  Polynomial component(const AmbientPtr& ring, std::uint32_t comp) const;
  ModuleVector shifted(std::int64_t offset) const;
  /// Terms with component in [lo, hi), renumbered to start at 0.
  ModuleVector slice(std::uint32_t lo, std::uint32_t hi) const;
  /// Renumbers components through a table; entries equal to -1 drop the term.
  ModuleVector renumbered(const AmbientRing& R, const std::vector<std::int64_t>& table) const;

  bool operator==(const ModuleVector& o) const;
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

 private:
  std::vector<VTerm> terms_;
};

ModuleVector add(const AmbientRing& R, const ModuleVector& a, const ModuleVector& b);
ModuleVector sub(const AmbientRing& R, const ModuleVector& a, const ModuleVector& b);
ModuleVector scale(const AmbientRing& R, const ModuleVector& a, Coef c);
/// a·(c·m).
ModuleVector mul_term(const AmbientRing& R, const ModuleVector& a, const Monomial& m, Coef c);
ModuleVector mul_poly(const AmbientRing& R, const ModuleVector& a, const Polynomial& f);
/// a − c·m·b, merged in one pass.
ModuleVector sub_multiple(const AmbientRing& R, const ModuleVector& a, const ModuleVector& b,
                          const Monomial& m, Coef c);
ModuleVector make_monic(const AmbientRing& R, const ModuleVector& a);

}  // namespace tensorcoh
