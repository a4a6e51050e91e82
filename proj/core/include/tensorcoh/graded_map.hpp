#pragma once

#include <string>
#include <vector>

#include "tensorcoh/quotient_ring.hpp"

namespace tensorcoh {

/// Degree-compatible matrix F -> G between graded free R-modules. Summand j of a free module
/// with twists t is R(-t[j]). Column i lives in G and is homogeneous of degree source[i];
/// entries are kept in normal form modulo the defining ideal.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(RingPtr ring, std::vector<int> source, std::vector<int> target, std::vector<ModuleVector> columns);
  /// rows[j][i] is the (j, i) entry.
  static GradedMap from_entries(RingPtr ring, std::vector<int> source, std::vector<int> target,
                                const std::vector<std::vector<Polynomial>>& rows);
  /// Source twists inferred from the entries; target twists default to zero. Zero columns get twist 0.
  static GradedMap with_inferred_twists(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows,
                                        std::vector<int> target = {});
  static GradedMap identity(RingPtr ring, const std::vector<int>& twists);
  static GradedMap zero(RingPtr ring, std::vector<int> source, std::vector<int> target);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& source() const { return source_; }
  const std::vector<int>& target() const { return target_; }
  const std::vector<ModuleVector>& columns() const { return columns_; }
  std::size_t nrows() const { return target_.size(); }
  std::size_t ncols() const { return source_.size(); }
  Polynomial entry(std::size_t j, std::size_t i) const;
  std::vector<std::vector<Polynomial>> entries() const;

  /// this ∘ inner.
  GradedMap compose(const GradedMap& inner) const;
  /// Transposed matrix between dual free modules twisted by shift: twists become shift - t.
  GradedMap dual(int shift = 0) const;
  bool is_zero() const;
  bool has_unit_entry() const;
  /// Same map over another ring with the same ambient (entries reduced there).
  GradedMap over(RingPtr ring) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<ModuleVector> columns_;
};

/// Kronecker product A ⊗ B with twists added; basis index of e_j ⊗ f_k is j * rank(B) + k.
GradedMap kronecker(const GradedMap& A, const GradedMap& B);
/// Columns of A followed by columns of B (same target).
GradedMap concat_columns(const GradedMap& A, const GradedMap& B);
/// Block-diagonal sum.
GradedMap direct_sum(const GradedMap& A, const GradedMap& B);

}  // namespace tensorcoh
