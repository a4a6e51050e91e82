#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tensorcoh/graded_map.hpp"

namespace tensorcoh {

class GradedModule;
using ModulePtr = std::shared_ptr<const GradedModule>;
struct Resolution;

/// coker(presentation). Caches are filled on first use under a lock.
class GradedModule : public std::enable_shared_from_this<GradedModule> {
 public:
  static ModulePtr coker(GradedMap presentation);
  static ModulePtr free(RingPtr ring, std::vector<int> twists);
  static ModulePtr zero(RingPtr ring);

  GradedModule(const GradedModule&) = delete;
  GradedModule& operator=(const GradedModule&) = delete;

  const GradedMap& presentation() const { return pres_; }
  const RingPtr& ring() const { return pres_.ring(); }
  const std::vector<int>& twists() const { return pres_.target(); }
  std::size_t num_generators() const { return pres_.nrows(); }

  /// Gröbner basis over S of im(presentation) + I·F0.
  const std::vector<ModuleVector>& relation_basis() const;
  const Reducer& relation_reducer() const;
  const HilbertSeries& series() const;
  bool is_zero() const { return series().is_zero(); }

  /// Minimal presentation (constant pivots removed, minimal relations).
  ModulePtr minimal() const;
  bool is_minimal() const { return minimal_flag_; }
  /// The module viewed over the ambient polynomial ring S, minimally presented.
  ModulePtr over_ambient() const;

  std::shared_ptr<const Resolution> cached_resolution(bool ambient, int bound) const;
  void store_resolution(bool ambient, std::shared_ptr<const Resolution> r) const;

 private:
  explicit GradedModule(GradedMap p) : pres_(std::move(p)) {}
  void ensure_basis() const;

  GradedMap pres_;
  bool minimal_flag_ = false;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<ModuleVector>> basis_;
  mutable Reducer reducer_;
  mutable std::optional<HilbertSeries> series_;
  mutable ModulePtr minimal_;
  mutable ModulePtr over_ambient_;
  mutable std::shared_ptr<const Resolution> res_ring_;
  mutable std::shared_ptr<const Resolution> res_ambient_;

  friend ModulePtr minimize(const GradedModule& M);
};

/// (span(gens) + span(rels)) / span(rels) inside a free module, over R.
struct SubQuotient {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<ModuleVector> gens;
  std::vector<ModuleVector> rels;

  HilbertSeries series() const;
  bool is_zero() const;
  /// Every generator times every variable lies in span(rels).
  bool killed_by_maximal_ideal() const;
  /// Minimal presentation.
  ModulePtr present() const;
};

/// Vectors v with D v ∈ span(target_relations) + I·target; a generating set (a Gröbner basis of the
/// lifted kernel, reduced modulo I, zeros dropped).
std::vector<ModuleVector> kernel_vectors(const GradedMap& D, const std::vector<ModuleVector>& target_relations = {});
/// Indices of a minimal subset of vecs generating span(vecs) modulo span(background) + I·F.
std::vector<std::size_t> minimal_subset(const RingPtr& ring, const std::vector<int>& twists,
                                        const std::vector<ModuleVector>& vecs,
                                        const std::vector<ModuleVector>& background = {});
/// Minimal generators of ker(phi) as the columns of a map into source(phi).
GradedMap syzygies(const GradedMap& phi);
ModulePtr minimize(const GradedModule& M);

/// Gröbner basis over S of span(vecs) + I·F.
std::vector<ModuleVector> submodule_basis(const RingPtr& ring, const std::vector<int>& twists,
                                          const std::vector<ModuleVector>& vecs);

}  // namespace tensorcoh
