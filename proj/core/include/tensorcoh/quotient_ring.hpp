#pragma once

#include <memory>
#include <vector>

#include "tensorcoh/groebner.hpp"
#include "tensorcoh/hilbert.hpp"

namespace tensorcoh {

/// Properties the engine does not decide; supplied by fixtures.
struct Certificates {
  bool domain = false;
  bool normal = false;
  bool isolated_singularity = false;
};

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// R = S/I for a homogeneous ideal I of the ambient ring S.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static RingPtr make(AmbientPtr ambient, std::vector<Polynomial> ideal, Certificates certs = {});
  static RingPtr polynomial_ring(AmbientPtr ambient);

  const AmbientPtr& ambient() const { return ambient_; }
  const AmbientRing& S() const { return *ambient_; }
  int nvars() const { return ambient_->nvars(); }
  /// The ambient ring as a quotient by the zero ideal.
  RingPtr ambient_ring() const;

  const std::vector<Polynomial>& ideal_generators() const { return gens_; }
  /// Minimal homogeneous generators of I, chosen from the given ones.
  const std::vector<Polynomial>& ideal_minimal() const { return minimal_; }
  const std::vector<Polynomial>& ideal_basis() const { return basis_; }
  bool is_polynomial_ring() const { return basis_.empty(); }
  int dim() const { return dim_; }
  const HilbertSeries& series() const { return series_; }
  const Certificates& certificates() const { return certs_; }
  /// Polynomial ring, or certified domain.
  bool is_domain() const { return basis_.empty() || certs_.domain; }

  Polynomial normal_form(const Polynomial& f) const;
  /// Reduces every component modulo I.
  ModuleVector normal_form(const ModuleVector& v) const;
  bool same_as(const QuotientRing& o) const;

 private:
  QuotientRing() = default;

  AmbientPtr ambient_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> minimal_;
  std::vector<Polynomial> basis_;
  Reducer reducer_;
  HilbertSeries series_;
  int dim_ = 0;
  Certificates certs_;
  RingPtr ambient_ring_;
};

void require_same_ring(const QuotientRing& a, const QuotientRing& b);

}  // namespace tensorcoh
