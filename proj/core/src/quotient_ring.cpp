#include "tensorcoh/quotient_ring.hpp"

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

RingPtr QuotientRing::make(AmbientPtr ambient, std::vector<Polynomial> ideal, Certificates certs) {
  std::shared_ptr<QuotientRing> r(new QuotientRing());
  r->ambient_ = ambient;
  r->certs_ = certs;
  GroebnerProblem p;
  p.twists = {0};
  for (auto& f : ideal) {
    if (!f.ring() || !f.ring()->same_as(*ambient)) throw StructuralError("ideal generator from another ring");
    if (!f.is_homogeneous()) throw UnsupportedInput("inhomogeneous ideal generator " + f.to_string());
    if (f.is_zero()) continue;
    r->gens_.push_back(f);
    p.tracked.push_back(ModuleVector::from_polynomial(f, 0));
  }
  if (!p.tracked.empty()) {
    GroebnerResult g = groebner(ambient, p);
    for (std::size_t i : g.minimal) r->minimal_.push_back(r->gens_[i]);
    std::vector<ModuleVector> red;
    for (const auto& v : g.basis) {
      if (v.lead().mono.is_one()) throw StructuralError("the defining ideal is the unit ideal");
      r->basis_.push_back(v.component(ambient, 0));
      red.push_back(v);
    }
    r->reducer_ = Reducer(ambient, std::move(red), true);
  }
  std::vector<VTerm> leads;
  for (const auto& b : r->basis_) leads.push_back({b.leading().mono, 0, 1});
  r->series_ = series_from_leads(*ambient, {0}, leads);
  r->dim_ = r->series_.dim();
  if (!r->basis_.empty()) r->ambient_ring_ = polynomial_ring(ambient);
  return r;
}

RingPtr QuotientRing::polynomial_ring(AmbientPtr ambient) {
  Certificates c;
  c.domain = true;
  c.normal = true;
  return make(std::move(ambient), {}, c);
}

RingPtr QuotientRing::ambient_ring() const {
  if (ambient_ring_) return ambient_ring_;
  return shared_from_this();
}

Polynomial QuotientRing::normal_form(const Polynomial& f) const {
  if (basis_.empty() || f.is_zero()) return f;
  return reducer_.reduce(ModuleVector::from_polynomial(f, 0)).component(ambient_, 0);
}

ModuleVector QuotientRing::normal_form(const ModuleVector& v) const {
  if (basis_.empty() || v.is_zero()) return v;
  return reducer_.reduce(v);
}

bool QuotientRing::same_as(const QuotientRing& o) const {
  if (this == &o) return true;
  if (!ambient_->same_as(*o.ambient_) || basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] != o.basis_[i]) return false;
  return true;
}

void require_same_ring(const QuotientRing& a, const QuotientRing& b) {
  if (!a.same_as(b)) throw StructuralError("objects over different rings");
}

}  // namespace tensorcoh
