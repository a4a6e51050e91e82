#include "tensorcoh/module_vector.hpp"

#include <algorithm>

namespace tensorcoh {

ModuleVector ModuleVector::from_terms(const AmbientRing& R, std::vector<VTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const VTerm& a, const VTerm& b) { return compare_terms(R, a, b) > 0; });
  std::vector<VTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = R.field().add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef) {
      out.push_back(t);
    }
  }
  return ModuleVector(std::move(out));
}

ModuleVector ModuleVector::from_polynomial(const Polynomial& f, std::uint32_t comp) {
  std::vector<VTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, comp, t.coef});
  return ModuleVector(std::move(out));
}

ModuleVector ModuleVector::unit(std::uint32_t comp, const Monomial& m, Coef c) {
  return ModuleVector({VTerm{m, comp, c}});
}

bool ModuleVector::is_homogeneous(const std::vector<int>& twists) const {
  if (terms_.empty()) return true;
  int d = degree(twists);
  for (const auto& t : terms_)
    if (t.mono.degree + twists[t.comp] != d) return false;
  return true;
}

std::uint32_t ModuleVector::max_component() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.comp);
  return m;
}

Polynomial ModuleVector::component(const AmbientPtr& ring, std::uint32_t comp) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.comp == comp) out.push_back({t.mono, t.coef});
  return Polynomial(ring, std::move(out));
}

ModuleVector ModuleVector::shifted(std::int64_t offset) const {
  ModuleVector r = *this;
  for (auto& t : r.terms_) t.comp = static_cast<std::uint32_t>(t.comp + offset);
  return r;
}

ModuleVector ModuleVector::slice(std::uint32_t lo, std::uint32_t hi) const {
  std::vector<VTerm> out;
  for (const auto& t : terms_)
    if (t.comp >= lo && t.comp < hi) out.push_back({t.mono, t.comp - lo, t.coef});
  return ModuleVector(std::move(out));
}

ModuleVector ModuleVector::renumbered(const AmbientRing& R, const std::vector<std::int64_t>& table) const {
  std::vector<VTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::int64_t c = table[t.comp];
    if (c >= 0) out.push_back({t.mono, static_cast<std::uint32_t>(c), t.coef});
  }
  return from_terms(R, std::move(out));
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.comp != b.comp || a.coef != b.coef || a.mono != b.mono) return false;
  }
  return true;
}

namespace {

template <typename Scale>
std::vector<VTerm> merge(const AmbientRing& R, const std::vector<VTerm>& a, std::size_t a0,
                         const std::vector<VTerm>& b, std::size_t b0, Scale&& scale_b) {
  const PrimeField& F = R.field();
  std::vector<VTerm> out;
  out.reserve(a.size() - a0 + b.size() - b0);
  std::size_t i = a0, j = b0;
  while (i < a.size() && j < b.size()) {
    VTerm tb = scale_b(b[j]);
    int c = compare_terms(R, a[i], tb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(tb);
      ++j;
    } else {
      Coef v = F.add(a[i].coef, tb.coef);
      if (v) out.push_back({a[i].mono, a[i].comp, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(scale_b(b[j]));
  return out;
}

}  // namespace

ModuleVector add(const AmbientRing& R, const ModuleVector& a, const ModuleVector& b) {
  return ModuleVector(merge(R, a.terms(), 0, b.terms(), 0, [](const VTerm& t) { return t; }));
}

ModuleVector sub(const AmbientRing& R, const ModuleVector& a, const ModuleVector& b) {
  const PrimeField& F = R.field();
  return ModuleVector(merge(R, a.terms(), 0, b.terms(), 0, [&](const VTerm& t) {
    return VTerm{t.mono, t.comp, F.neg(t.coef)};
  }));
}

ModuleVector scale(const AmbientRing& R, const ModuleVector& a, Coef c) {
  if (c == 0) return {};
  std::vector<VTerm> out = a.terms();
  for (auto& t : out) t.coef = R.field().mul(t.coef, c);
  return ModuleVector(std::move(out));
}

ModuleVector mul_term(const AmbientRing& R, const ModuleVector& a, const Monomial& m, Coef c) {
  if (c == 0) return {};
  std::vector<VTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.mono * m, t.comp, R.field().mul(t.coef, c)});
  return ModuleVector(std::move(out));
}

ModuleVector mul_poly(const AmbientRing& R, const ModuleVector& a, const Polynomial& f) {
  ModuleVector acc;
  for (const auto& t : f.terms()) acc = add(R, acc, mul_term(R, a, t.mono, t.coef));
  return acc;
}

ModuleVector sub_multiple(const AmbientRing& R, const ModuleVector& a, const ModuleVector& b,
                          const Monomial& m, Coef c) {
  const PrimeField& F = R.field();
  Coef nc = F.neg(c);
  return ModuleVector(merge(R, a.terms(), 0, b.terms(), 0, [&](const VTerm& t) {
    return VTerm{t.mono * m, t.comp, F.mul(t.coef, nc)};
  }));
}

ModuleVector make_monic(const AmbientRing& R, const ModuleVector& a) {
  if (a.is_zero() || a.lead().coef == 1) return a;
  return scale(R, a, R.field().inv(a.lead().coef));
}

}  // namespace tensorcoh
