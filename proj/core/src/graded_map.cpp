#include "tensorcoh/graded_map.hpp"

#include <map>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

GradedMap::GradedMap(RingPtr ring, std::vector<int> source, std::vector<int> target,
                     std::vector<ModuleVector> columns)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.size()) throw StructuralError("column count differs from source rank");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    auto& c = columns_[i];
    for (const auto& t : c.terms())
      if (t.comp >= target_.size()) throw StructuralError("column entry outside the target module");
    c = ring_->normal_form(c);
    if (c.is_zero()) continue;
    if (!c.is_homogeneous(target_) || c.degree(target_) != source_[i])
      throw StructuralError("entries of column " + std::to_string(i) + " are not of the degree its twist requires");
  }
}

GradedMap GradedMap::from_entries(RingPtr ring, std::vector<int> source, std::vector<int> target,
                                  const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != target.size()) throw StructuralError("row count differs from target rank");
  const AmbientRing& S = ring->S();
  std::vector<std::vector<VTerm>> cols(source.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != source.size()) throw StructuralError("row length differs from source rank");
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      const Polynomial& f = rows[j][i];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || *f.degree() != source[i] - target[j])
        throw StructuralError("entry (" + std::to_string(j + 1) + ", " + std::to_string(i + 1) +
                              ") is not homogeneous of degree " + std::to_string(source[i] - target[j]));
      for (const auto& t : f.terms()) cols[i].push_back({t.mono, static_cast<std::uint32_t>(j), t.coef});
    }
  }
  std::vector<ModuleVector> columns;
  for (auto& c : cols) columns.push_back(ModuleVector::from_terms(S, std::move(c)));
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(columns));
}

GradedMap GradedMap::with_inferred_twists(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows,
                                          std::vector<int> target) {
  if (target.empty()) target.assign(rows.size(), 0);
  if (target.size() != rows.size()) throw StructuralError("target twists differ in length from the row count");
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::vector<int> source(ncols, 0);
  for (std::size_t i = 0; i < ncols; ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].size() != ncols) throw StructuralError("rows of different lengths");
      Polynomial f = ring->normal_form(rows[j][i]);
      if (f.is_zero()) continue;
      if (!f.is_homogeneous())
        throw StructuralError("entry (" + std::to_string(j + 1) + ", " + std::to_string(i + 1) + ") is not homogeneous");
      int d = *f.degree() + target[j];
      if (seen && d != source[i])
        throw StructuralError("column " + std::to_string(i + 1) + " has no consistent degree; give twists explicitly");
      source[i] = d;
      seen = true;
    }
  }
  return from_entries(std::move(ring), std::move(source), std::move(target), rows);
}

GradedMap GradedMap::identity(RingPtr ring, const std::vector<int>& twists) {
  std::vector<ModuleVector> cols;
  for (std::size_t j = 0; j < twists.size(); ++j) cols.push_back(ModuleVector::unit(static_cast<std::uint32_t>(j)));
  return GradedMap(std::move(ring), twists, twists, std::move(cols));
}

GradedMap GradedMap::zero(RingPtr ring, std::vector<int> source, std::vector<int> target) {
  std::vector<ModuleVector> cols(source.size());
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

Polynomial GradedMap::entry(std::size_t j, std::size_t i) const {
  return columns_.at(i).component(ring_->ambient(), static_cast<std::uint32_t>(j));
}

std::vector<std::vector<Polynomial>> GradedMap::entries() const {
  std::vector<std::vector<std::vector<Term>>> acc(nrows(), std::vector<std::vector<Term>>(ncols()));
  for (std::size_t i = 0; i < ncols(); ++i)
    for (const auto& t : columns_[i].terms()) acc[t.comp][i].push_back({t.mono, t.coef});
  std::vector<std::vector<Polynomial>> rows(nrows());
  for (std::size_t j = 0; j < nrows(); ++j)
    for (std::size_t i = 0; i < ncols(); ++i) rows[j].push_back(Polynomial(ring_->ambient(), std::move(acc[j][i])));
  return rows;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  require_same_ring(*ring_, *inner.ring_);
  if (inner.target_ != source_) throw StructuralError("composition of incompatible maps");
  const AmbientRing& S = ring_->S();
  std::vector<ModuleVector> cols;
  cols.reserve(inner.ncols());
  for (const auto& c : inner.columns_) {
    std::map<std::uint32_t, std::vector<Term>> parts;
    for (const auto& t : c.terms()) parts[t.comp].push_back({t.mono, t.coef});
    ModuleVector acc;
    for (auto& [j, terms] : parts) {
      for (const auto& t : terms) acc = add(S, acc, mul_term(S, columns_[j], t.mono, t.coef));
    }
    cols.push_back(std::move(acc));
  }
  return GradedMap(ring_, inner.source_, target_, std::move(cols));
}

GradedMap GradedMap::dual(int shift) const {
  std::vector<int> src, tgt;
  for (int t : target_) src.push_back(shift - t);
  for (int s : source_) tgt.push_back(shift - s);
  std::vector<std::vector<VTerm>> cols(nrows());
  for (std::size_t i = 0; i < ncols(); ++i)
    for (const auto& t : columns_[i].terms()) cols[t.comp].push_back({t.mono, static_cast<std::uint32_t>(i), t.coef});
  std::vector<ModuleVector> columns;
  for (auto& c : cols) columns.push_back(ModuleVector::from_terms(ring_->S(), std::move(c)));
  return GradedMap(ring_, std::move(src), std::move(tgt), std::move(columns));
}

bool GradedMap::is_zero() const {
  for (const auto& c : columns_)
    if (!c.is_zero()) return false;
  return true;
}

bool GradedMap::has_unit_entry() const {
  for (const auto& c : columns_)
    for (const auto& t : c.terms())
      if (t.mono.is_one()) return true;
  return false;
}

GradedMap GradedMap::over(RingPtr ring) const {
  if (!ring->ambient()->same_as(*ring_->ambient())) throw StructuralError("rings with different ambients");
  return GradedMap(std::move(ring), source_, target_, columns_);
}

std::string GradedMap::to_string() const {
  auto rows = entries();
  std::string s = "[";
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j) s += ", ";
    s += "[";
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      if (i) s += ", ";
      s += rows[j][i].to_string();
    }
    s += "]";
  }
  return s + "]";
}

GradedMap kronecker(const GradedMap& A, const GradedMap& B) {
  require_same_ring(*A.ring(), *B.ring());
  const AmbientRing& S = A.ring()->S();
  std::size_t b = B.nrows();
  std::vector<int> src, tgt;
  for (int s : A.source())
    for (int t : B.source()) src.push_back(s + t);
  for (int s : A.target())
    for (int t : B.target()) tgt.push_back(s + t);
  std::vector<ModuleVector> cols;
  for (const auto& ca : A.columns())
    for (const auto& cb : B.columns()) {
      std::vector<VTerm> terms;
      for (const auto& ta : ca.terms())
        for (const auto& tb : cb.terms())
          terms.push_back({ta.mono * tb.mono, static_cast<std::uint32_t>(ta.comp * b + tb.comp), S.field().mul(ta.coef, tb.coef)});
      cols.push_back(ModuleVector::from_terms(S, std::move(terms)));
    }
  return GradedMap(A.ring(), std::move(src), std::move(tgt), std::move(cols));
}

GradedMap concat_columns(const GradedMap& A, const GradedMap& B) {
  require_same_ring(*A.ring(), *B.ring());
  if (A.target() != B.target()) throw StructuralError("concatenating maps with different targets");
  std::vector<int> src = A.source();
  src.insert(src.end(), B.source().begin(), B.source().end());
  std::vector<ModuleVector> cols = A.columns();
  cols.insert(cols.end(), B.columns().begin(), B.columns().end());
  return GradedMap(A.ring(), std::move(src), A.target(), std::move(cols));
}

GradedMap direct_sum(const GradedMap& A, const GradedMap& B) {
  require_same_ring(*A.ring(), *B.ring());
  std::vector<int> src = A.source(), tgt = A.target();
  src.insert(src.end(), B.source().begin(), B.source().end());
  tgt.insert(tgt.end(), B.target().begin(), B.target().end());
  std::vector<ModuleVector> cols = A.columns();
  for (const auto& c : B.columns()) cols.push_back(c.shifted(static_cast<std::int64_t>(A.nrows())));
  return GradedMap(A.ring(), std::move(src), std::move(tgt), std::move(cols));
}

}  // namespace tensorcoh
