#include "tensorcoh/module.hpp"

#include <algorithm>
#include <climits>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

ModulePtr GradedModule::coker(GradedMap presentation) {
  return ModulePtr(new GradedModule(std::move(presentation)));
}

ModulePtr GradedModule::free(RingPtr ring, std::vector<int> twists) {
  auto* m = new GradedModule(GradedMap::zero(std::move(ring), {}, std::move(twists)));
  m->minimal_flag_ = true;
  return ModulePtr(m);
}

ModulePtr GradedModule::zero(RingPtr ring) { return free(std::move(ring), {}); }

void GradedModule::ensure_basis() const {
  if (basis_) return;
  basis_ = submodule_basis(ring(), twists(), pres_.columns());
  reducer_ = Reducer(ring()->ambient(), *basis_);
}

const std::vector<ModuleVector>& GradedModule::relation_basis() const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_basis();
  return *basis_;
}

const Reducer& GradedModule::relation_reducer() const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_basis();
  return reducer_;
}

const HilbertSeries& GradedModule::series() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!series_) {
    ensure_basis();
    std::vector<VTerm> leads;
    for (const auto& b : *basis_) leads.push_back(b.lead());
    series_ = series_from_leads(ring()->S(), twists(), leads);
  }
  return *series_;
}

ModulePtr GradedModule::minimal() const {
  if (minimal_flag_) return shared_from_this();
  std::lock_guard<std::mutex> lock(mu_);
  if (!minimal_) minimal_ = minimize(*this);
  return minimal_;
}

ModulePtr GradedModule::over_ambient() const {
  if (ring()->is_polynomial_ring()) return minimal();
  std::lock_guard<std::mutex> lock(mu_);
  if (!over_ambient_) {
    RingPtr S = ring()->ambient_ring();
    std::vector<int> src = pres_.source();
    std::vector<ModuleVector> cols = pres_.columns();
    for (std::uint32_t j = 0; j < twists().size(); ++j)
      for (const auto& g : ring()->ideal_minimal()) {
        cols.push_back(ModuleVector::from_polynomial(g, j));
        src.push_back(*g.degree() + twists()[j]);
      }
    over_ambient_ = minimize(*coker(GradedMap(S, std::move(src), twists(), std::move(cols))));
  }
  return over_ambient_;
}

std::shared_ptr<const Resolution> GradedModule::cached_resolution(bool ambient, int) const {
  std::lock_guard<std::mutex> lock(mu_);
  return ambient ? res_ambient_ : res_ring_;
}

void GradedModule::store_resolution(bool ambient, std::shared_ptr<const Resolution> r) const {
  std::lock_guard<std::mutex> lock(mu_);
  (ambient ? res_ambient_ : res_ring_) = std::move(r);
}

std::vector<ModuleVector> submodule_basis(const RingPtr& ring, const std::vector<int>& twists,
                                          const std::vector<ModuleVector>& vecs) {
  GroebnerProblem p;
  p.twists = twists;
  p.ideal = ring->ideal_basis();
  p.ideal_lo = 0;
  p.ideal_hi = static_cast<std::uint32_t>(twists.size());
  p.background = vecs;
  return groebner(ring->ambient(), p).basis;
}

std::vector<ModuleVector> kernel_vectors(const GradedMap& D, const std::vector<ModuleVector>& target_relations) {
  const RingPtr& ring = D.ring();
  const std::uint32_t r = static_cast<std::uint32_t>(D.nrows());
  const std::uint32_t m = static_cast<std::uint32_t>(D.ncols());
  if (m == 0) return {};
  GroebnerProblem p;
  p.twists = D.target();
  p.twists.insert(p.twists.end(), D.source().begin(), D.source().end());
  p.ideal = ring->ideal_basis();
  p.ideal_lo = 0;
  p.ideal_hi = r;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<VTerm> terms = D.columns()[i].terms();
    terms.push_back({Monomial{}, r + i, 1});
    p.background.push_back(ModuleVector(std::move(terms)));
  }
  for (const auto& rel : target_relations) p.background.push_back(rel);
  GroebnerResult g = groebner(ring->ambient(), p);
  std::vector<ModuleVector> out;
  for (const auto& b : g.basis) {
    if (b.lead().comp < r) continue;
    ModuleVector v = ring->normal_form(b.slice(r, r + m));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> minimal_subset(const RingPtr& ring, const std::vector<int>& twists,
                                        const std::vector<ModuleVector>& vecs,
                                        const std::vector<ModuleVector>& background) {
  GroebnerProblem p;
  p.twists = twists;
  p.ideal = ring->ideal_basis();
  p.ideal_lo = 0;
  p.ideal_hi = static_cast<std::uint32_t>(twists.size());
  p.background = background;
  p.tracked = vecs;
  p.reduce_tails = false;
  int top = INT_MIN;
  for (const auto& v : vecs)
    if (!v.is_zero()) top = std::max(top, v.degree(twists));
  if (top == INT_MIN) return {};
  p.degree_limit = top;
  return groebner(ring->ambient(), p).minimal;
}

GradedMap syzygies(const GradedMap& phi) {
  std::vector<ModuleVector> K = kernel_vectors(phi);
  std::vector<std::size_t> keep = minimal_subset(phi.ring(), phi.source(), K);
  std::vector<int> src;
  std::vector<ModuleVector> cols;
  for (std::size_t i : keep) {
    src.push_back(K[i].degree(phi.source()));
    cols.push_back(std::move(K[i]));
  }
  return GradedMap(phi.ring(), std::move(src), phi.source(), std::move(cols));
}

ModulePtr minimize(const GradedModule& M) {
  const RingPtr& ring = M.ring();
  const AmbientRing& S = ring->S();
  const PrimeField& F = S.field();
  std::vector<int> src, tgt = M.twists();
  std::vector<ModuleVector> cols;
  for (std::size_t i = 0; i < M.presentation().ncols(); ++i)
    if (!M.presentation().columns()[i].is_zero()) {
      src.push_back(M.presentation().source()[i]);
      cols.push_back(M.presentation().columns()[i]);
    }
  while (true) {
    std::uint32_t pj = UINT32_MAX;
    std::size_t pi = 0;
    Coef pc = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (const auto& t : cols[i].terms())
        if (t.mono.is_one() && t.comp < pj) {
          pj = t.comp;
          pi = i;
          pc = t.coef;
        }
    if (pj == UINT32_MAX) break;
    const ModuleVector pivot = cols[pi];
    Coef cinv = F.inv(pc);
    std::vector<int> nsrc;
    std::vector<ModuleVector> ncols;
    std::vector<std::int64_t> table(tgt.size());
    for (std::size_t k = 0; k < tgt.size(); ++k)
      table[k] = k < pj ? static_cast<std::int64_t>(k) : k == pj ? -1 : static_cast<std::int64_t>(k) - 1;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == pi) continue;
      ModuleVector c = cols[l];
      for (const auto& t : cols[l].terms())
        if (t.comp == pj) c = sub_multiple(S, c, pivot, t.mono, F.mul(t.coef, cinv));
      c = ring->normal_form(c.renumbered(S, table));
      if (c.is_zero()) continue;
      nsrc.push_back(src[l]);
      ncols.push_back(std::move(c));
    }
    tgt.erase(tgt.begin() + pj);
    src = std::move(nsrc);
    cols = std::move(ncols);
  }
  std::vector<std::size_t> keep = minimal_subset(ring, tgt, cols);
  std::vector<int> msrc;
  std::vector<ModuleVector> mcols;
  for (std::size_t i : keep) {
    msrc.push_back(src[i]);
    mcols.push_back(std::move(cols[i]));
  }
  auto* out = new GradedModule(GradedMap(ring, std::move(msrc), std::move(tgt), std::move(mcols)));
  out->minimal_flag_ = true;
  return ModulePtr(out);
}

namespace {

std::vector<ModuleVector> with_relations(const SubQuotient& q, bool include_gens) {
  std::vector<ModuleVector> v = q.rels;
  if (include_gens) v.insert(v.end(), q.gens.begin(), q.gens.end());
  return submodule_basis(q.ring, q.twists, v);
}

}  // namespace

HilbertSeries SubQuotient::series() const {
  const AmbientRing& S = ring->S();
  auto leads = [](const std::vector<ModuleVector>& b) {
    std::vector<VTerm> l;
    for (const auto& v : b) l.push_back(v.lead());
    return l;
  };
  HilbertSeries outer = series_from_leads(S, twists, leads(with_relations(*this, false)));
  HilbertSeries inner = series_from_leads(S, twists, leads(with_relations(*this, true)));
  return outer - inner;
}

bool SubQuotient::is_zero() const {
  Reducer red(ring->ambient(), with_relations(*this, false));
  for (const auto& g : gens)
    if (!red.reduce(g).is_zero()) return false;
  return true;
}

bool SubQuotient::killed_by_maximal_ideal() const {
  Reducer red(ring->ambient(), with_relations(*this, false));
  const AmbientRing& S = ring->S();
  for (const auto& g : gens)
    for (int v = 0; v < S.nvars(); ++v)
      if (!red.reduce(mul_term(S, g, S.variable(v), 1)).is_zero()) return false;
  return true;
}

ModulePtr SubQuotient::present() const {
  Reducer red(ring->ambient(), with_relations(*this, false));
  std::vector<ModuleVector> G;
  std::vector<int> degs;
  for (const auto& g : gens) {
    ModuleVector r = red.reduce(g);
    if (r.is_zero()) continue;
    degs.push_back(r.degree(twists));
    G.push_back(std::move(r));
  }
  if (G.empty()) return GradedModule::zero(ring);
  GradedMap D(ring, degs, twists, G);
  std::vector<ModuleVector> K = kernel_vectors(D, rels);
  std::vector<int> kd;
  for (const auto& k : K) kd.push_back(k.degree(degs));
  return GradedModule::coker(GradedMap(ring, std::move(kd), std::move(degs), std::move(K)))->minimal();
}

}  // namespace tensorcoh
