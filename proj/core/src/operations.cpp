#include "tensorcoh/operations.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

namespace {

std::vector<ModuleVector> units(std::size_t n) {
  std::vector<ModuleVector> v;
  for (std::size_t j = 0; j < n; ++j) v.push_back(ModuleVector::unit(static_cast<std::uint32_t>(j)));
  return v;
}

std::vector<VTerm> leads_of(const std::vector<ModuleVector>& b) {
  std::vector<VTerm> l;
  for (const auto& v : b) l.push_back(v.lead());
  return l;
}

void require_domain(const RingPtr& R, const char* what) {
  if (!R->is_domain())
    throw UnsupportedInput(std::string(what) + " needs a base ring certified as a domain");
}

}  // namespace

Ideal Ideal::maximal(const RingPtr& ring) {
  Ideal m{ring, {}};
  for (int v = 0; v < ring->nvars(); ++v) m.gens.push_back(Polynomial::variable(ring->ambient(), v));
  return m;
}

std::vector<Polynomial> Ideal::basis() const {
  std::vector<Polynomial> all = ring->ideal_basis();
  for (const auto& g : gens)
    if (!g.is_zero()) all.push_back(g);
  if (all.empty()) return {};
  return buchberger(all);
}

int Ideal::quotient_dim() const {
  std::vector<VTerm> leads;
  for (const auto& b : basis()) leads.push_back({b.leading().mono, 0, 1});
  return series_from_leads(ring->S(), {0}, leads).dim();
}

bool Ideal::is_unit() const {
  for (const auto& b : basis())
    if (b.leading().mono.is_one()) return true;
  return false;
}

bool Ideal::contains(const Polynomial& f) const { return reduce(f, basis()).is_zero(); }

ModulePtr free_module(const RingPtr& ring, std::vector<int> twists) {
  return GradedModule::free(ring, std::move(twists));
}

ModulePtr cyclic_module(const Ideal& J) {
  std::vector<int> src;
  std::vector<ModuleVector> cols;
  for (const auto& g : J.gens) {
    Polynomial f = J.ring->normal_form(g);
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw UnsupportedInput("inhomogeneous ideal generator");
    src.push_back(*f.degree());
    cols.push_back(ModuleVector::from_polynomial(f, 0));
  }
  return GradedModule::coker(GradedMap(J.ring, std::move(src), {0}, std::move(cols)))->minimal();
}

ModulePtr image_module(const GradedMap& phi) {
  SubQuotient q{phi.ring(), phi.target(), phi.columns(), {}};
  return q.present();
}

ModulePtr ideal_module(const Ideal& J) {
  std::vector<int> src;
  std::vector<ModuleVector> cols;
  for (const auto& g : J.gens) {
    Polynomial f = J.ring->normal_form(g);
    if (f.is_zero()) continue;
    src.push_back(*f.degree());
    cols.push_back(ModuleVector::from_polynomial(f, 0));
  }
  return image_module(GradedMap(J.ring, std::move(src), {0}, std::move(cols)));
}

ModulePtr twist(const ModulePtr& M, int k) {
  const GradedMap& P = M->presentation();
  std::vector<int> src = P.source(), tgt = P.target();
  for (auto& s : src) s -= k;
  for (auto& t : tgt) t -= k;
  ModulePtr out = GradedModule::coker(GradedMap(P.ring(), std::move(src), std::move(tgt), P.columns()));
  return M->is_minimal() ? out->minimal() : out;
}

ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N) {
  return GradedModule::coker(direct_sum(M->presentation(), N->presentation()))->minimal();
}

ModulePtr tensor(const ModulePtr& M, const ModulePtr& N) {
  require_same_ring(*M->ring(), *N->ring());
  const GradedMap& A = M->minimal()->presentation();
  const GradedMap& B = N->minimal()->presentation();
  const RingPtr& R = M->ring();
  GradedMap left = kronecker(A, GradedMap::identity(R, B.target()));
  GradedMap right = kronecker(GradedMap::identity(R, A.target()), B);
  return GradedModule::coker(concat_columns(left, right))->minimal();
}

ModulePtr tensor_power(const ModulePtr& M, int k) {
  if (k < 1) throw RangeError("tensor powers start at exponent 1");
  ModulePtr P = M->minimal();
  for (int i = 1; i < k; ++i) P = tensor(P, M);
  return P;
}

ModulePtr hom(const ModulePtr& M, const ModulePtr& N) {
  require_same_ring(*M->ring(), *N->ring());
  const RingPtr& R = M->ring();
  const GradedMap& A = M->minimal()->presentation();
  const GradedMap& B = N->minimal()->presentation();
  if (A.nrows() == 0 || B.nrows() == 0) return GradedModule::zero(R);
  GradedMap idG = GradedMap::identity(R, B.target());
  GradedMap At = A.dual();
  GradedMap phi = kronecker(At, idG);
  std::vector<int> neg_u;
  for (int u : A.source()) neg_u.push_back(-u);
  std::vector<int> neg_t;
  for (int t : A.target()) neg_t.push_back(-t);
  std::vector<ModuleVector> target_rels = kronecker(GradedMap::identity(R, neg_u), B).columns();
  std::vector<ModuleVector> K = At.ncols() == 0 || phi.nrows() == 0 ? units(phi.ncols()) : kernel_vectors(phi, target_rels);
  SubQuotient q{R, phi.source(), std::move(K), kronecker(GradedMap::identity(R, neg_t), B).columns()};
  return q.present();
}

ModulePtr dual(const ModulePtr& M) { return hom(M, free_module(M->ring(), {0})); }

Biduality eval_map(const ModulePtr& M) {
  const RingPtr& R = M->ring();
  require_domain(R, "the biduality map");
  ModulePtr Mm = M->minimal();
  const GradedMap& A = Mm->presentation();
  Biduality out;
  if (A.nrows() == 0) {
    out.bidual = Mm;
    out.kernel = SubQuotient{R, {}, {}, {}};
    out.cokernel = SubQuotient{R, {}, {}, {}};
    out.matrix = GradedMap::zero(R, {}, {});
    return out;
  }
  GradedMap At = A.dual();
  // generators of M* inside F0*
  std::vector<ModuleVector> Zc = At.ncols() == 0 ? units(At.source().size()) : kernel_vectors(At);
  std::vector<std::size_t> keep = minimal_subset(R, At.source(), Zc);
  std::vector<int> zdeg;
  std::vector<ModuleVector> zcols;
  for (std::size_t i : keep) {
    zdeg.push_back(Zc[i].degree(At.source()));
    zcols.push_back(Zc[i]);
  }
  GradedMap Z(R, zdeg, At.source(), zcols);
  GradedMap Zt = Z.dual();  // F0 -> G*
  out.matrix = Zt;
  std::vector<ModuleVector> kerZt = Zt.nrows() == 0 ? units(Zt.ncols()) : kernel_vectors(Zt);
  out.kernel = SubQuotient{R, A.target(), std::move(kerZt), A.columns()};
  if (Z.ncols() == 0) {
    out.bidual = GradedModule::zero(R);
    out.cokernel = SubQuotient{R, {}, {}, {}};
    return out;
  }
  GradedMap Y = syzygies(Z);
  GradedMap Yt = Y.dual();
  std::vector<ModuleVector> bid = Yt.nrows() == 0 ? units(Yt.ncols()) : kernel_vectors(Yt);
  out.bidual = SubQuotient{R, Yt.source(), bid, {}}.present();
  out.cokernel = SubQuotient{R, Yt.source(), std::move(bid), Zt.columns()};
  return out;
}

ModulePtr torsion(const ModulePtr& M) { return eval_map(M).kernel.present(); }

ModulePtr torsion_free_part(const ModulePtr& M) {
  Biduality b = eval_map(M);
  const GradedMap& A = M->minimal()->presentation();
  std::vector<ModuleVector> cols = A.columns();
  std::vector<int> src = A.source();
  for (const auto& g : b.kernel.gens) {
    cols.push_back(g);
    src.push_back(g.degree(A.target()));
  }
  return GradedModule::coker(GradedMap(M->ring(), std::move(src), A.target(), std::move(cols)))->minimal();
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr std::uint64_t kMinorWorkCap = 400000;

}  // namespace

std::vector<Polynomial> minors(const RingPtr& R, const std::vector<std::vector<Polynomial>>& rows, int k) {
  int g = static_cast<int>(rows.size());
  int p = g ? static_cast<int>(rows[0].size()) : 0;
  std::vector<Polynomial> out;
  if (k <= 0) {
    out.push_back(Polynomial::constant(R->ambient(), 1));
    return out;
  }
  if (k > p || k > g) return out;
  if (p > 31) throw UnsupportedInput("minors of a matrix with more than 31 columns");
  std::uint64_t work = 0;
  for (int t = 1; t <= k; ++t) work += binomial(p, t);
  work *= binomial(g, k);
  if (work > kMinorWorkCap) throw UnsupportedInput("too many minors");
  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int start) {
    if (static_cast<int>(chosen.size()) == k) {
      // layer t: determinants of rows chosen[0..t) against column subsets of size t
      std::map<std::uint32_t, Polynomial> layer;
      layer[0] = Polynomial::constant(R->ambient(), 1);
      for (int t = 0; t < k; ++t) {
        std::map<std::uint32_t, Polynomial> next;
        for (const auto& [mask, det] : layer) {
          if (det.is_zero()) continue;
          for (int c = 0; c < p; ++c) {
            if (mask & (1u << c)) continue;
            const Polynomial& a = rows[chosen[t]][c];
            if (a.is_zero()) continue;
            // position of c among the columns of mask | c, counted from the right end
            int after = __builtin_popcount(mask & ~((1u << (c + 1)) - 1));
            Polynomial term = R->normal_form(a * det);
            if (after % 2) term = -term;
            auto it = next.find(mask | (1u << c));
            if (it == next.end()) next.emplace(mask | (1u << c), term);
            else it->second = it->second + term;
          }
        }
        layer = std::move(next);
      }
      for (auto& [mask, det] : layer) {
        Polynomial d = R->normal_form(det);
        if (!d.is_zero()) out.push_back(d);
      }
      return;
    }
    for (int j = start; j < g; ++j) {
      chosen.push_back(j);
      pick(j + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return out;
}

Ideal fitting(const ModulePtr& M, int r) {
  const RingPtr& R = M->ring();
  ModulePtr Mm = M->minimal();
  const GradedMap& A = Mm->presentation();
  int g = static_cast<int>(A.nrows());
  Ideal out{R, {}};
  if (g - r > static_cast<int>(A.ncols()) && g - r > 0) return out;
  out.gens = minors(R, A.entries(), g - r);
  return out;
}

Ideal annihilator(const ModulePtr& M) {
  const RingPtr& R = M->ring();
  ModulePtr Mm = M->minimal();
  const GradedMap& A = Mm->presentation();
  std::size_t g = A.nrows();
  Ideal out{R, {}};
  if (g == 0) {
    out.gens.push_back(Polynomial::constant(R->ambient(), 1));
    return out;
  }
  std::vector<int> tgt;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < g; ++k) tgt.push_back(A.target()[k] - A.target()[j]);
  std::vector<VTerm> diag;
  for (std::size_t j = 0; j < g; ++j) diag.push_back({Monomial{}, static_cast<std::uint32_t>(j * g + j), 1});
  GradedMap D(R, {0}, tgt, {ModuleVector(std::move(diag))});
  std::vector<ModuleVector> rels;
  for (std::size_t j = 0; j < g; ++j)
    for (const auto& c : A.columns()) rels.push_back(c.shifted(static_cast<std::int64_t>(j * g)));
  for (const auto& v : kernel_vectors(D, rels)) out.gens.push_back(v.component(R->ambient(), 0));
  return out;
}

std::vector<ModuleVector> colon(const RingPtr& R, const std::vector<int>& twists, const std::vector<ModuleVector>& U,
                                const Ideal& a) {
  std::vector<Polynomial> as;
  for (const auto& f : a.gens) {
    Polynomial g = R->normal_form(f);
    if (!g.is_zero()) as.push_back(g);
  }
  if (as.empty() || twists.empty()) return units(twists.size());
  std::size_t r = twists.size();
  std::vector<int> tgt;
  for (const auto& f : as)
    for (int t : twists) tgt.push_back(t - *f.degree());
  std::vector<ModuleVector> cols;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<VTerm> terms;
    for (std::size_t i = 0; i < as.size(); ++i)
      for (const auto& t : as[i].terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(i * r + k), t.coef});
    cols.push_back(ModuleVector::from_terms(R->S(), std::move(terms)));
  }
  GradedMap D(R, twists, tgt, std::move(cols));
  std::vector<ModuleVector> rels;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (const auto& u : U) rels.push_back(u.shifted(static_cast<std::int64_t>(i * r)));
  return kernel_vectors(D, rels);
}

namespace {

std::vector<ModuleVector> saturate_vectors(const RingPtr& R, const std::vector<int>& twists,
                                           const std::vector<ModuleVector>& U, const Ideal& a) {
  std::vector<ModuleVector> V = U;
  HilbertSeries h = series_from_leads(R->S(), twists, leads_of(submodule_basis(R, twists, V)));
  while (true) {
    std::vector<ModuleVector> W = colon(R, twists, V, a);
    HilbertSeries hw = series_from_leads(R->S(), twists, leads_of(submodule_basis(R, twists, W)));
    if (hw == h) return V;
    V = std::move(W);
    h = hw;
  }
}

}  // namespace

SubQuotient saturate(const ModulePtr& M, const Ideal& a) {
  ModulePtr Mm = M->minimal();
  const GradedMap& A = Mm->presentation();
  const RingPtr& R = M->ring();
  std::vector<ModuleVector> V = saturate_vectors(R, A.target(), A.columns(), a);
  return SubQuotient{R, A.target(), std::move(V), A.columns()};
}

ModulePtr modulo_saturation(const ModulePtr& M, const Ideal& a) {
  SubQuotient s = saturate(M, a);
  std::vector<int> src;
  for (const auto& v : s.gens) src.push_back(v.degree(s.twists));
  return GradedModule::coker(GradedMap(s.ring, std::move(src), s.twists, s.gens))->minimal();
}

Ideal ideal_saturation(const Ideal& J, const Ideal& a) {
  std::vector<ModuleVector> U;
  for (const auto& g : J.gens) {
    Polynomial f = J.ring->normal_form(g);
    if (!f.is_zero()) U.push_back(ModuleVector::from_polynomial(f, 0));
  }
  Ideal out{J.ring, {}};
  for (const auto& v : saturate_vectors(J.ring, {0}, U, a)) out.gens.push_back(v.component(J.ring->ambient(), 0));
  return out;
}

FreeComplex koszul(const RingPtr& ring, const std::vector<Polynomial>& seq) {
  std::size_t s = seq.size();
  std::vector<int> deg;
  for (const auto& f : seq) {
    if (f.is_zero() || !f.is_homogeneous()) throw UnsupportedInput("Koszul complex needs nonzero homogeneous elements");
    deg.push_back(*f.degree());
  }
  std::vector<std::vector<std::vector<int>>> subsets(s + 1);
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<int> S;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (1u << i)) S.push_back(static_cast<int>(i));
    subsets[S.size()].push_back(S);
  }
  for (auto& level : subsets) std::sort(level.begin(), level.end());
  FreeComplex K;
  K.ring = ring;
  for (std::size_t i = 0; i <= s; ++i) {
    std::vector<int> tw;
    for (const auto& S : subsets[i]) {
      int d = 0;
      for (int v : S) d += deg[v];
      tw.push_back(d);
    }
    K.twists.push_back(tw);
  }
  for (std::size_t i = 1; i <= s; ++i) {
    std::map<std::vector<int>, std::uint32_t> index;
    for (std::size_t k = 0; k < subsets[i - 1].size(); ++k) index[subsets[i - 1][k]] = static_cast<std::uint32_t>(k);
    std::vector<ModuleVector> cols;
    for (const auto& S : subsets[i]) {
      std::vector<VTerm> terms;
      for (std::size_t t = 0; t < S.size(); ++t) {
        std::vector<int> rest = S;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        Polynomial f = t % 2 ? -seq[S[t]] : seq[S[t]];
        for (const auto& term : f.terms()) terms.push_back({term.mono, index[rest], term.coef});
      }
      cols.push_back(ModuleVector::from_terms(ring->S(), std::move(terms)));
    }
    K.maps.emplace_back(ring, K.twists[i], K.twists[i - 1], std::move(cols));
  }
  return K;
}

SubQuotient tensor_homology(const FreeComplex& C, std::size_t i, const ModulePtr& N) {
  const RingPtr& R = C.ring;
  const GradedMap& B = N->minimal()->presentation();
  std::vector<int> Fi = C.free_twists(i);
  GradedMap idG = GradedMap::identity(R, B.target());
  GradedMap here = kronecker(GradedMap::identity(R, Fi), B);
  SubQuotient q{R, here.target(), {}, here.columns()};
  if (q.twists.empty()) return q;
  if (i == 0 || i - 1 >= C.maps.size()) {
    q.gens = units(q.twists.size());
  } else {
    GradedMap out = kronecker(C.maps[i - 1], idG);
    std::vector<ModuleVector> rels = kronecker(GradedMap::identity(R, C.free_twists(i - 1)), B).columns();
    q.gens = kernel_vectors(out, rels);
  }
  if (i < C.maps.size()) {
    GradedMap in = kronecker(C.maps[i], idG);
    q.rels.insert(q.rels.end(), in.columns().begin(), in.columns().end());
  }
  return q;
}

SubQuotient hom_cohomology(const FreeComplex& C, std::size_t i, const ModulePtr& N) {
  const RingPtr& R = C.ring;
  const GradedMap& B = N->minimal()->presentation();
  auto negated = [](std::vector<int> t) {
    for (auto& x : t) x = -x;
    return t;
  };
  std::vector<int> Fi = negated(C.free_twists(i));
  GradedMap idG = GradedMap::identity(R, B.target());
  GradedMap here = kronecker(GradedMap::identity(R, Fi), B);
  SubQuotient q{R, here.target(), {}, here.columns()};
  if (q.twists.empty()) return q;
  if (i >= C.maps.size()) {
    q.gens = units(q.twists.size());
  } else {
    GradedMap out = kronecker(C.maps[i].dual(), idG);
    std::vector<ModuleVector> rels =
        kronecker(GradedMap::identity(R, negated(C.free_twists(i + 1))), B).columns();
    q.gens = out.nrows() == 0 ? units(q.twists.size()) : kernel_vectors(out, rels);
  }
  if (i >= 1 && i - 1 < C.maps.size()) {
    GradedMap in = kronecker(C.maps[i - 1].dual(), idG);
    q.rels.insert(q.rels.end(), in.columns().begin(), in.columns().end());
  }
  return q;
}

}  // namespace tensorcoh
