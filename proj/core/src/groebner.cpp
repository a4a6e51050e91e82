#include "tensorcoh/groebner.hpp"

#include <algorithm>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

void DivisorIndex::add(const Monomial& lead, std::uint32_t comp, std::uint32_t idx) {
  std::uint32_t slot = any_component_ ? 0 : comp;
  if (lists_.size() <= slot) lists_.resize(slot + 1);
  lists_[slot].push_back({lead, idx});
}

std::int64_t DivisorIndex::find(const VTerm& t) const {
  std::uint32_t slot = any_component_ ? 0 : t.comp;
  if (slot >= lists_.size()) return -1;
  for (const auto& e : lists_[slot])
    if (e.lead.divides(t.mono)) return e.idx;
  return -1;
}

namespace {

/// f − c·m·g with g's components replaced by `comp` when comp_override is set.
std::vector<VTerm> subtract_scaled(const AmbientRing& R, const std::vector<VTerm>& f, std::size_t f0,
                                   const std::vector<VTerm>& g, std::size_t g0, const Monomial& m,
                                   Coef c, bool comp_override, std::uint32_t comp) {
  const PrimeField& F = R.field();
  Coef nc = F.neg(c);
  std::vector<VTerm> out;
  out.reserve(f.size() - f0 + g.size() - g0);
  std::size_t i = f0, j = g0;
  auto gt = [&](std::size_t k) {
    return VTerm{g[k].mono * m, comp_override ? comp : g[k].comp, F.mul(g[k].coef, nc)};
  };
  while (i < f.size() && j < g.size()) {
    VTerm b = gt(j);
    int s = compare_terms(R, f[i], b);
    if (s > 0) {
      out.push_back(f[i++]);
    } else if (s < 0) {
      out.push_back(b);
      ++j;
    } else {
      Coef v = F.add(f[i].coef, b.coef);
      if (v) out.push_back({f[i].mono, f[i].comp, v});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back(gt(j));
  return out;
}

template <typename Fetch>
ModuleVector reduce_impl(const AmbientRing& R, const ModuleVector& f, const DivisorIndex& index,
                         Fetch&& fetch, bool any_component, bool full) {
  const PrimeField& F = R.field();
  std::vector<VTerm> work = f.terms();
  std::vector<VTerm> done;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const VTerm t = work[pos];
    std::int64_t k = index.find(t);
    if (k < 0) {
      if (!full) {
        done.insert(done.end(), work.begin() + static_cast<std::ptrdiff_t>(pos), work.end());
        return ModuleVector(std::move(done));
      }
      done.push_back(t);
      ++pos;
      continue;
    }
    const ModuleVector& g = fetch(static_cast<std::size_t>(k));
    const VTerm& lg = g.lead();
    Coef c = lg.coef == 1 ? t.coef : F.mul(t.coef, F.inv(lg.coef));
    work = subtract_scaled(R, work, pos + 1, g.terms(), 1, t.mono / lg.mono, c, any_component, t.comp);
    pos = 0;
  }
  return ModuleVector(std::move(done));
}

}  // namespace

Reducer::Reducer(AmbientPtr ring, std::vector<ModuleVector> reducers, bool any_component)
    : ring_(std::move(ring)), reducers_(std::move(reducers)), index_(any_component),
      any_component_(any_component) {
  for (std::size_t i = 0; i < reducers_.size(); ++i) {
    if (reducers_[i].is_zero()) continue;
    const auto& l = reducers_[i].lead();
    index_.add(l.mono, l.comp, static_cast<std::uint32_t>(i));
  }
}

ModuleVector Reducer::reduce(const ModuleVector& f) const {
  if (reducers_.empty() || f.is_zero()) return f;
  return reduce_impl(*ring_, f, index_, [&](std::size_t k) -> const ModuleVector& { return reducers_[k]; },
                     any_component_, true);
}

ModuleVector Reducer::reduce_top(const ModuleVector& f) const {
  if (reducers_.empty() || f.is_zero()) return f;
  return reduce_impl(*ring_, f, index_, [&](std::size_t k) -> const ModuleVector& { return reducers_[k]; },
                     any_component_, false);
}

namespace {

struct Element {
  ModuleVector v;
  int degree;
  int group;  // elements sharing a nonzero group are known to have S-pairs reducing to zero
  bool single;
};

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  int degree;
};

class Engine {
 public:
  Engine(const AmbientPtr& ring, const GroebnerProblem& p) : ring_(ring), R_(*ring), p_(p) {}

  GroebnerResult run();

 private:
  struct Input {
    int degree;
    int kind;  // 0 ideal, 1 background, 2 tracked
    std::size_t index;
    int group;
    ModuleVector v;
  };

  ModuleVector reduce(const ModuleVector& f) const {
    return reduce_impl(R_, f, index_, [&](std::size_t k) -> const ModuleVector& { return elems_[k].v; },
                       false, true);
  }
  ModuleVector spoly(const Pair& pr) const;
  void insert(ModuleVector h, int group);
  bool pair_known(std::uint32_t i, std::uint32_t j) const {
    const Element& a = elems_[i];
    const Element& b = elems_[j];
    if (a.group && a.group == b.group) return true;
    return a.single && b.single && a.v.lead().mono.coprime(b.v.lead().mono);
  }

  const AmbientPtr& ring_;
  const AmbientRing& R_;
  const GroebnerProblem& p_;
  std::vector<Element> elems_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  DivisorIndex index_;
  std::vector<Pair> pairs_;
};

ModuleVector Engine::spoly(const Pair& pr) const {
  const ModuleVector& a = elems_[pr.i].v;
  const ModuleVector& b = elems_[pr.j].v;
  Monomial ma = pr.lcm / a.lead().mono;
  Monomial mb = pr.lcm / b.lead().mono;
  std::vector<VTerm> left;
  left.reserve(a.size());
  for (std::size_t k = 1; k < a.size(); ++k)
    left.push_back({a.terms()[k].mono * ma, a.terms()[k].comp, a.terms()[k].coef});
  return ModuleVector(subtract_scaled(R_, left, 0, b.terms(), 1, mb, 1, false, 0));
}

void Engine::insert(ModuleVector h, int group) {
  h = make_monic(R_, h);
  const std::uint32_t k = static_cast<std::uint32_t>(elems_.size());
  const std::uint32_t comp = h.lead().comp;
  const Monomial lead = h.lead().mono;
  const int twist = p_.twists[comp];
  elems_.push_back({std::move(h), 0, group, false});
  Element& e = elems_.back();
  e.degree = e.v.degree(p_.twists);
  e.single = e.v.single_component();
  if (by_comp_.size() <= comp) by_comp_.resize(comp + 1);

  struct Cand {
    std::uint32_t j;
    Monomial lcm;
    bool known;
  };
  std::vector<Cand> C;
  for (std::uint32_t j : by_comp_[comp]) C.push_back({j, R_.lcm(lead, elems_[j].v.lead().mono), pair_known(k, j)});

  std::vector<Cand> D;
  for (std::size_t a = 0; a < C.size(); ++a) {
    const Cand& pa = C[a];
    bool keep = pa.known;
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < C.size() && keep; ++b)
        if (C[b].lcm.divides(pa.lcm)) keep = false;
      for (std::size_t b = 0; b < D.size() && keep; ++b)
        if (D[b].lcm.divides(pa.lcm)) keep = false;
    }
    if (keep) D.push_back(pa);
  }

  std::vector<Pair> kept;
  kept.reserve(pairs_.size() + D.size());
  for (const Pair& pr : pairs_) {
    if (elems_[pr.i].v.lead().comp == comp && lead.divides(pr.lcm)) {
      Monomial li = R_.lcm(elems_[pr.i].v.lead().mono, lead);
      Monomial lj = R_.lcm(elems_[pr.j].v.lead().mono, lead);
      if (li != pr.lcm && lj != pr.lcm) continue;
    }
    kept.push_back(pr);
  }
  for (const Cand& c : D)
    if (!c.known) kept.push_back({c.j, k, c.lcm, c.lcm.degree + twist});
  pairs_ = std::move(kept);

  by_comp_[comp].push_back(k);
  index_.add(lead, comp, k);
}

GroebnerResult Engine::run() {
  GroebnerResult result;
  std::vector<Input> inputs;
  auto check = [&](const ModuleVector& v) {
    for (const auto& t : v.terms())
      if (t.comp >= p_.twists.size()) throw StructuralError("generator component outside the free module");
    if (!v.is_homogeneous(p_.twists))
      throw UnsupportedInput("inhomogeneous generator: the engine handles graded input only");
  };
  for (std::uint32_t j = p_.ideal_lo; j < p_.ideal_hi; ++j)
    for (const auto& f : p_.ideal) {
      if (f.is_zero()) continue;
      ModuleVector v = ModuleVector::from_polynomial(f, j);
      check(v);
      inputs.push_back({v.degree(p_.twists), 0, 0, static_cast<int>(j) + 1, std::move(v)});
    }
  for (std::size_t i = 0; i < p_.background.size(); ++i) {
    if (p_.background[i].is_zero()) continue;
    check(p_.background[i]);
    inputs.push_back({p_.background[i].degree(p_.twists), 1, i, 0, p_.background[i]});
  }
  for (std::size_t i = 0; i < p_.tracked.size(); ++i) {
    if (p_.tracked[i].is_zero()) continue;
    check(p_.tracked[i]);
    inputs.push_back({p_.tracked[i].degree(p_.twists), 2, i, 0, p_.tracked[i]});
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.kind < b.kind;
  });

  std::size_t next = 0;
  while (!pairs_.empty() || next < inputs.size()) {
    int D = INT_MAX;
    for (const Pair& pr : pairs_) D = std::min(D, pr.degree);
    if (next < inputs.size()) D = std::min(D, inputs[next].degree);
    if (D > p_.degree_limit) {
      result.truncated = true;
      break;
    }
    std::vector<Pair> now, later;
    for (const Pair& pr : pairs_) (pr.degree == D ? now : later).push_back(pr);
    pairs_ = std::move(later);
    std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) {
      return a.j != b.j ? a.j < b.j : a.i < b.i;
    });
    for (const Pair& pr : now) {
      ModuleVector h = reduce(spoly(pr));
      if (!h.is_zero()) insert(std::move(h), 0);
    }
    for (; next < inputs.size() && inputs[next].degree == D; ++next) {
      Input& in = inputs[next];
      ModuleVector h = reduce(in.v);
      if (h.is_zero()) continue;
      bool lead_kept = h.lead().comp == in.v.lead().comp && h.lead().mono == in.v.lead().mono;
      insert(std::move(h), lead_kept ? in.group : 0);
      if (in.kind == 2) result.minimal.push_back(in.index);
    }
  }

  std::vector<ModuleVector> basis;
  basis.reserve(elems_.size());
  for (auto& e : elems_) basis.push_back(std::move(e.v));
  if (p_.reduce_tails) {
    Reducer red(ring_, basis);
    for (auto& g : basis) {
      if (g.size() <= 1) continue;
      std::vector<VTerm> tail(g.terms().begin() + 1, g.terms().end());
      ModuleVector nt = red.reduce(ModuleVector(std::move(tail)));
      std::vector<VTerm> terms;
      terms.reserve(nt.size() + 1);
      terms.push_back(g.lead());
      terms.insert(terms.end(), nt.terms().begin(), nt.terms().end());
      g = ModuleVector(std::move(terms));
    }
  }
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < basis.size(); ++i) order.push_back({basis[i].degree(p_.twists), i});
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return compare_terms(R_, basis[a.second].lead(), basis[b.second].lead()) > 0;
  });
  result.basis.reserve(basis.size());
  for (const auto& o : order) result.basis.push_back(std::move(basis[o.second]));
  std::sort(result.minimal.begin(), result.minimal.end());
  return result;
}

void require_same_ring(const std::vector<Polynomial>& G, const AmbientPtr& ring) {
  for (const auto& g : G)
    if (!g.ring() || !g.ring()->same_as(*ring)) throw StructuralError("polynomials from different rings");
}

}  // namespace

GroebnerResult groebner(const AmbientPtr& ring, const GroebnerProblem& problem) {
  Engine e(ring, problem);
  return e.run();
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
  if (!f.ring()) throw StructuralError("polynomial without a ring");
  require_same_ring(G, f.ring());
  std::vector<ModuleVector> rs;
  for (const auto& g : G) rs.push_back(ModuleVector::from_polynomial(g, 0));
  Reducer red(f.ring(), std::move(rs));
  return red.reduce(ModuleVector::from_polynomial(f, 0)).component(f.ring(), 0);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw StructuralError("buchberger needs at least one generator");
  const AmbientPtr& ring = gens.front().ring();
  if (!ring) throw StructuralError("polynomial without a ring");
  require_same_ring(gens, ring);
  GroebnerProblem p;
  p.twists = {0};
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw UnsupportedInput("inhomogeneous generator " + g.to_string());
    p.background.push_back(ModuleVector::from_polynomial(g, 0));
  }
  GroebnerResult r = groebner(ring, p);
  std::vector<Polynomial> out;
  for (const auto& v : r.basis) out.push_back(v.component(ring, 0));
  return out;
}

}  // namespace tensorcoh
