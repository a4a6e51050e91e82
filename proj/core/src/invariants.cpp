#include "tensorcoh/invariants.hpp"

#include <numeric>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

namespace {

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int sq_dim(const SubQuotient& E) { return E.series().dim(); }

void require_domain(const RingPtr& R, const char* what) {
  if (!R->is_domain()) throw UnsupportedInput(std::string(what) + " requires a certified domain");
}

// Leading coefficient of the numerator after removing every factor (1 - t); weight-independent.
std::int64_t reduced_at_one(const HilbertSeries& hs) {
  LaurentPolynomial p = hs.numerator();
  while (auto q = p.divide_one_minus(1)) p = *q;
  return p.at_one();
}

}  // namespace

const HilbertSeries& hilbert_series(const ModulePtr& M) { return M->series(); }

int dim(const ModulePtr& M) { return M->series().dim(); }

std::int64_t degree(const ModulePtr& M) { return M->series().degree(); }

Count length(const ModulePtr& M) {
  auto l = M->series().length();
  return l ? Count{*l, false} : Count::inf();
}

std::int64_t mu(const ModulePtr& M) { return static_cast<std::int64_t>(M->minimal()->num_generators()); }

std::int64_t rank(const ModulePtr& M) {
  const RingPtr& R = M->ring();
  require_domain(R, "rank");
  if (dim(M) < R->dim()) return 0;
  std::int64_t eM = reduced_at_one(M->series());
  std::int64_t eR = reduced_at_one(R->series());
  // with several weights the reduced numerators differ from the multiplicities by the same factor
  if (eR == 0 || eM % eR != 0) throw InternalConsistency("rank is not an integer");
  return eM / eR;
}

int pd_ambient(const ModulePtr& M) {
  if (M->is_zero()) throw UndefinedInput("projective dimension of the zero module");
  return ambient_resolution(M)->pd().value;
}

int depth(const ModulePtr& M) {
  if (M->is_zero()) throw UndefinedInput("depth of the zero module");
  return M->ring()->nvars() - pd_ambient(M);
}

Count grade(const Ideal& a, const ModulePtr& M) {
  const RingPtr& R = M->ring();
  require_same_ring(*R, *a.ring);
  if (M->is_zero()) return Count::inf();
  ModulePtr Mm = M->minimal();
  std::vector<int> src = Mm->presentation().source();
  std::vector<ModuleVector> cols = Mm->presentation().columns();
  for (std::uint32_t j = 0; j < Mm->twists().size(); ++j)
    for (const auto& f : a.gens) {
      Polynomial g = R->normal_form(f);
      if (g.is_zero()) continue;
      cols.push_back(ModuleVector::from_polynomial(g, j));
      src.push_back(*g.degree() + Mm->twists()[j]);
    }
  if (GradedModule::coker(GradedMap(R, std::move(src), Mm->twists(), std::move(cols)))->is_zero()) return Count::inf();
  int top = dim(M);
  auto res = resolve(cyclic_module(a), false, top + 1);
  for (int i = 0; i <= top; ++i)
    if (!hom_cohomology(res->complex, static_cast<std::size_t>(i), M).is_zero()) return {i, false};
  throw InternalConsistency("grade exceeds dim M");
}

Count h(const ModulePtr& M, int i) {
  if (i < 0) throw RangeError("negative local cohomology index");
  if (M->is_zero() || i > dim(M)) return {0, false};
  int n = M->ring()->nvars();
  SubQuotient E = ext_ambient(M, n - i);
  auto l = E.series().length();
  return l ? Count{*l, false} : Count::inf();
}

std::int64_t h0_sat(const ModulePtr& M) {
  auto l = saturate(M, Ideal::maximal(M->ring())).series().length();
  if (!l) throw InternalConsistency("H^0 has infinite length");
  return *l;
}

ModulePtr local_zeroth(const ModulePtr& M) { return saturate(M, Ideal::maximal(M->ring())).present(); }

std::int64_t hdeg(const ModulePtr& M) {
  if (M->is_zero()) return 0;
  int d = dim(M);
  if (d <= 0) return *M->series().length();
  int n = M->ring()->nvars();
  std::int64_t total = degree(M);
  for (int j = 1; j <= d; ++j) {
    SubQuotient E = ext_ambient(M, n - d + j);
    if (E.is_zero()) continue;
    total += choose(d - 1, j - 1) * hdeg(E.present());
  }
  return total;
}

bool is_cohen_macaulay(const RingPtr& R) { return depth(free_module(R, {0})) == R->dim(); }

ModulePtr canonical(const RingPtr& R) {
  if (!is_cohen_macaulay(R)) throw UnsupportedInput("canonical module requires a Cohen–Macaulay ring");
  int n = R->nvars();
  int sigma = std::accumulate(R->S().weights().begin(), R->S().weights().end(), 0);
  ModulePtr E = ext_ambient(free_module(R, {0}), n - R->dim(), sigma).present();
  return GradedModule::coker(E->presentation().over(R))->minimal();
}

std::int64_t type(const RingPtr& R) { return mu(canonical(R)); }

bool is_gorenstein(const RingPtr& R) { return type(R) == 1; }

Ideal jacobian_ideal(const RingPtr& R) {
  int n = R->nvars();
  int c = n - R->dim();
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& f : R->ideal_minimal()) {
    std::vector<Polynomial> row;
    for (int v = 0; v < n; ++v) row.push_back(f.derivative(v));
    rows.push_back(std::move(row));
  }
  return Ideal{R, minors(R, rows, c)};
}

bool is_free(const ModulePtr& M) { return M->minimal()->presentation().ncols() == 0; }

bool is_torsion_free(const ModulePtr& M) { return eval_map(M).kernel.is_zero(); }

bool is_reflexive(const ModulePtr& M) {
  Biduality b = eval_map(M);
  return b.kernel.is_zero() && b.cokernel.is_zero();
}

bool is_locally_free_off(const ModulePtr& M, const Ideal& a) {
  require_domain(M->ring(), "local freeness");
  Ideal F = fitting(M, static_cast<int>(rank(M)));
  if (F.is_unit()) return true;
  return ideal_saturation(F, a).is_unit();
}

bool is_locally_free_punctured(const ModulePtr& M) {
  require_domain(M->ring(), "local freeness");
  return fitting(M, static_cast<int>(rank(M))).quotient_dim() <= 0;
}

bool serre_Sr(const ModulePtr& M, int r) {
  if (r < 0) throw RangeError("negative Serre index");
  if (M->is_zero()) return true;
  int n = M->ring()->nvars();
  for (int i = n - dim(M) + 1; i <= n; ++i) {
    SubQuotient E = ext_ambient(M, i);
    if (E.is_zero()) continue;
    if (sq_dim(E) > n - i - r) return false;
  }
  return true;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "not applicable";
  }
}

Tri is_quasi_buchsbaum(const ModulePtr& M) {
  if (M->is_zero()) return Tri::yes;
  int n = M->ring()->nvars();
  std::vector<SubQuotient> exts;
  for (int i = 0; i < dim(M); ++i) {
    exts.push_back(ext_ambient(M, n - i));
    if (sq_dim(exts.back()) > 0) return Tri::not_applicable;
  }
  for (const auto& E : exts)
    if (!E.killed_by_maximal_ideal()) return Tri::no;
  return Tri::yes;
}

bool iso_candidate(const ModulePtr& M, const ModulePtr& N, int bound) {
  require_same_ring(*M->ring(), *N->ring());
  if (!(M->series() == N->series())) return false;
  return betti(M, false, bound).entries() == betti(N, false, bound).entries();
}

InvariantReport invariants(const ModulePtr& M, int serre_r) {
  InvariantReport rep;
  const RingPtr& R = M->ring();
  rep.dim = dim(M);
  rep.mu = mu(M);
  rep.length = length(M);
  bool standard = true;
  for (int w : R->S().weights()) standard = standard && w == 1;
  rep.deg = standard ? degree(M) : reduced_at_one(M->series());
  if (!M->is_zero()) {
    rep.pd = pd_ambient(M);
    rep.depth = R->nvars() - *rep.pd;
  }
  for (int i = 0; i <= R->dim(); ++i) rep.h.push_back(h(M, i));
  if (standard) rep.hdeg = hdeg(M);
  rep.is_free = is_free(M);
  if (R->is_domain()) {
    rep.rank = rank(M);
    Biduality b = eval_map(M);
    rep.torsion_free = b.kernel.is_zero();
    rep.reflexive = *rep.torsion_free && b.cokernel.is_zero();
    rep.locally_free_punctured = is_locally_free_punctured(M);
  }
  rep.serre_r = serre_r;
  rep.serre = serre_Sr(M, serre_r);
  rep.quasi_buchsbaum = is_quasi_buchsbaum(M);
  return rep;
}

}  // namespace tensorcoh
