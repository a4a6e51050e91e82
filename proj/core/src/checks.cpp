#include "tensorcoh/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::verified: return "verified";
    case HypothesisStatus::certified: return "certified";
    default: return "violated";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::hypotheses_violated: return "hypotheses-violated";
    default: return "undecidable";
  }
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::bound: return "bound";
    case CheckKind::vanishing: return "vanishing";
    case CheckKind::formula: return "formula";
    case CheckKind::freeness: return "freeness";
    case CheckKind::depth_sequence: return "depth-sequence";
    default: return "yoshida";
  }
}

bool CheckReport::hypotheses_hold() const {
  for (const auto& h : hypotheses)
    if (h.status == HypothesisStatus::violated) return false;
  return true;
}

const Quantity* CheckReport::find(const std::string& name) const {
  for (const auto* side : {&lhs, &rhs})
    for (const auto& q : *side)
      if (q.name == name) return &q;
  return nullptr;
}

namespace {

Count fin(std::int64_t v) { return {v, false}; }
Count flag(bool b) { return {b ? 1 : 0, false}; }

Count add(Count a, Count b) { return a.infinite || b.infinite ? Count::inf() : fin(a.value + b.value); }
Count mul(std::int64_t k, Count a) {
  if (k == 0) return fin(0);
  return a.infinite ? Count::inf() : fin(k * a.value);
}

// nullopt when both sides are infinite
std::optional<bool> leq(Count a, Count b) {
  if (b.infinite) return a.infinite ? std::nullopt : std::optional<bool>(true);
  if (a.infinite) return false;
  return a.value <= b.value;
}

std::optional<bool> less(Count a, Count b) {
  if (b.infinite) return a.infinite ? std::nullopt : std::optional<bool>(true);
  if (a.infinite) return false;
  return a.value < b.value;
}

std::optional<bool> all_of(std::initializer_list<std::optional<bool>> xs) {
  bool unknown = false;
  for (const auto& x : xs) {
    if (!x) unknown = true;
    else if (!*x) return false;
  }
  if (unknown) return std::nullopt;
  return true;
}

bool nonzero(Count c) { return c.infinite || c.value != 0; }

template <class F>
bool attempt(F&& f) {
  try {
    return f();
  } catch (const UnsupportedInput&) {
    return false;
  } catch (const UndefinedInput&) {
    return false;
  }
}

class Builder {
 public:
  Builder(std::string id, std::string relation) {
    rep_.id = std::move(id);
    rep_.relation = std::move(relation);
  }

  bool require(const std::string& name, bool ok) {
    rep_.hypotheses.push_back({name, ok ? HypothesisStatus::verified : HypothesisStatus::violated});
    return ok;
  }
  bool status(const std::string& name, HypothesisStatus s) {
    rep_.hypotheses.push_back({name, s});
    return s != HypothesisStatus::violated;
  }
  void lhs(const std::string& name, Count v) { rep_.lhs.push_back({name, v}); }
  void rhs(const std::string& name, Count v) { rep_.rhs.push_back({name, v}); }
  void note(std::string s) { rep_.notes.push_back(std::move(s)); }
  bool ok() const { return rep_.hypotheses_hold(); }

  CheckReport done(std::optional<bool> conclusion) {
    if (!rep_.hypotheses_hold()) rep_.verdict = Verdict::hypotheses_violated;
    else if (!conclusion) rep_.verdict = Verdict::undecidable;
    else rep_.verdict = *conclusion ? Verdict::holds : Verdict::fails;
    return std::move(rep_);
  }

 private:
  CheckReport rep_;
};

RingPtr ring_of(const CheckInput& in) {
  if (in.ring) return in.ring;
  if (in.M) return in.M->ring();
  throw UndefinedInput("check needs a ring or a module");
}

const ModulePtr& need(const ModulePtr& X, const char* what) {
  if (!X) throw UndefinedInput(std::string("check needs module ") + what);
  return X;
}

const Ideal& need_ideal(const CheckInput& in) {
  if (!in.a) throw UndefinedInput("check needs an ideal argument");
  return *in.a;
}

Ideal ideal_or_maximal(const CheckInput& in, const RingPtr& R) { return in.a ? *in.a : Ideal::maximal(R); }

bool is_primary_to_maximal(const Ideal& a) { return a.quotient_dim() <= 0; }

bool is_maximal_ideal(const Ideal& a) {
  if (a.is_unit()) return false;
  for (int v = 0; v < a.ring->nvars(); ++v)
    if (!a.contains(Polynomial::variable(a.ring->ambient(), v))) return false;
  return true;
}

HypothesisStatus domain_status(const RingPtr& R) {
  if (R->is_polynomial_ring()) return HypothesisStatus::verified;
  return R->certificates().domain ? HypothesisStatus::certified : HypothesisStatus::violated;
}

HypothesisStatus buchsbaum_status(const ModulePtr& X, bool certificate) {
  if (certificate) return HypothesisStatus::certified;
  if (X->is_zero()) return HypothesisStatus::verified;
  if (dim(X) <= 0 || depth(X) == dim(X)) return HypothesisStatus::verified;
  return HypothesisStatus::violated;
}

bool locally_free_punctured(const ModulePtr& X) {
  return attempt([&] { return is_locally_free_punctured(X); });
}

bool locally_free_off(const ModulePtr& X, const Ideal& a) {
  return attempt([&] { return is_locally_free_off(X, a); });
}

bool torsion_free(const ModulePtr& X) {
  return attempt([&] { return is_torsion_free(X); });
}

bool reflexive(const ModulePtr& X) {
  return attempt([&] { return is_reflexive(X); });
}

bool cm_ring(const RingPtr& R) { return is_cohen_macaulay(R); }

bool gorenstein_ring(const RingPtr& R) { return cm_ring(R) && type(R) == 1; }

int ring_depth(const RingPtr& R) { return depth(free_module(R, {0})); }

Count h0(const ModulePtr& X) { return h(X, 0); }

Count lengthc(const ModulePtr& X) { return length(X); }

std::int64_t beta(const ModulePtr& X, int i) { return betti(X, false, i + 1).total(i); }

// Σ_{j=0}^{p} β_j(M) h^{j+i}(N)
Count beta_h_sum(const ModulePtr& M, int p, const ModulePtr& N, int i) {
  Count total = fin(0);
  auto res = resolve(M, false, p + 1);
  for (int j = 0; j <= p; ++j) total = add(total, mul(res->rank(j), h(N, j + i)));
  return total;
}

ModulePtr power(const ModulePtr& M, int k) {
  if (k == 0) return free_module(M->ring(), {0});
  return tensor_power(M, k);
}

std::string h_name(int i, const std::string& of) { return "h" + std::to_string(i) + "(" + of + ")"; }

// H^r_a(X) = 0 decided through grade, or by duality when a is m-primary
std::optional<bool> local_cohomology_vanishes(const ModulePtr& X, const Ideal& a, int r) {
  if (is_primary_to_maximal(a)) return h(X, r) == fin(0);
  Count g = grade(a, X);
  if (g.infinite || g.value > r) return true;
  if (g.value == r) return false;
  return std::nullopt;
}

// ---------------------------------------------------------------- bounds

CheckReport lemma_0(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  Builder b("lemma-0", "<=");
  Count lm = lengthc(M);
  b.require("M has finite length", !lm.infinite);
  Count lhs = h0(tensor(M, N));
  Count rhs = mul(mu(N), lm);
  b.lhs("h0(M⊗N)", lhs);
  b.rhs("length(M)*mu(N)", rhs);
  return b.done(leq(lhs, rhs));
}

CheckReport lemma_red(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  Builder b("lemma-red", "<=");
  Ideal m = Ideal::maximal(M->ring());
  ModulePtr Mt = modulo_saturation(M, m);
  ModulePtr Nt = modulo_saturation(N, m);
  Count lhs = h0(tensor(M, N));
  std::int64_t muN = mu(N);
  Count first = add(mul(muN, h0(M)), h0(tensor(Mt, N)));
  Count second = add(add(mul(muN, h0(M)), mul(muN, h0(N))), h0(tensor(Mt, Nt)));
  b.lhs("h0(M⊗N)", lhs);
  b.rhs("h0(M)mu(N)+h0(M~⊗N)", first);
  b.rhs("h0(M)mu(N)+h0(N)mu(N)+h0(M~⊗N~)", second);
  return b.done(all_of({leq(lhs, first), leq(lhs, second)}));
}

CheckReport prop_vector(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("prop-vector", "<=");
  bool cm = cm_ring(R);
  b.require("R equidimensional", cm || R->is_domain());
  bool gcm = true;
  for (int i = 0; i < R->dim(); ++i) gcm = gcm && !h(free_module(R, {0}), i).infinite;
  b.require("R generalized Cohen-Macaulay", gcm);
  b.require("N locally free of constant rank on the punctured spectrum", locally_free_punctured(N));
  auto p = finite_pd(M);
  b.require("pd(M) < depth(R)", p && *p < ring_depth(R));
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  if (!p) return b.done(std::nullopt);
  Count rhs = beta_h_sum(M, *p, N, 0);
  b.rhs("sum_i beta_i(M)h^i(N)", rhs);
  return b.done(leq(lhs, rhs));
}

CheckReport prop_cvector(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("prop-cvector", "<=");
  b.require("R regular", is_regular(R));
  b.require("N locally free on the punctured spectrum", locally_free_punctured(N));
  int d = R->dim();
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  if (!b.ok()) return b.done(std::nullopt);
  std::int64_t hh = hdeg(M) * hdeg(N);
  int p = pd_ambient(M);
  Count rhs = p < d ? fin(d * hh) : fin((d + 1) * hh - 1);
  b.rhs(p < d ? "d*hdeg(M)hdeg(N)" : "(d+1)*hdeg(M)hdeg(N)-1", rhs);
  return b.done(leq(lhs, rhs));
}

CheckReport cor_1d(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("cor-1d", "<");
  int d = R->dim();
  b.require("R regular of dimension 1, 2 or 3", is_regular(R) && d >= 1 && d <= 3);
  if (d == 2) b.require("M torsion-free", torsion_free(M));
  if (d == 3) b.require("M reflexive", reflexive(M));
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  if (!b.ok()) return b.done(std::nullopt);
  Count rhs = fin((d + 1) * hdeg(M) * hdeg(N));
  b.rhs("(d+1)*hdeg(M)hdeg(N)", rhs);
  return b.done(less(lhs, rhs));
}

CheckReport cor_jac(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("cor-jac", "<=");
  b.status("R a domain", domain_status(R));
  b.require("dim R = 1", R->dim() == 1);
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  if (!b.ok()) return b.done(std::nullopt);
  Count lj = lengthc(cyclic_module(jacobian_ideal(R)));
  if (lj.infinite) {
    b.note("R/J has infinite length");
    return b.done(std::nullopt);
  }
  std::int64_t degR = degree(free_module(R, {0}));
  std::int64_t c = degR * lj.value;
  std::int64_t hh = hdeg(M) * hdeg(N);
  Count rhs = fin(hh * (2 + c) - rank(M) * rank(N) * c);
  Count rhs2 = fin((2 + c) * hh);
  b.rhs("hdeg(M)hdeg(N)(2+deg(R)l(R/J))-rank(M)rank(N)deg(R)l(R/J)", rhs);
  b.rhs("(2+deg(R)l(R/J))hdeg(M)hdeg(N)", rhs2);
  return b.done(all_of({leq(lhs, rhs), leq(lhs, rhs2)}));
}

CheckReport prop_v5(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("prop-v5", "<=");
  b.require("R Gorenstein", gorenstein_ring(R));
  b.require("R has an isolated singularity", has_isolated_singularity(R));
  b.require("M maximal Cohen-Macaulay", !M->is_zero() && depth(M) == R->dim());
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  ModulePtr D = transpose(dual(M));
  ModulePtr Nt = modulo_saturation(N, Ideal::maximal(R));
  Count c = mul(mu(M), h0(N));
  auto lt = tor(D, Nt, 2).series().length();
  Count t2 = add(c, lt ? fin(*lt) : Count::inf());
  Count rhs = add(c, mul(beta(Nt, 2), lengthc(D)));
  b.rhs("h0(N)mu(M)+length(Tor_2(D(M*),N~))", t2);
  b.rhs("h0(N)mu(M)+beta_2(N~)*length(D(M*))", rhs);
  return b.done(all_of({leq(lhs, t2), leq(lhs, rhs)}));
}

CheckReport prop_buchs(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("prop-buchs", "<");
  int d = R->dim();
  b.require("R Cohen-Macaulay of dimension > 1", cm_ring(R) && d > 1);
  auto p = finite_pd(M);
  b.require("M perfect of projective dimension 1", p && *p == 1 && dim(M) == d - 1);
  b.status("N Buchsbaum", buchsbaum_status(N, in.N_buchsbaum));
  b.require("dim N = dim R", dim(N) == d);
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  if (!b.ok()) return b.done(std::nullopt);
  std::int64_t hh = hdeg(M) * hdeg(N);
  Count three = fin(3 * hh);
  b.rhs("3*hdeg(M)hdeg(N)", three);
  std::optional<bool> ok = less(lhs, three);
  if (depth(N) > 0) {
    Count two = fin(2 * hh);
    b.rhs("2*hdeg(M)hdeg(N)", two);
    ok = all_of({ok, leq(lhs, two)});
  }
  return b.done(ok);
}

CheckReport fact_3ht(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("fact-3ht", "<");
  b.require("R regular of dimension 3", is_regular(R) && R->dim() == 3);
  b.require("M torsion-free", torsion_free(M));
  b.require("N torsion-free", torsion_free(N));
  Count lhs = h0(tensor(M, N));
  b.lhs("h0(M⊗N)", lhs);
  if (!b.ok()) return b.done(std::nullopt);
  Count rhs = fin(16 * hdeg(M) * hdeg(N));
  b.rhs("16*hdeg(M)hdeg(N)", rhs);
  if (!lhs.infinite && rhs.value > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "ratio %.6f", static_cast<double>(lhs.value) / static_cast<double>(rhs.value));
    b.note(buf);
  }
  return b.done(less(lhs, rhs));
}

CheckReport prop_vector2(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("prop-vector2", "<=");
  b.require("R Cohen-Macaulay", cm_ring(R));
  auto p = finite_pd(M);
  b.require("M perfect", p && dim(M) == R->dim() - *p);
  b.require("N locally free of constant rank on the punctured spectrum", locally_free_punctured(N));
  if (!p) return b.done(std::nullopt);
  ModulePtr X = tensor(M, N);
  std::optional<bool> ok = true;
  for (int i = 0; i < dim(M); ++i) {
    Count l = h(X, i);
    Count r = beta_h_sum(M, *p, N, i);
    b.lhs(h_name(i, "M⊗N"), l);
    b.rhs("sum_j beta_j(M)h^(j+" + std::to_string(i) + ")(N)", r);
    ok = all_of({ok, leq(l, r)});
  }
  return b.done(ok);
}

CheckReport vasc_81(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Builder b("vasc-81", "<=");
  int d = R->dim();
  b.require("R Gorenstein of dimension >= 1", d >= 1 && gorenstein_ring(R));
  ModulePtr Mm = M->minimal();
  const GradedMap& phi = Mm->presentation();
  int n = static_cast<int>(phi.ncols());
  auto p = finite_pd(M);
  b.require("0 -> R^n -> R^(n+d-1) -> M -> 0 exact", n >= 1 && p && *p == 1 &&
                                                          static_cast<int>(phi.nrows()) == n + d - 1);
  Ideal In{R, n >= 1 ? minors(R, phi.entries(), n) : std::vector<Polynomial>{}};
  b.require("I_n(phi) primary to the maximal ideal", n >= 1 && In.quotient_dim() <= 0);
  Count lhs = h0(tensor(M, M));
  b.lhs("h0(M⊗M)", lhs);
  if (!b.ok()) return b.done(std::nullopt);
  std::int64_t inner = (d - 1) * degree(M) + lengthc(cyclic_module(In)).value;
  Count rhs = fin(d * inner * inner);
  b.rhs("d((d-1)deg(M)+l(R/I_n))^2", rhs);
  return b.done(leq(lhs, rhs));
}

// ---------------------------------------------------------------- vanishing

CheckReport grade_vanishing(const std::string& id, const CheckInput& in, bool both_finite_pd) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Ideal a = ideal_or_maximal(in, R);
  Builder b(id, "=");
  auto pM = finite_pd(M);
  b.require("pd(M) finite", pM.has_value());
  if (both_finite_pd) b.require("pd(N) finite", finite_pd(N).has_value());
  b.require("M or N locally free off V(a)", locally_free_off(M, a) || locally_free_off(N, a));
  int d = both_finite_pd ? ring_depth(R) : R->dim();
  if (both_finite_pd) b.require("depth(R) > 0", d > 0);
  b.require("0 <= r < d", in.r >= 0 && in.r < d);
  Count gM = grade(a, M), gN = grade(a, N);
  Count sum = add(gM, gN);
  b.require("grade(a,M)+grade(a,N) >= d+r+1", sum.infinite || sum.value >= d + in.r + 1);
  ModulePtr X = tensor(M, N);
  std::optional<bool> ok;
  if (is_primary_to_maximal(a)) {
    ok = true;
    for (int i = 0; i <= std::max(in.r, 0); ++i) {
      Count v = h(X, i);
      b.lhs(h_name(i, "M⊗N"), v);
      b.rhs(h_name(i, "M⊗N"), fin(0));
      ok = *ok && v == fin(0);
    }
  } else {
    Count g = grade(a, X);
    b.lhs("grade(a,M⊗N)", g);
    b.rhs("r+1", fin(in.r + 1));
    ok = g.infinite || g.value >= in.r + 1;
  }
  b.note("grade(a,M) = " + gM.to_string() + ", grade(a,N) = " + gN.to_string());
  return b.done(ok);
}

CheckReport gor_ht2(const CheckInput& in) {
  RingPtr R = ring_of(in);
  const Ideal& I = need_ideal(in);
  Builder b("gor-ht2", "=");
  b.require("R regular of dimension > 2", is_regular(R) && R->dim() > 2);
  ModulePtr Im = ideal_module(I);
  b.require("I Gorenstein of height 2", mu(Im) == 2 && I.quotient_dim() == R->dim() - 2);
  Count v = h0(tensor(Im, Im));
  b.lhs("h0(I⊗I)", v);
  b.rhs("h0(I⊗I)", fin(0));
  return b.done(v == fin(0));
}

// ---------------------------------------------------------------- formulas

ModulePtr maximal_ideal_module(const RingPtr& R) { return ideal_module(Ideal::maximal(R)); }

ModulePtr residue_field(const RingPtr& R) { return cyclic_module(Ideal::maximal(R)); }

std::optional<bool> table(Builder& b, const std::vector<Count>& got, const std::vector<Count>& want,
                          const std::string& of) {
  bool ok = true;
  for (std::size_t i = 0; i < got.size(); ++i) {
    b.lhs(h_name(static_cast<int>(i), of), got[i]);
    b.rhs(h_name(static_cast<int>(i), of), want[i]);
    ok = ok && got[i] == want[i];
  }
  return ok;
}

CheckReport f_m2(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-m2", "=");
  b.require("R regular of dimension 2", is_regular(R) && R->dim() == 2);
  ModulePtr m = maximal_ideal_module(R);
  Count v = h0(tensor(m, m));
  b.lhs("h0(m⊗m)", v);
  b.rhs("h0(m⊗m)", fin(1));
  return b.done(v == fin(1));
}

CheckReport f_param(const CheckInput& in) {
  RingPtr R = ring_of(in);
  const Ideal& I = need_ideal(in);
  Builder b("f-param", "=");
  b.require("R Cohen-Macaulay of dimension 2", R->dim() == 2 && cm_ring(R));
  b.status("R a domain", domain_status(R));
  ModulePtr Im = ideal_module(I);
  b.require("I generated by a system of parameters", mu(Im) == 2 && I.quotient_dim() == 0);
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr X = tensor(Im, Im);
  ModulePtr RI = cyclic_module(I);
  Count l = lengthc(RI);
  Count hv = h0(X);
  Count tl = lengthc(torsion(X));
  Count hd = fin(hdeg(RI));
  b.lhs("h0(I⊗I)", hv);
  b.lhs("length(torsion(I⊗I))", tl);
  b.lhs("hdeg(R/I)", hd);
  b.rhs("length(R/I)", l);
  return b.done(hv == l && tl == l && hd == l);
}

CheckReport f_claim_a(const CheckInput& in) {
  RingPtr R = ring_of(in);
  const Ideal& I = need_ideal(in);
  Builder b("f-claimA", "=");
  int d = R->dim();
  b.require("R Cohen-Macaulay of dimension >= 2", d >= 2 && cm_ring(R));
  b.require("I primary to the maximal ideal", is_primary_to_maximal(I) && !I.is_unit());
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr Im = ideal_module(I);
  ModulePtr RI = cyclic_module(I);
  ModulePtr X = tensor(Im, maximal_ideal_module(R));
  std::vector<Count> got, want;
  for (int i = 0; i < d; ++i) got.push_back(h(X, i));
  want.push_back(fin(beta(RI, 2)));
  want.push_back(add(fin(mu(Im)), lengthc(RI)));
  for (int i = 2; i < d; ++i) want.push_back(fin(0));
  return b.done(table(b, got, want, "I⊗m"));
}

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CheckReport f_55i(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-55i", "=");
  int d = R->dim();
  b.require("R regular of dimension >= 2", is_regular(R) && d >= 2);
  ModulePtr m = maximal_ideal_module(R);
  ModulePtr M = in.M ? in.M : m;
  if (in.M) b.require("M is the maximal ideal up to isomorphism", iso_candidate(M, m, d + 1));
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr X = tensor(M, M);
  std::vector<Count> got, want;
  for (int i = 0; i < d; ++i) got.push_back(h(X, i));
  want.push_back(fin(choose(d, 2)));
  want.push_back(fin(d + 1));
  for (int i = 2; i < d; ++i) want.push_back(fin(0));
  return b.done(table(b, got, want, "M⊗M"));
}

CheckReport f_55ii(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-55ii", "=");
  int d = R->dim();
  b.require("R regular of dimension > 3", is_regular(R) && d > 3);
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr syz = syzygy_module(residue_field(R), d - 1);
  ModulePtr M = in.M ? in.M : syz;
  if (in.M) b.require("M is Syz_(d-1)(k) up to isomorphism", iso_candidate(M, syz, d + 1));
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr X = tensor(M, dual(M));
  std::vector<Count> got, want;
  for (int i = 0; i < d; ++i) got.push_back(h(X, i));
  for (int i = 0; i < d; ++i) want.push_back(fin(i == 1 ? 1 : (i == 2 || i == d - 1) ? d : 0));
  std::optional<bool> ok = table(b, got, want, "M⊗M*");
  Tri qb = is_quasi_buchsbaum(X);
  b.lhs("quasi-Buchsbaum(M⊗M*)", flag(qb == Tri::yes));
  b.rhs("quasi-Buchsbaum(M⊗M*)", flag(true));
  return b.done(*ok && qb == Tri::yes);
}

CheckReport f_54(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-54", "=");
  b.require("depth(R) >= 3", ring_depth(R) >= 3);
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr m = maximal_ideal_module(R);
  ModulePtr md = dual(m);
  ModulePtr X = tensor(m, md);
  Count mu_d = fin(mu(md));
  Count h2 = h(X, 2);
  b.lhs("mu(m*)", mu_d);
  b.rhs("mu(m*)", fin(1));
  b.lhs(h_name(2, "m⊗m*"), h2);
  b.rhs(h_name(2, "m⊗m*"), fin(0));
  bool ok = mu_d == fin(1) && h2 == fin(0);
  if (R->is_domain()) {
    bool tf = is_torsion_free(X);
    b.lhs("torsion-free(m⊗m*)", flag(tf));
    b.rhs("torsion-free(m⊗m*)", flag(true));
    ok = ok && tf;
  }
  return b.done(ok);
}

void isolated_gorenstein_hypotheses(Builder& b, const RingPtr& R) {
  bool cm = cm_ring(R);
  b.require("R Cohen-Macaulay of dimension > 1", cm && R->dim() > 1);
  b.require("R not Gorenstein", cm && type(R) != 1);
  b.require("R Gorenstein on the punctured spectrum", has_isolated_singularity(R));
}

CheckReport f_kan(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-kan", "iff");
  isolated_gorenstein_hypotheses(b, R);
  if (!b.ok()) return b.done(std::nullopt);
  int d = R->dim();
  ModulePtr w = canonical(R);
  ModulePtr X = tensor(w, dual(w));
  bool ok = true;
  for (int i = 0; i <= d; ++i) {
    Count v = h(X, i);
    bool expect = i <= 1 || i == d;
    b.lhs(h_name(i, "w⊗w*"), v);
    b.rhs(h_name(i, "w⊗w*") + " nonzero", flag(expect));
    ok = ok && nonzero(v) == expect;
  }
  return b.done(ok);
}

CheckReport f_tor1(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-tor1", ">");
  isolated_gorenstein_hypotheses(b, R);
  b.require("type(R) = 2", cm_ring(R) && type(R) == 2);
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr w = canonical(R);
  SubQuotient t = tor(w, w, 1);
  auto l = t.series().length();
  Count v = l ? fin(*l) : Count::inf();
  b.lhs("length(Tor_1(w,w))", v);
  b.rhs("length(Tor_1(w,w))", fin(0));
  return b.done(nonzero(v));
}

CheckReport f_tach(const CheckInput& in) {
  RingPtr R = ring_of(in);
  Builder b("f-tach", "iff");
  bool cm = cm_ring(R);
  b.require("R Cohen-Macaulay", cm);
  b.status("R a domain", domain_status(R));
  b.require("type(R) = 2", cm && type(R) == 2);
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr w = canonical(R);
  SubQuotient e = ext(w, free_module(R, {0}), 1);
  bool vanishes = e.is_zero();
  bool gor = type(R) == 1;
  b.lhs("Ext^1(w,R) = 0", flag(vanishes));
  b.rhs("R Gorenstein", flag(gor));
  return b.done(vanishes == gor);
}

CheckReport f_dualpair(const CheckInput& in) {
  const ModulePtr& A = need(in.M, "M");
  const ModulePtr& B = need(in.N, "N");
  const RingPtr& R = A->ring();
  Builder b("f-dualpair", "=");
  int d = R->dim();
  b.require("R regular of dimension >= 3", is_regular(R) && d >= 3);
  b.require("M locally free on the punctured spectrum", locally_free_punctured(A));
  b.require("N locally free on the punctured spectrum", locally_free_punctured(B));
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr X = tensor(A, B);
  ModulePtr Y = tensor(dual(A), dual(B));
  bool ok = true;
  for (int j = 2; j <= d - 1; ++j) {
    Count l = h(X, j), r = h(Y, d + 1 - j);
    b.lhs(h_name(j, "M⊗N"), l);
    b.rhs(h_name(d + 1 - j, "M*⊗N*"), r);
    ok = ok && l == r;
  }
  return b.done(ok);
}

CheckReport f_bv(const CheckInput& in) {
  const ModulePtr& L = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  Builder b("f-bv", "=");
  b.require("M locally free on the punctured spectrum", locally_free_punctured(L));
  int dN = N->is_zero() ? 0 : depth(N);
  b.require("depth(N) >= 3", dN >= 3);
  if (!b.ok()) return b.done(std::nullopt);
  ModulePtr X = tensor(N, dual(L));
  bool ok = true;
  for (int i = 1; i <= dN - 2; ++i) {
    auto el = ext(L, N, i).series().length();
    Count l = el ? fin(*el) : Count::inf();
    Count r = h(X, i + 1);
    b.lhs("length(Ext^" + std::to_string(i) + "(M,N))", l);
    b.rhs(h_name(i + 1, "N⊗M*"), r);
    ok = ok && l == r;
  }
  return b.done(ok);
}

// ---------------------------------------------------------------- freeness

CheckReport implication(Builder& b, const std::string& premise_name, bool premise, bool free_flag) {
  b.lhs(premise_name, flag(premise));
  b.rhs("M free", flag(free_flag));
  return b.done(!premise || free_flag);
}

CheckReport free_2au(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Builder b("free-2au", "iff");
  b.require("R regular of dimension 2", is_regular(R) && R->dim() == 2);
  b.require("M nonzero and torsion-free", !M->is_zero() && torsion_free(M));
  Count v = h0(tensor(M, M));
  bool fr = is_free(M);
  b.lhs("h0(M⊗M)", v);
  b.rhs("M free", flag(fr));
  return b.done((v == fin(0)) == fr);
}

CheckReport free_t2(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Builder b("free-t2", "implies");
  b.require("depth(R) = 2", ring_depth(R) == 2);
  b.require("M torsion-free", torsion_free(M));
  b.require("pd(M) finite", finite_pd(M).has_value());
  bool premise = b.ok() && torsion_free(tensor(M, M));
  return implication(b, "M⊗M torsion-free", premise, is_free(M));
}

CheckReport free_t3(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Builder b("free-t3", "implies");
  b.require("R Cohen-Macaulay of dimension 3", R->dim() == 3 && cm_ring(R));
  b.require("M reflexive", reflexive(M));
  b.require("pd(M) finite", finite_pd(M).has_value());
  bool premise = b.ok() && torsion_free(power(M, 3));
  return implication(b, "M⊗M⊗M torsion-free", premise, is_free(M));
}

CheckReport free_hyp2(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Builder b("free-hyp2", "implies");
  b.require("R a hypersurface of dimension 2", is_hypersurface(R) && R->dim() == 2);
  b.status("R normal", R->is_polynomial_ring() ? HypothesisStatus::verified
                       : R->certificates().normal ? HypothesisStatus::certified
                                                  : HypothesisStatus::violated);
  bool premise = b.ok() && torsion_free(tensor(M, M));
  return implication(b, "M⊗M torsion-free", premise, is_free(M));
}

CheckReport free_518(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Ideal a = ideal_or_maximal(in, R);
  Builder b("free-518", "implies");
  int d = R->dim();
  b.require("R regular", is_regular(R));
  b.require("0 <= r <= dim R", in.r >= 0 && in.r <= d);
  b.require("M locally free off V(a)", locally_free_off(M, a));
  b.require("M satisfies (S_r)", in.r >= 0 && serre_Sr(M, in.r));
  bool fr = is_free(M);
  if (!b.ok()) return implication(b, "H^r_a(M^(d-r)) = 0", false, fr);
  auto v = local_cohomology_vanishes(power(M, d - in.r), a, in.r);
  if (!v) {
    b.note("grade(a, M^(d-r)) < r leaves H^r_a undetermined");
    b.rhs("M free", flag(fr));
    return b.done(std::nullopt);
  }
  return implication(b, "H^r_a(M^(d-r)) = 0", *v, fr);
}

CheckReport free_laun(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Ideal a = ideal_or_maximal(in, R);
  Builder b("free-laun", "implies");
  Count g = grade(a, M);
  b.require("grade(a,M) > 0", g.infinite || g.value > 0);
  b.require("M locally free off V(a)", locally_free_off(M, a));
  bool premise = false;
  if (b.ok()) {
    Count gx = grade(a, tensor(M, dual(M)));
    premise = gx.infinite || gx.value >= 2;
  }
  return implication(b, "H^0_a(M⊗M*) = H^1_a(M⊗M*) = 0", premise, is_free(M));
}

CheckReport free_sph1(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Ideal a = ideal_or_maximal(in, R);
  Builder b("free-sph1", "implies");
  b.require("pd(M) finite", finite_pd(M).has_value());
  b.require("M locally free off V(a)", locally_free_off(M, a));
  Count s = add(grade(a, M), grade(a, dual(M)));
  bool premise = s.infinite || s.value >= R->dim() + 2;
  return implication(b, "grade(a,M)+grade(a,M*) >= dim R + 2", premise, is_free(M));
}

CheckReport sph_equiv(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const RingPtr& R = M->ring();
  Builder b("sph-equiv", "iff");
  b.require("R a hypersurface", is_hypersurface(R));
  b.require("M torsion-free of constant rank", torsion_free(M));
  auto p = finite_pd(M);
  b.require("pd(M) finite and positive", p && *p >= 1);
  b.require("M locally free on the punctured spectrum", locally_free_punctured(M));
  ModulePtr Md = dual(M);
  bool i = depth(M) + depth(Md) == R->dim() + 1;
  bool ii = torsion_free(tensor(M, Md));
  bool iii = p.has_value();
  ModulePtr Rm = free_module(R, {0});
  for (int k = 1; iii && k < *p; ++k) iii = ext(M, Rm, k).is_zero();
  b.lhs("depth(M)+depth(M*) = dim R + 1", flag(i));
  b.lhs("M⊗M* torsion-free", flag(ii));
  b.lhs("M spherical", flag(iii));
  return b.done(i == ii && ii == iii);
}

CheckReport refl_516(const CheckInput& in) {
  const ModulePtr& M = need(in.M, "M");
  const ModulePtr& N = need(in.N, "N");
  const RingPtr& R = M->ring();
  Builder b("refl-516", "implies");
  b.require("R a hypersurface", is_hypersurface(R));
  b.status("M and N of constant rank", domain_status(R));
  b.require("pd(M) and pd(N) finite", finite_pd(M) && finite_pd(N));
  b.require("M and N locally free on the punctured spectrum", locally_free_punctured(M) && locally_free_punctured(N));
  bool premise = b.ok() && torsion_free(tensor(M, N));
  bool concl = reflexive(M) || reflexive(N);
  b.lhs("M⊗N torsion-free", flag(premise));
  b.rhs("M or N reflexive", flag(concl));
  return b.done(!premise || concl);
}

// ---------------------------------------------------------------- registry

using Runner = std::function<CheckReport(const CheckInput&)>;

struct Entry {
  CheckInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"lemma-0", CheckKind::bound, "h0(M⊗N) <= length(M) mu(N)", "M of finite length", "M N"}, lemma_0},
      {{"lemma-red", CheckKind::bound,
        "h0(M⊗N) <= h0(M)mu(N) + h0(M~⊗N) <= h0(M)mu(N) + h0(N)mu(N) + h0(M~⊗N~), X~ = X/H0(X)", "none", "M N"},
       lemma_red},
      {{"prop-vector", CheckKind::bound, "h0(M⊗N) <= sum_i beta_i(M) h^i(N)",
        "R equidimensional and generalized Cohen-Macaulay; N locally free of constant rank off m; pd(M) < depth(R)",
        "M N"},
       prop_vector},
      {{"prop-cvector", CheckKind::bound,
        "h0(M⊗N) <= d hdeg(M)hdeg(N) if pd(M) < d, else (d+1)hdeg(M)hdeg(N) - 1",
        "R regular of dimension d; N locally free off m", "M N"},
       prop_cvector},
      {{"cor-1d", CheckKind::bound, "h0(M⊗N) < (d+1) hdeg(M)hdeg(N)",
        "R regular with d = 1, or d = 2 and M torsion-free, or d = 3 and M reflexive", "M N"},
       cor_1d},
      {{"cor-jac", CheckKind::bound,
        "h0(M⊗N) <= hdeg(M)hdeg(N)(2+deg(R)l(R/J)) - rank(M)rank(N)deg(R)l(R/J), J the Jacobian ideal",
        "R a one-dimensional domain", "M N"},
       cor_jac},
      {{"prop-v5", CheckKind::bound, "h0(M⊗N) <= h0(N)mu(M) + beta_2(N~) length(D(M*)), N~ = N/H0(N)",
        "R Gorenstein with an isolated singularity; M maximal Cohen-Macaulay", "M N"},
       prop_v5},
      {{"prop-buchs", CheckKind::bound,
        "h0(M⊗N) < 3 hdeg(M)hdeg(N), and <= 2 hdeg(M)hdeg(N) when depth(N) > 0",
        "R Cohen-Macaulay of dimension d > 1; M perfect with pd 1; N Buchsbaum of dimension d", "M N"},
       prop_buchs},
      {{"fact-3ht", CheckKind::bound, "h0(M⊗N) < 16 hdeg(M)hdeg(N)",
        "R regular of dimension 3; M and N torsion-free", "M N"},
       fact_3ht},
      {{"prop-vector2", CheckKind::bound, "h^i(M⊗N) <= sum_j beta_j(M) h^(j+i)(N) for i < dim M",
        "R Cohen-Macaulay; M perfect; N locally free of constant rank off m", "M N"},
       prop_vector2},
      {{"vasc-81", CheckKind::bound, "h0(M⊗M) <= d((d-1)deg(M) + l(R/I_n(phi)))^2",
        "R Gorenstein of dimension d >= 1; 0 -> R^n -> R^(n+d-1) -> M -> 0 with I_n(phi) m-primary", "M"},
       vasc_81},
      {{"g-vanish", CheckKind::vanishing, "H^0_a(M⊗N) = ... = H^r_a(M⊗N) = 0",
        "pd(M) finite; M or N locally free off V(a); 0 <= r < dim R; grade(a,M)+grade(a,N) >= dim R + r + 1",
        "M N [a] r"},
       [](const CheckInput& in) { return grade_vanishing("g-vanish", in, false); }},
      {{"gc-vanish", CheckKind::vanishing, "H^0_a(M⊗N) = ... = H^r_a(M⊗N) = 0",
        "pd(M), pd(N) finite; M or N locally free off V(a); d = depth(R) > 0; 0 <= r < d; "
        "grade(a,M)+grade(a,N) >= d + r + 1",
        "M N [a] r"},
       [](const CheckInput& in) { return grade_vanishing("gc-vanish", in, true); }},
      {{"gor-ht2", CheckKind::vanishing, "h0(I⊗I) = 0",
        "R regular of dimension > 2; I Gorenstein of height 2", "ideal I"},
       gor_ht2},
      {{"f-m2", CheckKind::formula, "h0(m⊗m) = 1", "R regular of dimension 2", "ring"}, f_m2},
      {{"f-param", CheckKind::formula, "h0(I⊗I) = length(torsion(I⊗I)) = hdeg(R/I) = length(R/I)",
        "R a two-dimensional Cohen-Macaulay domain; I generated by a system of parameters", "ideal I"},
       f_param},
      {{"f-claimA", CheckKind::formula,
        "h0(I⊗m) = beta_2(R/I), h1(I⊗m) = mu(I) + length(R/I), h^i(I⊗m) = 0 for 2 <= i < dim R",
        "R Cohen-Macaulay of dimension >= 2; I m-primary", "ideal I"},
       f_claim_a},
      {{"f-55i", CheckKind::formula, "h^i(m⊗m) = (C(d,2), d+1, 0, ..., 0) for i < d",
        "R regular of dimension d >= 2", "ring [M]"},
       f_55i},
      {{"f-55ii", CheckKind::formula,
        "for M = Syz_(d-1)(k): h^i(M⊗M*) = 0, 1, d, 0, ..., 0, d for i < d and M⊗M* is quasi-Buchsbaum",
        "R regular of dimension d > 3", "ring [M]"},
       f_55ii},
      {{"f-54", CheckKind::formula, "mu(m*) = 1, h2(m⊗m*) = 0 and m⊗m* torsion-free", "depth(R) >= 3", "ring"},
       f_54},
      {{"f-kan", CheckKind::formula, "h^i(w⊗w*) != 0 exactly for i <= 1 and i = d",
        "R Cohen-Macaulay of dimension d > 1, not Gorenstein, Gorenstein off m", "ring"},
       f_kan},
      {{"f-tor1", CheckKind::formula, "Tor_1(w,w) != 0",
        "R Cohen-Macaulay of dimension > 1 and type 2, Gorenstein off m", "ring"},
       f_tor1},
      {{"f-tach", CheckKind::formula, "Ext^1(w,R) = 0 iff R Gorenstein", "R a Cohen-Macaulay domain of type 2",
        "ring"},
       f_tach},
      {{"f-dualpair", CheckKind::formula, "h^j(M⊗N) = h^(d+1-j)(M*⊗N*) for 2 <= j <= d-1",
        "R regular of dimension d >= 3; M and N locally free off m", "M N"},
       f_dualpair},
      {{"f-bv", CheckKind::formula, "length(Ext^i(M,N)) = h^(i+1)(N⊗M*) for 1 <= i <= depth(N) - 2",
        "M locally free off m; depth(N) >= 3", "M N"},
       f_bv},
      {{"free-2au", CheckKind::freeness, "h0(M⊗M) = 0 iff M free",
        "R regular of dimension 2; M nonzero and torsion-free", "M"},
       free_2au},
      {{"free-t2", CheckKind::freeness, "M⊗M torsion-free implies M free",
        "depth(R) = 2; M torsion-free; pd(M) finite", "M"},
       free_t2},
      {{"free-t3", CheckKind::freeness, "M⊗M⊗M torsion-free implies M free",
        "R Cohen-Macaulay of dimension 3; M reflexive; pd(M) finite", "M"},
       free_t3},
      {{"free-hyp2", CheckKind::freeness, "M⊗M torsion-free implies M free",
        "R a normal hypersurface of dimension 2", "M"},
       free_hyp2},
      {{"free-518", CheckKind::freeness, "H^r_a(M^(d-r)) = 0 implies M free",
        "R regular of dimension d; M locally free off V(a); M satisfies (S_r)", "M [a] r"},
       free_518},
      {{"free-laun", CheckKind::freeness, "H^0_a(M⊗M*) = H^1_a(M⊗M*) = 0 implies M free",
        "grade(a,M) > 0; M locally free off V(a)", "M [a]"},
       free_laun},
      {{"free-sph1", CheckKind::freeness, "grade(a,M) + grade(a,M*) >= dim R + 2 implies M free",
        "pd(M) finite; M locally free off V(a)", "M [a]"},
       free_sph1},
      {{"sph-equiv", CheckKind::freeness,
        "depth(M)+depth(M*) = dim R + 1 iff M⊗M* torsion-free iff Ext^i(M,R) = 0 for 0 < i < pd(M)",
        "R a hypersurface; M torsion-free of constant rank, locally free off m, 0 < pd(M) < infinity", "M"},
       sph_equiv},
      {{"refl-516", CheckKind::freeness, "M⊗N torsion-free implies M or N reflexive",
        "R a hypersurface; M, N of constant rank, finite pd, locally free off m", "M N"},
       refl_516},
  };
  return table;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw UndefinedInput("unknown check id '" + id + "'");
}

std::vector<CheckInfo> infos() {
  std::vector<CheckInfo> out;
  for (const auto& e : entries()) out.push_back(e.info);
  out.push_back({"depthseq", CheckKind::depth_sequence,
                 "depth(M^(⊗i)) for i = 1..n against the closed forms that apply",
                 "per rule: M locally free off m with pd 1 or pd p; parameter quotients; the maximal ideal; "
                 "m-primary ideals over hypersurfaces",
                 "M n [a]"});
  out.push_back({"yoshida", CheckKind::yoshida, "h^i(M⊗N) compared with sum_j beta_j(M) h^(j+i)(N) for i < dim M",
                 "R Cohen-Macaulay; M perfect; N Buchsbaum of maximal dimension", "M N"});
  return out;
}

CheckReport timed(const std::string& id, const std::function<CheckReport()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  try {
    rep = f();
  } catch (const UnsupportedInput& e) {
    rep = CheckReport{};
    rep.id = id;
    rep.verdict = Verdict::undecidable;
    rep.notes.push_back(e.what());
  }
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CheckReport run_kind(const std::string& id, CheckKind kind, const CheckInput& in) {
  const Entry& e = entry(id);
  if (e.info.kind != kind) throw UndefinedInput("'" + id + "' is a " + to_string(e.info.kind) + " check");
  return timed(id, [&] { return e.run(in); });
}

}  // namespace

bool is_regular(const RingPtr& R) {
  if (R->is_polynomial_ring()) return true;
  for (int w : R->S().weights())
    if (w != 1) return false;
  for (const auto& g : R->ideal_minimal())
    if (*g.degree() != 1) return false;
  return true;
}

bool is_hypersurface(const RingPtr& R) { return R->ideal_minimal().size() <= 1; }

bool has_isolated_singularity(const RingPtr& R) {
  if (is_regular(R)) return true;
  try {
    return jacobian_ideal(R).quotient_dim() <= 0;
  } catch (const UnsupportedInput&) {
    return R->certificates().isolated_singularity;
  }
}

std::optional<int> finite_pd(const ModulePtr& M) {
  const RingPtr& R = M->ring();
  if (M->is_zero()) return 0;
  int bound = (is_regular(R) ? R->nvars() : ring_depth(R)) + 1;
  auto res = resolve(M, false, bound);
  if (!res->terminated) return std::nullopt;
  return res->pd().value;
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> all = infos();
  return all;
}

const CheckInfo& check_info(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UndefinedInput("unknown check id '" + id + "'");
}

CheckReport run_check(const std::string& id, const CheckInput& in) {
  const Entry& e = entry(id);
  return timed(id, [&] { return e.run(in); });
}

CheckReport evaluate_bound(const std::string& id, const CheckInput& in) { return run_kind(id, CheckKind::bound, in); }

CheckReport verify_vanishing(const std::string& id, const CheckInput& in) {
  return run_kind(id, CheckKind::vanishing, in);
}

CheckReport verify_formula(const std::string& id, const CheckInput& in) {
  return run_kind(id, CheckKind::formula, in);
}

CheckReport freeness_criterion(const std::string& id, const CheckInput& in) {
  return run_kind(id, CheckKind::freeness, in);
}

// ---------------------------------------------------------------- depth sequences

DepthSequenceResult depth_sequence(const ModulePtr& M, const std::optional<Ideal>& a, int nmax,
                                   const ModuleOrigin& origin, std::size_t generator_cap) {
  if (nmax < 1) throw RangeError("depth sequence needs nmax >= 1");
  if (M->is_zero()) throw UndefinedInput("depth sequence of the zero module");
  auto t0 = std::chrono::steady_clock::now();
  const RingPtr& R = M->ring();
  DepthSequenceResult out;
  DepthSequence& seq = out.sequence;
  ModulePtr power = M->minimal();
  std::size_t mu1 = power->num_generators();
  for (int i = 1; i <= nmax; ++i) {
    if (i > 1) {
      if (power->num_generators() * mu1 > generator_cap) {
        seq.truncated = true;
        break;
      }
      power = tensor(power, M);
    }
    seq.depths.push_back(depth(power));
    if (a) seq.grades.push_back(grade(*a, power));
  }
  int n = static_cast<int>(seq.depths.size());
  seq.stable_from = n;
  while (seq.stable_from > 1 && seq.depths[seq.stable_from - 2] == seq.depths[n - 1]) --seq.stable_from;

  Builder b("depthseq", "=");
  for (int i = 1; i <= n; ++i) b.lhs("depth(M^" + std::to_string(i) + ")", fin(seq.depths[i - 1]));
  if (seq.truncated) b.note("truncated after " + std::to_string(n) + " powers: generator cap exceeded");

  int dR = ring_depth(R);
  int dim_r = R->dim();
  std::vector<std::optional<int>> predicted(n);
  std::vector<std::string> rules;
  auto predict = [&](int i, int value, const std::string& rule) {
    if (predicted[i - 1] && *predicted[i - 1] != value)
      throw InternalConsistency("depth predictions disagree at i = " + std::to_string(i));
    predicted[i - 1] = value;
    if (rules.empty() || rules.back() != rule) rules.push_back(rule);
  };

  auto p = finite_pd(M);
  bool lf = locally_free_punctured(M);
  if (lf && p && *p == 1)
    for (int i = 1; i <= n; ++i) predict(i, std::max(0, dR - i), "locally free with pd 1: max(0, depth R - i)");
  if (lf && p && *p >= 1)
    for (int i = 1; i <= n && i * *p <= dR; ++i) predict(i, dR - i * *p, "locally free with pd p: depth R - i p");
  if (origin.kind == ModuleOrigin::Kind::quotient && origin.ideal && cm_ring(R)) {
    const Ideal& J = *origin.ideal;
    auto c = mu(ideal_module(J));
    if (J.quotient_dim() == dim_r - c)
      for (int i = 1; i <= n; ++i) predict(i, dim_r - static_cast<int>(c), "parameter quotient: constant");
  }
  bool is_max = origin.kind == ModuleOrigin::Kind::ideal && origin.ideal &&
                is_maximal_ideal(*origin.ideal);
  if (is_max && dR > 0) {
    bool dvr = is_regular(R) && dim_r == 1;
    for (int i = 2; i <= n; ++i) predict(i, dvr ? 1 : 0, "maximal ideal: 0 from i = 2 unless R is a DVR");
  }
  if (origin.kind == ModuleOrigin::Kind::ideal && origin.ideal && is_hypersurface(R) && dim_r > 1 &&
      is_primary_to_maximal(*origin.ideal) && !origin.ideal->is_unit())
    for (int i = 2; i <= n; ++i) predict(i, 0, "m-primary ideal over a hypersurface: 0 from i = 2");

  bool ok = true;
  for (int i = 1; i <= n; ++i)
    if (predicted[i - 1]) {
      b.rhs("depth(M^" + std::to_string(i) + ")", fin(*predicted[i - 1]));
      ok = ok && *predicted[i - 1] == seq.depths[i - 1];
    }
  for (const auto& r : rules) b.note("rule: " + r);

  if (a) {
    for (int i = 1; i <= n; ++i) b.lhs("grade(a,M^" + std::to_string(i) + ")", seq.grades[i - 1]);
    if (p && locally_free_off(M, *a))
      for (int i = 2; i <= n; ++i) {
        int lower = dim_r - i * *p;
        b.rhs("grade(a,M^" + std::to_string(i) + ") lower bound", fin(std::max(lower, 0)));
        const Count& g = seq.grades[i - 1];
        ok = ok && (g.infinite || g.value >= lower);
      }
  }
  b.note("stable from i = " + std::to_string(seq.stable_from));
  bool any_rule = !rules.empty() || (a && p);
  out.report = b.done(any_rule ? std::optional<bool>(ok) : std::nullopt);
  out.report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

CheckReport yoshida_report(const ModulePtr& M, const ModulePtr& N, bool N_buchsbaum) {
  return timed("yoshida", [&] {
    const RingPtr& R = M->ring();
    Builder b("yoshida", "table");
    bool cm = cm_ring(R);
    b.require("R Cohen-Macaulay", cm);
    auto p = finite_pd(M);
    bool perfect = p && dim(M) == R->dim() - *p;
    b.require("M perfect", perfect);
    b.status("N Buchsbaum", buchsbaum_status(N, N_buchsbaum));
    b.require("N of maximal dimension", dim(N) == R->dim());
    if (!p) return b.done(std::nullopt);
    bool bound_applies = cm && perfect && locally_free_punctured(N);
    ModulePtr X = tensor(M, N);
    bool violated = false;
    for (int i = 0; i < dim(M); ++i) {
      Count l = h(X, i);
      Count r = beta_h_sum(M, *p, N, i);
      b.lhs(h_name(i, "M⊗N"), l);
      b.rhs("sum_j beta_j(M)h^(j+" + std::to_string(i) + ")(N)", r);
      std::string what;
      if (l == r) what = "equality";
      else if (leq(l, r).value_or(false)) what = "strict inequality";
      else {
        what = "bound violated";
        violated = true;
      }
      b.note("i = " + std::to_string(i) + ": " + what);
    }
    if (!violated) return b.done(true);
    return b.done(bound_applies ? std::optional<bool>(false) : std::nullopt);
  });
}

}  // namespace tensorcoh
