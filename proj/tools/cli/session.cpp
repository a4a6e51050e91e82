#include "session.hpp"

#include <chrono>
#include <sstream>

#include "explorer.hpp"
#include "tensorcoh/poly_parser.hpp"

namespace tensorcoh::cli {

using nlohmann::json;

json to_json(const Count& c) {
  if (c.infinite) return "inf";
  return c.value;
}

std::string Record::verdict() const { return report ? to_string(report->verdict) : "computed"; }

namespace {

json quantities(const std::vector<Quantity>& qs) {
  json out = json::array();
  for (const auto& q : qs) out.push_back(to_json(q.value));
  return out;
}

std::string compact(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + compact(v[i]);
    return out + "]";
  }
  return v.dump();
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string summary(const CheckReport& r) {
  std::ostringstream out;
  out << r.id << ": " << to_string(r.verdict);
  auto side = [&](const char* label, const std::vector<Quantity>& qs) {
    if (qs.empty()) return;
    out << "\n    " << label;
    for (std::size_t i = 0; i < qs.size(); ++i) out << (i ? ", " : " ") << qs[i].name << " = " << qs[i].value.to_string();
  };
  for (const auto& h : r.hypotheses) out << "\n    [" << to_string(h.status) << "] " << h.name;
  side("lhs", r.lhs);
  side("rhs", r.rhs);
  for (const auto& n : r.notes) out << "\n    note: " << n;
  return out.str();
}

std::uint32_t field_of(const RingDef& r, const Options& o) { return r.p.value_or(o.field_char); }

}  // namespace

RingPtr Session::ring(const std::string& name, Pos pos) const {
  auto it = rings_.find(name);
  if (it == rings_.end()) throw InputError("undefined ring '" + name + "'", pos);
  return it->second;
}

Ideal Session::ideal(const IdealRef& a) const {
  if (!a.name.empty()) {
    auto it = ideals_.find(a.name);
    if (it == ideals_.end()) throw InputError("undefined ideal '" + a.name + "'", a.pos);
    return it->second;
  }
  RingPtr R = ring(a.ring, a.pos);
  Ideal J{R, {}};
  for (std::size_t i = 0; i < a.gens.size(); ++i) J.gens.push_back(parse_polynomial(R->ambient(), a.gens[i]));
  return J;
}

ModulePtr Session::eval(const ModExpr& e) {
  std::string key = print(e);
  if (auto it = expr_cache_.find(key); it != expr_cache_.end()) return it->second;
  ModulePtr acc;
  for (const auto& f : e.factors) {
    ModulePtr X;
    if (f.group) {
      X = eval(*f.group);
    } else {
      auto it = modules_.find(f.name);
      if (it == modules_.end()) throw InputError("undefined module '" + f.name + "'", f.pos);
      X = it->second;
    }
    acc = acc ? tensor(acc, X) : X;
  }
  expr_cache_[key] = acc;
  return acc;
}

ModuleOrigin Session::origin(const ModExpr& e) const {
  if (e.factors.size() == 1 && !e.factors[0].group) {
    auto it = origins_.find(e.factors[0].name);
    if (it != origins_.end()) return it->second;
  }
  return {};
}

bool Session::certified(const ModExpr& e, const std::string& prop) const {
  if (e.factors.size() != 1 || e.factors[0].group) return false;
  auto it = certs_.find(e.factors[0].name);
  return it != certs_.end() && it->second.count(prop);
}

void Session::define(const Statement& st) {
  if (auto* r = std::get_if<RingDef>(&st.body)) {
    auto S = std::make_shared<AmbientRing>(r->vars, r->weights, PrimeField(field_of(*r, opts_)),
                                           r->order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex);
    rings_[r->name] = QuotientRing::polynomial_ring(S);
  } else if (auto* q = std::get_if<QuotientDef>(&st.body)) {
    RingPtr B = ring(q->base, st.pos);
    Ideal J = ideal(q->ideal);
    std::vector<Polynomial> gens = B->ideal_generators();
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    Certificates c = B->certificates();
    for (const auto& cert : q->certs) {
      if (cert == "domain") c.domain = true;
      if (cert == "normal") c.normal = true;
      if (cert == "isolated") c.isolated_singularity = true;
    }
    rings_[q->name] = QuotientRing::make(B->ambient(), gens, c);
  } else if (auto* d = std::get_if<IdealDef>(&st.body)) {
    ideals_.insert_or_assign(d->name, ideal(d->ideal));
  } else if (auto* m = std::get_if<ModuleDef>(&st.body)) {
    ModulePtr X;
    ModuleOrigin o;
    const std::string& op = m->op;
    if (op == "coker") {
      RingPtr R = ring(m->ring, st.pos);
      std::vector<std::vector<Polynomial>> rows;
      for (const auto& row : m->rows) {
        rows.emplace_back();
        for (const auto& e : row) rows.back().push_back(parse_polynomial(R->ambient(), e));
      }
      GradedMap phi = m->gen_twists ? GradedMap::from_entries(R, *m->rel_twists, *m->gen_twists, rows)
                                    : GradedMap::with_inferred_twists(R, rows);
      X = GradedModule::coker(phi);
    } else if (op == "ideal") {
      Ideal J = ideal(*m->ideal);
      X = ideal_module(J);
      o = {ModuleOrigin::Kind::ideal, J};
    } else if (op == "quotient") {
      Ideal J = ideal(*m->ideal);
      X = cyclic_module(J);
      o = {ModuleOrigin::Kind::quotient, J};
    } else if (op == "free") {
      X = free_module(ring(m->ring, st.pos), m->ints);
    } else if (op == "residue" || op == "maximal") {
      Ideal mm = Ideal::maximal(ring(m->ring, st.pos));
      X = op == "residue" ? cyclic_module(mm) : ideal_module(mm);
      o = {op == "residue" ? ModuleOrigin::Kind::quotient : ModuleOrigin::Kind::ideal, mm};
    } else if (op == "canonical") {
      X = canonical(ring(m->ring, st.pos));
    } else if (op == "expr") {
      X = eval(m->args[0]);
      o = origin(m->args[0]);
    } else {
      ModulePtr A = eval(m->args[0]);
      if (op == "dual") X = dual(A);
      else if (op == "transpose") X = transpose(A);
      else if (op == "torsion") X = torsion(A);
      else if (op == "syzygy") X = syzygy_module(A, m->ints[0]);
      else if (op == "twist") X = twist(A, m->ints[0]);
      else if (op == "power") X = tensor_power(A, m->ints[0]);
      else if (op == "sum") X = direct_sum(A, eval(m->args[1]));
    }
    modules_[m->name] = X;
    origins_[m->name] = o;
  } else if (auto* c = std::get_if<Certify>(&st.body)) {
    for (const auto& p : c->props) certs_[c->target].insert(p);
  }
}

Record Session::execute(const Statement& st, const Command& cmd) {
  Record rec;
  rec.pos = st.pos;
  rec.statement = print(st);
  rec.check = cmd.verb == "check" || cmd.verb == "explore" ? cmd.id : cmd.verb;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream text;

  if (cmd.verb == "invariants") {
    ModulePtr X = eval(cmd.args[0]);
    InvariantReport r = invariants(X);
    json h = json::array();
    for (const auto& c : r.h) h.push_back(to_json(c));
    rec.values = {{"dim", r.dim},
                  {"depth", optional_json(r.depth)},
                  {"pd", optional_json(r.pd)},
                  {"mu", r.mu},
                  {"length", to_json(r.length)},
                  {"deg", r.deg},
                  {"rank", optional_json(r.rank)},
                  {"h", h},
                  {"hdeg", optional_json(r.hdeg)},
                  {"is_free", r.is_free},
                  {"torsion_free", optional_json(r.torsion_free)},
                  {"reflexive", optional_json(r.reflexive)},
                  {"locally_free", optional_json(r.locally_free_punctured)},
                  {"serre", r.serre},
                  {"quasi_buchsbaum", to_string(r.quasi_buchsbaum)}};
    text << "invariants " << print(cmd.args[0]) << ":";
    for (const auto& [k, v] : rec.values.items()) text << " " << k << "=" << compact(v);
  } else if (cmd.verb == "h") {
    ModulePtr X = eval(cmd.args[0]);
    int lo = cmd.opts.at("lo"), hi = cmd.opts.at("hi");
    json hs = json::array();
    for (int i = lo; i <= hi; ++i) hs.push_back(to_json(h(X, i)));
    if (lo == hi) rec.values["h" + std::to_string(lo)] = hs[0];
    else rec.values["h"] = hs;
    text << "h " << print(cmd.args[0]) << " " << lo << ".." << hi << ": " << compact(hs);
  } else if (cmd.verb == "resolve") {
    ModulePtr X = eval(cmd.args[0]);
    int bound = cmd.opts.count("bound") ? cmd.opts.at("bound") : opts_.bound.value_or(default_bound(X->ring()));
    auto res = resolve(X, false, bound);
    BettiTable b = res->betti();
    json betti = json::object();
    for (const auto& [ij, n] : b.entries()) betti[std::to_string(ij.first) + "," + std::to_string(ij.second)] = n;
    json totals = json::array();
    for (std::size_t i = 0; i <= res->length(); ++i) totals.push_back(res->rank(i));
    rec.values = {{"betti", betti}, {"totals", totals}, {"pd", res->pd().to_string()}};
    text << "resolve " << print(cmd.args[0]) << " bound " << bound << ": pd " << res->pd().to_string() << "\n"
         << b.staircase();
  } else if (cmd.verb == "check") {
    CheckInput in;
    for (const auto& a : cmd.args) {
      if (a.factors.size() == 1 && !a.factors[0].group && rings_.count(a.factors[0].name) &&
          !modules_.count(a.factors[0].name)) {
        in.ring = rings_.at(a.factors[0].name);
        continue;
      }
      ModulePtr X = eval(a);
      if (!in.M) {
        in.M = X;
        in.M_buchsbaum = certified(a, "buchsbaum");
      } else if (!in.N) {
        in.N = X;
        in.N_buchsbaum = certified(a, "buchsbaum");
      } else {
        throw InputError("check takes at most two modules", a.pos);
      }
    }
    if (cmd.ideal) {
      in.a = ideal(*cmd.ideal);
      if (!in.ring && !in.M) in.ring = in.a->ring;
    }
    if (cmd.opts.count("r")) in.r = cmd.opts.at("r");
    const CheckInfo& info = check_info(cmd.id);
    if (info.kind == CheckKind::depth_sequence || info.kind == CheckKind::yoshida)
      throw InputError("use the " + std::string(info.kind == CheckKind::yoshida ? "yoshida" : "depthseq") +
                           " command for '" + cmd.id + "'",
                       st.pos);
    rec.report = run_check(cmd.id, in);
  } else if (cmd.verb == "depthseq") {
    ModulePtr X = eval(cmd.args[0]);
    std::optional<Ideal> a;
    if (cmd.ideal) a = ideal(*cmd.ideal);
    auto res = depth_sequence(X, a, cmd.opts.at("n"), origin(cmd.args[0]));
    json grades = json::array();
    for (const auto& g : res.sequence.grades) grades.push_back(to_json(g));
    rec.values = {{"depths", res.sequence.depths},
                  {"stable_from", res.sequence.stable_from},
                  {"truncated", res.sequence.truncated}};
    if (a) rec.values["grades"] = grades;
    rec.report = res.report;
  } else if (cmd.verb == "yoshida") {
    rec.report = yoshida_report(eval(cmd.args[0]), eval(cmd.args[1]), certified(cmd.args[1], "buchsbaum"));
  } else if (cmd.verb == "explore") {
    std::uint32_t seed = cmd.opts.count("seed") ? static_cast<std::uint32_t>(cmd.opts.at("seed")) : opts_.seed.value_or(1);
    ExploreResult res = explore(cmd.id, cmd.opts.at("trials"), seed, opts_.field_char);
    rec.csv = res.csv();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", res.max_ratio());
    rec.values = {{"rows", res.rows.size()}, {"max_ratio", buf}};
    text << "explore " << cmd.id << ": " << res.rows.size() << " rows, max ratio " << buf;
  }

  if (rec.report) {
    rec.values["verdict"] = to_string(rec.report->verdict);
    rec.values["lhs"] = quantities(rec.report->lhs);
    rec.values["rhs"] = quantities(rec.report->rhs);
    text << summary(*rec.report);
    if (cmd.verb == "depthseq") text << "\n    depths " << compact(rec.values["depths"]);
  }
  rec.millis = rec.report ? rec.report->millis
                          : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!opts_.timing) {
    rec.millis = 0;
    if (rec.report) rec.report->millis = 0;
  }
  rec.text = text.str();
  return rec;
}

void Session::expect(const Statement& st, const Expect& e, std::vector<Record>& out) {
  if (out.empty()) throw InputError("expect needs a preceding command", st.pos);
  Record& rec = out.back();
  ExpectResult r;
  r.pos = st.pos;
  r.key = e.key;
  r.expected = e.value;
  r.origin = e.origin;
  if (!rec.values.contains(e.key)) throw InputError("the preceding command has no value '" + e.key + "'", st.pos);
  r.got = compact(rec.values.at(e.key));
  r.ok = r.got == r.expected;
  rec.expectations.push_back(r);
}

std::vector<Record> Session::run(const Script& script) {
  std::vector<Record> out;
  for (const auto& st : script.statements) {
    try {
      if (auto* cmd = std::get_if<Command>(&st.body)) out.push_back(execute(st, *cmd));
      else if (auto* e = std::get_if<Expect>(&st.body)) expect(st, *e, out);
      else define(st);
    } catch (const InputError&) {
      throw;
    } catch (const InternalConsistency&) {
      throw;
    } catch (const Error& err) {
      throw InputError(err.what(), st.pos);
    }
  }
  return out;
}

}  // namespace tensorcoh::cli
