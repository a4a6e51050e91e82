#include "script.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "tensorcoh/poly_parser.hpp"
#include "tensorcoh/ring.hpp"

namespace tensorcoh::cli {

InputError::InputError(const std::string& what, Pos pos)
    : Error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + what),
      pos_(pos),
      message_(what) {}

namespace {

const std::string kTensor = "\xE2\x8A\x97";  // ⊗

const std::set<std::string> kModuleOps = {"coker",  "ideal",  "quotient",  "free",   "residue", "maximal",
                                          "canonical", "dual", "transpose", "torsion", "syzygy", "twist",
                                          "power",  "sum"};
const std::set<std::string> kRingCerts = {"domain", "normal", "isolated"};
const std::set<std::string> kModuleCerts = {"buchsbaum"};

class Cursor {
 public:
  Cursor(const std::string& text, int line) : s_(text), line_(line) {}

  Pos pos() const { return pos_at(i_); }
  Pos pos_at(std::size_t i) const {
    int col = 1;
    for (std::size_t k = 0; k < i && k < s_.size(); ++k)
      if ((static_cast<unsigned char>(s_[k]) & 0xC0) != 0x80) ++col;
    return {line_, col};
  }
  [[noreturn]] void fail(const std::string& what) const { throw InputError(what, pos()); }
  [[noreturn]] void fail_at(std::size_t i, const std::string& what) const { throw InputError(what, pos_at(i)); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  bool peek(const std::string& t) {
    skip();
    return s_.compare(i_, t.size(), t) == 0;
  }
  bool eat(const std::string& t) {
    if (!peek(t)) return false;
    i_ += t.size();
    return true;
  }
  void expect(const std::string& t) {
    if (!eat(t)) fail("expected '" + t + "'");
  }
  bool peek_word() {
    skip();
    return i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
  }
  // identifiers; hyphens allowed when `dashed` (check ids, origins)
  std::string word(const char* what = "name", bool dashed = false) {
    skip();
    std::size_t start = i_;
    if (!peek_word()) fail(std::string(what) + " expected");
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || (dashed && c == '-')) ++i_;
      else break;
    }
    return s_.substr(start, i_ - start);
  }
  int integer() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) fail_at(start, "integer expected");
    try {
      return std::stoi(s_.substr(start, i_ - start));
    } catch (const std::out_of_range&) {
      fail_at(start, "integer out of range");
    }
  }
  std::vector<int> int_list() {
    expect("[");
    std::vector<int> out;
    if (eat("]")) return out;
    do out.push_back(integer());
    while (eat(","));
    expect("]");
    return out;
  }
  // comma separated raw texts up to the closing bracket, bracket nesting respected
  std::vector<std::pair<std::string, std::size_t>> raw_list(char open, char close) {
    skip();
    if (i_ >= s_.size() || s_[i_] != open) fail(std::string("expected '") + open + "'");
    ++i_;
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = i_;
    int depth = 0;
    while (true) {
      if (i_ >= s_.size()) fail(std::string("missing '") + close + "'");
      char c = s_[i_];
      if (c == '(') ++depth;
      else if (c == ')' && depth > 0) --depth;
      else if ((c == ',' || c == close) && depth == 0) {
        std::size_t a = start, b = i_;
        while (a < b && std::isspace(static_cast<unsigned char>(s_[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s_[b - 1]))) --b;
        if (a == b) {
          if (c == close && out.empty()) {
            ++i_;
            return out;
          }
          fail_at(a, "empty entry");
        }
        out.emplace_back(s_.substr(a, b - a), a);
        ++i_;
        if (c == close) return out;
        start = i_;
        continue;
      }
      ++i_;
    }
  }
  std::size_t offset() const { return i_; }
  // text of a value: number, word, or bracketed list
  std::string value() {
    skip();
    std::size_t start = i_;
    if (eat("[")) {
      std::string out = "[";
      if (!eat("]")) {
        do {
          if (out.size() > 1) out += ",";
          out += value();
        } while (eat(","));
        expect("]");
      }
      return out + "]";
    }
    if (peek_word()) return word("value", true);
    integer();
    return s_.substr(start, i_ - start);
  }

 private:
  const std::string& s_;
  int line_;
  std::size_t i_ = 0;
};

struct RingInfo {
  AmbientPtr ambient;
};

class Checker {
 public:
  explicit Checker(std::uint32_t default_p) : default_p_(default_p) {}

  Statement statement(Cursor& c, int line) {
    Statement st;
    st.pos = c.pos();
    std::string kw = c.word("keyword");
    if (kw == "ring") st.body = ring(c);
    else if (kw == "ideal") st.body = ideal(c);
    else if (kw == "module") st.body = module(c);
    else if (kw == "certify") st.body = certify(c);
    else if (kw == "expect") st.body = expect(c);
    else if (kw == "invariants" || kw == "h" || kw == "resolve" || kw == "check" || kw == "depthseq" ||
             kw == "yoshida" || kw == "explore")
      st.body = command(c, kw);
    else throw InputError("unknown statement '" + kw + "'", st.pos);
    if (!c.done()) c.fail("unexpected text at end of statement");
    (void)line;
    return st;
  }

 private:
  void define(const std::string& name, Pos pos) {
    if (rings_.count(name) || ideals_.count(name) || modules_.count(name))
      throw InputError("'" + name + "' is already defined", pos);
  }
  const RingInfo& need_ring(const std::string& name, Pos pos) const {
    auto it = rings_.find(name);
    if (it == rings_.end()) throw InputError("undefined ring '" + name + "'", pos);
    return it->second;
  }
  void need_module(const std::string& name, Pos pos) const {
    if (!modules_.count(name)) throw InputError("undefined module '" + name + "'", pos);
  }
  const std::string& module_ring(const std::string& name) const { return modules_.at(name); }

  void check_poly(const AmbientPtr& S, const std::string& text, Pos pos, std::optional<int> degree = {}) {
    Polynomial f;
    try {
      f = parse_polynomial(S, text);
    } catch (const ParseError& e) {
      throw InputError(std::string(e.what()) + " in '" + text + "'", {pos.line, pos.column + static_cast<int>(e.column())});
    } catch (const Error& e) {
      throw InputError(std::string(e.what()) + " in '" + text + "'", pos);
    }
    if (!f.is_homogeneous()) throw InputError("entry '" + text + "' is not homogeneous", pos);
    if (degree && !f.is_zero() && *f.degree() != *degree)
      throw InputError("entry '" + text + "' has degree " + std::to_string(*f.degree()) + ", expected " +
                           std::to_string(*degree),
                       pos);
  }

  RingDef ring_poly(Cursor& c, const std::string& name) {
    RingDef r;
    r.name = name;
    c.expect("(");
    bool first = true;
    while (!c.eat(")")) {
      if (!first) c.expect(",");
      first = false;
      Pos kp = c.pos();
      std::string key = c.word("option");
      c.expect("=");
      if (key == "p") {
        int p = c.integer();
        if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) throw InputError("p must be a prime", kp);
        r.p = static_cast<std::uint32_t>(p);
      } else if (key == "vars") {
        c.expect("[");
        do r.vars.push_back(c.word("variable"));
        while (c.eat(","));
        c.expect("]");
      } else if (key == "weights") {
        r.weights = c.int_list();
      } else if (key == "order") {
        r.order = c.word("order");
        if (r.order != "grevlex" && r.order != "lex") throw InputError("order must be grevlex or lex", kp);
      } else {
        throw InputError("unknown ring option '" + key + "'", kp);
      }
    }
    if (r.vars.empty()) c.fail("vars=[...] is required");
    try {
      auto S = std::make_shared<AmbientRing>(r.vars, r.weights, PrimeField(r.p.value_or(default_p_)),
                                             r.order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex);
      rings_[name] = {S};
    } catch (const Error& e) {
      c.fail(e.what());
    }
    return r;
  }

  // (gens) [in R] or NAME
  IdealRef ideal_ref(Cursor& c, const std::string& implied_ring) {
    IdealRef a;
    a.pos = c.pos();
    if (c.peek("(")) {
      std::size_t base = c.offset();
      (void)base;
      for (auto& [text, off] : c.raw_list('(', ')')) {
        a.gens.push_back(text);
        a.gen_pos.push_back(c.pos_at(off));
      }
      if (c.eat("in")) {
        Pos rp = c.pos();
        a.ring = c.word("ring");
        need_ring(a.ring, rp);
      } else if (!implied_ring.empty()) {
        a.ring = implied_ring;
      } else {
        c.fail("expected 'in <ring>'");
      }
      const auto& S = need_ring(a.ring, a.pos).ambient;
      for (std::size_t i = 0; i < a.gens.size(); ++i) check_poly(S, a.gens[i], a.gen_pos[i]);
      return a;
    }
    a.name = c.word("ideal");
    auto it = ideals_.find(a.name);
    if (it == ideals_.end()) throw InputError("undefined ideal '" + a.name + "'", a.pos);
    a.ring = it->second;
    return a;
  }

  std::string ring_name(Cursor& c) {
    Pos p = c.pos();
    std::string r = c.word("ring");
    need_ring(r, p);
    return r;
  }

  Body ring(Cursor& c) {
    Pos np = c.pos();
    std::string name = c.word();
    define(name, np);
    c.expect("=");
    if (c.eat("poly")) return ring_poly(c, name);
    QuotientDef q;
    q.name = name;
    q.base = ring_name(c);
    c.expect("/");
    q.ideal = ideal_ref(c, q.base);
    if (!q.ideal.name.empty() && q.ideal.ring != q.base)
      throw InputError("ideal '" + q.ideal.name + "' is not in ring '" + q.base + "'", q.ideal.pos);
    if (c.eat("with")) {
      while (c.peek_word()) {
        Pos p = c.pos();
        std::string cert = c.word("certificate");
        if (!kRingCerts.count(cert)) throw InputError("unknown ring certificate '" + cert + "'", p);
        q.certs.push_back(cert);
      }
      if (q.certs.empty()) c.fail("certificate expected after 'with'");
    }
    rings_[name] = rings_.at(q.base);
    return q;
  }

  Body ideal(Cursor& c) {
    Pos np = c.pos();
    IdealDef d;
    d.name = c.word();
    define(d.name, np);
    c.expect("=");
    d.ideal = ideal_ref(c, "");
    ideals_[d.name] = d.ideal.ring;
    return d;
  }

  ModExpr expr(Cursor& c) {
    ModExpr e;
    e.pos = c.pos();
    do {
      ModExpr::Factor f;
      f.pos = c.pos();
      if (c.eat("(")) {
        ModExpr inner = expr(c);
        c.expect(")");
        if (inner.factors.size() == 1) f = inner.factors[0];
        else f.group = std::make_shared<ModExpr>(std::move(inner));
      } else {
        f.name = c.word("module");
      }
      e.factors.push_back(std::move(f));
    } while (c.eat(kTensor) || c.eat("*"));
    if (e.factors.size() == 1 && e.factors[0].group) {
      ModExpr inner = *e.factors[0].group;
      inner.pos = e.pos;
      return inner;
    }
    return e;
  }

  // ring of the expression; every module name must exist
  std::string expr_ring(const ModExpr& e, bool allow_ring) const {
    std::string ring;
    for (const auto& f : e.factors) {
      std::string r;
      if (f.group) {
        r = expr_ring(*f.group, false);
      } else if (modules_.count(f.name)) {
        r = module_ring(f.name);
      } else if (allow_ring && e.factors.size() == 1 && rings_.count(f.name)) {
        r = f.name;
      } else {
        throw InputError("undefined module '" + f.name + "'", f.pos);
      }
      if (!ring.empty() && !same_ring(ring, r)) throw InputError("factors live in different rings", f.pos);
      ring = r;
    }
    return ring;
  }
  bool same_ring(const std::string& a, const std::string& b) const { return a == b; }

  Body module(Cursor& c) {
    Pos np = c.pos();
    ModuleDef m;
    m.name = c.word();
    define(m.name, np);
    c.expect("=");
    Pos op_pos = c.pos();
    std::string op;
    if (c.peek_word()) {
      Cursor probe = c;
      std::string w = probe.word();
      if (kModuleOps.count(w) && !modules_.count(w)) op = c.word();
    }
    if (op.empty()) {
      m.op = "expr";
      m.args.push_back(expr(c));
      m.ring = expr_ring(m.args[0], false);
    } else {
      m.op = op;
      if (op == "coker") coker(c, m);
      else if (op == "ideal" || op == "quotient") {
        m.ideal = ideal_ref(c, "");
        m.ring = m.ideal->ring;
      } else if (op == "free") {
        m.ring = ring_name(c);
        m.ints = c.int_list();
      } else if (op == "residue" || op == "maximal" || op == "canonical") {
        m.ring = ring_name(c);
      } else {
        int nargs = op == "sum" ? 2 : 1;
        for (int i = 0; i < nargs; ++i) {
          ModExpr e;
          e.pos = c.pos();
          ModExpr::Factor f;
          f.pos = c.pos();
          if (c.eat("(")) {
            f.group = std::make_shared<ModExpr>(expr(c));
            c.expect(")");
          } else {
            f.name = c.word("module");
          }
          e.factors.push_back(std::move(f));
          std::string r = expr_ring(e, false);
          if (!m.ring.empty() && r != m.ring) throw InputError("arguments live in different rings", e.pos);
          m.ring = r;
          m.args.push_back(std::move(e));
        }
        if (op == "syzygy" || op == "twist" || op == "power") m.ints.push_back(c.integer());
        if ((op == "syzygy" || op == "power") && m.ints[0] < 0)
          throw InputError(op + " needs a nonnegative index", op_pos);
      }
    }
    modules_[m.name] = m.ring;
    return m;
  }

  void coker(Cursor& c, ModuleDef& m) {
    m.ring = ring_name(c);
    c.expect("[");
    if (!c.eat("]")) {
      do {
        std::vector<std::string> row;
        std::vector<Pos> pos;
        for (auto& [text, off] : c.raw_list('[', ']')) {
          row.push_back(text);
          pos.push_back(c.pos_at(off));
        }
        m.rows.push_back(row);
        m.row_pos.push_back(pos);
      } while (c.eat(","));
      c.expect("]");
    }
    if (c.eat("twists")) {
      m.gen_twists = c.int_list();
      c.expect("->");
      m.rel_twists = c.int_list();
    }
    std::size_t ncols = m.rows.empty() ? 0 : m.rows[0].size();
    for (std::size_t j = 0; j < m.rows.size(); ++j)
      if (m.rows[j].size() != ncols) throw InputError("matrix rows differ in length", m.row_pos[j].empty() ? Pos{} : m.row_pos[j][0]);
    if (m.gen_twists && m.gen_twists->size() != m.rows.size())
      throw InputError("generator twists do not match the number of rows", c.pos());
    if (m.rel_twists && m.rel_twists->size() != ncols)
      throw InputError("relation twists do not match the number of columns", c.pos());
    const auto& S = rings_.at(m.ring).ambient;
    for (std::size_t i = 0; i < ncols; ++i) {
      std::optional<int> col_degree;
      for (std::size_t j = 0; j < m.rows.size(); ++j) {
        std::optional<int> want;
        if (m.gen_twists) want = (*m.rel_twists)[i] - (*m.gen_twists)[j];
        else if (col_degree) want = *col_degree;
        check_poly(S, m.rows[j][i], m.row_pos[j][i], want);
        if (!m.gen_twists && !col_degree) {
          Polynomial f = parse_polynomial(S, m.rows[j][i]);
          if (!f.is_zero()) col_degree = *f.degree();
        }
      }
    }
  }

  Body certify(Cursor& c) {
    Certify ct;
    Pos p = c.pos();
    ct.target = c.word();
    need_module(ct.target, p);
    while (c.peek_word()) {
      Pos cp = c.pos();
      std::string w = c.word("certificate");
      if (!kModuleCerts.count(w)) throw InputError("unknown module certificate '" + w + "'", cp);
      ct.props.push_back(w);
    }
    if (ct.props.empty()) c.fail("certificate expected");
    return ct;
  }

  Body expect(Cursor& c) {
    Expect e;
    e.key = c.word("key", true);
    c.expect("=");
    e.value = c.value();
    c.expect("[");
    Pos op = c.pos();
    e.origin = c.word("origin", true);
    bool known = false;
    for (const auto& o : kOrigins) known = known || o == e.origin;
    if (!known) throw InputError("origin must be closed-form, trivial or frozen", op);
    c.expect("]");
    return e;
  }

  int option(Cursor& c, Command& cmd, const std::string& key) {
    c.expect("=");
    int v = c.integer();
    cmd.opts[key] = v;
    return v;
  }

  Body command(Cursor& c, const std::string& verb) {
    Command cmd;
    cmd.verb = verb;
    if (verb == "check" || verb == "explore") cmd.id = c.word("check id", true);
    if (verb == "invariants" || verb == "h" || verb == "resolve" || verb == "depthseq") {
      cmd.args.push_back(expr(c));
      expr_ring(cmd.args[0], false);
    }
    if (verb == "yoshida")
      for (int i = 0; i < 2; ++i) {
        cmd.args.push_back(expr(c));
        expr_ring(cmd.args.back(), false);
      }
    if (verb == "h") {
      int lo = c.integer();
      int hi = lo;
      if (c.eat("..")) hi = c.integer();
      if (lo < 0 || hi < lo) c.fail("bad index range");
      cmd.opts["lo"] = lo;
      cmd.opts["hi"] = hi;
    }
    if (verb == "resolve" && c.eat("bound")) {
      int b = c.integer();
      if (b < 0) c.fail("bound must be nonnegative");
      cmd.opts["bound"] = b;
    }
    if (verb == "check") {
      while (c.peek_word() && !c.peek("ideal") && !c.peek("r=") && !c.peek("r =")) {
        cmd.args.push_back(expr(c));
        expr_ring(cmd.args.back(), true);
      }
      if (c.eat("ideal")) cmd.ideal = ideal_ref(c, "");
      if (c.peek_word()) {
        Pos p = c.pos();
        std::string k = c.word("option");
        if (k != "r") throw InputError("unknown option '" + k + "'", p);
        if (option(c, cmd, "r") < 0) throw InputError("r must be nonnegative", p);
      }
    }
    if (verb == "depthseq") {
      Pos p = c.pos();
      if (c.word("option") != "n") throw InputError("expected n=<count>", p);
      if (option(c, cmd, "n") < 1) throw InputError("n must be positive", p);
      if (c.eat("ideal")) cmd.ideal = ideal_ref(c, "");
    }
    if (verb == "explore") {
      while (c.peek_word()) {
        Pos p = c.pos();
        std::string k = c.word("option");
        if (k != "trials" && k != "seed") throw InputError("unknown option '" + k + "'", p);
        if (option(c, cmd, k) < 0) throw InputError(k + " must be nonnegative", p);
      }
      if (!cmd.opts.count("trials")) c.fail("trials=<count> is required");
    }
    return cmd;
  }

  std::uint32_t default_p_;
  std::map<std::string, RingInfo> rings_;
  std::map<std::string, std::string> ideals_;
  std::map<std::string, std::string> modules_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

Script parse(const std::string& text) {
  Script script;
  Checker checker(PrimeField::kDefaultCharacteristic);
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    Cursor c(line, n);
    if (c.done()) continue;
    script.statements.push_back(checker.statement(c, n));
  }
  return script;
}

std::string print(const ModExpr& e) {
  std::vector<std::string> parts;
  for (const auto& f : e.factors) parts.push_back(f.group ? "(" + print(*f.group) + ")" : f.name);
  return join(parts, kTensor);
}

std::string print(const IdealRef& a) {
  if (!a.name.empty()) return a.name;
  return "(" + join(a.gens, ", ") + ") in " + a.ring;
}

namespace {

struct Printer {
  std::string operator()(const RingDef& r) const {
    std::string out = "ring " + r.name + " = poly(";
    if (r.p) out += "p=" + std::to_string(*r.p) + ", ";
    out += "vars=[" + join(r.vars, ",") + "]";
    if (!r.weights.empty()) out += ", weights=" + join_ints(r.weights);
    if (!r.order.empty()) out += ", order=" + r.order;
    return out + ")";
  }
  std::string operator()(const QuotientDef& q) const {
    std::string out = "ring " + q.name + " = " + q.base + " / ";
    out += q.ideal.name.empty() ? "(" + join(q.ideal.gens, ", ") + ")" : q.ideal.name;
    if (!q.certs.empty()) out += " with " + join(q.certs, " ");
    return out;
  }
  std::string operator()(const IdealDef& d) const { return "ideal " + d.name + " = " + print(d.ideal); }
  std::string operator()(const ModuleDef& m) const {
    std::string out = "module " + m.name + " = ";
    if (m.op == "expr") return out + print(m.args[0]);
    out += m.op;
    if (m.op == "coker") {
      out += " " + m.ring + " [";
      for (std::size_t j = 0; j < m.rows.size(); ++j) out += (j ? ", [" : "[") + join(m.rows[j], ", ") + "]";
      out += "]";
      if (m.gen_twists) out += " twists " + join_ints(*m.gen_twists) + " -> " + join_ints(*m.rel_twists);
      return out;
    }
    if (m.ideal) return out + " " + print(*m.ideal);
    if (m.op == "free") return out + " " + m.ring + " " + join_ints(m.ints);
    if (m.op == "residue" || m.op == "maximal" || m.op == "canonical") return out + " " + m.ring;
    for (const auto& a : m.args) {
      std::string s = print(a);
      out += " " + (a.factors.size() == 1 ? s : "(" + s + ")");
    }
    for (int k : m.ints) out += " " + std::to_string(k);
    return out;
  }
  std::string operator()(const Certify& c) const { return "certify " + c.target + " " + join(c.props, " "); }
  std::string operator()(const Command& c) const {
    std::string out = c.verb;
    if (!c.id.empty()) out += " " + c.id;
    for (const auto& a : c.args) {
      std::string s = print(a);
      out += " " + (a.factors.size() == 1 ? s : "(" + s + ")");
    }
    if (c.verb == "h") {
      out += " " + std::to_string(c.opts.at("lo"));
      if (c.opts.at("hi") != c.opts.at("lo")) out += ".." + std::to_string(c.opts.at("hi"));
    }
    if (c.verb == "resolve" && c.opts.count("bound")) out += " bound " + std::to_string(c.opts.at("bound"));
    if (c.verb == "depthseq") out += " n=" + std::to_string(c.opts.at("n"));
    if (c.ideal) out += " ideal " + print(*c.ideal);
    if (c.verb == "check" && c.opts.count("r")) out += " r=" + std::to_string(c.opts.at("r"));
    if (c.verb == "explore") {
      out += " trials=" + std::to_string(c.opts.at("trials"));
      if (c.opts.count("seed")) out += " seed=" + std::to_string(c.opts.at("seed"));
    }
    return out;
  }
  std::string operator()(const Expect& e) const { return "expect " + e.key + " = " + e.value + " [" + e.origin + "]"; }
};

}  // namespace

std::string print(const Statement& s) { return std::visit(Printer{}, s.body); }

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace tensorcoh::cli
