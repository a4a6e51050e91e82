#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tensorcoh/errors.hpp"

namespace tensorcoh::cli {

/// 1-based line and column (columns count code points).
struct Pos {
  int line = 0;
  int column = 0;
};

/// Syntax errors, undefined names, bad entries; always carries a position.
class InputError : public Error {
 public:
  InputError(const std::string& what, Pos pos);
  Pos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Pos pos_;
  std::string message_;
};

/// Tensor product of factors; a factor is a name or a parenthesised product.
struct ModExpr {
  struct Factor {
    std::string name;
    std::shared_ptr<ModExpr> group;
    Pos pos;
  };
  std::vector<Factor> factors;
  Pos pos;
};

/// Either a defined ideal name or a generator list in a ring.
struct IdealRef {
  std::string name;
  std::vector<std::string> gens;
  std::vector<Pos> gen_pos;
  std::string ring;
  Pos pos;
};

struct RingDef {
  std::string name;
  std::optional<std::uint32_t> p;
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::string order;
};

struct QuotientDef {
  std::string name;
  std::string base;
  IdealRef ideal;
  std::vector<std::string> certs;
};

struct IdealDef {
  std::string name;
  IdealRef ideal;
};

/// module NAME = <op> ...
///   coker R [[..],..] [twists [gens] -> [rels]] | ideal I | ideal (..) in R | quotient I | quotient (..) in R
///   free R [t..] | residue R | maximal R | canonical R | dual X | transpose X | torsion X
///   syzygy X i | twist X k | power X k | sum X Y | X⊗Y
struct ModuleDef {
  std::string name;
  std::string op;
  std::string ring;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<Pos>> row_pos;
  std::optional<std::vector<int>> gen_twists;
  std::optional<std::vector<int>> rel_twists;
  std::optional<IdealRef> ideal;
  std::vector<ModExpr> args;
  std::vector<int> ints;
};

struct Certify {
  std::string target;
  std::vector<std::string> props;
};

/// invariants X | h X i[..j] | resolve X [bound B] | check ID args.. [ideal ..] [r=..]
/// depthseq X n=N [ideal ..] | yoshida X Y | explore ID trials=T [seed=S]
struct Command {
  std::string verb;
  std::string id;
  std::vector<ModExpr> args;
  std::optional<IdealRef> ideal;
  std::map<std::string, int> opts;
};

/// expect KEY = VALUE [origin]
struct Expect {
  std::string key;
  std::string value;
  std::string origin;
};

using Body = std::variant<RingDef, QuotientDef, IdealDef, ModuleDef, Certify, Command, Expect>;

struct Statement {
  Pos pos;
  Body body;
};

struct Script {
  std::vector<Statement> statements;
};

inline const std::vector<std::string> kOrigins = {"closed-form", "trivial", "frozen"};

/// Parses and statically checks a session: syntax, names defined before use, homogeneous and
/// degree-compatible matrix entries. Throws InputError.
Script parse(const std::string& text);

std::string print(const ModExpr& e);
std::string print(const IdealRef& a);
std::string print(const Statement& s);
std::string print(const Script& s);

}  // namespace tensorcoh::cli
