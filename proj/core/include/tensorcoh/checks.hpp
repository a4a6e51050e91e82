#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorcoh/invariants.hpp"

namespace tensorcoh {

enum class HypothesisStatus { verified, certified, violated };
enum class Verdict { holds, fails, hypotheses_violated, undecidable };
enum class CheckKind { bound, vanishing, formula, freeness, depth_sequence, yoshida };

std::string to_string(HypothesisStatus s);
std::string to_string(Verdict v);
std::string to_string(CheckKind k);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::violated;
};

struct Quantity {
  std::string name;
  Count value;
};

struct CheckReport {
  std::string id;
  std::vector<Hypothesis> hypotheses;
  std::vector<Quantity> lhs;
  std::vector<Quantity> rhs;
  /// How lhs and rhs are compared: "<=", "<", "=", "implies", "iff", "table".
  std::string relation;
  Verdict verdict = Verdict::undecidable;
  std::vector<std::string> notes;
  double millis = 0;

  bool hypotheses_hold() const;
  const Quantity* find(const std::string& name) const;
};

/// Arguments of a registry check. Which fields are read depends on the id.
struct CheckInput {
  ModulePtr M;
  ModulePtr N;
  /// Ideal argument: the a of local cohomology H_a, or the ideal I itself for ideal-based formulas.
  std::optional<Ideal> a;
  int r = 0;
  /// Buchsbaum certificates supplied by the caller.
  bool M_buchsbaum = false;
  bool N_buchsbaum = false;
  /// Ring for checks that only need R; defaults to the ring of M.
  RingPtr ring;
};

struct CheckInfo {
  std::string id;
  CheckKind kind;
  std::string statement;
  std::string hypotheses;
  std::string arguments;
};

const std::vector<CheckInfo>& registry();
/// Throws UndefinedInput for an unknown id.
const CheckInfo& check_info(const std::string& id);

/// Runs any registry check except depth sequences.
CheckReport run_check(const std::string& id, const CheckInput& in);

CheckReport evaluate_bound(const std::string& id, const CheckInput& in);
CheckReport verify_vanishing(const std::string& id, const CheckInput& in);
CheckReport verify_formula(const std::string& id, const CheckInput& in);
CheckReport freeness_criterion(const std::string& id, const CheckInput& in);

/// Where a module came from, when the depth-sequence analyzer can use it.
struct ModuleOrigin {
  enum class Kind { general, ideal, quotient };
  Kind kind = Kind::general;
  std::optional<Ideal> ideal;
};

struct DepthSequence {
  /// depth(M^{⊗i}) for i = 1..values.size().
  std::vector<int> depths;
  /// grade(a, M^{⊗i}) when an ideal was given.
  std::vector<Count> grades;
  /// First i from which the computed depths stay constant.
  int stable_from = 1;
  bool truncated = false;
};

struct DepthSequenceResult {
  DepthSequence sequence;
  CheckReport report;
};

DepthSequenceResult depth_sequence(const ModulePtr& M, const std::optional<Ideal>& a, int nmax,
                                   const ModuleOrigin& origin = {}, std::size_t generator_cap = 20000);

/// Per-index comparison of h^i(M⊗N) with Σ_j β_j(M) h^{j+i}(N), i < dim M.
CheckReport yoshida_report(const ModulePtr& M, const ModulePtr& N, bool N_buchsbaum);

/// Some hypothesis helpers shared with the explorer.
bool is_regular(const RingPtr& R);
bool is_hypersurface(const RingPtr& R);
bool has_isolated_singularity(const RingPtr& R);
/// Exact pd over R when finite, searched up to depth(R) + 1.
std::optional<int> finite_pd(const ModulePtr& M);

}  // namespace tensorcoh
