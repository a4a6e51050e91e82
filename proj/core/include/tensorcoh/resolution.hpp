#pragma once

#include <map>
#include <string>
#include <utility>

#include "tensorcoh/operations.hpp"

namespace tensorcoh {

/// Natural number or infinity.
struct Count {
  std::int64_t value = 0;
  bool infinite = false;

  static Count inf() { return {0, true}; }
  bool operator==(const Count& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
};

/// Projective dimension: exact, or a lower bound when the resolution was truncated.
struct ProjDim {
  int value = 0;
  bool lower_bound = false;
  std::string to_string() const { return (lower_bound ? ">= " : "") + std::to_string(value); }
};

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, std::int64_t> entries, int bound)
      : entries_(std::move(entries)), bound_(bound) {}

  std::int64_t at(int i, int j) const;
  std::int64_t total(int i) const;
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  int bound() const { return bound_; }
  /// Staircase layout: rows j - i, columns i.
  std::string staircase() const;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
  int bound_ = 0;
};

/// Minimal graded free resolution truncated at a bound.
struct Resolution {
  ModulePtr module;
  bool over_ambient = false;
  int bound = 0;
  /// F_0 .. F_N are nonzero (or N = 0 for the zero module), maps.size() == N.
  FreeComplex complex;
  bool terminated = false;

  std::size_t length() const { return complex.maps.size(); }
  std::int64_t rank(std::size_t i) const { return static_cast<std::int64_t>(complex.free_twists(i).size()); }
  BettiTable betti() const;
  ProjDim pd() const;
};

/// Resolution of M over R (or over the ambient S), computing F_0 .. F_bound.
std::shared_ptr<const Resolution> resolve(const ModulePtr& M, bool over_ambient, int bound);
/// Full (terminating) resolution over S; cached on the module.
std::shared_ptr<const Resolution> ambient_resolution(const ModulePtr& M);
int default_bound(const RingPtr& R);

BettiTable betti(const ModulePtr& M, bool over_ambient, int bound);
ProjDim pd(const ModulePtr& M, bool over_ambient, int bound);
/// Syz_i(M): image of F_i -> F_{i-1}; Syz_0 = M.
ModulePtr syzygy_module(const ModulePtr& M, int i, bool over_ambient = false);
/// Auslander transpose coker(F_0* -> F_1*).
ModulePtr transpose(const ModulePtr& M);

SubQuotient ext(const ModulePtr& M, const ModulePtr& N, int i);
SubQuotient tor(const ModulePtr& M, const ModulePtr& N, int i);
/// Ext^i_S(M, S(-shift)) over the ambient polynomial ring.
SubQuotient ext_ambient(const ModulePtr& M, int i, int shift = 0);

}  // namespace tensorcoh
