#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tensorcoh/field.hpp"

namespace tensorcoh {

constexpr int kMaxVars = 10;
using Exponent = std::uint16_t;

/// Exponent vector with its weighted degree and a support bitmask cached.
struct Monomial {
  std::array<Exponent, kMaxVars> exp{};
  std::int32_t degree = 0;
  std::uint32_t support = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return exp != o.exp; }

  bool divides(const Monomial& o) const {
    if (support & ~o.support) return false;
    if (degree > o.degree) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  bool is_one() const { return support == 0; }
  /// Supports disjoint.
  bool coprime(const Monomial& o) const { return (support & o.support) == 0; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);

enum class MonomialOrder { grevlex, lex };

/// Polynomial ring k[x_1..x_n] with variable weights and a monomial order.
class AmbientRing {
 public:
  AmbientRing(std::vector<std::string> names, std::vector<int> weights,
              PrimeField field, MonomialOrder order = MonomialOrder::grevlex);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight_sum() const;
  bool standard_graded() const;
  const PrimeField& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  int var_index(const std::string& name) const;  // -1 when absent

  Monomial one() const { return Monomial{}; }
  Monomial variable(int i, int power = 1) const;
  Monomial make(const std::vector<int>& exps) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;

  /// Three-way comparison under the ring's order: >0 when a is larger.
  int compare(const Monomial& a, const Monomial& b) const {
    if (order_ == MonomialOrder::grevlex) {
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      for (int i = nvars() - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
      return 0;
    }
    for (int i = 0; i < nvars(); ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
    return 0;
  }

  std::string to_string(const Monomial& m) const;
  bool same_as(const AmbientRing& o) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  PrimeField field_;
  MonomialOrder order_;
};

using AmbientPtr = std::shared_ptr<const AmbientRing>;

}  // namespace tensorcoh
