#include "tensorcoh/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
  r.degree = a.degree + b.degree;
  r.support = a.support | b.support;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp[i] = a.exp[i] - b.exp[i];
    if (r.exp[i]) r.support |= 1u << i;
  }
  r.degree = a.degree - b.degree;
  return r;
}

AmbientRing::AmbientRing(std::vector<std::string> names, std::vector<int> weights,
                         PrimeField field, MonomialOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), field_(field), order_(order) {
  if (names_.empty()) throw StructuralError("a ring needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw UnsupportedInput("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw StructuralError("variable weights and names differ in length");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name " + n);
  for (int w : weights_)
    if (w <= 0) throw StructuralError("variable weights must be positive");
}

int AmbientRing::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

bool AmbientRing::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int AmbientRing::var_index(const std::string& n) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == n) return i;
  return -1;
}

Monomial AmbientRing::variable(int i, int power) const {
  Monomial m;
  m.exp[i] = static_cast<Exponent>(power);
  m.degree = weights_[i] * power;
  if (power) m.support = 1u << i;
  return m;
}

Monomial AmbientRing::make(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != nvars()) throw StructuralError("exponent vector length");
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    if (exps[i] < 0) throw StructuralError("negative exponent");
    m.exp[i] = static_cast<Exponent>(exps[i]);
    m.degree += weights_[i] * exps[i];
    if (exps[i]) m.support |= 1u << i;
  }
  return m;
}

Monomial AmbientRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < nvars(); ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.degree += weights_[i] * r.exp[i];
  }
  r.support = a.support | b.support;
  return r;
}

Monomial AmbientRing::gcd(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < nvars(); ++i) {
    r.exp[i] = std::min(a.exp[i], b.exp[i]);
    r.degree += weights_[i] * r.exp[i];
    if (r.exp[i]) r.support |= 1u << i;
  }
  return r;
}

std::string AmbientRing::to_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

bool AmbientRing::same_as(const AmbientRing& o) const {
  return this == &o || (names_ == o.names_ && weights_ == o.weights_ && field_ == o.field_ &&
                        order_ == o.order_);
}

}  // namespace tensorcoh
