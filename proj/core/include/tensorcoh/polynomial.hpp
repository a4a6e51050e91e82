#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorcoh/ring.hpp"

namespace tensorcoh {

struct Term {
  Monomial mono;
  Coef coef;
};

/// Multivariate polynomial over an AmbientRing. Terms are kept strictly
/// descending under the ring order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(AmbientPtr ring) : ring_(std::move(ring)) {}
  /// Takes terms in any order; sorts and combines.
  Polynomial(AmbientPtr ring, std::vector<Term> terms);

  static Polynomial constant(AmbientPtr ring, std::int64_t c);
  static Polynomial variable(AmbientPtr ring, int i, int power = 1);
  static Polynomial monomial(AmbientPtr ring, const Monomial& m, Coef c = 1);

  const AmbientPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  bool is_homogeneous() const;
  /// Weighted degree of the leading term; nullopt for zero.
  std::optional<int> degree() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coef c) const;
  Polynomial times(const Monomial& m, Coef c = 1) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  Polynomial derivative(int var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  AmbientPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace tensorcoh
