#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensorcoh/module_vector.hpp"

namespace tensorcoh {

/// Integer Laurent polynomial in t.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coef = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int e) const;
  std::int64_t at_one() const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial shifted(int k) const;
  /// Exact quotient by (1 - t^w); nullopt when the division leaves a remainder.
  std::optional<LaurentPolynomial> divide_one_minus(int w) const;
  bool operator==(const LaurentPolynomial& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// numerator / Π_v (1 - t^{w_v}).
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPolynomial numerator, std::vector<int> weights)
      : numerator_(std::move(numerator)), weights_(std::move(weights)) {}

  const LaurentPolynomial& numerator() const { return numerator_; }
  const std::vector<int>& weights() const { return weights_; }
  bool is_zero() const { return numerator_.is_zero(); }
  /// Krull dimension (pole order at t = 1); -1 for the zero module.
  int dim() const;
  /// Multiplicity; requires standard grading.
  std::int64_t degree() const;
  /// Total dimension over k, nullopt when infinite.
  std::optional<std::int64_t> length() const;
  /// Hilbert function value in degree d.
  std::int64_t value(int d) const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  bool operator==(const HilbertSeries& o) const { return numerator_ == o.numerator_ && weights_ == o.weights_; }

 private:
  LaurentPolynomial numerator_;
  std::vector<int> weights_;
};

/// Numerator of S/L over Π(1 - t^{w_v}) for the monomial ideal L.
LaurentPolynomial monomial_quotient_numerator(const AmbientRing& R, std::vector<Monomial> gens);

/// Series of F/U where U has the given leading terms (any Gröbner basis of U).
HilbertSeries series_from_leads(const AmbientRing& R, const std::vector<int>& twists,
                                const std::vector<VTerm>& leads);

}  // namespace tensorcoh
