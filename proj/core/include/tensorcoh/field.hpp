#pragma once

#include <cstdint>

namespace tensorcoh {

using Coef = std::uint32_t;

/// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Coef add(Coef a, Coef b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + p_ - b; }
  Coef neg(Coef a) const { return a == 0 ? 0 : p_ - a; }
  Coef mul(Coef a, Coef b) const {
    return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coef inv(Coef a) const;
  Coef pow(Coef a, std::uint64_t e) const;
  Coef from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coef a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace tensorcoh
