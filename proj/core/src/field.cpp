#include "tensorcoh/field.hpp"

#include <string>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw UnsupportedInput("field characteristic must be a prime below 2^31, got " +
                           std::to_string(p));
}

Coef PrimeField::pow(Coef a, std::uint64_t e) const {
  Coef r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coef PrimeField::inv(Coef a) const {
  if (a == 0) throw InternalConsistency("inverse of zero in F_p");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coef>(t);
}

Coef PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coef>(m);
}

}  // namespace tensorcoh
