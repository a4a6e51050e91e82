#include "tensorcoh/polynomial.hpp"

#include <algorithm>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

Polynomial::Polynomial(AmbientPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const AmbientRing& R = *ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  const PrimeField& F = R.field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = F.add(terms_.back().coef, t.coef);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(AmbientPtr ring, std::int64_t c) {
  Coef v = ring->field().from_int(c);
  Polynomial p(ring);
  if (v) p.terms_.push_back({ring->one(), v});
  return p;
}

Polynomial Polynomial::variable(AmbientPtr ring, int i, int power) {
  Polynomial p(ring);
  p.terms_.push_back({ring->variable(i, power), 1});
  return p;
}

Polynomial Polynomial::monomial(AmbientPtr ring, const Monomial& m, Coef c) {
  Polynomial p(ring);
  if (c) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
    throw StructuralError("polynomials from different rings");
}

namespace {

std::vector<Term> merge(const AmbientRing& R, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : R.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coef v = subtract ? F.neg(b[j].coef) : b[j].coef;
      out.push_back({b[j++].mono, v});
    } else {
      Coef v = subtract ? F.sub(a[i].coef, b[j].coef) : F.add(a[i].coef, b[j].coef);
      if (v) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_) return o;
  if (!o.ring_) return *this;
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (!o.ring_) return *this;
  if (!ring_) return -o;
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial acc(ring_);
  for (const auto& t : terms_) acc = acc + o.times(t.mono, t.coef);
  return acc;
}

Polynomial Polynomial::scaled(Coef c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Coef c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coef));
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  const PrimeField& F = ring_->field();
  for (const auto& t : terms_) {
    if (t.mono.exp[var] == 0) continue;
    Coef c = F.mul(t.coef, F.from_int(t.mono.exp[var]));
    if (!c) continue;
    out.push_back({t.mono / ring_->variable(var), c});
  }
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const PrimeField& F = ring_->field();
  for (const auto& t : terms_) {
    std::int64_t c = F.to_signed(t.coef);
    bool first = s.empty();
    if (c < 0) {
      s += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      s += " + ";
    }
    if (t.mono.is_one()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += ring_->to_string(t.mono);
    }
  }
  return s;
}

}  // namespace tensorcoh
