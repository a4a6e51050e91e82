#include "tensorcoh/hilbert.hpp"

#include <algorithm>
#include <map>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coef) {
  LaurentPolynomial p;
  if (coef) {
    p.low_ = exponent;
    p.coeffs_ = {coef};
  }
  return p;
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  if (k) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
    low_ += static_cast<int>(k);
  }
  if (coeffs_.empty()) low_ = 0;
}

std::int64_t LaurentPolynomial::coeff(int e) const {
  if (coeffs_.empty() || e < low_ || e > high()) return 0;
  return coeffs_[e - low_];
}

std::int64_t LaurentPolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  LaurentPolynomial r;
  r.low_ = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  r.coeffs_.assign(hi - r.low_ + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[low_ - r.low_ + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[o.low_ - r.low_ + i] += o.coeffs_[i];
  r.trim();
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial n = o;
  for (auto& c : n.coeffs_) c = -c;
  return *this + n;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentPolynomial r;
  r.low_ = low_ + o.low_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_one_minus(int w) const {
  if (is_zero()) return LaurentPolynomial{};
  // q(t)(1 - t^w) = p(t): q_i = p_i + q_{i-w}, with q supported on [low, high - w].
  int n = static_cast<int>(coeffs_.size());
  if (n <= w) return std::nullopt;
  std::vector<std::int64_t> q(n - w, 0);
  for (int i = 0; i < n - w; ++i) q[i] = coeffs_[i] + (i >= w ? q[i - w] : 0);
  for (int i = n - w; i < n; ++i) {
    std::int64_t rem = coeffs_[i] + (i - w >= 0 && i - w < n - w ? q[i - w] : 0);
    if (rem != 0) return std::nullopt;
  }
  LaurentPolynomial r;
  r.low_ = low_;
  r.coeffs_ = std::move(q);
  r.trim();
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (!c) continue;
    int e = low_ + static_cast<int>(i);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "t";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

int HilbertSeries::dim() const {
  if (numerator_.is_zero()) return -1;
  LaurentPolynomial p = numerator_;
  int k = 0;
  while (true) {
    auto q = p.divide_one_minus(1);
    if (!q) break;
    p = *q;
    ++k;
  }
  return static_cast<int>(weights_.size()) - k;
}

std::int64_t HilbertSeries::degree() const {
  if (numerator_.is_zero()) return 0;
  for (int w : weights_)
    if (w != 1) throw UnsupportedInput("multiplicity is only defined here for standard grading");
  LaurentPolynomial p = numerator_;
  while (auto q = p.divide_one_minus(1)) p = *q;
  return p.at_one();
}

std::optional<std::int64_t> HilbertSeries::length() const {
  if (numerator_.is_zero()) return 0;
  LaurentPolynomial p = numerator_;
  for (int w : weights_) {
    auto q = p.divide_one_minus(w);
    if (!q) return std::nullopt;
    p = *q;
  }
  return p.at_one();
}

std::int64_t HilbertSeries::value(int d) const {
  if (numerator_.is_zero() || d < numerator_.low()) return 0;
  int span = d - numerator_.low();
  // power series of 1 / Π(1 - t^w) up to t^span
  std::vector<std::int64_t> inv(span + 1, 0);
  inv[0] = 1;
  for (int w : weights_)
    for (int i = w; i <= span; ++i) inv[i] += inv[i - w];
  std::int64_t s = 0;
  for (int e = numerator_.low(); e <= std::min(d, numerator_.high()); ++e) s += numerator_.coeff(e) * inv[d - e];
  return s;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (weights_.empty()) return o;
  if (!o.weights_.empty() && o.weights_ != weights_) throw StructuralError("series over different rings");
  return HilbertSeries(numerator_ + o.numerator_, weights_);
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  if (!o.weights_.empty() && !weights_.empty() && o.weights_ != weights_)
    throw StructuralError("series over different rings");
  return HilbertSeries(numerator_ - o.numerator_, weights_.empty() ? o.weights_ : weights_);
}

namespace {

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  g = std::move(out);
}

LaurentPolynomial numerator_rec(const AmbientRing& R, std::vector<Monomial> g) {
  minimalize(g);
  if (g.empty()) return LaurentPolynomial::monomial(0);
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& m : g) {
    if (seen & m.support) {
      coprime = false;
      break;
    }
    seen |= m.support;
  }
  if (coprime) {
    LaurentPolynomial p = LaurentPolynomial::monomial(0);
    for (const auto& m : g) p = p * (LaurentPolynomial::monomial(0) - LaurentPolynomial::monomial(m.degree));
    return p;
  }
  // pivot on the variable occurring in most non-pure-power generators
  int best = -1, best_count = 0;
  for (int v = 0; v < R.nvars(); ++v) {
    int count = 0;
    for (const auto& m : g)
      if (m.exp[v] && (m.support & (m.support - 1))) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  int e = 0;
  for (const auto& m : g)
    if (m.exp[best] && (m.support & (m.support - 1)) && (e == 0 || m.exp[best] < e)) e = m.exp[best];
  Monomial p = R.variable(best, e);
  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(g.size());
  for (const auto& m : g) {
    Monomial q = m;
    int r = std::max(0, static_cast<int>(m.exp[best]) - e);
    q.degree -= (m.exp[best] - r) * R.weight(best);
    q.exp[best] = static_cast<Exponent>(r);
    if (!r) q.support &= ~(1u << best);
    colon.push_back(q);
  }
  return numerator_rec(R, std::move(plus)) + numerator_rec(R, std::move(colon)).shifted(p.degree);
}

}  // namespace

LaurentPolynomial monomial_quotient_numerator(const AmbientRing& R, std::vector<Monomial> gens) {
  return numerator_rec(R, std::move(gens));
}

HilbertSeries series_from_leads(const AmbientRing& R, const std::vector<int>& twists,
                                const std::vector<VTerm>& leads) {
  std::map<std::uint32_t, std::vector<Monomial>> per;
  for (const auto& t : leads) per[t.comp].push_back(t.mono);
  LaurentPolynomial num;
  for (std::uint32_t j = 0; j < twists.size(); ++j) {
    auto it = per.find(j);
    LaurentPolynomial n = it == per.end() ? LaurentPolynomial::monomial(0)
                                          : monomial_quotient_numerator(R, it->second);
    num = num + n.shifted(twists[j]);
  }
  return HilbertSeries(num, R.weights());
}

}  // namespace tensorcoh
