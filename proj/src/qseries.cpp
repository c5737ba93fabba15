#include "gstruct/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace gstruct {

QSeries::QSeries(int valuation, std::vector<Rational> coefficients)
    : valuation_(valuation), coeffs_(std::move(coefficients)) {}

QSeries QSeries::constant(Rational const& c, int precision) {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(precision + 1, 1)));
  v[0] = c;
  return QSeries(0, std::move(v));
}

Rational QSeries::coefficient(int exponent) const {
  if (exponent > precision()) throw std::out_of_range("QSeries: coefficient beyond precision");
  if (exponent < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

QSeries QSeries::truncated(int prec) const {
  if (prec >= precision()) return *this;
  std::vector<Rational> v;
  for (int e = valuation_; e <= prec; ++e) v.push_back(coefficient(e));
  return QSeries(valuation_, std::move(v));
}

int QSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return valuation_ + static_cast<int>(i);
  }
  return precision() + 1;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator+(QSeries const& x, QSeries const& y) {
  int v = std::min(x.valuation_, y.valuation_);
  int p = std::min(x.precision(), y.precision());
  std::vector<Rational> out;
  for (int e = v; e <= p; ++e) out.push_back(x.coefficient(e) + y.coefficient(e));
  return QSeries(v, std::move(out));
}

QSeries operator-(QSeries const& x, QSeries const& y) { return x + (-y); }

QSeries operator*(Rational const& c, QSeries const& x) {
  QSeries r = x;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

QSeries operator*(QSeries const& x, QSeries const& y) {
  int vx = x.order(), vy = y.order();
  int v = vx + vy;
  int p = std::min(x.precision() + vy, y.precision() + vx);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p - v + 1, 0)));
  for (int i = vx; i <= x.precision(); ++i) {
    Rational const& a = x.coefficient(i);
    if (a == 0) continue;
    for (int j = vy; i + j <= p; ++j) out[static_cast<std::size_t>(i + j - v)] += a * y.coefficient(j);
  }
  return QSeries(v, std::move(out));
}

QSeries QSeries::inverse() const {
  int v = order();
  if (v > precision()) throw std::domain_error("QSeries: inverse of a series with no known unit term");
  // x = q^v u, u known through relative exponent precision - v
  int n = precision() - v;
  std::vector<Rational> u, w(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) u.push_back(coefficient(v + i));
  w[0] = 1 / u[0];
  for (int i = 1; i <= n; ++i) {
    Rational s = 0;
    for (int j = 1; j <= i; ++j) s += u[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(i - j)];
    w[static_cast<std::size_t>(i)] = -s * w[0];
  }
  return QSeries(-v, std::move(w));
}

QSeries QSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QSeries result = constant(1, precision() - order());
  QSeries base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(QSeries const& x, QSeries const& y) {
  int p = std::min(x.precision(), y.precision());
  for (int e = std::min(x.valuation_, y.valuation_); e <= p; ++e) {
    if (x.coefficient(e) != y.coefficient(e)) return false;
  }
  return true;
}

BigInt sigma(unsigned k, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sigma: n must be positive");
  BigInt s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += boost::multiprecision::pow(BigInt(d), k);
    if (d * d != n) s += boost::multiprecision::pow(BigInt(n / d), k);
  }
  return s;
}

}  // namespace gstruct
