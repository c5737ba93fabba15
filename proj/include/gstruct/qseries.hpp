#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace gstruct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Truncated Laurent series sum_{e = valuation}^{precision} c_e q^e with exact
// rational coefficients. Coefficients above `precision` are unknown; every
// operation keeps only what its inputs determine.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int valuation, std::vector<Rational> coefficients);
  // The constant c, known through exponent `precision`.
  static QSeries constant(Rational const& c, int precision);

  int valuation() const noexcept { return valuation_; }
  int precision() const noexcept { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }
  // 0 below the valuation; throws std::out_of_range above the precision.
  Rational coefficient(int exponent) const;
  // Drops terms above `precision` (no-op if already shorter).
  QSeries truncated(int precision) const;
  // Exponent of the first nonzero coefficient, or nullopt-like precision+1.
  int order() const;

  QSeries operator-() const;
  friend QSeries operator+(QSeries const& x, QSeries const& y);
  friend QSeries operator-(QSeries const& x, QSeries const& y);
  friend QSeries operator*(QSeries const& x, QSeries const& y);
  friend QSeries operator*(Rational const& c, QSeries const& x);
  // Throws std::domain_error when no nonzero coefficient is known.
  QSeries inverse() const;
  // Nonnegative powers, and negative ones through inverse().
  QSeries pow(int k) const;

  // Coefficientwise through the smaller precision.
  friend bool operator==(QSeries const& x, QSeries const& y);

 private:
  int valuation_ = 0;
  std::vector<Rational> coeffs_;
};

// sum of d^k over divisors d of n. Throws std::invalid_argument for n < 1.
BigInt sigma(unsigned k, std::int64_t n);

}  // namespace gstruct
