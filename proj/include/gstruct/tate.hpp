#pragma once

#include <optional>
#include <string>

#include "gstruct/qseries.hpp"

namespace gstruct {

inline constexpr int kDefaultTatePrecision = 64;

struct TateCoefficients {
  QSeries B;  // -5 sum sigma_3(n) q^n
  QSeries C;  // sum (-5 sigma_3(n) - 7 sigma_5(n)) / 12 q^n
};

// Both series through exponent `precision`. Throws std::logic_error if a C
// coefficient is not an integer.
TateCoefficients tate_coefficients(int precision);

// Discriminant of y^2 + xy = x^3 + B x + C.
QSeries discriminant_weierstrass(QSeries const& B, QSeries const& C);
// q prod (1 - q^n)^24 through exponent `precision`.
QSeries discriminant_eta(int precision);
// c4^3 / Delta with c4 = 1 - 48 B, through exponent `precision`.
QSeries j_series(int precision);

QSeries eisenstein_E4(int precision);
QSeries eisenstein_E6(int precision);

enum class TateSeries { B, C, delta, j };
std::optional<TateSeries> parse_tate_series(std::string const& s);
// The named series through exponent `precision`.
QSeries tate_series(TateSeries which, int precision);

// One "exponent<TAB>numerator/denominator" line per coefficient.
std::string format_series_lines(QSeries const& s);

bool is_integral(QSeries const& s);

}  // namespace gstruct
