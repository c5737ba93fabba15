#include "gstruct/tate.hpp"

#include <sstream>
#include <stdexcept>

namespace gstruct {

namespace {

void require_precision(int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be at least 1");
}

QSeries divisor_series(int precision, Rational const& c0, Rational const& scale, unsigned k) {
  std::vector<Rational> v(static_cast<std::size_t>(precision + 1));
  v[0] = c0;
  for (int n = 1; n <= precision; ++n) v[static_cast<std::size_t>(n)] = scale * Rational(sigma(k, n));
  return QSeries(0, std::move(v));
}

}  // namespace

TateCoefficients tate_coefficients(int precision) {
  require_precision(precision);
  std::vector<Rational> b(static_cast<std::size_t>(precision + 1)), c(b.size());
  for (int n = 1; n <= precision; ++n) {
    BigInt s3 = sigma(3, n), s5 = sigma(5, n);
    b[static_cast<std::size_t>(n)] = Rational(-5 * s3);
    BigInt num = -5 * s3 - 7 * s5;
    if (num % 12 != 0) throw std::logic_error("tate_coefficients: C coefficient is not integral");
    c[static_cast<std::size_t>(n)] = Rational(num / 12);
  }
  return {QSeries(0, std::move(b)), QSeries(0, std::move(c))};
}

QSeries discriminant_weierstrass(QSeries const& B, QSeries const& C) {
  // a1 = 1, a2 = a3 = 0, a4 = B, a6 = C
  int p = std::min(B.precision(), C.precision());
  QSeries one = QSeries::constant(1, p);
  QSeries b2 = one;
  QSeries b4 = Rational(2) * B;
  QSeries b6 = Rational(4) * C;
  QSeries b8 = C - B * B;
  return -(b2 * b2 * b8) - Rational(8) * (b4 * b4 * b4) - Rational(27) * (b6 * b6) +
         Rational(9) * (b2 * b4 * b6);
}

QSeries discriminant_eta(int precision) {
  require_precision(precision);
  // prod (1 - q^n)^24 through q^(precision - 1), then shift by q
  int m = precision - 1;
  std::vector<Rational> acc(static_cast<std::size_t>(m + 1));
  acc[0] = 1;
  for (int n = 1; n <= m; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int e = m; e >= n; --e) acc[static_cast<std::size_t>(e)] -= acc[static_cast<std::size_t>(e - n)];
    }
  }
  std::vector<Rational> v{0};
  v.insert(v.end(), acc.begin(), acc.end());
  return QSeries(0, std::move(v));
}

QSeries j_series(int precision) {
  require_precision(precision);
  auto [B, C] = tate_coefficients(precision + 2);
  QSeries c4 = QSeries::constant(1, precision + 2) - Rational(48) * B;
  QSeries delta = discriminant_weierstrass(B, C);
  return (c4.pow(3) * delta.inverse()).truncated(precision);
}

QSeries eisenstein_E4(int precision) { return divisor_series(precision, 1, 240, 3); }
QSeries eisenstein_E6(int precision) { return divisor_series(precision, 1, -504, 5); }

std::optional<TateSeries> parse_tate_series(std::string const& s) {
  if (s == "B") return TateSeries::B;
  if (s == "C") return TateSeries::C;
  if (s == "delta") return TateSeries::delta;
  if (s == "j") return TateSeries::j;
  return std::nullopt;
}

QSeries tate_series(TateSeries which, int precision) {
  switch (which) {
    case TateSeries::B: return tate_coefficients(precision).B;
    case TateSeries::C: return tate_coefficients(precision).C;
    case TateSeries::delta: {
      auto [B, C] = tate_coefficients(precision);
      return discriminant_weierstrass(B, C);
    }
    case TateSeries::j: return j_series(precision);
  }
  throw std::invalid_argument("unknown series");
}

std::string format_series_lines(QSeries const& s) {
  std::ostringstream out;
  for (int e = s.valuation(); e <= s.precision(); ++e) {
    Rational c = s.coefficient(e);
    out << e << '\t' << numerator(c) << '/' << denominator(c) << '\n';
  }
  return out.str();
}

bool is_integral(QSeries const& s) {
  for (int e = s.valuation(); e <= s.precision(); ++e) {
    if (denominator(s.coefficient(e)) != 1) return false;
  }
  return true;
}

}  // namespace gstruct
