#pragma once

#include <complex>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apolar {

/// Exact element of Q(i): re + im*i with arbitrary-precision rationals.
/// mpq_class keeps both parts canonical (positive denominators, lowest terms).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2, the field norm down to Q.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(unsigned k) const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  /// Magnitude estimate used for residual reports; exactness is never
  /// derived from this.
  double abs() const { return std::abs(to_complex()); }

  /// "3/2", "-i", "1/2+3*i", "2-i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses the string forms produced by Scalar::to_string (and any constant
/// expression accepted by the polynomial grammar).
Scalar parse_scalar(std::string_view text);

/// Square root inside Q(i), if one exists.
std::optional<Scalar> exact_sqrt(const Scalar& s);

/// Best rational approximation with denominator <= max_den (continued
/// fractions); nullopt when the approximation misses by more than tol.
std::optional<mpq_class> rationalize(double value, long max_den, double tol);
std::optional<Scalar> rationalize(std::complex<double> value, long max_den, double tol);

}  // namespace apolar
