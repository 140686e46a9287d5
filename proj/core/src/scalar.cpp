#include "apolar/scalar.hpp"

#include <cmath>

#include "apolar/error.hpp"

namespace apolar {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::kParse: return "parse";
    case Errc::kAlphabetMismatch: return "alphabet-mismatch";
    case Errc::kDimensionMismatch: return "dimension-mismatch";
    case Errc::kSingularMatrix: return "singular-matrix";
    case Errc::kDegreeCap: return "degree-cap";
    case Errc::kNotHomogeneous: return "not-homogeneous";
    case Errc::kPositiveDimensional: return "positive-dimensional";
    case Errc::kInvalidArgument: return "invalid-argument";
    case Errc::kInvalidSpec: return "invalid-spec";
    case Errc::kInconsistentSystem: return "inconsistent-system";
    case Errc::kZeroDivisor: return "zero-divisor";
    case Errc::kCertificate: return "certificate";
    case Errc::kUnsupported: return "unsupported";
    case Errc::kForbiddenPoint: return "forbidden-point";
    case Errc::kRouteMismatch: return "route-mismatch";
    case Errc::kRetryExhausted: return "retry-exhausted";
  }
  return "unknown";
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(Errc::kInvalidArgument, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::kInvalidArgument, "division by zero in Q(i)");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw Error(Errc::kInvalidArgument, "division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned k) const {
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  mpq_class mag = ::abs(im_);
  if (mag == 1) {
    imag = "i";
  } else {
    imag = mag.get_str() + "*i";
  }
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (s.is_zero()) return Scalar(0);
  if (s.is_real()) {
    if (sgn(s.re()) > 0) {
      if (auto r = rational_sqrt(s.re())) return Scalar(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-s.re())) return Scalar(0, *r);
    return std::nullopt;
  }
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |s|)/2, y = b / (2x).
  auto modulus = rational_sqrt(s.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((s.re() + *modulus) / 2);
  if (!x || sgn(*x) == 0) return std::nullopt;
  mpq_class y = s.im() / (2 * *x);
  return Scalar(*x, y);
}

std::optional<mpq_class> rationalize(double value, long max_den, double tol) {
  if (!std::isfinite(value)) return std::nullopt;
  // Continued-fraction convergents h/k.
  long double x = value;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  mpq_class best(h, k);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::fabs(static_cast<double>(best.get_d()) - value) <= tol) break;
    if (frac < 1e-18L) break;
    long double inv = 1.0L / frac;
    long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = mpq_class(h, k);
    best.canonicalize();
  }
  if (std::fabs(best.get_d() - value) > tol) return std::nullopt;
  return best;
}

std::optional<Scalar> rationalize(std::complex<double> value, long max_den, double tol) {
  auto re = rationalize(value.real(), max_den, tol);
  auto im = rationalize(value.imag(), max_den, tol);
  if (!re || !im) return std::nullopt;
  return Scalar(*re, *im);
}

}  // namespace apolar
