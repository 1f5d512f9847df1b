#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

namespace twistcross {

// Exact element of Q(i). Used for every algebra whose structure constants and
// distinguished elements are integral (semigroup and group algebras, matrix
// units, cocycles with values in {±1, ±i}).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int re) : re_(re) {}       // NOLINT: implicit, Eigen builds Scalar(0)
  GaussRational(long re) : re_(re) {}      // NOLINT
  GaussRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return GaussRational(mpq_class(0), mpq_class(1)); }

  mpq_class const& real() const { return re_; }
  mpq_class const& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussRational& operator+=(GaussRational const& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(GaussRational const& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(GaussRational const& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_         = std::move(r);
    im_         = std::move(m);
    return *this;
  }
  GaussRational& operator/=(GaussRational const& o);

  friend GaussRational operator+(GaussRational a, GaussRational const& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, GaussRational const& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, GaussRational const& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, GaussRational const& b) { return a /= b; }
  friend GaussRational operator-(GaussRational const& a) {
    return GaussRational(mpq_class(-a.re_), mpq_class(-a.im_));
  }

  friend bool operator==(GaussRational const& a, GaussRational const& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(GaussRational const& a, GaussRational const& b) { return !(a == b); }

  friend GaussRational conj(GaussRational const& a) {
    return GaussRational(a.re_, mpq_class(-a.im_));
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string          to_string() const;
  std::size_t          hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

GaussRational conj(GaussRational const& a);
std::ostream& operator<<(std::ostream& out, GaussRational const& x);

using Exact   = GaussRational;
using Complex = std::complex<double>;

// Uniform interface over the two supported scalar fields.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussRational> {
  static constexpr bool exact = true;
  static constexpr char const* name = "gauss-rational";

  static bool is_zero(GaussRational const& x, double) { return x.is_zero(); }
  static GaussRational conj(GaussRational const& x) { return twistcross::conj(x); }
  static double magnitude(GaussRational const& x) { return std::abs(x.to_complex()); }
  static Complex to_complex(GaussRational const& x) { return x.to_complex(); }
  static GaussRational from_int(long v) { return GaussRational(v); }
  static GaussRational unit_root(int k) {  // i^k
    switch (((k % 4) + 4) % 4) {
      case 0: return GaussRational(1);
      case 1: return GaussRational::i();
      case 2: return GaussRational(-1);
      default: return -GaussRational::i();
    }
  }
  static std::string to_string(GaussRational const& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr char const* name = "complex-double";

  static bool is_zero(Complex const& x, double tol) { return std::abs(x) <= tol; }
  static Complex conj(Complex const& x) { return std::conj(x); }
  static double magnitude(Complex const& x) { return std::abs(x); }
  static Complex to_complex(Complex const& x) { return x; }
  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static Complex unit_root(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  static std::string to_string(Complex const& x);
};

// Converts between scalar fields; only exact -> complex and identity are
// meaningful.
template <typename To, typename From>
To scalar_cast(From const& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else {
    static_assert(std::is_same_v<To, Complex>, "only exact -> complex casts exist");
    return ScalarTraits<From>::to_complex(x);
  }
}

}  // namespace twistcross

template <>
struct std::hash<twistcross::GaussRational> {
  std::size_t operator()(twistcross::GaussRational const& x) const noexcept { return x.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<twistcross::GaussRational> : GenericNumTraits<twistcross::GaussRational> {
  using Real       = twistcross::GaussRational;
  using NonInteger = twistcross::GaussRational;
  using Literal    = twistcross::GaussRational;
  using Nested     = twistcross::GaussRational;

  enum {
    // Conjugation is done explicitly through ScalarTraits; Eigen's adjoint()
    // must not be used on exact matrices.
    IsComplex             = 0,
    IsInteger             = 0,
    IsSigned              = 1,
    RequireInitialization = 1,
    ReadCost              = 4,
    AddCost               = 16,
    MulCost               = 32
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int  digits10() { return 0; }
};

}  // namespace Eigen
