#include "twistcross/scalar.hpp"

#include <iomanip>
#include <sstream>

#include "twistcross/error.hpp"

namespace twistcross {

GaussRational& GaussRational::operator/=(GaussRational const& o) {
  mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(den) == 0) {
    throw Error("GaussRational: division by zero");
  }
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class m = (im_ * o.re_ - re_ * o.im_) / den;
  re_         = std::move(r);
  im_         = std::move(m);
  return *this;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) {
    return re_.get_str();
  }
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    if (sgn(im_) > 0) {
      out += "+";
    }
  }
  if (im_ == 1) {
    out += "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    out += im_.get_str() + "i";
  }
  return out;
}

std::size_t GaussRational::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 1000003u ^ h(im_.get_str());
}

std::ostream& operator<<(std::ostream& out, GaussRational const& x) {
  return out << x.to_string();
}

std::string ScalarTraits<Complex>::to_string(Complex const& x) {
  std::ostringstream out;
  out << std::setprecision(12) << x.real();
  if (x.imag() != 0.0) {
    out << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
  }
  return out.str();
}

}  // namespace twistcross
