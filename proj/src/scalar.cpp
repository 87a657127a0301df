#include "alc/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace alc {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = Value(num, den);
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rat(value_ / o.value_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ > o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    std::ostringstream os;
    os << num();
    if (den() != 1) os << '/' << den();
    return os.str();
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(re_ + o.re_, r2_ + o.r2_, im_ + o.im_, im2_ + o.im2_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const { return Scalar(-re_, -r2_, -im_, -im2_); }

// Basis {1, s, i, is} with s*s = 2, i*i = -1.
Scalar Scalar::operator*(const Scalar& o) const {
    const Rat two(2);
    const Rat& a1 = re_;  const Rat& b1 = r2_;  const Rat& c1 = im_;  const Rat& d1 = im2_;
    const Rat& a2 = o.re_; const Rat& b2 = o.r2_; const Rat& c2 = o.im_; const Rat& d2 = o.im2_;
    return Scalar(a1 * a2 + two * b1 * b2 - c1 * c2 - two * d1 * d2,
                  a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
                  a1 * c2 + c1 * a2 + two * b1 * d2 + two * d1 * b2,
                  a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    // z = x + y*i with x, y in Q(sqrt2); 1/z = conj(z) / (x^2 + y^2).
    const Scalar x(re_, r2_, 0, 0);
    const Scalar y(im_, im2_, 0, 0);
    const Scalar norm = x * x + y * y;  // p + q*sqrt2, nonzero
    const Rat& p = norm.re_;
    const Rat& q = norm.r2_;
    const Rat d = p * p - Rat(2) * q * q;
    const Scalar norm_inv(p / d, -q / d, 0, 0);
    return conj() * norm_inv;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    if (auto c = re_ <=> o.re_; c != 0) return c;
    if (auto c = r2_ <=> o.r2_; c != 0) return c;
    if (auto c = im_ <=> o.im_; c != 0) return c;
    return im2_ <=> o.im2_;
}

std::string Scalar::str() const {
    std::string out;
    auto emit = [&out](const Rat& r, const char* unit) {
        if (r.is_zero()) return;
        Rat mag = r.sign() < 0 ? -r : r;
        if (out.empty()) {
            if (r.sign() < 0) out += '-';
        } else {
            out += r.sign() < 0 ? " - " : " + ";
        }
        if (*unit == '\0') {
            out += mag.str();
        } else if (mag == Rat(1)) {
            out += unit;
        } else {
            out += mag.str();
            out += '*';
            out += unit;
        }
    };
    emit(re_, "");
    emit(r2_, "sqrt2");
    emit(im_, "i");
    emit(im2_, "i*sqrt2");
    return out.empty() ? "0" : out;
}

}  // namespace alc
